#include <iostream>

#include "qonsager/cli.hpp"

int main(int argc, char** argv) { return qonsager::cli::run(argc, argv, std::cout, std::cerr); }
