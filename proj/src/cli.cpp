#include "qonsager/cli.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "qonsager/serialization.hpp"

namespace qonsager::cli {

namespace {

constexpr std::size_t kDefaultMaxDim = 64;

/// Failure that maps to exit code 2 with a one-line diagnostic.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::size_t max_dimension() {
  const char* raw = std::getenv("QONSAGER_MAX_DIM");
  if (raw == nullptr || *raw == '\0') return kDefaultMaxDim;
  const std::string text(raw);
  if (text.find_first_not_of("0123456789") != std::string::npos) {
    throw UsageError("QONSAGER_MAX_DIM must be a positive integer, got '" + text + "'");
  }
  const unsigned long value = std::stoul(text);
  if (value == 0) throw UsageError("QONSAGER_MAX_DIM must be a positive integer");
  return value;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError("'" + path + "' is not valid JSON: " + e.what());
  }
}

void check_dimension(const ModuleSpec& spec) {
  const std::size_t cap = max_dimension();
  if (spec.dimension() > cap) {
    throw UsageError("module dimension " + std::to_string(spec.dimension()) +
                     " exceeds QONSAGER_MAX_DIM=" + std::to_string(cap));
  }
}

SpecFile load_spec(const std::string& path) {
  SpecFile spec = parse_spec(read_json_file(path));
  check_dimension(spec.module);
  return spec;
}

ScalarMultiset parse_omega(const std::string& csv) {
  ScalarMultiset out;
  std::stringstream stream(csv);
  std::string item;
  while (std::getline(stream, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw SpecError("omega", "empty entry");
    Rational x = rational_from_json(item.substr(first, last - first + 1), "omega");
    if (x.is_zero()) throw SpecError("omega", "entries must be nonzero");
    out.push_back(std::move(x));
  }
  if (out.empty()) throw SpecError("omega", "must list at least one scalar");
  return out;
}

struct Output {
  std::string text;
  int code = kAffirmative;
  bool agree = true;
};

Output cmd_build(const std::string& spec_path) {
  const SpecFile spec = load_spec(spec_path);
  const GeneratorSet g = build_module(spec.module);
  const OnsagerPair pair = phi_images(g, spec.params);
  const json doc = {{"module", to_json(g)}, {"onsager", to_json(pair)}};
  return {doc.dump() + "\n", kAffirmative};
}

Output analyze_one(const SpecFile& spec) {
  const AnalysisReport report = analyze(spec.module, spec.params);
  return {to_json(report).dump() + "\n", report.burnside ? kAffirmative : kNegative, report.agree};
}

Output cmd_analyze(const std::string& spec_path) { return analyze_one(load_spec(spec_path)); }

Output cmd_qstrings(const std::string& q_text, const std::string& omega_csv, bool inverse_closed) {
  std::optional<QParam> q;
  try {
    q.emplace(rational_from_json(q_text, "q"));
  } catch (const std::domain_error& e) {
    throw SpecError("q", e.what());
  }
  const ScalarMultiset omega = parse_omega(omega_csv);
  json doc;
  if (inverse_closed) {
    const QStringMultiset strings = decompose_inverse_closed(*q, omega);
    doc = {{"strings", to_json(strings)}, {"strongly_in_general_position", strongly_in_general_position(*q, strings)}};
  } else {
    const QStringMultiset strings = decompose(*q, omega);
    doc = {{"strings", to_json(strings)}, {"in_general_position", in_general_position(*q, strings)}};
  }
  return {doc.dump() + "\n", kAffirmative};
}

Output cmd_isomorphic(const std::vector<std::string>& paths) {
  if (paths.size() != 2) throw UsageError("isomorphic needs exactly two --spec files");
  const SpecFile a = load_spec(paths[0]);
  const SpecFile b = load_spec(paths[1]);
  if (!(a.module.q == b.module.q)) throw UsageError("the two specs use different q");
  for (const SpecFile* s : {&a, &b}) {
    if (!theorem_criteria(s->module, s->params).irreducible()) {
      throw UsageError("'" + paths[s == &a ? 0 : 1] +
                       "' is reducible; isomorphism criteria require irreducible inputs");
    }
  }
  const bool criteria = theorem_iso_criteria(a.module, a.params, b.module, b.params);
  const OnsagerPair pair_a = phi_images(build_module(a.module), a.params);
  const OnsagerPair pair_b = phi_images(build_module(b.module), b.params);

  json doc;
  bool oracle = false;
  if (pair_a.dim() == pair_b.dim()) {
    const IntertwinerSpace space = intertwiner_space(pair_a, pair_b);
    oracle = space.dimension == 1 && space.witness_invertible.value_or(false);
    doc["intertwiner_dimension"] = space.dimension;
    doc["intertwiner_invertible"] = space.witness_invertible ? json(*space.witness_invertible) : json(nullptr);
  } else {
    doc["intertwiner_dimension"] = 0;
    doc["intertwiner_invertible"] = nullptr;
  }
  doc["criteria"] = criteria;
  doc["oracle"] = oracle;
  doc["agree"] = criteria == oracle;
  doc["isomorphic"] = oracle;
  return {doc.dump() + "\n", oracle ? kAffirmative : kNegative};
}

Output cmd_sweep(const std::string& path) {
  const json doc = read_json_file(path);
  if (!doc.is_array()) throw SpecError("sweep", "expected a JSON array of specs");
  std::vector<SpecFile> specs;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    try {
      specs.push_back(parse_spec(doc[i]));
      check_dimension(specs.back().module);
    } catch (const SpecError& e) {
      throw UsageError("spec #" + std::to_string(i) + ": " + e.what());
    }
  }

  // Cases are independent; results are collected by index to keep input order.
  std::vector<Output> results(specs.size());
  std::vector<std::exception_ptr> failures(specs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < specs.size(); i = next++) {
      try {
        results[i] = analyze_one(specs[i]);
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };
  const std::size_t threads =
      std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), specs.size()));
  std::vector<std::thread> pool;
  for (std::size_t i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  Output out;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    if (failures[i]) std::rethrow_exception(failures[i]);
    out.text += results[i].text;
    if (!results[i].agree) out.code = kNegative;
  }
  return out;
}

void emit(const Output& output, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << output.text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
  if (!file) throw UsageError("cannot write '" + out_path + "'");
  file << output.text;
  if (!file) throw UsageError("failed writing '" + out_path + "'");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact q-Onsager representations via the U_q(sl2)-loop algebra", "qonsager"};
  app.require_subcommand(1);

  std::string out_path;
  std::string spec_path;
  std::vector<std::string> spec_paths;
  std::string q_text;
  std::string omega_csv;
  bool inverse_closed = false;

  auto* build = app.add_subcommand("build", "Emit the module matrices and (Z, Z*) for a spec");
  build->add_option("--spec", spec_path, "Spec JSON file")->required();
  build->add_option("--out", out_path, "Write output here instead of stdout");

  auto* analyze_cmd = app.add_subcommand("analyze", "Verify relations and decide irreducibility");
  analyze_cmd->add_option("--spec", spec_path, "Spec JSON file")->required();
  analyze_cmd->add_option("--out", out_path, "Write output here instead of stdout");

  auto* qstrings = app.add_subcommand("qstrings", "Decompose a scalar multiset into q-strings");
  qstrings->add_option("--q", q_text, "Deformation parameter, |q| > 1")->required();
  qstrings->add_option("--omega", omega_csv, "Comma-separated rationals")->required();
  qstrings->add_flag("--inverse-closed", inverse_closed, "Pair each c with 1/c");
  qstrings->add_option("--out", out_path, "Write output here instead of stdout");

  auto* isomorphic = app.add_subcommand("isomorphic", "Decide isomorphism of two irreducible specs");
  isomorphic->add_option("--spec", spec_paths, "Two spec JSON files")->required()->expected(1, 2);
  isomorphic->add_option("--out", out_path, "Write output here instead of stdout");

  auto* sweep = app.add_subcommand("sweep", "Analyze a JSON array of specs, one report per line");
  sweep->add_option("--spec", spec_path, "JSON array of specs")->required();
  sweep->add_option("--out", out_path, "Write output here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kAffirmative;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }

  try {
    Output result;
    if (*build) {
      result = cmd_build(spec_path);
    } else if (*analyze_cmd) {
      result = cmd_analyze(spec_path);
    } else if (*qstrings) {
      result = cmd_qstrings(q_text, omega_csv, inverse_closed);
    } else if (*isomorphic) {
      result = cmd_isomorphic(spec_paths);
    } else {
      result = cmd_sweep(spec_path);
    }
    emit(result, out_path, out);
    return result.code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
}

}  // namespace qonsager::cli
