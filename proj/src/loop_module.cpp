#include "qonsager/loop_module.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace qonsager {

void EvaluationSpec::validate() const {
  if (ell < 1) throw std::invalid_argument("ell must be >= 1");
  if (a.is_zero()) throw std::invalid_argument("a must be nonzero");
}

void ModuleSpec::validate() const {
  if (factors.empty()) throw std::invalid_argument("factors must be nonempty");
  for (const auto& f : factors) f.validate();
}

std::size_t ModuleSpec::dimension() const {
  std::size_t dim = 1;
  for (const auto& f : factors) dim *= static_cast<std::size_t>(f.ell + 1);
  return dim;
}

long ModuleSpec::diameter() const {
  long d = 0;
  for (const auto& f : factors) d += f.ell;
  return d;
}

GeneratorSet evaluation_rep(const QParam& q, const EvaluationSpec& spec) {
  spec.validate();
  const long ell = spec.ell;
  const auto n = static_cast<std::size_t>(ell + 1);
  const Rational& qv = q.value();
  const Rational a_inv = spec.a.inverse();

  GeneratorSet g{q, n, Matrix(n, n), Matrix(n, n), Matrix(n, n), Matrix(n, n), Matrix(n, n), Matrix(n, n)};
  for (long i = 0; i <= ell; ++i) {
    const auto c = static_cast<std::size_t>(i);
    g.k0(c, c) = q.pow(2 * i - ell);
    g.k0inv(c, c) = q.pow(ell - 2 * i);
    if (i < ell) {
      g.e0p(c + 1, c) = spec.a * qv * q_int(q, i + 1);
      g.e1m(c + 1, c) = q_int(q, i + 1);
    }
    if (i > 0) {
      g.e0m(c - 1, c) = a_inv * qv.inverse() * q_int(q, ell - i + 1);
      g.e1p(c - 1, c) = q_int(q, ell - i + 1);
    }
  }
  return g;
}

GeneratorSet tensor_rep(const GeneratorSet& left, const GeneratorSet& right) {
  if (!(left.q == right.q)) throw std::invalid_argument("tensor factors use different q");
  const Matrix id_l = Matrix::identity(left.dim);
  const Matrix id_r = Matrix::identity(right.dim);
  return GeneratorSet{
      left.q,
      left.dim * right.dim,
      kron(left.k0, right.e0p) + kron(left.e0p, id_r),
      kron(id_l, right.e0m) + kron(left.e0m, right.k0inv),
      kron(left.k1(), right.e1p) + kron(left.e1p, id_r),
      kron(id_l, right.e1m) + kron(left.e1m, right.k1inv()),
      kron(left.k0, right.k0),
      kron(left.k0inv, right.k0inv),
  };
}

GeneratorSet build_module(const ModuleSpec& spec) {
  spec.validate();
  GeneratorSet g = evaluation_rep(spec.q, spec.factors.front());
  for (std::size_t i = 1; i < spec.factors.size(); ++i) {
    g = tensor_rep(g, evaluation_rep(spec.q, spec.factors[i]));
  }
  return g;
}

bool RelationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const RelationCheck& c) { return c.ok; });
}

RelationReport verify_loop_relations(const GeneratorSet& g) {
  RelationReport report;
  auto check = [&](std::string name, const Matrix& residual) {
    report.checks.push_back({std::move(name), residual.is_zero()});
  };

  const Matrix id = Matrix::identity(g.dim);
  const Rational& qv = g.q.value();
  const Rational q2 = g.q.pow(2);
  const Rational q2inv = g.q.pow(-2);
  const Rational qdiff_inv = (qv - qv.inverse()).inverse();
  const Rational serre = q2 + q2inv;

  struct Index {
    const char* name;
    const Matrix& k;
    const Matrix& kinv;
    const Matrix& ep;
    const Matrix& em;
  };
  const std::array<Index, 2> idx{{{"0", g.k0, g.k0inv, g.e0p, g.e0m},
                                  {"1", g.k1(), g.k1inv(), g.e1p, g.e1m}}};

  for (const auto& i : idx) {
    const std::string k = std::string("k") + i.name;
    check(k + " k" + i.name + "^-1 = 1", i.k * i.kinv - id);
    check(k + "^-1 k" + i.name + " = 1", i.kinv * i.k - id);
  }
  check("k0 k1 = 1", g.k0 * g.k1() - id);
  check("k1 k0 = 1", g.k1() * g.k0 - id);

  for (const auto& i : idx) {
    for (const auto& j : idx) {
      const std::string ki = std::string("k") + i.name;
      const bool same = &i == &j;
      // k_i e_j^+- k_i^-1 = q^(+-2) e_j^+- when i == j, q^(-+2) otherwise.
      const Rational& up = same ? q2 : q2inv;
      const Rational& down = same ? q2inv : q2;
      check(ki + " e" + j.name + "+ " + ki + "^-1 = q^" + (same ? "2" : "-2") + " e" + j.name + "+",
            i.k * j.ep * i.kinv - up * j.ep);
      check(ki + " e" + j.name + "- " + ki + "^-1 = q^" + (same ? "-2" : "2") + " e" + j.name + "-",
            i.k * j.em * i.kinv - down * j.em);
    }
  }

  for (const auto& i : idx) {
    for (const auto& j : idx) {
      const std::string name = std::string("[e") + i.name + "+, e" + j.name + "-]";
      if (&i == &j) {
        check(name + " = (k" + i.name + " - k" + i.name + "^-1)/(q - q^-1)",
              commutator(i.ep, i.em) - qdiff_inv * (i.k - i.kinv));
      } else {
        check(name + " = 0", commutator(i.ep, j.em));
      }
    }
  }

  for (const auto& i : idx) {
    for (const auto& j : idx) {
      if (&i == &j) continue;
      for (const bool plus : {true, false}) {
        const Matrix& ei = plus ? i.ep : i.em;
        const Matrix& ej = plus ? j.ep : j.em;
        const Matrix ei2 = ei * ei;
        const Matrix inner = ei2 * ej - serre * (ei * ej * ei) + ej * ei2;
        const char sign = plus ? '+' : '-';
        check(std::string("q-Serre e") + i.name + sign + " e" + j.name + sign, commutator(ei, inner));
      }
    }
  }
  return report;
}

}  // namespace qonsager
