#include "qonsager/onsager_embedding.hpp"

#include <stdexcept>
#include <vector>

namespace qonsager {

void OnsagerParams::validate() const {
  if (s.is_zero()) throw std::invalid_argument("s must be nonzero");
  if (t.is_zero()) throw std::invalid_argument("t must be nonzero");
}

TdConstants td_constants(const QParam& q) {
  const Rational q2 = q.pow(2);
  const Rational q2inv = q.pow(-2);
  const Rational diff = q2 - q2inv;
  return {q2 + q2inv, -(diff * diff)};
}

Rational embedding_alpha(const QParam& q) {
  const Rational& qv = q.value();
  const Rational diff = qv - qv.inverse();
  return -(qv.inverse() * diff * diff);
}

OnsagerPair phi_images(const GeneratorSet& g, const OnsagerParams& params) {
  params.validate();
  const Rational& s = params.s;
  const Rational& t = params.t;
  const Rational s_inv = s.inverse();
  const Rational t_inv = t.inverse();

  // k(s) = s k0, so t k(s) + t^-1 k(s)^-1 = t s k0 + t^-1 s^-1 k0^-1.
  const Matrix x = embedding_alpha(g.q) * (s * g.e0p + s_inv * (g.e1m * g.k1()));
  const Matrix y = s * (g.e0m * g.k0) + s_inv * g.e1p;
  Matrix z = x + (t * s) * g.k0 + (t_inv * s_inv) * g.k0inv;
  Matrix z_star = y + (t_inv * s) * g.k0 + (t * s_inv) * g.k0inv;
  return OnsagerPair{g.q, params, std::move(z), std::move(z_star)};
}

RelationReport verify_td_relations(const OnsagerPair& pair) {
  if (!pair.z.is_square() || pair.z.rows() != pair.z_star.rows() || !pair.z_star.is_square()) {
    throw std::invalid_argument("Z and Z* must be square of the same size");
  }
  const auto [beta, delta] = td_constants(pair.q);
  auto residual = [&](const Matrix& a, const Matrix& b) {
    const Matrix a2 = a * a;
    const Matrix inner = a2 * b - beta * (a * b * a) + b * a2;
    return commutator(a, inner) - delta * commutator(a, b);
  };
  RelationReport report;
  report.checks.push_back({"[z, z^2 z* - beta z z* z + z* z^2] = delta [z, z*]",
                           residual(pair.z, pair.z_star).is_zero()});
  report.checks.push_back({"[z*, z*^2 z - beta z* z z* + z z*^2] = delta [z*, z]",
                           residual(pair.z_star, pair.z).is_zero()});
  return report;
}

bool weight_structure_holds(const OnsagerPair& pair, const GeneratorSet& g) {
  if (!g.k0.is_diagonal() || g.dim != pair.dim()) return false;
  const std::size_t n = g.dim;

  // k0 = diag(q^e) with e = 2i - d; recover each basis vector's exponent e.
  std::vector<long> exponent(n);
  for (std::size_t c = 0; c < n; ++c) {
    const long bound = 64 * static_cast<long>(n);
    const auto e = q_power_index(g.q, g.k0(c, c), -bound, bound);
    if (!e) return false;
    exponent[c] = *e;
  }

  const Rational& s = pair.params.s;
  const Rational& t = pair.params.t;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const Rational& zrc = pair.z(r, c);
      const Rational& zsrc = pair.z_star(r, c);
      if (exponent[r] < exponent[c] && !zrc.is_zero()) return false;
      if (exponent[r] > exponent[c] && !zsrc.is_zero()) return false;
      if (exponent[r] != exponent[c]) continue;
      if (r != c) {
        if (!zrc.is_zero() || !zsrc.is_zero()) return false;
        continue;
      }
      const long e = exponent[c];
      const Rational up = g.q.pow(e);
      const Rational down = g.q.pow(-e);
      if (zrc != s * t * up + (s * t).inverse() * down) return false;
      if (zsrc != s / t * up + t / s * down) return false;
    }
  }
  return true;
}

}  // namespace qonsager
