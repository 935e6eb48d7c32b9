#include "qonsager/rep_analysis.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "qonsager/linalg.hpp"

namespace qonsager {

namespace {

std::vector<Rational> flatten(const Matrix& m) { return m.entries(); }

bool contains(const ScalarMultiset& set, const Rational& x) {
  return std::find(set.begin(), set.end(), x) != set.end();
}

struct SplitSubspaces {
  std::vector<Matrix> v;
  std::vector<Matrix> v_star;
  std::vector<Matrix> u;
};

bool pairwise_distinct(std::vector<Rational> xs) {
  std::sort(xs.begin(), xs.end());
  return std::adjacent_find(xs.begin(), xs.end()) == xs.end();
}

std::size_t total_columns(const std::vector<Matrix>& spaces) {
  return std::accumulate(spaces.begin(), spaces.end(), std::size_t{0},
                         [](std::size_t acc, const Matrix& m) { return acc + m.cols(); });
}

SplitSubspaces split_decomposition(const Matrix& z, const Matrix& z_star,
                                   std::span<const Rational> theta,
                                   std::span<const Rational> theta_star) {
  const std::size_t n = z.rows();
  if (!pairwise_distinct({theta.begin(), theta.end()}) ||
      !pairwise_distinct({theta_star.begin(), theta_star.end()})) {
    throw std::domain_error("not diagonalizable with expected spectrum");
  }
  SplitSubspaces out;
  for (const auto& th : theta) out.v.push_back(eigenspace(z, th));
  for (const auto& th : theta_star) out.v_star.push_back(eigenspace(z_star, th));
  if (total_columns(out.v) != n || total_columns(out.v_star) != n) {
    throw std::domain_error("not diagonalizable with expected spectrum");
  }

  const std::size_t count = theta.size();
  // lower[i] = V*_0 + ... + V*_i, upper[i] = V_i + ... + V_d.
  std::vector<Matrix> lower(count);
  std::vector<Matrix> upper(count);
  for (std::size_t i = 0; i < count; ++i) {
    lower[i] = i == 0 ? out.v_star[0] : subspace_sum(lower[i - 1], out.v_star[i]);
  }
  for (std::size_t i = count; i-- > 0;) {
    upper[i] = i + 1 == count ? out.v[i] : subspace_sum(out.v[i], upper[i + 1]);
  }
  for (std::size_t i = 0; i < count; ++i) out.u.push_back(subspace_intersection(lower[i], upper[i]));
  return out;
}

void check_pair_matches_spec(const OnsagerPair& pair, const ModuleSpec& spec) {
  spec.validate();
  if (pair.dim() != spec.dimension()) throw std::invalid_argument("pair dimension does not match module spec");
  if (!(pair.q == spec.q)) throw std::invalid_argument("pair and module spec use different q");
}

std::vector<Rational> eigenvalue_list(const QParam& q, const Rational& scale, long d) {
  std::vector<Rational> out;
  for (long i = 0; i <= d; ++i) out.push_back(scale * q.pow(2 * i - d) + scale.inverse() * q.pow(d - 2 * i));
  return out;
}

}  // namespace

QStringMultiset module_strings(const ModuleSpec& spec) {
  QStringMultiset out;
  for (const auto& f : spec.factors) out.emplace_back(f.ell, f.a);
  return out;
}

CriteriaVerdict theorem_criteria(const ModuleSpec& spec, const OnsagerParams& params) {
  spec.validate();
  params.validate();
  const QParam& q = spec.q;
  const QStringMultiset strings = module_strings(spec);
  CriteriaVerdict verdict;

  verdict.i1 = strongly_in_general_position(q, strings);

  const Rational minus_s2 = -(params.s * params.s);
  const Rational minus_t2 = -(params.t * params.t);
  verdict.i2 = std::none_of(strings.begin(), strings.end(), [&](const QString& s) {
    const ScalarMultiset forward = elements(q, s);
    const ScalarMultiset backward = elements(q, inverse_string(s));
    return contains(forward, minus_s2) || contains(backward, minus_s2) ||
           contains(forward, minus_t2) || contains(backward, minus_t2);
  });

  const long d = spec.diameter();
  const Rational st = params.s * params.t;
  const Rational s_over_t = params.s / params.t;
  const Rational candidates[] = {st, -st, s_over_t, -s_over_t};
  verdict.i3 = std::none_of(std::begin(candidates), std::end(candidates), [&](const Rational& x) {
    return q_power_index(q, x, -d + 1, d - 1).has_value();
  });
  return verdict;
}

std::size_t generated_algebra_dimension(const Matrix& a, const Matrix& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) {
    throw std::invalid_argument("generators must be square of the same size");
  }
  const std::size_t n = a.rows();
  const std::size_t full = n * n;
  EchelonBasis basis(full);
  std::deque<Matrix> pending;
  const Matrix id = Matrix::identity(n);
  basis.insert(flatten(id));
  pending.push_back(id);
  // Every word is obtained from I by repeated left multiplication.
  while (!pending.empty() && basis.size() < full) {
    const Matrix m = std::move(pending.front());
    pending.pop_front();
    for (const Matrix* g : {&a, &b}) {
      Matrix product = *g * m;
      if (basis.insert(flatten(product))) pending.push_back(std::move(product));
    }
  }
  return basis.size();
}

bool burnside_irreducible(const OnsagerPair& pair) {
  const std::size_t n = pair.dim();
  return generated_algebra_dimension(pair.z, pair.z_star) == n * n;
}

IntertwinerSpace intertwiner_space(const OnsagerPair& a, const OnsagerPair& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("intertwiners between pairs of different dimension");
  const std::size_t n = a.dim();
  const std::size_t unknowns = n * n;
  // Unknown P(i, j) sits at column i * n + j; equation blocks are
  // P Z_a - Z_b P = 0 then P Z*_a - Z*_b P = 0, each indexed by (i, j).
  Matrix system(2 * unknowns, unknowns);
  const std::pair<const Matrix*, const Matrix*> blocks[] = {{&a.z, &b.z}, {&a.z_star, &b.z_star}};
  for (std::size_t blk = 0; blk < 2; ++blk) {
    const Matrix& right = *blocks[blk].first;
    const Matrix& left = *blocks[blk].second;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const std::size_t row = blk * unknowns + i * n + j;
        for (std::size_t k = 0; k < n; ++k) {
          if (!right(k, j).is_zero()) system(row, i * n + k) += right(k, j);
          if (!left(i, k).is_zero()) system(row, k * n + j) -= left(i, k);
        }
      }
    }
  }
  const Matrix kernel = nullspace(system);
  IntertwinerSpace out{kernel.cols(), std::nullopt};
  if (out.dimension == 1) {
    Matrix p(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) p(i, j) = kernel(i * n + j, 0);
    }
    out.witness_invertible = rank(p) == n;
  }
  return out;
}

std::size_t intertwiner_dimension(const OnsagerPair& a, const OnsagerPair& b) {
  return intertwiner_space(a, b).dimension;
}

std::vector<OnsagerParams> parameter_orbit(const OnsagerParams& params) {
  params.validate();
  const Rational& s = params.s;
  const Rational& t = params.t;
  const OnsagerParams base[] = {{s, t}, {t.inverse(), s.inverse()}, {t, s}, {s.inverse(), t.inverse()}};
  std::vector<OnsagerParams> out;
  for (const auto& p : base) {
    out.push_back(p);
    out.push_back({-p.s, -p.t});
  }
  return out;
}

bool theorem_iso_criteria(const ModuleSpec& spec_a, const OnsagerParams& params_a,
                          const ModuleSpec& spec_b, const OnsagerParams& params_b) {
  if (!(spec_a.q == spec_b.q)) throw std::invalid_argument("modules use different q");
  if (!theorem_criteria(spec_a, params_a).irreducible() ||
      !theorem_criteria(spec_b, params_b).irreducible()) {
    throw std::invalid_argument("criteria require irreducibility");
  }
  if (!equivalent(module_strings(spec_a), module_strings(spec_b))) return false;
  const auto orbit = parameter_orbit(params_a);
  return std::find(orbit.begin(), orbit.end(), params_b) != orbit.end();
}

std::vector<Rational> expected_theta(const QParam& q, const OnsagerParams& params, long d) {
  return eigenvalue_list(q, params.s * params.t, d);
}

std::vector<Rational> expected_theta_star(const QParam& q, const OnsagerParams& params, long d) {
  return eigenvalue_list(q, params.s / params.t, d);
}

SplitProfile eigen_profile(const OnsagerPair& pair, const ModuleSpec& spec) {
  check_pair_matches_spec(pair, spec);
  SplitProfile profile;
  profile.d = spec.diameter();
  profile.theta = expected_theta(spec.q, pair.params, profile.d);
  profile.theta_star = expected_theta_star(spec.q, pair.params, profile.d);

  const SplitSubspaces split = split_decomposition(pair.z, pair.z_star, profile.theta, profile.theta_star);
  const GeneratorSet g = build_module(spec);
  profile.u_equals_k0_eigenspaces = true;
  for (long i = 0; i <= profile.d; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    profile.dims_v.push_back(split.v[idx].cols());
    profile.dims_v_star.push_back(split.v_star[idx].cols());
    profile.dims_u.push_back(split.u[idx].cols());
    const Matrix weight_space = eigenspace(g.k0, spec.q.pow(2 * i - profile.d));
    profile.dims_k0.push_back(weight_space.cols());
    if (!same_subspace(weight_space, split.u[idx])) profile.u_equals_k0_eigenspaces = false;
  }
  return profile;
}

std::vector<std::size_t> generating_function(const SplitProfile& profile) { return profile.dims_u; }

std::vector<std::size_t> product_coefficients(const ModuleSpec& spec) {
  std::vector<std::size_t> coeffs{1};
  for (const auto& f : spec.factors) {
    std::vector<std::size_t> next(coeffs.size() + static_cast<std::size_t>(f.ell), 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      for (long j = 0; j <= f.ell; ++j) next[i + static_cast<std::size_t>(j)] += coeffs[i];
    }
    coeffs = std::move(next);
  }
  return coeffs;
}

bool is_leonard(const SplitProfile& profile) {
  return std::all_of(profile.dims_u.begin(), profile.dims_u.end(), [](std::size_t d) { return d == 1; });
}

bool affine_standardization_check(const OnsagerPair& pair, const ModuleSpec& spec,
                                  const Rational& lambda, const Rational& mu,
                                  const Rational& lambda_star, const Rational& mu_star) {
  if (lambda.is_zero()) throw std::invalid_argument("lambda must be nonzero");
  if (lambda_star.is_zero()) throw std::invalid_argument("lambda_star must be nonzero");
  check_pair_matches_spec(pair, spec);
  const long d = spec.diameter();
  const std::vector<Rational> theta = expected_theta(spec.q, pair.params, d);
  const std::vector<Rational> theta_star = expected_theta_star(spec.q, pair.params, d);
  const SplitSubspaces original = split_decomposition(pair.z, pair.z_star, theta, theta_star);

  const Matrix id = Matrix::identity(pair.dim());
  const Matrix a = lambda * pair.z + mu * id;
  const Matrix a_star = lambda_star * pair.z_star + mu_star * id;
  std::vector<Rational> mapped;
  std::vector<Rational> mapped_star;
  for (const auto& th : theta) mapped.push_back(lambda * th + mu);
  for (const auto& th : theta_star) mapped_star.push_back(lambda_star * th + mu_star);
  const SplitSubspaces transformed = split_decomposition(a, a_star, mapped, mapped_star);

  const std::size_t count = original.u.size();
  bool forward = true;
  bool reversed = true;
  for (std::size_t i = 0; i < count; ++i) {
    forward = forward && same_subspace(transformed.u[i], original.u[i]);
    reversed = reversed && same_subspace(transformed.u[i], original.u[count - 1 - i]);
  }
  return forward || reversed;
}

bool spectrum_matches_charpoly(const Matrix& m, std::span<const Rational> roots,
                               std::span<const std::size_t> multiplicities) {
  if (roots.size() != multiplicities.size()) throw std::invalid_argument("roots and multiplicities differ in length");
  const Polynomial p = characteristic_polynomial(m);
  std::size_t total = 0;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (root_multiplicity(p, roots[i]) != multiplicities[i]) return false;
    total += multiplicities[i];
  }
  return total == static_cast<std::size_t>(p.degree());
}

AnalysisReport analyze(const ModuleSpec& spec, const OnsagerParams& params) {
  AnalysisReport report;
  const GeneratorSet g = build_module(spec);
  report.loop_relations_ok = verify_loop_relations(g).passed();
  const OnsagerPair pair = phi_images(g, params);
  report.td_relations_ok = verify_td_relations(pair).passed();
  report.criteria = theorem_criteria(spec, params);
  report.burnside = burnside_irreducible(pair);
  report.agree = report.burnside == report.criteria.irreducible();
  if (report.criteria.irreducible()) {
    SplitProfile profile = eigen_profile(pair, spec);
    report.g_product_match = generating_function(profile) == product_coefficients(spec);
    report.leonard = is_leonard(profile);
    report.profile = std::move(profile);
  }
  return report;
}

}  // namespace qonsager
