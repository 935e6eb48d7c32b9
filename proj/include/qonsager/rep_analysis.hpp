#pragma once

// Irreducibility and isomorphism of q-Onsager pairs, decided two ways: by the
// closed-form criteria on (q-strings, s, t) and by exact linear-algebra
// oracles (Burnside closure, intertwiner nullspace). Also the split
// decomposition of a tridiagonal pair and its dimension profile.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "qonsager/exact_scalars.hpp"
#include "qonsager/loop_module.hpp"
#include "qonsager/matrix.hpp"
#include "qonsager/onsager_embedding.hpp"
#include "qonsager/qstrings.hpp"

namespace qonsager {

struct CriteriaVerdict {
  bool i1 = false;  // q-strings strongly in general position
  bool i2 = false;  // -s^2, -t^2 avoid every S(ell_i, a_i) u S(ell_i, a_i^-1)
  bool i3 = false;  // +-st, +-s/t avoid q^i for |i| < d

  bool irreducible() const { return i1 && i2 && i3; }
};

/// The q-strings {S(ell_i, a_i)} attached to a module spec.
QStringMultiset module_strings(const ModuleSpec& spec);

CriteriaVerdict theorem_criteria(const ModuleSpec& spec, const OnsagerParams& params);

/// Dimension of the unital algebra generated by a and b.
std::size_t generated_algebra_dimension(const Matrix& a, const Matrix& b);

/// True iff Z and Z* generate the full matrix algebra.
bool burnside_irreducible(const OnsagerPair& pair);

struct IntertwinerSpace {
  std::size_t dimension = 0;
  /// Set when dimension == 1: whether the spanning intertwiner is invertible.
  std::optional<bool> witness_invertible;
};

/// Solutions P of P Z_a = Z_b P and P Z*_a = Z*_b P. Throws
/// std::invalid_argument when the pairs have different dimensions.
IntertwinerSpace intertwiner_space(const OnsagerPair& a, const OnsagerPair& b);
std::size_t intertwiner_dimension(const OnsagerPair& a, const OnsagerPair& b);

/// The eight parameter pairs giving isomorphic representations:
/// +-(s,t), +-(1/t,1/s), +-(t,s), +-(1/s,1/t).
std::vector<OnsagerParams> parameter_orbit(const OnsagerParams& params);

/// Isomorphism by the closed-form criterion. Both inputs must satisfy the
/// irreducibility criteria (std::invalid_argument otherwise) and share q.
bool theorem_iso_criteria(const ModuleSpec& spec_a, const OnsagerParams& params_a,
                          const ModuleSpec& spec_b, const OnsagerParams& params_b);

struct SplitProfile {
  long d = 0;
  std::vector<Rational> theta;
  std::vector<Rational> theta_star;
  std::vector<std::size_t> dims_v;
  std::vector<std::size_t> dims_v_star;
  std::vector<std::size_t> dims_u;
  /// Dimensions of the k0 eigenspaces for q^(2i - d).
  std::vector<std::size_t> dims_k0;
  /// Whether U_i equals the k0 eigenspace for q^(2i - d) for every i.
  bool u_equals_k0_eigenspaces = false;
};

/// theta_i = s t q^(2i-d) + s^-1 t^-1 q^(d-2i), 0 <= i <= d.
std::vector<Rational> expected_theta(const QParam& q, const OnsagerParams& params, long d);
/// theta*_i = s t^-1 q^(2i-d) + s^-1 t q^(d-2i), 0 <= i <= d.
std::vector<Rational> expected_theta_star(const QParam& q, const OnsagerParams& params, long d);

/// Eigenspaces V_i of Z, V*_i of Z*, and the split decomposition
/// U_i = (V*_0 + ... + V*_i) n (V_i + ... + V_d), all computed exactly.
/// Throws std::domain_error("not diagonalizable with expected spectrum")
/// when the eigenvalues collide or the eigenspaces do not fill the module.
SplitProfile eigen_profile(const OnsagerPair& pair, const ModuleSpec& spec);

/// Coefficients (dim U_0, ..., dim U_d) of g(lambda).
std::vector<std::size_t> generating_function(const SplitProfile& profile);

/// Coefficients of prod_i (1 + lambda + ... + lambda^ell_i).
std::vector<std::size_t> product_coefficients(const ModuleSpec& spec);

bool is_leonard(const SplitProfile& profile);

/// Recomputes the split decomposition for (lambda Z + mu, lambda* Z* + mu*)
/// with the transformed eigenvalues in the induced order and compares the
/// U_i with the original ones (directly or with the index order reversed).
/// Throws std::invalid_argument when lambda or lambda* is zero.
bool affine_standardization_check(const OnsagerPair& pair, const ModuleSpec& spec,
                                  const Rational& lambda, const Rational& mu,
                                  const Rational& lambda_star, const Rational& mu_star);

/// True iff the characteristic polynomial of m is prod (x - roots[i])^mult[i].
bool spectrum_matches_charpoly(const Matrix& m, std::span<const Rational> roots,
                               std::span<const std::size_t> multiplicities);

/// Everything the analyze command reports for one (module, s, t).
struct AnalysisReport {
  bool loop_relations_ok = false;
  bool td_relations_ok = false;
  CriteriaVerdict criteria;
  bool burnside = false;
  bool agree = false;
  /// Present when the criteria declare the pair irreducible.
  std::optional<SplitProfile> profile;
  bool g_product_match = false;
  bool leonard = false;
};

AnalysisReport analyze(const ModuleSpec& spec, const OnsagerParams& params);

}  // namespace qonsager
