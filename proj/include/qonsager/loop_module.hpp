#pragma once

// Matrix realizations of the U_q(sl2)-loop algebra: evaluation modules
// V(ell, a) in their standard basis, tensor products through the coproduct,
// and an exact check of every defining relation.

#include <cstddef>
#include <string>
#include <vector>

#include "qonsager/exact_scalars.hpp"
#include "qonsager/matrix.hpp"

namespace qonsager {

struct EvaluationSpec {
  long ell = 1;
  Rational a{1};

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;
};

struct ModuleSpec {
  QParam q;
  std::vector<EvaluationSpec> factors;

  void validate() const;
  std::size_t dimension() const;
  /// d = sum of the ell_i; k0 has eigenvalues q^(2i - d), 0 <= i <= d.
  long diameter() const;
};

/// Images of e0+, e0-, e1+, e1-, k0 and k0^-1. k1 is k0^-1 and is not stored.
struct GeneratorSet {
  QParam q;
  std::size_t dim = 0;
  Matrix e0p;
  Matrix e0m;
  Matrix e1p;
  Matrix e1m;
  Matrix k0;
  Matrix k0inv;

  const Matrix& k1() const { return k0inv; }
  const Matrix& k1inv() const { return k0; }

  friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;
};

GeneratorSet evaluation_rep(const QParam& q, const EvaluationSpec& spec);

/// The module structure on left (x) right given by the coproduct:
///   k0    -> k0 (x) k0
///   e_i^+ -> k_i (x) e_i^+ + e_i^+ (x) 1
///   e_i^- -> 1 (x) e_i^- + e_i^- (x) k_i^-1
/// The last line is Delta(e_i^- k_i) Delta(k_i^-1). Throws on mismatched q.
GeneratorSet tensor_rep(const GeneratorSet& left, const GeneratorSet& right);

/// Left fold of tensor_rep over the evaluation modules of spec.factors.
GeneratorSet build_module(const ModuleSpec& spec);

struct RelationCheck {
  std::string relation;
  bool ok = false;
};

struct RelationReport {
  std::vector<RelationCheck> checks;

  bool passed() const;
};

RelationReport verify_loop_relations(const GeneratorSet& g);

}  // namespace qonsager
