#pragma once

// The q-Onsager pair on a loop-algebra module: images of z and z* under the
// homomorphism phi_{s,t}, and an exact check of both tridiagonal relations.

#include <cstddef>

#include "qonsager/exact_scalars.hpp"
#include "qonsager/loop_module.hpp"
#include "qonsager/matrix.hpp"

namespace qonsager {

struct OnsagerParams {
  Rational s{1};
  Rational t{1};

  /// Throws std::invalid_argument naming "s" or "t" when zero.
  void validate() const;

  friend bool operator==(const OnsagerParams&, const OnsagerParams&) = default;
};

struct TdConstants {
  Rational beta;   // q^2 + q^-2
  Rational delta;  // -(q^2 - q^-2)^2
};

TdConstants td_constants(const QParam& q);

/// alpha = -q^-1 (q - q^-1)^2, the scale of x(s).
Rational embedding_alpha(const QParam& q);

struct OnsagerPair {
  QParam q;
  OnsagerParams params;
  Matrix z;
  Matrix z_star;

  std::size_t dim() const { return z.rows(); }
};

/// Z  = alpha (s e0+ + s^-1 e1- k1) + t s k0 + t^-1 s^-1 k0^-1
/// Z* = s e0- k0 + s^-1 e1+ + t^-1 s k0 + t s^-1 k0^-1
OnsagerPair phi_images(const GeneratorSet& g, const OnsagerParams& params);

/// Residuals [Z, Z^2 Z* - beta Z Z* Z + Z* Z^2] - delta [Z, Z*] and the same
/// with Z and Z* exchanged.
RelationReport verify_td_relations(const OnsagerPair& pair);

/// With respect to the k0-weight grading of g (weight i <-> eigenvalue
/// q^(2i - d)): Z never lowers the weight, Z* never raises it, and on each
/// weight space their diagonal blocks are the scalars
///   s t q^(2i-d) + s^-1 t^-1 q^(d-2i)   and   s t^-1 q^(2i-d) + s^-1 t q^(d-2i).
bool weight_structure_holds(const OnsagerPair& pair, const GeneratorSet& g);

}  // namespace qonsager
