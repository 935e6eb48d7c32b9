#include <doctest.h>

#include "qonsager/rep_analysis.hpp"

using namespace qonsager;

namespace {

Rational R(const char* text) { return Rational::parse(text); }

ModuleSpec module(const char* q, std::vector<EvaluationSpec> factors) {
  return ModuleSpec{QParam(R(q)), std::move(factors)};
}

OnsagerParams params(const char* s, const char* t) { return {R(s), R(t)}; }

OnsagerPair pair_for(const ModuleSpec& spec, const OnsagerParams& p) { return phi_images(build_module(spec), p); }

const ModuleSpec v11 = module("2", {{1, Rational(1)}});
const ModuleSpec v11_v116 = module("2", {{1, Rational(1)}, {1, Rational(16)}});

}  // namespace

TEST_CASE("Burnside oracle examples") {
  CHECK(burnside_irreducible(pair_for(v11, params("1", "3"))));
  // st = 1: Z and Z* each have a single Jordan block, but in opposite triangles,
  // so they still generate all of M_2.
  CHECK(burnside_irreducible(pair_for(v11, params("1", "1"))));
  Matrix upper = Matrix::identity(2);
  upper(0, 1) = Rational(1);
  const OnsagerPair shared{QParam(2), params("1", "1"), upper, upper};
  CHECK_FALSE(burnside_irreducible(shared));
  CHECK(generated_algebra_dimension(upper, upper) == 2);
  const Matrix c(1, 1);
  OnsagerPair scalar{QParam(2), params("1", "1"), c, c};
  scalar.z(0, 0) = Rational(7);
  scalar.z_star(0, 0) = Rational(7);
  CHECK(burnside_irreducible(scalar));
}

TEST_CASE("generated algebra dimension of simple pairs") {
  const Matrix id = Matrix::identity(3);
  CHECK(generated_algebra_dimension(id, id) == 1);
  Matrix diag = Matrix::identity(3);
  diag(1, 1) = Rational(2);
  diag(2, 2) = Rational(3);
  CHECK(generated_algebra_dimension(diag, id) == 3);
  CHECK_THROWS_AS(generated_algebra_dimension(id, Matrix::identity(2)), std::invalid_argument);
}

TEST_CASE("criteria examples") {
  const CriteriaVerdict ok = theorem_criteria(v11, params("1", "3"));
  CHECK(ok.i1);
  CHECK(ok.i2);
  CHECK(ok.i3);
  CHECK(ok.irreducible());

  const CriteriaVerdict degenerate = theorem_criteria(v11, params("1", "1"));
  CHECK_FALSE(degenerate.i3);
  CHECK_FALSE(degenerate.irreducible());

  const ModuleSpec adjacent_after_flip = module("2", {{1, Rational(2)}, {1, R("1/8")}});
  for (const char* s : {"1", "3", "-5"}) {
    CHECK_FALSE(theorem_criteria(adjacent_after_flip, params(s, "7")).i1);
  }

  const CriteriaVerdict blocked = theorem_criteria(module("2", {{1, R("-9")}}), params("3", "5"));
  CHECK_FALSE(blocked.i2);
  CHECK(blocked.i1);
  CHECK(blocked.i3);
}

TEST_CASE("criteria use the diameter for the q-power window") {
  // st = 2 = q^1 lies in the window only once d >= 2.
  CHECK(theorem_criteria(module("2", {{1, Rational(3)}}), params("1", "2")).i3);
  CHECK_FALSE(theorem_criteria(module("2", {{2, Rational(3)}}), params("1", "2")).i3);
  CHECK_FALSE(theorem_criteria(module("2", {{1, Rational(3)}, {1, Rational(48)}}), params("1", "2")).i3);
}

TEST_CASE("intertwiner examples") {
  const OnsagerPair base = pair_for(v11, params("1", "3"));
  const IntertwinerSpace self = intertwiner_space(base, base);
  CHECK(self.dimension == 1);
  CHECK(self.witness_invertible == true);
  CHECK(intertwiner_dimension(base, pair_for(v11, params("-1", "-3"))) == 1);
  CHECK(intertwiner_dimension(base, pair_for(v11, params("1", "5"))) == 0);
  CHECK_THROWS_AS(intertwiner_dimension(base, pair_for(v11_v116, params("1", "3"))), std::invalid_argument);
}

TEST_CASE("isomorphism criteria examples") {
  CHECK(theorem_iso_criteria(v11, params("1", "3"), v11, params("1/3", "1")));
  CHECK(theorem_iso_criteria(v11, params("1", "3"), v11, params("3", "1")));
  CHECK(theorem_iso_criteria(module("2", {{1, Rational(16)}}), params("1", "3"), module("2", {{1, R("1/16")}}),
                             params("1", "3")));
  CHECK_FALSE(theorem_iso_criteria(v11, params("1", "3"), v11, params("1", "5")));
  CHECK_THROWS_AS(theorem_iso_criteria(v11, params("1", "1"), v11, params("1", "3")), std::invalid_argument);
  CHECK(parameter_orbit(params("2", "3")).size() == 8);
}

TEST_CASE("split profile of V(1,1)") {
  const OnsagerPair p = pair_for(v11, params("1", "3"));
  const SplitProfile profile = eigen_profile(p, v11);
  CHECK(profile.d == 1);
  CHECK(profile.theta == std::vector<Rational>{R("13/6"), R("37/6")});
  CHECK(profile.theta_star == std::vector<Rational>{R("37/6"), R("13/6")});
  CHECK(profile.dims_u == std::vector<std::size_t>{1, 1});
  CHECK(profile.u_equals_k0_eigenspaces);
  CHECK(is_leonard(profile));
}

TEST_CASE("split profile of V(1,1) (x) V(1,16)") {
  const OnsagerPair p = pair_for(v11_v116, params("1", "3"));
  const SplitProfile profile = eigen_profile(p, v11_v116);
  CHECK(profile.dims_u == std::vector<std::size_t>{1, 2, 1});
  CHECK(profile.dims_v == profile.dims_u);
  CHECK(profile.dims_v_star == profile.dims_u);
  CHECK(profile.dims_k0 == profile.dims_u);
  CHECK(profile.u_equals_k0_eigenspaces);
  CHECK(generating_function(profile) == product_coefficients(v11_v116));
  CHECK_FALSE(is_leonard(profile));
  CHECK(spectrum_matches_charpoly(p.z, profile.theta, profile.dims_u));
  CHECK(spectrum_matches_charpoly(p.z_star, profile.theta_star, profile.dims_u));
  CHECK_FALSE(spectrum_matches_charpoly(p.z, profile.theta, std::vector<std::size_t>{1, 1, 2}));
}

TEST_CASE("eigen_profile refuses the degenerate spectrum") {
  CHECK_THROWS_AS(eigen_profile(pair_for(v11, params("1", "1")), v11), std::domain_error);
  CHECK_THROWS_AS(eigen_profile(pair_for(v11, params("1", "3")), v11_v116), std::invalid_argument);
}

TEST_CASE("generating function coefficients") {
  CHECK(product_coefficients(module("2", {{1, Rational(1)}, {1, Rational(16)}})) == std::vector<std::size_t>{1, 2, 1});
  CHECK(product_coefficients(module("2", {{1, Rational(1)}, {2, Rational(16)}})) ==
        std::vector<std::size_t>{1, 2, 2, 1});
  CHECK(product_coefficients(module("2", {{3, Rational(1)}})) == std::vector<std::size_t>{1, 1, 1, 1});
}

TEST_CASE("Leonard status follows the number of factors") {
  const ModuleSpec single = module("2", {{3, Rational(5)}});
  CHECK(is_leonard(eigen_profile(pair_for(single, params("1", "3")), single)));
  const ModuleSpec two = module("2", {{2, Rational(3)}, {1, Rational(48)}});
  REQUIRE(theorem_criteria(two, params("1", "3")).irreducible());
  const SplitProfile profile = eigen_profile(pair_for(two, params("1", "3")), two);
  CHECK(profile.dims_u == std::vector<std::size_t>{1, 2, 2, 1});
  CHECK_FALSE(is_leonard(profile));
}

TEST_CASE("split decomposition is invariant under affine changes") {
  const OnsagerPair p = pair_for(v11_v116, params("1", "3"));
  CHECK(affine_standardization_check(p, v11_v116, Rational(1), Rational(0), Rational(1), Rational(0)));
  const OnsagerPair small = pair_for(v11, params("1", "3"));
  CHECK(affine_standardization_check(small, v11, Rational(2), Rational(5), Rational(1), Rational(0)));
  CHECK(affine_standardization_check(p, v11_v116, Rational(-1), Rational(0), Rational(-1), R("7/3")));
  CHECK(affine_standardization_check(p, v11_v116, R("-1/2"), Rational(4), Rational(3), Rational(-1)));
  CHECK_THROWS_AS(affine_standardization_check(p, v11_v116, Rational(0), Rational(0), Rational(1), Rational(0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(affine_standardization_check(p, v11_v116, Rational(1), Rational(0), Rational(0), Rational(0)),
                  std::invalid_argument);
}

TEST_CASE("analyze aggregates every check") {
  const AnalysisReport ok = analyze(v11, params("1", "3"));
  CHECK(ok.loop_relations_ok);
  CHECK(ok.td_relations_ok);
  CHECK(ok.burnside);
  CHECK(ok.agree);
  REQUIRE(ok.profile.has_value());
  CHECK(ok.leonard);
  CHECK(ok.g_product_match);

  // Only (i.3) fails here, yet the pair is irreducible: the report must expose
  // the disagreement rather than hide it.
  const AnalysisReport degenerate = analyze(v11, params("1", "1"));
  CHECK(degenerate.burnside);
  CHECK_FALSE(degenerate.criteria.i3);
  CHECK_FALSE(degenerate.agree);
  CHECK_FALSE(degenerate.profile.has_value());

  const AnalysisReport blocked = analyze(module("2", {{1, R("-9")}}), params("3", "5"));
  CHECK_FALSE(blocked.criteria.i2);
  CHECK_FALSE(blocked.burnside);
  CHECK(blocked.agree);
}
