#include <doctest.h>

#include "hgm/continuation.hpp"

using namespace hgm;

namespace {

GHGParams example_p2() {
  return GHGParams{{Rational(1, 3), Rational(1, 5)}, {Rational(1, 2)}};
}

GHGParams example_p3() {
  return GHGParams{{Rational(1, 3), Rational(1, 5), Rational(1, 7)},
                   {Rational(1, 2), Rational(1, 4)}};
}

Real tol10(mpfr_prec_t prec) { return Real::from_string("1e-10", prec); }

}  // namespace

TEST_CASE("raw loop around zero is diagonal in the local basis") {
  mpfr_prec_t prec = 128;
  GHGParams p = example_p2();
  LoopSpec loop{LoopSpec::Kind::around_zero, Rational(1, 10)};
  CMatrix raw = numeric_monodromy(p, loop, prec);

  ExpParams e = exponentiate(p, prec);
  CMatrix expect = CMatrix::diagonal({Complex::one(prec), inv(e.B[0])});
  CHECK(max_abs_diff(raw, expect) < tol10(prec));
}

TEST_CASE("raw loop around one has the expected spectrum") {
  mpfr_prec_t prec = 128;
  GHGParams p = example_p2();
  LoopSpec loop{LoopSpec::Kind::around_one, Rational(1, 10)};
  CMatrix raw = numeric_monodromy(p, loop, prec);

  ExpParams e = exponentiate(p, prec);
  Complex lambda = lambda_ghg(e);
  for (const Complex& mu : {Complex::one(prec), lambda}) {
    CMatrix shifted = CMatrix::identity(2, prec).scaled(mu) - raw;
    CHECK(abs(shifted.determinant()) < tol10(prec));
  }
}

TEST_CASE("gauge fit is the identity when the input is already normalized") {
  mpfr_prec_t prec = 256;
  CircuitSetGHG set = build_circuit_set(example_p2(), prec);
  GaugeResult g = gauge_normalize(set.M0, set.M1, set.lambda);
  CHECK(max_abs_diff(g.g, CMatrix::identity(2, prec)) <
        Real::from_string("1e-40", prec));
  CHECK(max_abs_diff(g.gauged_m1, set.M1) < Real::from_string("1e-40", prec));
}

TEST_CASE("gauge fit recovers a synthetic diagonal conjugation") {
  mpfr_prec_t prec = 256;
  Real tol = Real::from_string("1e-40", prec);
  CircuitSetGHG set = build_circuit_set(example_p3(), prec);

  CMatrix d = CMatrix::diagonal({Complex::one(prec),
                                 unit_exp(Rational(1, 9), prec) * Complex(3, prec),
                                 unit_exp(Rational(2, 7), prec)});
  CMatrix raw1 = d * set.M1 * d.inverse();
  CMatrix raw0 = d * set.M0 * d.inverse();

  GaugeResult g = gauge_normalize(raw0, raw1, set.lambda);
  // gauged = g raw g^{-1}, so the fitted gauge undoes the conjugation
  CHECK(max_abs_diff(g.g, d.inverse()) < tol);
  CHECK(max_abs_diff(g.gauged_m1, set.M1) < tol);
  CHECK(max_abs_diff(g.gauged_m0, set.M0) < tol);
  CHECK(g.fit_residual < tol);
}

TEST_CASE("gauge fit is independent of the pinned coordinate up to scale") {
  mpfr_prec_t prec = 256;
  Real tol = Real::from_string("1e-40", prec);
  CircuitSetGHG set = build_circuit_set(example_p3(), prec);
  CMatrix d = CMatrix::diagonal({Complex::one(prec),
                                 unit_exp(Rational(1, 11), prec),
                                 Complex(2, prec)});
  CMatrix raw1 = d * set.M1 * d.inverse();
  CMatrix raw0 = d * set.M0 * d.inverse();

  GaugeResult g0 = gauge_normalize(raw0, raw1, set.lambda, 0);
  GaugeResult g2 = gauge_normalize(raw0, raw1, set.lambda, 2);
  // conjugation by a diagonal matrix kills the overall scale
  CHECK(max_abs_diff(g0.gauged_m1, g2.gauged_m1) < tol);
}

TEST_CASE("degenerate gauge inputs are rejected") {
  mpfr_prec_t prec = 256;
  CircuitSetGHG set = build_circuit_set(example_p2(), prec);
  // lambda = 1 makes the pinned solve singular for a reflection
  CHECK_THROWS_AS(
      gauge_normalize(set.M0, CMatrix::identity(2, prec), Complex(1, prec)),
      NumericError);
}

TEST_CASE("end-to-end comparison with the closed form, rank 2") {
  mpfr_prec_t prec = 128;
  Report r = compare_to_closed_form(example_p2(), prec, tol10(prec));
  for (const auto& c : r.checks) {
    INFO(c.name);
    CHECK(c.pass);
  }
}

TEST_CASE("end-to-end comparison with the closed form, rank 3") {
  mpfr_prec_t prec = 128;
  Report r = compare_to_closed_form(example_p3(), prec, tol10(prec));
  CHECK(r.all_pass());
}

TEST_CASE("a wrong form entry is visible to the oracle") {
  mpfr_prec_t prec = 128;
  GHGParams p = example_p2();
  LoopSpec loop{LoopSpec::Kind::around_one, Rational(1, 10)};
  CMatrix raw1 = numeric_monodromy(p, loop, prec);
  CMatrix raw0 =
      numeric_monodromy(p, LoopSpec{LoopSpec::Kind::around_zero, Rational(1, 10)},
                        prec);

  CircuitSetGHG set = build_circuit_set(p, prec);
  GaugeResult g = gauge_normalize(raw0, raw1, set.lambda);
  CHECK(max_abs_diff(g.gauged_m1, set.M1) < tol10(prec));

  // flipping the sign of h changes the reflection far beyond the tolerance
  CMatrix wrong_h = set.H;
  wrong_h.at(1, 1) = -wrong_h.at(1, 1);
  CMatrix wrong_m1 = build_reflection(wrong_h, set.lambda);
  CHECK(max_abs_diff(g.gauged_m1, wrong_m1) > Real::from_string("1e-2", prec));
}

TEST_CASE("base points for the multivariable system") {
  for (size_t m : {1, 2, 3}) {
    FCBasePoint bp = default_fc_base_point(m);
    REQUIRE(bp.eps.size() == m);
    for (size_t i = 1; i < m; ++i)
      CHECK(bp.eps[i] * 100 <= bp.eps[i - 1]);
    validate_fc_base_point(bp, 128);  // throws if singular or out of domain
  }
  FCBasePoint bad{2, {Rational(1, 2), Rational(1, 2)}};
  CHECK_THROWS(validate_fc_base_point(bad, 128));
}
