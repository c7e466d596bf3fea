#include <doctest.h>

#include "hgm/json_io.hpp"
#include "hgm/verify.hpp"

using namespace hgm;

namespace {

GHGParams example_p2() {
  return GHGParams{{Rational(1, 3), Rational(1, 5)}, {Rational(1, 2)}};
}

FCParams example_m2() {
  return FCParams{Rational(1, 3), Rational(1, 5),
                  {Rational(1, 2), Rational(1, 7)}};
}

Real tol256() { return Real::from_string("1e-40", 256); }

void perturb(CMatrix& m, size_t i, size_t j) {
  m.at(i, j) += Complex(Real::from_string("1e-10", m.prec()), Real(0, m.prec()));
}

size_t count_failed(const std::vector<Check>& checks) {
  size_t n = 0;
  for (const auto& c : checks)
    if (!c.pass && !c.skipped) ++n;
  return n;
}

}  // namespace

TEST_CASE("default tolerance") {
  CHECK(default_tolerance(256) == Real::from_string("1e-40", 256));
  CHECK(default_tolerance(128) == Real::pow2(-32, 128));
}

TEST_CASE("form invariance residuals") {
  mpfr_prec_t prec = 256;
  CircuitSetGHG set = build_circuit_set(example_p2(), prec);
  Real tol = tol256();

  Check diag = check_h_invariance("m0", set.M0, set.H, tol, "");
  CHECK(diag.pass);
  Check refl = check_h_invariance("m1", set.M1, set.H, tol, "");
  CHECK(refl.pass);
  Check id = check_h_invariance("id", CMatrix::identity(2, prec), set.H, tol, "");
  CHECK(id.residual == Real(0, prec));

  CMatrix bad = set.M1;
  perturb(bad, 0, 1);
  CHECK(!check_h_invariance("bad", bad, set.H, tol, "").pass);
}

TEST_CASE("spectrum check and its negative control") {
  mpfr_prec_t prec = 256;
  CircuitSetGHG set = build_circuit_set(example_p2(), prec);
  CHECK(check_spectrum_ghg(set, tol256(), "").pass);

  CircuitSetGHG wrong = set;
  wrong.M1 = set.M0.inverse();  // makes M0 M1 the identity
  Check c = check_spectrum_ghg(wrong, tol256(), "");
  CHECK(!c.pass);
  CHECK(c.residual > Real::from_string("1e-12", prec));
}

TEST_CASE("generator relations check and its negative control") {
  mpfr_prec_t prec = 256;
  CircuitSetFC set = build_circuit_set_fc(example_m2(), prec);
  CHECK(check_fc_relations(set, tol256(), "").pass);

  CircuitSetFC bad = set;
  perturb(bad.Mlast, 1, 2);
  Check c = check_fc_relations(bad, tol256(), "");
  CHECK(!c.pass);
  CHECK(c.residual >= Real::from_string("1e-12", prec));
}

TEST_CASE("reduction checks pass on a clean two-variable set") {
  mpfr_prec_t prec = 256;
  CircuitSetFC set = build_circuit_set_fc(example_m2(), prec);
  auto checks = check_reduction(set, tol256(), "");
  CHECK(checks.size() >= 3);
  CHECK(count_failed(checks) == 0);
  for (const auto& c : checks) CHECK(!c.skipped);
}

TEST_CASE("resonant shifted parameters are reported as skipped") {
  mpfr_prec_t prec = 256;
  // a1+a2-b1-2 b2 = 1/3+1/5-1/2-2/60 = 0, so the shifted one-variable
  // set is resonant while the two-variable set itself is fine
  FCParams params{Rational(1, 3), Rational(1, 5),
                  {Rational(1, 2), Rational(1, 60)}};
  REQUIRE(validate_fc(params).empty());
  REQUIRE(!validate_ghg(GHGParams{{params.a1 - params.b[1],
                                   params.a2 - params.b[1]},
                                  {params.b[0]}})
               .empty());

  CircuitSetFC set = build_circuit_set_fc(params, prec);
  auto checks = check_reduction(set, tol256(), "");
  bool saw_skip = false;
  for (const auto& c : checks) {
    if (c.skipped) saw_skip = true;
    if (c.name == "reduction_block_diagonal") CHECK(c.pass);
  }
  CHECK(saw_skip);
  CHECK(count_failed(checks) == 0);
}

TEST_CASE("full batteries pass on the worked examples") {
  mpfr_prec_t prec = 256;
  CircuitSetGHG g = build_circuit_set(example_p2(), prec);
  CHECK(count_failed(ghg_checks(g, tol256())) == 0);

  CircuitSetFC f = build_circuit_set_fc(example_m2(), prec);
  CHECK(count_failed(fc_checks(f, tol256())) == 0);
}

TEST_CASE("perturbed sets fail at least one battery check") {
  mpfr_prec_t prec = 256;
  CircuitSetGHG g = build_circuit_set(example_p2(), prec);
  perturb(g.M1, 1, 0);
  CHECK(count_failed(ghg_checks(g, tol256())) >= 1);

  CircuitSetFC f = build_circuit_set_fc(example_m2(), prec);
  perturb(f.Mlast, 0, 3);
  CHECK(count_failed(fc_checks(f, tol256())) >= 1);
}

TEST_CASE("single-variable battery skips the free-group relations") {
  mpfr_prec_t prec = 256;
  FCParams params{Rational(1, 3), Rational(1, 5), {Rational(1, 2)}};
  CircuitSetFC set = build_circuit_set_fc(params, prec);
  auto checks = fc_checks(set, tol256());
  size_t skipped = 0;
  for (const auto& c : checks)
    if (c.skipped) ++skipped;
  CHECK(skipped == 2);
  CHECK(count_failed(checks) == 0);
}

TEST_CASE("structural failures report an infinite residual") {
  Check c = make_structural_failure("boom", tol256(), "", "exploded");
  CHECK(!c.pass);
  CHECK(!c.skipped);
  CHECK(!(c.residual < Real::from_string("1e300", 256)));
}

TEST_CASE("trial seeds are stable and spread out") {
  CHECK(trial_seed(42, 0) == trial_seed(42, 0));
  CHECK(trial_seed(42, 0) != trial_seed(42, 1));
  CHECK(trial_seed(42, 0) != trial_seed(43, 0));
}

TEST_CASE("suite runs are deterministic down to the serialized bytes") {
  SuiteConfig cfg;
  cfg.trials = 4;
  cfg.seed = 42;
  cfg.jobs = 3;
  Report r1 = run_suite_ghg({2, 3}, cfg);
  cfg.jobs = 1;
  Report r2 = run_suite_ghg({2, 3}, cfg);
  CHECK(r1.all_pass());
  CHECK(report_to_json(r1).dump() == report_to_json(r2).dump());

  Report f1 = run_suite_fc({1, 2}, cfg);
  cfg.jobs = 2;
  Report f2 = run_suite_fc({1, 2}, cfg);
  CHECK(f1.all_pass());
  CHECK(report_to_json(f1).dump() == report_to_json(f2).dump());
}

TEST_CASE("suite covers the requested sizes") {
  SuiteConfig cfg;
  cfg.trials = 6;
  cfg.seed = 7;
  Report r = run_suite_ghg({2, 3, 4}, cfg);
  CHECK(r.all_pass());
  bool saw2 = false, saw4 = false;
  for (const auto& c : r.checks) {
    if (c.context.find("p=2") != std::string::npos) saw2 = true;
    if (c.context.find("p=4") != std::string::npos) saw4 = true;
  }
  CHECK(saw2);
  CHECK(saw4);
}
