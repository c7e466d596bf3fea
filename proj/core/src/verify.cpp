#include "hgm/verify.hpp"

#include <atomic>
#include <chrono>
#include <thread>

namespace hgm {

namespace {

Real inf_real(mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_inf(r.raw(), 1);
  return r;
}

Real residual_diff_vec(const std::vector<Complex>& a,
                       const std::vector<Complex>& b) {
  Real m(0, a.empty() ? kMinPrecision : a[0].prec());
  for (size_t i = 0; i < a.size(); ++i) {
    Real d = abs(a[i] - b[i]);
    if (d > m) m = d;
  }
  return m;
}

std::vector<Complex> ones_vec(size_t n, mpfr_prec_t prec) {
  return std::vector<Complex>(n, Complex::one(prec));
}

}  // namespace

Real default_tolerance(mpfr_prec_t prec) {
  if (prec == 256) return Real::from_string("1e-40", prec);
  return Real::pow2(-static_cast<long>(prec) / 4, prec);
}

Check make_check(std::string name, Real residual, Real tolerance,
                 std::string context) {
  bool pass = !(residual > tolerance);
  return Check{std::move(name), std::move(residual), std::move(tolerance), pass,
               false, std::move(context)};
}

Check make_structural_failure(std::string name, Real tolerance,
                              std::string context, const std::string& what) {
  Check c{std::move(name), inf_real(tolerance.prec()), std::move(tolerance),
          false, false, std::move(context)};
  c.context += " [" + what + "]";
  return c;
}

Check check_h_invariance(const std::string& name, const CMatrix& M,
                         const CMatrix& H, const Real& tol,
                         const std::string& ctx) {
  CMatrix lhs = M * H * vee(M).transposed();
  return make_check(name, max_abs_diff(lhs, H), tol, ctx);
}

Check check_spectrum_ghg(const CircuitSetGHG& set, const Real& tol,
                         const std::string& ctx) {
  CMatrix prod = set.M0 * set.M1;
  mpfr_prec_t prec = prod.prec();
  Real worst(0, prec);
  for (const auto& A : set.exp_params.A) {
    CMatrix shifted = CMatrix::identity(prod.n(), prec).scaled(inv(A)) - prod;
    Real r = abs(shifted.determinant());
    if (r > worst) worst = r;
  }
  return make_check("spectrum_q_at_inv_a", worst, tol, ctx);
}

Check check_fc_relations(const CircuitSetFC& set, const Real& tol,
                         const std::string& ctx) {
  mpfr_prec_t prec = set.Mlast.prec();
  Real worst(0, prec);
  size_t m = set.m();
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i + 1; j < m; ++j) {
      Real r = max_abs_diff(set.M[i] * set.M[j], set.M[j] * set.M[i]);
      if (r > worst) worst = r;
    }
  for (size_t i = 0; i < m; ++i) {
    CMatrix ab = set.M[i] * set.Mlast;
    CMatrix ba = set.Mlast * set.M[i];
    Real r = max_abs_diff(ab * ab, ba * ba);
    if (r > worst) worst = r;
  }
  return make_check("fc_relations", worst, tol, ctx);
}

std::vector<Check> check_reduction(const CircuitSetFC& set, const Real& tol,
                                   const std::string& ctx) {
  std::vector<Check> out;
  size_t m = set.m();
  mpfr_prec_t prec = set.Mlast.prec();
  std::vector<CMatrix> seq;
  try {
    seq = reduction_sequence(set);
  } catch (const NumericError& e) {
    out.push_back(make_structural_failure("reduction_blocks", tol, ctx, e.what()));
    return out;
  }

  Real worst_mass(0, prec);
  for (size_t k = 0; k < seq.size(); ++k) {
    size_t block = size_t(1) << (m - k - 1);
    Real mass = off_block_mass(seq[k], block);
    if (mass > worst_mass) worst_mass = mass;
  }
  out.push_back(make_check("reduction_block_diagonal", worst_mass, tol, ctx));

  Real det_res = abs(seq[0].determinant() - set.lambda * set.lambda);
  out.push_back(make_check("reduction_det_lambda_sq", det_res, tol, ctx));

  size_t half = set.dim() / 2;
  CMatrix top = seq[0].block(0, 0, half);
  CMatrix bottom = seq[0].block(half, half, half);

  FCParams trunc = truncated_fc_params(set.params);
  if (validate_fc(trunc).empty()) {
    CMatrix expect = build_fc_mlast(exponentiate(trunc, prec));
    out.push_back(make_check("reduction_top_block", max_abs_diff(top, expect),
                             tol, ctx));
  } else {
    Check c = make_check("reduction_top_block_skipped", Real(0, prec), tol,
                         ctx + " [SkippedShiftedCase]");
    c.skipped = true;
    out.push_back(c);
  }

  FCParams shifted = shifted_fc_params(set.params);
  if (validate_fc(shifted).empty()) {
    CMatrix expect = build_fc_mlast(exponentiate(shifted, prec));
    out.push_back(make_check("reduction_bottom_block",
                             max_abs_diff(bottom, expect), tol, ctx));
  } else {
    Check c = make_check("reduction_bottom_block_skipped", Real(0, prec), tol,
                         ctx + " [SkippedShiftedCase]");
    c.skipped = true;
    out.push_back(c);
  }
  return out;
}

std::vector<Check> ghg_checks(const CircuitSetGHG& set, const Real& tol) {
  std::vector<Check> out;
  std::string ctx = ghg_context(set.params);
  mpfr_prec_t prec = set.M1.prec();
  size_t p = set.p();
  Complex one = Complex::one(prec);

  out.push_back(check_h_invariance("h_invariance_m0", set.M0, set.H, tol, ctx));
  out.push_back(check_h_invariance("h_invariance_m1", set.M1, set.H, tol, ctx));
  out.push_back(check_spectrum_ghg(set, tol, ctx));

  // trace of M0 M1 against the scheme at infinity
  Complex tr = (set.M0 * set.M1).trace();
  Complex expect_tr(prec);
  for (const auto& A : set.exp_params.A) expect_tr += inv(A);
  out.push_back(make_check("trace_m0m1", abs(tr - expect_tr), tol, ctx));

  // 1 M1 = lambda 1 as column sums
  Real cs(0, prec);
  for (const auto& s : set.M1.column_sums()) {
    Real d = abs(s - set.lambda);
    if (d > cs) cs = d;
  }
  out.push_back(make_check("column_sums_lambda", cs, tol, ctx));

  out.push_back(make_check("det_m1_lambda",
                           abs(set.M1.determinant() - set.lambda), tol, ctx));
  Complex binv_prod(1, prec), ainv_prod(1, prec);
  for (const auto& B : set.exp_params.B) binv_prod *= inv(B);
  for (const auto& A : set.exp_params.A) ainv_prod *= inv(A);
  out.push_back(make_check("det_m0", abs(set.M0.determinant() - binv_prod),
                           tol, ctx));
  out.push_back(make_check(
      "det_m0m1", abs((set.M0 * set.M1).determinant() - ainv_prod), tol, ctx));

  // w M1 = w on the basis h_k e_1 - e_{k+1} of the fixed hyperplane
  Real fixed(0, prec);
  for (size_t k = 1; k < p; ++k) {
    std::vector<Complex> w(p, Complex(prec));
    w[0] = set.H.at(k, k);
    w[k] = -one;
    Real d = residual_diff_vec(set.M1.row_times(w), w);
    if (d > fixed) fixed = d;
  }
  out.push_back(make_check("fixed_vectors", fixed, tol, ctx));

  // rank-one structure of M1 - id via 2x2 minors
  CMatrix r1 = set.M1 - CMatrix::identity(p, prec);
  Real minor(0, prec);
  for (size_t i = 0; i < p; ++i)
    for (size_t k = i + 1; k < p; ++k)
      for (size_t j = 0; j < p; ++j)
        for (size_t l = j + 1; l < p; ++l) {
          Real d = abs(r1.at(i, j) * r1.at(k, l) - r1.at(i, l) * r1.at(k, j));
          if (d > minor) minor = d;
        }
  out.push_back(make_check("reflection_rank_one", minor, tol, ctx));

  // Tr(H) and the reflection coefficient in closed form
  Complex aprod(1, prec), bprod(1, prec), afact(1, prec), bfact(1, prec);
  for (const auto& A : set.exp_params.A) {
    aprod *= A;
    afact *= (A - one);
  }
  for (const auto& B : set.exp_params.B) {
    bprod *= B;
    bfact *= (B - one);
  }
  Complex trh_expect = ((aprod - bprod) * bfact) / (afact * bprod);
  out.push_back(
      make_check("trace_h_closed_form", abs(set.H.trace() - trh_expect), tol, ctx));
  Complex coeff = (one - set.lambda) / set.H.trace();
  Complex coeff_expect = (afact * bprod) / (aprod * bfact);
  out.push_back(
      make_check("reflection_coeff_closed_form", abs(coeff - coeff_expect), tol, ctx));

  if (p == 2) {
    const Complex& A1 = set.exp_params.A[0];
    const Complex& A2 = set.exp_params.A[1];
    const Complex& B1 = set.exp_params.B[0];
    Complex h_expect = -(((B1 - A1) * (B1 - A2)) / (B1 * (A1 - one) * (A2 - one)));
    Real r = abs(set.H.at(1, 1) - h_expect);
    Complex den = A1 * A2 * (B1 - one);
    Complex top = (B1 * (A1 - one) * (A2 - one)) / den;
    Complex bot = ((B1 - A1) * (B1 - A2)) / den;
    CMatrix expect = CMatrix::identity(2, prec);
    expect.at(0, 0) -= top;
    expect.at(0, 1) -= top;
    expect.at(1, 0) += bot;
    expect.at(1, 1) += bot;
    Real mr = max_abs_diff(set.M1, expect);
    if (mr > r) r = mr;
    out.push_back(make_check("p2_closed_form", r, tol, ctx));
  }
  return out;
}

std::vector<Check> fc_checks(const CircuitSetFC& set, const Real& tol) {
  std::vector<Check> out;
  std::string ctx = fc_context(set.params);
  mpfr_prec_t prec = set.Mlast.prec();
  size_t m = set.m();
  size_t dim = set.dim();
  Complex one = Complex::one(prec);

  Real hinv(0, prec);
  for (const auto& M : set.M) {
    CMatrix lhs = M * set.H * vee(M).transposed();
    Real r = max_abs_diff(lhs, set.H);
    if (r > hinv) hinv = r;
  }
  {
    CMatrix lhs = set.Mlast * set.H * vee(set.Mlast).transposed();
    Real r = max_abs_diff(lhs, set.H);
    if (r > hinv) hinv = r;
  }
  out.push_back(make_check("h_invariance_all", hinv, tol, ctx));

  if (m >= 2) {
    out.push_back(check_fc_relations(set, tol, ctx));
  } else {
    // the m=1 complement of the singular locus has free fundamental group,
    // so there are no commutation or braid relations to test
    Check c = make_check("fc_relations_skipped", Real(0, prec), tol, ctx);
    c.skipped = true;
    out.push_back(c);
  }

  // eigenstructure of the reflection
  auto ones = ones_vec(dim, prec);
  std::vector<Complex> lones;
  for (const auto& c : ones) lones.push_back(c * set.lambda);
  Real eig = residual_diff_vec(set.Mlast.row_times(ones), lones);
  for (uint32_t mask = 1; mask < dim; ++mask) {
    std::vector<Complex> w(dim, Complex(prec));
    w[0] = set.H.at(mask, mask);
    w[mask] = -one;
    Real d = residual_diff_vec(set.Mlast.row_times(w), w);
    if (d > eig) eig = d;
  }
  out.push_back(make_check("mlast_eigenstructure", eig, tol, ctx));

  out.push_back(make_check("det_mlast_lambda",
                           abs(set.Mlast.determinant() - set.lambda), tol, ctx));

  out.push_back(make_check(
      "trace_h_closed_form",
      abs(set.H.trace() - fc_trace_h(set.exp_params)), tol, ctx));

  // lambda satisfies (1+B_m)(1-l) = (1 H tw^vee / Tr H) B_m (1-l)^2;
  // the derivation goes through the reduction step, so it needs m >= 2
  if (m >= 2) {
    const Complex& Bm = set.exp_params.B[m - 1];
    Complex ohw(prec);  // ones * H * t(w^vee), w = ones * M_m^{-1}
    for (uint32_t mask = 0; mask < dim; ++mask) {
      Complex w_entry = (mask >> (m - 1)) & 1u ? Bm : one;
      ohw += set.H.at(mask, mask) * conj(w_entry);
    }
    Complex oml = one - set.lambda;
    Complex lhs = (one + Bm) * oml;
    Complex rhs = (ohw / set.H.trace()) * Bm * oml * oml;
    out.push_back(make_check("lambda_quadratic", abs(lhs - rhs), tol, ctx));
  } else {
    Check c = make_check("lambda_quadratic_skipped", Real(0, prec), tol, ctx);
    c.skipped = true;
    out.push_back(c);
  }

  if (m == 1) {
    GHGParams g{{set.params.a1, set.params.a2}, {set.params.b[0]}};
    CircuitSetGHG ghg = build_circuit_set(g, prec);
    Real r = max_abs_diff(set.M[0], ghg.M0);
    Real r2 = max_abs_diff(set.Mlast, ghg.M1);
    if (r2 > r) r = r2;
    Real r3 = max_abs_diff(set.H, ghg.H);
    if (r3 > r) r = r3;
    Real r4 = abs(set.lambda - ghg.lambda);
    if (r4 > r) r = r4;
    out.push_back(make_check("m1_matches_p2_ghg", r, tol, ctx));
  }

  if (m >= 2) {
    auto red = check_reduction(set, tol, ctx);
    out.insert(out.end(), red.begin(), red.end());
  }
  return out;
}

std::string ghg_context(const GHGParams& params) {
  std::string s = "ghg p=" + std::to_string(params.p()) + " a=";
  for (size_t i = 0; i < params.a.size(); ++i)
    s += (i ? "," : "") + rational_str(params.a[i]);
  s += " b=";
  for (size_t i = 0; i < params.b.size(); ++i)
    s += (i ? "," : "") + rational_str(params.b[i]);
  return s;
}

std::string fc_context(const FCParams& params) {
  std::string s = "fc m=" + std::to_string(params.m()) + " a=" +
                  rational_str(params.a1) + "," + rational_str(params.a2) +
                  " b=";
  for (size_t i = 0; i < params.b.size(); ++i)
    s += (i ? "," : "") + rational_str(params.b[i]);
  return s;
}

uint64_t trial_seed(uint64_t seed, uint64_t trial) {
  uint64_t z = seed + 0x9e3779b97f4a7c15ull * (trial + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

namespace {

template <class Fn>
std::vector<std::vector<Check>> run_parallel(size_t trials, unsigned jobs,
                                             Fn&& per_trial) {
  std::vector<std::vector<Check>> results(trials);
  if (jobs == 0) jobs = std::thread::hardware_concurrency();
  if (jobs == 0) jobs = 1;
  if (jobs > trials) jobs = static_cast<unsigned>(trials ? trials : 1);
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (;;) {
      size_t t = next.fetch_add(1);
      if (t >= trials) break;
      results[t] = per_trial(t);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < jobs; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return results;
}

}  // namespace

Report run_suite_ghg(const std::vector<size_t>& ps, const SuiteConfig& cfg) {
  Report rep;
  rep.suite = "ghg";
  rep.seed = cfg.seed;
  rep.precision_bits = cfg.precision_bits;
  Real tol = cfg.tolerance ? *cfg.tolerance : default_tolerance(cfg.precision_bits);
  auto t0 = std::chrono::steady_clock::now();
  auto results = run_parallel(cfg.trials, cfg.jobs, [&](size_t t) {
    size_t p = ps[t % ps.size()];
    GHGParams params = random_ghg(p, trial_seed(cfg.seed, t));
    return ghg_checks(build_circuit_set(params, cfg.precision_bits), tol);
  });
  for (auto& r : results)
    rep.checks.insert(rep.checks.end(), r.begin(), r.end());
  rep.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

Report run_suite_fc(const std::vector<size_t>& ms, const SuiteConfig& cfg) {
  Report rep;
  rep.suite = "fc";
  rep.seed = cfg.seed;
  rep.precision_bits = cfg.precision_bits;
  Real tol = cfg.tolerance ? *cfg.tolerance : default_tolerance(cfg.precision_bits);
  auto t0 = std::chrono::steady_clock::now();
  auto results = run_parallel(cfg.trials, cfg.jobs, [&](size_t t) {
    size_t m = ms[t % ms.size()];
    FCParams params = random_fc(m, trial_seed(cfg.seed, t));
    return fc_checks(build_circuit_set_fc(params, cfg.precision_bits), tol);
  });
  for (auto& r : results)
    rep.checks.insert(rep.checks.end(), r.begin(), r.end());
  rep.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace hgm
