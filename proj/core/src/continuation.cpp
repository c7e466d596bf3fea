#include "hgm/continuation.hpp"

#include <chrono>

namespace hgm {

namespace {

// coefficients of prod (t + r_i) as exact rationals, low degree first
std::vector<Rational> poly_from_roots(const std::vector<Rational>& shifts) {
  std::vector<Rational> c{Rational(1)};
  for (const auto& s : shifts) {
    std::vector<Rational> nxt(c.size() + 1, Rational(0));
    for (size_t i = 0; i < c.size(); ++i) {
      nxt[i + 1] += c[i];
      nxt[i] += c[i] * s;
    }
    c = std::move(nxt);
  }
  return c;
}

// x(1-x) y' = (C0 + C1 x) y in the theta-jet basis y_k = theta^k f
struct CompanionSystem {
  CMatrix c0, c1;
};

CompanionSystem companion(const GHGParams& params, mpfr_prec_t prec) {
  size_t p = params.p();
  // theta prod(theta + b_j - 1) = sum c_k theta^k
  std::vector<Rational> bshift;
  for (const auto& b : params.b) bshift.push_back(b - 1);
  std::vector<Rational> cpoly = poly_from_roots(bshift);
  cpoly.insert(cpoly.begin(), Rational(0));  // multiply by theta
  std::vector<Rational> dpoly = poly_from_roots(params.a);

  CompanionSystem sys{CMatrix(p, prec), CMatrix(p, prec)};
  Complex one = Complex::one(prec);
  for (size_t k = 0; k + 1 < p; ++k) {
    sys.c0.at(k, k + 1) = one;
    sys.c1.at(k, k + 1) = -one;
  }
  for (size_t k = 0; k < p; ++k) {
    sys.c0.at(p - 1, k) = Complex(-rational_to_real(cpoly[k], prec), Real(prec));
    sys.c1.at(p - 1, k) = Complex(rational_to_real(dpoly[k], prec), Real(prec));
  }
  return sys;
}

// Taylor coefficients Y_n of the jet matrix around z0, evaluated at
// t = z1 - z0. Requires |t| well inside min(|z0|, |z0-1|).
CMatrix taylor_advance(const CompanionSystem& sys, const CMatrix& y0,
                       const Complex& z0, const Complex& t, mpfr_prec_t prec) {
  size_t p = y0.n();
  Complex one = Complex::one(prec);
  Complex q0 = z0 * (one - z0);
  Complex q1 = one - z0 - z0;
  Complex q2 = -one;
  CMatrix d0 = sys.c0 + sys.c1.scaled(z0);
  const CMatrix& d1 = sys.c1;

  CMatrix sum = y0;
  CMatrix prev = CMatrix(p, prec);  // Y_{n-1}
  CMatrix cur = y0;                 // Y_n
  Complex tpow = t;
  Real thr = Real::pow2(-static_cast<long>(prec) - 16, prec) *
             (y0.max_abs_entry() + Real(1, prec));
  int quiet = 0;
  const long max_order = 20000;
  for (long n = 0;; ++n) {
    if (n >= max_order)
      throw NoConvergence("Taylor step did not converge");
    // q0 (n+1) Y_{n+1} = D0 Y_n + D1 Y_{n-1} - q1 n Y_n - q2 (n-1) Y_{n-1}
    CMatrix rhs = d0 * cur;
    if (n >= 1) {
      rhs = rhs + d1 * prev;
      rhs = rhs - cur.scaled(q1 * Complex(n, prec));
      rhs = rhs - prev.scaled(q2 * Complex(n - 1, prec));
    }
    CMatrix nxt = rhs.scaled(inv(q0 * Complex(n + 1, prec)));
    CMatrix contrib = nxt.scaled(tpow);
    sum = sum + contrib;
    if (contrib.max_abs_entry() < thr) {
      if (++quiet >= 3) break;
    } else {
      quiet = 0;
    }
    prev = std::move(cur);
    cur = std::move(nxt);
    tpow *= t;
  }
  return sum;
}

Real dist_to_singularities(const Complex& z, mpfr_prec_t prec) {
  Real d0 = abs(z);
  Real d1 = abs(z - Complex::one(prec));
  return d0 < d1 ? d0 : d1;
}

}  // namespace

CMatrix taylor_step(const GHGParams& params, const CMatrix& jets,
                    const Complex& z0, const Complex& z1, mpfr_prec_t prec) {
  CompanionSystem sys = companion(params, prec);
  return taylor_advance(sys, jets, z0, z1 - z0, prec);
}

CMatrix numeric_monodromy(const GHGParams& params, const LoopSpec& loop,
                          mpfr_prec_t prec) {
  if (auto v = validate_ghg(params); !v.empty())
    throw InvalidParams(violations_message(v));
  CompanionSystem sys = companion(params, prec);

  Real eps = rational_to_real(loop.eps, prec);
  bool around_one = loop.kind == LoopSpec::Kind::around_one;
  Real radius = around_one ? Real(1, prec) - eps : eps;
  Real two_pi = Real(2, prec) * Real::pi(prec);

  auto point_at = [&](const Real& theta) {
    Real c(prec), s(prec);
    mpfr_sin_cos(s.raw(), c.raw(), theta.raw(), MPFR_RNDN);
    if (around_one) {
      // 1 - (1-eps) e^{i theta}
      return Complex(Real(1, prec) - radius * c, -(radius * s));
    }
    return Complex(radius * c, radius * s);
  };

  Complex base(eps, Real(prec));
  CMatrix y_start = ghg_solution_jets(params, base, prec);
  CMatrix y = y_start;

  Real theta(0, prec);
  Complex z = point_at(theta);
  Real min_step = Real::pow2(-static_cast<long>(prec) / 2, prec);
  Real ratio = Real::from_fraction("7", "20", prec);  // chord / conv. radius
  Real cap = Real::from_fraction("3", "10", prec);    // max dtheta in radians
  while (theta < two_pi) {
    Real rc = dist_to_singularities(z, prec);
    Real dtheta = ratio * rc / radius;
    if (dtheta > cap) dtheta = cap;
    if (dtheta < min_step)
      throw StepUnderflow("continuation step underflow near a singularity");
    Real next_theta = theta + dtheta;
    if (next_theta > two_pi) next_theta = two_pi;
    Complex z_next = point_at(next_theta);
    y = taylor_advance(sys, y, z, z_next - z, prec);
    theta = next_theta;
    z = z_next;
  }
  // continued f_j = sum_k M_{jk} f_k  =>  M = t(Y_start^{-1} Y_end)
  return (y_start.inverse() * y).transposed();
}

GaugeResult gauge_normalize(const CMatrix& raw_m0, const CMatrix& raw_m1,
                            const Complex& lambda, size_t pinned) {
  size_t p = raw_m1.n();
  mpfr_prec_t prec = raw_m1.prec();
  if (pinned >= p) throw DimensionMismatch("pinned coordinate out of range");
  // v raw_m1 = lambda v, v_pinned = 1: solve the complementary square system
  std::vector<size_t> rest;
  for (size_t i = 0; i < p; ++i)
    if (i != pinned) rest.push_back(i);
  CMatrix sub(p - 1, prec);
  std::vector<Complex> rhs(p - 1, Complex(prec));
  for (size_t i = 0; i < p - 1; ++i) {
    for (size_t j = 0; j < p - 1; ++j) {
      sub.at(i, j) = raw_m1.at(rest[i], rest[j]);
      if (rest[i] == rest[j]) sub.at(i, j) -= lambda;
    }
    rhs[i] = -raw_m1.at(pinned, rest[i]);
  }
  std::vector<Complex> v_rest;
  try {
    v_rest = sub.solve_left(rhs);
  } catch (const SingularMatrix& e) {
    throw EigenvectorDegenerate(std::string("pinned eigenvector solve: ") +
                                e.what());
  }
  std::vector<Complex> v(p, Complex(prec));
  v[pinned] = Complex::one(prec);
  for (size_t i = 0; i < p - 1; ++i) v[rest[i]] = v_rest[i];

  Real margin = Real::pow2(-static_cast<long>(prec) / 4, prec);
  for (const auto& vi : v)
    if (abs(vi) < margin)
      throw VanishingComponent("eigenvector component below margin");

  CMatrix g = CMatrix::diagonal(v);
  CMatrix ginv = g.inverse();
  GaugeResult out{g,
                  raw_m0,
                  raw_m1,
                  g * raw_m0 * ginv,
                  g * raw_m1 * ginv,
                  Real(0, prec)};
  // residual of the eigen-relation itself
  std::vector<Complex> lv;
  for (const auto& vi : v) lv.push_back(vi * lambda);
  Real res(0, prec);
  auto vm = raw_m1.row_times(v);
  for (size_t i = 0; i < p; ++i) {
    Real d = abs(vm[i] - lv[i]);
    if (d > res) res = d;
  }
  out.fit_residual = res;
  return out;
}

Report compare_to_closed_form(const GHGParams& params, mpfr_prec_t prec,
                              const Real& tol, const Rational& eps) {
  Report rep;
  rep.suite = "oracle";
  rep.precision_bits = prec;
  std::string ctx = ghg_context(params);
  auto t0 = std::chrono::steady_clock::now();

  CircuitSetGHG closed = build_circuit_set(params, prec);
  LoopSpec l0{LoopSpec::Kind::around_zero, eps};
  LoopSpec l1{LoopSpec::Kind::around_one, eps};
  CMatrix raw_m0 = numeric_monodromy(params, l0, prec);
  CMatrix raw_m1 = numeric_monodromy(params, l1, prec);

  // the raw basis already diagonalizes the loop around zero
  rep.checks.push_back(
      make_check("raw_m0_diagonal", max_abs_diff(raw_m0, closed.M0), tol, ctx));

  // lambda must sit in the raw spectrum before it is used for gauging
  CMatrix shifted =
      CMatrix::identity(raw_m1.n(), prec).scaled(closed.lambda) - raw_m1;
  rep.checks.push_back(make_check("lambda_in_raw_spectrum",
                                  abs(shifted.determinant()), tol, ctx));

  try {
    GaugeResult gauge = gauge_normalize(raw_m0, raw_m1, closed.lambda);
    rep.checks.push_back(make_check(
        "gauged_m1_matches", max_abs_diff(gauge.gauged_m1, closed.M1), tol, ctx));
    rep.checks.push_back(make_check(
        "gauged_m0_matches", max_abs_diff(gauge.gauged_m0, closed.M0), tol, ctx));
    // scheme at infinity through the gauged product
    CMatrix prod = gauge.gauged_m0 * gauge.gauged_m1;
    Real worst(0, prec);
    for (const auto& A : closed.exp_params.A) {
      CMatrix s = CMatrix::identity(prod.n(), prec).scaled(inv(A)) - prod;
      Real r = abs(s.determinant());
      if (r > worst) worst = r;
    }
    rep.checks.push_back(make_check("loop_composition_spectrum", worst, tol, ctx));
  } catch (const NumericError& e) {
    rep.checks.push_back(
        make_structural_failure("gauge_normalize", tol, ctx, e.what()));
  }
  rep.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

FCBasePoint default_fc_base_point(size_t m) {
  FCBasePoint bp{m, {}};
  Rational e(1, 100);
  for (size_t i = 0; i < m; ++i) {
    bp.eps.push_back(e);
    e /= 100;
  }
  return bp;
}

void validate_fc_base_point(const FCBasePoint& bp, mpfr_prec_t prec) {
  if (bp.eps.size() != bp.m) throw InvalidParams("base point arity mismatch");
  for (size_t i = 0; i + 1 < bp.eps.size(); ++i)
    if (bp.eps[i + 1] * 100 > bp.eps[i])
      throw InvalidParams("base point not decreasing fast enough");
  Real budget(0, prec);
  std::vector<Complex> x;
  for (const auto& e : bp.eps) {
    if (e <= 0) throw InvalidParams("base point coordinates must be positive");
    budget += sqrt(rational_to_real(e, prec));
    x.push_back(Complex(rational_to_real(e, prec), Real(prec)));
  }
  if (!(budget < Real(1, prec)))
    throw InvalidParams("base point outside the convergence domain");
  Real margin = Real::pow2(-static_cast<long>(prec) / 2, prec);
  if (abs(fc_singular_poly(bp.m, x)) < margin)
    throw InvalidParams("base point on the singular locus");
}

}  // namespace hgm
