#include "hgm/series.hpp"

namespace hgm {

namespace {

constexpr long kMaxTerms = 1000000;

// sum_{n} (c+n)^k t_n x^n for k = 0..njets-1, t the pFq terms
std::vector<Complex> pfq_jets(const std::vector<Rational>& a,
                              const std::vector<Rational>& b, const Real& c,
                              const Complex& x, mpfr_prec_t prec,
                              size_t njets) {
  Real ax = abs(x);
  if (ax > Real::from_fraction("9", "10", prec) + Real::pow2(-32, prec))
    throw NoConvergence("series point outside |x| <= 0.9");
  std::vector<Real> ar, br;
  for (const auto& q : a) ar.push_back(rational_to_real(q, prec));
  for (const auto& q : b) br.push_back(rational_to_real(q, prec));

  std::vector<Complex> sums(njets, Complex(prec));
  Complex term = Complex::one(prec);
  Real thr = Real::pow2(-static_cast<long>(prec) - 16, prec);
  Real one(1, prec);
  int quiet = 0;
  for (long n = 0;; ++n) {
    if (n > kMaxTerms) throw NoConvergence("pFq did not converge in 10^6 terms");
    Real w = c + Real(n, prec);
    Complex contrib = term;
    for (size_t k = 0; k < njets; ++k) {
      sums[k] += contrib;
      contrib = w * contrib;
    }
    // geometric tail bound once the ratio has settled under (1+|x|)/2
    Real weight = abs(term);
    Real wa = abs(w);
    if (wa > one) {
      for (size_t k = 1; k < njets; ++k) weight = weight * wa;
    }
    if (n >= 30 && weight < thr) {
      if (++quiet >= 3) break;
    } else {
      quiet = 0;
    }
    Real num(1, prec), den(Real(n, prec) + one);
    for (const auto& q : ar) num = num * (q + Real(n, prec));
    for (const auto& q : br) den = den * (q + Real(n, prec));
    term = (num / den) * (term * x);
  }
  return sums;
}

}  // namespace

Complex eval_pfq(const std::vector<Rational>& a, const std::vector<Rational>& b,
                 const Complex& x, mpfr_prec_t prec) {
  for (const auto& q : b)
    if (is_integer(q) && q <= 0)
      throw InvalidParams("lower parameter in -N: " + rational_str(q));
  return pfq_jets(a, b, Real(0, prec), x, prec, 1)[0];
}

namespace {

// shifted parameter lists of the j-th basis solution (j >= 1, 0-based row)
void ghg_row_params(const GHGParams& params, size_t row,
                    std::vector<Rational>& a_out, std::vector<Rational>& b_out,
                    Rational& expo) {
  a_out.clear();
  b_out.clear();
  if (row == 0) {
    a_out = params.a;
    b_out = params.b;
    expo = Rational(0);
    return;
  }
  const Rational& bj = params.b[row - 1];
  expo = Rational(1) - bj;
  for (const auto& q : params.a) a_out.push_back(q - bj + 1);
  for (size_t l = 0; l < params.b.size(); ++l) {
    if (l == row - 1)
      b_out.push_back(Rational(2) - bj);
    else
      b_out.push_back(params.b[l] - bj + 1);
  }
}

}  // namespace

std::vector<Complex> fundamental_system_ghg(const GHGParams& params,
                                            const Complex& x,
                                            mpfr_prec_t prec) {
  std::vector<Complex> out;
  size_t p = params.p();
  for (size_t row = 0; row < p; ++row) {
    std::vector<Rational> a, b;
    Rational expo;
    ghg_row_params(params, row, a, b, expo);
    Complex val = eval_pfq(a, b, x, prec);
    if (row > 0)
      val = pow(x, Complex(rational_to_real(expo, prec), Real(prec))) * val;
    out.push_back(val);
  }
  return out;
}

CMatrix ghg_solution_jets(const GHGParams& params, const Complex& x,
                          mpfr_prec_t prec) {
  size_t p = params.p();
  CMatrix jets(p, prec);
  for (size_t col = 0; col < p; ++col) {
    std::vector<Rational> a, b;
    Rational expo;
    ghg_row_params(params, col, a, b, expo);
    Real c = rational_to_real(expo, prec);
    auto sums = pfq_jets(a, b, c, x, prec, p);
    Complex pref = (col == 0)
                       ? Complex::one(prec)
                       : pow(x, Complex(c, Real(prec)));
    for (size_t k = 0; k < p; ++k) jets.at(k, col) = pref * sums[k];
  }
  return jets;
}

Complex eval_fc_series(const FCParams& params, const std::vector<Complex>& x,
                       const SubsetIndex& J, mpfr_prec_t prec) {
  size_t m = params.m();
  if (x.size() != m) throw DimensionMismatch("eval_fc_series: bad arity");
  Real budget(0, prec);
  for (const auto& xi : x) budget += sqrt(abs(xi));
  if (budget > Real::from_fraction("9", "10", prec) + Real::pow2(-32, prec))
    throw NoConvergence("point outside sum sqrt|x_i| <= 0.9");

  // shifted parameters per the solution table
  Rational shift(0);
  for (size_t j : J.members()) shift += Rational(1) - params.b[j - 1];
  Rational alpha1 = params.a1 + shift;
  Rational alpha2 = params.a2 + shift;
  std::vector<Rational> beta;
  for (size_t i = 1; i <= m; ++i) {
    if (J.contains(i))
      beta.push_back(Rational(2) - params.b[i - 1]);
    else
      beta.push_back(params.b[i - 1]);
  }
  for (const auto& q : beta)
    if (is_integer(q) && q <= 0)
      throw InvalidParams("lower parameter in -N: " + rational_str(q));

  Real a1r = rational_to_real(alpha1, prec);
  Real a2r = rational_to_real(alpha2, prec);
  std::vector<Real> br;
  for (const auto& q : beta) br.push_back(rational_to_real(q, prec));

  // u_j[n] = x_j^n / ((beta_j,n) n!); level sums come from the convolution
  // C = u_1 * ... * u_m, one degree at a time
  const size_t max_level = 200000 / (m ? m : 1);
  std::vector<std::vector<Complex>> u(m);
  Real one(1, prec);
  Complex sum(prec);
  Complex top = Complex::one(prec);  // (alpha1,N)(alpha2,N)
  Real thr = Real::pow2(-static_cast<long>(prec) - 16, prec);
  int quiet = 0;

  for (size_t N = 0;; ++N) {
    if (N > max_level) throw NoConvergence("F_C series did not converge");
    for (size_t j = 0; j < m; ++j) {
      if (N == 0) {
        u[j].push_back(Complex::one(prec));
      } else {
        Real n1(static_cast<long>(N) - 1, prec);
        Complex next = u[j].back() * x[j];
        next = Complex(one / ((br[j] + n1) * (n1 + one)), Real(prec)) * next;
        u[j].push_back(next);
      }
    }
    // C[N] = sum over compositions; extend the convolution by one degree
    Complex cN(prec);
    if (m == 1) {
      cN = u[0][N];
    } else {
      // recompute the N-th coefficient of the full product directly:
      // fold axes one at a time keeping only degree <= N
      std::vector<Complex> acc(u[0].begin(), u[0].begin() + N + 1);
      for (size_t j = 1; j < m; ++j) {
        std::vector<Complex> nxt(N + 1, Complex(prec));
        for (size_t d = 0; d <= N; ++d)
          for (size_t e = 0; e + d <= N; ++e) nxt[d + e] += acc[d] * u[j][e];
        acc = std::move(nxt);
      }
      cN = acc[N];
    }
    Complex level = top * cN;
    sum += level;
    if (N >= 10 && abs(level) < thr) {
      if (++quiet >= 3) break;
    } else {
      quiet = 0;
    }
    Real nr(static_cast<long>(N), prec);
    top = ((a1r + nr) * (a2r + nr)) * top;
  }

  Complex pref = Complex::one(prec);
  for (size_t j : J.members()) {
    Rational e = Rational(1) - params.b[j - 1];
    pref *= pow(x[j - 1], Complex(rational_to_real(e, prec), Real(prec)));
  }
  return pref * sum;
}

}  // namespace hgm
