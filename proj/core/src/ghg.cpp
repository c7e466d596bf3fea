#include "hgm/ghg.hpp"

namespace hgm {

std::string violations_message(const std::vector<Violation>& v) {
  std::string msg = "resonant parameters:";
  for (const auto& x : v)
    msg += " [" + x.expr + " = " + rational_str(x.value) + "]";
  return msg;
}

RiemannScheme riemann_scheme(const GHGParams& params) {
  if (auto v = validate_ghg(params); !v.empty())
    throw InvalidParams(violations_message(v));
  RiemannScheme s;
  size_t p = params.p();
  s.at_zero.push_back(Rational(0));
  for (const auto& b : params.b) s.at_zero.push_back(Rational(1) - b);
  for (size_t k = 0; k + 1 < p; ++k) s.at_one.push_back(Rational(k));
  Rational diff(0);
  for (const auto& b : params.b) diff += b;
  for (const auto& a : params.a) diff -= a;
  s.at_one.push_back(diff);
  s.at_infinity = params.a;
  return s;
}

CMatrix build_m0(const ExpParams& exp_params) {
  std::vector<Complex> d;
  d.push_back(Complex(1, exp_params.prec));
  for (const auto& B : exp_params.B) d.push_back(inv(B));
  return CMatrix::diagonal(d);
}

CMatrix build_h(const ExpParams& exp_params) {
  mpfr_prec_t prec = exp_params.prec;
  const auto& A = exp_params.A;
  const auto& B = exp_params.B;
  Complex one = Complex::one(prec);
  Complex prod_a1(1, prec);  // prod (A_i - 1)
  for (const auto& a : A) prod_a1 *= (a - one);
  std::vector<Complex> d;
  d.push_back(one);
  for (size_t k = 0; k < B.size(); ++k) {
    Complex num(1, prec);
    for (size_t j = 0; j < B.size(); ++j)
      if (j != k) num *= (B[j] - one);
    for (const auto& a : A) num *= (a - B[k]);
    Complex den = B[k] * prod_a1;
    for (size_t j = 0; j < B.size(); ++j)
      if (j != k) den *= (B[j] - B[k]);
    d.push_back(-(num / den));
  }
  return CMatrix::diagonal(d);
}

Complex lambda_ghg(const ExpParams& exp_params) {
  Complex num(1, exp_params.prec), den(1, exp_params.prec);
  for (const auto& b : exp_params.B) num *= b;
  for (const auto& a : exp_params.A) den *= a;
  return num / den;
}

CMatrix build_reflection(const CMatrix& H, const Complex& lambda) {
  mpfr_prec_t prec = H.prec();
  Complex tr = H.trace();
  Real margin = Real::pow2(-static_cast<long>(prec) / 2, prec);
  if (abs(tr) < margin)
    throw DegenerateForm("Tr(H) vanishes within margin");
  Complex coeff = (Complex::one(prec) - lambda) / tr;
  size_t n = H.n();
  CMatrix m = CMatrix::identity(n, prec);
  for (size_t i = 0; i < n; ++i) {
    Complex row = coeff * H.at(i, i);
    for (size_t j = 0; j < n; ++j) m.at(i, j) -= row;
  }
  return m;
}

CircuitSetGHG build_circuit_set(const GHGParams& params, mpfr_prec_t prec) {
  if (auto v = validate_ghg(params); !v.empty())
    throw InvalidParams(violations_message(v));
  ExpParams exp_params = exponentiate(params, prec);
  CMatrix M0 = build_m0(exp_params);
  CMatrix H = build_h(exp_params);
  Complex lambda = lambda_ghg(exp_params);
  CMatrix M1 = build_reflection(H, lambda);
  return CircuitSetGHG{params, std::move(exp_params), std::move(M0),
                       std::move(M1), std::move(H), std::move(lambda)};
}

}  // namespace hgm
