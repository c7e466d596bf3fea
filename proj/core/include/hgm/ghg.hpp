#ifndef HGM_GHG_HPP
#define HGM_GHG_HPP

#include "hgm/params.hpp"

namespace hgm {

struct DegenerateForm : NumericError {
  using NumericError::NumericError;
};

// Local exponents at x = 0, 1, infinity, as exact rationals.
struct RiemannScheme {
  std::vector<Rational> at_zero;
  std::vector<Rational> at_one;
  std::vector<Rational> at_infinity;
};

// Monodromy data of the rank-p equation in the normalized gauge:
// M0 diagonal, M1 a complex reflection, H the diagonal invariant form.
struct CircuitSetGHG {
  GHGParams params;
  ExpParams exp_params;
  CMatrix M0;
  CMatrix M1;
  CMatrix H;
  Complex lambda;

  size_t p() const { return params.p(); }
  CMatrix m_infinity() const { return (M0 * M1).inverse(); }
};

RiemannScheme riemann_scheme(const GHGParams& params);

CMatrix build_m0(const ExpParams& exp_params);
// diag(1, h_1, ..., h_{p-1})
CMatrix build_h(const ExpParams& exp_params);
Complex lambda_ghg(const ExpParams& exp_params);

// id - ((1-lambda)/Tr H) H 1^t 1, i.e. entry (i,j) = delta_ij - c H_ii.
// Shared with the F_C reflection, which uses the same kernel at size 2^m.
CMatrix build_reflection(const CMatrix& H, const Complex& lambda);

// Throws InvalidParams (listing violations) on resonant input.
CircuitSetGHG build_circuit_set(const GHGParams& params,
                                mpfr_prec_t prec = kDefaultPrecision);

std::string violations_message(const std::vector<Violation>& v);

}  // namespace hgm

#endif
