#ifndef HGM_SERIES_HPP
#define HGM_SERIES_HPP

#include "hgm/fc.hpp"

namespace hgm {

struct NoConvergence : NumericError {
  using NumericError::NumericError;
};

// pFq at |x| <= 0.9, summed with the term-ratio recurrence
// t_{n+1}/t_n = prod(a_i+n) / (prod(b_j+n)(1+n)) x.
Complex eval_pfq(const std::vector<Rational>& a, const std::vector<Rational>& b,
                 const Complex& x, mpfr_prec_t prec);

// The local basis f_1..f_p at x (principal branch of x^{1-b_j}):
// f_1 the plain series, f_j = x^{1-b_{j-1}} times the shifted series.
std::vector<Complex> fundamental_system_ghg(const GHGParams& params,
                                            const Complex& x, mpfr_prec_t prec);

// p x p matrix of theta-jets, entry (k, j) = (x d/dx)^k f_{j+1}(x).
// Columns are the basis solutions; rows feed the companion system.
CMatrix ghg_solution_jets(const GHGParams& params, const Complex& x,
                          mpfr_prec_t prec);

// J-th basis solution of the F_C system at a point with
// sum sqrt|x_i| <= 0.9: prefactor prod_{j in J} x_j^{1-b_j} times the
// series with parameters shifted per the solution table.
Complex eval_fc_series(const FCParams& params, const std::vector<Complex>& x,
                       const SubsetIndex& J, mpfr_prec_t prec);

}  // namespace hgm

#endif
