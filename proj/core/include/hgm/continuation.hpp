#ifndef HGM_CONTINUATION_HPP
#define HGM_CONTINUATION_HPP

#include "hgm/series.hpp"
#include "hgm/verify.hpp"

namespace hgm {

struct StepUnderflow : NumericError {
  using NumericError::NumericError;
};
struct EigenvectorDegenerate : NumericError {
  using NumericError::NumericError;
};
struct VanishingComponent : NumericError {
  using NumericError::NumericError;
};

// Positively oriented circle through the base point x = eps:
// around zero, radius eps; around one, radius 1 - eps.
struct LoopSpec {
  enum class Kind { around_zero, around_one };
  Kind kind = Kind::around_zero;
  Rational eps = Rational(1, 10);
};

// Base point (eps_1, ..., eps_m) with eps_{i+1} <= eps_i / 100,
// inside the F_C convergence domain and off the singular locus.
struct FCBasePoint {
  size_t m;
  std::vector<Rational> eps;
};

FCBasePoint default_fc_base_point(size_t m);
void validate_fc_base_point(const FCBasePoint& bp, mpfr_prec_t prec);

// Diagonal gauge recovered from a raw-basis monodromy matrix.
struct GaugeResult {
  CMatrix g;  // diagonal, first entry 1
  CMatrix raw_m0, raw_m1;
  CMatrix gauged_m0, gauged_m1;
  Real fit_residual;
};

// Raw-basis monodromy around the loop, with respect to the basis of
// fundamental_system_ghg at the base point (g = id). Continuation by
// adaptive Taylor recentering of the theta-companion system.
CMatrix numeric_monodromy(const GHGParams& params, const LoopSpec& loop,
                          mpfr_prec_t prec);

// One Taylor continuation step of the full jet matrix from z0 to z1;
// exposed for the series/ODE consistency test.
CMatrix taylor_step(const GHGParams& params, const CMatrix& jets,
                    const Complex& z0, const Complex& z1, mpfr_prec_t prec);

// Solve v raw_m1 = lambda v with v_1 pinned to 1, gauge by g = diag(v).
GaugeResult gauge_normalize(const CMatrix& raw_m0, const CMatrix& raw_m1,
                            const Complex& lambda, size_t pinned = 0);

// End-to-end oracle: continue around both loops, gauge, compare with the
// closed-form circuit set.
Report compare_to_closed_form(const GHGParams& params, mpfr_prec_t prec,
                              const Real& tol,
                              const Rational& eps = Rational(1, 10));

}  // namespace hgm

#endif
