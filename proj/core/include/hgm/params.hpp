#ifndef HGM_PARAMS_HPP
#define HGM_PARAMS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hgm/matrix.hpp"
#include "hgm/rational.hpp"

namespace hgm {

struct MTooLarge : NumericError {
  using NumericError::NumericError;
};
struct InvalidParams : NumericError {
  using NumericError::NumericError;
};

// Parameters of the rank-p equation: a_1..a_p upper, b_1..b_{p-1} lower.
struct GHGParams {
  std::vector<Rational> a;
  std::vector<Rational> b;
  size_t p() const { return a.size(); }
};

// Parameters of the m-variable F_C system.
struct FCParams {
  Rational a1, a2;
  std::vector<Rational> b;
  size_t m() const { return b.size(); }
};

// A failed non-integrality condition; the offending expression is integral.
struct Violation {
  std::string expr;
  Rational value;
};

// Unit-circle exponentials A_i = e^{2 pi i a_i}, B_j = e^{2 pi i b_j}.
struct ExpParams {
  std::vector<Complex> A;
  std::vector<Complex> B;
  mpfr_prec_t prec;
};

std::vector<Violation> validate_ghg(const GHGParams& params);
// enumerates all 2^m subsets; rejects m > 16
std::vector<Violation> validate_fc(const FCParams& params);

ExpParams exponentiate(const GHGParams& params, mpfr_prec_t prec);
ExpParams exponentiate(const FCParams& params, mpfr_prec_t prec);

// e^{2 pi i r} with the angle reduced exactly mod 1 first
Complex unit_exp(const Rational& r, mpfr_prec_t prec);

// Parameter-negation involution. With real (rational) parameters every
// constructed value is a rational function of unit-circle numbers, so the
// involution acts as entrywise complex conjugation.
inline Complex vee(const Complex& z) { return conj(z); }
inline CMatrix vee(const CMatrix& m) { return m.conjugated(); }

// Seeded rejection sampler: denominators <= 12, resampled until valid.
GHGParams random_ghg(size_t p, uint64_t seed);
FCParams random_fc(size_t m, uint64_t seed);

}  // namespace hgm

#endif
