#include "hgm/numeric.hpp"

#include <cstdlib>
#include <cstring>
#include <vector>

namespace hgm {

Real Real::from_string(const std::string& s, mpfr_prec_t prec) {
  check_prec(prec);
  Real r(prec);
  if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
    throw NumericError("cannot parse real literal: " + s);
  return r;
}

Real Real::from_fraction(const std::string& num, const std::string& den,
                         mpfr_prec_t prec) {
  Real n = from_string(num, prec);
  Real d = from_string(den, prec);
  if (d.is_zero()) throw NumericError("zero denominator");
  return n / d;
}

Real Real::pi(mpfr_prec_t prec) {
  check_prec(prec);
  Real r(prec);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

std::string Real::str(size_t digits) const {
  if (digits == 0) {
    // enough digits to carry the full mantissa
    digits = static_cast<size_t>(prec() * 0.3011) + 3;
  }
  if (mpfr_zero_p(v_)) return "0";
  if (!mpfr_number_p(v_)) return mpfr_nan_p(v_) ? "nan" : (mpfr_sgn(v_) > 0 ? "inf" : "-inf");
  mpfr_exp_t e = 0;
  char* raw = mpfr_get_str(nullptr, &e, 10, digits, v_, MPFR_RNDN);
  if (!raw) throw NumericError("mpfr_get_str failed");
  std::string mant(raw);
  mpfr_free_str(raw);
  bool neg = !mant.empty() && mant[0] == '-';
  if (neg) mant.erase(0, 1);
  // strip trailing zeros of the mantissa
  size_t last = mant.find_last_not_of('0');
  if (last != std::string::npos) mant.erase(last + 1);
  if (mant.empty()) mant = "0";
  // scientific form d.ddd...e<exp10>; mpfr's e is the position of the point
  std::string out;
  if (neg) out += '-';
  out += mant.substr(0, 1);
  if (mant.size() > 1) {
    out += '.';
    out += mant.substr(1);
  }
  long e10 = static_cast<long>(e) - 1;
  if (e10 != 0) {
    out += 'e';
    out += std::to_string(e10);
  }
  return out;
}

}  // namespace hgm
