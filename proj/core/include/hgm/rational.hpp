#ifndef HGM_RATIONAL_HPP
#define HGM_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "hgm/numeric.hpp"

namespace hgm {

using Rational = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rational& r) {
  return boost::multiprecision::denominator(r) == 1;
}

// "u/d" or plain integer "u"
Rational parse_rational(const std::string& s);
std::string rational_str(const Rational& r);

Real rational_to_real(const Rational& r, mpfr_prec_t prec);

}  // namespace hgm

#endif
