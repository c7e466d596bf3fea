#include "hgm/params.hpp"

#include <random>
#include <sstream>

namespace hgm {

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos)
      return Rational(boost::multiprecision::cpp_int(s));
    boost::multiprecision::cpp_int num(s.substr(0, slash));
    boost::multiprecision::cpp_int den(s.substr(slash + 1));
    if (den == 0) throw NumericError("zero denominator in rational: " + s);
    return Rational(num, den);
  } catch (const std::exception&) {
    throw NumericError("cannot parse rational: " + s);
  }
}

std::string rational_str(const Rational& r) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(r);
  if (!is_integer(r)) os << "/" << boost::multiprecision::denominator(r);
  return os.str();
}

Real rational_to_real(const Rational& r, mpfr_prec_t prec) {
  return Real::from_fraction(boost::multiprecision::numerator(r).str(),
                             boost::multiprecision::denominator(r).str(), prec);
}

Complex unit_exp(const Rational& r, mpfr_prec_t prec) {
  // reduce mod 1 exactly so the angle stays in [0, 1)
  Rational frac = r - Rational(boost::multiprecision::numerator(r) /
                               boost::multiprecision::denominator(r));
  if (frac < 0) frac += 1;
  Real angle = Real(2, prec) * Real::pi(prec) * rational_to_real(frac, prec);
  Real c(prec), s(prec);
  mpfr_sin_cos(s.raw(), c.raw(), angle.raw(), MPFR_RNDN);
  return Complex(c, s);
}

namespace {

void check_expr(std::vector<Violation>& out, const std::string& expr,
                const Rational& value) {
  if (is_integer(value)) out.push_back({expr, value});
}

std::string sub(const char* base, size_t i) {
  return std::string(base) + std::to_string(i);
}

}  // namespace

std::vector<Violation> validate_ghg(const GHGParams& params) {
  if (params.p() < 2) throw InvalidParams("p must be >= 2");
  if (params.b.size() + 1 != params.p())
    throw InvalidParams("need p-1 lower parameters");
  std::vector<Violation> out;
  const auto& a = params.a;
  const auto& b = params.b;
  for (size_t i = 0; i < a.size(); ++i) check_expr(out, sub("a", i + 1), a[i]);
  for (size_t j = 0; j < b.size(); ++j) check_expr(out, sub("b", j + 1), b[j]);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      check_expr(out, sub("a", i + 1) + "-" + sub("b", j + 1), a[i] - b[j]);
  for (size_t j = 0; j < b.size(); ++j)
    for (size_t k = 0; k < b.size(); ++k)
      if (j != k)
        check_expr(out, sub("b", j + 1) + "-" + sub("b", k + 1), b[j] - b[k]);
  Rational diff(0);
  for (const auto& x : a) diff += x;
  for (const auto& x : b) diff -= x;
  check_expr(out, "sum(a)-sum(b)", diff);
  return out;
}

std::vector<Violation> validate_fc(const FCParams& params) {
  size_t m = params.m();
  if (m < 1) throw InvalidParams("m must be >= 1");
  if (m > 16) throw MTooLarge("m > 16: subset enumeration too large");
  std::vector<Violation> out;
  for (size_t j = 0; j < m; ++j) check_expr(out, sub("b", j + 1), params.b[j]);
  for (uint32_t mask = 0; mask < (1u << m); ++mask) {
    Rational bsum(0);
    std::string jset = "{";
    for (size_t j = 0; j < m; ++j)
      if (mask & (1u << j)) {
        bsum += params.b[j];
        if (jset.size() > 1) jset += ",";
        jset += std::to_string(j + 1);
      }
    jset += "}";
    check_expr(out, "a1-sum(b,J=" + jset + ")", params.a1 - bsum);
    check_expr(out, "a2-sum(b,J=" + jset + ")", params.a2 - bsum);
  }
  Rational total = params.a1 + params.a2;
  for (const auto& x : params.b) total -= x;
  check_expr(out, "2(a1+a2-sum(b))", 2 * total);
  return out;
}

ExpParams exponentiate(const GHGParams& params, mpfr_prec_t prec) {
  ExpParams e;
  e.prec = prec;
  for (const auto& x : params.a) e.A.push_back(unit_exp(x, prec));
  for (const auto& x : params.b) e.B.push_back(unit_exp(x, prec));
  return e;
}

ExpParams exponentiate(const FCParams& params, mpfr_prec_t prec) {
  ExpParams e;
  e.prec = prec;
  e.A.push_back(unit_exp(params.a1, prec));
  e.A.push_back(unit_exp(params.a2, prec));
  for (const auto& x : params.b) e.B.push_back(unit_exp(x, prec));
  return e;
}

namespace {

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> den_dist(2, 12);
  int den = den_dist(rng);
  std::uniform_int_distribution<int> num_dist(1, den - 1);
  return Rational(num_dist(rng), den);
}

}  // namespace

GHGParams random_ghg(size_t p, uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int tries = 0; tries < 100000; ++tries) {
    GHGParams params;
    for (size_t i = 0; i < p; ++i) params.a.push_back(random_rational(rng));
    for (size_t j = 0; j + 1 < p; ++j) params.b.push_back(random_rational(rng));
    if (validate_ghg(params).empty()) return params;
  }
  throw InvalidParams("rejection sampling failed for ghg parameters");
}

FCParams random_fc(size_t m, uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int tries = 0; tries < 100000; ++tries) {
    FCParams params;
    params.a1 = random_rational(rng);
    params.a2 = random_rational(rng);
    for (size_t j = 0; j < m; ++j) params.b.push_back(random_rational(rng));
    if (validate_fc(params).empty()) return params;
  }
  throw InvalidParams("rejection sampling failed for fc parameters");
}

}  // namespace hgm
