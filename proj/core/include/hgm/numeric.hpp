#ifndef HGM_NUMERIC_HPP
#define HGM_NUMERIC_HPP

#include <mpfr.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace hgm {

inline constexpr mpfr_prec_t kMinPrecision = 64;
inline constexpr mpfr_prec_t kDefaultPrecision = 256;

struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Arbitrary-precision real backed by mpfr_t, value semantics.
// Binary operations carry the larger of the two operand precisions.
class Real {
 public:
  explicit Real(mpfr_prec_t prec = kDefaultPrecision) {
    check_prec(prec);
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  Real(long x, mpfr_prec_t prec) {
    check_prec(prec);
    mpfr_init2(v_, prec);
    mpfr_set_si(v_, x, MPFR_RNDN);
  }
  Real(const Real& o) {
    mpfr_init2(v_, o.prec());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, o.prec());
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, o.prec());
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  static Real from_string(const std::string& s, mpfr_prec_t prec);
  // numerator/denominator given as decimal integer strings
  static Real from_fraction(const std::string& num, const std::string& den,
                            mpfr_prec_t prec);
  static Real pi(mpfr_prec_t prec);

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_negative() const { return mpfr_sgn(v_) < 0; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  // shortest-ish decimal form with the given significant digit count
  std::string str(size_t digits = 0) const;

  friend Real operator+(const Real& a, const Real& b) {
    Real r(joint(a, b));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator-(const Real& a, const Real& b) {
    Real r(joint(a, b));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator*(const Real& a, const Real& b) {
    Real r(joint(a, b));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator/(const Real& a, const Real& b) {
    Real r(joint(a, b));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator-(const Real& a) {
    Real r(a.prec());
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  Real& operator+=(const Real& b) {
    bump(b.prec());
    mpfr_add(v_, v_, b.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator-=(const Real& b) {
    bump(b.prec());
    mpfr_sub(v_, v_, b.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator*=(const Real& b) {
    bump(b.prec());
    mpfr_mul(v_, v_, b.v_, MPFR_RNDN);
    return *this;
  }

  friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) == 0; }

  friend Real abs(const Real& a) {
    Real r(a.prec());
    mpfr_abs(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real sqrt(const Real& a) {
    Real r(a.prec());
    mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real hypot(const Real& a, const Real& b) {
    Real r(joint(a, b));
    mpfr_hypot(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real log(const Real& a) {
    Real r(a.prec());
    mpfr_log(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real exp(const Real& a) {
    Real r(a.prec());
    mpfr_exp(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real atan2(const Real& y, const Real& x) {
    Real r(joint(y, x));
    mpfr_atan2(r.v_, y.v_, x.v_, MPFR_RNDN);
    return r;
  }
  // 2^e at the given precision; e may be negative
  static Real pow2(long e, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_si_2exp(r.raw(), 1, e, MPFR_RNDN);
    return r;
  }

 private:
  static void check_prec(mpfr_prec_t prec) {
    if (prec < kMinPrecision) throw NumericError("precision below 64 bits");
  }
  static mpfr_prec_t joint(const Real& a, const Real& b) {
    return a.prec() > b.prec() ? a.prec() : b.prec();
  }
  void bump(mpfr_prec_t p) {
    if (p > prec()) mpfr_prec_round(v_, p, MPFR_RNDN);
  }
  mpfr_t v_;
};

// Complex value over Real. Both parts always share one precision.
class Complex {
 public:
  explicit Complex(mpfr_prec_t prec = kDefaultPrecision) : re_(prec), im_(prec) {}
  Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {
    mpfr_prec_t p = re_.prec() > im_.prec() ? re_.prec() : im_.prec();
    if (re_.prec() != p) re_ += Real(0, p);
    if (im_.prec() != p) im_ += Real(0, p);
  }
  Complex(long re, mpfr_prec_t prec) : re_(re, prec), im_(prec) {}

  const Real& re() const { return re_; }
  const Real& im() const { return im_; }
  mpfr_prec_t prec() const { return re_.prec(); }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

  friend Complex operator+(const Complex& a, const Complex& b) {
    return Complex(a.re_ + b.re_, a.im_ + b.im_);
  }
  friend Complex operator-(const Complex& a, const Complex& b) {
    return Complex(a.re_ - b.re_, a.im_ - b.im_);
  }
  friend Complex operator-(const Complex& a) { return Complex(-a.re_, -a.im_); }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return Complex(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
  }
  friend Complex operator*(const Real& s, const Complex& a) {
    return Complex(s * a.re_, s * a.im_);
  }
  friend Complex operator/(const Complex& a, const Complex& b) {
    Real d = b.re_ * b.re_ + b.im_ * b.im_;
    return Complex((a.re_ * b.re_ + a.im_ * b.im_) / d,
                   (a.im_ * b.re_ - a.re_ * b.im_) / d);
  }
  Complex& operator+=(const Complex& b) {
    re_ += b.re_;
    im_ += b.im_;
    return *this;
  }
  Complex& operator-=(const Complex& b) {
    re_ -= b.re_;
    im_ -= b.im_;
    return *this;
  }
  Complex& operator*=(const Complex& b) { return *this = *this * b; }

  friend Complex conj(const Complex& a) { return Complex(a.re_, -a.im_); }
  friend Real abs(const Complex& a) { return hypot(a.re_, a.im_); }

  friend Complex inv(const Complex& a) {
    Real d = a.re_ * a.re_ + a.im_ * a.im_;
    return Complex(a.re_ / d, -a.im_ / d);
  }
  // principal branch throughout
  friend Complex log(const Complex& a) {
    return Complex(log(abs(a)), atan2(a.im(), a.re()));
  }
  friend Complex exp(const Complex& a) {
    Real m = exp(a.re());
    Real c(a.prec()), s(a.prec());
    mpfr_sin_cos(s.raw(), c.raw(), a.im().raw(), MPFR_RNDN);
    return Complex(m * c, m * s);
  }
  friend Complex pow(const Complex& base, const Complex& expo) {
    if (base.is_zero()) return Complex(base.prec());
    return exp(expo * log(base));
  }
  friend Complex sqrt(const Complex& a) {
    if (a.is_zero()) return a;
    Complex half(a.prec());
    return pow(a, Complex(Real::from_fraction("1", "2", a.prec()), Real(a.prec())));
  }

  static Complex one(mpfr_prec_t prec) { return Complex(1, prec); }
  static Complex i(mpfr_prec_t prec) { return Complex(Real(0, prec), Real(1, prec)); }

 private:
  Real re_, im_;
};

}  // namespace hgm

#endif
