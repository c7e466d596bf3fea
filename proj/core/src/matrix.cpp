#include "hgm/matrix.hpp"

#include <utility>

namespace hgm {

CMatrix CMatrix::identity(size_t n, mpfr_prec_t prec) {
  CMatrix m(n, prec);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = Complex(1, prec);
  return m;
}

CMatrix CMatrix::diagonal(const std::vector<Complex>& d) {
  if (d.empty()) throw DimensionMismatch("empty diagonal");
  mpfr_prec_t p = d[0].prec();
  CMatrix m(d.size(), p);
  for (size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
  return m;
}

bool CMatrix::is_diagonal_exact() const {
  for (size_t i = 0; i < n_; ++i)
    for (size_t j = 0; j < n_; ++j)
      if (i != j && !at(i, j).is_zero()) return false;
  return true;
}

std::vector<Complex> CMatrix::diagonal_entries() const {
  std::vector<Complex> d;
  d.reserve(n_);
  for (size_t i = 0; i < n_; ++i) d.push_back(at(i, i));
  return d;
}

Complex CMatrix::trace() const {
  Complex t(prec_);
  for (size_t i = 0; i < n_; ++i) t += at(i, i);
  return t;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.n_ != b.n_) throw DimensionMismatch("mat_mul: size mismatch");
  mpfr_prec_t p = a.prec_ > b.prec_ ? a.prec_ : b.prec_;
  size_t n = a.n_;
  CMatrix c(n, p);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      Real re(0, p), im(0, p);
      for (size_t k = 0; k < n; ++k) {
        const Complex& x = a.at(i, k);
        const Complex& y = b.at(k, j);
        re += x.re() * y.re() - x.im() * y.im();
        im += x.re() * y.im() + x.im() * y.re();
      }
      c.at(i, j) = Complex(re, im);
    }
  }
  return c;
}

CMatrix operator+(const CMatrix& a, const CMatrix& b) {
  if (a.n_ != b.n_) throw DimensionMismatch("mat_add: size mismatch");
  CMatrix c(a.n_, a.prec_ > b.prec_ ? a.prec_ : b.prec_);
  for (size_t i = 0; i < a.n_ * a.n_; ++i) c.e_[i] = a.e_[i] + b.e_[i];
  return c;
}

CMatrix operator-(const CMatrix& a, const CMatrix& b) {
  if (a.n_ != b.n_) throw DimensionMismatch("mat_sub: size mismatch");
  CMatrix c(a.n_, a.prec_ > b.prec_ ? a.prec_ : b.prec_);
  for (size_t i = 0; i < a.n_ * a.n_; ++i) c.e_[i] = a.e_[i] - b.e_[i];
  return c;
}

CMatrix CMatrix::scaled(const Complex& s) const {
  CMatrix c(n_, prec_);
  for (size_t i = 0; i < n_ * n_; ++i) c.e_[i] = e_[i] * s;
  return c;
}

CMatrix CMatrix::transposed() const {
  CMatrix c(n_, prec_);
  for (size_t i = 0; i < n_; ++i)
    for (size_t j = 0; j < n_; ++j) c.at(j, i) = at(i, j);
  return c;
}

CMatrix CMatrix::conjugated() const {
  CMatrix c(n_, prec_);
  for (size_t i = 0; i < n_ * n_; ++i) c.e_[i] = conj(e_[i]);
  return c;
}

struct CMatrix::LU {
  CMatrix lu;
  std::vector<size_t> perm;
  int sign;
  bool singular;
};

CMatrix::LU CMatrix::factor() const {
  LU f{*this, {}, 1, false};
  size_t n = n_;
  f.perm.resize(n);
  for (size_t i = 0; i < n; ++i) f.perm[i] = i;
  Real underflow = Real::pow2(-static_cast<long>(prec_) / 2, prec_);
  for (size_t k = 0; k < n; ++k) {
    size_t piv = k;
    Real best = abs(f.lu.at(k, k));
    for (size_t i = k + 1; i < n; ++i) {
      Real m = abs(f.lu.at(i, k));
      if (m > best) {
        best = m;
        piv = i;
      }
    }
    if (best < underflow) {
      f.singular = true;
      return f;
    }
    if (piv != k) {
      for (size_t j = 0; j < n; ++j) std::swap(f.lu.at(k, j), f.lu.at(piv, j));
      std::swap(f.perm[k], f.perm[piv]);
      f.sign = -f.sign;
    }
    Complex ip = inv(f.lu.at(k, k));
    for (size_t i = k + 1; i < n; ++i) {
      Complex l = f.lu.at(i, k) * ip;
      f.lu.at(i, k) = l;
      for (size_t j = k + 1; j < n; ++j) f.lu.at(i, j) -= l * f.lu.at(k, j);
    }
  }
  return f;
}

Complex CMatrix::determinant() const {
  LU f = factor();
  if (f.singular) return Complex(prec_);  // 0 is a valid determinant
  Complex d(f.sign, prec_);
  for (size_t i = 0; i < n_; ++i) d *= f.lu.at(i, i);
  return d;
}

CMatrix CMatrix::inverse() const {
  LU f = factor();
  if (f.singular) throw SingularMatrix("mat_inv: pivot below underflow threshold");
  size_t n = n_;
  CMatrix inv_m(n, prec_);
  std::vector<Complex> x(n, Complex(prec_));
  for (size_t col = 0; col < n; ++col) {
    // forward: L y = P e_col
    for (size_t i = 0; i < n; ++i) {
      Complex s = (f.perm[i] == col) ? Complex(1, prec_) : Complex(prec_);
      for (size_t j = 0; j < i; ++j) s -= f.lu.at(i, j) * x[j];
      x[i] = s;
    }
    // back: U x = y
    for (size_t i = n; i-- > 0;) {
      Complex s = x[i];
      for (size_t j = i + 1; j < n; ++j) s -= f.lu.at(i, j) * x[j];
      x[i] = s * inv(f.lu.at(i, i));
    }
    for (size_t i = 0; i < n; ++i) inv_m.at(i, col) = x[i];
  }
  return inv_m;
}

std::vector<Complex> CMatrix::solve_left(const std::vector<Complex>& b) const {
  if (b.size() != n_) throw DimensionMismatch("solve_left: size mismatch");
  // x A = b  <=>  A^T x^T = b^T
  CMatrix t = transposed();
  LU f = t.factor();
  if (f.singular) throw SingularMatrix("solve_left: singular system");
  size_t n = n_;
  std::vector<Complex> x(n, Complex(prec_));
  for (size_t i = 0; i < n; ++i) {
    Complex s = b[f.perm[i]];
    for (size_t j = 0; j < i; ++j) s -= f.lu.at(i, j) * x[j];
    x[i] = s;
  }
  for (size_t i = n; i-- > 0;) {
    Complex s = x[i];
    for (size_t j = i + 1; j < n; ++j) s -= f.lu.at(i, j) * x[j];
    x[i] = s * inv(f.lu.at(i, i));
  }
  return x;
}

Real CMatrix::max_abs_entry() const {
  Real m(0, prec_);
  for (const Complex& c : e_) {
    Real a = abs(c);
    if (a > m) m = a;
  }
  return m;
}

Real max_abs_diff(const CMatrix& a, const CMatrix& b) {
  return (a - b).max_abs_entry();
}

std::vector<Complex> CMatrix::row_times(const std::vector<Complex>& v) const {
  if (v.size() != n_) throw DimensionMismatch("row_times: size mismatch");
  std::vector<Complex> r(n_, Complex(prec_));
  for (size_t j = 0; j < n_; ++j) {
    Complex s(prec_);
    for (size_t i = 0; i < n_; ++i) s += v[i] * at(i, j);
    r[j] = s;
  }
  return r;
}

std::vector<Complex> CMatrix::column_sums() const {
  std::vector<Complex> r(n_, Complex(prec_));
  for (size_t j = 0; j < n_; ++j) {
    Complex s(prec_);
    for (size_t i = 0; i < n_; ++i) s += at(i, j);
    r[j] = s;
  }
  return r;
}

CMatrix CMatrix::block(size_t i0, size_t j0, size_t size) const {
  if (i0 + size > n_ || j0 + size > n_) throw DimensionMismatch("block out of range");
  CMatrix b(size, prec_);
  for (size_t i = 0; i < size; ++i)
    for (size_t j = 0; j < size; ++j) b.at(i, j) = at(i0 + i, j0 + j);
  return b;
}

Real max_abs_vec(const std::vector<Complex>& v) {
  Real m(0, v.empty() ? kMinPrecision : v[0].prec());
  for (const Complex& c : v) {
    Real a = abs(c);
    if (a > m) m = a;
  }
  return m;
}

}  // namespace hgm
