#ifndef HGM_MATRIX_HPP
#define HGM_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "hgm/numeric.hpp"

namespace hgm {

struct SingularMatrix : NumericError {
  using NumericError::NumericError;
};
struct DimensionMismatch : NumericError {
  using NumericError::NumericError;
};

// Dense square matrix of Complex, row-major.
class CMatrix {
 public:
  CMatrix(size_t n, mpfr_prec_t prec)
      : n_(n), prec_(prec), e_(n * n, Complex(prec)) {
    if (n == 0) throw DimensionMismatch("matrix size must be >= 1");
  }

  static CMatrix identity(size_t n, mpfr_prec_t prec);
  static CMatrix diagonal(const std::vector<Complex>& d);

  size_t n() const { return n_; }
  mpfr_prec_t prec() const { return prec_; }

  const Complex& at(size_t i, size_t j) const { return e_[i * n_ + j]; }
  Complex& at(size_t i, size_t j) { return e_[i * n_ + j]; }

  bool is_diagonal_exact() const;
  std::vector<Complex> diagonal_entries() const;
  Complex trace() const;

  friend CMatrix operator*(const CMatrix& a, const CMatrix& b);
  friend CMatrix operator+(const CMatrix& a, const CMatrix& b);
  friend CMatrix operator-(const CMatrix& a, const CMatrix& b);
  CMatrix scaled(const Complex& s) const;
  CMatrix transposed() const;
  // entrywise complex conjugate
  CMatrix conjugated() const;

  // LU with partial pivoting; pivot magnitude below 2^(-prec/2) is singular
  CMatrix inverse() const;
  Complex determinant() const;
  // solve x A = b for a row vector b (used for left eigenvectors)
  std::vector<Complex> solve_left(const std::vector<Complex>& b) const;

  Real max_abs_entry() const;
  // max |a - b| over entries
  friend Real max_abs_diff(const CMatrix& a, const CMatrix& b);

  // vector helpers (row vectors)
  std::vector<Complex> row_times(const std::vector<Complex>& v) const;  // v * M
  std::vector<Complex> column_sums() const;

  CMatrix block(size_t i0, size_t j0, size_t size) const;

 private:
  struct LU;
  LU factor() const;
  size_t n_;
  mpfr_prec_t prec_;
  std::vector<Complex> e_;
};

Real max_abs_vec(const std::vector<Complex>& v);

}  // namespace hgm

#endif
