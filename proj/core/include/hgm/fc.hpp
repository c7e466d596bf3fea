#ifndef HGM_FC_HPP
#define HGM_FC_HPP

#include "hgm/ghg.hpp"

namespace hgm {

struct BlockStructureViolation : NumericError {
  using NumericError::NumericError;
};

// Subset of {1..m} as a bitmask; bit i-1 set means i is in J.
struct SubsetIndex {
  size_t m;
  uint32_t mask;

  // 1-based position in the lexicographic-by-bit order:
  // {}, {1}, {2}, {1,2}, {3}, ...
  size_t position() const { return static_cast<size_t>(mask) + 1; }
  size_t cardinality() const { return static_cast<size_t>(__builtin_popcount(mask)); }
  bool contains(size_t i) const { return (mask >> (i - 1)) & 1u; }
  std::vector<size_t> members() const;
};

// Monodromy data of the m-variable F_C system: m diagonal generators,
// the reflection M_{m+1}, H, lambda. All matrices are 2^m x 2^m.
struct CircuitSetFC {
  FCParams params;
  ExpParams exp_params;
  std::vector<CMatrix> M;  // M_1 .. M_m, diagonal
  CMatrix Mlast;           // M_{m+1}
  CMatrix H;
  Complex lambda;

  size_t m() const { return params.m(); }
  size_t dim() const { return size_t(1) << m(); }
};

CMatrix build_fc_mi(size_t i, const ExpParams& exp_params);
CMatrix build_fc_h(const ExpParams& exp_params);
Complex lambda_fc(const ExpParams& exp_params);
CMatrix build_fc_mlast(const ExpParams& exp_params);

// Dense 2^m construction is guarded at m <= 10.
CircuitSetFC build_circuit_set_fc(const FCParams& params,
                                  mpfr_prec_t prec = kDefaultPrecision);

// Parameters of the bottom-right reduction block: a_i -> a_i - b_m,
// b truncated to the first m-1 entries.
FCParams shifted_fc_params(const FCParams& params);
FCParams truncated_fc_params(const FCParams& params);

// N_m = M_{m+1} M_m M_{m+1} M_m^{-1}, then
// N_{m-k} = N_{m-k+1} M_{m-k} N_{m-k+1} M_{m-k}^{-1}.
// Returns N_m, N_{m-1}, ..., N_2.
std::vector<CMatrix> reduction_sequence(const CircuitSetFC& set);

Real off_block_mass(const CMatrix& N, size_t block_size);
// the two diagonal blocks; throws BlockStructureViolation when the
// off-block mass exceeds tol
std::vector<CMatrix> diagonal_blocks(const CMatrix& N, size_t block_size,
                                     const Real& tol);

// x_1...x_m R_m(x); the product over all sign patterns is even in each
// sqrt(x_j), so any branch choice gives the polynomial value
Complex fc_singular_poly(size_t m, const std::vector<Complex>& x);

// closed form of Tr(H)
Complex fc_trace_h(const ExpParams& exp_params);

}  // namespace hgm

#endif
