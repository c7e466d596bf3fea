#include "hgm/fc.hpp"

namespace hgm {

std::vector<size_t> SubsetIndex::members() const {
  std::vector<size_t> out;
  for (size_t i = 1; i <= m; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

CMatrix build_fc_mi(size_t i, const ExpParams& exp_params) {
  size_t m = exp_params.B.size();
  if (i < 1 || i > m) throw InvalidParams("generator index out of range");
  mpfr_prec_t prec = exp_params.prec;
  Complex binv = inv(exp_params.B[i - 1]);
  std::vector<Complex> d;
  d.reserve(size_t(1) << m);
  for (uint32_t mask = 0; mask < (1u << m); ++mask) {
    SubsetIndex J{m, mask};
    d.push_back(J.contains(i) ? binv : Complex::one(prec));
  }
  return CMatrix::diagonal(d);
}

CMatrix build_fc_h(const ExpParams& exp_params) {
  size_t m = exp_params.B.size();
  mpfr_prec_t prec = exp_params.prec;
  Complex one = Complex::one(prec);
  Complex a_den = (exp_params.A[0] - one) * (exp_params.A[1] - one);
  std::vector<Complex> d;
  d.reserve(size_t(1) << m);
  for (uint32_t mask = 0; mask < (1u << m); ++mask) {
    SubsetIndex J{m, mask};
    Complex bprod(1, prec);
    for (size_t j : J.members()) bprod *= exp_params.B[j - 1];
    Complex h = ((exp_params.A[0] - bprod) * (exp_params.A[1] - bprod)) /
                (a_den * bprod);
    if (J.cardinality() % 2 == 1) h = -h;
    d.push_back(h);
  }
  return CMatrix::diagonal(d);
}

Complex lambda_fc(const ExpParams& exp_params) {
  size_t m = exp_params.B.size();
  Complex num(1, exp_params.prec);
  for (const auto& b : exp_params.B) num *= b;
  Complex l = num / (exp_params.A[0] * exp_params.A[1]);
  if (m % 2 == 0) l = -l;  // sign (-1)^{m+1}
  return l;
}

CMatrix build_fc_mlast(const ExpParams& exp_params) {
  return build_reflection(build_fc_h(exp_params), lambda_fc(exp_params));
}

CircuitSetFC build_circuit_set_fc(const FCParams& params, mpfr_prec_t prec) {
  if (params.m() > 10) throw MTooLarge("m > 10: dense 2^m construction refused");
  if (auto v = validate_fc(params); !v.empty())
    throw InvalidParams(violations_message(v));
  ExpParams exp_params = exponentiate(params, prec);
  std::vector<CMatrix> M;
  for (size_t i = 1; i <= params.m(); ++i)
    M.push_back(build_fc_mi(i, exp_params));
  CMatrix H = build_fc_h(exp_params);
  Complex lambda = lambda_fc(exp_params);
  CMatrix Mlast = build_reflection(H, lambda);
  return CircuitSetFC{params, std::move(exp_params), std::move(M),
                      std::move(Mlast), std::move(H), std::move(lambda)};
}

FCParams shifted_fc_params(const FCParams& params) {
  FCParams out;
  Rational bm = params.b.back();
  out.a1 = params.a1 - bm;
  out.a2 = params.a2 - bm;
  out.b.assign(params.b.begin(), params.b.end() - 1);
  return out;
}

FCParams truncated_fc_params(const FCParams& params) {
  FCParams out;
  out.a1 = params.a1;
  out.a2 = params.a2;
  out.b.assign(params.b.begin(), params.b.end() - 1);
  return out;
}

std::vector<CMatrix> reduction_sequence(const CircuitSetFC& set) {
  size_t m = set.m();
  if (m < 2) throw InvalidParams("reduction needs m >= 2");
  std::vector<CMatrix> out;
  CMatrix n_cur = set.Mlast * set.M[m - 1] * set.Mlast * set.M[m - 1].inverse();
  out.push_back(n_cur);
  for (size_t k = 1; k + 1 < m; ++k) {
    const CMatrix& gen = set.M[m - k - 1];
    n_cur = n_cur * gen * n_cur * gen.inverse();
    out.push_back(n_cur);
  }
  return out;
}

Real off_block_mass(const CMatrix& N, size_t block_size) {
  size_t n = N.n();
  Real mass(0, N.prec());
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if ((i / block_size) != (j / block_size)) {
        Real a = abs(N.at(i, j));
        if (a > mass) mass = a;
      }
  return mass;
}

std::vector<CMatrix> diagonal_blocks(const CMatrix& N, size_t block_size,
                                     const Real& tol) {
  if (N.n() % block_size != 0)
    throw BlockStructureViolation("block size does not divide matrix size");
  Real mass = off_block_mass(N, block_size);
  if (mass > tol)
    throw BlockStructureViolation("off-block mass " + mass.str(6) +
                                  " above tolerance");
  std::vector<CMatrix> blocks;
  for (size_t k = 0; k < N.n() / block_size; ++k)
    blocks.push_back(N.block(k * block_size, k * block_size, block_size));
  return blocks;
}

Complex fc_singular_poly(size_t m, const std::vector<Complex>& x) {
  if (x.size() != m) throw DimensionMismatch("fc_singular_poly: bad arity");
  mpfr_prec_t prec = m ? x[0].prec() : kDefaultPrecision;
  std::vector<Complex> roots;
  roots.reserve(m);
  for (const auto& xi : x) roots.push_back(sqrt(xi));
  Complex r(1, prec);
  for (uint32_t signs = 0; signs < (1u << m); ++signs) {
    Complex f = Complex::one(prec);
    for (size_t j = 0; j < m; ++j) {
      if (signs & (1u << j))
        f -= roots[j];
      else
        f += roots[j];
    }
    r *= f;
  }
  for (const auto& xi : x) r *= xi;
  return r;
}

Complex fc_trace_h(const ExpParams& exp_params) {
  size_t m = exp_params.B.size();
  mpfr_prec_t prec = exp_params.prec;
  Complex one = Complex::one(prec);
  Complex bprod(1, prec), bfact(1, prec);
  for (const auto& b : exp_params.B) {
    bprod *= b;
    bfact *= (b - one);
  }
  Complex signed_b = (m % 2 == 0) ? bprod : -bprod;
  return ((exp_params.A[0] * exp_params.A[1] + signed_b) * bfact) /
         ((exp_params.A[0] - one) * (exp_params.A[1] - one) * bprod);
}

}  // namespace hgm
