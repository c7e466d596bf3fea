#ifndef HGM_VERIFY_HPP
#define HGM_VERIFY_HPP

#include <cstdint>
#include <optional>

#include "hgm/fc.hpp"

namespace hgm {

// One named identity check. A structural failure (wrong shape, singular
// solve) reports residual = +inf instead of a number.
struct Check {
  std::string name;
  Real residual;
  Real tolerance;
  bool pass;
  bool skipped = false;  // SkippedShiftedCase and friends
  std::string context;
};

struct Report {
  std::string suite;
  uint64_t seed = 0;
  mpfr_prec_t precision_bits = kDefaultPrecision;
  double wall_time = 0.0;  // informational only, never serialized
  std::vector<Check> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass && !c.skipped) return false;
    return true;
  }
};

// 1e-40 at the default 256 bits, 2^(-prec/4) otherwise
Real default_tolerance(mpfr_prec_t prec);

Check make_check(std::string name, Real residual, Real tolerance,
                 std::string context);
Check make_structural_failure(std::string name, Real tolerance,
                              std::string context, const std::string& what);

// residual = max entry of |M H t(M^vee) - H|
Check check_h_invariance(const std::string& name, const CMatrix& M,
                         const CMatrix& H, const Real& tol,
                         const std::string& ctx);
// residual = max_l |det(id/A_l - M0 M1)|
Check check_spectrum_ghg(const CircuitSetGHG& set, const Real& tol,
                         const std::string& ctx);
// commutation and braid relations of the m+1 generators
Check check_fc_relations(const CircuitSetFC& set, const Real& tol,
                         const std::string& ctx);
// block diagonality of the N recursion plus block identification
std::vector<Check> check_reduction(const CircuitSetFC& set, const Real& tol,
                                   const std::string& ctx);

// the full per-set batteries
std::vector<Check> ghg_checks(const CircuitSetGHG& set, const Real& tol);
std::vector<Check> fc_checks(const CircuitSetFC& set, const Real& tol);

std::string ghg_context(const GHGParams& params);
std::string fc_context(const FCParams& params);

// per-trial sub-seed, splitmix64 over (seed, trial)
uint64_t trial_seed(uint64_t seed, uint64_t trial);

struct SuiteConfig {
  size_t trials = 10;
  uint64_t seed = 42;
  mpfr_prec_t precision_bits = kDefaultPrecision;
  std::optional<Real> tolerance;  // default_tolerance(prec) when unset
  unsigned jobs = 0;              // 0 = hardware concurrency
};

// sizes cycles through the given p (ghg) or m (fc) values per trial
Report run_suite_ghg(const std::vector<size_t>& ps, const SuiteConfig& cfg);
Report run_suite_fc(const std::vector<size_t>& ms, const SuiteConfig& cfg);

}  // namespace hgm

#endif
