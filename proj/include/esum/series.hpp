#ifndef ESUM_SERIES_HPP
#define ESUM_SERIES_HPP

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "esum/asym.hpp"
#include "esum/constants.hpp"
#include "esum/summand.hpp"

namespace esum {

struct EvalConfig {
  long start_cutoff = 10000;   // initial direct-summation cutoff K
  int expansion_order = 10;    // asymptotic orders kept beyond the leading power
  long max_terms = 1000000000; // direct-summand safety cap
  int max_attempts = 12;
  int threads = 1;
  ConstantsTable* constants = nullptr;  // defaults to the global table
};

struct EvalReport {
  PrecReal value;
  PrecReal error_bound;
  long terms_summed{0};
  long tail_terms_used{0};
  double wall_seconds{0.0};
};

struct NonConvergentError : std::runtime_error {
  explicit NonConvergentError(const std::string& diag) : std::runtime_error(diag) {}
};

// Exact closed form of int_K^inf (ln x)^p / x^q dx  (q >= 2):
//   sum_{j=0}^{p} p!/(p-j)!  (ln K)^{p-j} / ((q-1)^{j+1} K^{q-1})
PrecReal tail_integral(int p, int q, const PrecReal& K);

// sum_{k>K} (ln k)^p / k^q by Euler-Maclaurin with exact derivative
// coefficients; .error is the magnitude of the first omitted correction.
struct TailValue {
  PrecReal value;
  PrecReal error;
};
TailValue log_power_tail(int p, int q, long K, long prec, int em_terms = 14);

// Asymptotic expansion of the full summand (numerator product over the
// denominator shape), exact coefficients, truncated at k-power qmax.
AsymSeries summand_series(const SummandSpec& spec, int qmax);

// Euler-Maclaurin tail of an arbitrary asymptotic series at cutoff K: the
// two highest retained orders feed the error estimate instead of the value.
TailValue asym_tail(const AsymSeries& s, long K, long precision_bits, ConstantsTable& tab);

// Direct summation sum_{k=1}^{K} summand(k) with incremental harmonic
// recurrences.  Accumulation runs over fixed 2^16-element blocks folded in
// block order, so results are bit-identical for any thread count.
PrecReal partial_sum(const SummandSpec& spec, long K, long precision_bits, int threads = 1);

// Resumable direct summation (used by the doubling checks).
class DirectSummer {
public:
  DirectSummer(const SummandSpec& spec, long precision_bits, int threads = 1);
  ~DirectSummer();
  DirectSummer(const DirectSummer&) = delete;
  DirectSummer& operator=(const DirectSummer&) = delete;

  void extend(long K);     // sum through k = K (no-op if already there)
  PrecReal total() const;  // block-folded sum over k = 1..current
  long current() const;

private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Direct summation to an adaptive cutoff plus an Euler-Maclaurin tail from
// the summand's asymptotic expansion.  The reported error bound combines the
// first omitted expansion order, the Euler-Maclaurin remainders and a
// doubling-K consistency check.
EvalReport evaluate_accelerated(const SummandSpec& spec, const PrecReal& target_abs_err,
                                long precision_bits, const EvalConfig& cfg = {});

// Same, with the target given as a decimal string like "1e-20".
EvalReport evaluate_accelerated(const SummandSpec& spec, const std::string& target_abs_err,
                                long precision_bits, const EvalConfig& cfg = {});

// Simple monotone upper bound on sum_{k>K} summand(k), independent of the
// expansion machinery: every harmonic factor is bounded by its limit (or by
// 1 + ln k / (1 + (1/2) ln k) for order 1) and the resulting elementary tail
// is integrated in closed form.  Used as the brute-force oracle's tail bound.
PrecReal crude_tail_bound(const SummandSpec& spec, long K, long precision_bits);

}  // namespace esum

#endif
