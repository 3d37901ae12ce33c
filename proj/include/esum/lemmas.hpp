#ifndef ESUM_LEMMAS_HPP
#define ESUM_LEMMAS_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "esum/series.hpp"

namespace esum {

// Helper identities in an integer parameter i: two-valued functions defined
// by an inner infinite sum over k, with closed forms in harmonic numbers at
// i, constants, and exact finite prefix sums.  Master identities (relations
// between whole Euler sums for a fixed small parameter set) are registered
// with uses_i = false and enumerate their parameter instances instead.
struct LemmaDef {
  std::string id;
  std::string title;
  // correction note when the shipped closed form deviates from the source;
  // empty when the source form is shipped verbatim
  std::string note;
  bool uses_i{true};

  std::function<PrecReal(long i, long prec, const EvalConfig&)> direct;
  std::function<PrecReal(long i, long prec, const EvalConfig&)> closed;
  // forward-unrolled difference equation, when the proof provides one
  std::function<PrecReal(long i, long prec, const EvalConfig&)> recurrence;
  // raw partial sum over k = 1..K (i-parameterized helpers only)
  std::function<PrecReal(long i, long K, long prec)> partial;
};

const std::vector<LemmaDef>& lemma_registry();
const LemmaDef* lemma_find(const std::string& id);
// ids matching a user query: exact id, or prefix group like "4" -> 4a,4b,4c
std::vector<const LemmaDef*> lemma_select(const std::string& query);

struct HelperReport {
  std::string id;
  long i{0};
  PrecReal direct;
  PrecReal closed;
  PrecReal abs_diff;
  bool pass{false};
};

// |direct - closed| <= tol for i = 1..i_max (single shot when the lemma has
// no i parameter).
std::vector<HelperReport> lemma_verify(const LemmaDef& def, long i_max, const PrecReal& tol,
                                       long precision_bits, const EvalConfig& cfg = {});

// recurrence-unrolled value against the closed form for i = 1..i_max
std::vector<HelperReport> lemma_recurrence_check(const LemmaDef& def, long i_max,
                                                 const PrecReal& tol, long precision_bits,
                                                 const EvalConfig& cfg = {});

// Forward solution of F(i+1) = coeff(i) F(i) + g(i) from F(1).
PrecReal recurrence_unroll(const PrecReal& F1, const std::function<Rational(long)>& coeff,
                           const std::function<PrecReal(long)>& inhomogeneity, long i_target);

// Direct-summation front ends for the registered helpers.
// partial sum of the helper's inner sum over k = 1..K at parameter i
PrecReal helper_direct(const std::string& id, long i, long K, long precision_bits);
// accelerated inner sum (partial + Euler-Maclaurin tail)
PrecReal helper_direct_accel(const std::string& id, long i, long precision_bits,
                             const EvalConfig& cfg = {});
PrecReal helper_closed(const std::string& id, long i, long precision_bits,
                       const EvalConfig& cfg = {});

}  // namespace esum

#endif
