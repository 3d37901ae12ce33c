#ifndef ESUM_GENERAL_SUM_HPP
#define ESUM_GENERAL_SUM_HPP

#include "esum/partial_fractions.hpp"
#include "esum/series.hpp"

namespace esum {

// sum_{k>=1} (product of harmonic factors) / (k^p (2k-1)^q): the mixed
// denominator splits by exact partial fractions into engine-shaped pieces,
// with the two simple-pole marginals recombined into 1/(k(2k-1)).
struct GeneralSum {
  std::vector<SummandSpec::Factor> numerator;
  int kpow{0};
  int oddpow{0};
};

EvalReport general_harmonic_sum(const GeneralSum& g, const PrecReal& target_abs_err,
                                long precision_bits, const EvalConfig& cfg = {});

}  // namespace esum

#endif
