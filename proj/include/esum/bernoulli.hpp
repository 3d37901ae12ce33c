#ifndef ESUM_BERNOULLI_HPP
#define ESUM_BERNOULLI_HPP

#include <vector>

#include "esum/rational.hpp"

namespace esum {

// B_0..B_n by the standard recurrence, exact.  B_1 = -1/2.
// Table is computed once up to B_40; requests beyond that throw.
const Rational& bernoulli(int n);

// Exact binomial coefficient.
Rational binomial(long n, long k);

// Rising factorial n(n+1)...(n+m-1), exact; m = 0 gives 1.
Rational rising(long n, long m);

}  // namespace esum

#endif
