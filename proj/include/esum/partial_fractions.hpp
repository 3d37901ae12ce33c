#ifndef ESUM_PARTIAL_FRACTIONS_HPP
#define ESUM_PARTIAL_FRACTIONS_HPP

#include <string>
#include <vector>

#include "esum/expr.hpp"
#include "esum/polyq.hpp"

namespace esum {

// Linear pole families in the summation index k, with an integer parameter i:
//   K        : k            Odd      : 2k-1          OddPlus : 2k+1
//   PlusI    : k+i          Plus2I   : k+2i          OddShift: 2i+2k-1
enum class PoleFamily { K, Odd, OddPlus, PlusI, Plus2I, OddShift };

std::string pole_name(PoleFamily f);

// linear form a*k + b(i)
long pole_a(PoleFamily f);
Poly pole_b(PoleFamily f);  // polynomial in i

struct PoleFactor {
  PoleFamily fam;
  int exp{1};
};

struct PFTerm {
  PoleFamily fam;
  int j;          // pole power
  RatFunc coeff;  // rational function of i
};

struct PFDecomposition {
  std::vector<PoleFactor> kernel;
  std::vector<PFTerm> terms;
  std::string str() const;
};

// Exact decomposition of 1/prod (a_f k + b_f(i))^{e_f} into sum of
// coeff(i)/(a k + b)^j.  Poles must be pairwise distinct as functions of k
// for generic i.
PFDecomposition partial_fractions(const std::vector<PoleFactor>& kernel);

// Exact check: recombines the decomposition at integer (i, k) and compares
// with the kernel value (skips k that hits a pole).
bool pf_recombination_check(const PFDecomposition& d, long i, long k);

// Exact closed form of sum_{k>=1} 1/prod(poles) at integer parameter i >= 1:
// a ClosedForm over zeta(j) and ln2 plus an exact rational part from
// harmonic numbers at i.  The Euler-Mascheroni contributions of the simple
// poles cancel identically; this is asserted.
ClosedForm kernel_sum(const std::vector<PoleFactor>& kernel, long i);

// Same, evaluated numerically.
PrecReal kernel_sum_value(const std::vector<PoleFactor>& kernel, long i, long precision_bits,
                          ConstantsTable& tab);

}  // namespace esum

#endif
