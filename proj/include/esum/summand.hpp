#ifndef ESUM_SUMMAND_HPP
#define ESUM_SUMMAND_HPP

#include <string>
#include <vector>

#include "esum/harmonic.hpp"

namespace esum {

// Structural description of one Euler-sum term: a product of harmonic-number
// factors over one of three denominator shapes.
//
// Text form: numerator factors H<n> / h<n> with optional ^p joined by '*',
// denominator one of k^<c>, (2k-1)^<c>, k(2k-1).  Examples:
//   H2*h1/k^5    h1^2/(2k-1)^4    H3*H4/k(2k-1)    h1/k^3
struct SummandSpec {
  struct Factor {
    HarmonicKind kind;
    int power{1};
  };
  enum class DenomShape { KPow, OddPow, KTimesOdd };

  std::vector<Factor> numerator;  // canonical: sorted by kind, powers merged
  DenomShape shape{DenomShape::KPow};
  int denom_exp{2};  // c for KPow/OddPow; ignored for KTimesOdd

  static SummandSpec make(std::vector<Factor> num, DenomShape shape, int c);
  static SummandSpec parse(const std::string& text);
  std::string str() const;

  int denominator_weight() const {
    return shape == DenomShape::KTimesOdd ? 2 : denom_exp;
  }
  int numerator_weight() const {
    int w = 0;
    for (const auto& f : numerator) w += f.kind.order * f.power;
    return w;
  }
  int order() const { return numerator_weight() + denominator_weight(); }
  int degree() const {
    int d = 0;
    for (const auto& f : numerator) d += f.power;
    return d;
  }

  friend bool operator==(const SummandSpec& a, const SummandSpec& b) {
    if (a.shape != b.shape || a.numerator.size() != b.numerator.size()) return false;
    if (a.shape != DenomShape::KTimesOdd && a.denom_exp != b.denom_exp) return false;
    for (size_t i = 0; i < a.numerator.size(); ++i) {
      if (!(a.numerator[i].kind == b.numerator[i].kind) ||
          a.numerator[i].power != b.numerator[i].power)
        return false;
    }
    return true;
  }
  friend bool operator<(const SummandSpec& a, const SummandSpec& b) {
    return a.str() < b.str();
  }
};

struct DivergentSpecError : std::invalid_argument {
  explicit DivergentSpecError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace esum

#endif
