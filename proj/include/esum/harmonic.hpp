#ifndef ESUM_HARMONIC_HPP
#define ESUM_HARMONIC_HPP

#include <stdexcept>
#include <string>

#include "esum/asym.hpp"
#include "esum/rational.hpp"
#include "esum/real.hpp"

namespace esum {

// H_k^(n) = sum_{i<=k} 1/i^n  (FullH),  h_k^(n) = sum_{i<=k} 1/(2i-1)^n (OddH).
struct HarmonicKind {
  enum class Family { FullH, OddH };
  Family family{Family::FullH};
  int order{1};

  static HarmonicKind full(int n) {
    if (n < 1) throw std::invalid_argument("HarmonicKind: order must be >= 1");
    return {Family::FullH, n};
  }
  static HarmonicKind odd(int n) {
    if (n < 1) throw std::invalid_argument("HarmonicKind: order must be >= 1");
    return {Family::OddH, n};
  }
  bool is_full() const { return family == Family::FullH; }
  std::string str() const {
    return (is_full() ? "H" : "h") + std::to_string(order);
  }
  friend bool operator==(const HarmonicKind& a, const HarmonicKind& b) {
    return a.family == b.family && a.order == b.order;
  }
  friend bool operator<(const HarmonicKind& a, const HarmonicKind& b) {
    if (a.family != b.family) return a.family == Family::FullH;
    return a.order < b.order;
  }
};

Rational harmonic_exact(HarmonicKind kind, long k);

// Increment added when advancing from k to k+1.
Rational harmonic_increment(HarmonicKind kind, long k_next);

// Sequential generator of exact harmonic values.
class HarmonicStreamExact {
public:
  explicit HarmonicStreamExact(HarmonicKind kind) : kind_(kind) {}
  long k() const { return k_; }
  const Rational& value() const { return v_; }
  void advance() {
    ++k_;
    v_ += harmonic_increment(kind_, k_);
  }

private:
  HarmonicKind kind_;
  long k_{0};
  Rational v_{0};
};

// Sequential generator at fixed working precision.
class HarmonicStreamReal {
public:
  HarmonicStreamReal(HarmonicKind kind, long prec) : kind_(kind), v_(prec), tmp_(prec) {}
  long k() const { return k_; }
  const PrecReal& value() const { return v_; }
  void advance();
  void reset(long k, const PrecReal& v) {
    k_ = k;
    v_ = v;
  }

private:
  HarmonicKind kind_;
  long k_{0};
  PrecReal v_;
  PrecReal tmp_;
};

// h_k^(n) = H_{2k}^(n) - 2^{-n} H_k^(n); both overloads are exact in their type.
Rational odd_from_full(int n, const Rational& H2k, const Rational& Hk);
PrecReal odd_from_full(int n, const PrecReal& H2k, const PrecReal& Hk);

// Large-k expansion with exact coefficients:
//   FullH n=1 : ln k + gamma + 1/(2k) - sum B_{2j}/(2j k^{2j})
//   FullH n>=2: zeta(n) - 1/((n-1)k^{n-1}) + 1/(2k^n) - ...
//   OddH      : composed from the FullH expansions at 2k and k.
// num_terms counts retained entries (constant and 1/k^q terms alike), <= 20.
AsymSeries harmonic_tail_expansion(HarmonicKind kind, int num_terms);

// Engine-facing variant truncated by power of k instead of entry count.
AsymSeries harmonic_series_to(HarmonicKind kind, int qmax);

}  // namespace esum

#endif
