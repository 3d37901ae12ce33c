#ifndef ESUM_EXPR_HPP
#define ESUM_EXPR_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "esum/rational.hpp"
#include "esum/real.hpp"

namespace esum {

class ConstantsTable;

// ---------------------------------------------------------------------------
// Atoms of the constant basis: zeta(n), ln2, gamma, sigma(m) = sum h_k/k^m
// (m odd), tau(n) = sum H^(2)_k/k^n (n even).
// ---------------------------------------------------------------------------
struct Atom {
  enum class Kind { Zeta, Ln2, Gamma, SigmaOdd, TauH2 };

  Kind kind{Kind::Ln2};
  int param{0};

  static Atom zeta(int n) {
    if (n < 2) throw std::invalid_argument("Atom: zeta argument must be >= 2");
    return Atom{Kind::Zeta, n};
  }
  static Atom ln2() { return Atom{Kind::Ln2, 0}; }
  static Atom gamma() { return Atom{Kind::Gamma, 0}; }
  static Atom sigma(int m) {
    if (m != 3 && m != 5 && m != 7 && m != 9)
      throw std::invalid_argument("Atom: sigma parameter must be one of 3,5,7,9");
    return Atom{Kind::SigmaOdd, m};
  }
  static Atom tau(int n) {
    if (n != 6 && n != 8)
      throw std::invalid_argument("Atom: tau parameter must be 6 or 8");
    return Atom{Kind::TauH2, n};
  }

  int weight() const {
    switch (kind) {
      case Kind::Zeta: return param;
      case Kind::Ln2:
      case Kind::Gamma: return 1;
      case Kind::SigmaOdd: return param + 1;
      case Kind::TauH2: return param + 2;
    }
    return 0;
  }

  std::string name() const;
  static Atom parse(const std::string& s);

  friend bool operator==(const Atom& a, const Atom& b) {
    return a.kind == b.kind && a.param == b.param;
  }
  friend bool operator<(const Atom& a, const Atom& b) {
    if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
    return a.param < b.param;
  }
};

inline constexpr int kWeightCap = 12;

// Sorted multiset of atoms.  Total weight is capped; construction beyond the
// cap throws WeightCapError naming the offending monomial.
struct WeightCapError : std::runtime_error {
  explicit WeightCapError(const std::string& mono)
      : std::runtime_error("monomial exceeds weight cap " + std::to_string(kWeightCap) +
                           ": " + mono) {}
};

class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::vector<Atom> factors);

  static Monomial one() { return Monomial(); }
  static Monomial single(const Atom& a) { return Monomial(std::vector<Atom>{a}); }

  const std::vector<Atom>& factors() const { return f_; }
  bool empty() const { return f_.empty(); }
  int weight() const;
  bool contains(Atom::Kind k) const;

  Monomial times(const Monomial& o) const;

  std::string str() const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.f_ == b.f_; }
  friend bool operator<(const Monomial& a, const Monomial& b);

private:
  std::vector<Atom> f_;  // sorted
};

// Exact rational linear combination of monomials.  Zero coefficients are
// never stored.
class ClosedForm {
public:
  using TermMap = std::map<Monomial, Rational>;

  ClosedForm() = default;
  static ClosedForm zero() { return ClosedForm(); }
  static ClosedForm constant(const Rational& c);
  static ClosedForm atom(const Atom& a, const Rational& c = Rational(1));
  static ClosedForm term(const Monomial& m, const Rational& c);

  const TermMap& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  size_t size() const { return t_.size(); }

  void add_term(const Monomial& m, const Rational& c);

  friend ClosedForm operator+(const ClosedForm& a, const ClosedForm& b);
  friend ClosedForm operator-(const ClosedForm& a, const ClosedForm& b);
  ClosedForm operator-() const;
  ClosedForm scaled(const Rational& q) const;
  friend ClosedForm operator*(const ClosedForm& a, const ClosedForm& b);
  ClosedForm& operator+=(const ClosedForm& b) { return *this = *this + b; }
  ClosedForm& operator-=(const ClosedForm& b) { return *this = *this - b; }

  friend bool operator==(const ClosedForm& a, const ClosedForm& b) { return a.t_ == b.t_; }

  bool contains_kind(Atom::Kind k) const;
  int max_weight() const;

  std::string str() const;
  static ClosedForm parse(const std::string& s);

  // JSON object mapping monomial strings to "num/den" coefficient strings.
  std::string to_json() const;

private:
  TermMap t_;
};

ClosedForm cf_add(const ClosedForm& a, const ClosedForm& b);
ClosedForm cf_scale(const Rational& q, const ClosedForm& a);
ClosedForm cf_mul(const ClosedForm& a, const ClosedForm& b);

// Numeric evaluation over the constants table; accumulation happens at
// precision_bits + 64 guard bits, result is rounded to precision_bits.
PrecReal cf_eval(const ClosedForm& f, long precision_bits, ConstantsTable& tab);

// Folds every product of even-argument zetas inside a monomial into a single
// zeta of the combined weight (zeta(2a)zeta(2b) is a rational multiple of
// zeta(2a+2b)).  Canonical form for structural comparisons.
ClosedForm cf_normalize_even_zeta(const ClosedForm& f);

// Exact ratio zeta(2a)zeta(2b)/zeta(2a+2b).
Rational even_zeta_product_ratio(int a2, int b2);

// Classical reduction of sum_{k>=1} H_k/k^m for m >= 2:
//   (1 + m/2) zeta(m+1) - (1/2) sum_{i=1}^{m-2} zeta(i+1) zeta(m-i)
// returned with even-zeta products folded.
ClosedForm euler_linear_reduction(int m);

// The symmetry relation sum H^(a)/k^b + sum H^(b)/k^a = zeta(a)zeta(b) + zeta(a+b),
// a,b >= 2, as a checkable record.
struct SymmetryRelation {
  int a{2};
  int b{2};
  ClosedForm rhs;
};
SymmetryRelation symmetry_reduction(int a, int b);

}  // namespace esum

#endif
