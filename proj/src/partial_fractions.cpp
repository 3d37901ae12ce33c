#include "esum/partial_fractions.hpp"

#include <algorithm>
#include <stdexcept>

#include "esum/bernoulli.hpp"
#include "esum/constants.hpp"
#include "esum/harmonic.hpp"

namespace esum {

std::string pole_name(PoleFamily f) {
  switch (f) {
    case PoleFamily::K: return "k";
    case PoleFamily::Odd: return "2k-1";
    case PoleFamily::OddPlus: return "2k+1";
    case PoleFamily::PlusI: return "k+i";
    case PoleFamily::Plus2I: return "k+2i";
    case PoleFamily::OddShift: return "2i+2k-1";
  }
  return "?";
}

long pole_a(PoleFamily f) {
  switch (f) {
    case PoleFamily::K:
    case PoleFamily::PlusI:
    case PoleFamily::Plus2I: return 1;
    default: return 2;
  }
}

Poly pole_b(PoleFamily f) {
  switch (f) {
    case PoleFamily::K: return Poly();
    case PoleFamily::Odd: return Poly(Rational(-1));
    case PoleFamily::OddPlus: return Poly(Rational(1));
    case PoleFamily::PlusI: return Poly::x();
    case PoleFamily::Plus2I: return Poly::x().scaled(Rational(2));
    case PoleFamily::OddShift: return Poly::linear(Rational(-1), Rational(2));
  }
  return Poly();
}

std::string PFDecomposition::str() const {
  std::string s;
  for (const auto& t : terms) {
    if (!s.empty()) s += " + ";
    s += "[" + t.coeff.str() + "]/(" + pole_name(t.fam) + ")^" + std::to_string(t.j);
  }
  return s;
}

PFDecomposition partial_fractions(const std::vector<PoleFactor>& kernel_in) {
  // merge duplicate families
  std::vector<PoleFactor> kernel;
  for (const auto& p : kernel_in) {
    if (p.exp < 1) throw std::invalid_argument("partial_fractions: exponent must be >= 1");
    bool merged = false;
    for (auto& q : kernel)
      if (q.fam == p.fam) {
        q.exp += p.exp;
        merged = true;
      }
    if (!merged) kernel.push_back(p);
  }
  if (kernel.empty()) throw std::invalid_argument("partial_fractions: empty kernel");

  PFDecomposition out;
  out.kernel = kernel;
  if (kernel.size() == 1) {
    out.terms.push_back({kernel[0].fam, kernel[0].exp, RatFunc(Rational(1))});
    return out;
  }

  for (const auto& P : kernel) {
    RatFunc aP{Rational(pole_a(P.fam))};
    RatFunc bP{RatFunc(Poly(pole_b(P.fam)), Poly(Rational(1)))};
    // series of prod_{f != P} (alpha_f u + beta_f)^{-e_f} around u = 0
    std::vector<RatFunc> series(static_cast<size_t>(P.exp), RatFunc());
    series[0] = RatFunc(Rational(1));
    for (const auto& F : kernel) {
      if (F.fam == P.fam) continue;
      RatFunc alpha = RatFunc(Rational(pole_a(F.fam))) / aP;
      RatFunc beta =
          RatFunc(Poly(pole_b(F.fam)), Poly(Rational(1))) - alpha * bP;
      if (beta.is_zero())
        throw std::invalid_argument("partial_fractions: coincident poles " +
                                    pole_name(P.fam) + " and " + pole_name(F.fam));
      // (alpha u + beta)^{-e} = sum_m (-1)^m C(e+m-1,m) alpha^m beta^{-e-m} u^m
      std::vector<RatFunc> fs(static_cast<size_t>(P.exp), RatFunc());
      RatFunc ratio = alpha / beta;
      RatFunc betainv_e = RatFunc(Rational(1));
      for (int t = 0; t < F.exp; ++t) betainv_e = betainv_e / beta;
      RatFunc cur = betainv_e;
      for (int m = 0; m < P.exp; ++m) {
        Rational sign = (m % 2 == 0) ? Rational(1) : Rational(-1);
        fs[static_cast<size_t>(m)] = cur * RatFunc(sign * binomial(F.exp + m - 1, m));
        cur = cur * ratio;
      }
      // multiply truncated series
      std::vector<RatFunc> next(static_cast<size_t>(P.exp), RatFunc());
      for (int m = 0; m < P.exp; ++m)
        for (int r = 0; r + m < P.exp; ++r) next[static_cast<size_t>(m + r)] =
            next[static_cast<size_t>(m + r)] + series[static_cast<size_t>(r)] * fs[static_cast<size_t>(m)];
      series = std::move(next);
    }
    for (int r = 0; r < P.exp; ++r) {
      if (series[static_cast<size_t>(r)].is_zero()) continue;
      out.terms.push_back({P.fam, P.exp - r, series[static_cast<size_t>(r)]});
    }
  }
  return out;
}

namespace {

Rational pole_value_at(PoleFamily f, long i, long k) {
  switch (f) {
    case PoleFamily::K: return Rational(k);
    case PoleFamily::Odd: return Rational(2 * k - 1);
    case PoleFamily::OddPlus: return Rational(2 * k + 1);
    case PoleFamily::PlusI: return Rational(k + i);
    case PoleFamily::Plus2I: return Rational(k + 2 * i);
    case PoleFamily::OddShift: return Rational(2 * i + 2 * k - 1);
  }
  return Rational(1);
}

}  // namespace

bool pf_recombination_check(const PFDecomposition& d, long i, long k) {
  Rational kernel(1);
  for (const auto& p : d.kernel) {
    Rational v = pole_value_at(p.fam, i, k);
    if (v.is_zero()) return true;  // pole hit; nothing to compare
    kernel *= v.pow(p.exp);
  }
  Rational lhs = kernel.reciprocal();
  Rational rhs(0);
  for (const auto& t : d.terms) {
    Rational v = pole_value_at(t.fam, i, k);
    if (v.is_zero()) return true;
    rhs += t.coeff.eval(Rational(i)) / v.pow(t.j);
  }
  return lhs == rhs;
}

ClosedForm kernel_sum(const std::vector<PoleFactor>& kernel, long i) {
  if (i < 1) throw std::invalid_argument("kernel_sum: i must be >= 1");
  int total = 0;
  for (const auto& p : kernel) total += p.exp;
  if (total < 2) throw std::invalid_argument("kernel_sum: divergent kernel");

  PFDecomposition d = partial_fractions(kernel);
  ClosedForm out;
  Rational gamma_coef(0);
  Rational ii(i);

  for (const auto& t : d.terms) {
    Rational c = t.coeff.eval(ii);
    if (c.is_zero()) continue;
    if (t.j >= 2) {
      switch (t.fam) {
        case PoleFamily::K:
          out += ClosedForm::atom(Atom::zeta(t.j), c);
          break;
        case PoleFamily::Odd:
          out += ClosedForm::atom(Atom::zeta(t.j), c * (Rational(1) - Rational::pow2(-t.j)));
          break;
        case PoleFamily::OddPlus:
          out += ClosedForm::atom(Atom::zeta(t.j), c * (Rational(1) - Rational::pow2(-t.j)));
          out += ClosedForm::constant(-c);
          break;
        case PoleFamily::PlusI:
          out += ClosedForm::atom(Atom::zeta(t.j), c);
          out += ClosedForm::constant(-c * harmonic_exact(HarmonicKind::full(t.j), i));
          break;
        case PoleFamily::Plus2I:
          out += ClosedForm::atom(Atom::zeta(t.j), c);
          out += ClosedForm::constant(-c * harmonic_exact(HarmonicKind::full(t.j), 2 * i));
          break;
        case PoleFamily::OddShift:
          out += ClosedForm::atom(Atom::zeta(t.j), c * (Rational(1) - Rational::pow2(-t.j)));
          out += ClosedForm::constant(-c * harmonic_exact(HarmonicKind::odd(t.j), i));
          break;
      }
      continue;
    }
    // simple pole: contributes -(c/a) psi(1 + b/a); gamma parts cancel overall
    Rational ca = c / Rational(pole_a(t.fam));
    gamma_coef += ca;  // psi always carries -gamma
    switch (t.fam) {
      case PoleFamily::K:
        break;  // psi(1) = -gamma
      case PoleFamily::Odd:
        // psi(1/2) = -gamma - 2 ln2
        out += ClosedForm::atom(Atom::ln2(), ca * Rational(2));
        break;
      case PoleFamily::OddPlus:
        // psi(3/2) = -gamma - 2 ln2 + 2
        out += ClosedForm::atom(Atom::ln2(), ca * Rational(2));
        out += ClosedForm::constant(-ca * Rational(2));
        break;
      case PoleFamily::PlusI:
        // psi(1+i) = -gamma + H_i
        out += ClosedForm::constant(-ca * harmonic_exact(HarmonicKind::full(1), i));
        break;
      case PoleFamily::Plus2I:
        out += ClosedForm::constant(-ca * harmonic_exact(HarmonicKind::full(1), 2 * i));
        break;
      case PoleFamily::OddShift:
        // psi(i+1/2) = -gamma - 2 ln2 + 2 h_i
        out += ClosedForm::atom(Atom::ln2(), ca * Rational(2));
        out += ClosedForm::constant(-ca * Rational(2) * harmonic_exact(HarmonicKind::odd(1), i));
        break;
    }
  }
  if (!gamma_coef.is_zero())
    throw std::logic_error("kernel_sum: gamma failed to cancel (divergent kernel?)");
  return out;
}

PrecReal kernel_sum_value(const std::vector<PoleFactor>& kernel, long i, long precision_bits,
                          ConstantsTable& tab) {
  return cf_eval(kernel_sum(kernel, i), precision_bits, tab);
}

}  // namespace esum
