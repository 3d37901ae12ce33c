#include "esum/general_sum.hpp"

namespace esum {

EvalReport general_harmonic_sum(const GeneralSum& g, const PrecReal& target_abs_err,
                                long precision_bits, const EvalConfig& cfg) {
  long wp = precision_bits + 32;
  ConstantsTable& tab = cfg.constants ? *cfg.constants : ConstantsTable::global();
  if (g.kpow < 0 || g.oddpow < 0 || g.kpow + g.oddpow < 2)
    throw std::invalid_argument("general_harmonic_sum: denominator degree must be >= 2");

  if (g.numerator.empty()) {
    // pure kernel, exact
    std::vector<PoleFactor> kernel;
    if (g.kpow > 0) kernel.push_back({PoleFamily::K, g.kpow});
    if (g.oddpow > 0) kernel.push_back({PoleFamily::Odd, g.oddpow});
    PrecReal v = kernel_sum_value(kernel, 1, precision_bits, tab);
    return {v, PrecReal::from_long(1, precision_bits).mul_2exp(-(precision_bits + 8)), 0, 0, 0.0};
  }

  auto run = [&](SummandSpec::DenomShape shape, int c, const PrecReal& tgt) {
    return evaluate_accelerated(SummandSpec::make(g.numerator, shape, c), tgt, precision_bits,
                                cfg);
  };

  if (g.kpow == 0) return run(SummandSpec::DenomShape::OddPow, g.oddpow, target_abs_err);
  if (g.oddpow == 0) return run(SummandSpec::DenomShape::KPow, g.kpow, target_abs_err);
  if (g.kpow == 1 && g.oddpow == 1)
    return run(SummandSpec::DenomShape::KTimesOdd, 0, target_abs_err);

  PFDecomposition d = partial_fractions(
      {{PoleFamily::K, g.kpow}, {PoleFamily::Odd, g.oddpow}});
  // collect pieces: (shape, power, rational coefficient)
  Rational k_marginal(0), odd_marginal(0);
  struct Piece {
    SummandSpec::DenomShape shape;
    int c;
    Rational coef;
  };
  std::vector<Piece> pieces;
  for (const auto& t : d.terms) {
    Rational c = t.coeff.eval(Rational(0));  // i-free
    if (c.is_zero()) continue;
    if (t.j == 1) {
      (t.fam == PoleFamily::K ? k_marginal : odd_marginal) += c;
      continue;
    }
    pieces.push_back({t.fam == PoleFamily::K ? SummandSpec::DenomShape::KPow
                                             : SummandSpec::DenomShape::OddPow,
                      t.j, c});
  }
  // c/k + d/(2k-1) with d = -2c collapses to -c/(k(2k-1))
  if (!(k_marginal + odd_marginal * Rational(1, 2)).is_zero())
    throw std::logic_error("general_harmonic_sum: marginal poles do not cancel");
  if (!k_marginal.is_zero())
    pieces.push_back({SummandSpec::DenomShape::KTimesOdd, 0, -k_marginal});

  PrecReal per_target =
      target_abs_err.with_precision(wp) / PrecReal::from_long(2 * static_cast<long>(pieces.size()), wp);
  EvalReport out{PrecReal(wp), PrecReal(wp), 0, 0, 0.0};
  for (const auto& p : pieces) {
    PrecReal scale = PrecReal::from_rational(p.coef, wp);
    EvalReport r = run(p.shape, p.c, per_target / (scale.abs() + PrecReal::from_long(1, wp)));
    out.value += scale * r.value;
    out.error_bound += scale.abs() * r.error_bound;
    out.terms_summed += r.terms_summed;
    out.tail_terms_used += r.tail_terms_used;
    out.wall_seconds += r.wall_seconds;
  }
  out.value = out.value.with_precision(precision_bits);
  out.error_bound = out.error_bound.with_precision(precision_bits);
  return out;
}

}  // namespace esum
