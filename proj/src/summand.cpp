#include "esum/summand.hpp"

#include <algorithm>
#include <cctype>

namespace esum {

namespace {

void validate(const SummandSpec& s) {
  for (const auto& f : s.numerator) {
    if (f.power < 1) throw std::invalid_argument("SummandSpec: factor power must be >= 1");
    if (f.kind.order < 1) throw std::invalid_argument("SummandSpec: factor order must be >= 1");
  }
  if (s.shape != SummandSpec::DenomShape::KTimesOdd && s.denom_exp < 1)
    throw std::invalid_argument("SummandSpec: denominator exponent must be >= 1");
  // Harmonic factors grow at most logarithmically, so an effective
  // denominator degree >= 2 is required for convergence.
  if (s.denominator_weight() < 2)
    throw DivergentSpecError("divergent sum: denominator degree " +
                             std::to_string(s.denominator_weight()) + " < 2 in " + s.str());
}

}  // namespace

SummandSpec SummandSpec::make(std::vector<Factor> num, DenomShape shape, int c) {
  SummandSpec s;
  s.numerator = std::move(num);
  s.shape = shape;
  s.denom_exp = shape == DenomShape::KTimesOdd ? 0 : c;
  // canonical order + merge equal kinds
  std::sort(s.numerator.begin(), s.numerator.end(),
            [](const Factor& a, const Factor& b) { return a.kind < b.kind; });
  std::vector<Factor> merged;
  for (const auto& f : s.numerator) {
    if (!merged.empty() && merged.back().kind == f.kind)
      merged.back().power += f.power;
    else
      merged.push_back(f);
  }
  s.numerator = std::move(merged);
  validate(s);
  return s;
}

std::string SummandSpec::str() const {
  std::string n;
  if (numerator.empty()) n = "1";
  for (const auto& f : numerator) {
    if (!n.empty()) n += "*";
    n += f.kind.str();
    if (f.power != 1) n += "^" + std::to_string(f.power);
  }
  std::string d;
  switch (shape) {
    case DenomShape::KPow: d = "k^" + std::to_string(denom_exp); break;
    case DenomShape::OddPow: d = "(2k-1)^" + std::to_string(denom_exp); break;
    case DenomShape::KTimesOdd: d = "k(2k-1)"; break;
  }
  return n + "/" + d;
}

SummandSpec SummandSpec::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  auto slash = s.find('/');
  if (slash == std::string::npos)
    throw std::invalid_argument("SummandSpec: missing '/' in '" + text + "'");
  std::string num = s.substr(0, slash);
  std::string den = s.substr(slash + 1);

  std::vector<Factor> factors;
  size_t i = 0;
  while (i < num.size()) {
    if (num[i] == '*') {
      ++i;
      continue;
    }
    if (num[i] == '1' && factors.empty() && i + 1 == num.size()) break;  // "1" numerator
    char fam = num[i];
    if (fam != 'H' && fam != 'h')
      throw std::invalid_argument("SummandSpec: bad factor in '" + text + "'");
    ++i;
    size_t j = i;
    while (j < num.size() && std::isdigit(static_cast<unsigned char>(num[j]))) ++j;
    if (j == i) throw std::invalid_argument("SummandSpec: factor needs an order in '" + text + "'");
    int order = std::stoi(num.substr(i, j - i));
    i = j;
    int power = 1;
    if (i < num.size() && num[i] == '^') {
      ++i;
      j = i;
      while (j < num.size() && std::isdigit(static_cast<unsigned char>(num[j]))) ++j;
      if (j == i) throw std::invalid_argument("SummandSpec: missing power in '" + text + "'");
      power = std::stoi(num.substr(i, j - i));
      i = j;
    }
    factors.push_back({fam == 'H' ? HarmonicKind::full(order) : HarmonicKind::odd(order), power});
  }

  DenomShape shape;
  int c = 0;
  if (den == "k(2k-1)" || den == "(2k-1)k") {
    shape = DenomShape::KTimesOdd;
  } else if (den.rfind("k^", 0) == 0) {
    shape = DenomShape::KPow;
    c = std::stoi(den.substr(2));
  } else if (den == "k") {
    shape = DenomShape::KPow;
    c = 1;
  } else if (den.rfind("(2k-1)^", 0) == 0) {
    shape = DenomShape::OddPow;
    c = std::stoi(den.substr(7));
  } else if (den == "(2k-1)") {
    shape = DenomShape::OddPow;
    c = 1;
  } else {
    throw std::invalid_argument("SummandSpec: bad denominator '" + den + "'");
  }
  return make(std::move(factors), shape, c);
}

}  // namespace esum
