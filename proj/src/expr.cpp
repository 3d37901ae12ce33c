#include "esum/expr.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "esum/bernoulli.hpp"
#include "esum/constants.hpp"

namespace esum {

// ----------------------------------------------------------------- Atom ----

std::string Atom::name() const {
  switch (kind) {
    case Kind::Zeta: return "zeta(" + std::to_string(param) + ")";
    case Kind::Ln2: return "ln2";
    case Kind::Gamma: return "gamma";
    case Kind::SigmaOdd: return "sigma(" + std::to_string(param) + ")";
    case Kind::TauH2: return "tau(" + std::to_string(param) + ")";
  }
  return "?";
}

Atom Atom::parse(const std::string& s) {
  if (s == "ln2") return ln2();
  if (s == "gamma") return gamma();
  auto paren = s.find('(');
  if (paren != std::string::npos && s.back() == ')') {
    std::string head = s.substr(0, paren);
    int p = std::stoi(s.substr(paren + 1, s.size() - paren - 2));
    if (head == "zeta") return zeta(p);
    if (head == "sigma") return sigma(p);
    if (head == "tau") return tau(p);
  }
  throw std::invalid_argument("Atom: cannot parse '" + s + "'");
}

// ------------------------------------------------------------- Monomial ----

Monomial::Monomial(std::vector<Atom> factors) : f_(std::move(factors)) {
  std::sort(f_.begin(), f_.end());
  int w = 0;
  for (const auto& a : f_) w += a.weight();
  if (w > kWeightCap) {
    std::string s;
    for (const auto& a : f_) {
      if (!s.empty()) s += "*";
      s += a.name();
    }
    throw WeightCapError(s);
  }
}

int Monomial::weight() const {
  int w = 0;
  for (const auto& a : f_) w += a.weight();
  return w;
}

bool Monomial::contains(Atom::Kind k) const {
  for (const auto& a : f_)
    if (a.kind == k) return true;
  return false;
}

Monomial Monomial::times(const Monomial& o) const {
  std::vector<Atom> all = f_;
  all.insert(all.end(), o.f_.begin(), o.f_.end());
  return Monomial(std::move(all));
}

std::string Monomial::str() const {
  if (f_.empty()) return "1";
  std::string s;
  for (const auto& a : f_) {
    if (!s.empty()) s += "*";
    s += a.name();
  }
  return s;
}

bool operator<(const Monomial& a, const Monomial& b) {
  return std::lexicographical_compare(a.f_.begin(), a.f_.end(), b.f_.begin(), b.f_.end(),
                                      [](const Atom& x, const Atom& y) { return x < y; });
}

// ------------------------------------------------------------ ClosedForm ----

ClosedForm ClosedForm::constant(const Rational& c) {
  ClosedForm f;
  f.add_term(Monomial::one(), c);
  return f;
}

ClosedForm ClosedForm::atom(const Atom& a, const Rational& c) {
  ClosedForm f;
  f.add_term(Monomial::single(a), c);
  return f;
}

ClosedForm ClosedForm::term(const Monomial& m, const Rational& c) {
  ClosedForm f;
  f.add_term(m, c);
  return f;
}

void ClosedForm::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto it = t_.find(m);
  if (it == t_.end()) {
    t_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) t_.erase(it);
}

ClosedForm operator+(const ClosedForm& a, const ClosedForm& b) {
  ClosedForm r = a;
  for (const auto& [m, c] : b.t_) r.add_term(m, c);
  return r;
}

ClosedForm operator-(const ClosedForm& a, const ClosedForm& b) {
  ClosedForm r = a;
  for (const auto& [m, c] : b.t_) r.add_term(m, -c);
  return r;
}

ClosedForm ClosedForm::operator-() const {
  ClosedForm r;
  for (const auto& [m, c] : t_) r.add_term(m, -c);
  return r;
}

ClosedForm ClosedForm::scaled(const Rational& q) const {
  ClosedForm r;
  if (q.is_zero()) return r;
  for (const auto& [m, c] : t_) r.add_term(m, c * q);
  return r;
}

ClosedForm operator*(const ClosedForm& a, const ClosedForm& b) {
  ClosedForm r;
  for (const auto& [ma, ca] : a.t_)
    for (const auto& [mb, cb] : b.t_) r.add_term(ma.times(mb), ca * cb);
  return r;
}

bool ClosedForm::contains_kind(Atom::Kind k) const {
  for (const auto& [m, c] : t_)
    if (m.contains(k)) return true;
  return false;
}

int ClosedForm::max_weight() const {
  int w = 0;
  for (const auto& [m, c] : t_) w = std::max(w, m.weight());
  return w;
}

std::string ClosedForm::str() const {
  if (t_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : t_) {
    std::string cs = c.str();
    if (s.empty()) {
      s = cs;
    } else if (cs[0] == '-') {
      s += " - " + cs.substr(1);
    } else {
      s += " + " + cs;
    }
    if (!m.empty()) s += "*" + m.str();
  }
  return s;
}

namespace {

void skip_ws(const std::string& s, size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

// token up to next top-level whitespace, '+', '-' or '*'
std::string read_factor(const std::string& s, size_t& i) {
  size_t start = i;
  int depth = 0;
  while (i < s.size()) {
    char c = s[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth == 0 && (c == '*' || c == '+' || c == '-' || std::isspace(static_cast<unsigned char>(c))))
      break;
    ++i;
  }
  return s.substr(start, i - start);
}

bool is_rational_token(const std::string& t) {
  if (t.empty()) return false;
  for (char c : t)
    if (!std::isdigit(static_cast<unsigned char>(c)) && c != '/' && c != '-') return false;
  return std::isdigit(static_cast<unsigned char>(t.back()));
}

}  // namespace

ClosedForm ClosedForm::parse(const std::string& s) {
  ClosedForm f;
  size_t i = 0;
  skip_ws(s, i);
  if (s.compare(i, 1, "0") == 0 && i + 1 >= s.size()) return f;
  bool neg = false;
  bool expect_term = true;
  Rational coeff(1);
  std::vector<Atom> mono;
  bool have_any = false;
  auto flush = [&]() {
    if (!have_any) return;
    Rational c = neg ? -coeff : coeff;
    f.add_term(Monomial(mono), c);
    coeff = Rational(1);
    mono.clear();
    neg = false;
    have_any = false;
  };
  while (i < s.size()) {
    skip_ws(s, i);
    if (i >= s.size()) break;
    char c = s[i];
    if (c == '+') {
      flush();
      expect_term = true;
      ++i;
      continue;
    }
    if (c == '-' && expect_term) {
      neg = !neg;
      ++i;
      continue;
    }
    if (c == '-') {
      flush();
      neg = true;
      expect_term = true;
      ++i;
      continue;
    }
    if (c == '*') {
      ++i;
      continue;
    }
    std::string tok = read_factor(s, i);
    if (tok.empty()) throw std::invalid_argument("ClosedForm: parse error in '" + s + "'");
    if (is_rational_token(tok)) {
      coeff *= Rational(tok);
    } else {
      mono.push_back(Atom::parse(tok));
    }
    have_any = true;
    expect_term = false;
  }
  flush();
  return f;
}

std::string ClosedForm::to_json() const {
  std::string s = "{";
  bool first = true;
  for (const auto& [m, c] : t_) {
    if (!first) s += ",";
    first = false;
    s += "\"" + m.str() + "\":\"" + c.str() + "\"";
  }
  s += "}";
  return s;
}

ClosedForm cf_add(const ClosedForm& a, const ClosedForm& b) { return a + b; }
ClosedForm cf_scale(const Rational& q, const ClosedForm& a) { return a.scaled(q); }
ClosedForm cf_mul(const ClosedForm& a, const ClosedForm& b) { return a * b; }

PrecReal cf_eval(const ClosedForm& f, long precision_bits, ConstantsTable& tab) {
  long wp = precision_bits + 64;
  PrecReal acc(wp);
  for (const auto& [m, c] : f.terms()) {
    PrecReal term = PrecReal::from_rational(c, wp);
    for (const auto& a : m.factors()) term *= tab.value(a, wp);
    acc += term;
  }
  return acc.with_precision(precision_bits);
}

Rational even_zeta_product_ratio(int a2, int b2) {
  // zeta(2n) = (-1)^(n+1) B_{2n} (2 pi)^{2n} / (2 (2n)!), so the pi powers
  // cancel in zeta(2a)zeta(2b)/zeta(2a+2b).
  auto zr = [](int n2) {  // zeta(n2) / (2 pi)^{n2}
    int n = n2 / 2;
    Rational sign = (n % 2 == 1) ? Rational(1) : Rational(-1);
    Rational fact(1);
    for (int j = 2; j <= n2; ++j) fact *= Rational(j);
    return sign * bernoulli(n2) / (Rational(2) * fact);
  };
  return zr(a2) * zr(b2) / zr(a2 + b2);
}

ClosedForm cf_normalize_even_zeta(const ClosedForm& f) {
  ClosedForm out;
  for (const auto& [m, c] : f.terms()) {
    std::vector<Atom> keep;
    std::vector<int> evens;
    for (const auto& a : m.factors()) {
      if (a.kind == Atom::Kind::Zeta && a.param % 2 == 0)
        evens.push_back(a.param);
      else
        keep.push_back(a);
    }
    Rational coeff = c;
    while (evens.size() > 1) {
      int a2 = evens.back();
      evens.pop_back();
      int b2 = evens.back();
      evens.pop_back();
      coeff *= even_zeta_product_ratio(a2, b2);
      evens.push_back(a2 + b2);
    }
    if (!evens.empty()) keep.push_back(Atom::zeta(evens[0]));
    out.add_term(Monomial(std::move(keep)), coeff);
  }
  return out;
}

ClosedForm euler_linear_reduction(int m) {
  if (m < 2) throw std::invalid_argument("euler_linear_reduction: m must be >= 2");
  ClosedForm f = ClosedForm::atom(Atom::zeta(m + 1), Rational(2 + m, 2));
  for (int i = 1; i <= m - 2; ++i) {
    Monomial mono({Atom::zeta(i + 1), Atom::zeta(m - i)});
    f.add_term(mono, Rational(-1, 2));
  }
  return cf_normalize_even_zeta(f);
}

SymmetryRelation symmetry_reduction(int a, int b) {
  if (a < 2 || b < 2)
    throw std::invalid_argument("symmetry_reduction: a,b must be >= 2");
  SymmetryRelation r;
  r.a = a;
  r.b = b;
  r.rhs = ClosedForm::term(Monomial({Atom::zeta(a), Atom::zeta(b)}), Rational(1)) +
          ClosedForm::atom(Atom::zeta(a + b));
  return r;
}

}  // namespace esum
