#include "esum/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "esum/expr.hpp"
#include "esum/general_sum.hpp"
#include "esum/partial_fractions.hpp"

namespace esum {

namespace {

std::vector<std::string> split_pipes(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == '|') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  for (auto& s : out) {
    size_t a = s.find_first_not_of(" \t");
    size_t b = s.find_last_not_of(" \t");
    s = (a == std::string::npos) ? "" : s.substr(a, b - a + 1);
  }
  return out;
}

// kernel text like 1/(k^2(2k-1)^8)
std::vector<PoleFactor> parse_kernel(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.rfind("1/(", 0) != 0 || s.back() != ')')
    throw std::invalid_argument("kernel syntax: " + text);
  s = s.substr(3, s.size() - 4);
  std::vector<PoleFactor> out;
  size_t i = 0;
  auto read_pow = [&]() {
    int p = 1;
    if (i < s.size() && s[i] == '^') {
      ++i;
      size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      p = std::stoi(s.substr(i, j - i));
      i = j;
    }
    return p;
  };
  while (i < s.size()) {
    if (s.compare(i, 6, "(2k-1)") == 0) {
      i += 6;
      out.push_back({PoleFamily::Odd, read_pow()});
    } else if (s[i] == 'k') {
      ++i;
      out.push_back({PoleFamily::K, read_pow()});
    } else {
      throw std::invalid_argument("kernel syntax: " + text);
    }
  }
  return out;
}

// One rhs term: rational coefficient, atom factors, at most one S{}/K{} ref.
struct RhsTerm {
  Rational coeff{1};
  std::vector<Atom> atoms;
  std::string sum_ref;     // S{...}
  std::string kernel_ref;  // K{...}
};

std::vector<RhsTerm> parse_rhs(const std::string& text) {
  std::vector<RhsTerm> terms;
  size_t i = 0;
  auto skip_ws = [&]() {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  bool neg = false;
  bool at_term_start = true;
  RhsTerm cur;
  bool have = false;
  auto flush = [&]() {
    if (!have) return;
    if (neg) cur.coeff = -cur.coeff;
    terms.push_back(cur);
    cur = RhsTerm{};
    neg = false;
    have = false;
  };
  while (i < text.size()) {
    skip_ws();
    if (i >= text.size()) break;
    char c = text[i];
    if (c == '+' || (c == '-' && !at_term_start)) {
      flush();
      neg = (c == '-');
      at_term_start = false;
      ++i;
      continue;
    }
    if (c == '-') {  // leading sign
      neg = !neg;
      ++i;
      continue;
    }
    if (c == '*') {
      ++i;
      continue;
    }
    at_term_start = false;
    if ((c == 'S' || c == 'K') && i + 1 < text.size() && text[i + 1] == '{') {
      size_t close = text.find('}', i);
      if (close == std::string::npos) throw std::invalid_argument("unterminated ref in rhs");
      std::string body = text.substr(i + 2, close - i - 2);
      if (c == 'S')
        cur.sum_ref = body;
      else
        cur.kernel_ref = body;
      i = close + 1;
      have = true;
      continue;
    }
    // read a bare factor token
    size_t j = i;
    while (j < text.size() && text[j] != '*' && text[j] != '+' && text[j] != '-' &&
           !std::isspace(static_cast<unsigned char>(text[j]))) {
      if (text[j] == '(') {
        j = text.find(')', j);
        if (j == std::string::npos) throw std::invalid_argument("unbalanced parens in rhs");
      }
      ++j;
    }
    std::string tok = text.substr(i, j - i);
    i = j;
    bool numeric = !tok.empty();
    for (char t : tok)
      if (!std::isdigit(static_cast<unsigned char>(t)) && t != '/') numeric = false;
    if (numeric)
      cur.coeff *= Rational(tok);
    else
      cur.atoms.push_back(Atom::parse(tok));
    have = true;
  }
  flush();
  return terms;
}

struct RawRecord {
  IdentityRecord rec;
  std::vector<RhsTerm> terms;
  bool resolved{false};
};

// Built-in reductions for referenced linear sums:
//   basis sums -> sigma/tau atoms; sum H_k/k^m -> the classical Euler
//   reduction; sum H^(a)_k/k^a -> (zeta(a)^2 + zeta(2a))/2 by symmetry.
std::optional<ClosedForm> builtin_reduction(const SummandSpec& s) {
  if (s.shape != SummandSpec::DenomShape::KPow || s.numerator.size() != 1) return std::nullopt;
  const auto& f = s.numerator[0];
  if (f.power != 1) return std::nullopt;
  int m = s.denom_exp;
  if (!f.kind.is_full()) {
    if (f.kind.order == 1 && (m == 3 || m == 5 || m == 7 || m == 9))
      return ClosedForm::atom(Atom::sigma(m));
    return std::nullopt;
  }
  if (f.kind.order == 2 && (m == 6 || m == 8)) return ClosedForm::atom(Atom::tau(m));
  if (f.kind.order == 1 && m >= 2) return euler_linear_reduction(m);
  if (f.kind.order == m && m >= 2) {
    ClosedForm f2 = ClosedForm::term(Monomial({Atom::zeta(m), Atom::zeta(m)}), Rational(1, 2));
    f2 += ClosedForm::atom(Atom::zeta(2 * m), Rational(1, 2));
    return f2;
  }
  return std::nullopt;
}

std::vector<IdentityRecord> parse_catalog(const std::string& text) {
  std::vector<RawRecord> raws;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    size_t a = line.find_first_not_of(" \t");
    if (a == std::string::npos || line[a] == '#') continue;
    auto cols = split_pipes(line);
    if (cols.size() != 7)
      throw CatalogLoadError("catalog line needs 7 columns: " + line);
    RawRecord raw;
    raw.rec.id = cols[0];
    try {
      raw.rec.family = std::stoi(cols[1]);
      raw.rec.order = std::stoi(cols[2]);
      raw.rec.lhs = SummandSpec::parse(cols[3]);
      raw.rec.rhs_display = cols[4];
      raw.terms = parse_rhs(cols[4]);
      raw.rec.status = cols[5] == "suspect" ? IdentityRecord::Status::Suspect
                                            : IdentityRecord::Status::ExpectedPass;
      raw.rec.citation = cols[6];
    } catch (const std::exception& e) {
      throw CatalogLoadError("record " + raw.rec.id + ": " + e.what());
    }
    if (raw.rec.order != raw.rec.lhs.order())
      throw CatalogLoadError("record " + raw.rec.id + ": order " + std::to_string(raw.rec.order) +
                             " does not match lhs weight " + std::to_string(raw.rec.lhs.order()));
    raws.push_back(std::move(raw));
  }

  // resolve sum references to closed forms, first-resolved definition wins
  std::map<std::string, ClosedForm> defs;
  auto resolve_ref = [&](const std::string& ref) -> std::optional<ClosedForm> {
    SummandSpec s = SummandSpec::parse(ref);
    auto it = defs.find(s.str());
    if (it != defs.end()) return it->second;
    return builtin_reduction(s);
  };

  bool progress = true;
  while (progress) {
    progress = false;
    for (auto& raw : raws) {
      if (raw.resolved) continue;
      ClosedForm acc;
      bool ok = true;
      for (const auto& t : raw.terms) {
        ClosedForm part = ClosedForm::constant(Rational(1));
        if (!t.atoms.empty()) part = ClosedForm::term(Monomial(t.atoms), Rational(1));
        if (!t.sum_ref.empty()) {
          auto r = resolve_ref(t.sum_ref);
          if (!r) {
            ok = false;
            break;
          }
          part = part * *r;
        }
        if (!t.kernel_ref.empty()) part = part * kernel_sum(parse_kernel(t.kernel_ref), 1);
        acc += part.scaled(t.coeff);
      }
      if (!ok) continue;
      raw.rec.rhs = acc;
      raw.resolved = true;
      progress = true;
      defs.emplace(raw.rec.lhs.str(), raw.rec.rhs);
    }
  }
  std::vector<IdentityRecord> out;
  for (auto& raw : raws) {
    if (!raw.resolved)
      throw CatalogLoadError("record " + raw.rec.id + ": unresolvable sum reference in rhs");
    if (raw.rec.rhs.contains_kind(Atom::Kind::Gamma))
      throw CatalogLoadError("record " + raw.rec.id + ": gamma in catalog closed form");
    out.push_back(std::move(raw.rec));
  }
  // ids must be unique
  std::map<std::string, int> seen;
  for (const auto& r : out)
    if (++seen[r.id] > 1) throw CatalogLoadError("duplicate record id " + r.id);
  return out;
}

}  // namespace

std::string IdentityRecord::to_json() const {
  auto esc = [](const std::string& s) {
    std::string o;
    for (char c : s) {
      if (c == '"' || c == '\\') o += '\\';
      o += c;
    }
    return o;
  };
  std::string j = "{";
  j += "\"id\":\"" + esc(id) + "\",";
  j += "\"family\":" + std::to_string(family) + ",";
  j += "\"order\":" + std::to_string(order) + ",";
  j += "\"lhs\":\"" + esc(lhs.str()) + "\",";
  j += "\"rhs\":\"" + esc(rhs.str()) + "\",";
  j += "\"rhs_source\":\"" + esc(rhs_display) + "\",";
  j += "\"citation\":\"" + esc(citation) + "\",";
  j += "\"status\":\"" + status_str() + "\"";
  j += "}";
  return j;
}

const std::vector<IdentityRecord>& catalog_load() {
  static const std::vector<IdentityRecord> cat = parse_catalog(catalog_source_text());
  return cat;
}

VerifyReport verify_identity(const IdentityRecord& rec, const PrecReal& tolerance,
                             long precision_bits, const EvalConfig& cfg) {
  auto t0 = std::chrono::steady_clock::now();
  long wp = precision_bits;
  ConstantsTable& tab = cfg.constants ? *cfg.constants : ConstantsTable::global();
  PrecReal tol = tolerance.with_precision(wp);
  PrecReal target = tol / PrecReal::from_long(10, wp);

  VerifyReport rep{rec.id, PrecReal(wp), PrecReal(wp), PrecReal(wp), tol, false,
                   rec.status == IdentityRecord::Status::Suspect, 0.0};
  try {
    EvalReport lhs = evaluate_accelerated(rec.lhs, target, wp, cfg);
    rep.lhs_value = lhs.value;
  } catch (const NonConvergentError& e) {
    throw NonConvergentError("record " + rec.id + ": " + e.what());
  }
  rep.rhs_value = cf_eval(rec.rhs, wp, tab);
  rep.abs_diff = (rep.lhs_value - rep.rhs_value).abs();
  rep.pass = rep.abs_diff <= tol;
  rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

VerifySummary verify_all(const PrecReal& tolerance, long precision_bits,
                         const CatalogFilter& filter, int threads, const EvalConfig& cfg) {
  auto t0 = std::chrono::steady_clock::now();
  const auto& cat = catalog_load();
  std::vector<const IdentityRecord*> matched;
  for (const auto& r : cat)
    if (filter.matches(r)) matched.push_back(&r);
  std::sort(matched.begin(), matched.end(),
            [](const IdentityRecord* a, const IdentityRecord* b) { return a->id < b->id; });

  VerifySummary sum;
  sum.total = static_cast<int>(matched.size());
  sum.reports.resize(matched.size(), VerifyReport{"", PrecReal(64), PrecReal(64), PrecReal(64),
                                                  PrecReal(64), false, false, 0.0});
  std::atomic<size_t> next{0};
  std::mutex err_mu;
  std::string first_error;
  auto worker = [&]() {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= matched.size()) return;
      try {
        sum.reports[i] = verify_identity(*matched[i], tolerance, precision_bits, cfg);
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> g(err_mu);
        if (first_error.empty()) first_error = e.what();
        return;
      }
    }
  };
  if (threads < 1) threads = 1;
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (!first_error.empty()) throw NonConvergentError(first_error);

  for (size_t i = 0; i < matched.size(); ++i) {
    const auto& rep = sum.reports[i];
    if (rep.pass)
      ++sum.passed;
    else if (matched[i]->status == IdentityRecord::Status::Suspect)
      ++sum.suspects;
    else
      ++sum.failed_expected;
  }
  sum.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return sum;
}

}  // namespace esum
