#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <iostream>

#include "esum/catalog.hpp"
#include "esum/lemmas.hpp"

using namespace esum;

namespace {

enum ExitCode { kOk = 0, kVerifyFail = 1, kUsage = 2, kComputeFail = 3 };

struct GlobalOpts {
  long precision_bits = 256;
  std::string tolerance = "1e-18";
  std::string cache_path;
  long max_terms = 1000000000;
  int threads = 1;
  bool json = false;
};

std::string default_cache_path() {
  if (const char* env = std::getenv("ESUM_CACHE")) return env;
  if (const char* xdg = std::getenv("XDG_DATA_HOME"))
    return std::string(xdg) + "/esum/constants.json";
  if (const char* home = std::getenv("HOME"))
    return std::string(home) + "/.local/share/esum/constants.json";
  return "esum-constants.json";
}

ConstantsTable& setup_constants(const GlobalOpts& g) {
  ConstantsTable& tab = ConstantsTable::global();
  tab.set_cache_path(g.cache_path.empty() ? default_cache_path() : g.cache_path);
  tab.load_cache();
  return tab;
}

EvalConfig engine_config(const GlobalOpts& g) {
  EvalConfig cfg;
  cfg.max_terms = g.max_terms;
  cfg.threads = g.threads;
  return cfg;
}

long bits_for_digits(long digits) { return (digits * 17 + 4) / 5 + 64; }  // 3.4 bits/digit

std::string json_escape(const std::string& s) {
  std::string o;
  for (char c : s) {
    if (c == '"' || c == '\\') o += '\\';
    o += c;
  }
  return o;
}

int cmd_eval(const GlobalOpts& g, const std::string& expr, long digits,
             const std::string& target_str) {
  ConstantsTable& tab = setup_constants(g);
  long prec = g.precision_bits;
  std::string target = target_str;
  if (digits > 0) {
    prec = std::max(prec, bits_for_digits(digits));
    target = "1e-" + std::to_string(digits);
  }
  SummandSpec spec;
  try {
    spec = SummandSpec::parse(expr);
  } catch (const std::exception& e) {
    std::cerr << "cannot parse sum expression: " << e.what() << "\n";
    std::cerr << "expected <factors>/<denominator>, e.g. H2*h1/k^5, h1^2/(2k-1)^4, "
                 "H3*H4/k(2k-1)\n";
    return kUsage;
  }
  EvalConfig cfg = engine_config(g);
  cfg.constants = &tab;
  try {
    EvalReport rep = evaluate_accelerated(spec, target, prec, cfg);
    long show = digits > 0 ? digits + 2 : PrecReal::decimal_digits_for(prec);
    if (g.json) {
      printf("{\"expression\":\"%s\",\"value\":\"%s\",\"error_bound\":\"%s\","
             "\"terms_summed\":%ld,\"tail_terms_used\":%ld,\"wall_seconds\":%.6f,"
             "\"precision_bits\":%ld}\n",
             json_escape(spec.str()).c_str(), rep.value.to_decimal(show).c_str(),
             rep.error_bound.to_decimal(3).c_str(), rep.terms_summed, rep.tail_terms_used,
             rep.wall_seconds, prec);
    } else {
      printf("%s = %s\n", spec.str().c_str(), rep.value.to_decimal(show).c_str());
      printf("  error bound   %s\n", rep.error_bound.to_decimal(3).c_str());
      printf("  terms summed  %ld (+%ld tail terms), %.3fs\n", rep.terms_summed,
             rep.tail_terms_used, rep.wall_seconds);
    }
    tab.save_cache();
    return kOk;
  } catch (const DivergentSpecError& e) {
    std::cerr << "rejected: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "evaluation failed: " << e.what() << "\n";
    return kComputeFail;
  }
}

int cmd_verify(const GlobalOpts& g, const CatalogFilter& filter) {
  ConstantsTable& tab = setup_constants(g);
  EvalConfig cfg = engine_config(g);
  cfg.constants = &tab;
  PrecReal tol = PrecReal::from_decimal(g.tolerance, g.precision_bits);
  if (filter.id) {
    bool found = false;
    for (const auto& r : catalog_load()) found = found || r.id == *filter.id;
    if (!found) {
      std::cerr << "unknown record id: " << *filter.id << "\n";
      return kUsage;
    }
  }
  try {
    VerifySummary s = verify_all(tol, g.precision_bits, filter, g.threads, cfg);
    if (g.json) {
      printf("{\"total\":%d,\"passed\":%d,\"failed\":%d,\"suspects\":%d,"
             "\"wall_seconds\":%.3f,\"reports\":[",
             s.total, s.passed, s.failed_expected, s.suspects, s.wall_seconds);
      for (size_t i = 0; i < s.reports.size(); ++i) {
        const auto& r = s.reports[i];
        printf("%s{\"id\":\"%s\",\"pass\":%s,\"suspect\":%s,\"lhs\":\"%s\",\"rhs\":\"%s\","
               "\"abs_diff\":\"%s\"}",
               i ? "," : "", json_escape(r.id).c_str(), r.pass ? "true" : "false",
               r.suspect ? "true" : "false", r.lhs_value.to_decimal(25).c_str(),
               r.rhs_value.to_decimal(25).c_str(), r.abs_diff.to_decimal(3).c_str());
      }
      printf("]}\n");
    } else {
      for (const auto& r : s.reports) {
        const char* badge = r.pass ? "pass" : (r.suspect ? "SUSPECT" : "FAIL");
        printf("%-8s %-24s |lhs-rhs| = %s\n", badge, r.id.c_str(),
               r.abs_diff.to_decimal(3).c_str());
      }
      printf("%d records: %d passed, %d failed, %d suspects flagged (%.1fs)\n", s.total,
             s.passed, s.failed_expected, s.suspects, s.wall_seconds);
      if (s.total == 0) printf("0 records matched the filter\n");
    }
    tab.save_cache();
    return s.ok() ? kOk : kVerifyFail;
  } catch (const std::exception& e) {
    std::cerr << "verification failed to run: " << e.what() << "\n";
    return kComputeFail;
  }
}

int cmd_lemma_check(const GlobalOpts& g, const std::string& lemma, long i_max,
                    const std::string& tol_str) {
  ConstantsTable& tab = setup_constants(g);
  EvalConfig cfg = engine_config(g);
  cfg.constants = &tab;
  auto defs = lemma_select(lemma);
  if (defs.empty()) {
    std::cerr << "unknown lemma id: " << lemma << " (try: ";
    for (const auto& d : lemma_registry()) std::cerr << d.id << " ";
    std::cerr << "or all)\n";
    return kUsage;
  }
  PrecReal tol = PrecReal::from_decimal(tol_str, g.precision_bits);
  bool all_ok = true;
  bool first = true;
  if (g.json) printf("[");
  try {
    for (const auto* d : defs) {
      auto reps = lemma_verify(*d, i_max, tol, g.precision_bits, cfg);
      int pass = 0;
      PrecReal worst(64);
      for (const auto& r : reps) {
        if (r.pass) ++pass;
        if (r.abs_diff > worst) worst = r.abs_diff;
      }
      bool ok = pass == static_cast<int>(reps.size());
      all_ok = all_ok && ok;
      if (g.json) {
        printf("%s{\"lemma\":\"%s\",\"instances\":%zu,\"passed\":%d,\"worst_diff\":\"%s\","
               "\"corrected\":%s}",
               first ? "" : ",", json_escape(d->id).c_str(), reps.size(), pass,
               worst.to_decimal(3).c_str(), d->note.empty() ? "false" : "true");
        first = false;
      } else {
        printf("%-8s %d/%zu pass, worst |direct-closed| = %s%s\n", d->id.c_str(), pass,
               reps.size(), worst.to_decimal(3).c_str(),
               d->note.empty() ? "" : "  [shipped with correction]");
        if (!d->note.empty()) printf("         note: %s\n", d->note.c_str());
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "lemma check failed: " << e.what() << "\n";
    return kComputeFail;
  }
  if (g.json) printf("]\n");
  tab.save_cache();
  return all_ok ? kOk : kVerifyFail;
}

int cmd_catalog_list(const GlobalOpts& g, const CatalogFilter& filter) {
  const auto& cat = catalog_load();
  bool first = true;
  if (g.json) printf("[");
  for (const auto& r : cat) {
    if (!filter.matches(r)) continue;
    if (g.json) {
      printf("%s%s", first ? "" : ",\n", r.to_json().c_str());
      first = false;
    } else {
      printf("%-24s F%d o%-2d %-6s %-18s = %s\n", r.id.c_str(), r.family, r.order,
             r.status == IdentityRecord::Status::Suspect ? "suspect" : "pass",
             r.lhs.str().c_str(), r.rhs_display.c_str());
    }
  }
  if (g.json) printf("]\n");
  return kOk;
}

int cmd_constants(const GlobalOpts& g, bool recompute) {
  ConstantsTable& tab = setup_constants(g);
  if (recompute) tab.clear_memory();

  long prec = g.precision_bits;
  std::vector<Atom> atoms;
  for (int n = 2; n <= 12; ++n) atoms.push_back(Atom::zeta(n));
  atoms.push_back(Atom::ln2());
  atoms.push_back(Atom::gamma());
  for (int m : {3, 5, 7, 9}) atoms.push_back(Atom::sigma(m));
  for (int n : {6, 8}) atoms.push_back(Atom::tau(n));

  try {
    bool first = true;
    if (g.json) printf("[");
    for (const Atom& a : atoms) {
      PrecReal v = tab.value(a, prec);
      if (g.json) {
        printf("%s{\"atom\":\"%s\",\"precision_bits\":%ld,\"digits\":\"%s\"}",
               first ? "" : ",\n", a.name().c_str(), prec, v.round_trip_string().c_str());
        first = false;
      } else {
        printf("%-10s %s\n", a.name().c_str(), v.round_trip_string().c_str());
      }
    }
    if (g.json) printf("]\n");
  } catch (const std::exception& e) {
    std::cerr << "constant computation failed: " << e.what() << "\n";
    return kComputeFail;
  }
  tab.save_cache();
  fprintf(stderr, "cache written to %s\n", tab.cache_path().c_str());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"high-precision evaluation and verification of linear and quadratic Euler sums"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  GlobalOpts g;
  app.add_option("--precision-bits", g.precision_bits, "working mantissa precision (>= 64)")
      ->capture_default_str();
  app.add_option("--tolerance", g.tolerance, "verification tolerance, decimal string")
      ->capture_default_str();
  app.add_option("--cache", g.cache_path, "constants cache file (env ESUM_CACHE)");
  app.add_option("--max-terms", g.max_terms, "direct-summation safety cap")
      ->capture_default_str();
  app.add_option("--threads", g.threads, "worker threads for verification runs")
      ->capture_default_str();
  app.add_flag("--json", g.json, "emit JSON on stdout");

  auto* eval = app.add_subcommand("eval", "evaluate a sum expression to a target accuracy");
  std::string expr;
  long digits = 0;
  std::string target = "1e-18";
  eval->add_option("expression", expr, "e.g. \"h1/k^3\" or \"H3*h4/k(2k-1)\"")->required();
  eval->add_option("--digits", digits, "requested decimal digits (sets precision and target)");
  eval->add_option("--target", target, "absolute error target, decimal string")
      ->capture_default_str();

  auto* verify = app.add_subcommand("verify", "verify catalog identities numerically");
  int vf_family = -1, vf_order = -1;
  std::string vf_id;
  verify->add_option("--family", vf_family, "restrict to family 0..8");
  verify->add_option("--order", vf_order, "restrict to a given order");
  verify->add_option("--id", vf_id, "verify a single record id");

  auto* lemma = app.add_subcommand("lemma-check", "verify helper-function identities");
  std::string lemma_id = "all";
  long i_max = 30;
  std::string lemma_tol = "1e-25";
  lemma->add_option("--lemma", lemma_id, "lemma id (e.g. 4b, 2c, g85.n2) or all")
      ->capture_default_str();
  lemma->add_option("--i-max", i_max, "largest integer parameter to test")
      ->capture_default_str();
  lemma->add_option("--lemma-tolerance", lemma_tol, "per-instance tolerance")
      ->capture_default_str();

  auto* catalog = app.add_subcommand("catalog", "browse the identity catalog");
  auto* list = catalog->add_subcommand("list", "list records");
  int cf_family = -1, cf_order = -1;
  std::string cf_id;
  list->add_option("--family", cf_family, "restrict to family 0..8");
  list->add_option("--order", cf_order, "restrict to a given order");
  list->add_option("--id", cf_id, "single record id");

  auto* consts = app.add_subcommand("constants", "show or refresh the constant basis");
  bool recompute = false;
  consts->add_flag("--recompute", recompute, "drop cached values and recompute");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*eval) return cmd_eval(g, expr, digits, target);
    if (*verify) {
      CatalogFilter f;
      if (vf_family >= 0) f.family = vf_family;
      if (vf_order >= 0) f.order = vf_order;
      if (!vf_id.empty()) f.id = vf_id;
      return cmd_verify(g, f);
    }
    if (*lemma) return cmd_lemma_check(g, lemma_id, i_max, lemma_tol);
    if (*catalog) {
      CatalogFilter f;
      if (cf_family >= 0) f.family = cf_family;
      if (cf_order >= 0) f.order = cf_order;
      if (!cf_id.empty()) f.id = cf_id;
      return cmd_catalog_list(g, f);
    }
    if (*consts) return cmd_constants(g, recompute);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kComputeFail;
  }
  return kUsage;
}
