#ifndef ESUM_CATALOG_HPP
#define ESUM_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

#include "esum/series.hpp"

namespace esum {

// One catalog identity: an Euler sum on the left, an exact closed form over
// the constant basis on the right.  rhs_display preserves the catalog source
// text (which may reference other sums); rhs is the fully resolved form.
struct IdentityRecord {
  enum class Status { ExpectedPass, Suspect };

  std::string id;
  int family{0};
  int order{0};
  SummandSpec lhs;
  ClosedForm rhs;
  std::string rhs_display;
  std::string citation;
  Status status{Status::ExpectedPass};

  std::string status_str() const {
    return status == Status::Suspect ? "suspect" : "expected_pass";
  }
  std::string to_json() const;
};

struct CatalogLoadError : std::runtime_error {
  explicit CatalogLoadError(const std::string& what) : std::runtime_error(what) {}
};

// Parses the embedded catalog table, resolving every sum reference to a
// closed form over the basis atoms.  Throws CatalogLoadError (with the
// offending record id) on malformed data.  The parsed catalog is cached.
const std::vector<IdentityRecord>& catalog_load();

// Raw embedded table (one line per record), for provenance display.
const char* catalog_source_text();

struct VerifyReport {
  std::string id;
  PrecReal lhs_value;
  PrecReal rhs_value;
  PrecReal abs_diff;
  PrecReal tolerance;
  bool pass{false};
  bool suspect{false};
  double wall_seconds{0.0};
};

struct CatalogFilter {
  std::optional<int> family;
  std::optional<int> order;
  std::optional<std::string> id;

  bool matches(const IdentityRecord& r) const {
    if (family && r.family != *family) return false;
    if (order && r.order != *order) return false;
    if (id && r.id != *id) return false;
    return true;
  }
};

VerifyReport verify_identity(const IdentityRecord& rec, const PrecReal& tolerance,
                             long precision_bits, const EvalConfig& cfg = {});

struct VerifySummary {
  std::vector<VerifyReport> reports;  // ordered by id
  int total{0};
  int passed{0};
  int failed_expected{0};  // expected_pass records that failed
  int suspects{0};
  double wall_seconds{0.0};
  bool ok() const { return failed_expected == 0; }
};

// Verifies every matched record; records may be processed in parallel but
// reports are returned in id order.
VerifySummary verify_all(const PrecReal& tolerance, long precision_bits,
                         const CatalogFilter& filter = {}, int threads = 1,
                         const EvalConfig& cfg = {});

}  // namespace esum

#endif
