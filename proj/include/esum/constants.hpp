#ifndef ESUM_CONSTANTS_HPP
#define ESUM_CONSTANTS_HPP

#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>

#include "esum/expr.hpp"
#include "esum/real.hpp"

namespace esum {

// Provides the constant basis to arbitrary precision with a persistent disk
// cache.  zeta(n) is computed by direct summation plus an Euler-Maclaurin
// tail whose first omitted term bounds the truncation error; ln2 and gamma
// come from the underlying MPFR constants; sigma/tau basis sums are produced
// by the accelerated summation engine and cross-checked against their
// 20-digit reference decimals.
class ConstantsTable {
public:
  ConstantsTable() = default;
  explicit ConstantsTable(std::string cache_path) : cache_path_(std::move(cache_path)) {}

  // Generic entry point used by ClosedForm evaluation.
  PrecReal value(const Atom& a, long precision_bits);

  PrecReal zeta(int n, long precision_bits);
  PrecReal ln2(long precision_bits);
  PrecReal euler_gamma(long precision_bits);
  PrecReal basis_sum(const Atom& a, long precision_bits);

  // Cache management.  load() validates each stored value by recomputation
  // at a higher precision; invalid entries are dropped.
  void set_cache_path(const std::string& p) { cache_path_ = p; }
  const std::string& cache_path() const { return cache_path_; }
  bool load_cache();
  void save_cache() const;
  void clear_memory() {
    std::lock_guard<std::mutex> g(mu_);
    mem_.clear();
  }

  // All currently cached entries as (atom name, precision, digits).
  struct CacheEntry {
    std::string atom;
    long precision_bits;
    std::string digits;
  };
  std::vector<CacheEntry> snapshot();

  // Reference decimals (20 digits) for the sigma/tau basis sums.  The
  // first map carries the verified values (sigma(3)'s printed tail is a
  // documented misprint); the second carries the decimals exactly as
  // printed in the reference table.
  static const std::map<std::string, std::string>& basis_references();
  static const std::map<std::string, std::string>& basis_references_printed();

  // Process-wide shared instance.
  static ConstantsTable& global();

private:
  PrecReal compute(const Atom& a, long precision_bits);
  PrecReal zeta_em(int n, long precision_bits) const;

  std::string cache_path_;
  std::mutex mu_;
  std::map<std::pair<Atom, long>, PrecReal> mem_;  // (atom, stored precision)
};

// Independent check value: pi at the requested precision (MPFR's own
// algorithm), used by tests for the even-zeta closed forms.
PrecReal const_pi(long precision_bits);

// MPFR's zeta, used only as a cross-check oracle in tests.
PrecReal zeta_reference(int n, long precision_bits);

}  // namespace esum

#endif
