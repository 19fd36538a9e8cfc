#ifndef UXL_HARNESS_HPP
#define UXL_HARNESS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "uxl/oracle.hpp"
#include "uxl/s_builder.hpp"
#include "uxl/skew_lattice.hpp"

namespace uxl {

struct SuiteConfig {
  std::vector<std::string> terms;  // term grammar strings
  std::size_t budget = 12;
  std::size_t tokens_per_support = 2;  // tokens per non-principal support
  std::uint64_t seed = 42;
  std::vector<std::string> suites;          // empty list is a ConfigError
  std::vector<std::string> eta_gaps;        // registered gap names to attach
  std::size_t sets_per_pair = 24;           // interval sets sampled per pair (theorem2)
  std::size_t subset_check_cap = 14;        // token cap for the least-class subset scan

  static SuiteConfig defaults();
  static const std::vector<std::string>& known_suites();
  static SuiteConfig from_json(const std::string& json_text);  // throws ConfigError
};

struct Counterexample {
  std::string inputs;
  std::string expected;
  std::string actual;
};

struct SuiteEntry {
  std::string suite;
  std::string term;
  std::size_t instances = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t vacuous = 0;
  std::vector<Counterexample> counterexamples;
  std::int64_t wall_ms = 0;
};

struct SuiteReport {
  SuiteConfig config;
  std::vector<SuiteEntry> entries;
  bool all_passed() const;
  std::string to_json(bool include_timing = true) const;
  std::string to_text() const;
};

// Deterministic for a fixed config and seed (timings aside). Runs the finite
// brute force, the Theorem 1 and Theorem 2 oracle-agreement sweeps, the
// corollary property suites, the law/quotient checks and the s-builder checks
// over the configured terms.
SuiteReport run_suite(const SuiteConfig& config);

// The standard term battery.
std::vector<std::string> standard_terms();

// Shared by the harness and the acceptance suite: the token universe for a
// term (principal tokens at sampled points, `tokens_per_support` labeled
// tokens on each half-cut support).
std::vector<UltraToken> token_universe(const OrderTerm& t, const GapRegistry& reg,
                                       std::size_t budget, std::size_t tokens_per_support);

// Deterministic battery of interval sets straddling the supports of u and v.
std::vector<IntervalSet> sample_interval_sets(const OrderTerm& t, const UltraToken& u,
                                              const UltraToken& v, std::size_t budget,
                                              std::size_t limit);

}  // namespace uxl

#endif
