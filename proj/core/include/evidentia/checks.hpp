#pragma once

// Executable property suites: the counting-measure identities, engine
// versus oracle agreement, finite versus scaled agreement, and the field and
// order laws of Hyperrational. Every suite is seeded and reproducible.

#include <cstdint>
#include <string>
#include <vector>

namespace evidentia::checks {

inline constexpr std::uint64_t kDefaultSeed = 271828;

struct Fixture {
  std::string name;
  std::string source;
};

/// The models shipped in fixtures/, compiled into the library.
const std::vector<Fixture>& builtin_fixtures();

struct CheckOptions {
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t instances = 1000;     // randomized instances per suite
  std::size_t exhaustive_atoms = 12;  // product rule: all pairs up to this size
  std::size_t max_counterexamples = 5;
};

struct SuiteResult {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::uint64_t skipped = 0;
  std::vector<std::string> counterexamples;  // exact renderings, first few
  double seconds = 0;

  bool passed() const { return failures == 0; }
};

// Each suite runs over `instances` random spaces or models plus every
// proposition named by the given fixtures (their queries and partition
// blocks), compiled both finite and scaled where possible.

SuiteResult sum_rule_suite(const std::vector<Fixture>& fixtures, const CheckOptions& options);
SuiteResult additivity_suite(const std::vector<Fixture>& fixtures, const CheckOptions& options);
SuiteResult product_rule_suite(const std::vector<Fixture>& fixtures, const CheckOptions& options);
SuiteResult odds_reciprocity_suite(const std::vector<Fixture>& fixtures,
                                   const CheckOptions& options);
SuiteResult monotonicity_suite(const std::vector<Fixture>& fixtures, const CheckOptions& options);

/// Finite and scaled compilations of every fixture give identical rational
/// answers to every query except E and atomic.
SuiteResult scale_invariance_suite(const std::vector<Fixture>& fixtures,
                                   const CheckOptions& options);

/// Engine and counting oracle agree on every fixture query and on every
/// query of `instances` random finite models of at most 10^4 atoms.
SuiteResult oracle_equivalence_suite(const std::vector<Fixture>& fixtures,
                                     const CheckOptions& options);

/// Field laws, order laws and substitution soundness on `cases` random
/// Hyperrationals.
SuiteResult hyperrational_suite(std::uint64_t cases, std::uint64_t seed);

/// The suites run by `evidentia check`, in order.
std::vector<SuiteResult> run_all(const std::vector<Fixture>& fixtures, const CheckOptions& options);

}  // namespace evidentia::checks
