#pragma once

/**
 * @file evidence.hpp
 * @brief Evidence, odds, probability and conditional probability over a
 *        possibility space.
 *
 * Evidence E(A) is the counting measure of A: its atom count in a finite
 * space, or (tranche count) * aleph/n in a scaled space. Every other measure
 * is a ratio of evidence values:
 *
 *   O(A)   = E(A) / E(not A)
 *   P(A)   = E(A) / E(A or not A)
 *   P(A|B) = E(A and B) / E(B)
 *
 * All results are exact Hyperrationals; only log-odds is approximate.
 */

#include <string>
#include <utility>
#include <vector>

#include "evidentia/decimal.hpp"
#include "evidentia/hyperrational.hpp"
#include "evidentia/possibility_space.hpp"

namespace evidentia {

/// Non-negative measure of a proposition.
class Evidence {
public:
  /// Throws std::invalid_argument for negative values.
  explicit Evidence(Hyperrational value);
  const Hyperrational& value() const { return value_; }
  friend bool operator==(const Evidence&, const Evidence&) = default;

private:
  Hyperrational value_;
};

/// A value in [0, 1].
class Probability {
public:
  /// Throws std::invalid_argument outside [0, 1].
  explicit Probability(Hyperrational value);
  const Hyperrational& value() const { return value_; }
  friend bool operator==(const Probability&, const Probability&) = default;

private:
  Hyperrational value_;
};

/// E(A)/E(not A). `zero` when E(A) = 0 and `infinite` when E(not A) = 0;
/// `value` is meaningful only for `finite`.
struct Odds {
  enum class Kind { zero, finite, infinite };
  Kind kind;
  Hyperrational value;

  bool defined() const { return kind == Kind::finite; }
  std::string to_string() const;
};

struct LogOdds {
  Odds odds;           // exact
  std::string decimal;  // approximate log of odds.value
};

Evidence evidence(const Proposition& a);
Evidence evidence_top(const PossibilitySpace& space);

Odds odds(const Proposition& a);

/// Throws std::domain_error("log-odds undefined") when the odds are zero,
/// infinite, or not an appreciable value.
LogOdds log_odds(const Proposition& a, int digits, LogBase base = LogBase::natural);

Probability probability(const Proposition& a);

/// Throws std::domain_error("conditioning on impossibility") when E(b) = 0,
/// std::invalid_argument for propositions of different spaces.
Probability conditional_probability(const Proposition& a, const Proposition& b);

/// 1/|U|: the probability of a single atom, infinitesimal (1/aleph) in a
/// scaled space.
Probability atomic_probability(const PossibilitySpace& space);

std::vector<std::pair<std::string, Probability>> partition_distribution(
    const StateSpacePartition& partition);

enum class CheckStatus { pass, fail, skipped };

std::string_view to_string(CheckStatus s);

/// Outcome of an executable identity check. On failure `lhs`/`rhs` carry
/// both sides rendered exactly.
struct CheckReport {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string lhs;
  std::string rhs;
  std::string detail;

  bool passed() const { return status != CheckStatus::fail; }
};

/// E(top) = E(A) + E(not A) and P(A) + P(not A) = 1.
CheckReport check_sum_rule(const Proposition& a);

/// P(A|B) = P(A and B) / P(B); skipped when E(B) = 0.
CheckReport check_product_rule(const Proposition& a, const Proposition& b);

}  // namespace evidentia
