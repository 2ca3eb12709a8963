#include "evidentia/evidence.hpp"

#include <stdexcept>

namespace evidentia {

Evidence::Evidence(Hyperrational value) : value_(std::move(value)) {
  if (value_.sign() < 0)
    throw std::invalid_argument("negative evidence " + value_.to_string());
}

Probability::Probability(Hyperrational value) : value_(std::move(value)) {
  if (!value_.in_unit_interval())
    throw std::invalid_argument("probability out of range: " + value_.to_string());
}

std::string Odds::to_string() const {
  switch (kind) {
    case Kind::zero: return "0";
    case Kind::infinite: return "infinite-odds";
    case Kind::finite: return value.to_string();
  }
  return "?";
}

namespace {

Hyperrational measure(const PossibilitySpace& space, std::size_t count) {
  const mpz_class k(static_cast<unsigned long>(count));
  if (!space.is_scaled())
    return Hyperrational::monomial(k, 1, 0);
  return Hyperrational::monomial(k, mpz_class(static_cast<unsigned long>(space.size())), 1);
}

}  // namespace

Evidence evidence(const Proposition& a) { return Evidence(measure(*a.space(), a.count())); }

Evidence evidence_top(const PossibilitySpace& space) {
  return Evidence(space.total_cardinality());
}

Odds odds(const Proposition& a) {
  const Evidence for_a = evidence(a);
  const Evidence against = evidence(~a);
  if (for_a.value().is_zero())
    return {Odds::Kind::zero, Hyperrational()};
  if (against.value().is_zero())
    return {Odds::Kind::infinite, Hyperrational()};
  return {Odds::Kind::finite, for_a.value() / against.value()};
}

LogOdds log_odds(const Proposition& a, int digits, LogBase base) {
  Odds o = odds(a);
  if (!o.defined())
    throw std::domain_error("log-odds undefined: odds are " + o.to_string());
  if (o.value.magnitude() != MagnitudeClass::appreciable || !o.value.is_rational())
    throw std::domain_error("log-odds undefined for non-appreciable odds " + o.to_string());
  std::string dec = format_log(o.value.to_rational(), digits, base);
  return {std::move(o), std::move(dec)};
}

Probability probability(const Proposition& a) {
  return Probability(evidence(a).value() / measure(*a.space(), a.space()->size()));
}

Probability conditional_probability(const Proposition& a, const Proposition& b) {
  const Proposition ab = a & b;
  const Evidence eb = evidence(b);
  if (eb.value().is_zero())
    throw std::domain_error("conditioning on impossibility");
  return Probability(evidence(ab).value() / eb.value());
}

Probability atomic_probability(const PossibilitySpace& space) {
  return Probability(Hyperrational(1) / space.total_cardinality());
}

std::vector<std::pair<std::string, Probability>> partition_distribution(
    const StateSpacePartition& partition) {
  std::vector<std::pair<std::string, Probability>> out;
  out.reserve(partition.blocks().size());
  for (const auto& b : partition.blocks())
    out.emplace_back(b.name, probability(b.members));
  return out;
}

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
  }
  return "?";
}

CheckReport check_sum_rule(const Proposition& a) {
  CheckReport r;
  r.name = "sum rule";
  const Hyperrational top = evidence_top(*a.space()).value();
  const Hyperrational ea = evidence(a).value();
  const Hyperrational ena = evidence(~a).value();
  if (top != ea + ena) {
    r.status = CheckStatus::fail;
    r.lhs = "E(top) = " + top.to_string();
    r.rhs = "E(A) + E(not A) = " + ea.to_string() + " + " + ena.to_string();
    r.detail = "evidence does not add up";
    return r;
  }
  const Hyperrational total = probability(a).value() + probability(~a).value();
  if (total != Hyperrational(1)) {
    r.status = CheckStatus::fail;
    r.detail = "P(A) + P(not A) = " + total.to_string();
  }
  return r;
}

CheckReport check_product_rule(const Proposition& a, const Proposition& b) {
  CheckReport r;
  r.name = "product rule";
  const Probability pb = probability(b);
  if (pb.value().is_zero()) {
    r.status = CheckStatus::skipped;
    r.detail = "E(B) = 0";
    return r;
  }
  const Hyperrational cond = conditional_probability(a, b).value();
  const Hyperrational ratio = probability(a & b).value() / pb.value();
  if (cond != ratio) {
    r.status = CheckStatus::fail;
    r.lhs = "P(A|B) = " + cond.to_string();
    r.rhs = "P(AB)/P(B) = " + ratio.to_string();
    r.detail = "conditional probability differs from the ratio of probabilities";
  }
  return r;
}

}  // namespace evidentia
