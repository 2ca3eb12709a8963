#include "evidentia/checks.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "evidentia/compiler.hpp"
#include "evidentia/dsl/parser.hpp"
#include "evidentia/dsl/printer.hpp"
#include "evidentia/evidence.hpp"
#include "evidentia/hyperrational.hpp"
#include "evidentia/oracle.hpp"
#include "evidentia/query.hpp"
#include "evidentia/random_model.hpp"

namespace evidentia::checks {

namespace {

using Clock = std::chrono::steady_clock;

class Recorder {
public:
  Recorder(std::string name, std::size_t max_examples)
      : max_examples_(max_examples), start_(Clock::now()) {
    result_.name = std::move(name);
  }

  void pass() { ++result_.cases; }
  void skip(std::uint64_t n = 1) { result_.skipped += n; }
  void check(bool ok, const std::string& what) {
    ok ? pass() : fail(what);
  }
  template <typename Describe>
  void check_lazy(bool ok, Describe&& describe) {
    ok ? pass() : fail(describe());
  }
  void fail(const std::string& what) {
    ++result_.cases;
    ++result_.failures;
    if (result_.counterexamples.size() < max_examples_)
      result_.counterexamples.push_back(what);
  }

  SuiteResult finish() {
    result_.seconds = std::chrono::duration<double>(Clock::now() - start_).count();
    return std::move(result_);
  }

private:
  SuiteResult result_;
  std::size_t max_examples_;
  Clock::time_point start_;
};

std::optional<CompiledModel> compile_fixture(const Fixture& f, bool scaled) {
  auto parsed = dsl::parse_source(f.source);
  if (!parsed.ok())
    return std::nullopt;
  CompileOptions options;
  options.scaled = scaled;
  auto compiled = compile(parsed.ast, options);
  if (!compiled.ok())
    return std::nullopt;
  return std::move(compiled.model);
}

struct Named {
  std::string name;
  Proposition prop;
};

struct Subject {
  std::string name;
  CompiledModel model;
  std::vector<Named> props;
};

// Every fixture compiled finite and scaled, with the propositions its
// queries and partitions name.
std::vector<Subject> fixture_subjects(const std::vector<Fixture>& fixtures) {
  std::vector<Subject> out;
  for (const auto& f : fixtures) {
    for (bool scaled : {false, true}) {
      auto m = compile_fixture(f, scaled);
      if (!m)
        continue;
      Subject s{f.name + (scaled ? " (scaled)" : ""), std::move(*m), {}};
      for (const auto& q : s.model.queries) {
        if (q.a)
          s.props.push_back({dsl::to_source(*q.source.a), *q.a});
        if (q.b)
          s.props.push_back({dsl::to_source(*q.source.b), *q.b});
      }
      for (const auto& p : s.model.partitions)
        for (const auto& b : p.partition.blocks())
          s.props.push_back({p.name + "." + b.name, b.members});
      out.push_back(std::move(s));
    }
  }
  return out;
}

std::string describe(const Proposition& p) {
  const auto& space = *p.space();
  std::ostringstream os;
  os << (space.is_scaled() ? "scaled" : "finite") << " space of " << space.size()
     << " atoms, {";
  const auto members = p.members();
  for (std::size_t i = 0; i < members.size() && i < 8; ++i)
    os << (i ? ", " : "") << space.label(members[i]);
  if (members.size() > 8)
    os << ", ... (" << members.size() << " atoms)";
  os << "}";
  return os.str();
}

random::Rng make_rng(std::uint64_t seed, std::uint64_t salt) {
  std::seed_seq seq{seed, salt};
  return random::Rng(seq);
}

void record_report(Recorder& rec, const CheckReport& r, const std::string& where) {
  if (r.status == CheckStatus::skipped)
    rec.skip();
  else if (r.passed())
    rec.pass();
  else
    rec.fail(where + ": " + r.lhs + " but " + r.rhs + (r.detail.empty() ? "" : "; " + r.detail));
}

}  // namespace

SuiteResult sum_rule_suite(const std::vector<Fixture>& fixtures, const CheckOptions& options) {
  Recorder rec("sum rule", options.max_counterexamples);
  for (const auto& s : fixture_subjects(fixtures))
    for (const auto& n : s.props)
      record_report(rec, check_sum_rule(n.prop), s.name + " " + n.name);
  auto rng = make_rng(options.seed, 1);
  for (std::uint64_t i = 0; i < options.instances; ++i) {
    const auto space = random::space(rng, 256, i % 2 == 1);
    const auto a = random::proposition(rng, space);
    const auto r = check_sum_rule(a);
    if (!r.passed())
      record_report(rec, r, describe(a));
    else
      rec.pass();
  }
  return rec.finish();
}

SuiteResult additivity_suite(const std::vector<Fixture>& fixtures, const CheckOptions& options) {
  Recorder rec("additivity", options.max_counterexamples);
  auto check_family = [&](const std::vector<Proposition>& family, const std::string& where) {
    Proposition all = Proposition::bottom(family.front().space());
    Hyperrational e_sum;
    Hyperrational p_sum;
    for (const auto& x : family) {
      all = all | x;
      e_sum += evidence(x).value();
      p_sum += probability(x).value();
    }
    const Hyperrational e_all = evidence(all).value();
    const Hyperrational p_all = probability(all).value();
    rec.check_lazy(e_all == e_sum && p_all == p_sum, [&] {
      return where + ": E(union) = " + e_all.to_string() + ", sum of E = " + e_sum.to_string() +
             "; P(union) = " + p_all.to_string() + ", sum of P = " + p_sum.to_string();
    });
  };
  for (const auto& s : fixture_subjects(fixtures)) {
    for (const auto& p : s.model.partitions) {
      std::vector<Proposition> blocks;
      for (const auto& b : p.partition.blocks())
        blocks.push_back(b.members);
      check_family(blocks, s.name + " partition " + p.name);
      Hyperrational total;
      for (const auto& b : blocks)
        total += probability(b).value();
      rec.check(total == Hyperrational(1),
                s.name + " partition " + p.name + " sums to " + total.to_string());
    }
  }
  auto rng = make_rng(options.seed, 2);
  for (std::uint64_t i = 0; i < options.instances; ++i) {
    const auto space = random::space(rng, 256, i % 2 == 1);
    const int parts = std::uniform_int_distribution<int>(2, 6)(rng);
    const auto family = random::disjoint_family(rng, space, parts);
    std::string where = "family of " + std::to_string(parts);
    check_family(family, where + " over " + describe(family.front()));
  }
  return rec.finish();
}

SuiteResult product_rule_suite(const std::vector<Fixture>& fixtures, const CheckOptions& options) {
  Recorder rec("product rule", options.max_counterexamples);

  // Every pair of propositions of a space of n atoms, n = 1..exhaustive_atoms.
  for (std::size_t n = 1; n <= options.exhaustive_atoms; ++n) {
    Dimension d{"u", {}};
    for (std::size_t i = 0; i < n; ++i)
      d.labels.push_back("u" + std::to_string(i));
    const auto space = build_finite_space({std::move(d)});
    std::vector<Proposition> all;
    all.reserve(std::size_t{1} << n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      std::vector<std::size_t> ids;
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1)
          ids.push_back(i);
      all.push_back(Proposition::from_ids(space, ids));
    }
    for (const auto& b : all) {
      const Hyperrational pb = probability(b).value();
      if (pb.is_zero()) {
        rec.skip(all.size());
        continue;
      }
      for (const auto& a : all) {
        const Proposition ab = a & b;
        const Hyperrational cond = conditional_probability(a, b).value();
        const Hyperrational ratio = probability(ab).value() / pb;
        rec.check_lazy(cond == ratio, [&] {
          return "A = " + describe(a) + ", B = " + describe(b) + ": P(A|B) = " +
                 cond.to_string() + " but P(AB)/P(B) = " + ratio.to_string();
        });
      }
    }
  }

  for (const auto& s : fixture_subjects(fixtures))
    for (const auto& a : s.props)
      for (const auto& b : s.props)
        record_report(rec, check_product_rule(a.prop, b.prop),
                      s.name + " A = " + a.name + ", B = " + b.name);

  auto rng = make_rng(options.seed, 3);
  for (std::uint64_t i = 0; i < options.instances; ++i) {
    SpacePtr space;
    do
      space = random::space(rng, 4096, i % 2 == 1);
    while (space->size() <= options.exhaustive_atoms);
    const double density = std::uniform_real_distribution<double>(0.05, 0.95)(rng);
    const auto a = random::proposition(rng, space, density);
    const auto b = random::proposition(rng, space, density);
    const auto r = check_product_rule(a, b);
    record_report(rec, r, "A = " + (r.passed() ? "" : describe(a)) + ", B = " +
                              (r.passed() ? "" : describe(b)));
  }
  return rec.finish();
}

SuiteResult odds_reciprocity_suite(const std::vector<Fixture>& fixtures,
                                   const CheckOptions& options) {
  Recorder rec("odds reciprocity", options.max_counterexamples);
  auto check_one = [&](const Proposition& a, const std::string& where) {
    const Odds o = odds(a);
    const Odds on = odds(~a);
    bool ok = false;
    switch (o.kind) {
      case Odds::Kind::zero:
        ok = on.kind == Odds::Kind::infinite;
        break;
      case Odds::Kind::infinite:
        ok = on.kind == Odds::Kind::zero;
        break;
      case Odds::Kind::finite:
        ok = on.kind == Odds::Kind::finite && o.value * on.value == Hyperrational(1) &&
             o.value == probability(a).value() / probability(~a).value();
        break;
    }
    rec.check_lazy(ok, [&] {
      return where + ": O(A) = " + o.to_string() + ", O(not A) = " + on.to_string();
    });
  };
  for (const auto& s : fixture_subjects(fixtures))
    for (const auto& n : s.props)
      check_one(n.prop, s.name + " " + n.name);
  auto rng = make_rng(options.seed, 4);
  for (std::uint64_t i = 0; i < options.instances; ++i) {
    const auto space = random::space(rng, 256, i % 2 == 1);
    const double density = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    const auto a = random::proposition(rng, space, density);
    check_one(a, "A = " + std::to_string(a.count()) + " of " + std::to_string(space->size()));
  }
  return rec.finish();
}

SuiteResult monotonicity_suite(const std::vector<Fixture>& fixtures, const CheckOptions& options) {
  Recorder rec("monotonicity", options.max_counterexamples);
  auto check_pair = [&](const Proposition& a, const Proposition& b, const std::string& where) {
    const Proposition ab = a & b;
    const Hyperrational eab = evidence(ab).value();
    const Hyperrational ea = evidence(a).value();
    const bool ok = eab <= ea && (eab == ea) == (ab == a) &&
                    probability(ab).value() <= probability(a).value();
    rec.check_lazy(ok, [&] {
      return where + ": E(A and B) = " + eab.to_string() + ", E(A) = " + ea.to_string() +
             (ab == a ? ", A and B = A" : ", A and B != A");
    });
  };
  for (const auto& s : fixture_subjects(fixtures))
    for (const auto& a : s.props)
      for (const auto& b : s.props)
        check_pair(a.prop, b.prop, s.name + " A = " + a.name + ", B = " + b.name);
  auto rng = make_rng(options.seed, 5);
  for (std::uint64_t i = 0; i < options.instances; ++i) {
    const auto space = random::space(rng, 256, i % 2 == 1);
    const auto a = random::proposition(rng, space);
    const auto b = random::proposition(rng, space);
    check_pair(a, b, "A = " + describe(a) + ", B = " + describe(b));
  }
  return rec.finish();
}

namespace {

std::string render(const QueryResult& r) {
  if (r.error)
    return "error: " + *r.error;
  std::string s;
  if (r.value)
    s = r.value->to_string();
  else if (r.odds_kind)
    s = r.odds_kind == Odds::Kind::infinite ? "infinite-odds" : "0";
  for (const auto& row : r.rows)
    s += (s.empty() ? "" : ", ") + row.name + " = " + row.value.to_string();
  if (r.log_odds)
    s += " (log " + *r.log_odds + ")";
  return s;
}

bool same_answer(const QueryResult& x, const QueryResult& y) {
  if (x.error.has_value() != y.error.has_value())
    return false;
  if (x.value != y.value || x.odds_kind != y.odds_kind || x.log_odds != y.log_odds)
    return false;
  if (x.rows.size() != y.rows.size())
    return false;
  for (std::size_t i = 0; i < x.rows.size(); ++i)
    if (x.rows[i].name != y.rows[i].name || x.rows[i].value != y.rows[i].value)
      return false;
  return true;
}

void compare_scales(Recorder& rec, const std::string& name, const CompiledModel& finite,
                    const CompiledModel& scaled) {
  const auto a = evaluate_all(finite);
  const auto b = evaluate_all(scaled);
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i].kind == dsl::QueryKind::evidence || a[i].kind == dsl::QueryKind::atomic) {
      rec.skip();
      continue;
    }
    rec.check_lazy(same_answer(a[i], b[i]), [&] {
      return name + " " + a[i].query + ": finite " + render(a[i]) + ", scaled " + render(b[i]);
    });
  }
}

}  // namespace

SuiteResult scale_invariance_suite(const std::vector<Fixture>& fixtures,
                                   const CheckOptions& options) {
  Recorder rec("scale invariance", options.max_counterexamples);
  for (const auto& f : fixtures) {
    auto finite = compile_fixture(f, false);
    auto scaled = compile_fixture(f, true);
    if (!finite || !scaled) {
      rec.skip();
      continue;
    }
    compare_scales(rec, f.name, *finite, *scaled);
  }
  auto rng = make_rng(options.seed, 6);
  random::ModelShape shape;
  shape.max_atoms = 512;
  for (std::uint64_t i = 0; i < options.instances; ++i) {
    const auto ast = random::model(rng, shape);
    auto finite = compile(ast, {false, kDefaultAtomLimit});
    auto scaled = compile(ast, {true, kDefaultAtomLimit});
    if (!finite.ok() || !scaled.ok()) {
      rec.fail("random model #" + std::to_string(i) + " does not compile:\n" + dsl::to_source(ast));
      continue;
    }
    compare_scales(rec, "random model #" + std::to_string(i), *finite.model, *scaled.model);
  }
  return rec.finish();
}

namespace {

std::string rational_text(const mpq_class& q) { return q.get_str(); }

void compare_oracle(Recorder& rec, const std::string& name, const CompiledModel& model,
                    const dsl::ModelAst& ast) {
  const auto engine = evaluate_all(model);
  const auto truth = oracle::oracle_queries(ast);
  for (std::size_t i = 0; i < engine.size() && i < truth.size(); ++i) {
    const QueryResult& e = engine[i];
    const oracle::OracleResult& o = truth[i];
    bool ok = true;
    std::string expected;
    switch (e.kind) {
      case dsl::QueryKind::odds:
      case dsl::QueryKind::log_odds:
        if (o.infinite_odds) {
          ok = e.odds_kind == Odds::Kind::infinite;
          expected = "infinite-odds";
        } else if (*o.value == 0) {
          ok = e.odds_kind == Odds::Kind::zero;
          expected = "0";
        } else {
          ok = e.odds_kind == Odds::Kind::finite && e.value && e.value->is_rational() &&
               e.value->to_rational() == *o.value;
          expected = rational_text(*o.value);
        }
        ok = ok && e.error.has_value() == o.error.has_value();
        break;
      case dsl::QueryKind::table:
        ok = e.rows.size() == o.rows.size();
        for (std::size_t j = 0; ok && j < e.rows.size(); ++j)
          ok = e.rows[j].value.is_rational() && e.rows[j].value.to_rational() == o.rows[j];
        for (const auto& r : o.rows)
          expected += (expected.empty() ? "" : ", ") + rational_text(r);
        break;
      default:
        if (o.error) {
          ok = e.error.has_value();
          expected = "error: " + *o.error;
        } else {
          ok = !e.error && e.value && e.value->is_rational() &&
               e.value->to_rational() == *o.value;
          expected = rational_text(*o.value);
        }
        break;
    }
    rec.check_lazy(ok, [&] {
      return name + " " + o.query_id + ": engine " + render(e) + ", oracle " + expected;
    });
  }
}

}  // namespace

SuiteResult oracle_equivalence_suite(const std::vector<Fixture>& fixtures,
                                     const CheckOptions& options) {
  Recorder rec("oracle equivalence", options.max_counterexamples);
  for (const auto& f : fixtures) {
    auto parsed = dsl::parse_source(f.source);
    auto model = compile_fixture(f, false);
    if (!parsed.ok() || !model) {
      rec.skip();
      continue;
    }
    compare_oracle(rec, f.name, *model, parsed.ast);
  }
  auto rng = make_rng(options.seed, 7);
  random::ModelShape shape;
  shape.max_atoms = 10'000;
  for (std::uint64_t i = 0; i < options.instances; ++i) {
    const std::string name = "random model #" + std::to_string(i);
    const auto generated = random::model(rng, shape);
    const std::string source = dsl::to_source(generated);
    auto parsed = dsl::parse_source(source);
    if (!parsed.ok()) {
      rec.fail(name + " does not reparse:\n" + source + parsed.diagnostics.render("<random>"));
      continue;
    }
    auto compiled = compile(parsed.ast);
    if (!compiled.ok()) {
      rec.fail(name + " does not compile:\n" + source + compiled.diagnostics.render("<random>"));
      continue;
    }
    compare_oracle(rec, name, *compiled.model, parsed.ast);
  }
  return rec.finish();
}

namespace {

Hyperrational random_hr(random::Rng& rng) {
  std::uniform_int_distribution<int> coef(-12, 12);
  std::uniform_int_distribution<int> deg(0, 3);
  auto poly_of = [&](int d) {
    Poly p;
    for (int i = 0; i <= d; ++i)
      p.emplace_back(coef(rng));
    return p;
  };
  Poly num = poly_of(deg(rng));
  Poly den;
  do
    den = poly_of(deg(rng));
  while (std::all_of(den.begin(), den.end(), [](const mpz_class& c) { return c == 0; }));
  return Hyperrational::from_polys(std::move(num), std::move(den));
}

mpz_class bound_for(std::initializer_list<const Hyperrational*> xs) {
  mpz_class b = 0;
  for (const auto* x : xs)
    b = std::max(b, mpz_class(x->substitution_bound()));
  return b + 1;
}

}  // namespace

SuiteResult hyperrational_suite(std::uint64_t cases, std::uint64_t seed) {
  Recorder rec("hyperrational field and order laws", 5);
  auto rng = make_rng(seed, 8);
  const Hyperrational zero;
  const Hyperrational one(1);
  const Hyperrational eps = one / Hyperrational::aleph();
  for (std::uint64_t i = 0; i < cases; ++i) {
    const Hyperrational a = random_hr(rng);
    const Hyperrational b = random_hr(rng);
    const Hyperrational c = random_hr(rng);
    auto where = [&] {
      return "a = " + a.to_string() + ", b = " + b.to_string() + ", c = " + c.to_string();
    };
    std::vector<std::string> broken;
    auto law = [&](bool ok, const char* name) {
      if (!ok)
        broken.emplace_back(name);
    };

    law((a + b) + c == a + (b + c), "additive associativity");
    law(a + b == b + a, "additive commutativity");
    law((a * b) * c == a * (b * c), "multiplicative associativity");
    law(a * b == b * a, "multiplicative commutativity");
    law(a * (b + c) == a * b + a * c, "distributivity");
    law(a + zero == a && a * one == a, "identities");
    law(a + (-a) == zero, "additive inverse");
    law(a - b == a + (-b), "subtraction");
    if (!a.is_zero())
      law(a * a.reciprocal() == one, "multiplicative inverse");
    if (!b.is_zero())
      law((a / b) * b == a, "division");
    law(Hyperrational::parse(a.to_string()) == a, "text round trip");

    const auto ab = a <=> b;
    law((ab < 0) + (ab == 0) + (ab > 0) == 1 && (ab == 0) == (a == b), "trichotomy");
    law((b <=> a) == (0 <=> ab), "antisymmetry");
    if (a <= b && b <= c)
      law(a <= c, "transitivity");
    if (a < b)
      law(a + c < b + c, "translation invariance");
    if (a < b && c > zero)
      law(a * c < b * c, "positive scaling");
    law(zero < eps && eps < Hyperrational::from_rational(1, mpz_class(1) << 64), "infinitesimal");
    law((a * a).sign() >= 0, "squares are non-negative");

    const Hyperrational d = a - b;
    const mpz_class x = bound_for({&a, &b, &d}) + std::uniform_int_distribution<int>(0, 50)(rng);
    try {
      const mpq_class ax = a.substitute(x);
      const mpq_class bx = b.substitute(x);
      law(cmp(ax, bx) == (ab < 0 ? -1 : ab > 0 ? 1 : 0), "substitution preserves order");
      law((a + b).substitute(x) == ax + bx, "substitution preserves sums");
      law((a * b).substitute(x) == ax * bx, "substitution preserves products");
      if (a.magnitude() != MagnitudeClass::infinite) {
        const auto rest = (a - Hyperrational(a.standard_part())).magnitude();
        law(rest == MagnitudeClass::zero || rest == MagnitudeClass::infinitesimal,
            "standard part");
        Hyperrational tiny = c;
        while (tiny.magnitude() == MagnitudeClass::infinite ||
               tiny.magnitude() == MagnitudeClass::appreciable)
          tiny *= eps;
        law((a + tiny).standard_part() == a.standard_part(), "standard part ignores infinitesimals");
      }
    } catch (const std::domain_error& e) {
      broken.push_back(std::string("substitution failed: ") + e.what());
    }

    if (broken.empty()) {
      rec.pass();
    } else {
      std::string names;
      for (const auto& n : broken)
        names += (names.empty() ? "" : ", ") + n;
      rec.fail(where() + ": " + names);
    }
  }
  return rec.finish();
}

std::vector<SuiteResult> run_all(const std::vector<Fixture>& fixtures, const CheckOptions& options) {
  return {
      sum_rule_suite(fixtures, options),
      additivity_suite(fixtures, options),
      product_rule_suite(fixtures, options),
      odds_reciprocity_suite(fixtures, options),
      monotonicity_suite(fixtures, options),
      scale_invariance_suite(fixtures, options),
      oracle_equivalence_suite(fixtures, options),
  };
}

}  // namespace evidentia::checks
