#include <doctest.h>

#include "evidentia/random_model.hpp"
#include "evidentia/possibility_space.hpp"

using namespace evidentia;

namespace {

std::vector<std::string> ranks() {
  return {"A", "2", "3", "4", "5", "6", "7", "8", "9", "10", "J", "Q", "K"};
}

SpacePtr deck() {
  return build_finite_space({{"rank", ranks()}, {"suit", {"clubs", "diamonds", "hearts", "spades"}}});
}

Proposition rank_in(const SpacePtr& s, std::vector<std::string> labels) {
  return prop_from_predicate(s, [labels](const PossibilitySpace& sp, std::size_t id) {
    return std::find(labels.begin(), labels.end(), sp.label(id, 0)) != labels.end();
  });
}

}  // namespace

TEST_CASE("finite spaces are Cartesian products") {
  const auto d = deck();
  CHECK(d->size() == 52);
  CHECK(d->kind() == SpaceKind::finite);
  CHECK(d->total_cardinality() == Hyperrational(52));
  CHECK(d->unit_cardinality() == Hyperrational(1));
  CHECK(d->label(0) == "(A, clubs)");
  CHECK(d->label(1) == "(A, diamonds)");
  CHECK(d->label(51) == "(K, spades)");
  CHECK(d->atom(5).label == "(2, diamonds)");

  const auto coin = build_finite_space({{"face", {"H", "T"}}});
  CHECK(coin->size() == 2);
  CHECK(coin->label(1) == "T");

  std::vector<std::string> pips = {"1", "2", "3", "4", "5", "6"};
  CHECK(build_finite_space({{"d6", pips}, {"d6b", pips}})->size() == 36);
}

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(build_finite_space({}), std::invalid_argument);
  CHECK_THROWS_AS(build_finite_space({{"x", {}}}), std::invalid_argument);
  CHECK_THROWS_AS(build_finite_space({{"x", {"a", "a"}}}), std::invalid_argument);
  CHECK_THROWS_AS(build_finite_space({{"x", {"a"}}, {"x", {"b"}}}), std::invalid_argument);
  CHECK_THROWS_AS(build_finite_space({{"x", {"a", "b"}}, {"y", {"c", "d"}}}, 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_scaled_space(std::vector<std::string>{}), std::invalid_argument);
}

TEST_CASE("scaled spaces split aleph into tranches") {
  std::vector<std::string> angles;
  for (int i = 0; i < 90; ++i)
    angles.push_back("[" + std::to_string(i) + "," + std::to_string(i + 1) + ")");
  const auto quadrant = build_scaled_space(angles);
  CHECK(quadrant->is_scaled());
  CHECK(quadrant->size() == 90);
  CHECK(quadrant->total_cardinality() == Hyperrational::aleph());
  CHECK(quadrant->unit_cardinality() == Hyperrational::aleph() / 90);
  CHECK(quadrant->unit_cardinality() * 90 == quadrant->total_cardinality());

  const auto coin = build_scaled_space(std::vector<std::string>{"heads", "tails"});
  CHECK(coin->unit_cardinality().to_string() == "aleph/2");

  const auto one = build_scaled_space(std::vector<std::string>{"all"});
  CHECK(one->unit_cardinality() == Hyperrational::aleph());
}

TEST_CASE("Boolean operations") {
  const auto d = deck();
  const auto aces = rank_in(d, {"A"});
  const auto face = rank_in(d, {"J", "Q", "K"});
  CHECK(aces.count() == 4);
  CHECK(face.count() == 12);
  CHECK((aces | ~aces).is_top());
  CHECK((aces & ~aces).is_bottom());
  CHECK((aces | ~aces) == Proposition::top(d));
  CHECK(aces.disjoint_with(face));
  CHECK(aces.subset_of(aces | face));
  CHECK(prop_from_predicate(d, [](const PossibilitySpace&, std::size_t) { return true; }).is_top());

  const auto other = deck();
  CHECK_THROWS_AS(aces & Proposition::top(other), std::invalid_argument);
  CHECK_THROWS_AS(aces | Proposition::top(other), std::invalid_argument);
  CHECK_FALSE(aces == rank_in(other, {"A"}));

  const std::vector<std::size_t> bad = {52};
  CHECK_THROWS_AS(Proposition::from_ids(d, bad), std::out_of_range);
}

TEST_CASE("quadrant predicate selects half the tranches") {
  std::vector<std::string> angles;
  for (int i = 0; i < 90; ++i)
    angles.push_back(std::to_string(i));
  const auto q = build_scaled_space(angles);
  const auto below = prop_from_predicate(
      q, [](const PossibilitySpace& s, std::size_t id) { return std::stoi(std::string(s.label(id, 0))) < 45; });
  CHECK(below.count() == 45);
}

TEST_CASE("Boolean algebra laws on random subsets") {
  random::Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    const auto s = random::space(rng, 200, i % 2 == 0);
    const auto a = random::proposition(rng, s);
    const auto b = random::proposition(rng, s);
    const auto c = random::proposition(rng, s);
    CHECK(~(a & b) == (~a | ~b));
    CHECK(~(a | b) == (~a & ~b));
    CHECK(~~a == a);
    CHECK((a | (a & b)) == a);
    CHECK((a & (a | b)) == a);
    CHECK((a & (b | c)) == ((a & b) | (a & c)));
    CHECK((a | (b & c)) == ((a | b) & (a | c)));
    CHECK(a == ((a & b) | (a & ~b)));
    CHECK((a | ~a) == (b | ~b));
    CHECK(~(a & b) == (((a & ~b) | (~a & b)) | (~a & ~b)));
  }
}

TEST_CASE("partitions") {
  const auto d = deck();
  const auto aces = rank_in(d, {"A"});
  const auto face = rank_in(d, {"J", "Q", "K"});
  const auto numbered = ~(aces | face);
  const auto p = make_partition(d, {{"aces", aces}, {"face", face}, {"numbered", numbered}});
  CHECK(p.blocks().size() == 3);
  Hyperrational total;
  for (const auto& b : p.blocks())
    total += d->unit_cardinality() * static_cast<long>(b.members.count());
  CHECK(total == d->total_cardinality());

  CHECK(make_partition(d, {{"all", Proposition::top(d)}}).blocks().size() == 1);

  try {
    make_partition(d, {{"aces", aces}, {"again", aces}});
    FAIL("overlap accepted");
  } catch (const std::invalid_argument& e) {
    const std::string msg = e.what();
    CHECK(msg.find("aces") != std::string::npos);
    CHECK(msg.find("again") != std::string::npos);
    CHECK(msg.find("(A, clubs)") != std::string::npos);
  }
  try {
    make_partition(d, {{"aces", aces}, {"face", face}});
    FAIL("gap accepted");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("(2, clubs)") != std::string::npos);
  }
  CHECK_THROWS_AS(make_partition(d, {}), std::invalid_argument);
}

TEST_CASE("atom ids follow construction order") {
  const auto a = deck();
  const auto b = deck();
  for (std::size_t i = 0; i < a->size(); ++i)
    CHECK(a->label(i) == b->label(i));
}
