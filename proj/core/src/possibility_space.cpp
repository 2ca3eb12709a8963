#include "evidentia/possibility_space.hpp"

#include <bit>
#include <limits>
#include <stdexcept>
#include <unordered_set>

namespace evidentia {

std::string_view to_string(SpaceKind k) {
  return k == SpaceKind::finite ? "finite" : "scaled";
}

PossibilitySpace::PossibilitySpace(SpaceKind kind, std::vector<Dimension> dims,
                                   std::size_t max_atoms)
    : kind_(kind), dims_(std::move(dims)) {
  if (dims_.empty())
    throw std::invalid_argument("a space needs at least one dimension");
  std::unordered_set<std::string> names;
  for (const auto& d : dims_) {
    if (!names.insert(d.name).second)
      throw std::invalid_argument("duplicate dimension '" + d.name + "'");
    if (d.labels.empty())
      throw std::invalid_argument("dimension '" + d.name + "' has no labels");
    std::unordered_set<std::string_view> seen;
    for (const auto& l : d.labels)
      if (!seen.insert(l).second)
        throw std::invalid_argument("duplicate label '" + l + "' in dimension '" + d.name + "'");
    if (size_ > max_atoms / d.labels.size())
      throw std::invalid_argument("space exceeds " + std::to_string(max_atoms) + " elements");
    size_ *= d.labels.size();
  }
  if (size_ > max_atoms)
    throw std::invalid_argument("space exceeds " + std::to_string(max_atoms) + " elements");
  // Row-major: the last dimension varies fastest.
  strides_.assign(dims_.size(), 1);
  for (std::size_t i = dims_.size() - 1; i > 0; --i)
    strides_[i - 1] = strides_[i] * dims_[i].labels.size();
}

std::string PossibilitySpace::label(std::size_t id) const {
  if (dims_.size() == 1)
    return std::string(label(id, 0));
  std::string out = "(";
  for (std::size_t d = 0; d < dims_.size(); ++d) {
    if (d > 0)
      out += ", ";
    out += label(id, d);
  }
  return out + ")";
}

Hyperrational PossibilitySpace::total_cardinality() const {
  if (is_scaled())
    return Hyperrational::aleph();
  return Hyperrational(mpz_class(static_cast<unsigned long>(size_)));
}

Hyperrational PossibilitySpace::unit_cardinality() const {
  if (is_scaled())
    return Hyperrational::aleph() /
           Hyperrational(mpz_class(static_cast<unsigned long>(size_)));
  return 1;
}

SpacePtr build_finite_space(std::vector<Dimension> dims, std::size_t max_atoms) {
  return SpacePtr(new PossibilitySpace(SpaceKind::finite, std::move(dims), max_atoms));
}

SpacePtr build_scaled_space(std::vector<Dimension> dims, std::size_t max_atoms) {
  return SpacePtr(new PossibilitySpace(SpaceKind::scaled, std::move(dims), max_atoms));
}

SpacePtr build_scaled_space(std::vector<std::string> tranche_labels) {
  if (tranche_labels.empty())
    throw std::invalid_argument("a scaled space needs at least one tranche");
  return build_scaled_space({Dimension{"tranche", std::move(tranche_labels)}});
}

// --- Proposition -----------------------------------------------------------

Proposition::Proposition(SpacePtr space) : space_(std::move(space)) {
  if (!space_)
    throw std::invalid_argument("proposition without a space");
  bits_.assign((space_->size() + 63) / 64, 0);
}

void Proposition::mask_tail() {
  const std::size_t rem = space_->size() % 64;
  if (rem != 0)
    bits_.back() &= (std::uint64_t{1} << rem) - 1;
}

Proposition Proposition::top(SpacePtr space) {
  Proposition p(std::move(space));
  for (auto& w : p.bits_)
    w = ~std::uint64_t{0};
  p.mask_tail();
  return p;
}

Proposition Proposition::bottom(SpacePtr space) { return Proposition(std::move(space)); }

Proposition Proposition::from_ids(SpacePtr space, std::span<const std::size_t> ids) {
  Proposition p(std::move(space));
  for (std::size_t id : ids) {
    if (id >= p.space_->size())
      throw std::out_of_range("element id " + std::to_string(id) + " outside the space");
    p.set(id);
  }
  return p;
}

std::size_t Proposition::count() const {
  std::size_t n = 0;
  for (auto w : bits_)
    n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool Proposition::is_bottom() const {
  for (auto w : bits_)
    if (w != 0)
      return false;
  return true;
}

std::vector<std::size_t> Proposition::members() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    auto w = bits_[i];
    while (w != 0) {
      out.push_back(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

namespace {

void require_same_space(const Proposition& a, const Proposition& b) {
  if (a.space() != b.space())
    throw std::invalid_argument("propositions belong to different spaces");
}

}  // namespace

bool Proposition::disjoint_with(const Proposition& other) const {
  require_same_space(*this, other);
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] & other.bits_[i])
      return false;
  return true;
}

bool Proposition::subset_of(const Proposition& other) const {
  require_same_space(*this, other);
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] & ~other.bits_[i])
      return false;
  return true;
}

Proposition prop_not(const Proposition& a) {
  Proposition r = a;
  for (auto& w : r.bits_)
    w = ~w;
  r.mask_tail();
  return r;
}

Proposition prop_and(const Proposition& a, const Proposition& b) {
  require_same_space(a, b);
  Proposition r = a;
  for (std::size_t i = 0; i < r.bits_.size(); ++i)
    r.bits_[i] &= b.bits_[i];
  return r;
}

Proposition prop_or(const Proposition& a, const Proposition& b) {
  require_same_space(a, b);
  Proposition r = a;
  for (std::size_t i = 0; i < r.bits_.size(); ++i)
    r.bits_[i] |= b.bits_[i];
  return r;
}

Proposition prop_from_predicate(const SpacePtr& space, const AtomPredicate& pred) {
  Proposition p(space);
  for (std::size_t id = 0; id < space->size(); ++id)
    if (pred(*space, id))
      p.set(id);
  return p;
}

// --- partitions ------------------------------------------------------------

StateSpacePartition make_partition(SpacePtr space, std::vector<Block> blocks) {
  if (blocks.empty())
    throw std::invalid_argument("a partition needs at least one block");
  for (const auto& b : blocks)
    if (b.members.space() != space)
      throw std::invalid_argument("block '" + b.name + "' belongs to a different space");
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      const Proposition both = blocks[i].members & blocks[j].members;
      if (!both.is_bottom())
        throw std::invalid_argument("blocks '" + blocks[i].name + "' and '" + blocks[j].name +
                                    "' overlap on " + space->label(both.members().front()));
    }
  }
  Proposition covered = Proposition::bottom(space);
  for (const auto& b : blocks)
    covered = covered | b.members;
  if (!covered.is_top())
    throw std::invalid_argument("partition is not exhaustive: " +
                                space->label((~covered).members().front()) +
                                " is in no block");
  return StateSpacePartition(std::move(space), std::move(blocks));
}

}  // namespace evidentia
