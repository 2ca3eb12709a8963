#pragma once

// U-spaces built from declared dimensions, propositions as subsets of them,
// and S-space partitions.
//
// A space is the row-major Cartesian product of its dimensions' labels. A
// finite space counts each element as one atom; a scaled space gives the
// whole space cardinality aleph and each element (a tranche) aleph/n. Element
// ids are dense and follow construction order, which only printing relies on.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "evidentia/hyperrational.hpp"

namespace evidentia {

inline constexpr std::size_t kDefaultAtomLimit = 10'000'000;

struct Dimension {
  std::string name;
  std::vector<std::string> labels;
};

enum class SpaceKind { finite, scaled };

std::string_view to_string(SpaceKind k);

class PossibilitySpace;
using SpacePtr = std::shared_ptr<const PossibilitySpace>;

struct Atom {
  std::size_t id;
  std::string label;
};

class PossibilitySpace {
public:
  SpaceKind kind() const { return kind_; }
  bool is_scaled() const { return kind_ == SpaceKind::scaled; }

  /// Number of elements: atoms for a finite space, tranches for a scaled one.
  std::size_t size() const { return size_; }

  const std::vector<Dimension>& dimensions() const { return dims_; }

  /// Index into dimensions()[dim].labels for element `id`.
  std::size_t coordinate(std::size_t id, std::size_t dim) const {
    return (id / strides_[dim]) % dims_[dim].labels.size();
  }
  std::string_view label(std::size_t id, std::size_t dim) const {
    return dims_[dim].labels[coordinate(id, dim)];
  }
  /// `H` for one dimension, `(A, clubs)` for several.
  std::string label(std::size_t id) const;
  Atom atom(std::size_t id) const { return {id, label(id)}; }

  /// |atoms| for finite spaces, aleph for scaled spaces.
  Hyperrational total_cardinality() const;
  /// Cardinality of one element: 1, or aleph/n for a scaled space.
  Hyperrational unit_cardinality() const;

private:
  friend SpacePtr build_finite_space(std::vector<Dimension>, std::size_t);
  friend SpacePtr build_scaled_space(std::vector<Dimension>, std::size_t);

  PossibilitySpace(SpaceKind kind, std::vector<Dimension> dims, std::size_t max_atoms);

  SpaceKind kind_;
  std::vector<Dimension> dims_;
  std::vector<std::size_t> strides_;
  std::size_t size_ = 1;
};

/// Cartesian product of the dimensions as a finite U-space. Throws
/// std::invalid_argument on an empty dimension list, an empty dimension,
/// a duplicate label or dimension name, or more than `max_atoms` atoms.
SpacePtr build_finite_space(std::vector<Dimension> dims,
                            std::size_t max_atoms = kDefaultAtomLimit);

/// Same product structure, but with total cardinality aleph split into equal
/// tranches of aleph/n.
SpacePtr build_scaled_space(std::vector<Dimension> dims,
                            std::size_t max_atoms = kDefaultAtomLimit);

/// One-dimensional scaled space with the given tranche labels.
SpacePtr build_scaled_space(std::vector<std::string> tranche_labels);

using AtomPredicate = std::function<bool(const PossibilitySpace&, std::size_t)>;

class Proposition {
public:
  static Proposition top(SpacePtr space);
  static Proposition bottom(SpacePtr space);
  /// Throws std::out_of_range for ids outside the space.
  static Proposition from_ids(SpacePtr space, std::span<const std::size_t> ids);

  const SpacePtr& space() const { return space_; }
  std::size_t count() const;
  bool contains(std::size_t id) const {
    return (bits_[id / 64] >> (id % 64)) & 1u;
  }
  std::vector<std::size_t> members() const;
  bool is_top() const { return count() == space_->size(); }
  bool is_bottom() const;

  /// Same space (by identity) and same members.
  friend bool operator==(const Proposition& a, const Proposition& b) {
    return a.space_ == b.space_ && a.bits_ == b.bits_;
  }

  friend Proposition prop_not(const Proposition& a);
  friend Proposition prop_and(const Proposition& a, const Proposition& b);
  friend Proposition prop_or(const Proposition& a, const Proposition& b);

  Proposition operator~() const { return prop_not(*this); }
  friend Proposition operator&(const Proposition& a, const Proposition& b) { return prop_and(a, b); }
  friend Proposition operator|(const Proposition& a, const Proposition& b) { return prop_or(a, b); }

  /// True when the two propositions share no element. Same-space only.
  bool disjoint_with(const Proposition& other) const;
  /// True when every member of *this is a member of `other`. Same-space only.
  bool subset_of(const Proposition& other) const;

private:
  explicit Proposition(SpacePtr space);
  void set(std::size_t id) { bits_[id / 64] |= std::uint64_t{1} << (id % 64); }
  void mask_tail();

  SpacePtr space_;
  std::vector<std::uint64_t> bits_;

  friend Proposition prop_from_predicate(const SpacePtr&, const AtomPredicate&);
};

/// Throws std::invalid_argument when the operands live in different spaces.
Proposition prop_not(const Proposition& a);
Proposition prop_and(const Proposition& a, const Proposition& b);
Proposition prop_or(const Proposition& a, const Proposition& b);

/// All elements whose labels satisfy `pred`.
Proposition prop_from_predicate(const SpacePtr& space, const AtomPredicate& pred);

struct Block {
  std::string name;
  Proposition members;
};

/// A validated S-space: named blocks that are pairwise disjoint and cover the
/// space.
class StateSpacePartition {
public:
  const SpacePtr& space() const { return space_; }
  const std::vector<Block>& blocks() const { return blocks_; }

private:
  friend StateSpacePartition make_partition(SpacePtr, std::vector<Block>);
  StateSpacePartition(SpacePtr space, std::vector<Block> blocks)
      : space_(std::move(space)), blocks_(std::move(blocks)) {}

  SpacePtr space_;
  std::vector<Block> blocks_;
};

/// Throws std::invalid_argument naming the offending blocks or element when
/// blocks overlap, fail to cover the space, or belong to another space.
StateSpacePartition make_partition(SpacePtr space, std::vector<Block> blocks);

}  // namespace evidentia
