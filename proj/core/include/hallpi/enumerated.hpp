#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "hallpi/group.hpp"

namespace hallpi {

using Index = std::uint32_t;

/// A group small enough to list: every element gets an index (0 is the
/// identity, order follows Group::elements) and products are resolved by
/// looking up base images.  Used by every exhaustive algorithm.
class ElementTable {
 public:
  ElementTable(const Group& g, std::uint64_t cap);

  const Group& group() const noexcept { return group_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const Permutation& element(Index i) const { return elements_[i]; }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }

  std::optional<Index> find(const Permutation& p) const;
  /// Throws PreconditionError if p is not in the group.
  Index index_of(const Permutation& p) const;

  Index mul(Index a, Index b) const;
  Index inv(Index a) const { return inverse_[a]; }
  /// b^-1 a b.
  Index conj(Index a, Index b) const { return mul(mul(inverse_[b], a), b); }
  std::uint64_t order_of(Index a) const { return orders_[a]; }

  /// Indices of the group's (non-identity) generators.
  const std::vector<Index>& generator_indices() const noexcept { return generators_; }
  /// x conjugated by the k-th generator.
  Index conj_by_generator(std::size_t k, Index x) const { return conj_tables_[k][x]; }

  /// Pseudo-random 64-bit label used to hash element sets.
  std::uint64_t label(Index a) const { return labels_[a]; }

 private:
  std::uint64_t key_of(const Permutation& p) const;
  std::uint64_t key_of_product(const Permutation& a, const Permutation& b) const;
  Index lookup(std::uint64_t key) const;

  Group group_;
  std::vector<Point> base_;
  unsigned bits_ = 0;
  bool packed_ = true;
  std::vector<Permutation> elements_;
  std::unordered_map<std::uint64_t, Index> index_;
  std::vector<Index> inverse_;
  std::vector<std::uint64_t> orders_;
  std::vector<Index> generators_;
  std::vector<std::vector<Index>> conj_tables_;
  std::vector<std::uint64_t> labels_;
};

/// A subgroup of an ElementTable given by its element set.
struct ElementSubgroup {
  std::vector<Index> elements;  ///< identity first, otherwise closure order
  std::vector<Index> generators;
  boost::dynamic_bitset<> mask;
  std::uint64_t key = 0;  ///< sum of element labels, order independent

  std::size_t size() const noexcept { return elements.size(); }
  bool contains(Index i) const { return mask.test(i); }
  bool operator==(const ElementSubgroup& other) const { return key == other.key && mask == other.mask; }
};

ElementSubgroup trivial_subgroup(const ElementTable& t);

/// Closure of a generator set.  Returns nullopt as soon as the subgroup
/// grows past `limit` elements or, when `admissible` is given, as soon as
/// an element with admissible[e] == false appears.
std::optional<ElementSubgroup> closure(const ElementTable& t, std::span<const Index> generators,
                                       std::size_t limit = SIZE_MAX,
                                       const std::vector<bool>* admissible = nullptr);

/// <U, x> by Dimino's coset extension, with the same early exits.
std::optional<ElementSubgroup> extend(const ElementTable& t, const ElementSubgroup& u, Index x,
                                      std::size_t limit = SIZE_MAX,
                                      const std::vector<bool>* admissible = nullptr);

ElementSubgroup conjugate(const ElementTable& t, const ElementSubgroup& u, Index g);

bool normalizes(const ElementTable& t, const ElementSubgroup& u, Index g);

ElementSubgroup from_group(const ElementTable& t, const Group& h);

/// Permutation group on the same points as the table's group.
Group to_group(const ElementTable& t, const ElementSubgroup& u);

/// Conjugacy classes of subgroups, indexed by every member of each class.
///
/// Adding a class walks its whole conjugation orbit (via the generators of
/// the ambient group) and files each conjugate under its key together with
/// a conjugating element, so lookups are exact and return a transporter.
class SubgroupClassIndex {
 public:
  explicit SubgroupClassIndex(const ElementTable& t) : table_(&t) {}

  struct Hit {
    std::size_t cls;
    Index transporter;  ///< rep^transporter == query
  };

  std::optional<Hit> find(const ElementSubgroup& u) const;

  /// Adds the class of u (which must not be present) and returns its id.
  std::size_t add(ElementSubgroup u);

  std::size_t class_count() const noexcept { return reps_.size(); }
  const ElementSubgroup& representative(std::size_t cls) const { return reps_[cls]; }
  std::size_t class_size(std::size_t cls) const { return sizes_[cls]; }

  /// Every member of a class, each with a transporter from the rep.
  std::vector<std::pair<ElementSubgroup, Index>> members(std::size_t cls) const;

 private:
  struct Entry {
    std::size_t cls;
    Index transporter;
  };
  const ElementTable* table_;
  std::vector<ElementSubgroup> reps_;
  std::vector<std::size_t> sizes_;
  std::unordered_multimap<std::uint64_t, Entry> entries_;
};

/// Conjugacy classes of elements (orbits under conjugation), each sorted;
/// classes ordered by their smallest index.
std::vector<std::vector<Index>> element_classes(const ElementTable& t);

}  // namespace hallpi
