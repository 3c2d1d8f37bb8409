#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <iosfwd>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "hallpi/perm.hpp"

namespace hallpi {

/// Exact group orders.  Products of orders overflow 32 bits quickly
/// (|GL(5,2)| x 2 is already 19,998,720), so orders are never fixed width.
using Order = boost::multiprecision::cpp_int;

/// Narrows an order to 64 bits; throws CapExceeded if it does not fit.
std::uint64_t to_u64(const Order& n);

/// A permutation group given by generators together with a base and strong
/// generating set.
///
/// The stabilizer chain is built deterministically by Schreier-Sims: the
/// base starts with any requested prefix, then takes the first point moved
/// by the earliest generator that fixes the base so far, and each deeper
/// base point is the first point moved by the strong generator that forced
/// it.  Identical generator sequences therefore give identical bases and
/// identical element enumeration order.  Groups are immutable once built.
class Group {
 public:
  struct Level {
    Point base_point = 0;
    /// Strong generators fixing every earlier base point.
    std::vector<Permutation> generators;
    /// Fundamental orbit; orbit[0] is the base point.
    std::vector<Point> orbit;
    /// position[x] is the index of x in orbit, or -1.
    std::vector<std::int32_t> position;
    /// transversal[i] maps base_point to orbit[i].
    std::vector<Permutation> transversal;
    std::vector<Permutation> inverse_transversal;

    bool in_orbit(Point x) const { return position[x] >= 0; }
    const Permutation& coset_rep(Point x) const { return transversal[static_cast<std::size_t>(position[x])]; }
  };

  /// The trivial group of degree 0.
  Group() = default;

  /// Builds the stabilizer chain.  All generators must have the given
  /// degree.  base_prefix points come first in the base (in order) even if
  /// the group fixes them.
  static Group build(std::vector<Permutation> generators, std::size_t degree,
                     std::span<const Point> base_prefix = {});

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  const Order& order() const noexcept { return order_; }
  bool is_trivial() const noexcept { return order_ == 1; }

  std::vector<Point> base() const;
  std::size_t base_length() const noexcept { return levels_.size(); }
  const Level& level(std::size_t i) const { return levels_.at(i); }
  const std::vector<Level>& levels() const noexcept { return levels_; }

  /// All strong generators (the level-0 generating set).
  const std::vector<Permutation>& strong_generators() const;

  /// Sifts p through the chain from `from_level`.  Returns the residue and
  /// the level where sifting stopped (base_length() if it went through).
  std::pair<Permutation, std::size_t> strip(Permutation p, std::size_t from_level = 0) const;

  /// Membership by sifting; throws DegreeMismatch.
  bool contains(const Permutation& p) const;

  /// Every element exactly once in transversal-word order: the element with
  /// orbit positions (j_0, ..., j_{k-1}) is t_{k-1}(j_{k-1}) ... t_0(j_0),
  /// enumerated with j_0 varying slowest.  Throws CapExceeded if the order
  /// is above cap.
  std::vector<Permutation> elements(std::uint64_t cap) const;

  /// Uniformly random element (product of random coset representatives).
  Permutation random_element(std::mt19937_64& rng) const;

  /// The pointwise stabilizer of the first `level` base points, reusing the
  /// tail of this chain.
  Group stabilizer(std::size_t level) const;

  /// Same group, chain rebuilt so that the base starts with `prefix`.
  Group with_base_prefix(std::span<const Point> prefix) const;

  /// Orbits on {0..degree-1}, each sorted, ordered by smallest point.
  std::vector<std::vector<Point>> orbits() const;

  /// True iff both groups have the same degree and the same elements.
  bool same_elements(const Group& other) const;

  /// Every generator of `other` lies in this group.
  bool contains_group(const Group& other) const;

 private:
  void schreier_sims(std::span<const Point> base_prefix);
  void rebuild_orbit(std::size_t i);
  void finish();

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Level> levels_;
  std::vector<Permutation> no_generators_;
  Order order_ = 1;
};

/// Builds a group from a non-empty generator list (degree taken from the
/// first generator).  Throws DegreeMismatch on mixed degrees.
Group build_group(std::vector<Permutation> generators);

/// Builds a group of known degree; the generator list may be empty.
Group build_group(std::vector<Permutation> generators, std::size_t degree);

/// Contents of a generator file.
struct GeneratorFile {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
};

/// Parses the generator file format: a `degree N` line, then one
/// permutation in cycle notation per non-empty line.  Lines whose first
/// non-blank character is `#` are comments.
GeneratorFile parse_generator_file(std::istream& in);
GeneratorFile read_generator_file(const std::string& path);
void write_generator_file(std::ostream& out, const Group& g);

}  // namespace hallpi
