#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hallpi {

using Point = std::uint32_t;

/// A bijection of {0, ..., n-1}.
///
/// Products are read left to right: in `p * q` the point x is first moved by
/// p and then by q, i.e. x^(pq) = (x^p)^q.  Every algorithm in the library
/// relies on this convention.  Points are 0-based internally; cycle notation
/// (parsing and printing) is 1-based.
class Permutation {
 public:
  Permutation() = default;

  /// Identity of the given degree.
  explicit Permutation(std::size_t degree);

  /// Takes ownership of an image table; throws PreconditionError unless it
  /// is a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree) { return Permutation(degree); }

  /// Skips the bijection check; for tables produced by the library itself.
  static Permutation from_trusted(std::vector<Point> images) {
    Permutation p;
    p.images_ = std::move(images);
    return p;
  }

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](Point x) const noexcept { return images_[x]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;

  /// Least common multiple of the cycle lengths.
  std::uint64_t order() const;

  /// Smallest moved point, or degree() for the identity.
  Point first_moved_point() const noexcept;

  /// 1-based cycle notation, "()" for the identity.
  std::string to_cycles() const;

  std::size_t hash() const noexcept;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<Point> images_;
};

/// x -> q(p(x)); throws DegreeMismatch on unequal degrees.
Permutation compose(const Permutation& p, const Permutation& q);

inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

/// g^-1 x g.
Permutation conjugate(const Permutation& x, const Permutation& g);

/// p^e for e >= 0.
Permutation power(const Permutation& p, std::uint64_t e);

/// Parses a product of 1-based cycles such as "(1 2)(3 4 5)" or "(1,2,3)".
/// Commas and whitespace both separate points.  A point may appear at most
/// once in the whole text.
Permutation perm_from_cycles(std::string_view text, std::size_t degree);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept { return p.hash(); }
};

}  // namespace hallpi
