#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hallpi/group.hpp"
#include "hallpi/search.hpp"

namespace hallpi {

/// A subgroup together with a provenance label ("flag(2,1,2)", "sylow_2").
/// The ambient group is passed explicitly to every operation.
struct Subgroup {
  Group group;
  std::string tag;

  const Order& order() const { return group.order(); }
};

/// Checks that every generator of h lies in parent.
Subgroup make_subgroup(const Group& parent, Group h, std::string tag = {});

/// Thresholds shared by the subgroup algorithms.
struct SubgroupOptions {
  /// Normalizers, centralizers and conjugacy are found by scanning all
  /// elements of the parent up to this order; above it, by backtrack.
  std::uint64_t brute_force_order = 5000;
  /// Intersections are formed by filtering elements up to this order.
  std::uint64_t filter_order = 10'000;
  std::uint64_t node_cap = 10'000'000;
  std::uint64_t enumeration_cap = 50'000;
  std::uint64_t quotient_index_cap = 100'000;
  std::uint64_t seed = 1;
};

enum class Verdict { Yes, No, Indeterminate };

std::string to_string(Verdict v);

/// Result of a conjugacy test.  A Yes carries a transporter t with
/// source^t == target, re-verified before it is returned; a No carries the
/// certificate that separated the two.
struct ConjugacyResult {
  Verdict verdict = Verdict::Indeterminate;
  std::optional<Permutation> transporter;
  std::string certificate;
};

/// Orbit lengths of h, each tagged with the index of the parent orbit
/// containing it, sorted.  Invariant under conjugation inside the parent.
using OrbitSignature = std::vector<std::pair<std::uint32_t, std::uint32_t>>;
OrbitSignature orbit_signature(const Group& parent, const Group& h);
std::string format_signature(const OrbitSignature& sig);

/// Multiset of element orders, for groups up to `cap` elements.
std::map<std::uint64_t, std::uint64_t> element_order_histogram(const Group& h, std::uint64_t cap);

Subgroup generated(const Group& parent, std::span<const Permutation> elements, std::string tag = {});

bool normalizes(const Group& h, const Permutation& g);
bool is_normal(const Group& g, const Group& a);

Subgroup normalizer(const Group& parent, const Group& h, const SubgroupOptions& options = {});
Subgroup centralizer(const Group& parent, const Group& h, const SubgroupOptions& options = {});

/// Runs the prefilters (order, orbit signature, element-order histogram) and
/// then searches for a transporter in parent.
ConjugacyResult are_conjugate(const Group& parent, const Group& h, const Group& k,
                              const SubgroupOptions& options = {});

/// Re-checks h^t == k generator by generator in both directions.
bool verify_transporter(const Group& h, const Group& k, const Permutation& t);

/// h intersected with a (both in the same symmetric group).
Group intersection(const Group& h, const Group& a, const SubgroupOptions& options = {});

/// A Sylow p-subgroup grown by normalizer ascent.  p not dividing |g|
/// gives the trivial subgroup.  Throws RangeError if p is not prime.
Subgroup sylow(const Group& g, std::uint64_t p, const SubgroupOptions& options = {});

/// Every normal subgroup, sorted by order (ties by discovery order).
std::vector<Subgroup> normal_subgroups(const Group& g, const SubgroupOptions& options = {});

/// G/A realised on the cosets of A.
class Quotient {
 public:
  Quotient(const Group& g, const Group& a, std::uint64_t index_cap);

  const Group& image() const noexcept { return image_; }
  std::size_t index() const noexcept { return reps_.size(); }
  /// The coset action of an element of G.
  Permutation project(const Permutation& x) const;
  /// Image of a subgroup of G.
  Group project_group(const Group& h) const;
  /// Coset number of the coset containing x.
  std::size_t coset_of(const Permutation& x) const;

 private:
  Permutation canonical(const Permutation& x) const;

  Group a_;
  std::vector<Permutation> reps_;
  std::unordered_map<Permutation, std::size_t, PermutationHash> lookup_;
  Group image_;
};

/// Throws PreconditionError if a is not normal in g, CapExceeded if the
/// index is above the cap.
Quotient quotient(const Group& g, const Group& a, const SubgroupOptions& options = {});

/// Small helpers on orders.
bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_divisors(const Order& n);

}  // namespace hallpi
