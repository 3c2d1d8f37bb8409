#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hallpi/constructors.hpp"
#include "hallpi/enumerated.hpp"
#include "hallpi/subgroup.hpp"

namespace hallpi {

/// A finite set of primes, sorted and deduplicated.
class PrimeSet {
 public:
  PrimeSet() = default;
  /// Throws RangeError if an entry is not prime.
  explicit PrimeSet(std::vector<std::uint64_t> primes);
  /// "2,3" or "{2,3}"; "" and "{}" give the empty set.  Throws ParseError on
  /// malformed text, RangeError on non-primes.
  static PrimeSet parse(std::string_view text);
  /// The prime divisors of n.
  static PrimeSet of(const Order& n);

  const std::vector<std::uint64_t>& primes() const noexcept { return primes_; }
  bool empty() const noexcept { return primes_.empty(); }
  bool contains(std::uint64_t p) const;
  bool includes(const PrimeSet& other) const;
  PrimeSet intersect(const PrimeSet& other) const;
  /// "{2,3}".
  std::string to_string() const;
  /// "2,3" (the CLI form).
  std::string to_list() const;

  /// Every subset of this set, in binary-counting order (empty set first).
  std::vector<PrimeSet> subsets() const;

  bool operator==(const PrimeSet&) const = default;

 private:
  std::vector<std::uint64_t> primes_;
};

/// Largest divisor of n whose prime factors all lie in pi.
Order pi_part(const Order& n, const PrimeSet& pi);
std::uint64_t pi_part(std::uint64_t n, const PrimeSet& pi);
bool is_pi_number(const Order& n, const PrimeSet& pi);

/// |H| equals the pi-part of |G|.
bool is_hall(const Group& g, const Group& h, const PrimeSet& pi);
/// The two-sided form: |H| a pi-number and |G:H| a pi'-number.
bool is_hall_by_index(const Group& g, const Group& h, const PrimeSet& pi);

enum class Provenance { Exhaustive, CatalogCertified };
std::string to_string(Provenance p);

enum class Mode { Exhaustive, CatalogCertified, Auto };
std::string to_string(Mode m);
/// "exhaustive", "catalog", "auto" (case-insensitive).  Throws ParseError.
Mode parse_mode(std::string_view text);

/// Assumption attached to catalog-certified class lists.
inline constexpr std::string_view kParabolicAssumption =
    "parabolic-hall-classification: when the characteristic p of GL(n,q) lies in pi, every pi-Hall "
    "subgroup is conjugate to a flag stabilizer";

/// One conjugacy class of subgroups.
struct SubgroupClass {
  Subgroup representative;
  Order class_size = 1;
  Provenance provenance = Provenance::Exhaustive;
  /// Why this class differs from the others (orbit signature etc.).
  std::string certificate;
  std::vector<std::string> assumptions;
};

struct HallOptions {
  /// Largest |G| for the exhaustive pi-subgroup search.
  std::uint64_t exhaustive_threshold = 50'000;
  SubgroupOptions subgroup;
};

/// Every conjugacy class of pi-subgroups of a group small enough to list,
/// found breadth first from the trivial subgroup.  A class is extended by
/// each pi-element x (one per double coset UxU and per cyclic subgroup);
/// closures containing a non-pi element are abandoned.  Each pi-subgroup
/// V > 1 is <U, x> for some pi-subgroup U < V, so the search is complete.
class PiSubgroupLattice {
 public:
  PiSubgroupLattice(const Group& g, const PrimeSet& pi, const HallOptions& options = {});

  const ElementTable& table() const noexcept { return *table_; }
  std::shared_ptr<const ElementTable> shared_table() const noexcept { return table_; }
  const SubgroupClassIndex& index() const noexcept { return *index_; }
  const PrimeSet& pi() const noexcept { return pi_; }
  std::uint64_t hall_order() const noexcept { return hall_order_; }

  std::size_t class_count() const noexcept { return maximal_.size(); }
  const ElementSubgroup& representative(std::size_t c) const { return index_->representative(c); }
  std::size_t class_size(std::size_t c) const { return index_->class_size(c); }
  bool maximal(std::size_t c) const { return maximal_[c]; }
  bool hall(std::size_t c) const { return representative(c).size() == hall_order_; }

  std::vector<std::size_t> maximal_classes() const;
  std::vector<std::size_t> hall_classes() const;

 private:
  std::shared_ptr<const ElementTable> table_;
  std::shared_ptr<SubgroupClassIndex> index_;
  PrimeSet pi_;
  std::uint64_t hall_order_ = 1;
  std::vector<bool> maximal_;
};

/// Classes of maximal pi-subgroups (exhaustive).  Throws CapExceeded above
/// the threshold.
std::vector<SubgroupClass> max_pi_subgroups(const Group& g, const PrimeSet& pi, const HallOptions& options = {});

/// Hall classes plus the data needed to interpret them.
struct HallResult {
  PrimeSet pi;            ///< as requested
  PrimeSet effective_pi;  ///< pi intersected with pi(G)
  Order hall_order = 1;
  Provenance provenance = Provenance::Exhaustive;
  std::vector<SubgroupClass> classes;
  std::vector<std::string> assumptions;
  /// Maximal pi-subgroup classes that are not Hall (exhaustive mode only).
  std::vector<SubgroupClass> non_hall_maximal;
  bool maximal_data = false;
  /// Exhaustive mode: the search behind the classes, and the lattice class
  /// id of each entry of `classes`.
  std::shared_ptr<const PiSubgroupLattice> lattice;
  std::vector<std::size_t> lattice_ids;
};

/// Exhaustive below the threshold; CatalogCertified for registered groups
/// (GL(n,q) and its inverse-transpose extension with p in pi).  Auto picks
/// the first that applies.  Throws CapExceeded (exhaustive above the
/// threshold) or PreconditionError (no catalog entry).
HallResult hall_classes(const BuiltGroup& g, const PrimeSet& pi, Mode mode, const HallOptions& options = {});
HallResult hall_classes(const Group& g, const PrimeSet& pi, const HallOptions& options = {});

/// True if a catalog family is registered for (g, pi).
bool catalog_applies(const BuiltGroup& g, const PrimeSet& pi);

/// Eπ / Cπ / Dπ with witnesses.
struct PropertyReport {
  PrimeSet pi;
  PrimeSet effective_pi;
  Order group_order = 1;
  Order hall_order = 1;
  Verdict e = Verdict::Indeterminate;
  Verdict c = Verdict::Indeterminate;
  Verdict d = Verdict::Indeterminate;
  /// Number of Hall classes; unset when unknown.
  std::optional<std::size_t> k;
  Provenance provenance = Provenance::Exhaustive;
  std::vector<std::string> witnesses;
  std::vector<std::string> assumptions;
  std::vector<std::string> notes;
  HallResult hall;
};

PropertyReport classify_properties(const BuiltGroup& g, const PrimeSet& pi, Mode mode = Mode::Auto,
                                   const HallOptions& options = {});
PropertyReport classify_properties(const Group& g, const PrimeSet& pi, const HallOptions& options = {});

/// A normal series 1 = N_0 < ... < N_k = G (each N_i normal in G) whose
/// factors are all pi- or pi'-groups, if one exists among the normal
/// subgroups of G.  Requires |G| within the enumeration cap.
std::optional<std::vector<Group>> pi_separable_series(const Group& g, const PrimeSet& pi,
                                                      const HallOptions& options = {});

/// The Hall classes of a normal subgroup A induced from G.
struct InducedResult {
  /// Every Hall class of A (exhaustive or catalog), indexed as in
  /// `induced`.
  HallResult a_classes;
  /// Indices into a_classes.classes of the G-induced classes.
  std::vector<std::size_t> induced;
  std::size_t k_pi_g_of_a() const { return induced.size(); }
  std::vector<std::string> assumptions;
};

/// Throws PreconditionError if A is not normal in G.
InducedResult induced_classes(const BuiltGroup& g, const HallResult& g_classes, const BuiltGroup& a,
                              const PrimeSet& pi, Mode mode = Mode::Auto, const HallOptions& options = {});

/// Which class of `classes` (Hall classes of A) contains U, if any.
/// Exhaustive class lists are looked up exactly; otherwise via are_conjugate.
std::optional<std::size_t> locate_class(const Group& a, const HallResult& classes, const Group& u,
                                        const HallOptions& options = {});

/// The A-class generated by one class representative per direct factor.
/// Throws PreconditionError unless A is the internal direct product of
/// the factors.
SubgroupClass class_product(const std::vector<std::pair<Group, SubgroupClass>>& factors, const Group& a,
                            const HallOptions& options = {});

/// Is the A-class of `rep` mapped to itself by conjugation under every
/// generator of H?  Throws PreconditionError if H does not normalize A.
Verdict is_class_invariant(const Group& h, const Group& rep, const Group& a, const HallOptions& options = {});

}  // namespace hallpi
