#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "hallpi/field.hpp"
#include "hallpi/group.hpp"

namespace hallpi {

enum class Family { Sym, Alt, Cyclic, Dihedral, GL, SL, PSL, PGL, Direct, Semidirect, FromFile };

std::string to_string(Family f);

/// A parsed group description such as `Semidirect(GL(5,2),TransposeInverse)`.
struct GroupSpec {
  Family family = Family::Sym;
  /// n for the named families; n, q for the matrix families.
  std::vector<std::int64_t> params;
  /// Factors of Direct; the base group of Semidirect.
  std::vector<GroupSpec> children;
  /// Semidirect only: "TransposeInverse", "Swap" or "Images".
  std::string automorphism;
  /// Images only: image of each generator of the base, in cycle notation.
  std::vector<std::string> images;
  /// FromFile only.
  std::string path;

  /// Whitespace-free form, e.g. `Direct(Sym(3),Cyclic(2))`.
  std::string canonical() const;
  /// 1 for a leaf.
  int depth() const;
};

/// Parses the group-spec mini-language.  Whitespace between tokens is
/// ignored.  Throws ParseError (with offset) on syntax errors and unknown
/// families, RangeError on parameters out of range.
GroupSpec parse_group_spec(std::string_view text);

struct BuildOptions {
  /// Largest n for Sym/Alt/Cyclic/Dihedral.
  std::size_t degree_cap = 12;
  /// Largest degree of any other constructed group.
  std::size_t matrix_degree_cap = 5000;
  std::uint64_t seed = 1;
};

/// Matrix data kept alongside a matrix group (or a semidirect product over
/// one), so that subgroups can be described by matrices.
struct MatrixGroupInfo {
  Family family = Family::GL;
  std::uint32_t n = 0, q = 0;
  std::shared_ptr<const MatrixDomain> domain;
  std::vector<Matrix> generators;
};

/// A constructed group and how it was built.
struct BuiltGroup {
  GroupSpec spec;
  Group group;
  std::optional<MatrixGroupInfo> matrix;
  /// Semidirect: the embedded copy of the base group (normal, index =
  /// automorphism order).  Direct: unset.
  std::optional<Group> normal;
  /// Semidirect: the adjoined element inducing the automorphism.
  std::optional<Permutation> adjoined;
  /// Direct: the embedded factors, in order.
  std::vector<Group> factors;
};

/// An automorphism of `base`, given by the images of base.generators().
struct Automorphism {
  Group base;
  std::vector<Permutation> images;
  std::uint64_t order = 1;
  /// A permutation of the domain whose conjugation action is this
  /// automorphism, when there is one.
  std::optional<Permutation> inducing;
  std::string tag;
};

/// Evaluates the homomorphism determined by generator images on arbitrary
/// elements of the source group.
class Homomorphism {
 public:
  /// Throws PreconditionError if the images do not define a homomorphism.
  Homomorphism(const Group& source, const std::vector<Permutation>& images);

  Permutation operator()(const Permutation& x) const;
  const Group& image() const noexcept { return image_; }

 private:
  std::size_t source_degree_;
  Group graph_;  // generated by (g, image of g) on the disjoint union
  Group image_;
};

/// Verifies that the images define an automorphism (kernel trivial, image
/// everything, plus `checks` random product checks) and computes its order.
/// Throws PreconditionError on failure.
Automorphism make_automorphism(const Group& base, std::vector<Permutation> images, std::string tag = "Images",
                               std::uint64_t seed = 1, int checks = 100);

Group make_named(Family family, std::int64_t n, const BuildOptions& options = {});

/// Matrix group in its natural action: GL and SL on nonzero vectors, PSL
/// and PGL on projective points.  The stabilizer-chain order is checked
/// against the classical formula.
BuiltGroup make_matrix_group(Family family, std::uint32_t n, std::uint32_t q, const BuildOptions& options = {});

/// |GL(n,q)|, |SL(n,q)|, |PSL(n,q)|, |PGL(n,q)| from the product formulas.
Order classical_order(Family family, std::uint32_t n, std::uint32_t q);

/// Both groups side by side on the disjoint union of their domains.
BuiltGroup direct_product(const std::vector<Group>& factors);

/// G x| <a>: realised by the inducing permutation when the automorphism has
/// one, otherwise on a.order copies of the domain (copy j acts through
/// a^-j).  normal = embedded G, adjoined = the element inducing a.
BuiltGroup semidirect_by_automorphism(const Automorphism& a, const BuildOptions& options = {});

/// The matrix group `base` re-realised on vectors plus covectors together
/// with inverse-transpose (induced by the swap of the two halves).
Automorphism transpose_inverse_automorphism(const BuiltGroup& base);
Automorphism transpose_inverse_automorphism(std::uint32_t n, std::uint32_t q);

/// Dimension jumps n_1, ..., n_s of a flag V_0 < V_1 < ... < V_s = V.
struct FlagSpec {
  std::vector<std::uint32_t> dims;
  std::string label() const;  // "flag(2,1,2)"
};

/// Stabilizer of the standard flag with the given jumps: V_k is spanned by
/// the last n_1 + ... + n_k basis vectors.  Requires a GL group (or a
/// semidirect product over one), acting on its `normal` part if present.
Group flag_stabilizer(const BuiltGroup& gl, const FlagSpec& flag);
/// |GL_{n_1}(q)| ... |GL_{n_s}(q)| * q^(above-diagonal cells).
Order flag_stabilizer_order(const FlagSpec& flag, std::uint32_t q);

/// The designated normal subgroup of a semidirect product as a group in
/// its own right (keeping matrix data), or nullopt.
std::optional<BuiltGroup> normal_part(const BuiltGroup& g);

BuiltGroup build(const GroupSpec& spec, const BuildOptions& options = {});
BuiltGroup build(std::string_view spec_text, const BuildOptions& options = {});

}  // namespace hallpi
