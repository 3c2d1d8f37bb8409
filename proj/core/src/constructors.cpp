#include "hallpi/constructors.hpp"

#include <filesystem>
#include <numeric>

#include "hallpi/error.hpp"

#ifndef HALLPI_DATA_DIR
#define HALLPI_DATA_DIR "data"
#endif

namespace hallpi {

std::string to_string(Family f) {
  switch (f) {
    case Family::Sym:
      return "Sym";
    case Family::Alt:
      return "Alt";
    case Family::Cyclic:
      return "Cyclic";
    case Family::Dihedral:
      return "Dihedral";
    case Family::GL:
      return "GL";
    case Family::SL:
      return "SL";
    case Family::PSL:
      return "PSL";
    case Family::PGL:
      return "PGL";
    case Family::Direct:
      return "Direct";
    case Family::Semidirect:
      return "Semidirect";
    case Family::FromFile:
      return "FromFile";
  }
  return "?";
}

std::string GroupSpec::canonical() const {
  std::string out = to_string(family) + "(";
  switch (family) {
    case Family::Direct:
      for (std::size_t i = 0; i < children.size(); ++i) {
        if (i) out += ",";
        out += children[i].canonical();
      }
      break;
    case Family::Semidirect:
      out += children.at(0).canonical() + "," + automorphism;
      if (automorphism == "Images") {
        out += "[";
        for (std::size_t i = 0; i < images.size(); ++i) {
          if (i) out += ";";
          out += images[i];
        }
        out += "]";
      }
      break;
    case Family::FromFile:
      out += path;
      break;
    default:
      for (std::size_t i = 0; i < params.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(params[i]);
      }
  }
  return out + ")";
}

int GroupSpec::depth() const {
  int d = 0;
  for (const auto& c : children) d = std::max(d, c.depth());
  return d + 1;
}

Homomorphism::Homomorphism(const Group& source, const std::vector<Permutation>& images)
    : source_degree_(source.degree()) {
  const auto& gens = source.generators();
  if (gens.size() != images.size()) throw PreconditionError("homomorphism: one image per generator required");
  std::size_t n = source_degree_;
  std::size_t m = images.empty() ? n : images.front().degree();
  std::vector<Permutation> pairs;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (images[i].degree() != m) throw DegreeMismatch("homomorphism: images of mixed degree");
    std::vector<Point> v(n + m);
    for (std::size_t x = 0; x < n; ++x) v[x] = gens[i][x];
    for (std::size_t x = 0; x < m; ++x) v[n + x] = static_cast<Point>(n + images[i][x]);
    pairs.push_back(Permutation::from_trusted(std::move(v)));
  }
  std::vector<Point> prefix = source.base();
  graph_ = Group::build(std::move(pairs), n + m, prefix);
  if (graph_.order() != source.order()) throw PreconditionError("images do not define a homomorphism");
  image_ = Group::build(images, m);
}

Permutation Homomorphism::operator()(const Permutation& x) const {
  std::size_t n = source_degree_;
  std::size_t total = graph_.degree();
  if (x.degree() != n) throw DegreeMismatch("homomorphism: argument degree");
  std::vector<Point> zv(total);
  for (std::size_t p = 0; p < total; ++p) zv[p] = p < n ? x[p] : static_cast<Point>(p);
  Permutation z = Permutation::from_trusted(std::move(zv));
  Permutation acc = Permutation::identity(total);
  for (const auto& lv : graph_.levels()) {
    if (lv.base_point >= n) break;
    Point gamma = z[lv.base_point];
    if (!lv.in_orbit(gamma)) throw PreconditionError("homomorphism: element outside the source group");
    std::size_t j = static_cast<std::size_t>(lv.position[gamma]);
    z = z * lv.inverse_transversal[j];
    acc = lv.transversal[j] * acc;
  }
  for (std::size_t p = 0; p < n; ++p) {
    if (z[p] != p) throw PreconditionError("homomorphism: element outside the source group");
  }
  std::vector<Point> out(total - n);
  for (std::size_t p = 0; p < out.size(); ++p) out[p] = static_cast<Point>(acc[n + p] - n);
  return Permutation::from_trusted(std::move(out));
}

namespace {

std::vector<Permutation> apply_all(const Homomorphism& h, const std::vector<Permutation>& xs) {
  std::vector<Permutation> out;
  for (const auto& x : xs) out.push_back(h(x));
  return out;
}

Automorphism finish_automorphism(const Group& base, std::vector<Permutation> images, std::string tag,
                                 std::uint64_t seed, int checks, std::uint64_t declared_order) {
  Homomorphism h(base, images);
  if (h.image().degree() != base.degree() || h.image().order() != base.order() ||
      !base.contains_group(h.image())) {
    throw PreconditionError("images do not define an automorphism");
  }
  std::mt19937_64 rng(seed);
  for (int i = 0; i < checks; ++i) {
    Permutation x = base.random_element(rng);
    Permutation y = base.random_element(rng);
    if (h(x * y) != h(x) * h(y)) throw PreconditionError("automorphism check failed on a random pair");
  }
  std::uint64_t order = 1;
  std::vector<Permutation> current = images;
  while (current != base.generators()) {
    current = apply_all(h, current);
    if (++order > 100'000) throw CapExceeded("automorphism order above 100000");
  }
  if (declared_order != 0) {
    if (declared_order % order != 0) throw PreconditionError("declared order is not a multiple of the order");
    order = declared_order;
  }
  return Automorphism{base, std::move(images), order, std::nullopt, std::move(tag)};
}

std::vector<Point> cycle_points(std::size_t first, std::size_t n) {
  std::vector<Point> v(first + n);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<Point>(i);
  return v;
}

}  // namespace

Automorphism make_automorphism(const Group& base, std::vector<Permutation> images, std::string tag,
                               std::uint64_t seed, int checks) {
  return finish_automorphism(base, std::move(images), std::move(tag), seed, checks, 0);
}

Group make_named(Family family, std::int64_t n, const BuildOptions& options) {
  std::string name = to_string(family) + "(" + std::to_string(n) + ")";
  if (n < 1 || static_cast<std::uint64_t>(n) > options.degree_cap) {
    throw RangeError(name + ": n must be between 1 and " + std::to_string(options.degree_cap));
  }
  std::size_t d = static_cast<std::size_t>(n);
  auto cycle = [&](std::size_t from, std::size_t to) {
    // (from+1 ... to) in 1-based notation
    auto v = cycle_points(0, d);
    for (std::size_t i = from; i + 1 < to; ++i) v[i] = static_cast<Point>(i + 1);
    v[to - 1] = static_cast<Point>(from);
    return Permutation(std::move(v));
  };
  std::vector<Permutation> gens;
  Order expected = 1;
  switch (family) {
    case Family::Sym:
      if (d >= 2) gens = {cycle(0, 2), cycle(0, d)};
      for (std::size_t i = 2; i <= d; ++i) expected *= i;
      break;
    case Family::Alt:
      if (d >= 3) gens = {cycle(0, 3), d % 2 ? cycle(0, d) : cycle(1, d)};
      for (std::size_t i = 3; i <= d; ++i) expected *= i;
      break;
    case Family::Cyclic:
      if (d >= 2) gens = {cycle(0, d)};
      expected = d;
      break;
    case Family::Dihedral: {
      if (d < 3) throw RangeError(name + ": n must be at least 3");
      std::vector<Point> refl(d);
      for (std::size_t i = 0; i < d; ++i) refl[i] = static_cast<Point>((d - i) % d);
      gens = {cycle(0, d), Permutation(std::move(refl))};
      expected = 2 * d;
      break;
    }
    default:
      throw PreconditionError(name + " is not a named permutation family");
  }
  Group g = Group::build(std::move(gens), d);
  if (g.order() != expected) throw Error(name + ": constructed order differs from n-formula");
  return g;
}

Order classical_order(Family family, std::uint32_t n, std::uint32_t q) {
  Order gl = 1;
  Order qn = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    // |GL(n,q)| = prod_{i=0}^{n-1} (q^n - q^i)
    Order qi = boost::multiprecision::pow(Order(q), i);
    if (i == 0) qn = boost::multiprecision::pow(Order(q), n);
    gl *= qn - qi;
  }
  std::uint32_t g = std::gcd(n, q - 1);
  switch (family) {
    case Family::GL:
      return gl;
    case Family::SL:
    case Family::PGL:
      return gl / (q - 1);
    case Family::PSL:
      return gl / (q - 1) / g;
    default:
      throw PreconditionError("classical_order: not a matrix family");
  }
}

namespace {

Matrix transvection(std::uint32_t n, std::uint32_t i, std::uint32_t j, FiniteField::Elem lambda) {
  Matrix m = identity_matrix(n);
  m.at(i, j) = lambda;
  return m;
}

Matrix diagonal(std::uint32_t n, std::uint32_t i, FiniteField::Elem x) {
  Matrix m = identity_matrix(n);
  m.at(i, i) = x;
  return m;
}

}  // namespace

BuiltGroup make_matrix_group(Family family, std::uint32_t n, std::uint32_t q, const BuildOptions& options) {
  std::string name = to_string(family) + "(" + std::to_string(n) + "," + std::to_string(q) + ")";
  if (family != Family::GL && family != Family::SL && family != Family::PSL && family != Family::PGL) {
    throw PreconditionError(name + " is not a matrix family");
  }
  if (n < 1) throw RangeError(name + ": dimension must be positive");
  if (!FiniteField::supported(q)) throw RangeError(name + ": q = " + std::to_string(q) + " is not supported");
  bool projective = family == Family::PSL || family == Family::PGL;
  Order points = boost::multiprecision::pow(Order(q), n) - 1;
  if (projective) points /= q - 1;
  if (points > options.matrix_degree_cap) {
    throw CapExceeded(name + ": degree " + points.str() + " above cap " + std::to_string(options.matrix_degree_cap));
  }
  auto domain = std::make_shared<const MatrixDomain>(n, q, projective, false);
  const FiniteField& f = domain->field();
  std::vector<Matrix> mats;
  for (std::uint32_t i = 0; i + 1 < n; ++i) {
    for (auto lambda : f.additive_basis()) {
      mats.push_back(transvection(n, i, i + 1, lambda));
      mats.push_back(transvection(n, i + 1, i, lambda));
    }
  }
  if ((family == Family::GL || family == Family::PGL) && q > 2) mats.push_back(diagonal(n, 0, f.primitive()));
  std::vector<Permutation> gens;
  for (const auto& m : mats) gens.push_back(domain->action(m));
  BuiltGroup out;
  out.spec.family = family;
  out.spec.params = {n, q};
  out.group = Group::build(std::move(gens), domain->degree());
  Order expected = classical_order(family, n, q);
  if (out.group.order() != expected) {
    throw Error(name + ": stabilizer-chain order " + out.group.order().str() + " differs from formula " +
                expected.str());
  }
  out.matrix = MatrixGroupInfo{family, n, q, domain, std::move(mats)};
  return out;
}

BuiltGroup direct_product(const std::vector<Group>& factors) {
  std::size_t degree = 0;
  for (const auto& g : factors) degree += g.degree();
  BuiltGroup out;
  out.spec.family = Family::Direct;
  std::vector<Permutation> all;
  std::size_t offset = 0;
  for (const auto& g : factors) {
    std::vector<Permutation> embedded;
    for (const auto& x : g.generators()) {
      auto v = cycle_points(0, degree);
      for (std::size_t p = 0; p < g.degree(); ++p) v[offset + p] = static_cast<Point>(offset + x[p]);
      embedded.push_back(Permutation::from_trusted(std::move(v)));
    }
    all.insert(all.end(), embedded.begin(), embedded.end());
    out.factors.push_back(Group::build(std::move(embedded), degree));
    offset += g.degree();
  }
  out.group = Group::build(std::move(all), degree);
  Order expected = 1;
  for (const auto& g : factors) expected *= g.order();
  if (out.group.order() != expected) throw Error("direct product: order mismatch");
  return out;
}

BuiltGroup semidirect_by_automorphism(const Automorphism& a, const BuildOptions& options) {
  const Group& g = a.base;
  BuiltGroup out;
  out.spec.family = Family::Semidirect;
  Order expected = g.order() * a.order;
  if (a.inducing) {
    const Permutation& s = *a.inducing;
    bool induces = true;
    for (std::size_t i = 0; i < g.generators().size(); ++i) {
      if (conjugate(g.generators()[i], s) != a.images[i]) induces = false;
    }
    if (!induces) throw PreconditionError("semidirect: inducing permutation does not match the images");
    auto gens = g.generators();
    gens.push_back(s);
    Group candidate = Group::build(std::move(gens), g.degree());
    if (candidate.order() == expected) {
      out.group = std::move(candidate);
      out.normal = g;
      out.adjoined = s;
      return out;
    }
  }
  std::uint64_t k = a.order;
  std::size_t n = g.degree();
  if (k * n > options.matrix_degree_cap) {
    throw CapExceeded("semidirect: no faithful realisation within degree " + std::to_string(options.matrix_degree_cap));
  }
  Homomorphism h(g, a.images);
  // powers[m][i] = a^m(g_i)
  std::vector<std::vector<Permutation>> powers{g.generators()};
  for (std::uint64_t m = 1; m < k; ++m) powers.push_back(apply_all(h, powers.back()));
  std::vector<Permutation> embedded;
  for (std::size_t i = 0; i < g.generators().size(); ++i) {
    std::vector<Point> v(k * n);
    for (std::uint64_t j = 0; j < k; ++j) {
      const Permutation& x = powers[(k - j) % k][i];
      for (std::size_t p = 0; p < n; ++p) v[j * n + p] = static_cast<Point>(j * n + x[p]);
    }
    embedded.push_back(Permutation::from_trusted(std::move(v)));
  }
  std::vector<Point> shift(k * n);
  for (std::uint64_t j = 0; j < k; ++j)
    for (std::size_t p = 0; p < n; ++p) shift[j * n + p] = static_cast<Point>(((j + 1) % k) * n + p);
  Permutation t = Permutation::from_trusted(std::move(shift));
  auto gens = embedded;
  gens.push_back(t);
  out.group = Group::build(std::move(gens), k * n);
  out.normal = Group::build(std::move(embedded), k * n);
  out.adjoined = t;
  if (out.group.order() != expected) throw Error("semidirect: order " + out.group.order().str() + " != " + expected.str());
  return out;
}

Automorphism transpose_inverse_automorphism(const BuiltGroup& base) {
  if (!base.matrix || base.matrix->domain->with_covectors()) {
    throw PreconditionError("inverse-transpose needs a matrix group in its natural action");
  }
  const MatrixGroupInfo& info = *base.matrix;
  auto domain = std::make_shared<const MatrixDomain>(info.n, info.q, info.domain->projective(), true);
  std::vector<Permutation> gens;
  for (const auto& m : info.generators) gens.push_back(domain->action(m));
  Group doubled = Group::build(gens, domain->degree());
  if (doubled.order() != base.group.order()) throw Error("inverse-transpose: doubled action is not faithful");
  Permutation s = domain->swap();
  std::vector<Permutation> images;
  for (const auto& x : gens) images.push_back(conjugate(x, s));
  Automorphism a = finish_automorphism(doubled, std::move(images), "TransposeInverse", 1, 100, 2);
  a.inducing = s;
  return a;
}

Automorphism transpose_inverse_automorphism(std::uint32_t n, std::uint32_t q) {
  return transpose_inverse_automorphism(make_matrix_group(Family::GL, n, q));
}

std::string FlagSpec::label() const {
  std::string out = "flag(";
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(dims[i]);
  }
  return out + ")";
}

Order flag_stabilizer_order(const FlagSpec& flag, std::uint32_t q) {
  Order o = 1;
  std::uint64_t total = 0, cells = 0;
  for (auto d : flag.dims) {
    o *= classical_order(Family::GL, d, q);
    cells += total * d;
    total += d;
  }
  return o * boost::multiprecision::pow(Order(q), static_cast<unsigned>(cells));
}

Group flag_stabilizer(const BuiltGroup& gl, const FlagSpec& flag) {
  if (!gl.matrix || gl.matrix->family != Family::GL || gl.matrix->domain->projective()) {
    throw PreconditionError("flag_stabilizer needs GL(n,q) acting on vectors");
  }
  const MatrixGroupInfo& info = *gl.matrix;
  std::uint32_t n = info.n;
  std::uint32_t sum = 0;
  for (auto d : flag.dims) {
    if (d == 0) throw RangeError("flag dimensions must be positive");
    sum += d;
  }
  if (sum != n) throw PreconditionError(flag.label() + " does not sum to the dimension " + std::to_string(n));
  // level[i]: the first k with coordinate i inside V_k.
  std::vector<std::uint32_t> level(n);
  std::uint32_t covered = 0;
  for (std::uint32_t k = 0; k < flag.dims.size(); ++k) {
    for (std::uint32_t i = n - covered - flag.dims[k]; i < n - covered; ++i) level[i] = k;
    covered += flag.dims[k];
  }
  const FiniteField& f = info.domain->field();
  std::vector<Permutation> gens;
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      if (i == j || level[j] > level[i]) continue;
      for (auto lambda : f.additive_basis()) gens.push_back(info.domain->action(transvection(n, i, j, lambda)));
    }
    if (info.q > 2) gens.push_back(info.domain->action(diagonal(n, i, f.primitive())));
  }
  Group h = Group::build(std::move(gens), info.domain->degree());
  if (h.order() != flag_stabilizer_order(flag, info.q)) throw Error(flag.label() + ": order mismatch");
  return h;
}

BuiltGroup build(const GroupSpec& spec, const BuildOptions& options) {
  BuiltGroup out;
  switch (spec.family) {
    case Family::Sym:
    case Family::Alt:
    case Family::Cyclic:
    case Family::Dihedral:
      out.group = make_named(spec.family, spec.params.at(0), options);
      break;
    case Family::GL:
    case Family::SL:
    case Family::PSL:
    case Family::PGL:
      out = make_matrix_group(spec.family, static_cast<std::uint32_t>(spec.params.at(0)),
                              static_cast<std::uint32_t>(spec.params.at(1)), options);
      break;
    case Family::Direct: {
      std::vector<Group> factors;
      for (const auto& c : spec.children) factors.push_back(build(c, options).group);
      out = direct_product(factors);
      if (out.group.degree() > options.matrix_degree_cap) throw CapExceeded("direct product degree above cap");
      break;
    }
    case Family::Semidirect: {
      BuiltGroup base = build(spec.children.at(0), options);
      if (spec.automorphism == "TransposeInverse") {
        Automorphism a = transpose_inverse_automorphism(base);
        out = semidirect_by_automorphism(a, options);
        const MatrixGroupInfo& info = *base.matrix;
        out.matrix = MatrixGroupInfo{info.family, info.n, info.q,
                                     std::make_shared<const MatrixDomain>(info.n, info.q, info.domain->projective(), true),
                                     info.generators};
      } else if (spec.automorphism == "Swap") {
        const GroupSpec& c = spec.children[0];
        if (c.family != Family::Direct || c.children.size() != 2 ||
            c.children[0].canonical() != c.children[1].canonical()) {
          throw PreconditionError("Swap needs Direct(X,X)");
        }
        std::size_t half = base.group.degree() / 2;
        std::vector<Point> v(2 * half);
        for (std::size_t p = 0; p < half; ++p) {
          v[p] = static_cast<Point>(half + p);
          v[half + p] = static_cast<Point>(p);
        }
        Permutation s(std::move(v));
        std::vector<Permutation> images;
        for (const auto& x : base.group.generators()) images.push_back(conjugate(x, s));
        Automorphism a = finish_automorphism(base.group, std::move(images), "Swap", options.seed, 100, 2);
        a.inducing = s;
        out = semidirect_by_automorphism(a, options);
        out.factors = base.factors;
      } else if (spec.automorphism == "Images") {
        std::vector<Permutation> images;
        for (const auto& c : spec.images) images.push_back(perm_from_cycles(c, base.group.degree()));
        if (images.size() != base.group.generators().size()) {
          throw PreconditionError("Images: expected " + std::to_string(base.group.generators().size()) +
                                  " generator images");
        }
        Automorphism a = make_automorphism(base.group, std::move(images), "Images", options.seed);
        out = semidirect_by_automorphism(a, options);
      } else {
        throw PreconditionError("unknown automorphism " + spec.automorphism);
      }
      break;
    }
    case Family::FromFile: {
      std::filesystem::path p(spec.path);
      if (!std::filesystem::exists(p) && std::filesystem::exists(std::filesystem::path(HALLPI_DATA_DIR) / p)) {
        p = std::filesystem::path(HALLPI_DATA_DIR) / p;
      }
      GeneratorFile file = read_generator_file(p.string());
      out.group = Group::build(std::move(file.generators), file.degree);
      break;
    }
  }
  out.spec = spec;
  return out;
}

std::optional<BuiltGroup> normal_part(const BuiltGroup& g) {
  if (!g.normal) return std::nullopt;
  BuiltGroup out;
  out.spec = g.spec.children.empty() ? g.spec : g.spec.children.front();
  out.group = *g.normal;
  out.matrix = g.matrix;
  return out;
}

BuiltGroup build(std::string_view spec_text, const BuildOptions& options) {
  return build(parse_group_spec(spec_text), options);
}

}  // namespace hallpi
