#include "hallpi/subgroup.hpp"

#include <algorithm>
#include <boost/multiprecision/miller_rabin.hpp>
#include <random>
#include <sstream>

#include "hallpi/enumerated.hpp"
#include "hallpi/error.hpp"

namespace hallpi {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes:
      return "yes";
    case Verdict::No:
      return "no";
    case Verdict::Indeterminate:
      return "indeterminate";
  }
  return "?";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_divisors(const Order& n) {
  if (n < 1) throw RangeError("prime_divisors: n must be positive");
  std::vector<std::uint64_t> out;
  Order rest = n;
  for (std::uint64_t d = 2; d < 100'000 && rest > 1; ++d) {
    if (Order(d) * d > rest) break;
    if (rest % d == 0) {
      out.push_back(d);
      while (rest % d == 0) rest /= d;
    }
  }
  if (rest > 1) {
    if (rest < Order(100'000) * 100'000 || boost::multiprecision::miller_rabin_test(rest, 25)) {
      out.push_back(to_u64(rest));
    } else {
      throw CapExceeded("prime_divisors: cofactor too large to factor");
    }
  }
  return out;
}

Subgroup make_subgroup(const Group& parent, Group h, std::string tag) {
  if (h.degree() != parent.degree()) throw DegreeMismatch("subgroup degree differs from parent");
  if (!parent.contains_group(h)) throw PreconditionError("generator outside the parent group");
  return Subgroup{std::move(h), std::move(tag)};
}

OrbitSignature orbit_signature(const Group& parent, const Group& h) {
  std::vector<std::uint32_t> parent_orbit(parent.degree(), 0);
  auto porbits = parent.orbits();
  for (std::uint32_t i = 0; i < porbits.size(); ++i) {
    for (Point p : porbits[i]) parent_orbit[p] = i;
  }
  OrbitSignature sig;
  for (const auto& o : h.orbits()) {
    sig.emplace_back(parent_orbit[o.front()], static_cast<std::uint32_t>(o.size()));
  }
  std::sort(sig.begin(), sig.end());
  return sig;
}

std::string format_signature(const OrbitSignature& sig) {
  // Grouped by parent orbit: {1,6,24} or {1,6,24|3,12,16}; fixed points of
  // the parent (singleton parent orbits) are left out.
  std::ostringstream out;
  out << '{';
  bool first = true;
  std::uint32_t current = sig.empty() ? 0 : sig.front().first;
  for (const auto& [orbit, len] : sig) {
    if (orbit != current) {
      out << '|';
      current = orbit;
      first = true;
    }
    if (!first) out << ',';
    out << len;
    first = false;
  }
  out << '}';
  return out.str();
}

std::map<std::uint64_t, std::uint64_t> element_order_histogram(const Group& h, std::uint64_t cap) {
  std::map<std::uint64_t, std::uint64_t> hist;
  for (const auto& x : h.elements(cap)) ++hist[x.order()];
  return hist;
}

Subgroup generated(const Group& parent, std::span<const Permutation> elements, std::string tag) {
  for (const auto& x : elements) {
    if (!parent.contains(x)) throw PreconditionError("generated: element " + x.to_cycles() + " outside parent");
  }
  return Subgroup{Group::build({elements.begin(), elements.end()}, parent.degree()), std::move(tag)};
}

bool normalizes(const Group& h, const Permutation& g) {
  return std::all_of(h.generators().begin(), h.generators().end(),
                     [&](const Permutation& x) { return h.contains(conjugate(x, g)); });
}

bool is_normal(const Group& g, const Group& a) {
  return std::all_of(g.generators().begin(), g.generators().end(),
                     [&](const Permutation& x) { return normalizes(a, x); });
}

namespace {

/// Grows a subgroup from a stream of members, rebuilding only when an
/// element is new.
class SubgroupAccumulator {
 public:
  explicit SubgroupAccumulator(std::size_t degree) : degree_(degree), group_(Group::build({}, degree)) {}

  void add(const Permutation& x) {
    if (group_.contains(x)) return;
    gens_.push_back(x);
    group_ = Group::build(gens_, degree_);
  }
  const Group& group() const { return group_; }

 private:
  std::size_t degree_;
  std::vector<Permutation> gens_;
  Group group_;
};

/// type[p] = (parent orbit of p, length of the h-orbit of p); elements of
/// N_parent(h) preserve it.
std::vector<std::uint64_t> orbit_types(const Group& parent, const Group& h) {
  std::vector<std::uint64_t> type(parent.degree(), 0);
  auto porbits = parent.orbits();
  for (std::uint64_t i = 0; i < porbits.size(); ++i) {
    for (Point p : porbits[i]) type[p] = i << 32;
  }
  for (const auto& o : h.orbits()) {
    for (Point p : o) type[p] |= o.size();
  }
  return type;
}

Group scan_subgroup(const Group& parent, const std::function<bool(const Permutation&)>& keep,
                    std::uint64_t cap) {
  SubgroupAccumulator acc(parent.degree());
  for (const auto& x : parent.elements(cap)) {
    if (keep(x)) acc.add(x);
  }
  return acc.group();
}

}  // namespace

Subgroup normalizer(const Group& parent, const Group& h, const SubgroupOptions& options) {
  auto keep = [&](const Permutation& x) { return normalizes(h, x); };
  if (parent.order() <= options.brute_force_order) {
    return Subgroup{scan_subgroup(parent, keep, options.brute_force_order), "normalizer"};
  }
  std::vector<Permutation> seed;
  if (parent.contains_group(h)) seed = h.generators();
  auto type = orbit_types(parent, h);
  auto base = parent.base();
  ImageFilter filter = [&](std::span<const Point> images) {
    std::size_t i = images.size() - 1;
    return type[images[i]] == type[base[i]];
  };
  SearchBudget budget{options.node_cap};
  return Subgroup{search_subgroup(parent, seed, keep, filter, budget), "normalizer"};
}

Subgroup centralizer(const Group& parent, const Group& h, const SubgroupOptions& options) {
  auto keep = [&](const Permutation& x) {
    return std::all_of(h.generators().begin(), h.generators().end(),
                       [&](const Permutation& y) { return x * y == y * x; });
  };
  if (parent.order() <= options.brute_force_order) {
    return Subgroup{scan_subgroup(parent, keep, options.brute_force_order), "centralizer"};
  }
  auto type = orbit_types(parent, h);
  auto base = parent.base();
  ImageFilter filter = [&](std::span<const Point> images) {
    std::size_t i = images.size() - 1;
    return type[images[i]] == type[base[i]];
  };
  SearchBudget budget{options.node_cap};
  return Subgroup{search_subgroup(parent, {}, keep, filter, budget), "centralizer"};
}

bool verify_transporter(const Group& h, const Group& k, const Permutation& t) {
  if (h.order() != k.order()) return false;
  for (const auto& x : h.generators()) {
    if (!k.contains(conjugate(x, t))) return false;
  }
  Permutation tinv = t.inverse();
  for (const auto& y : k.generators()) {
    if (!h.contains(conjugate(y, tinv))) return false;
  }
  return true;
}

ConjugacyResult are_conjugate(const Group& parent, const Group& h, const Group& k,
                              const SubgroupOptions& options) {
  ConjugacyResult result;
  if (h.order() != k.order()) {
    result.verdict = Verdict::No;
    result.certificate = "orders " + h.order().str() + " vs " + k.order().str();
    return result;
  }
  auto sh = orbit_signature(parent, h);
  auto sk = orbit_signature(parent, k);
  if (sh != sk) {
    result.verdict = Verdict::No;
    result.certificate = "orbit signature " + format_signature(sh) + " vs " + format_signature(sk);
    return result;
  }
  if (h.order() <= options.filter_order) {
    auto hh = element_order_histogram(h, options.filter_order);
    auto hk = element_order_histogram(k, options.filter_order);
    if (hh != hk) {
      result.verdict = Verdict::No;
      result.certificate = "element order histograms differ";
      return result;
    }
  }
  std::optional<Permutation> t;
  if (parent.order() <= options.brute_force_order) {
    for (const auto& x : parent.elements(options.brute_force_order)) {
      if (std::all_of(h.generators().begin(), h.generators().end(),
                      [&](const Permutation& y) { return k.contains(conjugate(y, x)); })) {
        t = x;
        break;
      }
    }
    if (!t) {
      result.verdict = Verdict::No;
      result.certificate = "exhaustive element scan";
      return result;
    }
  } else {
    SearchBudget budget{options.node_cap};
    try {
      t = find_transporter(parent, h, k, budget);
    } catch (const SearchBudgetExceeded&) {
      result.verdict = Verdict::Indeterminate;
      result.certificate = "node cap " + std::to_string(options.node_cap) + " reached";
      return result;
    }
    if (!t) {
      result.verdict = Verdict::No;
      result.certificate = "backtrack search exhausted (" + std::to_string(budget.nodes) + " nodes)";
      return result;
    }
  }
  if (!verify_transporter(h, k, *t)) throw Error("are_conjugate: transporter failed re-verification");
  result.verdict = Verdict::Yes;
  result.transporter = std::move(t);
  return result;
}

Group intersection(const Group& h, const Group& a, const SubgroupOptions& options) {
  if (h.degree() != a.degree()) throw DegreeMismatch("intersection: degree mismatch");
  if (h.order() <= options.filter_order) {
    return scan_subgroup(h, [&](const Permutation& x) { return a.contains(x); }, options.filter_order);
  }
  if (a.order() <= options.filter_order) {
    return scan_subgroup(a, [&](const Permutation& x) { return h.contains(x); }, options.filter_order);
  }
  // Search h along a's base; a partial image tuple survives only if some
  // element of a realises it.
  const std::vector<Point> abase = a.base();
  Group hs = h.with_base_prefix(abase);
  ImageFilter filter = [&](std::span<const Point> images) {
    Permutation r = Permutation::identity(a.degree());
    std::size_t upto = std::min(images.size(), abase.size());
    for (std::size_t j = 0; j < upto; ++j) {
      const Group::Level& lv = a.level(j);
      Point want = r[images[j]];
      if (!lv.in_orbit(want)) return false;
      r = r * lv.inverse_transversal[static_cast<std::size_t>(lv.position[want])];
    }
    return true;
  };
  SearchBudget budget{options.node_cap};
  return search_subgroup(hs, {}, [&](const Permutation& x) { return a.contains(x); }, filter, budget);
}

Subgroup sylow(const Group& g, std::uint64_t p, const SubgroupOptions& options) {
  if (!is_prime(p)) throw RangeError("sylow: " + std::to_string(p) + " is not prime");
  Order target = 1;
  Order rest = g.order();
  while (rest % p == 0) {
    rest /= p;
    target *= p;
  }
  std::string tag = "sylow_" + std::to_string(p);
  Group pgroup = Group::build({}, g.degree());
  std::vector<Permutation> gens;
  std::mt19937_64 rng(options.seed);
  auto p_part_power = [&](const Permutation& y) {
    std::uint64_t o = y.order();
    while (o % p == 0) o /= p;
    return power(y, o);
  };
  while (pgroup.order() < target) {
    Group n = normalizer(g, pgroup, options).group;
    std::optional<Permutation> step;
    if (n.order() <= options.enumeration_cap) {
      for (const auto& y : n.elements(options.enumeration_cap)) {
        Permutation x = p_part_power(y);
        if (!pgroup.contains(x)) {
          step = x;
          break;
        }
      }
    } else {
      for (int attempt = 0; attempt < 100'000 && !step; ++attempt) {
        Permutation x = p_part_power(n.random_element(rng));
        if (!pgroup.contains(x)) step = x;
      }
    }
    if (!step) throw Error("sylow: normalizer ascent stalled");
    gens.push_back(*step);
    pgroup = Group::build(gens, g.degree());
  }
  return Subgroup{std::move(pgroup), tag};
}

std::vector<Subgroup> normal_subgroups(const Group& g, const SubgroupOptions& options) {
  ElementTable t(g, options.enumeration_cap);
  std::vector<ElementSubgroup> found;
  auto known = [&](const ElementSubgroup& u) {
    return std::any_of(found.begin(), found.end(), [&](const ElementSubgroup& v) { return v == u; });
  };
  auto classes = element_classes(t);
  found.push_back(trivial_subgroup(t));
  std::vector<ElementSubgroup> closures;
  for (const auto& cls : classes) {
    if (cls.front() == 0) continue;
    std::optional<ElementSubgroup> u = trivial_subgroup(t);
    for (Index x : cls) u = extend(t, *u, x);
    if (!known(*u)) {
      found.push_back(*u);
      closures.push_back(*u);
    }
  }
  // Close under products.
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      std::optional<ElementSubgroup> u = found[i];
      for (Index x : found[j].generators) u = extend(t, *u, x);
      if (!known(*u)) found.push_back(*u);
    }
  }
  std::stable_sort(found.begin(), found.end(),
                   [](const ElementSubgroup& a, const ElementSubgroup& b) { return a.size() < b.size(); });
  std::vector<Subgroup> out;
  for (const auto& u : found) {
    Group n = to_group(t, u);
    if (!is_normal(g, n)) throw Error("normal_subgroups: computed subgroup is not normal");
    out.push_back(Subgroup{std::move(n), "normal"});
  }
  return out;
}

Quotient::Quotient(const Group& g, const Group& a, std::uint64_t index_cap) : a_(a) {
  Order index = g.order() / a.order();
  if (index > index_cap) throw CapExceeded("quotient: index " + index.str() + " above cap");
  Permutation id = Permutation::identity(g.degree());
  reps_.push_back(canonical(id));
  lookup_.emplace(reps_.back(), 0);
  std::vector<std::vector<Point>> images(g.generators().size());
  for (std::size_t r = 0; r < reps_.size(); ++r) {
    for (std::size_t s = 0; s < g.generators().size(); ++s) {
      Permutation c = canonical(reps_[r] * g.generators()[s]);
      auto it = lookup_.find(c);
      std::size_t target;
      if (it == lookup_.end()) {
        target = reps_.size();
        lookup_.emplace(c, target);
        reps_.push_back(std::move(c));
      } else {
        target = it->second;
      }
      images[s].push_back(static_cast<Point>(target));
    }
  }
  std::vector<Permutation> gens;
  for (auto& im : images) gens.push_back(Permutation(std::move(im)));
  image_ = Group::build(std::move(gens), reps_.size());
  if (image_.order() * a.order() != g.order()) throw Error("quotient: |image| * |A| != |G|");
}

Permutation Quotient::canonical(const Permutation& x) const {
  // Lexicographically least base-image sequence over the coset A*x.
  Permutation y = x;
  for (std::size_t i = 0; i < a_.base_length(); ++i) {
    const Group::Level& lv = a_.level(i);
    std::size_t best = 0;
    for (std::size_t j = 1; j < lv.orbit.size(); ++j) {
      if (y[lv.orbit[j]] < y[lv.orbit[best]]) best = j;
    }
    y = lv.transversal[best] * y;
  }
  return y;
}

std::size_t Quotient::coset_of(const Permutation& x) const {
  auto it = lookup_.find(canonical(x));
  if (it == lookup_.end()) throw PreconditionError("quotient: element outside the group");
  return it->second;
}

Permutation Quotient::project(const Permutation& x) const {
  std::vector<Point> images(reps_.size());
  for (std::size_t r = 0; r < reps_.size(); ++r) images[r] = static_cast<Point>(coset_of(reps_[r] * x));
  return Permutation(std::move(images));
}

Group Quotient::project_group(const Group& h) const {
  std::vector<Permutation> gens;
  for (const auto& x : h.generators()) gens.push_back(project(x));
  return Group::build(std::move(gens), reps_.size());
}

Quotient quotient(const Group& g, const Group& a, const SubgroupOptions& options) {
  if (!g.contains_group(a)) throw PreconditionError("quotient: A is not a subgroup of G");
  if (!is_normal(g, a)) throw PreconditionError("quotient: A is not normal in G");
  return Quotient(g, a, options.quotient_index_cap);
}

}  // namespace hallpi
