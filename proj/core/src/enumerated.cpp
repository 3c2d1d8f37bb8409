#include "hallpi/enumerated.hpp"

#include <algorithm>
#include <bit>

#include "hallpi/error.hpp"

namespace hallpi {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

ElementTable::ElementTable(const Group& g, std::uint64_t cap) : group_(g), base_(g.base()) {
  elements_ = group_.elements(cap);
  std::size_t degree = group_.degree();
  bits_ = degree <= 1 ? 1u : static_cast<unsigned>(std::bit_width(degree - 1));
  packed_ = base_.size() * bits_ <= 64;

  index_.reserve(elements_.size() * 2);
  for (Index i = 0; i < elements_.size(); ++i) {
    auto [it, inserted] = index_.emplace(key_of(elements_[i]), i);
    if (!inserted) throw Error("element table: base-image key collision");
  }

  inverse_.resize(elements_.size());
  orders_.resize(elements_.size());
  labels_.resize(elements_.size());
  for (Index i = 0; i < elements_.size(); ++i) {
    inverse_[i] = index_of(elements_[i].inverse());
    orders_[i] = elements_[i].order();
    labels_[i] = splitmix64(0x5eed0000ULL + i);
  }
  for (const auto& s : group_.generators()) {
    if (s.is_identity()) continue;
    Index si = index_of(s);
    if (std::find(generators_.begin(), generators_.end(), si) != generators_.end()) continue;
    generators_.push_back(si);
  }
  conj_tables_.resize(generators_.size());
  for (std::size_t k = 0; k < generators_.size(); ++k) {
    conj_tables_[k].resize(elements_.size());
    for (Index x = 0; x < elements_.size(); ++x) conj_tables_[k][x] = conj(x, generators_[k]);
  }
}

std::uint64_t ElementTable::key_of(const Permutation& p) const {
  std::uint64_t key = 0;
  if (packed_) {
    for (Point b : base_) key = (key << bits_) | p[b];
    return key;
  }
  key = 1469598103934665603ULL;
  for (Point b : base_) {
    key ^= p[b];
    key *= 1099511628211ULL;
  }
  return key;
}

std::uint64_t ElementTable::key_of_product(const Permutation& a, const Permutation& b) const {
  std::uint64_t key = 0;
  if (packed_) {
    for (Point x : base_) key = (key << bits_) | b[a[x]];
    return key;
  }
  key = 1469598103934665603ULL;
  for (Point x : base_) {
    key ^= b[a[x]];
    key *= 1099511628211ULL;
  }
  return key;
}

Index ElementTable::lookup(std::uint64_t key) const {
  auto it = index_.find(key);
  if (it == index_.end()) throw PreconditionError("element is not in the group");
  return it->second;
}

std::optional<Index> ElementTable::find(const Permutation& p) const {
  if (p.degree() != group_.degree()) throw DegreeMismatch("element table: degree mismatch");
  auto it = index_.find(key_of(p));
  if (it == index_.end()) return std::nullopt;
  if (elements_[it->second] != p) return std::nullopt;
  return it->second;
}

Index ElementTable::index_of(const Permutation& p) const {
  auto i = find(p);
  if (!i) throw PreconditionError("element " + p.to_cycles() + " is not in the group");
  return *i;
}

Index ElementTable::mul(Index a, Index b) const {
  Index r = lookup(key_of_product(elements_[a], elements_[b]));
  if (!packed_) {
    for (Point x : base_) {
      if (elements_[r][x] != elements_[b][elements_[a][x]]) throw Error("element table: key collision");
    }
  }
  return r;
}

ElementSubgroup trivial_subgroup(const ElementTable& t) {
  ElementSubgroup u;
  u.elements = {0};
  u.mask.resize(t.size());
  u.mask.set(0);
  u.key = t.label(0);
  return u;
}

std::optional<ElementSubgroup> closure(const ElementTable& t, std::span<const Index> generators,
                                       std::size_t limit, const std::vector<bool>* admissible) {
  std::optional<ElementSubgroup> u = trivial_subgroup(t);
  for (Index g : generators) {
    u = extend(t, *u, g, limit, admissible);
    if (!u) return std::nullopt;
  }
  return u;
}

std::optional<ElementSubgroup> extend(const ElementTable& t, const ElementSubgroup& u, Index x,
                                      std::size_t limit, const std::vector<bool>* admissible) {
  if (u.contains(x)) return u;
  ElementSubgroup v = u;
  v.generators.push_back(x);
  std::size_t base_size = u.size();

  auto add_coset = [&](Index rep) -> bool {
    // Right coset U*rep.
    for (std::size_t i = 0; i < base_size; ++i) {
      Index e = t.mul(u.elements[i], rep);
      if (admissible && !(*admissible)[e]) return false;
      v.elements.push_back(e);
      v.mask.set(e);
      v.key += t.label(e);
    }
    return v.size() <= limit;
  };

  std::vector<Index> reps{0};
  if (!add_coset(x)) return std::nullopt;
  reps.push_back(x);
  for (std::size_t r = 0; r < reps.size(); ++r) {
    for (Index s : v.generators) {
      Index e = t.mul(reps[r], s);
      if (v.mask.test(e)) continue;
      if (!add_coset(e)) return std::nullopt;
      reps.push_back(e);
    }
  }
  return v;
}

ElementSubgroup conjugate(const ElementTable& t, const ElementSubgroup& u, Index g) {
  ElementSubgroup v;
  v.mask.resize(t.size());
  v.elements.reserve(u.size());
  Index ginv = t.inv(g);
  for (Index e : u.elements) {
    Index c = t.mul(t.mul(ginv, e), g);
    v.elements.push_back(c);
    v.mask.set(c);
    v.key += t.label(c);
  }
  for (Index e : u.generators) v.generators.push_back(t.mul(t.mul(ginv, e), g));
  return v;
}

bool normalizes(const ElementTable& t, const ElementSubgroup& u, Index g) {
  Index ginv = t.inv(g);
  for (Index e : u.generators) {
    if (!u.contains(t.mul(t.mul(ginv, e), g))) return false;
  }
  return true;
}

ElementSubgroup from_group(const ElementTable& t, const Group& h) {
  std::vector<Index> gens;
  for (const auto& p : h.generators()) {
    if (!p.is_identity()) gens.push_back(t.index_of(p));
  }
  return *closure(t, gens);
}

Group to_group(const ElementTable& t, const ElementSubgroup& u) {
  std::vector<Permutation> gens;
  for (Index e : u.generators) gens.push_back(t.element(e));
  return Group::build(std::move(gens), t.group().degree());
}

std::optional<SubgroupClassIndex::Hit> SubgroupClassIndex::find(const ElementSubgroup& u) const {
  auto [lo, hi] = entries_.equal_range(u.key);
  for (auto it = lo; it != hi; ++it) {
    const Entry& e = it->second;
    const ElementSubgroup& rep = reps_[e.cls];
    if (rep.size() != u.size()) continue;
    Index ginv = table_->inv(e.transporter);
    bool same = true;
    for (Index x : rep.elements) {
      if (!u.contains(table_->mul(table_->mul(ginv, x), e.transporter))) {
        same = false;
        break;
      }
    }
    if (same) return Hit{e.cls, e.transporter};
  }
  return std::nullopt;
}

std::size_t SubgroupClassIndex::add(ElementSubgroup u) {
  std::size_t cls = reps_.size();
  const ElementTable& t = *table_;
  // Orbit of u under conjugation; each member kept only until expanded.
  struct Pending {
    std::vector<Index> elements;
    Index transporter;
  };
  std::vector<Pending> queue;
  queue.push_back({u.elements, 0});
  std::unordered_multimap<std::uint64_t, std::vector<Index>> seen;  // key -> sorted elements
  auto sorted = [](std::vector<Index> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  seen.emplace(u.key, sorted(u.elements));
  entries_.emplace(u.key, Entry{cls, 0});
  std::size_t count = 1;
  for (std::size_t q = 0; q < queue.size(); ++q) {
    std::vector<Index> current = std::move(queue[q].elements);
    Index transporter = queue[q].transporter;
    for (std::size_t k = 0; k < t.generator_indices().size(); ++k) {
      std::vector<Index> image;
      image.reserve(current.size());
      std::uint64_t key = 0;
      for (Index e : current) {
        Index c = t.conj_by_generator(k, e);
        image.push_back(c);
        key += t.label(c);
      }
      std::vector<Index> image_sorted = sorted(image);
      bool known = false;
      auto [lo, hi] = seen.equal_range(key);
      for (auto it = lo; it != hi; ++it) {
        if (it->second == image_sorted) {
          known = true;
          break;
        }
      }
      if (known) continue;
      Index next = t.mul(transporter, t.generator_indices()[k]);
      seen.emplace(key, std::move(image_sorted));
      entries_.emplace(key, Entry{cls, next});
      queue.push_back({std::move(image), next});
      ++count;
    }
  }
  reps_.push_back(std::move(u));
  sizes_.push_back(count);
  return cls;
}

std::vector<std::pair<ElementSubgroup, Index>> SubgroupClassIndex::members(std::size_t cls) const {
  std::vector<std::pair<ElementSubgroup, Index>> out;
  for (const auto& [key, e] : entries_) {
    if (e.cls == cls) out.emplace_back(conjugate(*table_, reps_[cls], e.transporter), e.transporter);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
  return out;
}

std::vector<std::vector<Index>> element_classes(const ElementTable& t) {
  std::vector<std::vector<Index>> classes;
  std::vector<bool> seen(t.size(), false);
  for (Index x = 0; x < t.size(); ++x) {
    if (seen[x]) continue;
    std::vector<Index> cls{x};
    seen[x] = true;
    for (std::size_t i = 0; i < cls.size(); ++i) {
      for (std::size_t k = 0; k < t.generator_indices().size(); ++k) {
        Index y = t.conj_by_generator(k, cls[i]);
        if (!seen[y]) {
          seen[y] = true;
          cls.push_back(y);
        }
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

}  // namespace hallpi
