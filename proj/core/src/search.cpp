#include "hallpi/search.hpp"

#include <algorithm>

namespace hallpi {

namespace {

/// orbit_of[p] = index of p's orbit, length[p] = its size.
struct OrbitTable {
  std::vector<std::uint32_t> orbit_of;
  std::vector<std::uint32_t> length;
  std::vector<std::uint32_t> sorted_lengths;
};

OrbitTable orbit_table(const Group& g) {
  OrbitTable t;
  t.orbit_of.assign(g.degree(), 0);
  t.length.assign(g.degree(), 0);
  auto orbits = g.orbits();
  for (std::uint32_t i = 0; i < orbits.size(); ++i) {
    for (Point p : orbits[i]) {
      t.orbit_of[p] = i;
      t.length[p] = static_cast<std::uint32_t>(orbits[i].size());
    }
  }
  t.sorted_lengths = t.length;
  std::sort(t.sorted_lengths.begin(), t.sorted_lengths.end());
  return t;
}

class TransporterSearch {
 public:
  TransporterSearch(const Group& g, const Group& h, const Group& k, SearchBudget& budget,
                    std::span<const Point> prefix)
      : g_(g), h_(h), k_(k), budget_(budget), prefix_(prefix.begin(), prefix.end()) {
    base_ = g_.base();
    Group hb = h_.with_base_prefix(base_);
    for (std::size_t i = 0; i <= base_.size(); ++i) h_orbits_.push_back(orbit_table(hb.stabilizer(i)));
    k_inside_g_ = g_.contains_group(k_);
  }

  std::optional<Permutation> run() {
    if (h_.order() != k_.order()) return std::nullopt;
    return descend(0, Permutation::identity(g_.degree()), k_.with_base_prefix({}));
  }

 private:
  std::optional<Permutation> descend(std::size_t depth, const Permutation& t, const Group& k_stab) {
    budget_.charge();
    if (depth == base_.size()) {
      for (const auto& x : h_.generators()) {
        if (!k_.contains(conjugate(x, t))) return std::nullopt;
      }
      return t;
    }
    OrbitTable k_orbits = orbit_table(k_stab);
    if (k_orbits.sorted_lengths != h_orbits_[depth].sorted_lengths) return std::nullopt;
    std::uint32_t wanted = h_orbits_[depth].length[base_[depth]];
    const Group::Level& level = g_.level(depth);
    std::vector<bool> tried_orbit(g_.degree(), false);
    for (std::size_t j = 0; j < level.orbit.size(); ++j) {
      Point image = t[level.orbit[j]];
      if (depth < prefix_.size() && image != prefix_[depth]) continue;
      if (k_orbits.length[image] != wanted) continue;
      if (k_inside_g_) {
        if (tried_orbit[k_orbits.orbit_of[image]]) continue;
        tried_orbit[k_orbits.orbit_of[image]] = true;
      }
      Permutation next = level.transversal[j] * t;
      const Point fixed[] = {image};
      Group deeper = k_stab.with_base_prefix(fixed).stabilizer(1);
      if (auto found = descend(depth + 1, next, deeper)) return found;
    }
    return std::nullopt;
  }

  const Group& g_;
  const Group& h_;
  const Group& k_;
  SearchBudget& budget_;
  std::vector<Point> prefix_;
  std::vector<Point> base_;
  std::vector<OrbitTable> h_orbits_;
  bool k_inside_g_ = false;
};

class SubgroupSearch {
 public:
  SubgroupSearch(const Group& g, const ElementProperty& property, const ImageFilter& filter,
                 SearchBudget& budget)
      : g_(g), property_(property), filter_(filter), budget_(budget), base_(g.base()) {}

  std::optional<Permutation> find_from(std::size_t level, std::size_t orbit_pos) {
    const Group::Level& lv = g_.level(level);
    std::vector<Point> images(base_.begin(), base_.begin() + static_cast<std::ptrdiff_t>(level));
    images.push_back(lv.orbit[orbit_pos]);
    if (filter_ && !filter_(images)) return std::nullopt;
    return descend(level + 1, lv.transversal[orbit_pos], images);
  }

 private:
  std::optional<Permutation> descend(std::size_t depth, const Permutation& t, std::vector<Point>& images) {
    budget_.charge();
    if (depth == base_.size()) {
      if (property_(t)) return t;
      return std::nullopt;
    }
    const Group::Level& lv = g_.level(depth);
    for (std::size_t j = 0; j < lv.orbit.size(); ++j) {
      images.push_back(t[lv.orbit[j]]);
      if (!filter_ || filter_(images)) {
        if (auto found = descend(depth + 1, lv.transversal[j] * t, images)) {
          images.pop_back();
          return found;
        }
      }
      images.pop_back();
    }
    return std::nullopt;
  }

  const Group& g_;
  const ElementProperty& property_;
  const ImageFilter& filter_;
  SearchBudget& budget_;
  std::vector<Point> base_;
};

}  // namespace

std::optional<Permutation> find_transporter(const Group& g, const Group& h, const Group& k,
                                            SearchBudget& budget, std::span<const Point> prefix) {
  if (h.degree() != g.degree() || k.degree() != g.degree()) {
    throw DegreeMismatch("find_transporter: degree mismatch");
  }
  if (g.base_length() == 0) {
    // Trivial ambient group: only the identity is available.
    if (h.same_elements(k)) return Permutation::identity(g.degree());
    return std::nullopt;
  }
  TransporterSearch search(g, h, k, budget, prefix);
  return search.run();
}

Group search_subgroup(const Group& g, const std::vector<Permutation>& seed,
                      const ElementProperty& property, const ImageFilter& filter,
                      SearchBudget& budget) {
  const std::vector<Point> base = g.base();
  std::vector<Permutation> gens;
  for (const auto& s : seed) {
    if (!s.is_identity()) gens.push_back(s);
  }
  auto make = [&] { return Group::build(gens, g.degree(), base); };
  Group found = make();
  SubgroupSearch search(g, property, filter, budget);

  for (std::size_t l = base.size(); l-- > 0;) {
    const Group::Level& lv = g.level(l);
    OrbitTable orbits = orbit_table(found.stabilizer(l));
    std::vector<bool> failed(g.degree(), false);
    for (std::size_t j = 1; j < lv.orbit.size(); ++j) {
      Point delta = lv.orbit[j];
      if (orbits.orbit_of[delta] == orbits.orbit_of[lv.base_point]) continue;
      if (failed[delta]) continue;
      if (auto x = search.find_from(l, j)) {
        gens.push_back(*x);
        found = make();
        orbits = orbit_table(found.stabilizer(l));
      } else {
        std::uint32_t o = orbits.orbit_of[delta];
        for (Point p = 0; p < g.degree(); ++p) {
          if (orbits.orbit_of[p] == o) failed[p] = true;
        }
      }
    }
  }
  return found;
}

}  // namespace hallpi
