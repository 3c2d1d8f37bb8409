#include "hallpi/group.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "hallpi/error.hpp"

namespace hallpi {

std::uint64_t to_u64(const Order& n) {
  if (n < 0 || n > std::numeric_limits<std::uint64_t>::max()) {
    throw CapExceeded("order does not fit in 64 bits");
  }
  return n.convert_to<std::uint64_t>();
}

Group Group::build(std::vector<Permutation> generators, std::size_t degree,
                   std::span<const Point> base_prefix) {
  Group g;
  g.degree_ = degree;
  for (const auto& p : generators) {
    if (p.degree() != degree) {
      throw DegreeMismatch("generator of degree " + std::to_string(p.degree()) +
                           " in a group of degree " + std::to_string(degree));
    }
  }
  for (Point b : base_prefix) {
    if (b >= degree) throw RangeError("base point out of range");
  }
  g.generators_ = std::move(generators);
  g.schreier_sims(base_prefix);
  return g;
}

Group build_group(std::vector<Permutation> generators) {
  if (generators.empty()) {
    throw PreconditionError("build_group: empty generator list needs an explicit degree");
  }
  std::size_t degree = generators.front().degree();
  return Group::build(std::move(generators), degree);
}

Group build_group(std::vector<Permutation> generators, std::size_t degree) {
  return Group::build(std::move(generators), degree);
}

std::vector<Point> Group::base() const {
  std::vector<Point> b;
  b.reserve(levels_.size());
  for (const auto& l : levels_) b.push_back(l.base_point);
  return b;
}

const std::vector<Permutation>& Group::strong_generators() const {
  return levels_.empty() ? no_generators_ : levels_.front().generators;
}

void Group::rebuild_orbit(std::size_t i) {
  Level& l = levels_[i];
  l.orbit.assign(1, l.base_point);
  l.position.assign(degree_, -1);
  l.position[l.base_point] = 0;
  l.transversal.assign(1, Permutation::identity(degree_));
  for (std::size_t k = 0; k < l.orbit.size(); ++k) {
    Point x = l.orbit[k];
    for (const auto& s : l.generators) {
      Point y = s[x];
      if (l.position[y] < 0) {
        l.position[y] = static_cast<std::int32_t>(l.orbit.size());
        l.orbit.push_back(y);
        l.transversal.push_back(l.transversal[k] * s);
      }
    }
  }
  l.inverse_transversal.clear();
  l.inverse_transversal.reserve(l.transversal.size());
  for (const auto& t : l.transversal) l.inverse_transversal.push_back(t.inverse());
}

std::pair<Permutation, std::size_t> Group::strip(Permutation p, std::size_t from_level) const {
  for (std::size_t i = from_level; i < levels_.size(); ++i) {
    const Level& l = levels_[i];
    Point beta = p[l.base_point];
    if (l.position[beta] < 0) return {std::move(p), i};
    // p = p' * u with u mapping base_point to beta; p' fixes base_point.
    const Permutation& uinv = l.inverse_transversal[static_cast<std::size_t>(l.position[beta])];
    std::vector<Point> images(degree_);
    for (Point x = 0; x < degree_; ++x) images[x] = uinv[p[x]];
    p = Permutation::from_trusted(std::move(images));
  }
  return {std::move(p), levels_.size()};
}

void Group::schreier_sims(std::span<const Point> base_prefix) {
  levels_.clear();
  std::vector<Permutation> gens;
  for (const auto& p : generators_) {
    if (!p.is_identity() && std::find(gens.begin(), gens.end(), p) == gens.end()) gens.push_back(p);
  }

  std::vector<Point> base(base_prefix.begin(), base_prefix.end());
  for (const auto& g : gens) {
    bool fixes_base = std::all_of(base.begin(), base.end(), [&](Point b) { return g[b] == b; });
    if (fixes_base) base.push_back(g.first_moved_point());
  }
  levels_.resize(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) {
    levels_[i].base_point = base[i];
    for (const auto& g : gens) {
      bool fixes = true;
      for (std::size_t j = 0; j < i; ++j) fixes = fixes && g[base[j]] == base[j];
      if (fixes) levels_[i].generators.push_back(g);
    }
    rebuild_orbit(i);
  }

  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    bool extended = false;
    Level* l = &levels_[static_cast<std::size_t>(i)];
    for (std::size_t j = 0; j < l->orbit.size() && !extended; ++j) {
      for (std::size_t si = 0; si < l->generators.size() && !extended; ++si) {
        const Permutation& s = l->generators[si];
        Point image = s[l->orbit[j]];
        Permutation schreier = l->transversal[j] * s * l->inverse_transversal[static_cast<std::size_t>(l->position[image])];
        if (schreier.is_identity()) continue;
        auto [h, stop] = strip(std::move(schreier), static_cast<std::size_t>(i) + 1);
        if (stop == levels_.size() && h.is_identity()) continue;
        if (stop == levels_.size()) {
          Level fresh;
          fresh.base_point = h.first_moved_point();
          levels_.push_back(std::move(fresh));
          l = &levels_[static_cast<std::size_t>(i)];
        }
        for (std::size_t k = static_cast<std::size_t>(i) + 1; k <= stop; ++k) {
          levels_[k].generators.push_back(h);
          rebuild_orbit(k);
        }
        i = static_cast<std::ptrdiff_t>(stop);
        extended = true;
      }
    }
    if (!extended) --i;
  }
  finish();
}

void Group::finish() {
  order_ = 1;
  for (const auto& l : levels_) order_ *= l.orbit.size();
}

bool Group::contains(const Permutation& p) const {
  if (p.degree() != degree_) {
    throw DegreeMismatch("contains: element of degree " + std::to_string(p.degree()) +
                         ", group of degree " + std::to_string(degree_));
  }
  auto [h, stop] = strip(p);
  return stop == levels_.size() && h.is_identity();
}

bool Group::contains_group(const Group& other) const {
  return std::all_of(other.generators().begin(), other.generators().end(),
                     [&](const Permutation& p) { return contains(p); });
}

bool Group::same_elements(const Group& other) const {
  return degree_ == other.degree_ && order_ == other.order_ && contains_group(other);
}

namespace {

void enumerate_from(const std::vector<Group::Level>& levels, std::size_t i, const Permutation& right,
                    std::vector<Permutation>& out) {
  if (i == levels.size()) {
    out.push_back(right);
    return;
  }
  for (const auto& t : levels[i].transversal) enumerate_from(levels, i + 1, t * right, out);
}

}  // namespace

std::vector<Permutation> Group::elements(std::uint64_t cap) const {
  if (order_ > cap) {
    throw CapExceeded("group of order " + order_.str() + " exceeds enumeration cap " +
                      std::to_string(cap));
  }
  std::vector<Permutation> out;
  out.reserve(to_u64(order_));
  enumerate_from(levels_, 0, Permutation::identity(degree_), out);
  return out;
}

Permutation Group::random_element(std::mt19937_64& rng) const {
  Permutation g = Permutation::identity(degree_);
  for (std::size_t i = levels_.size(); i-- > 0;) {
    const Level& l = levels_[i];
    std::uniform_int_distribution<std::size_t> pick(0, l.orbit.size() - 1);
    g = g * l.transversal[pick(rng)];
  }
  return g;
}

Group Group::stabilizer(std::size_t level) const {
  if (level > levels_.size()) throw RangeError("stabilizer: level out of range");
  Group g;
  g.degree_ = degree_;
  g.levels_.assign(levels_.begin() + static_cast<std::ptrdiff_t>(level), levels_.end());
  g.generators_ = g.levels_.empty() ? std::vector<Permutation>{} : g.levels_.front().generators;
  g.finish();
  return g;
}

Group Group::with_base_prefix(std::span<const Point> prefix) const {
  Group g = Group::build(strong_generators(), degree_, prefix);
  g.generators_ = generators_;
  return g;
}

std::vector<std::vector<Point>> Group::orbits() const {
  std::vector<std::vector<Point>> result;
  std::vector<bool> seen(degree_, false);
  for (Point start = 0; start < degree_; ++start) {
    if (seen[start]) continue;
    std::vector<Point> orbit{start};
    seen[start] = true;
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      for (const auto& s : generators_) {
        Point y = s[orbit[k]];
        if (!seen[y]) {
          seen[y] = true;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    result.push_back(std::move(orbit));
  }
  return result;
}

GeneratorFile parse_generator_file(std::istream& in) {
  GeneratorFile file;
  std::string line;
  bool have_degree = false;
  std::size_t offset = 0;
  while (std::getline(in, line)) {
    std::size_t line_start = offset;
    offset += line.size() + 1;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    if (!have_degree) {
      std::istringstream words(line.substr(first));
      std::string keyword;
      long long n = 0;
      if (!(words >> keyword >> n) || keyword != "degree" || n < 1) {
        throw ParseError("expected 'degree N' header", line_start + first);
      }
      file.degree = static_cast<std::size_t>(n);
      have_degree = true;
      continue;
    }
    std::string text = line.substr(first);
    while (!text.empty() && (text.back() == '\r' || text.back() == ' ')) text.pop_back();
    try {
      file.generators.push_back(perm_from_cycles(text, file.degree));
    } catch (const ParseError& e) {
      throw ParseError(std::string("generator line: ") + e.what(), line_start + first + e.position());
    }
  }
  if (!have_degree) throw ParseError("missing 'degree N' header", 0);
  return file;
}

GeneratorFile read_generator_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open generator file '" + path + "'");
  return parse_generator_file(in);
}

void write_generator_file(std::ostream& out, const Group& g) {
  out << "degree " << g.degree() << '\n';
  for (const auto& p : g.generators()) {
    if (!p.is_identity()) out << p.to_cycles() << '\n';
  }
}

}  // namespace hallpi
