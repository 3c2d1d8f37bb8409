#include "hallpi/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "hallpi/error.hpp"

namespace hallpi {

std::string to_string(CheckVerdict v) {
  switch (v) {
    case CheckVerdict::Pass:
      return "Pass";
    case CheckVerdict::Fail:
      return "Fail";
    case CheckVerdict::Indeterminate:
      return "Indeterminate";
    case CheckVerdict::SkippedPrecondition:
      return "SkippedPrecondition";
  }
  return "?";
}

std::string witness_digest(const CheckResult& r) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const auto& w : r.witnesses) {
    for (unsigned char c : w) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
    h ^= 0xff;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  return out + "\"";
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += v[i];
  }
  return out;
}

std::string format_ms(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", ms);
  return buf;
}

}  // namespace

std::string format_machine(const CheckResult& r, bool timings) {
  std::string line = "check_id=" + r.check_id + " instance=" + quoted(r.instance) + " verdict=" +
                     to_string(r.verdict) + " witness-digest=" + witness_digest(r) +
                     " assumptions=" + (r.assumptions.empty() ? std::string("none") : quoted(join(r.assumptions, "; ")));
  if (timings) line += " elapsed-ms=" + format_ms(r.elapsed_ms);
  return line;
}

std::string format_text(const CheckResult& r, bool timings) {
  std::string out = "[" + to_string(r.verdict) + "] " + r.check_id + "  " + r.instance;
  if (r.conditional()) out += "  (conditional)";
  if (timings) out += "  " + format_ms(r.elapsed_ms) + " ms";
  out += "\n";
  for (const auto& w : r.witnesses) out += "    " + w + "\n";
  for (const auto& a : r.assumptions) out += "    assumes: " + a + "\n";
  return out;
}

std::string summary_table(const std::vector<CheckResult>& results) {
  std::map<std::string, std::array<std::size_t, 4>> counts;
  std::array<std::size_t, 4> total{};
  for (const auto& r : results) {
    counts[r.check_id][static_cast<std::size_t>(r.verdict)]++;
    total[static_cast<std::size_t>(r.verdict)]++;
  }
  std::size_t width = 8;
  for (const auto& [id, c] : counts) width = std::max(width, id.size());
  std::ostringstream out;
  auto row = [&](const std::string& id, const std::array<std::size_t, 4>& c) {
    out << id << std::string(width - id.size() + 2, ' ');
    for (auto n : c) {
      std::string s = std::to_string(n);
      out << std::string(s.size() < 8 ? 8 - s.size() : 1, ' ') << s;
    }
    out << "\n";
  };
  out << "check" << std::string(width - 3, ' ') << "    pass    fail   indet    skip\n";
  for (const auto& [id, c] : counts) row(id, c);
  row("total", total);
  return out.str();
}

void sort_results(std::vector<CheckResult>& results) {
  std::stable_sort(results.begin(), results.end(), [](const CheckResult& a, const CheckResult& b) {
    if (a.check_id != b.check_id) return a.check_id < b.check_id;
    return a.instance < b.instance;
  });
}

// ------------------------------------------------------------- catalogs

namespace {

struct CatalogEntry {
  const char* spec;
  std::uint64_t order;
};

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> v = {
        {"Cyclic(2)", 2},
        {"Cyclic(3)", 3},
        {"Cyclic(4)", 4},
        {"Direct(Cyclic(2),Cyclic(2))", 4},
        {"Cyclic(6)", 6},
        {"Sym(3)", 6},
        {"Dihedral(4)", 8},
        {"Direct(Cyclic(2),Cyclic(2),Cyclic(2))", 8},
        {"Semidirect(Direct(Cyclic(2),Cyclic(2)),Swap)", 8},
        {"Dihedral(5)", 10},
        {"Cyclic(12)", 12},
        {"Alt(4)", 12},
        {"Dihedral(6)", 12},
        {"Direct(Sym(3),Cyclic(2))", 12},
        {"Direct(Cyclic(3),Cyclic(5))", 15},
        {"Dihedral(10)", 20},
        {"Semidirect(Direct(Cyclic(3),Cyclic(3)),Swap)", 18},
        {"Semidirect(Cyclic(5),Images[(1 3 5 2 4)])", 20},
        {"Semidirect(Cyclic(7),Images[(1 3 5 7 2 4 6)])", 21},
        {"Sym(4)", 24},
        {"SL(2,3)", 24},
        {"Direct(Alt(4),Cyclic(2))", 24},
        {"Dihedral(12)", 24},
        {"Direct(Dihedral(5),Cyclic(3))", 30},
        {"Semidirect(Direct(Cyclic(4),Cyclic(4)),Swap)", 32},
        {"Direct(Sym(3),Sym(3))", 36},
        {"Direct(Alt(4),Cyclic(3))", 36},
        {"GL(2,3)", 48},
        {"Direct(Sym(4),Cyclic(2))", 48},
        {"Semidirect(Direct(Cyclic(5),Cyclic(5)),Swap)", 50},
        {"Alt(5)", 60},
        {"Semidirect(Direct(Sym(3),Sym(3)),Swap)", 72},
        {"Semidirect(Direct(Cyclic(6),Cyclic(6)),Swap)", 72},
        {"Direct(Sym(3),Sym(3),Cyclic(2))", 72},
        {"Semidirect(GL(2,3),TransposeInverse)", 96},
        {"Semidirect(Direct(Cyclic(7),Cyclic(7)),Swap)", 98},
        {"Sym(5)", 120},
        {"SL(2,5)", 120},
        {"Direct(Alt(5),Cyclic(2))", 120},
        {"Semidirect(Direct(Dihedral(4),Dihedral(4)),Swap)", 128},
        {"Direct(Alt(4),Alt(4))", 144},
        {"Direct(Sym(4),Sym(3))", 144},
        {"GL(3,2)", 168},
        {"GL(2,4)", 180},
        {"Direct(Alt(5),Cyclic(3))", 180},
        {"Semidirect(Direct(Dihedral(5),Dihedral(5)),Swap)", 200},
        {"Semidirect(Direct(Alt(4),Alt(4)),Swap)", 288},
        {"Direct(Alt(5),Cyclic(5))", 300},
        {"SL(2,7)", 336},
        {"PGL(2,7)", 336},
        {"Semidirect(GL(3,2),TransposeInverse)", 336},
        {"Direct(GL(3,2),Cyclic(2))", 336},
        {"Alt(6)", 360},
        {"Direct(Alt(5),Sym(3))", 360},
        {"Semidirect(GL(2,4),TransposeInverse)", 360},
        {"GL(2,5)", 480},
        {"PSL(2,8)", 504},
        {"PSL(2,11)", 660},
        {"Sym(6)", 720},
        {"PGL(2,9)", 720},
        {"Direct(Alt(5),Alt(4))", 720},
        {"SL(2,9)", 720},
        {"Semidirect(GL(2,5),TransposeInverse)", 960},
        {"Direct(GL(3,2),Sym(3))", 1008},
        {"PSL(2,13)", 1092},
        {"Semidirect(Direct(Sym(4),Sym(4)),Swap)", 1152},
        {"PGL(2,11)", 1320},
        {"SL(2,11)", 1320},
    };
    std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.order < b.order; });
    return v;
  }();
  return entries;
}

const std::vector<CatalogEntry>& simple_entries() {
  static const std::vector<CatalogEntry> entries = {
      {"Alt(5)", 60},        {"PSL(2,7)", 168},    {"Alt(6)", 360},      {"PSL(2,8)", 504},
      {"PSL(2,11)", 660},    {"PSL(2,13)", 1092},  {"PSL(2,17)", 2448},  {"Alt(7)", 2520},
      {"PSL(2,19)", 3420},   {"PSL(2,16)", 4080},  {"PSL(3,3)", 5616},   {"PSL(2,23)", 6072},
      {"PSL(2,25)", 7800},   {"FromFile(m11.gens)", 7920},               {"PSL(2,27)", 9828},
  };
  return entries;
}

}  // namespace

std::vector<std::string> sweep_catalog(std::uint64_t max_order) {
  std::vector<std::string> out;
  for (const auto& e : catalog_entries()) {
    if (e.order <= max_order) out.push_back(e.spec);
  }
  return out;
}

std::vector<std::string> simple_catalog(std::uint64_t max_order) {
  std::vector<std::string> out;
  for (const auto& e : simple_entries()) {
    if (e.order <= max_order) out.push_back(e.spec);
  }
  return out;
}

// ------------------------------------------------------------- helpers

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string gens_text(const Group& h) {
  std::string out = "<";
  for (std::size_t i = 0; i < h.generators().size(); ++i) {
    if (i) out += ", ";
    out += h.generators()[i].to_cycles();
  }
  return out + ">";
}

Group join(const Group& x, const Group& y) {
  auto gens = x.generators();
  gens.insert(gens.end(), y.generators().begin(), y.generators().end());
  return Group::build(std::move(gens), x.degree());
}

Group join(const Group& x, const Group& y, const Group& z) { return join(join(x, y), z); }

CheckResult make(std::string id, std::string instance, CheckVerdict v, std::vector<std::string> witnesses = {}) {
  CheckResult r;
  r.check_id = std::move(id);
  r.instance = std::move(instance);
  r.verdict = v;
  r.witnesses = std::move(witnesses);
  return r;
}

CheckVerdict pass_if(bool ok) { return ok ? CheckVerdict::Pass : CheckVerdict::Fail; }

std::string yes_no(bool b) { return b ? "Yes" : "No"; }

/// The subgroup with the given element mask.
ElementSubgroup from_mask(const ElementTable& t, const boost::dynamic_bitset<>& mask) {
  ElementSubgroup cur = trivial_subgroup(t);
  for (auto i = mask.find_first(); i != boost::dynamic_bitset<>::npos; i = mask.find_next(i)) {
    if (!cur.contains(static_cast<Index>(i))) cur = *extend(t, cur, static_cast<Index>(i));
  }
  if (cur.mask != mask) throw Error("element set is not a subgroup");
  return cur;
}

/// Finds subgroups by element set.
class SubgroupSet {
 public:
  std::optional<std::size_t> find(const ElementSubgroup& u) const {
    auto [lo, hi] = by_key_.equal_range(u.key);
    for (auto it = lo; it != hi; ++it) {
      if (items_[it->second].mask == u.mask) return it->second;
    }
    return std::nullopt;
  }
  /// Index of u, inserting it if new.
  std::pair<std::size_t, bool> insert(ElementSubgroup u) {
    if (auto i = find(u)) return {*i, false};
    by_key_.emplace(u.key, items_.size());
    items_.push_back(std::move(u));
    return {items_.size() - 1, true};
  }
  const std::vector<ElementSubgroup>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }

 private:
  std::vector<ElementSubgroup> items_;
  std::unordered_multimap<std::uint64_t, std::size_t> by_key_;
};

/// Orbits of <gens> acting by conjugation on a set of subgroups closed
/// under that action.  nullopt if the set is not closed.
std::optional<std::size_t> orbit_count(const ElementTable& t, const SubgroupSet& set, const std::vector<Index>& gens) {
  std::vector<bool> seen(set.size(), false);
  std::size_t orbits = 0;
  for (std::size_t s = 0; s < set.size(); ++s) {
    if (seen[s]) continue;
    ++orbits;
    seen[s] = true;
    std::vector<std::size_t> queue{s};
    for (std::size_t q = 0; q < queue.size(); ++q) {
      for (Index g : gens) {
        auto image = conjugate(t, set.items()[queue[q]], g);
        auto j = set.find(image);
        if (!j) return std::nullopt;
        if (!seen[*j]) {
          seen[*j] = true;
          queue.push_back(*j);
        }
      }
    }
  }
  return orbits;
}

/// Every Hall subgroup from an exhaustive result with a lattice.
SubgroupSet all_hall(const HallResult& r) {
  SubgroupSet out;
  for (auto id : r.lattice_ids) {
    for (auto& [m, t] : r.lattice->index().members(id)) out.insert(std::move(m));
  }
  return out;
}

/// Number of A-classes among the intersections K n A, K running over all
/// Hall subgroups of the group behind `r` (A any subgroup of it).
std::size_t induced_count(const HallResult& r, const Group& a) {
  if (!r.lattice) return 1;  // the Hall subgroup is 1 or the whole group
  const ElementTable& t = r.lattice->table();
  ElementSubgroup ae = from_group(t, a);
  SubgroupSet all = all_hall(r);
  SubgroupSet pieces;
  for (const auto& k : all.items()) pieces.insert(from_mask(t, k.mask & ae.mask));
  auto n = orbit_count(t, pieces, ae.generators);
  if (!n) throw Error("intersections with A not closed under A");
  return *n;
}

/// Number of A-orbits on the set of all Hall subgroups.
std::size_t hall_orbits_under(const HallResult& r, const Group& a) {
  if (!r.lattice) return r.classes.size();
  const ElementTable& t = r.lattice->table();
  auto n = orbit_count(t, all_hall(r), from_group(t, a).generators);
  if (!n) throw Error("Hall subgroups not closed under conjugation");
  return *n;
}

/// Everything a group's checks share: the normal subgroups and the Hall
/// classes per pi, computed once.
class Analysis {
 public:
  Analysis(const BuiltGroup& g, const VerifyOptions& o) : g_(g), o_(o) {}

  const BuiltGroup& built() const { return g_; }
  const Group& group() const { return g_.group; }
  const VerifyOptions& options() const { return o_; }
  std::string name() const { return g_.spec.canonical(); }

  const std::vector<Group>& normals() {
    if (!normals_) {
      normals_.emplace();
      for (auto& s : normal_subgroups(g_.group, o_.hall.subgroup)) normals_->push_back(std::move(s.group));
    }
    return *normals_;
  }

  const HallResult& hall(const PrimeSet& pi) {
    auto key = pi.to_list();
    auto it = hall_.find(key);
    if (it == hall_.end()) it = hall_.emplace(key, hall_classes(g_.group, pi, o_.hall)).first;
    return it->second;
  }

  std::string instance(const PrimeSet& pi) const { return "G=" + name() + ";pi=" + pi.to_string(); }
  std::string instance(const PrimeSet& pi, std::size_t a) {
    return instance(pi) + ";A=N" + std::to_string(a) + "(order " + normals()[a].order().str() + ")";
  }

 private:
  const BuiltGroup& g_;
  const VerifyOptions& o_;
  std::optional<std::vector<Group>> normals_;
  std::map<std::string, HallResult> hall_;
};

std::size_t hall_count(const Group& x, const PrimeSet& pi, const VerifyOptions& o) {
  return hall_classes(x, pi, o.hall).classes.size();
}

BuiltGroup wrap(const Group& g) {
  BuiltGroup b;
  b.group = g;
  return b;
}

template <class F>
CheckResult timed(F&& f) {
  auto t0 = Clock::now();
  CheckResult r = f();
  r.elapsed_ms = ms_since(t0);
  return r;
}

// ------------------------------------------------------------ theorem 1

std::vector<CheckResult> theorem1(Analysis& an, const PrimeSet& pi) {
  std::vector<CheckResult> out;
  const auto& o = an.options();
  auto t0 = Clock::now();
  const HallResult& hr = an.hall(pi);
  if (hr.classes.size() != 1) {
    out.push_back(make("theorem1", an.instance(pi), CheckVerdict::SkippedPrecondition,
                       {"G not in C_pi: k=" + std::to_string(hr.classes.size())}));
    return out;
  }
  const Group& h = hr.classes[0].representative.group;
  for (std::size_t i = 0; i < an.normals().size(); ++i) {
    const Group& a = an.normals()[i];
    Group ha = join(h, a);
    out.push_back(timed([&] {
      HallResult hr2 = hall_classes(ha, pi, o.hall);
      std::string inst = an.instance(pi, i);
      if (hr2.classes.size() != 1) {
        std::vector<std::string> w{"k(HA)=" + std::to_string(hr2.classes.size()) + ", |HA|=" + ha.order().str()};
        if (hr2.classes.size() >= 2) {
          const Group& x = hr2.classes[0].representative.group;
          const Group& y = hr2.classes[1].representative.group;
          auto re = are_conjugate(ha, x, y, o.hall.subgroup);
          if (re.verdict != Verdict::No) {
            return make("theorem1", inst, CheckVerdict::Indeterminate,
                        {"non-conjugacy of two Hall subgroups of HA did not re-verify"});
          }
          w.push_back("Hall subgroups " + gens_text(x) + " and " + gens_text(y) + " not conjugate: " +
                      re.certificate);
        }
        return make("theorem1", inst, CheckVerdict::Fail, w);
      }
      if (!hr2.lattice) return make("theorem1", inst, CheckVerdict::Pass, {"HA is a pi-group or a pi'-group"});
      const ElementTable& t = hr2.lattice->table();
      ElementSubgroup he = from_group(t, h);
      ElementSubgroup ae = from_group(t, a);
      SubgroupSet orbit;
      orbit.insert(he);
      for (std::size_t q = 0; q < orbit.size(); ++q) {
        for (Index g : ae.generators) orbit.insert(conjugate(t, orbit.items()[q], g));
      }
      std::size_t size = hr2.lattice->class_size(hr2.lattice_ids[0]);
      std::string w = "A-orbit of H has " + std::to_string(orbit.size()) + " of the " + std::to_string(size) +
                      " Hall subgroups of HA (|HA|=" + ha.order().str() + ")";
      return make("theorem1", inst, pass_if(orbit.size() == size), {w});
    }));
    if (is_normal(an.group(), ha)) {
      out.push_back(timed([&] {
        std::size_t k = induced_count(hr, a);
        return make("theorem1.induced", an.instance(pi, i), pass_if(k == 1),
                    {"HA normal, k^G(A)=" + std::to_string(k)});
      }));
    }
  }
  if (!out.empty()) out.front().elapsed_ms += ms_since(t0) - out.front().elapsed_ms;
  return out;
}

CheckResult corollary1(Analysis& an, const Group& a, const std::string& inst, const PrimeSet& pi) {
  auto t0 = Clock::now();
  const Group& g = an.group();
  if (g.order() % a.order() != 0 || !g.contains_group(a) || !is_normal(g, a)) {
    return make("corollary1", inst, CheckVerdict::SkippedPrecondition, {"A not normal in G"});
  }
  Order index = g.order() / a.order();
  if (pi_part(index, pi) != 1) {
    return make("corollary1", inst, CheckVerdict::SkippedPrecondition, {"|G:A|=" + index.str() + " not a pi'-number"});
  }
  std::size_t kg = an.hall(pi).classes.size();
  std::size_t ka = hall_count(a, pi, an.options());
  auto r = make("corollary1", inst, pass_if((kg == 1) == (ka == 1)),
                {"k(G)=" + std::to_string(kg) + ", k(A)=" + std::to_string(ka)});
  r.elapsed_ms = ms_since(t0);
  return r;
}

// ------------------------------------------------------------ theorem 2

std::vector<CheckResult> theorem2(const BuiltGroup& s, const VerifyOptions& o) {
  std::vector<CheckResult> out;
  std::string name = s.spec.canonical();
  auto normals = normal_subgroups(s.group, o.hall.subgroup);
  if (normals.size() != 2) {
    out.push_back(make("theorem2", "S=" + name, CheckVerdict::SkippedPrecondition,
                       {"not simple: " + std::to_string(normals.size()) + " normal subgroups"}));
    return out;
  }
  for (const auto& pi : PrimeSet::of(s.group.order()).subsets()) {
    out.push_back(timed([&] {
      std::size_t k = hall_count(s.group, pi, o);
      std::string inst = "S=" + name + ";pi=" + pi.to_string();
      std::vector<std::string> w{"k=" + std::to_string(k)};
      bool ok = k <= 4;
      if (!pi.contains(2) && k > 1) ok = false;
      if (pi.contains(2) && !pi.contains(3) && k > 2) ok = false;
      for (std::size_t kk = 1; kk <= k; ++kk) {
        if (!is_pi_number(Order(kk), pi)) {
          ok = false;
          w.push_back(std::to_string(kk) + " <= k is not a pi-number");
        }
      }
      return make("theorem2", inst, pass_if(ok), w);
    }));
  }
  return out;
}

// ---------------------------------------------------------------- lemmas

std::string lemma_check_id(LemmaId id) { return "lemma." + to_string(id); }

std::vector<CheckResult> lemma(LemmaId id, Analysis& an, const PrimeSet& pi);

std::vector<CheckResult> lemma_base1(Analysis& an, const PrimeSet& pi) {
  std::vector<CheckResult> out;
  const auto& o = an.options();
  const HallResult& hr = an.hall(pi);
  const Group& g = an.group();
  for (std::size_t i = 0; i < an.normals().size(); ++i) {
    const Group& a = an.normals()[i];
    Quotient q = quotient(g, a, o.hall.subgroup);
    for (std::size_t j = 0; j < hr.classes.size(); ++j) {
      out.push_back(timed([&] {
        const Group& h = hr.classes[j].representative.group;
        Group hna = intersection(h, a, o.hall.subgroup);
        Group image = q.project_group(h);
        bool ok1 = hna.order() == pi_part(a.order(), pi);
        bool ok2 = image.order() == pi_part(q.image().order(), pi);
        return make(lemma_check_id(LemmaId::Base1), an.instance(pi, i) + ";H=" + std::to_string(j),
                    pass_if(ok1 && ok2),
                    {"|H n A|=" + hna.order().str() + " (pi-part of |A|: " + pi_part(a.order(), pi).str() + ")",
                     "|HA/A|=" + image.order().str() + " (pi-part of |G/A|: " +
                         pi_part(q.image().order(), pi).str() + ")"});
      }));
    }
  }
  return out;
}

std::vector<CheckResult> lemma_base2(Analysis& an, const PrimeSet& pi) {
  std::vector<CheckResult> out;
  const auto& o = an.options();
  const Group& g = an.group();
  out.push_back(timed([&] {
    auto id = lemma_check_id(LemmaId::Base2);
    auto series = pi_separable_series(g, pi, o.hall);
    if (!series) return make(id, an.instance(pi), CheckVerdict::SkippedPrecondition, {"no pi-separable normal series"});
    std::string shape;
    for (std::size_t i = 0; i < series->size(); ++i) {
      const Group& n = (*series)[i];
      if (!is_normal(g, n)) return make(id, an.instance(pi), CheckVerdict::Indeterminate, {"series member not normal"});
      if (i > 0) {
        const Group& prev = (*series)[i - 1];
        Order f = n.order() / prev.order();
        if (!n.contains_group(prev) || !(is_pi_number(f, pi) || pi_part(f, pi) == 1)) {
          return make(id, an.instance(pi), CheckVerdict::Indeterminate, {"series does not re-verify"});
        }
      }
      shape += (i ? " < " : "") + n.order().str();
    }
    auto report = classify_properties(an.built(), pi, Mode::Exhaustive, o.hall);
    std::vector<std::string> w{"series orders " + shape, "D=" + to_string(report.d)};
    if (report.d != Verdict::Yes) w.insert(w.end(), report.witnesses.begin(), report.witnesses.end());
    return make(id, an.instance(pi), pass_if(report.d == Verdict::Yes), w);
  }));
  return out;
}

std::vector<CheckResult> lemma_cpiext(Analysis& an, const PrimeSet& pi) {
  std::vector<CheckResult> out;
  const auto& o = an.options();
  const Group& g = an.group();
  auto id = lemma_check_id(LemmaId::CpiExt);
  for (std::size_t i = 0; i < an.normals().size(); ++i) {
    const Group& a = an.normals()[i];
    if (a.order() == 1 || a.order() == g.order()) continue;
    out.push_back(timed([&] {
      std::size_t ka = hall_count(a, pi, o);
      std::size_t kq = hall_count(quotient(g, a, o.hall.subgroup).image(), pi, o);
      std::vector<std::string> w{"k(A)=" + std::to_string(ka) + ", k(G/A)=" + std::to_string(kq)};
      if (ka != 1 || kq != 1) return make(id, an.instance(pi, i), CheckVerdict::SkippedPrecondition, w);
      std::size_t kg = an.hall(pi).classes.size();
      w.push_back("k(G)=" + std::to_string(kg));
      return make(id, an.instance(pi, i), pass_if(kg == 1), w);
    }));
  }
  return out;
}

std::vector<CheckResult> lemma_vedernik(Analysis& an, const PrimeSet& pi) {
  std::vector<CheckResult> out;
  const auto& o = an.options();
  const Group& g = an.group();
  const HallResult& hr = an.hall(pi);
  auto id = lemma_check_id(LemmaId::Vedernik);
  if (hr.classes.empty()) {
    out.push_back(make(id, an.instance(pi), CheckVerdict::SkippedPrecondition, {"G not in E_pi"}));
    return out;
  }
  constexpr std::size_t kPerA = 12;
  for (std::size_t i = 0; i < an.normals().size(); ++i) {
    const Group& a = an.normals()[i];
    if (a.order() == 1 || a.order() == g.order()) continue;
    std::vector<Group> candidates;
    auto add = [&](Group b) {
      if (candidates.size() >= kPerA || b.order() == a.order()) return;
      for (const auto& c : candidates) {
        if (c.order() == b.order() && c.same_elements(b)) return;
      }
      candidates.push_back(std::move(b));
    };
    for (const auto& n : an.normals()) {
      if (n.order() > a.order() && n.contains_group(a)) add(n);
    }
    if (hr.lattice) {
      for (std::size_t c = 0; c < hr.lattice->class_count(); ++c) {
        add(join(to_group(hr.lattice->table(), hr.lattice->representative(c)), a));
      }
    }
    for (std::size_t b = 0; b < candidates.size(); ++b) {
      out.push_back(timed([&] {
        const Group& bg = candidates[b];
        std::string inst = an.instance(pi, i) + ";B=" + std::to_string(b) + "(order " + bg.order().str() + ")";
        std::size_t kq = hall_count(quotient(bg, a, o.hall.subgroup).image(), pi, o);
        if (kq == 0) return make(id, inst, CheckVerdict::SkippedPrecondition, {"B/A not in E_pi"});
        std::size_t kb = hall_count(bg, pi, o);
        auto r = make(id, inst, pass_if(kb >= 1),
                      {"k(B/A)=" + std::to_string(kq) + ", k(B)=" + std::to_string(kb)});
        r.witnesses.push_back("statement-level check");
        return r;
      }));
    }
  }
  return out;
}

std::vector<CheckResult> lemma_quot(Analysis& an, const PrimeSet& pi) {
  std::vector<CheckResult> out;
  const auto& o = an.options();
  const Group& g = an.group();
  auto id = lemma_check_id(LemmaId::Quot);
  if (an.hall(pi).classes.size() != 1) {
    out.push_back(make(id, an.instance(pi), CheckVerdict::SkippedPrecondition, {"G not in C_pi"}));
    return out;
  }
  for (std::size_t i = 0; i < an.normals().size(); ++i) {
    const Group& a = an.normals()[i];
    if (a.order() == 1 || a.order() == g.order()) continue;
    out.push_back(timed([&] {
      Group q = quotient(g, a, o.hall.subgroup).image();
      std::size_t kq = hall_count(q, pi, o);
      return make(id, an.instance(pi, i), pass_if(kq == 1),
                  {"|G/A|=" + q.order().str() + ", k(G/A)=" + std::to_string(kq)});
    }));
  }
  return out;
}

std::vector<CheckResult> lemma_norm(Analysis& an, const PrimeSet& pi) {
  std::vector<CheckResult> out;
  const auto& o = an.options();
  const Group& g = an.group();
  auto id = lemma_check_id(LemmaId::Norm);
  const HallResult& hr = an.hall(pi);
  if (hr.classes.size() != 1) {
    out.push_back(make(id, an.instance(pi), CheckVerdict::SkippedPrecondition, {"G not in C_pi"}));
    return out;
  }
  const Group& h = hr.classes[0].representative.group;
  for (std::size_t i = 0; i < an.normals().size(); ++i) {
    const Group& a = an.normals()[i];
    out.push_back(timed([&] {
      Group n1 = normalizer(g, join(h, a), o.hall.subgroup).group;
      Group n2 = normalizer(g, intersection(h, a, o.hall.subgroup), o.hall.subgroup).group;
      std::size_t k1 = hall_count(n1, pi, o), k2 = hall_count(n2, pi, o);
      return make(id, an.instance(pi, i), pass_if(k1 == 1 && k2 == 1),
                  {"|N(HA)|=" + n1.order().str() + " k=" + std::to_string(k1),
                   "|N(H n A)|=" + n2.order().str() + " k=" + std::to_string(k2)});
    }));
  }
  return out;
}

std::vector<CheckResult> lemma_ind_inv(Analysis& an, const PrimeSet& pi) {
  std::vector<CheckResult> out;
  const auto& o = an.options();
  const Group& g = an.group();
  auto id = lemma_check_id(LemmaId::IndInv);
  const HallResult& hr = an.hall(pi);
  if (hr.classes.empty()) {
    out.push_back(make(id, an.instance(pi), CheckVerdict::SkippedPrecondition, {"G not in E_pi"}));
    return out;
  }
  for (std::size_t i = 0; i < an.normals().size(); ++i) {
    const Group& a = an.normals()[i];
    Group c = centralizer(g, a, o.hall.subgroup).group;
    for (std::size_t j = 0; j < hr.classes.size(); ++j) {
      out.push_back(timed([&] {
        const Group& h = hr.classes[j].representative.group;
        std::string inst = an.instance(pi, i) + ";H=" + std::to_string(j);
        if (!is_normal(g, join(h, a, c))) {
          return make(id, inst, CheckVerdict::SkippedPrecondition, {"HAC_G(A) not normal"});
        }
        auto ir = induced_classes(an.built(), hr, wrap(a), pi, Mode::Exhaustive, o.hall);
        std::string induced, invariant;
        bool ok = true, indeterminate = false;
        for (std::size_t k = 0; k < ir.a_classes.classes.size(); ++k) {
          bool is_induced = std::find(ir.induced.begin(), ir.induced.end(), k) != ir.induced.end();
          Verdict inv = is_class_invariant(h, ir.a_classes.classes[k].representative.group, a, o.hall);
          if (inv == Verdict::Indeterminate) indeterminate = true;
          if ((inv == Verdict::Yes) != is_induced && inv != Verdict::Indeterminate) ok = false;
          induced += is_induced ? "1" : "0";
          invariant += inv == Verdict::Yes ? "1" : inv == Verdict::No ? "0" : "?";
        }
        std::size_t k2 = induced_count(hr, a);
        if (k2 != ir.k_pi_g_of_a()) ok = false;
        std::vector<std::string> w{"k(A)=" + std::to_string(ir.a_classes.classes.size()) + " induced=" + induced +
                                       " H-invariant=" + invariant,
                                   "k^G(A)=" + std::to_string(ir.k_pi_g_of_a()) + " (by intersections: " +
                                       std::to_string(k2) + ")"};
        if (!ok) return make(id, inst, CheckVerdict::Fail, w);
        return make(id, inst, indeterminate ? CheckVerdict::Indeterminate : CheckVerdict::Pass, w);
      }));
    }
  }
  return out;
}

std::vector<CheckResult> lemma_equality(Analysis& an, const PrimeSet& pi) {
  std::vector<CheckResult> out;
  const auto& o = an.options();
  const Group& g = an.group();
  auto id = lemma_check_id(LemmaId::EqualityGHA);
  const HallResult& hr = an.hall(pi);
  if (hr.classes.size() != 1) {
    out.push_back(make(id, an.instance(pi), CheckVerdict::SkippedPrecondition, {"G not in C_pi"}));
    return out;
  }
  const Group& h = hr.classes[0].representative.group;
  for (std::size_t i = 0; i < an.normals().size(); ++i) {
    const Group& a = an.normals()[i];
    out.push_back(timed([&] {
      Group ha = join(h, a);
      if (!is_normal(g, ha)) return make(id, an.instance(pi, i), CheckVerdict::SkippedPrecondition, {"HA not normal"});
      std::size_t kg = induced_count(hr, a);
      std::size_t kha = induced_count(hall_classes(ha, pi, o.hall), a);
      return make(id, an.instance(pi, i), pass_if(kg == kha),
                  {"k^G(A)=" + std::to_string(kg) + ", k^HA(A)=" + std::to_string(kha)});
    }));
  }
  return out;
}

std::vector<CheckResult> lemma_crit(Analysis& an, const PrimeSet& pi) {
  std::vector<CheckResult> out;
  const auto& o = an.options();
  const Group& g = an.group();
  auto id = lemma_check_id(LemmaId::Crit);
  const HallResult& hr = an.hall(pi);
  if (hr.classes.empty()) {
    out.push_back(make(id, an.instance(pi), CheckVerdict::SkippedPrecondition, {"G not in E_pi"}));
    return out;
  }
  for (std::size_t i = 0; i < an.normals().size(); ++i) {
    const Group& a = an.normals()[i];
    for (std::size_t j = 0; j < hr.classes.size(); ++j) {
      out.push_back(timed([&] {
        const Group& h = hr.classes[j].representative.group;
        std::string inst = an.instance(pi, i) + ";H=" + std::to_string(j);
        Group ha = join(h, a);
        if (!is_normal(g, ha)) return make(id, inst, CheckVerdict::SkippedPrecondition, {"HA not normal"});
        bool s1 = induced_count(hr, a) == 1;
        bool s2 = hall_count(ha, pi, o) == 1;
        bool s3 = hall_orbits_under(hr, a) == 1;
        return make(id, inst, pass_if(s1 == s2 && s2 == s3),
                    {"(1)=" + yes_no(s1) + " (2)=" + yes_no(s2) + " (3)=" + yes_no(s3)});
      }));
    }
  }
  return out;
}

/// G = <H, A, C_G(A)>.
bool covers(const Group& g, const Group& h, const Group& a, const VerifyOptions& o) {
  Group c = centralizer(g, a, o.hall.subgroup).group;
  return join(h, a, c).order() == g.order();
}

std::vector<CheckResult> lemma_trivact(Analysis& an, const PrimeSet& pi) {
  std::vector<CheckResult> out;
  const auto& o = an.options();
  const Group& g = an.group();
  auto id = lemma_check_id(LemmaId::TrivAct);
  const HallResult& hr = an.hall(pi);
  if (hr.classes.empty()) {
    out.push_back(make(id, an.instance(pi), CheckVerdict::SkippedPrecondition, {"G not in E_pi"}));
    return out;
  }
  const auto& ns = an.normals();
  for (std::size_t i = 0; i < ns.size(); ++i) {
    for (std::size_t j = i + 1; j < ns.size(); ++j) {
      if (ns[i].order() == 1 || ns[j].order() == 1) continue;
      Group a = join(ns[i], ns[j]);
      if (a.order() != ns[i].order() * ns[j].order()) continue;
      for (std::size_t c = 0; c < hr.classes.size(); ++c) {
        out.push_back(timed([&] {
          std::string inst = an.instance(pi) + ";A=N" + std::to_string(i) + "xN" + std::to_string(j) + ";H=" +
                             std::to_string(c);
          if (!covers(g, hr.classes[c].representative.group, a, o)) {
            return make(id, inst, CheckVerdict::SkippedPrecondition, {"G != HAC_G(A)"});
          }
          std::size_t k = induced_count(hr, a), k1 = induced_count(hr, ns[i]), k2 = induced_count(hr, ns[j]);
          return make(id, inst, pass_if(k == k1 * k2),
                      {"k^G(A)=" + std::to_string(k) + ", k^G(A1)=" + std::to_string(k1) +
                       ", k^G(A2)=" + std::to_string(k2)});
        }));
      }
    }
  }
  return out;
}

std::vector<CheckResult> lemma_transact(Analysis& an, const PrimeSet& pi) {
  std::vector<CheckResult> out;
  const auto& o = an.options();
  const BuiltGroup& bg = an.built();
  const Group& g = an.group();
  auto id = lemma_check_id(LemmaId::TransAct);
  if (bg.spec.family != Family::Semidirect || bg.spec.automorphism != "Swap" || bg.factors.size() != 2 ||
      !bg.adjoined) {
    out.push_back(make(id, an.instance(pi), CheckVerdict::SkippedPrecondition, {"no permuted direct factors"}));
    return out;
  }
  const HallResult& hr = an.hall(pi);
  if (hr.classes.empty()) {
    out.push_back(make(id, an.instance(pi), CheckVerdict::SkippedPrecondition, {"G not in E_pi"}));
    return out;
  }
  const Permutation& s = *bg.adjoined;
  auto ys = normal_subgroups(bg.factors[0], o.hall.subgroup);
  for (std::size_t y = 0; y < ys.size(); ++y) {
    const Group& a1 = ys[y].group;
    if (a1.order() == 1) continue;
    std::vector<Permutation> gens;
    for (const auto& x : a1.generators()) gens.push_back(conjugate(x, s));
    Group a2 = Group::build(std::move(gens), g.degree());
    Group a = join(a1, a2);
    if (a.order() != a1.order() * a2.order() || !is_normal(g, a)) continue;
    for (std::size_t c = 0; c < hr.classes.size(); ++c) {
      out.push_back(timed([&] {
        std::string inst = an.instance(pi) + ";A=Y" + std::to_string(y) + "^2(order " + a.order().str() + ");H=" +
                           std::to_string(c);
        if (!covers(g, hr.classes[c].representative.group, a, o)) {
          return make(id, inst, CheckVerdict::SkippedPrecondition, {"G != HAC_G(A)"});
        }
        std::size_t k = induced_count(hr, a), k1 = induced_count(hr, a1), k2 = induced_count(hr, a2);
        return make(id, inst, pass_if(k == k1 && k1 == k2),
                    {"k^G(A)=" + std::to_string(k) + ", k^G(A1)=" + std::to_string(k1) +
                     ", k^G(A2)=" + std::to_string(k2)});
      }));
    }
  }
  return out;
}

std::vector<CheckResult> lemma(LemmaId id, Analysis& an, const PrimeSet& pi) {
  switch (id) {
    case LemmaId::Base1:
      return lemma_base1(an, pi);
    case LemmaId::Base2:
      return lemma_base2(an, pi);
    case LemmaId::CpiExt:
      return lemma_cpiext(an, pi);
    case LemmaId::Vedernik:
      return lemma_vedernik(an, pi);
    case LemmaId::Quot:
      return lemma_quot(an, pi);
    case LemmaId::Norm:
      return lemma_norm(an, pi);
    case LemmaId::IndInv:
      return lemma_ind_inv(an, pi);
    case LemmaId::EqualityGHA:
      return lemma_equality(an, pi);
    case LemmaId::Crit:
      return lemma_crit(an, pi);
    case LemmaId::TrivAct:
      return lemma_trivact(an, pi);
    case LemmaId::TransAct:
      return lemma_transact(an, pi);
  }
  return {};
}

// ------------------------------------------------------------ conjecture

std::vector<CheckResult> conjecture(Analysis& an, const PrimeSet& pi) {
  std::vector<CheckResult> out;
  const auto& o = an.options();
  const Group& g = an.group();
  const HallResult& hr = an.hall(pi);
  if (hr.classes.size() != 1) {
    out.push_back(make("conjecture", an.instance(pi), CheckVerdict::SkippedPrecondition,
                       {"G not in C_pi: k=" + std::to_string(hr.classes.size())}));
    return out;
  }
  if (!hr.lattice) {
    out.push_back(make("conjecture", an.instance(pi), CheckVerdict::SkippedPrecondition,
                       {"Hall subgroup is 1 or G"}));
    return out;
  }
  const ElementTable& t = hr.lattice->table();
  ElementSubgroup h = hr.lattice->representative(hr.lattice_ids[0]);
  std::vector<Index> ggens;
  for (const auto& x : g.generators()) {
    if (!x.is_identity()) ggens.push_back(t.index_of(x));
  }
  // Candidates <H, x>, one per double coset HxH, then N_G(H).
  SubgroupSet candidates;
  boost::dynamic_bitset<> marked = h.mask;
  for (Index x = 0; x < t.size(); ++x) {
    if (marked.test(x)) continue;
    for (Index a : h.elements)
      for (Index b : h.elements) marked.set(t.mul(t.mul(a, x), b));
    candidates.insert(*extend(t, h, x));
  }
  candidates.insert(from_group(t, normalizer(g, to_group(t, h), o.hall.subgroup).group));
  std::size_t checked = 0, pending = 0;
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    const ElementSubgroup& a = candidates.items()[c];
    if (a.size() == t.size() || a.size() == h.size()) continue;
    bool normal = std::all_of(ggens.begin(), ggens.end(), [&](Index x) { return normalizes(t, a, x); });
    if (normal) continue;
    if (checked >= o.conjecture_budget) {
      ++pending;
      continue;
    }
    ++checked;
    out.push_back(timed([&] {
      Group ag = to_group(t, a);
      std::string inst = an.instance(pi) + ";A=" + std::to_string(c) + "(order " + ag.order().str() + ")";
      HallResult ar = hall_classes(ag, pi, o.hall);
      if (ar.classes.size() == 1) return make("conjecture", inst, CheckVerdict::Pass, {"k(A)=1"});
      std::vector<std::string> w{"A=" + gens_text(ag) + " has k=" + std::to_string(ar.classes.size())};
      if (ar.classes.size() >= 2) {
        auto re = are_conjugate(ag, ar.classes[0].representative.group, ar.classes[1].representative.group,
                                o.hall.subgroup);
        if (re.verdict != Verdict::No || !ag.contains_group(to_group(t, h))) {
          return make("conjecture", inst, CheckVerdict::Indeterminate, {"counterexample did not re-verify"});
        }
        w.push_back("non-conjugate Hall subgroups: " + re.certificate);
      }
      return make("conjecture", inst, CheckVerdict::Fail, w);
    }));
  }
  if (pending) {
    out.push_back(make("conjecture", an.instance(pi) + ";budget", CheckVerdict::Indeterminate,
                       {std::to_string(pending) + " candidate subgroups left unchecked"}));
  }
  if (out.empty()) {
    out.push_back(make("conjecture", an.instance(pi), CheckVerdict::SkippedPrecondition,
                       {"no proper non-normal overgroup of H among the candidates"}));
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------- public checks

std::vector<CheckResult> check_theorem1(const BuiltGroup& g, const PrimeSet& pi, const VerifyOptions& options) {
  Analysis an(g, options);
  return theorem1(an, pi);
}

CheckResult check_corollary1(const BuiltGroup& g, const Group& a, const PrimeSet& pi, const VerifyOptions& options) {
  Analysis an(g, options);
  return corollary1(an, a, an.instance(pi) + ";A=(order " + a.order().str() + ")", pi);
}

std::vector<CheckResult> check_theorem2(const BuiltGroup& s, const VerifyOptions& options) {
  return theorem2(s, options);
}

std::string to_string(LemmaId id) {
  switch (id) {
    case LemmaId::Base1:
      return "base1";
    case LemmaId::Base2:
      return "base2";
    case LemmaId::CpiExt:
      return "cpiext";
    case LemmaId::Vedernik:
      return "vedernik";
    case LemmaId::Quot:
      return "quot";
    case LemmaId::Norm:
      return "norm";
    case LemmaId::IndInv:
      return "ind=inv";
    case LemmaId::EqualityGHA:
      return "equality";
    case LemmaId::Crit:
      return "crit";
    case LemmaId::TrivAct:
      return "trivact";
    case LemmaId::TransAct:
      return "transact";
  }
  return "?";
}

const std::vector<LemmaId>& all_lemmas() {
  static const std::vector<LemmaId> ids = {LemmaId::Base1,  LemmaId::Base2,       LemmaId::CpiExt, LemmaId::Vedernik,
                                           LemmaId::Quot,   LemmaId::Norm,        LemmaId::IndInv,
                                           LemmaId::EqualityGHA, LemmaId::Crit,   LemmaId::TrivAct,
                                           LemmaId::TransAct};
  return ids;
}

LemmaId parse_lemma_id(std::string_view text) {
  for (auto id : all_lemmas()) {
    if (to_string(id) == text) return id;
  }
  throw ParseError("unknown lemma '" + std::string(text) + "'", 0);
}

std::vector<CheckResult> check_lemma(LemmaId id, const BuiltGroup& g, const PrimeSet& pi,
                                     const VerifyOptions& options) {
  Analysis an(g, options);
  return lemma(id, an, pi);
}

std::vector<CheckResult> conjecture_search(const BuiltGroup& g, const PrimeSet& pi, const VerifyOptions& options) {
  Analysis an(g, options);
  return conjecture(an, pi);
}

// -------------------------------------------------------------- examples

namespace {

std::vector<CheckResult> example1(const VerifyOptions& o, const PrimeSet& pi) {
  std::vector<CheckResult> out;
  BuiltGroup g = build("GL(3,2)");
  std::string inst = "G=GL(3,2);pi=" + pi.to_string();
  out.push_back(timed([&] {
    bool ok = g.group.order() == 168 && g.group.order() == Order(8 * 3 * 7);
    return make("example1.order", inst, pass_if(ok), {"|G|=" + g.group.order().str() + " = 2^3*3*7"});
  }));
  PrimeSet eff = pi.intersect(PrimeSet::of(g.group.order()));
  HallResult hr = hall_classes(g, pi, Mode::Exhaustive, o.hall);
  if (eff == PrimeSet::of(g.group.order())) {
    out.push_back(timed([&] {
      bool ok = hr.classes.size() == 1 && hr.classes[0].representative.group.same_elements(g.group);
      return make("example1.classes", inst, pass_if(ok),
                  {"k=" + std::to_string(hr.classes.size()) + ", the Hall subgroup is G"});
    }));
    return out;
  }
  if (!(eff == PrimeSet({2, 3}))) {
    out.push_back(make("example1.classes", inst, CheckVerdict::SkippedPrecondition,
                       {"the example concerns pi={2,3}; k=" + std::to_string(hr.classes.size())}));
    return out;
  }
  out.push_back(timed([&] {
    return make("example1.classes", inst, pass_if(hr.classes.size() == 2),
                {"k=" + std::to_string(hr.classes.size()) + " (exhaustive)"});
  }));
  out.push_back(timed([&] {
    std::vector<std::string> w;
    bool ok = !hr.classes.empty();
    for (const auto& c : hr.classes) {
      ok = ok && c.representative.order() == 24;
      w.push_back(gens_text(c.representative.group) + " order " + c.representative.order().str());
    }
    return make("example1.rep-orders", inst, pass_if(ok), w);
  }));
  out.push_back(timed([&] {
    std::vector<std::string> w;
    bool ok = !hr.classes.empty();
    for (const auto& c : hr.classes) {
      auto n = normalizer(g.group, c.representative.group, o.hall.subgroup);
      ok = ok && n.group.same_elements(c.representative.group);
      w.push_back("|N_G(H)|=" + n.order().str());
    }
    return make("example1.self-normalizing", inst, pass_if(ok), w);
  }));
  out.push_back(timed([&] {
    std::vector<std::string> w;
    std::set<std::size_t> hit;
    for (const auto& dims : {std::vector<std::uint32_t>{2, 1}, std::vector<std::uint32_t>{1, 2}}) {
      FlagSpec f{dims};
      Group h = flag_stabilizer(g, f);
      auto c = locate_class(g.group, hr, h, o.hall);
      if (c) hit.insert(*c);
      w.push_back(f.label() + " order " + h.order().str() + " in class " + (c ? std::to_string(*c) : "-") +
                  ", orbit signature " + format_signature(orbit_signature(g.group, h)));
    }
    return make("example1.flags", inst, pass_if(hit.size() == 2), w);
  }));

  BuiltGroup gh = build("Semidirect(GL(3,2),TransposeInverse)");
  std::string inst2 = "G=" + gh.spec.canonical() + ";pi=" + pi.to_string();
  out.push_back(timed([&] {
    return make("example1.extension-order", inst2, pass_if(gh.group.order() == Order(16 * 3 * 7)),
                {"|G^|=" + gh.group.order().str() + " = 2^4*3*7"});
  }));
  HallResult hh = hall_classes(gh, pi, Mode::Exhaustive, o.hall);
  out.push_back(timed([&] {
    std::vector<std::string> w{"k=" + std::to_string(hh.classes.size()) + " (exhaustive), pi-part " +
                               hh.hall_order.str()};
    for (const auto& m : hh.non_hall_maximal) {
      w.push_back("maximal pi-subgroup order " + m.representative.order().str() + ", class size " +
                  m.class_size.str());
    }
    return make("example1.extension-no-hall", inst2, pass_if(hh.classes.empty()), w);
  }));
  BuiltGroup a = *normal_part(gh);
  HallResult ha = hall_classes(a, pi, Mode::Exhaustive, o.hall);
  out.push_back(timed([&] {
    Group s = build_group({*gh.adjoined}, gh.group.degree());
    std::vector<std::string> w;
    bool ok = ha.classes.size() == 2;
    for (std::size_t c = 0; ok && c < 2; ++c) {
      const Group& rep = ha.classes[c].representative.group;
      Verdict v = is_class_invariant(s, rep, a.group, o.hall);
      std::vector<Permutation> gens;
      for (const auto& x : rep.generators()) gens.push_back(conjugate(x, *gh.adjoined));
      auto image = locate_class(a.group, ha, Group::build(gens, rep.degree()), o.hall);
      ok = ok && v == Verdict::No && image == 1 - c;
      w.push_back("class " + std::to_string(c) + " -> class " + (image ? std::to_string(*image) : "-") +
                  " under the swap, invariant=" + to_string(v));
    }
    return make("example1.iota-swaps", inst2, pass_if(ok), w);
  }));
  out.push_back(timed([&] {
    std::vector<std::string> w;
    bool ok = !ha.classes.empty();
    for (const auto& c : ha.classes) {
      auto n = normalizer(gh.group, c.representative.group, o.hall.subgroup);
      ok = ok && n.group.same_elements(c.representative.group);
      w.push_back("|N_G^(H)|=" + n.order().str());
    }
    return make("example1.normalizer-in-extension", inst2, pass_if(ok), w);
  }));
  return out;
}

std::vector<CheckResult> example2(const VerifyOptions& o, const PrimeSet& pi) {
  std::vector<CheckResult> out;
  std::string inst = "G=GL(5,2);pi=" + pi.to_string();
  BuiltGroup g = build("GL(5,2)");
  Order expected = Order(1024) * 9 * 5 * 7 * 31;
  out.push_back(timed([&] {
    bool ok = g.group.order() == expected && classical_order(Family::GL, 5, 2) == expected;
    return make("example2.order", inst, pass_if(ok),
                {"|G|=" + g.group.order().str() + " = 2^10*3^2*5*7*31 = " + expected.str()});
  }));
  if (!(pi.intersect(PrimeSet::of(g.group.order())) == PrimeSet({2, 3}))) {
    out.push_back(make("example2.classes", inst, CheckVerdict::SkippedPrecondition,
                       {"the example concerns pi={2,3}"}));
    return out;
  }
  HallResult hr = hall_classes(g, pi, Mode::CatalogCertified, o.hall);
  auto conditional = [&](CheckResult r, const std::vector<std::string>& a) {
    r.assumptions = a;
    return r;
  };
  out.push_back(timed([&] {
    std::set<std::string> tags;
    bool ok = hr.classes.size() == 3;
    std::vector<std::string> w{"k=" + std::to_string(hr.classes.size()) + " (catalog)"};
    for (const auto& c : hr.classes) {
      tags.insert(c.representative.tag);
      ok = ok && c.representative.order() == 9216 && is_hall_by_index(g.group, c.representative.group, pi);
      w.push_back(c.representative.tag + " order " + c.representative.order().str() + ", class size " +
                  c.class_size.str());
    }
    ok = ok && tags == std::set<std::string>{"flag(1,2,2)", "flag(2,1,2)", "flag(2,2,1)"};
    return conditional(make("example2.classes", inst, pass_if(ok), w), hr.assumptions);
  }));
  out.push_back(timed([&] {
    std::set<std::string> sigs;
    std::vector<std::string> w;
    for (const auto& c : hr.classes) {
      auto s = format_signature(orbit_signature(g.group, c.representative.group));
      sigs.insert(s);
      w.push_back(c.representative.tag + " orbit signature " + s);
    }
    bool ok = sigs == std::set<std::string>{"{1,6,24}", "{3,12,16}", "{3,4,24}"};
    return make("example2.signatures", inst, pass_if(ok), w);
  }));

  BuiltGroup gh = build("Semidirect(GL(5,2),TransposeInverse)");
  std::string inst2 = "G=" + gh.spec.canonical() + ";pi=" + pi.to_string();
  BuiltGroup a = *normal_part(gh);
  HallResult ha = hall_classes(a, pi, Mode::CatalogCertified, o.hall);
  auto tag_index = [&](const std::string& tag) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < ha.classes.size(); ++i) {
      if (ha.classes[i].representative.tag == tag) return i;
    }
    return std::nullopt;
  };
  out.push_back(timed([&] {
    Group s = build_group({*gh.adjoined}, gh.group.degree());
    std::vector<std::string> w;
    bool ok = ha.classes.size() == 3;
    for (std::size_t c = 0; ok && c < ha.classes.size(); ++c) {
      const auto& cls = ha.classes[c];
      Verdict v = is_class_invariant(s, cls.representative.group, a.group, o.hall);
      std::vector<Permutation> gens;
      for (const auto& x : cls.representative.group.generators()) gens.push_back(conjugate(x, *gh.adjoined));
      auto image = locate_class(a.group, ha, Group::build(gens, gh.group.degree()), o.hall);
      std::string want = cls.representative.tag == "flag(1,2,2)"   ? "flag(2,2,1)"
                         : cls.representative.tag == "flag(2,2,1)" ? "flag(1,2,2)"
                                                                   : "flag(2,1,2)";
      ok = ok && image && image == tag_index(want) &&
           v == (want == cls.representative.tag ? Verdict::Yes : Verdict::No);
      w.push_back(cls.representative.tag + " -> " + (image ? ha.classes[*image].representative.tag : "-") +
                  ", invariant=" + to_string(v));
    }
    return conditional(make("example2.iota", inst2, pass_if(ok), w), ha.assumptions);
  }));
  HallResult hg = hall_classes(gh, pi, Mode::CatalogCertified, o.hall);
  out.push_back(timed([&] {
    auto i = tag_index("flag(2,1,2)");
    if (!i) return make("example2.hall-normalizer", inst2, CheckVerdict::Fail, {"flag(2,1,2) class missing"});
    const Group& h1 = ha.classes[*i].representative.group;
    auto n = normalizer(gh.group, h1, o.hall.subgroup);
    bool ok = n.order() == 18432 && is_hall_by_index(gh.group, n.group, pi) && hg.classes.size() == 1 &&
              hg.classes[0].representative.group.same_elements(n.group);
    return conditional(make("example2.hall-normalizer", inst2, pass_if(ok),
                            {"|N_G^(H1)|=" + n.order().str() + ", pi-part of |G^| " +
                             pi_part(gh.group.order(), pi).str()}),
                       hg.assumptions);
  }));
  out.push_back(timed([&] {
    bool ok = hg.classes.size() == 1 && !hg.assumptions.empty() && hg.provenance == Provenance::CatalogCertified;
    return conditional(make("example2.k-extension", inst2, pass_if(ok),
                            {"k=" + std::to_string(hg.classes.size()) + " (" + to_string(hg.provenance) + ")"}),
                       hg.assumptions);
  }));
  out.push_back(timed([&] {
    auto rg = classify_properties(g, pi, Mode::CatalogCertified, o.hall);
    auto rh = classify_properties(gh, pi, Mode::CatalogCertified, o.hall);
    bool ok = rg.c == Verdict::No && rh.c == Verdict::Yes;
    return conditional(make("example2.c-property", inst2, pass_if(ok),
                            {"C(GL(5,2))=" + to_string(rg.c), "C(G^)=" + to_string(rh.c)}),
                       rh.assumptions);
  }));
  out.push_back(timed([&] {
    auto ir = induced_classes(gh, hg, a, pi, Mode::CatalogCertified, o.hall);
    bool ok = ir.k_pi_g_of_a() == 1 && ir.a_classes.classes.size() == 3 &&
              ir.a_classes.classes[ir.induced[0]].representative.tag == "flag(2,1,2)";
    return conditional(make("example2.induced", inst2, pass_if(ok),
                            {"k^G^(A)=" + std::to_string(ir.k_pi_g_of_a()) + " < k(A)=" +
                             std::to_string(ir.a_classes.classes.size())}),
                       ir.assumptions);
  }));
  out.push_back(timed([&] {
    // A = GL(5,2): HA is the whole group, which has one Hall class.
    const Group& h = hg.classes.at(0).representative.group;
    Group ha_group = join(h, a.group);
    bool ok = ha_group.order() == gh.group.order() && hg.classes.size() == 1;
    return conditional(make("example2.theorem1", inst2 + ";A=GL(5,2)", pass_if(ok),
                            {"|HA|=" + ha_group.order().str() + ", k(HA)=" + std::to_string(hg.classes.size())}),
                       hg.assumptions);
  }));
  out.push_back(timed([&] {
    auto ir = induced_classes(gh, hg, a, pi, Mode::CatalogCertified, o.hall);
    const Group& h = hg.classes.at(0).representative.group;
    bool s1 = ir.k_pi_g_of_a() == 1;
    bool s2 = hg.classes.size() == 1 && join(h, a.group).order() == gh.group.order();
    // One class, and G^ = HA: every conjugate H^g equals H^a for some a in A.
    Group hna = intersection(h, a.group, o.hall.subgroup);
    bool s3 = hg.classes.size() == 1 && h.order() * a.group.order() / hna.order() == gh.group.order();
    return conditional(make("example2.crit", inst2 + ";A=GL(5,2)", pass_if(s1 && s2 && s3),
                            {"(1)=" + yes_no(s1) + " (2)=" + yes_no(s2) + " (3)=" + yes_no(s3)}),
                       hg.assumptions);
  }));
  return out;
}

}  // namespace

std::vector<CheckResult> run_example(int which, const VerifyOptions& options, std::optional<PrimeSet> pi) {
  PrimeSet p = pi.value_or(PrimeSet({2, 3}));
  if (which == 1) return example1(options, p);
  if (which == 2) return example2(options, p);
  throw RangeError("no example " + std::to_string(which));
}

// ----------------------------------------------------------------- suites

std::string to_string(Suite s) {
  switch (s) {
    case Suite::Example1:
      return "example1";
    case Suite::Example2:
      return "example2";
    case Suite::Theorem1:
      return "theorem1";
    case Suite::Theorem2:
      return "theorem2";
    case Suite::Lemmas:
      return "lemmas";
    case Suite::Conjecture:
      return "conjecture";
  }
  return "?";
}

Suite parse_suite(std::string_view text) {
  for (auto s : {Suite::Example1, Suite::Example2, Suite::Theorem1, Suite::Theorem2, Suite::Lemmas, Suite::Conjecture}) {
    if (to_string(s) == text) return s;
  }
  throw ParseError("unknown suite '" + std::string(text) + "'", 0);
}

std::vector<std::string> suite_jobs(Suite suite, std::uint64_t max_order) {
  switch (suite) {
    case Suite::Example1:
      return {"example1"};
    case Suite::Example2:
      return {"example2"};
    case Suite::Theorem2:
      return simple_catalog(max_order);
    default:
      return sweep_catalog(max_order);
  }
}

std::vector<CheckResult> run_job(Suite suite, const std::string& job, const VerifyOptions& options) {
  if (suite == Suite::Example1) return run_example(1, options);
  if (suite == Suite::Example2) return run_example(2, options);
  BuiltGroup g = build(job);
  if (suite == Suite::Theorem2) return theorem2(g, options);
  Analysis an(g, options);
  std::vector<CheckResult> out;
  auto append = [&](std::vector<CheckResult> v) {
    for (auto& r : v) out.push_back(std::move(r));
  };
  for (const auto& pi : PrimeSet::of(g.group.order()).subsets()) {
    switch (suite) {
      case Suite::Theorem1:
        append(theorem1(an, pi));
        for (std::size_t i = 0; i < an.normals().size(); ++i) {
          out.push_back(corollary1(an, an.normals()[i], an.instance(pi, i), pi));
        }
        break;
      case Suite::Lemmas:
        for (auto id : all_lemmas()) append(lemma(id, an, pi));
        break;
      case Suite::Conjecture:
        append(conjecture(an, pi));
        break;
      default:
        break;
    }
  }
  return out;
}

std::vector<CheckResult> run_jobs(Suite suite, const std::vector<std::string>& jobs, unsigned threads,
                                  const VerifyOptions& options, const JobCache* cache) {
  std::vector<std::vector<CheckResult>> per_job(jobs.size());
  std::atomic<std::size_t> next{0};
  std::mutex store_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      if (cache && cache->load) {
        if (auto hit = cache->load(jobs[i])) {
          per_job[i] = std::move(*hit);
          continue;
        }
      }
      try {
        per_job[i] = run_job(suite, jobs[i], options);
      } catch (const std::exception& e) {
        per_job[i] = {make(to_string(suite), jobs[i], CheckVerdict::Indeterminate, {std::string("error: ") + e.what()})};
        continue;
      }
      if (cache && cache->store) {
        std::lock_guard lock(store_mutex);
        cache->store(jobs[i], per_job[i]);
      }
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(jobs.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::vector<CheckResult> out;
  for (auto& v : per_job)
    for (auto& r : v) out.push_back(std::move(r));
  sort_results(out);
  return out;
}

}  // namespace hallpi
