#include "hallpi/hall.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "hallpi/error.hpp"

namespace hallpi {

// ---------------------------------------------------------------- PrimeSet

PrimeSet::PrimeSet(std::vector<std::uint64_t> primes) : primes_(std::move(primes)) {
  for (auto p : primes_) {
    if (!is_prime(p)) throw RangeError(std::to_string(p) + " is not prime");
  }
  std::sort(primes_.begin(), primes_.end());
  primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
}

PrimeSet PrimeSet::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (!s.empty() && s.front() == '{') {
    if (s.back() != '}') throw ParseError("unbalanced '{' in prime set", s.size());
    s = s.substr(1, s.size() - 2);
  }
  std::vector<std::uint64_t> primes;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t end = s.find(',', pos);
    if (end == std::string::npos) end = s.size();
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + end, v);
    if (end == pos || ec != std::errc() || ptr != s.data() + end) {
      throw ParseError("expected a prime", pos);
    }
    if (!is_prime(v)) throw RangeError(std::to_string(v) + " is not prime");
    primes.push_back(v);
    pos = end + 1;
    if (end + 1 == s.size()) throw ParseError("trailing ','", end);
  }
  return PrimeSet(std::move(primes));
}

PrimeSet PrimeSet::of(const Order& n) { return PrimeSet(prime_divisors(n)); }

bool PrimeSet::contains(std::uint64_t p) const { return std::binary_search(primes_.begin(), primes_.end(), p); }

bool PrimeSet::includes(const PrimeSet& other) const {
  return std::includes(primes_.begin(), primes_.end(), other.primes_.begin(), other.primes_.end());
}

PrimeSet PrimeSet::intersect(const PrimeSet& other) const {
  PrimeSet out;
  std::set_intersection(primes_.begin(), primes_.end(), other.primes_.begin(), other.primes_.end(),
                        std::back_inserter(out.primes_));
  return out;
}

std::string PrimeSet::to_string() const { return "{" + to_list() + "}"; }

std::string PrimeSet::to_list() const {
  std::string out;
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(primes_[i]);
  }
  return out;
}

std::vector<PrimeSet> PrimeSet::subsets() const {
  std::vector<PrimeSet> out;
  std::size_t n = primes_.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    PrimeSet s;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) s.primes_.push_back(primes_[i]);
    }
    out.push_back(std::move(s));
  }
  return out;
}

Order pi_part(const Order& n, const PrimeSet& pi) {
  if (n < 1) throw RangeError("pi_part: n must be positive");
  Order part = 1, rest = n;
  for (auto p : pi.primes()) {
    while (rest % p == 0) {
      rest /= p;
      part *= p;
    }
  }
  return part;
}

std::uint64_t pi_part(std::uint64_t n, const PrimeSet& pi) {
  if (n < 1) throw RangeError("pi_part: n must be positive");
  std::uint64_t part = 1;
  for (auto p : pi.primes()) {
    while (n % p == 0) {
      n /= p;
      part *= p;
    }
  }
  return part;
}

bool is_pi_number(const Order& n, const PrimeSet& pi) { return pi_part(n, pi) == n; }

bool is_hall(const Group& g, const Group& h, const PrimeSet& pi) { return h.order() == pi_part(g.order(), pi); }

bool is_hall_by_index(const Group& g, const Group& h, const PrimeSet& pi) {
  if (g.order() % h.order() != 0) return false;
  return is_pi_number(h.order(), pi) && pi_part(g.order() / h.order(), pi) == 1;
}

std::string to_string(Provenance p) { return p == Provenance::Exhaustive ? "exhaustive" : "catalog-certified"; }

std::string to_string(Mode m) {
  switch (m) {
    case Mode::Exhaustive:
      return "exhaustive";
    case Mode::CatalogCertified:
      return "catalog";
    case Mode::Auto:
      return "auto";
  }
  return "?";
}

Mode parse_mode(std::string_view text) {
  std::string s;
  for (char c : text) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (s == "exhaustive") return Mode::Exhaustive;
  if (s == "catalog" || s == "catalogcertified" || s == "catalog-certified") return Mode::CatalogCertified;
  if (s == "auto") return Mode::Auto;
  throw ParseError("unknown mode '" + std::string(text) + "'", 0);
}

// ------------------------------------------------------- pi-subgroup search

PiSubgroupLattice::PiSubgroupLattice(const Group& g, const PrimeSet& pi, const HallOptions& options) : pi_(pi) {
  if (g.order() > options.exhaustive_threshold) {
    throw CapExceeded("exhaustive search: |G| = " + g.order().str() + " above threshold " +
                      std::to_string(options.exhaustive_threshold));
  }
  table_ = std::make_shared<const ElementTable>(g, options.exhaustive_threshold);
  const ElementTable& t = *table_;
  index_ = std::make_shared<SubgroupClassIndex>(t);
  hall_order_ = pi_part(to_u64(g.order()), pi);

  std::size_t n = t.size();
  std::vector<bool> admissible(n);
  for (Index x = 0; x < n; ++x) admissible[x] = pi_part(t.order_of(x), pi) == t.order_of(x);

  index_->add(trivial_subgroup(t));
  boost::dynamic_bitset<> marked(n);
  std::vector<Index> stack;
  for (std::size_t c = 0; c < index_->class_count(); ++c) {
    maximal_.push_back(true);
    // Copy: add() below may reallocate the representative storage.
    ElementSubgroup u = index_->representative(c);
    if (u.size() == hall_order_) continue;
    marked = u.mask;
    for (Index x = 0; x < n; ++x) {
      if (marked.test(x) || !admissible[x]) continue;
      // <U, y> = <U, x> for y in U x^k U with k prime to |x|: mark them all.
      std::uint64_t ord = t.order_of(x);
      Index xk = x;
      for (std::uint64_t k = 1; k < ord; ++k, xk = t.mul(xk, x)) {
        if (std::gcd(k, ord) != 1 || marked.test(xk)) continue;
        stack.push_back(xk);
        while (!stack.empty()) {
          Index y = stack.back();
          stack.pop_back();
          if (marked.test(y)) continue;
          for (Index e : u.elements) marked.set(t.mul(e, y));
          for (Index s : u.generators) {
            Index ys = t.mul(y, s);
            if (!marked.test(ys)) stack.push_back(ys);
          }
        }
      }
      auto v = extend(t, u, x, hall_order_, &admissible);
      if (!v) continue;
      maximal_[c] = false;
      if (!index_->find(*v)) index_->add(std::move(*v));
    }
  }
}

std::vector<std::size_t> PiSubgroupLattice::maximal_classes() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < class_count(); ++c) {
    if (maximal_[c]) out.push_back(c);
  }
  return out;
}

std::vector<std::size_t> PiSubgroupLattice::hall_classes() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < class_count(); ++c) {
    if (hall(c)) out.push_back(c);
  }
  return out;
}

namespace {

std::string generator_list(const Group& h) {
  std::string out;
  for (const auto& x : h.generators()) {
    if (!out.empty()) out += " ";
    out += x.to_cycles();
  }
  return out.empty() ? "()" : out;
}

SubgroupClass lattice_class(const PiSubgroupLattice& lattice, std::size_t c, const std::string& tag) {
  SubgroupClass cls;
  cls.representative = Subgroup{to_group(lattice.table(), lattice.representative(c)), tag};
  cls.class_size = lattice.class_size(c);
  cls.provenance = Provenance::Exhaustive;
  cls.certificate = "exhaustive class index (class " + std::to_string(c) + ")";
  return cls;
}

}  // namespace

std::vector<SubgroupClass> max_pi_subgroups(const Group& g, const PrimeSet& pi, const HallOptions& options) {
  PiSubgroupLattice lattice(g, pi, options);
  std::vector<SubgroupClass> out;
  for (auto c : lattice.maximal_classes()) out.push_back(lattice_class(lattice, c, "max_pi"));
  return out;
}

// ------------------------------------------------------------ Hall classes

namespace {

HallResult trivial_cases(const Group& g, const PrimeSet& pi, bool& handled) {
  HallResult r;
  r.pi = pi;
  r.effective_pi = pi.intersect(PrimeSet::of(g.order()));
  r.hall_order = pi_part(g.order(), pi);
  handled = false;
  if (r.effective_pi.empty() || r.hall_order == g.order()) {
    handled = true;
    SubgroupClass cls;
    if (r.effective_pi.empty()) {
      cls.representative = Subgroup{Group::build({}, g.degree()), "trivial"};
      cls.class_size = 1;
      cls.certificate = "pi avoids |G|: the trivial subgroup";
    } else {
      cls.representative = Subgroup{g, "whole"};
      cls.class_size = 1;
      cls.certificate = "G is a pi-group";
    }
    r.classes.push_back(std::move(cls));
    r.maximal_data = true;
  }
  return r;
}

HallResult exhaustive_hall(const Group& g, const PrimeSet& pi, const HallOptions& options) {
  bool handled = false;
  HallResult r = trivial_cases(g, pi, handled);
  if (handled) return r;
  auto lattice = std::make_shared<const PiSubgroupLattice>(g, r.effective_pi, options);
  for (auto c : lattice->maximal_classes()) {
    if (lattice->hall(c)) {
      r.classes.push_back(lattice_class(*lattice, c, "hall"));
      r.lattice_ids.push_back(c);
    } else {
      r.non_hall_maximal.push_back(lattice_class(*lattice, c, "max_pi"));
    }
  }
  r.maximal_data = true;
  r.lattice = std::move(lattice);
  return r;
}

bool is_inverse_transpose_over_gl(const BuiltGroup& g) {
  return g.spec.family == Family::Semidirect && g.spec.automorphism == "TransposeInverse" && g.normal &&
         g.matrix && g.matrix->family == Family::GL && !g.matrix->domain->projective();
}

bool is_gl(const BuiltGroup& g) {
  return g.spec.family == Family::GL && g.matrix && g.matrix->family == Family::GL && !g.matrix->domain->projective();
}

std::vector<std::vector<std::uint32_t>> compositions(std::uint32_t n) {
  std::vector<std::vector<std::uint32_t>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
    std::vector<std::uint32_t> dims;
    std::uint32_t run = 1;
    for (std::uint32_t i = 0; i + 1 < n; ++i) {
      if (mask >> i & 1) {
        dims.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    dims.push_back(run);
    out.push_back(std::move(dims));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Antidiagonal permutation matrix: conjugation by it reverses a flag.
Matrix reversal(std::uint32_t n) {
  Matrix m{n, std::vector<FiniteField::Elem>(n * n, 0)};
  for (std::uint32_t i = 0; i < n; ++i) m.at(i, n - 1 - i) = 1;
  return m;
}

void certify_distinct(const Group& parent, std::vector<SubgroupClass>& classes, const HallOptions& options,
                      std::vector<std::string>& notes) {
  std::vector<OrbitSignature> sigs;
  for (const auto& c : classes) sigs.push_back(orbit_signature(parent, c.representative.group));
  for (std::size_t i = 0; i < classes.size(); ++i) {
    std::string cert = "orbit signature " + format_signature(sigs[i]);
    for (std::size_t j = 0; j < classes.size(); ++j) {
      if (i == j || sigs[i] != sigs[j]) continue;
      auto r = are_conjugate(parent, classes[i].representative.group, classes[j].representative.group,
                             options.subgroup);
      if (r.verdict == Verdict::Yes) throw Error("catalog candidates " + classes[i].representative.tag + " and " +
                                                 classes[j].representative.tag + " are conjugate");
      if (r.verdict == Verdict::Indeterminate) {
        notes.push_back("non-conjugacy of " + classes[i].representative.tag + " and " +
                        classes[j].representative.tag + " undecided: " + r.certificate);
      }
      cert += "; vs " + classes[j].representative.tag + ": " + r.certificate;
    }
    classes[i].certificate = cert;
  }
}

Order normalizer_index(const Group& parent, const Group& h, const HallOptions& options, std::string& note) {
  try {
    auto n = normalizer(parent, h, options.subgroup);
    return parent.order() / n.order();
  } catch (const SearchBudgetExceeded&) {
    note = "normalizer search hit the node cap; class size assumes self-normalizing";
    return parent.order() / h.order();
  }
}

HallResult catalog_hall(const BuiltGroup& g, const PrimeSet& pi, const HallOptions& options) {
  bool handled = false;
  HallResult r = trivial_cases(g.group, pi, handled);
  if (handled) return r;
  if (!catalog_applies(g, pi)) {
    throw PreconditionError("no catalog family registered for " + g.spec.canonical() + " with pi = " +
                            pi.to_string());
  }
  r.provenance = Provenance::CatalogCertified;
  r.assumptions.push_back(std::string(kParabolicAssumption));
  const MatrixGroupInfo& info = *g.matrix;
  const bool extended = is_inverse_transpose_over_gl(g);
  const Group& gl = extended ? *g.normal : g.group;
  Order gl_hall = pi_part(gl.order(), r.effective_pi);

  std::vector<FlagSpec> flags;
  for (auto& dims : compositions(info.n)) {
    FlagSpec f{dims};
    if (flag_stabilizer_order(f, info.q) == gl_hall) flags.push_back(std::move(f));
  }
  auto make_class = [&](Group h, std::string tag) {
    SubgroupClass c;
    c.representative = Subgroup{std::move(h), std::move(tag)};
    c.provenance = Provenance::CatalogCertified;
    c.assumptions = r.assumptions;
    return c;
  };
  std::vector<std::string> notes;
  if (!extended) {
    for (const auto& f : flags) r.classes.push_back(make_class(flag_stabilizer(g, f), f.label()));
  } else {
    const Permutation& s = *g.adjoined;
    bool two_in_pi = r.effective_pi.contains(2);
    std::set<std::vector<std::uint32_t>> seen;
    for (const auto& f : flags) {
      std::vector<std::uint32_t> rev(f.dims.rbegin(), f.dims.rend());
      bool palindromic = rev == f.dims;
      if (two_in_pi) {
        if (!palindromic) continue;
        Group h = flag_stabilizer(g, f);
        Permutation st = s * info.domain->action(reversal(info.n));
        if (!normalizes(h, st)) throw Error(f.label() + ": swap times reversal does not normalize");
        auto gens = h.generators();
        gens.push_back(st);
        Group hh = Group::build(std::move(gens), g.group.degree());
        if (hh.order() != r.hall_order) throw Error(f.label() + ": extended stabilizer is not Hall");
        r.classes.push_back(make_class(std::move(hh), "N(" + f.label() + ")"));
      } else {
        if (seen.count(rev)) continue;
        seen.insert(f.dims);
        r.classes.push_back(make_class(flag_stabilizer(g, f), f.label()));
      }
    }
  }
  certify_distinct(g.group, r.classes, options, notes);
  for (auto& c : r.classes) {
    std::string note;
    c.class_size = normalizer_index(g.group, c.representative.group, options, note);
    if (!note.empty()) notes.push_back(c.representative.tag + ": " + note);
  }
  for (auto& n : notes) r.assumptions.push_back("note: " + n);
  return r;
}

}  // namespace

bool catalog_applies(const BuiltGroup& g, const PrimeSet& pi) {
  if (!is_gl(g) && !is_inverse_transpose_over_gl(g)) return false;
  return pi.contains(g.matrix->domain->field().characteristic());
}

HallResult hall_classes(const BuiltGroup& g, const PrimeSet& pi, Mode mode, const HallOptions& options) {
  switch (mode) {
    case Mode::Exhaustive:
      return exhaustive_hall(g.group, pi, options);
    case Mode::CatalogCertified:
      return catalog_hall(g, pi, options);
    case Mode::Auto:
      break;
  }
  if (g.group.order() <= options.exhaustive_threshold) return exhaustive_hall(g.group, pi, options);
  bool handled = false;
  HallResult r = trivial_cases(g.group, pi, handled);
  if (handled) return r;
  if (catalog_applies(g, pi)) return catalog_hall(g, pi, options);
  throw CapExceeded("|G| = " + g.group.order().str() + " above the exhaustive threshold and no catalog entry for " +
                    g.spec.canonical());
}

HallResult hall_classes(const Group& g, const PrimeSet& pi, const HallOptions& options) {
  return exhaustive_hall(g, pi, options);
}

// --------------------------------------------------------- E / C / D

std::optional<std::vector<Group>> pi_separable_series(const Group& g, const PrimeSet& pi,
                                                      const HallOptions& options) {
  auto normals = normal_subgroups(g, options.subgroup);
  std::size_t m = normals.size();
  auto good = [&](const Order& index) { return pi_part(index, pi) == index || pi_part(index, pi) == 1; };
  // normals is sorted by order, trivial first and G last.
  std::vector<std::optional<std::size_t>> prev(m);
  std::vector<bool> reached(m, false);
  reached[0] = true;
  for (std::size_t j = 1; j < m; ++j) {
    for (std::size_t i = 0; i < j && !reached[j]; ++i) {
      if (!reached[i]) continue;
      const Group& lo = normals[i].group;
      const Group& hi = normals[j].group;
      if (hi.order() <= lo.order() || hi.order() % lo.order() != 0) continue;
      if (!hi.contains_group(lo)) continue;
      if (!good(hi.order() / lo.order())) continue;
      reached[j] = true;
      prev[j] = i;
    }
  }
  if (!reached[m - 1]) return std::nullopt;
  std::vector<Group> chain;
  for (std::optional<std::size_t> k = m - 1; k; k = prev[*k]) chain.push_back(normals[*k].group);
  std::reverse(chain.begin(), chain.end());
  return chain;
}

namespace {

PropertyReport report_from(const Group& g, HallResult hall, const HallOptions& options) {
  PropertyReport rep;
  rep.pi = hall.pi;
  rep.effective_pi = hall.effective_pi;
  rep.group_order = g.order();
  rep.hall_order = hall.hall_order;
  rep.provenance = hall.provenance;
  rep.assumptions = hall.assumptions;
  std::size_t k = hall.classes.size();
  rep.k = k;
  rep.e = k >= 1 ? Verdict::Yes : Verdict::No;
  rep.c = k == 1 ? Verdict::Yes : Verdict::No;
  if (k == 0) {
    rep.witnesses.push_back("no subgroup of order " + hall.hall_order.str());
  } else if (k == 1) {
    rep.witnesses.push_back("single Hall class, size " + hall.classes[0].class_size.str() + ", rep " +
                            hall.classes[0].representative.tag + " = <" +
                            generator_list(hall.classes[0].representative.group) + ">");
  } else {
    for (const auto& c : hall.classes) {
      rep.witnesses.push_back("Hall class " + c.representative.tag + " (" + c.certificate + ")");
    }
  }
  if (hall.maximal_data) {
    if (rep.c != Verdict::Yes) {
      rep.d = Verdict::No;
    } else if (hall.non_hall_maximal.empty()) {
      rep.d = Verdict::Yes;
    } else {
      rep.d = Verdict::No;
      const auto& w = hall.non_hall_maximal.front();
      rep.witnesses.push_back("maximal pi-subgroup of order " + w.representative.order().str() +
                              " not Hall: <" + generator_list(w.representative.group) + ">");
    }
  } else if (rep.c != Verdict::Yes) {
    rep.d = Verdict::No;
  } else {
    rep.d = Verdict::Indeterminate;
    rep.notes.push_back("D not decided: pi-subgroups beyond the exhaustive threshold");
  }
  (void)options;
  rep.hall = std::move(hall);
  return rep;
}

}  // namespace

PropertyReport classify_properties(const BuiltGroup& g, const PrimeSet& pi, Mode mode, const HallOptions& options) {
  try {
    return report_from(g.group, hall_classes(g, pi, mode, options), options);
  } catch (const CapExceeded& e) {
    PropertyReport rep;
    rep.pi = pi;
    rep.effective_pi = pi.intersect(PrimeSet::of(g.group.order()));
    rep.group_order = g.group.order();
    rep.hall_order = pi_part(g.group.order(), pi);
    rep.notes.push_back(e.what());
    return rep;
  } catch (const PreconditionError& e) {
    PropertyReport rep;
    rep.pi = pi;
    rep.effective_pi = pi.intersect(PrimeSet::of(g.group.order()));
    rep.group_order = g.group.order();
    rep.hall_order = pi_part(g.group.order(), pi);
    rep.notes.push_back(e.what());
    return rep;
  }
}

PropertyReport classify_properties(const Group& g, const PrimeSet& pi, const HallOptions& options) {
  BuiltGroup b;
  b.group = g;
  return classify_properties(b, pi, Mode::Exhaustive, options);
}

// ------------------------------------------------------- induced classes

std::optional<std::size_t> locate_class(const Group& a, const HallResult& classes, const Group& u,
                                        const HallOptions& options) {
  if (u.order() != classes.hall_order) return std::nullopt;
  if (classes.lattice) {
    const ElementTable& t = classes.lattice->table();
    ElementSubgroup es = from_group(t, u);
    auto hit = classes.lattice->index().find(es);
    if (!hit) return std::nullopt;
    for (std::size_t i = 0; i < classes.lattice_ids.size(); ++i) {
      if (classes.lattice_ids[i] == hit->cls) return i;
    }
    return std::nullopt;
  }
  if (classes.classes.size() == 1 && classes.classes[0].representative.group.same_elements(a)) return 0;
  if (classes.classes.size() == 1 && classes.hall_order == 1) return 0;
  for (std::size_t i = 0; i < classes.classes.size(); ++i) {
    auto r = are_conjugate(a, u, classes.classes[i].representative.group, options.subgroup);
    if (r.verdict == Verdict::Yes) return i;
    if (r.verdict == Verdict::Indeterminate) throw SearchBudgetExceeded("locate_class: " + r.certificate);
  }
  return std::nullopt;
}

InducedResult induced_classes(const BuiltGroup& g, const HallResult& g_classes, const BuiltGroup& a,
                              const PrimeSet& pi, Mode mode, const HallOptions& options) {
  if (!g.group.contains_group(a.group) || !is_normal(g.group, a.group)) {
    throw PreconditionError("induced_classes: A is not a normal subgroup of G");
  }
  InducedResult out;
  out.a_classes = hall_classes(a, pi, mode, options);
  out.assumptions = out.a_classes.assumptions;
  for (const auto& s : g_classes.assumptions) {
    if (std::find(out.assumptions.begin(), out.assumptions.end(), s) == out.assumptions.end()) {
      out.assumptions.push_back(s);
    }
  }
  std::vector<bool> seen(out.a_classes.classes.size(), false);
  std::vector<std::size_t> queue;
  for (const auto& h : g_classes.classes) {
    Group u = intersection(h.representative.group, a.group, options.subgroup);
    auto c = locate_class(a.group, out.a_classes, u, options);
    if (!c) throw Error("induced_classes: H meet A is not a Hall subgroup of A");
    if (!seen[*c]) {
      seen[*c] = true;
      queue.push_back(*c);
    }
  }
  // Close under conjugation by G.
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Group& rep = out.a_classes.classes[queue[i]].representative.group;
    for (const auto& x : g.group.generators()) {
      if (a.group.contains(x)) continue;
      std::vector<Permutation> gens;
      for (const auto& y : rep.generators()) gens.push_back(conjugate(y, x));
      Group img = Group::build(std::move(gens), rep.degree());
      auto c = locate_class(a.group, out.a_classes, img, options);
      if (!c) throw Error("induced_classes: conjugate of a Hall subgroup not located");
      if (!seen[*c]) {
        seen[*c] = true;
        queue.push_back(*c);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  out.induced = std::move(queue);
  if (out.induced.size() > out.a_classes.classes.size()) throw Error("induced_classes: k^G(A) > k(A)");
  return out;
}

// -------------------------------------------------- products, invariance

SubgroupClass class_product(const std::vector<std::pair<Group, SubgroupClass>>& factors, const Group& a,
                            const HallOptions& options) {
  if (factors.empty()) throw PreconditionError("class_product: no factors");
  Order product = 1;
  std::vector<Permutation> all;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const Group& ai = factors[i].first;
    if (!a.contains_group(ai)) throw PreconditionError("class_product: factor outside A");
    product *= ai.order();
    for (std::size_t j = 0; j < i; ++j) {
      for (const auto& x : ai.generators())
        for (const auto& y : factors[j].first.generators()) {
          if (x * y != y * x) throw PreconditionError("class_product: factors do not commute");
        }
    }
    all.insert(all.end(), ai.generators().begin(), ai.generators().end());
  }
  if (product != a.order() || Group::build(all, a.degree()).order() != a.order()) {
    throw PreconditionError("class_product: A is not the direct product of the factors");
  }
  SubgroupClass out;
  std::vector<Permutation> gens;
  Order rep_order = 1;
  out.class_size = 1;
  std::string tag;
  for (const auto& [ai, k] : factors) {
    const Group& r = k.representative.group;
    if (!ai.contains_group(r)) throw PreconditionError("class_product: representative outside its factor");
    gens.insert(gens.end(), r.generators().begin(), r.generators().end());
    rep_order *= r.order();
    out.class_size *= k.class_size;
    if (k.provenance == Provenance::CatalogCertified) out.provenance = Provenance::CatalogCertified;
    for (const auto& s : k.assumptions) out.assumptions.push_back(s);
    tag += (tag.empty() ? "" : "x") + k.representative.tag;
  }
  Group rep = Group::build(std::move(gens), a.degree());
  if (rep.order() != rep_order) throw Error("class_product: product order mismatch");
  out.representative = Subgroup{std::move(rep), tag};
  out.certificate = "product of " + std::to_string(factors.size()) + " factor classes";
  (void)options;
  return out;
}

Verdict is_class_invariant(const Group& h, const Group& rep, const Group& a, const HallOptions& options) {
  for (const auto& x : h.generators()) {
    if (!normalizes(a, x)) throw PreconditionError("is_class_invariant: H does not normalize A");
  }
  Verdict v = Verdict::Yes;
  for (const auto& x : h.generators()) {
    std::vector<Permutation> gens;
    for (const auto& y : rep.generators()) gens.push_back(conjugate(y, x));
    Group img = Group::build(std::move(gens), rep.degree());
    auto r = are_conjugate(a, img, rep, options.subgroup);
    if (r.verdict == Verdict::No) return Verdict::No;
    if (r.verdict == Verdict::Indeterminate) v = Verdict::Indeterminate;
  }
  return v;
}

}  // namespace hallpi
