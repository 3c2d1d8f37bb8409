#include <map>
#include <set>

#include "doctest.h"
#include "hallpi/error.hpp"
#include "hallpi/hall.hpp"
#include "lattice_oracle.hpp"

using namespace hallpi;

namespace {

using oracle::LatticeOracle;

std::vector<std::tuple<std::size_t, std::size_t, bool>> lattice_classes(const PiSubgroupLattice& l) {
  std::vector<std::tuple<std::size_t, std::size_t, bool>> out;
  for (std::size_t c = 0; c < l.class_count(); ++c) {
    out.emplace_back(l.representative(c).size(), l.class_size(c), l.maximal(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

HallOptions raised(std::uint64_t threshold) {
  HallOptions o;
  o.exhaustive_threshold = threshold;
  o.subgroup.enumeration_cap = threshold;
  return o;
}

}  // namespace

TEST_CASE("prime sets") {
  auto pi = PrimeSet::parse("{3, 2,3}");
  CHECK(pi.to_string() == "{2,3}");
  CHECK(pi.to_list() == "2,3");
  CHECK(PrimeSet::parse("").empty());
  CHECK(PrimeSet::parse("{}").empty());
  CHECK_THROWS_AS(PrimeSet::parse("2,4"), RangeError);
  CHECK_THROWS_AS(PrimeSet::parse("2,,3"), ParseError);
  CHECK_THROWS_AS(PrimeSet::parse("2,x"), ParseError);
  CHECK_THROWS_AS(PrimeSet::parse("{2,3"), ParseError);
  CHECK(PrimeSet::of(Order(360)).to_list() == "2,3,5");
  CHECK(PrimeSet::of(Order(1)).empty());
  CHECK(pi.subsets().size() == 4);
  CHECK(PrimeSet::parse("2,3,5").includes(pi));
  CHECK(pi.intersect(PrimeSet::parse("3,7")).to_list() == "3");
}

TEST_CASE("pi parts") {
  auto pi = PrimeSet::parse("2,3");
  CHECK(pi_part(std::uint64_t{360}, pi) == 72);
  CHECK(pi_part(Order(9999360), pi) == 9216);
  CHECK(pi_part(std::uint64_t{35}, pi) == 1);
  CHECK(pi_part(std::uint64_t{7}, PrimeSet()) == 1);
  CHECK(is_pi_number(Order(72), pi));
  CHECK_FALSE(is_pi_number(Order(10), pi));
  CHECK_THROWS_AS(pi_part(std::uint64_t{0}, pi), RangeError);
  CHECK(parse_mode("Catalog") == Mode::CatalogCertified);
  CHECK_THROWS_AS(parse_mode("fast"), ParseError);
}

TEST_CASE("pi-subgroup classes agree with a naive subgroup lattice") {
  const char* specs[] = {"Sym(4)", "Alt(5)", "Dihedral(6)", "GL(2,3)", "Direct(Sym(3),Cyclic(3))",
                         "PSL(2,7)", "Sym(5)", "Direct(Alt(4),Cyclic(2))"};
  for (const char* spec : specs) {
    auto g = build(spec);
    LatticeOracle oracle(g.group);
    for (const auto& pi : PrimeSet::of(g.group.order()).subsets()) {
      CAPTURE(spec);
      CAPTURE(pi.to_string());
      PiSubgroupLattice lattice(g.group, pi);
      CHECK(lattice_classes(lattice) == oracle.pi_classes(pi));
      // Hall classes are exactly the classes of order equal to the pi-part.
      std::size_t hall_order = pi_part(to_u64(g.group.order()), pi);
      std::size_t expected = 0;
      for (auto& [order, size, maximal] : oracle.pi_classes(pi)) expected += order == hall_order;
      CHECK(hall_classes(g.group, pi).classes.size() == expected);
    }
  }
}

TEST_CASE("maximal pi-subgroups of Alt(5)") {
  auto a5 = build("Alt(5)");
  auto maxes = max_pi_subgroups(a5.group, PrimeSet::parse("2,3"));
  std::multiset<std::pair<Order, Order>> got;
  for (const auto& m : maxes) got.insert({m.representative.order(), m.class_size});
  CHECK(got == std::multiset<std::pair<Order, Order>>{{6, 10}, {12, 5}});

  auto r = classify_properties(a5, PrimeSet::parse("2,3"));
  CHECK(r.e == Verdict::Yes);
  CHECK(r.c == Verdict::Yes);
  CHECK(r.d == Verdict::No);
  CHECK(r.k == 1u);

  auto none = classify_properties(a5, PrimeSet::parse("3,5"));
  CHECK(none.e == Verdict::No);
  CHECK(none.c == Verdict::No);
  CHECK(none.d == Verdict::No);
  CHECK(none.k == 0u);
}

TEST_CASE("trivial and full pi") {
  auto a5 = build("Alt(5)");
  auto empty = classify_properties(a5, PrimeSet::parse("7"));
  CHECK(empty.effective_pi.empty());
  CHECK(empty.k == 1u);
  CHECK(empty.e == Verdict::Yes);
  CHECK(empty.d == Verdict::Yes);
  auto full = hall_classes(a5, PrimeSet::parse("2,3,5,7"), Mode::Exhaustive);
  REQUIRE(full.classes.size() == 1);
  CHECK(full.classes[0].representative.order() == 60);
}

TEST_CASE("single primes and solvable groups satisfy E, C and D") {
  const std::pair<const char*, bool> specs[] = {{"Sym(4)", true},  {"GL(2,3)", true},   {"Dihedral(10)", true},
                                                 {"Direct(Sym(3),Sym(3))", true}, {"Alt(5)", false}, {"PSL(2,7)", false}};
  for (const auto& [spec, solvable] : specs) {
    auto g = build(spec);
    auto primes = PrimeSet::of(g.group.order());
    for (const auto& pi : primes.subsets()) {
      if (pi.primes().size() != 1 && !solvable) continue;
      CAPTURE(spec);
      CAPTURE(pi.to_string());
      auto r = classify_properties(g, pi);
      CHECK(r.e == Verdict::Yes);
      CHECK(r.c == Verdict::Yes);
      CHECK(r.d == Verdict::Yes);
    }
  }
}

TEST_CASE("pi-separable series") {
  auto s4 = build("Sym(4)");
  auto series = pi_separable_series(s4.group, PrimeSet::parse("2"));
  REQUIRE(series);
  CHECK(series->front().order() == 1);
  CHECK(series->back().order() == 24);
  CHECK_FALSE(pi_separable_series(build("Alt(5)").group, PrimeSet::parse("2")));
  CHECK_FALSE(pi_separable_series(build("Sym(5)").group, PrimeSet::parse("2,3")));
  CHECK(pi_separable_series(build("Sym(5)").group, PrimeSet::parse("2,3,5")));
}

TEST_CASE("GL(3,2) has two classes of {2,3}-Hall subgroups") {
  auto g = build("GL(3,2)");
  auto pi = PrimeSet::parse("2,3");
  auto ex = hall_classes(g, pi, Mode::Exhaustive);
  REQUIRE(ex.classes.size() == 2);
  for (const auto& c : ex.classes) {
    CHECK(c.representative.order() == 24);
    CHECK(c.class_size == 7);
  }
  auto cat = hall_classes(g, pi, Mode::CatalogCertified);
  REQUIRE(cat.classes.size() == 2);
  CHECK(cat.provenance == Provenance::CatalogCertified);
  CHECK(cat.assumptions.front() == kParabolicAssumption);
  CHECK(cat.classes[0].class_size == 7);
  // The catalog classes are the exhaustive ones.
  for (const auto& c : cat.classes) CHECK(locate_class(g.group, ex, c.representative.group).has_value());
  auto r = classify_properties(g, pi, Mode::Exhaustive);
  CHECK(r.e == Verdict::Yes);
  CHECK(r.c == Verdict::No);
  CHECK(r.d == Verdict::No);
}

TEST_CASE("inverse-transpose extension of GL(3,2) has no {2,3}-Hall subgroup") {
  auto g = build("Semidirect(GL(3,2),TransposeInverse)");
  REQUIRE(g.group.order() == 336);
  auto pi = PrimeSet::parse("2,3");
  CHECK(hall_classes(g, pi, Mode::Exhaustive).classes.empty());
  CHECK(hall_classes(g, pi, Mode::CatalogCertified).classes.empty());
  auto r = classify_properties(g, pi, Mode::Exhaustive);
  CHECK(r.e == Verdict::No);

  // Both classes of GL(3,2) are swapped by the extension.
  auto a = *normal_part(g);
  auto induced = induced_classes(g, hall_classes(g, pi, Mode::Exhaustive), a, pi, Mode::Exhaustive);
  CHECK(induced.a_classes.classes.size() == 2);
  CHECK(induced.k_pi_g_of_a() == 0);
}

TEST_CASE("catalog classes for GL(5,2) and its extension") {
  auto g = build("Semidirect(GL(5,2),TransposeInverse)");
  auto a = *normal_part(g);
  auto pi = PrimeSet::parse("2,3");
  auto ca = hall_classes(a, pi, Mode::Auto);
  CHECK(ca.provenance == Provenance::CatalogCertified);
  REQUIRE(ca.classes.size() == 3);
  std::set<std::string> tags;
  for (const auto& c : ca.classes) {
    tags.insert(c.representative.tag);
    CHECK(c.representative.order() == 9216);
    CHECK(c.class_size == 9999360 / 9216);
  }
  CHECK(tags == std::set<std::string>{"flag(1,2,2)", "flag(2,1,2)", "flag(2,2,1)"});

  auto cg = hall_classes(g, pi, Mode::Auto);
  REQUIRE(cg.classes.size() == 1);
  CHECK(cg.classes[0].representative.order() == 18432);
  CHECK(is_hall_by_index(g.group, cg.classes[0].representative.group, pi));

  auto induced = induced_classes(g, cg, a, pi);
  REQUIRE(induced.induced.size() == 1);
  CHECK(ca.classes[induced.induced[0]].representative.tag == "flag(2,1,2)");
  CHECK(induced.k_pi_g_of_a() < induced.a_classes.classes.size());

  auto r = classify_properties(g, pi);
  CHECK(r.e == Verdict::Yes);
  CHECK(r.c == Verdict::Yes);
  CHECK(r.d == Verdict::Indeterminate);

  auto s = g.adjoined.value();
  auto h = build_group({s}, g.group.degree());
  for (const auto& c : ca.classes) {
    auto v = is_class_invariant(h, c.representative.group, a.group);
    CHECK(v == (c.representative.tag == "flag(2,1,2)" ? Verdict::Yes : Verdict::No));
  }
}

TEST_CASE("catalog refuses unregistered groups") {
  auto g = build("PSL(2,7)");
  CHECK_THROWS_AS(hall_classes(g, PrimeSet::parse("2,3"), Mode::CatalogCertified), PreconditionError);
  CHECK_FALSE(catalog_applies(build("GL(3,2)"), PrimeSet::parse("3,7")));
}

TEST_CASE("class products in a direct product") {
  auto g = build("Direct(GL(3,2),GL(3,2))");
  auto pi = PrimeSet::parse("2,3");
  auto options = raised(30'000);
  auto factor = build("GL(3,2)");
  auto fc = hall_classes(factor, pi, Mode::Exhaustive);
  REQUIRE(fc.classes.size() == 2);

  auto all = hall_classes(g, pi, Mode::Exhaustive, options);
  CHECK(all.classes.size() == 4);

  // Embed each factor class into the product and multiply.
  auto embed = [&](const Group& h, std::size_t offset) {
    std::vector<Permutation> gens;
    for (const auto& x : h.generators()) {
      std::vector<Point> v(g.group.degree());
      for (std::size_t p = 0; p < v.size(); ++p) v[p] = static_cast<Point>(p);
      for (std::size_t p = 0; p < h.degree(); ++p) v[offset + p] = static_cast<Point>(offset + x[p]);
      gens.push_back(Permutation(std::move(v)));
    }
    return build_group(gens, g.group.degree());
  };
  std::size_t d = factor.group.degree();
  std::set<std::size_t> located;
  for (const auto& c1 : fc.classes) {
    for (const auto& c2 : fc.classes) {
      SubgroupClass k1 = c1, k2 = c2;
      k1.representative.group = embed(c1.representative.group, 0);
      k2.representative.group = embed(c2.representative.group, d);
      auto prod = class_product({{g.factors[0], k1}, {g.factors[1], k2}}, g.group, options);
      CHECK(prod.class_size == 49);
      CHECK(prod.representative.order() == 576);
      auto at = locate_class(g.group, all, prod.representative.group, options);
      REQUIRE(at);
      located.insert(*at);
    }
  }
  CHECK(located.size() == 4);
  CHECK_THROWS_AS(class_product({{g.factors[0], fc.classes[0]}}, g.group, options), PreconditionError);
}

TEST_CASE("thresholds") {
  auto g = build("Sym(9)");
  CHECK_THROWS_AS(hall_classes(g, PrimeSet::parse("2,3"), Mode::Exhaustive), CapExceeded);
  auto r = classify_properties(g, PrimeSet::parse("2,3"));
  CHECK(r.e == Verdict::Indeterminate);
  CHECK_FALSE(r.k.has_value());
  CHECK_FALSE(r.notes.empty());
}
