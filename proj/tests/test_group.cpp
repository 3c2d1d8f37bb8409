#include <random>
#include <sstream>

#include "doctest.h"
#include "hallpi/error.hpp"
#include "hallpi/group.hpp"
#include "oracle.hpp"

using namespace hallpi;

namespace {

Group from_cycles(std::vector<std::string> cycles, std::size_t degree) {
  std::vector<Permutation> gens;
  for (const auto& c : cycles) gens.push_back(perm_from_cycles(c, degree));
  return build_group(std::move(gens), degree);
}

Order orbit_product(const Group& g) {
  Order n = 1;
  for (const auto& lv : g.levels()) n *= lv.orbit.size();
  return n;
}

}  // namespace

TEST_CASE("orders of small groups") {
  CHECK(from_cycles({"(1 2)", "(1 2 3 4 5)"}, 5).order() == 120);
  CHECK(from_cycles({}, 4).order() == 1);
  CHECK(from_cycles({"(1 2 3 4)"}, 4).order() == 4);
  CHECK(from_cycles({"(1 2 3)", "(1 2)(3 4)"}, 4).order() == 12);
  CHECK(from_cycles({"(1 2 3 4 5 6 7 8 9 10 11)", "(3 7 11 8)(4 10 5 6)"}, 11).order() == 7920);
}

TEST_CASE("order agrees with naive closure") {
  auto g = from_cycles({"(1 2 3)", "(3 4 5)"}, 5);
  auto all = oracle::closure(g.generators(), 5);
  CHECK(all.size() == 60);
  CHECK(g.order() == 60);
}

TEST_CASE("membership") {
  auto s4 = from_cycles({"(1 2)", "(1 2 3 4)"}, 4);
  auto a4 = from_cycles({"(1 2 3)", "(2 3 4)"}, 4);
  CHECK(s4.contains(perm_from_cycles("(1 2 3 4)", 4)));
  CHECK_FALSE(a4.contains(perm_from_cycles("(1 2)", 4)));
  CHECK(from_cycles({}, 3).contains(Permutation::identity(3)));
  CHECK_THROWS_AS(s4.contains(Permutation::identity(5)), DegreeMismatch);
  CHECK_THROWS_AS(build_group({perm_from_cycles("(1 2)", 2), perm_from_cycles("(1 2)", 3)}), DegreeMismatch);
}

TEST_CASE("element enumeration") {
  auto s3 = from_cycles({"(1 2)", "(1 2 3)"}, 3);
  CHECK(s3.elements(10).size() == 6);
  auto triv = from_cycles({}, 3);
  auto e = triv.elements(1);
  REQUIRE(e.size() == 1);
  CHECK(e[0].is_identity());
  auto a5 = from_cycles({"(1 2 3)", "(3 4 5)"}, 5);
  CHECK_THROWS_AS(a5.elements(30), CapExceeded);
}

TEST_CASE("random groups: chain certificate and closure oracle") {
  std::mt19937_64 rng(7);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 2 + rng() % 6;
    std::size_t k = rng() % 3;
    std::vector<Permutation> gens;
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<Point> v(n);
      for (std::size_t j = 0; j < n; ++j) v[j] = static_cast<Point>(j);
      std::shuffle(v.begin(), v.end(), rng);
      gens.push_back(Permutation(v));
    }
    Group g = build_group(gens, n);
    CHECK(g.order() == orbit_product(g));
    for (const auto& x : gens) CHECK(g.contains(x));
    auto all = oracle::closure(gens, n);
    CHECK(g.order() == all.size());
    if (all.size() <= 200) {
      ++checked;
      // Membership agrees with closure on every permutation of degree n.
      std::vector<Point> v(n);
      for (std::size_t j = 0; j < n; ++j) v[j] = static_cast<Point>(j);
      do {
        Permutation p(v);
        REQUIRE(g.contains(p) == (all.count(oracle::images_of(p)) == 1));
      } while (std::next_permutation(v.begin(), v.end()) && n <= 5);
      auto elems = g.elements(200);
      std::set<oracle::Images> listed;
      for (const auto& x : elems) listed.insert(oracle::images_of(x));
      CHECK(listed == all);
      CHECK(elems.size() == all.size());
    }
  }
  CHECK(checked > 20);
}

TEST_CASE("construction is deterministic") {
  auto a = from_cycles({"(1 2 3 4 5 6 7)", "(2 3 5)(4 7 6)", "(1 2)(3 6)"}, 7);
  auto b = from_cycles({"(1 2 3 4 5 6 7)", "(2 3 5)(4 7 6)", "(1 2)(3 6)"}, 7);
  CHECK(a.base() == b.base());
  CHECK(a.elements(10000) == b.elements(10000));
}

TEST_CASE("base prefix and stabilizers") {
  auto s5 = from_cycles({"(1 2)", "(1 2 3 4 5)"}, 5);
  const Point prefix[] = {4, 2};
  auto t = s5.with_base_prefix(prefix);
  CHECK(t.base()[0] == 4);
  CHECK(t.base()[1] == 2);
  CHECK(t.order() == 120);
  CHECK(t.stabilizer(1).order() == 24);
  CHECK(t.stabilizer(2).order() == 6);
  CHECK(s5.same_elements(t));
}

TEST_CASE("orbits") {
  auto g = from_cycles({"(1 2)(4 5)", "(2 3)"}, 6);
  auto o = g.orbits();
  REQUIRE(o.size() == 3);
  CHECK(o[0] == std::vector<Point>{0, 1, 2});
  CHECK(o[1] == std::vector<Point>{3, 4});
  CHECK(o[2] == std::vector<Point>{5});
}

TEST_CASE("generator files") {
  std::istringstream in("# Mathieu group\ndegree 11\n(1,2,3,4,5,6,7,8,9,10,11)\n\n(3,7,11,8)(4,10,5,6)\n");
  auto f = parse_generator_file(in);
  CHECK(f.degree == 11);
  CHECK(f.generators.size() == 2);
  auto g = build_group(f.generators, f.degree);
  CHECK(g.order() == 7920);
  std::ostringstream out;
  write_generator_file(out, g);
  std::istringstream back(out.str());
  auto f2 = parse_generator_file(back);
  CHECK(build_group(f2.generators, f2.degree).same_elements(g));

  std::istringstream bad1("(1 2)\n");
  CHECK_THROWS_AS(parse_generator_file(bad1), ParseError);
  std::istringstream bad2("degree 3\n(1 5)\n");
  CHECK_THROWS(parse_generator_file(bad2));
}
