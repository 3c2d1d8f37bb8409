#include <random>

#include "doctest.h"
#include "hallpi/error.hpp"
#include "hallpi/subgroup.hpp"

using namespace hallpi;

namespace {

Group from_cycles(std::vector<std::string> cycles, std::size_t degree) {
  std::vector<Permutation> gens;
  for (const auto& c : cycles) gens.push_back(perm_from_cycles(c, degree));
  return build_group(std::move(gens), degree);
}

Group sym(std::size_t n) {
  std::vector<Point> cyc(n);
  for (std::size_t i = 0; i < n; ++i) cyc[i] = static_cast<Point>((i + 1) % n);
  return build_group({perm_from_cycles("(1 2)", n), Permutation(cyc)}, n);
}

SubgroupOptions backtrack_only() {
  SubgroupOptions o;
  o.brute_force_order = 0;
  o.filter_order = 0;
  return o;
}

Group random_subgroup(const Group& g, std::mt19937_64& rng, int gens) {
  std::vector<Permutation> v;
  for (int i = 0; i < gens; ++i) v.push_back(g.random_element(rng));
  return build_group(v, g.degree());
}

}  // namespace

TEST_CASE("generated subgroups") {
  auto s3 = sym(3);
  const Permutation t[] = {perm_from_cycles("(1 2)", 3)};
  CHECK(generated(s3, t).order() == 2);
  CHECK(generated(s3, {}).order() == 1);
  auto a4 = from_cycles({"(1 2 3)", "(2 3 4)"}, 4);
  const Permutation v[] = {perm_from_cycles("(1 2)(3 4)", 4), perm_from_cycles("(1 3)(2 4)", 4),
                           perm_from_cycles("(1 2 3)", 4)};
  CHECK(generated(a4, v).order() == 12);
  const Permutation out[] = {perm_from_cycles("(1 2)", 4)};
  CHECK_THROWS_AS(generated(a4, out), PreconditionError);
}

TEST_CASE("normalizers and centralizers by scan") {
  auto s4 = sym(4);
  auto c3 = from_cycles({"(1 2 3)"}, 4);
  CHECK(normalizer(s4, c3).order() == 6);
  CHECK(normalizer(s4, s4).order() == 24);
  auto s3 = sym(3);
  CHECK(centralizer(s3, from_cycles({"(1 2 3)"}, 3)).order() == 3);
  CHECK(centralizer(s4, from_cycles({}, 4)).order() == 24);
  auto v4 = from_cycles({"(1 2)(3 4)", "(1 3)(2 4)"}, 4);
  auto c = centralizer(s4, v4);
  CHECK(c.order() == 4);
  CHECK(c.group.same_elements(v4));
}

TEST_CASE("backtrack agrees with scanning") {
  std::mt19937_64 rng(3);
  auto s6 = sym(6);
  for (int i = 0; i < 40; ++i) {
    auto h = random_subgroup(s6, rng, 1 + i % 2);
    auto n1 = normalizer(s6, h);
    auto n2 = normalizer(s6, h, backtrack_only());
    CHECK(n1.group.same_elements(n2.group));
    auto c1 = centralizer(s6, h);
    auto c2 = centralizer(s6, h, backtrack_only());
    CHECK(c1.group.same_elements(c2.group));
    auto k = random_subgroup(s6, rng, 1 + i % 2);
    auto i1 = intersection(h, k);
    auto i2 = intersection(h, k, backtrack_only());
    CHECK(i1.same_elements(i2));
    auto r1 = are_conjugate(s6, h, k);
    auto r2 = are_conjugate(s6, h, k, backtrack_only());
    CHECK(r1.verdict == r2.verdict);
    CHECK(r1.verdict != Verdict::Indeterminate);
  }
}

TEST_CASE("conjugacy") {
  auto s4 = sym(4);
  auto p1 = from_cycles({"(1 2 3 4)", "(1 3)"}, 4);
  auto p2 = from_cycles({"(1 3 2 4)", "(1 2)"}, 4);
  auto r = are_conjugate(s4, p1, p2);
  REQUIRE(r.verdict == Verdict::Yes);
  CHECK(verify_transporter(p1, p2, *r.transporter));
  auto self = are_conjugate(s4, p1, p1);
  REQUIRE(self.verdict == Verdict::Yes);
  CHECK(verify_transporter(p1, p1, *self.transporter));

  auto a = from_cycles({"(1 2)(3 4)"}, 4);
  auto b = from_cycles({"(1 2)"}, 4);
  CHECK(are_conjugate(s4, a, b).verdict == Verdict::No);
}

TEST_CASE("conjugacy is an equivalence on random triples") {
  std::mt19937_64 rng(11);
  auto s7 = sym(7);
  auto opts = backtrack_only();
  for (int i = 0; i < 30; ++i) {
    auto h = random_subgroup(s7, rng, 1);
    auto x = s7.random_element(rng);
    auto y = s7.random_element(rng);
    std::vector<Permutation> kg, lg;
    for (const auto& g : h.generators()) kg.push_back(conjugate(g, x));
    auto k = build_group(kg, 7);
    for (const auto& g : k.generators()) lg.push_back(conjugate(g, y));
    auto l = build_group(lg, 7);
    auto hk = are_conjugate(s7, h, k, opts);
    auto kh = are_conjugate(s7, k, h, opts);
    auto kl = are_conjugate(s7, k, l, opts);
    REQUIRE(hk.verdict == Verdict::Yes);
    REQUIRE(kh.verdict == Verdict::Yes);
    REQUIRE(kl.verdict == Verdict::Yes);
    CHECK(verify_transporter(k, h, hk.transporter->inverse()));
    CHECK(verify_transporter(h, l, *hk.transporter * *kl.transporter));
  }
}

TEST_CASE("sylow subgroups") {
  auto s4 = sym(4);
  CHECK(sylow(s4, 2).order() == 8);
  CHECK(sylow(s4, 3).order() == 3);
  CHECK(sylow(s4, 5).order() == 1);
  CHECK_THROWS_AS(sylow(s4, 4), RangeError);
  auto s8 = sym(8);
  CHECK(sylow(s8, 2).order() == 128);
  CHECK(sylow(s8, 3).order() == 9);
  CHECK(sylow(s8, 7).order() == 7);
}

TEST_CASE("normal subgroups") {
  auto orders = [](const std::vector<Subgroup>& v) {
    std::vector<Order> o;
    for (const auto& s : v) o.push_back(s.order());
    return o;
  };
  CHECK(orders(normal_subgroups(sym(4))) == std::vector<Order>{1, 4, 12, 24});
  CHECK(orders(normal_subgroups(from_cycles({"(1 2 3)", "(3 4 5)"}, 5))) == std::vector<Order>{1, 60});
  CHECK(orders(normal_subgroups(from_cycles({"(1 2 3 4 5 6)"}, 6))) == std::vector<Order>{1, 2, 3, 6});
}

TEST_CASE("quotients") {
  auto s4 = sym(4);
  auto v4 = from_cycles({"(1 2)(3 4)", "(1 3)(2 4)"}, 4);
  auto q = quotient(s4, v4);
  CHECK(q.index() == 6);
  CHECK(q.image().order() == 6);
  const auto& gens = q.image().generators();
  bool abelian = true;
  for (const auto& a : gens)
    for (const auto& b : gens) abelian = abelian && (a * b == b * a);
  CHECK_FALSE(abelian);
  CHECK(quotient(s4, from_cycles({}, 4)).image().order() == 24);
  CHECK(quotient(s4, s4).image().order() == 1);
  CHECK_THROWS_AS(quotient(s4, from_cycles({"(1 2)"}, 4)), PreconditionError);

  std::mt19937_64 rng(5);
  for (int i = 0; i < 1000; ++i) {
    auto x = s4.random_element(rng);
    auto y = s4.random_element(rng);
    REQUIRE(q.project(x * y) == q.project(x) * q.project(y));
  }
  for (const auto& x : s4.elements(24)) {
    CHECK(q.project(x).is_identity() == v4.contains(x));
  }
}

TEST_CASE("orbit signatures") {
  auto s4 = sym(4);
  auto h = from_cycles({"(1 2)"}, 4);
  auto sig = orbit_signature(s4, h);
  CHECK(format_signature(sig) == "{1,1,2}");
}

TEST_CASE("prime helpers") {
  CHECK(is_prime(2));
  CHECK(is_prime(31));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK(prime_divisors(Order(9999360)) == std::vector<std::uint64_t>{2, 3, 5, 7, 31});
  CHECK(prime_divisors(Order(1)).empty());
}
