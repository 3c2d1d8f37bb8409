#include "doctest.h"
#include "hallpi/constructors.hpp"
#include "hallpi/error.hpp"
#include "hallpi/subgroup.hpp"

using namespace hallpi;

TEST_CASE("named families") {
  CHECK(make_named(Family::Sym, 4).order() == 24);
  CHECK(make_named(Family::Alt, 5).order() == 60);
  CHECK(make_named(Family::Alt, 6).order() == 360);
  CHECK(make_named(Family::Alt, 2).order() == 1);
  CHECK(make_named(Family::Cyclic, 1).order() == 1);
  auto d6 = make_named(Family::Dihedral, 6);
  CHECK(d6.order() == 12);
  CHECK(d6.degree() == 6);
  CHECK_THROWS_AS(make_named(Family::Sym, 13), RangeError);
  CHECK_THROWS_AS(make_named(Family::Dihedral, 2), RangeError);
  BuildOptions wide;
  wide.degree_cap = 16;
  CHECK(make_named(Family::Cyclic, 16, wide).order() == 16);
}

TEST_CASE("finite fields") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 25u, 27u, 32u}) {
    FiniteField f(q);
    for (std::uint32_t a = 1; a < q; ++a) {
      auto x = static_cast<FiniteField::Elem>(a);
      REQUIRE(f.mul(x, f.inv(x)) == 1);
      REQUIRE(f.add(x, f.neg(x)) == 0);
    }
    // The primitive element has order q - 1.
    std::uint32_t order = 1;
    for (auto x = f.primitive(); x != 1; x = f.mul(x, f.primitive())) ++order;
    CHECK(order == q - 1);
    // Distributivity on all triples.
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b)
        for (std::uint32_t c = 0; c < q; ++c) {
          auto x = static_cast<FiniteField::Elem>(a), y = static_cast<FiniteField::Elem>(b),
               z = static_cast<FiniteField::Elem>(c);
          REQUIRE(f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z)));
          REQUIRE(f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z)));
        }
  }
  CHECK_THROWS_AS(FiniteField(6), RangeError);
  CHECK_THROWS_AS(FiniteField(64), RangeError);
}

TEST_CASE("matrix groups match the classical formulas") {
  CHECK(make_matrix_group(Family::GL, 3, 2).group.order() == 168);
  CHECK(make_matrix_group(Family::GL, 3, 2).group.degree() == 7);
  CHECK(make_matrix_group(Family::SL, 2, 3).group.order() == 24);
  CHECK(make_matrix_group(Family::SL, 2, 3).group.degree() == 8);
  auto gl52 = make_matrix_group(Family::GL, 5, 2);
  CHECK(gl52.group.degree() == 31);
  CHECK(gl52.group.order() == Order(1024) * 9 * 5 * 7 * 31);
  CHECK(gl52.group.order() == 9999360);
  struct Case {
    Family f;
    std::uint32_t n, q;
  };
  for (Case c : {Case{Family::GL, 2, 4}, Case{Family::GL, 2, 9}, Case{Family::PSL, 2, 8}, Case{Family::PSL, 2, 11},
                 Case{Family::PSL, 3, 3}, Case{Family::PGL, 2, 5}, Case{Family::SL, 3, 2}, Case{Family::PSL, 2, 27},
                 Case{Family::PSL, 2, 16}, Case{Family::GL, 2, 8}, Case{Family::SL, 2, 25}}) {
    CAPTURE(c.n);
    CAPTURE(c.q);
    CHECK(make_matrix_group(c.f, c.n, c.q).group.order() == classical_order(c.f, c.n, c.q));
  }
  CHECK(classical_order(Family::PSL, 2, 7) == 168);
  CHECK(classical_order(Family::PSL, 3, 3) == 5616);
  CHECK_THROWS_AS(make_matrix_group(Family::GL, 2, 6), RangeError);
  CHECK_THROWS_AS(make_matrix_group(Family::GL, 8, 3), CapExceeded);
}

TEST_CASE("direct products") {
  auto s3 = make_named(Family::Sym, 3);
  auto c2 = make_named(Family::Cyclic, 2);
  auto p = direct_product({s3, c2});
  CHECK(p.group.order() == 12);
  REQUIRE(p.factors.size() == 2);
  for (const auto& x : p.factors[0].generators())
    for (const auto& y : p.factors[1].generators()) CHECK(x * y == y * x);
  auto t = direct_product({s3, make_named(Family::Sym, 1)});
  CHECK(t.group.order() == 6);
}

TEST_CASE("automorphisms and semidirect products") {
  auto s3 = make_named(Family::Sym, 3);
  auto trivial = make_automorphism(s3, s3.generators());
  CHECK(trivial.order == 1);
  CHECK(build("Semidirect(Sym(3),Images[(1 2);(1 2 3)])").group.order() == 6);
  // Conjugation by (1 2): inner, of order 2.
  CHECK(build("Semidirect(Sym(3),Images[(1 2);(1 3 2)])").group.order() == 12);
  auto c7 = make_named(Family::Cyclic, 7);
  auto cube = make_automorphism(c7, {power(c7.generators()[0], 2)});
  CHECK(cube.order == 3);
  auto frob = semidirect_by_automorphism(cube);
  CHECK(frob.group.order() == 21);
  REQUIRE(frob.normal);
  CHECK(is_normal(frob.group, *frob.normal));
  // Conjugation by the adjoined element implements the automorphism.
  Homomorphism h(c7, cube.images);
  CHECK(frob.normal->order() == 7);
  CHECK_THROWS_AS(make_automorphism(c7, {perm_from_cycles("(1 2)", 7)}), PreconditionError);
}

TEST_CASE("trivial automorphism with declared order two") {
  auto s3 = make_named(Family::Sym, 3);
  Automorphism a{s3, s3.generators(), 2, std::nullopt, "identity"};
  auto sd = semidirect_by_automorphism(a);
  CHECK(sd.group.order() == 12);
  REQUIRE(sd.adjoined);
  for (const auto& x : sd.normal->generators()) CHECK(x * *sd.adjoined == *sd.adjoined * x);
}

TEST_CASE("inverse transpose") {
  auto a = transpose_inverse_automorphism(3, 2);
  CHECK(a.order == 2);
  CHECK(a.base.degree() == 14);
  auto g = semidirect_by_automorphism(a);
  CHECK(g.group.order() == 336);
  CHECK(is_normal(g.group, *g.normal));
  auto five = build("Semidirect(GL(5,2),TransposeInverse)");
  CHECK(five.group.order() == 19998720);
  CHECK(five.group.degree() == 62);
}

TEST_CASE("flag stabilizers") {
  auto gl3 = make_matrix_group(Family::GL, 3, 2);
  auto h = flag_stabilizer(gl3, {{2, 1}});
  CHECK(h.order() == 24);
  CHECK(flag_stabilizer(gl3, {{3}}).same_elements(gl3.group));
  auto gl5 = make_matrix_group(Family::GL, 5, 2);
  auto h1 = flag_stabilizer(gl5, {{2, 1, 2}});
  auto h2 = flag_stabilizer(gl5, {{1, 2, 2}});
  auto h3 = flag_stabilizer(gl5, {{2, 2, 1}});
  CHECK(h1.order() == 9216);
  CHECK(h2.order() == 9216);
  CHECK(h3.order() == 9216);
  CHECK(format_signature(orbit_signature(gl5.group, h1)) == "{3,4,24}");
  CHECK(format_signature(orbit_signature(gl5.group, h2)) == "{1,6,24}");
  CHECK(format_signature(orbit_signature(gl5.group, h3)) == "{3,12,16}");
  CHECK_THROWS_AS(flag_stabilizer(gl5, {{2, 2}}), PreconditionError);
  for (auto q : {2u, 3u, 4u}) {
    auto gl = make_matrix_group(Family::GL, 3, q);
    for (auto dims : std::vector<std::vector<std::uint32_t>>{{1, 2}, {1, 1, 1}, {3}}) {
      FlagSpec f{dims}, r{{dims.rbegin(), dims.rend()}};
      CHECK(flag_stabilizer(gl, f).order() == flag_stabilizer(gl, r).order());
    }
  }
}

TEST_CASE("group spec mini-language") {
  CHECK(parse_group_spec("GL(3,2)").canonical() == "GL(3,2)");
  auto s = parse_group_spec(" Semidirect( GL(5, 2) , TransposeInverse ) ");
  CHECK(s.family == Family::Semidirect);
  CHECK(s.canonical() == "Semidirect(GL(5,2),TransposeInverse)");
  CHECK(s.depth() == 2);
  CHECK(parse_group_spec("Direct(Sym(3),Cyclic(2),Alt(4))").children.size() == 3);
  CHECK_THROWS_AS(parse_group_spec("Sym(-1)"), RangeError);
  CHECK_THROWS_AS(parse_group_spec("GL(2,6)"), RangeError);
  CHECK_THROWS_AS(parse_group_spec("Foo(3)"), ParseError);
  CHECK_THROWS_AS(parse_group_spec("Sym(3"), ParseError);
  CHECK_THROWS_AS(parse_group_spec("Sym(3))"), ParseError);
  CHECK_THROWS_AS(parse_group_spec("Direct(Direct(Direct(Direct(Sym(2),Sym(2)),Sym(2)),Sym(2)),Sym(2))"), ParseError);
  CHECK_NOTHROW(parse_group_spec("Direct(Direct(Direct(Sym(2),Sym(2)),Sym(2)),Sym(2))"));
  try {
    parse_group_spec("Direct(Sym(3),Bogus(2))");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 14);
  }
}

TEST_CASE("generator files") {
  auto m11 = build("FromFile(m11.gens)");
  CHECK(m11.group.order() == 7920);
  auto wreath = build("Semidirect(Direct(Sym(3),Sym(3)),Swap)");
  CHECK(wreath.group.order() == 72);
}
