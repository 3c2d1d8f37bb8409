#include <doctest.h>

#include <set>

#include "hallpi/verify.hpp"

using namespace hallpi;

namespace {

std::string describe(const std::vector<CheckResult>& rs) {
  std::string out;
  for (const auto& r : rs) out += format_text(r);
  return out;
}

std::size_t count(const std::vector<CheckResult>& rs, CheckVerdict v) {
  return static_cast<std::size_t>(std::count_if(rs.begin(), rs.end(), [&](const auto& r) { return r.verdict == v; }));
}

bool none_fail(const std::vector<CheckResult>& rs) {
  return count(rs, CheckVerdict::Fail) == 0 && count(rs, CheckVerdict::Indeterminate) == 0;
}

}  // namespace

TEST_CASE("machine format") {
  CheckResult r;
  r.check_id = "theorem1";
  r.instance = "G=Sym(3);pi={2}";
  r.verdict = CheckVerdict::Pass;
  r.witnesses = {"k=1"};
  r.elapsed_ms = 3.25;
  auto line = format_machine(r);
  CHECK(line.rfind("check_id=theorem1 instance=\"G=Sym(3);pi={2}\" verdict=Pass witness-digest=", 0) == 0);
  CHECK(line.find("assumptions=none") != std::string::npos);
  CHECK(line.find("elapsed-ms") == std::string::npos);
  CHECK(format_machine(r, true).find("elapsed-ms=3.2") != std::string::npos);
  CHECK(witness_digest(r).size() == 16);

  auto other = r;
  other.witnesses = {"k=2"};
  CHECK(witness_digest(other) != witness_digest(r));
  other.witnesses = {"k=", "1"};
  CHECK(witness_digest(other) != witness_digest(r));

  r.assumptions = {"a \"b\"", "c"};
  CHECK(format_machine(r).find("assumptions=\"a \\\"b\\\"; c\"") != std::string::npos);
  CHECK(r.conditional());
}

TEST_CASE("names round trip") {
  for (auto id : all_lemmas()) CHECK(parse_lemma_id(to_string(id)) == id);
  CHECK(all_lemmas().size() == 11);
  CHECK_THROWS_AS(parse_lemma_id("nope"), ParseError);
  for (auto s : {Suite::Example1, Suite::Example2, Suite::Theorem1, Suite::Theorem2, Suite::Lemmas, Suite::Conjecture})
    CHECK(parse_suite(to_string(s)) == s);
  CHECK_THROWS_AS(parse_suite("all"), ParseError);
}

TEST_CASE("catalog orders are what they claim") {
  auto specs = sweep_catalog(2000);
  CHECK(specs.size() > 50);
  Order last = 0;
  for (const auto& s : specs) {
    CAPTURE(s);
    auto g = build(s);
    CHECK(g.group.order() >= last);
    last = g.group.order();
    CHECK(g.group.order() <= 2000);
  }
  CHECK(sweep_catalog(100).size() < specs.size());
  for (const auto& s : simple_catalog()) {
    CAPTURE(s);
    auto g = build(s);
    CHECK(normal_subgroups(g.group).size() == 2);
  }
}

TEST_CASE("GL(3,2) walkthrough") {
  auto rs = run_example(1);
  INFO(describe(rs));
  CHECK(rs.size() == 9);
  CHECK(count(rs, CheckVerdict::Pass) == rs.size());
}

TEST_CASE("GL(3,2) walkthrough with other pi") {
  auto rs = run_example(1, {}, PrimeSet({2, 3, 7}));
  INFO(describe(rs));
  CHECK(count(rs, CheckVerdict::Pass) == rs.size());
  rs = run_example(1, {}, PrimeSet({2}));
  CHECK(count(rs, CheckVerdict::SkippedPrecondition) == 1);
}

TEST_CASE("GL(5,2) walkthrough has conditional results") {
  auto rs = run_example(2);
  INFO(describe(rs));
  CHECK(rs.size() == 10);
  CHECK(count(rs, CheckVerdict::Pass) == rs.size());
  std::size_t conditional = 0;
  for (const auto& r : rs) conditional += r.conditional();
  CHECK(conditional >= 5);
}

TEST_CASE("HA has one Hall class for every normal A") {
  VerifyOptions o;
  for (const char* spec : {"Sym(4)", "GL(2,3)", "Alt(5)", "Semidirect(Direct(Sym(3),Sym(3)),Swap)"}) {
    auto g = build(spec);
    for (const auto& pi : PrimeSet::of(g.group.order()).subsets()) {
      CAPTURE(spec);
      CAPTURE(pi.to_string());
      auto rs = check_theorem1(g, pi, o);
      INFO(describe(rs));
      CHECK(none_fail(rs));
    }
  }
  // Not in C_pi: skipped rather than checked.
  auto rs = check_theorem1(build("Alt(5)"), PrimeSet({2, 5}));
  REQUIRE(rs.size() == 1);
  CHECK(rs[0].verdict == CheckVerdict::SkippedPrecondition);
}

TEST_CASE("normal subgroups of pi'-index share C_pi") {
  auto g = build("Sym(3)");
  auto a = build("Alt(3)");
  Group a3 = normal_subgroups(g.group)[1].group;
  REQUIRE(a3.order() == 3);
  auto r = check_corollary1(g, a3, PrimeSet({3}));
  CHECK(r.verdict == CheckVerdict::Pass);
  r = check_corollary1(g, a3, PrimeSet({2}));
  CHECK(r.verdict == CheckVerdict::SkippedPrecondition);
  // Not a subgroup of the right shape: a point stabilizer is not normal.
  Group stab = build_group({Permutation({1, 0, 2})}, 3);
  CHECK(check_corollary1(g, stab, PrimeSet({3})).verdict == CheckVerdict::SkippedPrecondition);
  (void)a;
}

TEST_CASE("Hall class counts of simple groups are bounded") {
  for (const char* spec : {"Alt(5)", "PSL(2,7)", "Alt(6)"}) {
    auto rs = check_theorem2(build(spec));
    INFO(describe(rs));
    CHECK(rs.size() == PrimeSet::of(build(spec).group.order()).subsets().size());
    CHECK(count(rs, CheckVerdict::Pass) == rs.size());
  }
  auto rs = check_theorem2(build("Sym(4)"));
  REQUIRE(rs.size() == 1);
  CHECK(rs[0].verdict == CheckVerdict::SkippedPrecondition);
}

TEST_CASE("lemmas on small groups") {
  for (const char* spec : {"Sym(4)", "Direct(Sym(3),Sym(3))", "GL(2,3)", "Alt(5)",
                           "Semidirect(Direct(Sym(3),Sym(3)),Swap)"}) {
    auto g = build(spec);
    for (const auto& pi : PrimeSet::of(g.group.order()).subsets()) {
      for (auto id : all_lemmas()) {
        CAPTURE(spec);
        CAPTURE(pi.to_string());
        CAPTURE(to_string(id));
        auto rs = check_lemma(id, g, pi);
        INFO(describe(rs));
        CHECK(count(rs, CheckVerdict::Fail) == 0);
        CHECK(count(rs, CheckVerdict::Indeterminate) == 0);
      }
    }
  }
}

TEST_CASE("lemma instances are found") {
  auto g = build("Direct(Sym(3),Sym(3))");
  auto rs = check_lemma(LemmaId::TrivAct, g, PrimeSet({3}));
  CHECK(count(rs, CheckVerdict::Pass) >= 1);

  auto w = build("Semidirect(Direct(Sym(3),Sym(3)),Swap)");
  rs = check_lemma(LemmaId::TransAct, w, PrimeSet({2}));
  INFO(describe(rs));
  CHECK(count(rs, CheckVerdict::Pass) >= 1);
  rs = check_lemma(LemmaId::TransAct, g, PrimeSet({3}));
  REQUIRE(rs.size() == 1);
  CHECK(rs[0].verdict == CheckVerdict::SkippedPrecondition);

  // Sym(4): normal subgroups 1 < V4 < Alt(4) < Sym(4).
  auto s4 = build("Sym(4)");
  rs = check_lemma(LemmaId::Base1, s4, PrimeSet({2}));
  CHECK(rs.size() == 4);
  rs = check_lemma(LemmaId::CpiExt, s4, PrimeSet({3}));
  CHECK(rs.size() == 2);
  rs = check_lemma(LemmaId::Base2, s4, PrimeSet({2}));
  REQUIRE(rs.size() == 1);
  CHECK(rs[0].verdict == CheckVerdict::Pass);
}

TEST_CASE("the three criterion statements agree on PSL(2,7) x C2") {
  auto g = build("Direct(PSL(2,7),Cyclic(2))");
  auto rs = check_lemma(LemmaId::Crit, g, PrimeSet({2, 3}));
  INFO(describe(rs));
  CHECK(count(rs, CheckVerdict::Fail) == 0);
  CHECK(count(rs, CheckVerdict::Pass) >= 1);
}

TEST_CASE("trivial action on Sym(5) x Sym(5)") {
  VerifyOptions o;
  o.hall.exhaustive_threshold = 20'000;
  auto g = build("Direct(Sym(5),Sym(5))");
  auto rs = check_lemma(LemmaId::TrivAct, g, PrimeSet({2, 3}), o);
  INFO(describe(rs));
  CHECK(count(rs, CheckVerdict::Fail) == 0);
  CHECK(count(rs, CheckVerdict::Pass) >= 1);
}

TEST_CASE("conjecture search") {
  auto rs = conjecture_search(build("Sym(4)"), PrimeSet({3}));
  INFO(describe(rs));
  CHECK(none_fail(rs));
  CHECK(rs.size() >= 1);

  VerifyOptions small;
  small.conjecture_budget = 1;
  rs = conjecture_search(build("Sym(5)"), PrimeSet({5}), small);
  CHECK(count(rs, CheckVerdict::Indeterminate) == 1);

  rs = conjecture_search(build("Alt(5)"), PrimeSet({2, 5}));  // no Hall subgroup
  REQUIRE(rs.size() == 1);
  CHECK(rs[0].verdict == CheckVerdict::SkippedPrecondition);
}

TEST_CASE("jobs are deterministic across thread counts") {
  auto jobs = suite_jobs(Suite::Theorem1, 60);
  auto a = run_jobs(Suite::Theorem1, jobs, 1);
  auto b = run_jobs(Suite::Theorem1, jobs, 4);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(format_machine(a[i]) == format_machine(b[i]));
  CHECK(count(a, CheckVerdict::Fail) == 0);

  std::set<std::string> stored;
  JobCache cache;
  cache.load = [](const std::string& job) -> std::optional<std::vector<CheckResult>> {
    if (job != "Cyclic(2)") return std::nullopt;
    CheckResult r;
    r.check_id = "cached";
    return std::vector<CheckResult>{r};
  };
  cache.store = [&](const std::string& job, const std::vector<CheckResult>&) { stored.insert(job); };
  auto c = run_jobs(Suite::Theorem1, jobs, 2, {}, &cache);
  CHECK(stored.count("Cyclic(2)") == 0);
  CHECK(stored.size() == jobs.size() - 1);
  CHECK(std::any_of(c.begin(), c.end(), [](const auto& r) { return r.check_id == "cached"; }));
}

TEST_CASE("summary table") {
  auto rs = run_jobs(Suite::Theorem2, suite_jobs(Suite::Theorem2, 200), 2);
  auto table = summary_table(rs);
  CHECK(table.find("theorem2") != std::string::npos);
  CHECK(table.find("total") != std::string::npos);
}

TEST_CASE("pi'-index guard on the GL(3,2) extension") {
  auto g = build("Semidirect(GL(3,2),TransposeInverse)");
  auto r = check_corollary1(g, *g.normal, PrimeSet({2, 3}));
  CHECK(r.verdict == CheckVerdict::SkippedPrecondition);
  r = check_corollary1(g, *g.normal, PrimeSet({3, 7}));
  CHECK(r.verdict == CheckVerdict::Pass);
}

TEST_CASE("HA check agrees with A-conjugacy of all Hall subgroups") {
  std::size_t compared = 0;
  for (const auto& spec : sweep_catalog(200)) {
    auto g = build(spec);
    for (const auto& pi : PrimeSet::of(g.group.order()).subsets()) {
      auto t1 = check_theorem1(g, pi);
      auto crit = check_lemma(LemmaId::Crit, g, pi);
      for (const auto& r : t1) {
        if (r.check_id != "theorem1" || r.verdict == CheckVerdict::SkippedPrecondition) continue;
        for (const auto& c : crit) {
          if (c.instance != r.instance + ";H=0" || c.verdict == CheckVerdict::SkippedPrecondition) continue;
          CAPTURE(c.instance);
          bool third = c.witnesses.at(0).find("(3)=Yes") != std::string::npos;
          CHECK((r.verdict == CheckVerdict::Pass) == third);
          ++compared;
        }
      }
    }
  }
  CHECK(compared > 50);
}
