#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hallpi/hall.hpp"

namespace hallpi {

enum class CheckVerdict { Pass, Fail, Indeterminate, SkippedPrecondition };
std::string to_string(CheckVerdict v);

struct CheckResult {
  std::string check_id;
  /// The (G, A, H, pi) used, e.g. "G=Sym(4);pi={2};A=N2(order 4)".
  std::string instance;
  CheckVerdict verdict = CheckVerdict::Indeterminate;
  std::vector<std::string> witnesses;
  std::vector<std::string> assumptions;
  double elapsed_ms = 0;

  bool conditional() const { return !assumptions.empty(); }
};

/// FNV-1a over the witnesses, 16 hex digits.
std::string witness_digest(const CheckResult& r);

/// One `key=value` line (no newline).  elapsed-ms only with `timings`.
std::string format_machine(const CheckResult& r, bool timings = false);
/// Multi-line human-readable form.
std::string format_text(const CheckResult& r, bool timings = false);
/// Counts per check_id and verdict.
std::string summary_table(const std::vector<CheckResult>& results);

/// By check_id, then instance; stable otherwise.
void sort_results(std::vector<CheckResult>& results);

struct VerifyOptions {
  HallOptions hall;
  /// Candidate subgroups examined per (G, pi) by the conjecture search.
  std::size_t conjecture_budget = 200;
  std::uint64_t seed = 1;
};

/// Group specs used by the sweeps, in increasing order of |G|, restricted
/// to |G| <= max_order.
std::vector<std::string> sweep_catalog(std::uint64_t max_order);
/// Simple groups for the class-count bounds, |S| <= max_order.
std::vector<std::string> simple_catalog(std::uint64_t max_order = 10'000);

/// For G in C_pi: every normal A gives HA in C_pi with all Hall subgroups
/// of HA conjugate under A.  SkippedPrecondition when G is not in C_pi.
std::vector<CheckResult> check_theorem1(const BuiltGroup& g, const PrimeSet& pi, const VerifyOptions& options = {});

/// A normal of pi'-index: C_pi agrees on G and A.
CheckResult check_corollary1(const BuiltGroup& g, const Group& a, const PrimeSet& pi,
                             const VerifyOptions& options = {});

/// For every pi within pi(S): k <= 4, k <= 1 when 2 is not in pi, k <= 2
/// when 2 is in pi and 3 is not, and every k' <= k is a pi-number.
std::vector<CheckResult> check_theorem2(const BuiltGroup& s, const VerifyOptions& options = {});

enum class LemmaId { Base1, Base2, CpiExt, Vedernik, Quot, Norm, IndInv, EqualityGHA, Crit, TrivAct, TransAct };
std::string to_string(LemmaId id);
/// "base1", "base2", "cpiext", "vedernik", "quot", "norm", "ind=inv",
/// "equality", "crit", "trivact", "transact".  Throws ParseError.
LemmaId parse_lemma_id(std::string_view text);
const std::vector<LemmaId>& all_lemmas();

/// Every instance of the lemma found inside (g, pi): normal subgroups,
/// Hall class representatives and, where the lemma needs them, overgroups
/// and direct decompositions.
std::vector<CheckResult> check_lemma(LemmaId id, const BuiltGroup& g, const PrimeSet& pi,
                                     const VerifyOptions& options = {});

/// The two GL examples end to end.  `pi` overrides {2,3}.
std::vector<CheckResult> run_example(int which, const VerifyOptions& options = {},
                                     std::optional<PrimeSet> pi = std::nullopt);

/// For G in C_pi, subgroups <H, x> and N_G(H) over a Hall subgroup H,
/// each checked for C_pi.
std::vector<CheckResult> conjecture_search(const BuiltGroup& g, const PrimeSet& pi,
                                           const VerifyOptions& options = {});

enum class Suite { Example1, Example2, Theorem1, Theorem2, Lemmas, Conjecture };
std::string to_string(Suite s);
Suite parse_suite(std::string_view text);

/// Independent units of work for a suite (group specs, or the example
/// name).
std::vector<std::string> suite_jobs(Suite suite, std::uint64_t max_order);
/// Runs one job: every pi within pi(G) for the sweep suites.
std::vector<CheckResult> run_job(Suite suite, const std::string& job, const VerifyOptions& options = {});

/// Runs jobs on `threads` workers and merges the results in job order,
/// then sorts them.  `cached` may supply a job's results (and `store`
/// receives freshly computed ones) so interrupted sweeps resume.
struct JobCache {
  std::function<std::optional<std::vector<CheckResult>>(const std::string& job)> load;
  std::function<void(const std::string& job, const std::vector<CheckResult>&)> store;
};
std::vector<CheckResult> run_jobs(Suite suite, const std::vector<std::string>& jobs, unsigned threads,
                                  const VerifyOptions& options = {}, const JobCache* cache = nullptr);

}  // namespace hallpi
