#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hallpi/error.hpp"
#include "hallpi/verify.hpp"

#ifndef HALLPI_VERSION
#define HALLPI_VERSION "0"
#endif

namespace hallpi::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Invocation {
  std::string command;
  std::string group;
  std::string pi;
  std::string mode = "auto";
  std::string format = "text";
  std::string normal;
  std::string suite;
  std::uint64_t seed = 1;
  std::optional<std::uint64_t> max_order;
  std::optional<std::uint64_t> node_cap;
  unsigned jobs = 1;
  bool no_cache = false;
  bool timings = false;
  std::string cache_dir;

  bool machine() const { return format == "machine"; }
};

// ------------------------------------------------------------ formatting

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

/// key=value with quotes only where needed.
std::string kv(const std::string& key, const std::string& value) {
  bool plain = !value.empty() && value.find_first_of(" \"\\=;") == std::string::npos;
  return key + "=" + (plain ? value : quoted(value));
}

std::string factorization(const Order& n) {
  if (n == 1) return "1";
  std::string out;
  Order rest = n;
  for (auto p : prime_divisors(n)) {
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (!out.empty()) out += " * ";
    out += std::to_string(p);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::string generator_list(const Group& g) {
  std::string out;
  for (const auto& x : g.generators()) {
    if (x.is_identity()) continue;
    if (!out.empty()) out += "; ";
    out += x.to_cycles();
  }
  return out.empty() ? "()" : out;
}

// ----------------------------------------------------------------- cache

std::string fnv_hex(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

/// One JSON file per key under the cache directory.  Unreadable or
/// mismatched entries count as misses.
class Cache {
 public:
  Cache(std::string dir, bool enabled) : dir_(std::move(dir)), enabled_(enabled && !dir_.empty()) {}

  std::optional<json> load(const std::string& key) const {
    if (!enabled_) return std::nullopt;
    std::ifstream in(path(key));
    if (!in) return std::nullopt;
    try {
      json j = json::parse(in);
      if (j.at("key") != key) return std::nullopt;
      return j.at("value");
    } catch (const json::exception&) {
      return std::nullopt;
    }
  }

  void store(const std::string& key, const json& value) const {
    if (!enabled_) return;
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) return;
    auto target = path(key);
    auto tmp = target;
    tmp += ".tmp";
    {
      std::ofstream out(tmp);
      if (!out) return;
      out << json{{"key", key}, {"value", value}}.dump();
    }
    fs::rename(tmp, target, ec);
  }

 private:
  fs::path path(const std::string& key) const { return fs::path(dir_) / (fnv_hex(key) + ".json"); }

  std::string dir_;
  bool enabled_;
};

json to_json(const CheckResult& r) {
  return {{"check_id", r.check_id},       {"instance", r.instance},       {"verdict", static_cast<int>(r.verdict)},
          {"witnesses", r.witnesses},     {"assumptions", r.assumptions}, {"elapsed_ms", r.elapsed_ms}};
}

CheckResult from_json(const json& j) {
  CheckResult r;
  r.check_id = j.at("check_id");
  r.instance = j.at("instance");
  r.verdict = static_cast<CheckVerdict>(j.at("verdict").get<int>());
  r.witnesses = j.at("witnesses").get<std::vector<std::string>>();
  r.assumptions = j.at("assumptions").get<std::vector<std::string>>();
  r.elapsed_ms = j.at("elapsed_ms");
  return r;
}

// --------------------------------------------------------------- options

HallOptions hall_options(const Invocation& inv) {
  HallOptions o;
  if (inv.max_order) o.exhaustive_threshold = *inv.max_order;
  if (inv.node_cap) o.subgroup.node_cap = *inv.node_cap;
  o.subgroup.seed = inv.seed;
  return o;
}

VerifyOptions verify_options(const Invocation& inv) {
  VerifyOptions o;
  if (inv.node_cap) o.hall.subgroup.node_cap = *inv.node_cap;
  o.hall.subgroup.seed = inv.seed;
  o.seed = inv.seed;
  return o;
}

BuildOptions build_options(const Invocation& inv) {
  BuildOptions o;
  o.seed = inv.seed;
  return o;
}

PrimeSet required_pi(const Invocation& inv) {
  if (inv.pi.empty()) throw UsageError(inv.command + ": --pi is required");
  return PrimeSet::parse(inv.pi);
}

BuiltGroup required_group(const Invocation& inv) {
  if (inv.group.empty()) throw UsageError(inv.command + ": --group is required");
  return build(inv.group, build_options(inv));
}

std::string options_key(const Invocation& inv) {
  auto o = hall_options(inv);
  return std::string("v") + HALLPI_VERSION + "|seed=" + std::to_string(inv.seed) +
         "|threshold=" + std::to_string(o.exhaustive_threshold) + "|node-cap=" + std::to_string(o.subgroup.node_cap);
}

/// A computed report: the text to print and the exit code.
struct Report {
  std::string text;
  int code = kOk;
};

json to_json(const Report& r) { return {{"text", r.text}, {"code", r.code}}; }

/// Reuses a cached report for this key or computes and stores one.
template <class F>
Report cached(const Cache& cache, const std::string& key, F&& compute) {
  if (auto hit = cache.load(key)) {
    try {
      return Report{hit->at("text").get<std::string>(), hit->at("code").get<int>()};
    } catch (const json::exception&) {
    }
  }
  Report r = compute();
  cache.store(key, to_json(r));
  return r;
}

// -------------------------------------------------------------- commands

Report cmd_info(const Invocation& inv) {
  BuiltGroup g = required_group(inv);
  auto o = hall_options(inv);
  const Order& n = g.group.order();
  std::optional<std::vector<Subgroup>> normals;
  if (n <= o.exhaustive_threshold) normals = normal_subgroups(g.group, o.subgroup);
  std::string orders;
  if (normals) {
    for (const auto& s : *normals) orders += (orders.empty() ? "" : ",") + s.order().str();
  }
  std::ostringstream out;
  if (inv.machine()) {
    out << "record=info " << kv("group", g.spec.canonical()) << " order=" << n.str()
        << " degree=" << g.group.degree() << " " << kv("factorization", factorization(n)) << " "
        << kv("primes", PrimeSet::of(n).to_list()) << " " << kv("generators", generator_list(g.group)) << " "
        << kv("normal-orders", normals ? orders : "unknown") << " simple="
        << (normals ? (normals->size() == 2 ? "yes" : "no") : "unknown") << "\n";
  } else {
    out << "group       " << g.spec.canonical() << "\n"
        << "order       " << n.str() << " = " << factorization(n) << "\n"
        << "degree      " << g.group.degree() << "\n"
        << "primes      " << PrimeSet::of(n).to_string() << "\n"
        << "generators  " << generator_list(g.group) << "\n";
    if (normals) {
      out << "normal      " << normals->size() << " subgroups, orders " << orders << "\n"
          << "simple      " << (normals->size() == 2 ? "yes" : "no") << "\n";
    } else {
      out << "normal      not computed (|G| above --max-order)\n";
    }
  }
  return {out.str(), kOk};
}

void print_class(std::ostream& out, const Invocation& inv, const char* record, std::size_t i, const SubgroupClass& c) {
  if (inv.machine()) {
    out << "record=" << record << " index=" << i << " order=" << c.representative.order().str()
        << " class-size=" << c.class_size.str() << " provenance=" << to_string(c.provenance) << " "
        << kv("tag", c.representative.tag.empty() ? "-" : c.representative.tag) << " "
        << kv("generators", generator_list(c.representative.group)) << " "
        << kv("certificate", c.certificate.empty() ? "-" : c.certificate) << "\n";
    return;
  }
  out << "  " << record << " " << i << ": order " << c.representative.order().str() << ", class size "
      << c.class_size.str();
  if (!c.representative.tag.empty()) out << ", " << c.representative.tag;
  out << "\n    generators " << generator_list(c.representative.group) << "\n";
  if (!c.certificate.empty()) out << "    " << c.certificate << "\n";
}

void print_assumptions(std::ostream& out, const Invocation& inv, const std::vector<std::string>& assumptions) {
  for (const auto& a : assumptions) {
    if (inv.machine())
      out << "record=assumption " << kv("text", a) << "\n";
    else
      out << "  assumes: " << a << "\n";
  }
}

Report cmd_hall(const Invocation& inv) {
  BuiltGroup g = required_group(inv);
  PrimeSet pi = required_pi(inv);
  HallResult r = hall_classes(g, pi, parse_mode(inv.mode), hall_options(inv));
  std::ostringstream out;
  if (inv.machine()) {
    out << "record=hall " << kv("group", g.spec.canonical()) << " " << kv("pi", pi.to_list())
        << " order=" << g.group.order().str() << " hall-order=" << r.hall_order.str()
        << " provenance=" << to_string(r.provenance) << " classes=" << r.classes.size()
        << " conditional=" << (r.assumptions.empty() ? "no" : "yes") << "\n";
  } else {
    out << "G = " << g.spec.canonical() << ", |G| = " << g.group.order().str() << ", pi = " << pi.to_string()
        << ", pi-part " << r.hall_order.str() << "\n"
        << r.classes.size() << (r.classes.size() == 1 ? " class" : " classes") << " of Hall subgroups ("
        << to_string(r.provenance) << (r.assumptions.empty() ? "" : ", conditional") << ")\n";
  }
  for (std::size_t i = 0; i < r.classes.size(); ++i) print_class(out, inv, "class", i, r.classes[i]);
  for (std::size_t i = 0; i < r.non_hall_maximal.size(); ++i) print_class(out, inv, "maximal", i, r.non_hall_maximal[i]);
  print_assumptions(out, inv, r.assumptions);
  return {out.str(), kOk};
}

Report cmd_property(const Invocation& inv) {
  BuiltGroup g = required_group(inv);
  PrimeSet pi = required_pi(inv);
  PropertyReport r = classify_properties(g, pi, parse_mode(inv.mode), hall_options(inv));
  std::ostringstream out;
  std::string k = r.k ? std::to_string(*r.k) : "unknown";
  if (inv.machine()) {
    out << "record=property " << kv("group", g.spec.canonical()) << " " << kv("pi", pi.to_list())
        << " E=" << to_string(r.e) << " C=" << to_string(r.c) << " D=" << to_string(r.d) << " k=" << k
        << " provenance=" << to_string(r.provenance) << " conditional=" << (r.assumptions.empty() ? "no" : "yes")
        << "\n";
    for (const auto& w : r.witnesses) out << "record=witness " << kv("text", w) << "\n";
    for (const auto& n : r.notes) out << "record=note " << kv("text", n) << "\n";
  } else {
    out << "G = " << g.spec.canonical() << ", pi = " << pi.to_string() << "\n"
        << "  E_pi " << to_string(r.e) << "\n  C_pi " << to_string(r.c) << "\n  D_pi " << to_string(r.d) << "\n"
        << "  k    " << k << " (" << to_string(r.provenance) << ")\n";
    for (const auto& w : r.witnesses) out << "  witness: " << w << "\n";
    for (const auto& n : r.notes) out << "  note: " << n << "\n";
  }
  print_assumptions(out, inv, r.assumptions);
  bool open = r.e == Verdict::Indeterminate || r.c == Verdict::Indeterminate || r.d == Verdict::Indeterminate;
  return {out.str(), open ? kIndeterminate : kOk};
}

/// `--normal`: "base" for the designated normal part of a semidirect
/// product, "<(1 2 3), (1 2)>" for generators on G's points, otherwise a
/// group spec built on G's points.
BuiltGroup normal_argument(const Invocation& inv, const BuiltGroup& g) {
  const std::string& text = inv.normal;
  if (text.empty()) throw UsageError("induced: --normal is required");
  BuiltGroup a;
  if (text == "base") {
    auto part = normal_part(g);
    if (!part) throw UsageError("induced: --normal base needs a semidirect product");
    a = std::move(*part);
  } else if (text.front() == '<') {
    if (text.back() != '>') throw ParseError("generator list must end with '>'", text.size());
    std::vector<Permutation> gens;
    std::string body = text.substr(1, text.size() - 2);
    std::size_t start = 0;
    while (start <= body.size()) {
      auto end = body.find(';', start);
      if (end == std::string::npos) end = body.size();
      auto piece = body.substr(start, end - start);
      if (piece.find_first_not_of(" \t") != std::string::npos) gens.push_back(perm_from_cycles(piece, g.group.degree()));
      start = end + 1;
    }
    a.group = Group::build(std::move(gens), g.group.degree());
    a.spec.family = Family::FromFile;
    a.spec.path = text;
  } else {
    a = build(text, build_options(inv));
  }
  if (a.group.degree() != g.group.degree() || !g.group.contains_group(a.group)) {
    throw UsageError("induced: --normal is not a subgroup of G on the same points");
  }
  if (!is_normal(g.group, a.group)) throw UsageError("induced: --normal is not normal in G");
  return a;
}

Report cmd_induced(const Invocation& inv) {
  BuiltGroup g = required_group(inv);
  PrimeSet pi = required_pi(inv);
  BuiltGroup a = normal_argument(inv, g);
  Mode mode = parse_mode(inv.mode);
  auto o = hall_options(inv);
  HallResult hg = hall_classes(g, pi, mode, o);
  InducedResult r = induced_classes(g, hg, a, pi, mode, o);
  std::ostringstream out;
  std::string induced;
  for (auto i : r.induced) induced += (induced.empty() ? "" : ",") + std::to_string(i);
  if (inv.machine()) {
    out << "record=induced " << kv("group", g.spec.canonical()) << " " << kv("normal", inv.normal) << " "
        << kv("pi", pi.to_list()) << " k-G=" << hg.classes.size() << " k-A=" << r.a_classes.classes.size()
        << " k-G-of-A=" << r.k_pi_g_of_a() << " " << kv("induced", induced.empty() ? "-" : induced)
        << " conditional=" << (r.assumptions.empty() ? "no" : "yes") << "\n";
  } else {
    out << "G = " << g.spec.canonical() << ", A = " << inv.normal << " (order " << a.group.order().str()
        << "), pi = " << pi.to_string() << "\n"
        << "  k(G) = " << hg.classes.size() << ", k(A) = " << r.a_classes.classes.size()
        << ", G-induced classes of A: " << r.k_pi_g_of_a() << (induced.empty() ? "" : " (" + induced + ")") << "\n";
  }
  for (std::size_t i = 0; i < r.a_classes.classes.size(); ++i) print_class(out, inv, "a-class", i, r.a_classes.classes[i]);
  print_assumptions(out, inv, r.assumptions);
  return {out.str(), kOk};
}

int exit_code_for(const std::vector<CheckResult>& results) {
  bool open = false;
  for (const auto& r : results) {
    if (r.verdict == CheckVerdict::Fail) return kFail;
    if (r.verdict == CheckVerdict::Indeterminate) open = true;
  }
  return open ? kIndeterminate : kOk;
}

Report render(const Invocation& inv, const std::vector<CheckResult>& results) {
  std::ostringstream out;
  for (const auto& r : results) {
    if (inv.machine())
      out << format_machine(r, inv.timings) << "\n";
    else
      out << format_text(r, inv.timings);
  }
  if (!inv.machine()) out << "\n" << summary_table(results);
  return {out.str(), exit_code_for(results)};
}

std::vector<CheckResult> run_suite(const Invocation& inv, Suite suite, const Cache& cache) {
  VerifyOptions o = verify_options(inv);
  if (suite == Suite::Example1 || suite == Suite::Example2) {
    std::optional<PrimeSet> pi;
    if (!inv.pi.empty()) pi = PrimeSet::parse(inv.pi);
    return run_example(suite == Suite::Example1 ? 1 : 2, o, pi);
  }
  if (!inv.pi.empty()) throw UsageError("--pi applies to the example suites only; sweeps cover every pi");
  std::vector<std::string> jobs;
  if (!inv.group.empty()) {
    jobs = {build(inv.group, build_options(inv)).spec.canonical()};
  } else {
    std::uint64_t bound = inv.max_order.value_or(suite == Suite::Theorem2 ? 10'000 : 2'000);
    jobs = suite_jobs(suite, bound);
  }
  std::string prefix = std::string("job|v") + HALLPI_VERSION + "|" + to_string(suite) + "|seed=" +
                       std::to_string(inv.seed) + "|node-cap=" + std::to_string(o.hall.subgroup.node_cap) + "|";
  JobCache jc;
  jc.load = [&](const std::string& job) -> std::optional<std::vector<CheckResult>> {
    auto hit = cache.load(prefix + job);
    if (!hit) return std::nullopt;
    try {
      std::vector<CheckResult> out;
      for (const auto& j : *hit) out.push_back(from_json(j));
      return out;
    } catch (const json::exception&) {
      return std::nullopt;
    }
  };
  jc.store = [&](const std::string& job, const std::vector<CheckResult>& results) {
    json arr = json::array();
    for (const auto& r : results) arr.push_back(to_json(r));
    cache.store(prefix + job, arr);
  };
  return run_jobs(suite, jobs, inv.jobs, o, &jc);
}

Report cmd_verify(const Invocation& inv, const Cache& cache) {
  if (inv.suite.empty()) throw UsageError("verify: --suite is required");
  return render(inv, run_suite(inv, parse_suite(inv.suite), cache));
}

Report cmd_sweep(const Invocation& inv, const Cache& cache) {
  if (!inv.max_order) throw UsageError("sweep: --max-order is required");
  std::vector<CheckResult> all;
  for (auto s : {Suite::Theorem1, Suite::Theorem2, Suite::Lemmas, Suite::Conjecture}) {
    auto part = run_suite(inv, s, cache);
    all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  sort_results(all);
  return render(inv, all);
}

Report dispatch(const Invocation& inv) {
  Cache cache(inv.cache_dir.empty() ? default_cache_dir() : inv.cache_dir, !inv.no_cache);
  if (inv.command == "info") return cmd_info(inv);
  if (inv.command == "verify") return cmd_verify(inv, cache);
  if (inv.command == "sweep") return cmd_sweep(inv, cache);
  // hall, property and induced results are cached whole.
  std::string key;
  if (!inv.group.empty() && !inv.pi.empty()) {
    key = inv.command + "|" + build(inv.group, build_options(inv)).spec.canonical() + "|pi=" +
          PrimeSet::parse(inv.pi).to_list() + "|mode=" + to_string(parse_mode(inv.mode)) + "|normal=" + inv.normal +
          "|format=" + inv.format + "|" + options_key(inv);
  }
  auto compute = [&]() -> Report {
    if (inv.command == "hall") return cmd_hall(inv);
    if (inv.command == "property") return cmd_property(inv);
    return cmd_induced(inv);
  };
  if (key.empty()) return compute();
  return cached(cache, key, compute);
}

// Required options are checked after parsing, so that a misspelt flag is
// reported as such rather than as a missing option.
void add_group(CLI::App* sub, Invocation& inv, bool required) {
  sub->add_option("--group", inv.group,
                  std::string(required ? "(required) " : "") + "group spec, e.g. \"Semidirect(GL(3,2),TransposeInverse)\"");
}

void add_pi(CLI::App* sub, Invocation& inv, const std::string& help) { sub->add_option("--pi", inv.pi, help); }

void add_thresholds(CLI::App* sub, Invocation& inv, const std::string& max_order_help) {
  sub->add_option("--max-order", inv.max_order, max_order_help);
  sub->add_option("--node-cap", inv.node_cap, "backtrack search node cap (default 10000000)");
  sub->add_option("--seed", inv.seed, "seed for randomized constructions (default 1)");
}

void add_output(CLI::App* sub, Invocation& inv) {
  sub->add_option("--format", inv.format, "text or machine (one key=value record per line)")
      ->check(CLI::IsMember({"text", "machine"}));
  sub->add_flag("--no-cache", inv.no_cache, "neither read nor write the result cache");
  sub->add_option("--cache-dir", inv.cache_dir, "result cache directory (default " + default_cache_dir() + ")");
}

void add_mode(CLI::App* sub, Invocation& inv) {
  sub->add_option("--mode", inv.mode, "exhaustive, catalog or auto (default auto)")
      ->check(CLI::IsMember({"exhaustive", "catalog", "catalog-certified", "auto"}));
}

}  // namespace

std::string default_cache_dir() {
  if (const char* d = std::getenv("HALLPI_CACHE_DIR"); d && *d) return d;
  if (const char* d = std::getenv("XDG_CACHE_HOME"); d && *d) return (fs::path(d) / "hallpi").string();
  if (const char* d = std::getenv("HOME"); d && *d) return (fs::path(d) / ".cache" / "hallpi").string();
  return ".hallpi-cache";
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Invocation inv;
  CLI::App app{"Hall subgroups of finite permutation groups", "hallpi"};
  app.require_subcommand(1);
  app.set_version_flag("--version", HALLPI_VERSION);

  const std::string threshold = "largest |G| enumerated exhaustively (default 50000)";
  auto* info = app.add_subcommand("info", "order, degree, generators and normal structure of a group");
  add_group(info, inv, true);
  add_thresholds(info, inv, "largest |G| whose normal subgroups are listed (default 50000)");
  add_output(info, inv);

  auto* hall = app.add_subcommand("hall", "conjugacy classes of Hall pi-subgroups");
  auto* property = app.add_subcommand("property", "E_pi, C_pi and D_pi for a group");
  auto* induced = app.add_subcommand("induced", "G-induced Hall classes of a normal subgroup");
  for (auto* sub : {hall, property, induced}) {
    add_group(sub, inv, true);
    add_pi(sub, inv, "(required) comma-separated primes, e.g. 2,3");
    add_mode(sub, inv);
    add_thresholds(sub, inv, threshold);
    add_output(sub, inv);
  }
  induced->add_option("--normal", inv.normal,
                      "(required) normal subgroup: base (normal part of a semidirect product), a generator list "
                      "\"<(1 2 3); (4 5 6)>\" or a group spec on the same points");

  auto* verify = app.add_subcommand("verify", "run one verification suite");
  verify->add_option("--suite", inv.suite, "(required) example1, example2, theorem1, theorem2, lemmas or conjecture")
      ->check(CLI::IsMember({"example1", "example2", "theorem1", "theorem2", "lemmas", "conjecture"}));
  add_group(verify, inv, false);
  add_pi(verify, inv, "example suites: replaces pi = {2,3}");
  add_thresholds(verify, inv, "largest catalog group swept (default 2000; theorem2: 10000)");

  auto* sweep = app.add_subcommand("sweep", "run the theorem1, theorem2, lemmas and conjecture suites");
  add_thresholds(sweep, inv, "(required) largest catalog group swept");
  for (auto* sub : {verify, sweep}) {
    sub->add_option("--jobs", inv.jobs, "worker threads (default 1)")->check(CLI::Range(1u, 256u));
    sub->add_flag("--timings", inv.timings, "add elapsed times to the report");
    add_output(sub, inv);
  }

  std::vector<const char*> argv{"hallpi"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }
  for (auto* sub : app.get_subcommands()) inv.command = sub->get_name();

  try {
    Report r = dispatch(inv);
    out << r.text;
    out.flush();
    return r.code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\nRun with --help for more information.\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const RangeError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DegreeMismatch& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const CapExceeded& e) {
    err << "indeterminate: " << e.what() << "\n";
    return kIndeterminate;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kIndeterminate;
  }
}

}  // namespace hallpi::cli
