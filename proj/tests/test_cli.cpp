#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "cli.hpp"

using hallpi::cli::run_command;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

/// A fresh cache directory per test case.
struct TempCache {
  std::filesystem::path dir;
  TempCache() {
    dir = std::filesystem::temp_directory_path() /
          ("hallpi-cli-test-" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    std::filesystem::remove_all(dir);
  }
  ~TempCache() { std::filesystem::remove_all(dir); }
  std::size_t files() const {
    if (!std::filesystem::exists(dir)) return 0;
    return static_cast<std::size_t>(std::distance(std::filesystem::directory_iterator(dir), {}));
  }
};

}  // namespace

TEST_CASE("hall on GL(3,2)") {
  auto r = run({"hall", "--group", "GL(3,2)", "--pi", "2,3", "--no-cache"});
  CHECK(r.code == 0);
  CHECK(r.out.find("2 classes of Hall subgroups") != std::string::npos);
  CHECK(r.out.find("order 24") != std::string::npos);

  r = run({"hall", "--group", "GL(3,2)", "--pi", "2,3", "--no-cache", "--format", "machine"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("record=hall group=GL(3,2) pi=2,3 order=168 hall-order=24 provenance=exhaustive classes=2", 0) ==
        0);
  std::size_t lines = 0;
  for (char c : r.out) lines += c == '\n';
  CHECK(lines == 3);
}

TEST_CASE("usage errors exit 2") {
  auto r = run({"hall", "--grup", "X"});
  CHECK(r.code == 2);
  CHECK(r.err.find("--grup") != std::string::npos);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"hall", "--group", "Sym(4)"}).code == 2);
  CHECK(run({"hall", "--group", "Sym(-1)", "--pi", "2", "--no-cache"}).code == 2);
  CHECK(run({"hall", "--group", "Sym(4", "--pi", "2", "--no-cache"}).code == 2);
  CHECK(run({"hall", "--group", "Sym(4)", "--pi", "2,4", "--no-cache"}).code == 2);
  CHECK(run({"hall", "--group", "Sym(4)", "--pi", "2", "--format", "xml"}).code == 2);
  CHECK(run({"verify"}).code == 2);
  CHECK(run({"verify", "--suite", "everything"}).code == 2);
  CHECK(run({"verify", "--suite", "theorem1", "--pi", "2"}).code == 2);
  CHECK(run({"sweep"}).code == 2);
  CHECK(run({"hall", "--group", "PSL(2,7)", "--pi", "2,3", "--mode", "catalog", "--no-cache"}).code == 2);
  CHECK(run({"induced", "--group", "Sym(4)", "--pi", "2", "--normal", "<(1 2)>", "--no-cache"}).code == 2);
}

TEST_CASE("help documents every flag") {
  auto top = run({"--help"});
  CHECK(top.code == 0);
  for (const char* cmd : {"info", "hall", "property", "induced", "verify", "sweep"})
    CHECK(top.out.find(cmd) != std::string::npos);
  std::string all;
  for (const char* cmd : {"info", "hall", "property", "induced", "verify", "sweep"}) {
    auto r = run({cmd, "--help"});
    CHECK(r.code == 0);
    all += r.out;
  }
  for (const char* flag : {"--group", "--pi", "--mode", "--format", "--seed", "--max-order", "--node-cap", "--jobs",
                           "--no-cache", "--normal", "--suite", "--timings", "--cache-dir"}) {
    CAPTURE(flag);
    CHECK(all.find(flag) != std::string::npos);
  }
}

TEST_CASE("property exit codes") {
  auto r = run({"property", "--group", "Alt(5)", "--pi", "2,3", "--no-cache", "--format", "machine"});
  CHECK(r.code == 0);
  CHECK(r.out.find("E=yes C=yes D=no k=1") != std::string::npos);
  // Above the exhaustive threshold with no catalog entry.
  r = run({"property", "--group", "Sym(9)", "--pi", "2,3", "--no-cache"});
  CHECK(r.code == 3);
  r = run({"hall", "--group", "Sym(9)", "--pi", "2,3", "--no-cache"});
  CHECK(r.code == 3);
  r = run({"hall", "--group", "Sym(9)", "--pi", "2,3", "--no-cache", "--max-order", "400000", "--mode", "catalog"});
  CHECK(r.code == 2);
}

TEST_CASE("verify example2 reports conditional results") {
  auto r = run({"verify", "--suite", "example2", "--no-cache", "--format", "machine"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verdict=Fail") == std::string::npos);
  CHECK(r.out.find("assumptions=\"parabolic-hall-classification") != std::string::npos);
  CHECK(r.out.find("elapsed-ms") == std::string::npos);
  auto t = run({"verify", "--suite", "example1", "--no-cache", "--timings"});
  CHECK(t.code == 0);
  CHECK(t.out.find(" ms") != std::string::npos);
  CHECK(t.out.find("total") != std::string::npos);
}

TEST_CASE("induced on the GL(5,2) extension") {
  auto r = run({"induced", "--group", "Semidirect(GL(5,2),TransposeInverse)", "--pi", "2,3", "--normal", "base",
                "--no-cache", "--format", "machine"});
  CHECK(r.code == 0);
  CHECK(r.out.find("k-G=1 k-A=3 k-G-of-A=1 induced=1 conditional=yes") != std::string::npos);

  r = run({"induced", "--group", "Sym(4)", "--pi", "3", "--normal", "Alt(4)", "--no-cache", "--format", "machine"});
  CHECK(r.code == 0);
  CHECK(r.out.find("k-A=1 k-G-of-A=1") != std::string::npos);
  r = run({"induced", "--group", "Sym(4)", "--pi", "2", "--normal", "<(1 2)(3 4); (1 3)(2 4)>", "--no-cache",
           "--format", "machine"});
  CHECK(r.code == 0);
  CHECK(r.out.find("k-A=1 k-G-of-A=1") != std::string::npos);
}

TEST_CASE("result cache") {
  TempCache cache;
  std::vector<std::string> args = {"hall", "--group", "Direct(Sym(3), Cyclic(2))", "--pi", "3", "--format",
                                   "machine", "--cache-dir", cache.dir.string()};
  auto a = run(args);
  CHECK(a.code == 0);
  CHECK(cache.files() == 1);
  // Same canonical spec, different spelling: a hit.
  args[2] = "Direct(Sym(3),Cyclic(2))";
  auto b = run(args);
  CHECK(b.out == a.out);
  CHECK(cache.files() == 1);
  args[4] = "2";
  run(args);
  CHECK(cache.files() == 2);

  // Sweep jobs are cached one file per job.
  auto s = run({"verify", "--suite", "theorem1", "--max-order", "12", "--format", "machine", "--cache-dir",
                cache.dir.string(), "--jobs", "2"});
  CHECK(s.code == 0);
  std::size_t after = cache.files();
  CHECK(after > 2);
  auto s2 = run({"verify", "--suite", "theorem1", "--max-order", "12", "--format", "machine", "--cache-dir",
                 cache.dir.string()});
  CHECK(s2.out == s.out);
  CHECK(cache.files() == after);
}

TEST_CASE("machine output is reproducible") {
  for (const char* suite : {"example1", "theorem2"}) {
    std::vector<std::string> args = {"verify", "--suite", suite, "--format", "machine", "--no-cache", "--max-order",
                                     "200"};
    auto a = run(args);
    args.push_back("--jobs");
    args.push_back("3");
    auto b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("info and sweep") {
  auto r = run({"info", "--group", "Sym(4)", "--format", "machine"});
  CHECK(r.code == 0);
  CHECK(r.out.find("order=24 degree=4") != std::string::npos);
  CHECK(r.out.find("normal-orders=1,4,12,24 simple=no") != std::string::npos);
  r = run({"sweep", "--max-order", "12", "--no-cache", "--format", "machine"});
  CHECK(r.code == 0);
  CHECK(r.out.find("check_id=theorem1 ") != std::string::npos);
  CHECK(r.out.find("check_id=lemma.crit ") != std::string::npos);
  CHECK(r.out.find("check_id=conjecture ") != std::string::npos);
}
