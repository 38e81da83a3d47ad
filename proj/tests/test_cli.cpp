#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

// stdout only; stderr is discarded.
Run run(const std::string &args, const std::string &env = {}) {
  std::string cmd = env + (env.empty() ? "" : " ") + "'" QSDL_CLI "' " + args + " 2>/dev/null";
  FILE *p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, p)) out.append(buf, n);
  int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

fs::path scratch(const std::string &name) {
  fs::path d = fs::temp_directory_path() / "qsdl_cli_test";
  fs::create_directories(d);
  return d / name;
}

void write(const fs::path &p, const std::string &text) { std::ofstream(p) << text; }

std::string slurp(const fs::path &p) {
  std::ifstream f(p);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("help and usage errors") {
  CHECK(run("--help").code == 0);
  CHECK(run("").code == 2);
  CHECK(run("sieve --v 4").code == 2);
  CHECK(run("sieve --v 20..10").code == 2);
  CHECK(run("sieve --v 12 --y 1..3").code == 2);
  CHECK(run("sieve --v abc").code == 2);
  CHECK(run("sieve --bogus").code == 2);
  CHECK(run("--y-max 11 alt").code == 2);
  CHECK(run("reduce nonsense").code == 2);
  CHECK(run("search --group m22 --k 6 --cap 10").code == 2);
}

TEST_CASE("sieve") {
  auto r = run("sieve --v 12");
  CHECK(r.code == 0);
  CHECK(r.out.find("3\t12\t22\t11\t6\t5") != std::string::npos);
  auto none = run("sieve --v 15");
  CHECK(none.code == 0);
  CHECK(std::count(none.out.begin(), none.out.end(), '\n') == 1);
  auto range = run("sieve --v 40..50 --y 5");
  CHECK(range.out.find("5\t45\t66\t22\t15\t7") != std::string::npos);
}

TEST_CASE("verify exit codes") {
  auto ok = run("verify --group m22 --design m22-design");
  CHECK(ok.code == 0);
  CHECK(ok.out.find("2-(22,6,5), {0,2}, flag-transitive: true") != std::string::npos);
  CHECK(run("verify --group m11.gens --design m11-design.blk").code == 0);

  // repeated block
  auto dup = scratch("dup.blk");
  write(dup, "4 3 2\n1 2\n1 2\n3 4\n");
  CHECK(run("verify --group m11 --design " + dup.string()).code == 1);

  // not a 2-design
  auto nd = scratch("nd.blk");
  write(nd, "12 2 6\n1 2 3 4 5 6\n7 8 9 10 11 12\n");
  CHECK(run("verify --group m11 --design " + nd.string()).code == 1);

  // blocks not preserved by a different labeling of M22:2
  CHECK(run("verify --group m22_2 --design m22-design").code == 1);

  // malformed generator file
  auto bad = scratch("bad.gens");
  write(bad, "degree 3\n1 1 2\n");
  CHECK(run("verify --group " + bad.string() + " --design m11-design").code == 3);
  CHECK(run("verify --group nowhere.gens --design m11-design").code == 3);
}

TEST_CASE("missing seed data") {
  auto empty = scratch("empty_data");
  fs::create_directories(empty);
  CHECK(run("--seed-data " + empty.string() + " alt").code == 3);
  CHECK(run("--seed-data " + empty.string() + " sporadic").code == 3);
  CHECK(run("sporadic --seed-data " + empty.string()).code == 3);
}

TEST_CASE("repeat runs are byte-identical") {
  for (const char *args : {"reduce product --trace", "reduce diagonal", "reduce twisted", "alt --trace",
                           "sporadic --trace", "sporadic --format markdown",
                           "search --group m11 --k 6 --out-dir " }) {
    std::string a = args;
    if (a.rfind("search", 0) == 0) a += scratch("designs").string();
    auto x = run(a), y = run(a);
    INFO(a);
    CHECK(x.code == 0);
    CHECK(!x.out.empty());
    CHECK(x.out == y.out);
  }
  CHECK(slurp(scratch("designs") / "m11-design.blk").find("12 22 6") != std::string::npos);
}

TEST_CASE("scalar path gives the same output") {
  CHECK(run("verify --group m22 --design m22-design").out ==
        run("verify --group m22 --design m22-design", "QSDL_SIMD=scalar").out);
  CHECK(run("search --group m11 --k 6 --out-dir " + scratch("d1").string()).out.size() > 0);
}

TEST_CASE("--out writes the same text") {
  auto p = scratch("sporadic.tsv");
  fs::remove(p);
  auto r = run("sporadic --out " + p.string());
  CHECK(r.code == 0);
  CHECK(slurp(p) == run("sporadic").out);
}
