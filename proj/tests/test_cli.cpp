#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "tailmatch/cli.hpp"

using namespace tailmatch;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

bool has(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

std::filesystem::path temp_file(const std::string& name, const std::string& body) {
  const auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << body;
  return p;
}

}  // namespace

TEST_CASE("mk reports value and regime") {
  const auto r = run({"mk", "--k", "3", "--x", "1/10"});
  CHECK(r.code == kExitOk);
  CHECK(has(r.out, R"("value":"271/1000")"));
  CHECK(has(r.out, R"("regime":"below-x0")"));
  CHECK(has(r.out, R"("seed":0)"));
  CHECK(r.out.rfind(R"({"command":"mk")", 0) == 0);
}

TEST_CASE("seed is echoed in every format") {
  CHECK(has(run({"--seed", "17", "mk", "--k", "2", "--x", "1/2"}).out, R"("seed":17)"));
  CHECK(has(run({"mk", "--k", "2", "--x", "1/2", "--format", "plain", "--seed", "5"}).out, "seed: 5"));
  CHECK(run({"sweep", "--k", "2", "--points", "2", "--seed", "9"}).out.rfind("# seed=9\n", 0) == 0);
}

TEST_CASE("duality on a triangle file") {
  const auto f = temp_file("tailmatch_cli_triangle.hg", "# triangle\n3 2\n1 2\n2 3\n1 3\n");
  const auto r = run({"duality", "--file", f.string()});
  CHECK(r.code == kExitOk);
  CHECK(has(r.out, R"("nu_star":"3/2")"));
  CHECK(has(r.out, R"("tau_star":"3/2")"));
  CHECK(has(r.out, R"("equal":true)"));
  const auto nu = run({"nu", "--file", f.string()});
  CHECK(has(nu.out, R"("nu":1)"));
  std::filesystem::remove(f);
}

TEST_CASE("roots and samuels") {
  const auto r = run({"roots", "--which", "x1", "--k", "3", "--eps", "1/100000"});
  CHECK(r.code == kExitOk);
  CHECK(has(r.out, "0.27728"));
  const auto s = run({"samuels", "--k", "3", "--x", "1/5"});
  CHECK(has(s.out, R"("value":"61/125")"));
}

TEST_CASE("tail and search commands") {
  const auto t = run({"tail", "--k", "3", "--dist", R"([["0","1/2"],["1","1/2"]])"});
  CHECK(has(t.out, R"("tail":"7/8")"));
  const auto s = run({"search-mk", "--k", "2", "--x", "2/5", "--m", "2", "--n-den", "5", "--max-support", "2"});
  CHECK(has(s.out, "16/25"));
}

TEST_CASE("bridge-check writes a hypergraph and sidecar") {
  const auto prefix = (std::filesystem::temp_directory_path() / "tailmatch_cli_bridge").string();
  const auto r = run({"bridge-check", "--k", "2", "--n", "1", "--dist", R"([["0","2/5"],["1/2","3/5"]])", "--out",
                      prefix});
  CHECK(r.code == kExitOk);
  CHECK(has(r.out, R"("lhs":"9/25")"));
  CHECK(std::filesystem::exists(prefix + ".hg"));
  CHECK(std::filesystem::exists(prefix + ".json"));
  std::filesystem::remove(prefix + ".hg");
  std::filesystem::remove(prefix + ".json");
}

TEST_CASE("csv output for tables") {
  const auto sweep = run({"sweep", "--k", "2", "--points", "3"});
  CHECK(sweep.out.rfind("# seed=0\nx_num,", 0) == 0);
  CHECK(has(sweep.out, "1,2,1,1,at-least-1/k"));
  const auto probe =
      run({"density-probe", "--family", "cov", "--k", "3", "--x", "1/5", "--n-list", "30,60", "--format", "csv"});
  CHECK(probe.code == kExitOk);
  CHECK(has(probe.out, "\n30,6,2036,509/1015,"));
}

TEST_CASE("exit codes") {
  CHECK(run({"mk", "--k", "3", "--x", "1/0"}).code == kExitUsage);
  CHECK(run({"mk", "--k", "3", "--x", "abc"}).code == kExitUsage);
  CHECK(run({"mk", "--k", "3", "--x", "1/5", "--bogus"}).code == kExitUsage);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
  const auto pre = run({"erdos-bound", "--n", "5", "--k", "3", "--s", "2"});
  CHECK(pre.code == kExitPrecondition);
  CHECK_FALSE(pre.err.empty());
  CHECK(run({"tail", "--k", "2", "--dist", R"([["0","1/2"],["1","1/3"]])"}).code == kExitPrecondition);
  CHECK(run({"nu", "--file", "/nonexistent/tailmatch.hg"}).code != kExitOk);
}

TEST_CASE("repeated invocations are byte identical") {
  const std::vector<std::string> args{"--seed", "3", "hunt", "--k", "2", "--s", "1", "--n", "5", "--trials", "20"};
  const auto a = run(args);
  const auto b = run(args);
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  CHECK(run({"sweep", "--k", "3"}).out == run({"sweep", "--k", "3"}).out);
}

TEST_CASE("enumeration cap from the environment") {
  const std::vector<std::string> args{"bridge-check", "--k", "3", "--n", "50", "--dist",
                                      R"([["0","1/2"],["1","1/2"]])"};
  ::setenv("TAILMATCH_MAX_ENUM", "10", 1);
  CHECK(run(args).code == kExitPrecondition);
  ::unsetenv("TAILMATCH_MAX_ENUM");
  CHECK(run(args).code == kExitOk);
  CHECK(run({"--max-enum", "10", "bridge-check", "--k", "3", "--n", "50", "--dist", R"([["0","1/2"],["1","1/2"]])"})
            .code == kExitPrecondition);
}
