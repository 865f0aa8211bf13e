#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "kauffman/cli.hpp"

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = kauffman::cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("check decides identities and sets the exit code") {
  RunResult holds = run_cli({"check", "--monoid", "K4", "xxyx = xyxx"});
  CHECK(holds.code == 0);
  CHECK(holds.out == "HOLDS\n");

  RunResult fails = run_cli({"check", "--monoid", "K4", "xy = yx"});
  CHECK(fails.code == 1);
  CHECK(fails.out == "FAILS K4 Y={} condition=first-letter\n");

  RunResult k3 = run_cli({"check", "--monoid", "K3", "x^3 = x^2"});
  CHECK(k3.code == 1);
  CHECK(contains(k3.out, "FAILS K3"));

  CHECK(run_cli({"check", "xxyx = xyxx"}).code == 0);  // K4 is the default
}

TEST_CASE("check against the finite Jones monoids") {
  CHECK(run_cli({"check", "--monoid", "J3", "x^2 = x"}).code == 0);
  RunResult j4 = run_cli({"check", "--monoid", "J4", "x^2 = x"});
  CHECK(j4.code == 1);
  CHECK(contains(j4.out, "condition=factor-set"));
  CHECK(run_cli({"check", "--monoid", "J4", "x^3 = x^2"}).code == 0);
  RunResult j5 = run_cli({"check", "--monoid", "Jn:5", "x^2 = x"});
  CHECK(j5.code == 1);
  CHECK(contains(j5.out, "FAILS J5 sub={x->{n: 5,"));
}

TEST_CASE("check via the falsifier never claims to prove") {
  RunResult k5 = run_cli({"check", "--monoid", "Kn:5", "--budget", "10000", "xxyx = xyxx"});
  CHECK(k5.code == 1);
  CHECK(contains(k5.out, "FAILS K5 sub={x->{n: 5, pairs:"));
  CHECK(contains(k5.out, "y->{n: 5, pairs:"));

  RunResult k4 = run_cli({"check", "--monoid", "Kn:4", "--budget", "2000", "xxyx = xyxx"});
  CHECK(k4.code == 0);
  CHECK(k4.out == "NO-COUNTEREXAMPLE budget=2000\n");

  RunResult json = run_cli({"check", "--monoid", "Kn:4", "--budget", "500", "--json", "x = x"});
  CHECK(json.code == 0);
  auto parsed = nlohmann::json::parse(json.out);
  CHECK(parsed["holds"].is_null());
  CHECK(parsed["budget"] == 500);
  CHECK(parsed["monoid"] == "K4");
}

TEST_CASE("check against rees matrix semigroups over abelian groups") {
  RunResult comm = run_cli({"check", "--monoid", "RMS", "xy = yx"});
  CHECK(comm.code == 1);
  CHECK(comm.out == "FAILS RMS sub={x->(1,e,1),y->(2,e,2)} lhs=(1,c,2) rhs=(2,e,1)\n");

  RunResult idem = run_cli({"check", "--monoid", "RMS", "xx = x"});
  CHECK(idem.code == 1);
  CHECK(idem.out == "FAILS RMS sub={x->(2,e,1)} lhs=(2,c,1) rhs=(2,e,1)\n");

  CHECK(run_cli({"check", "--monoid", "RMS", "x^2yx = xyx^2"}).code == 0);
}

TEST_CASE("json verdicts") {
  RunResult r = run_cli({"check", "--json", "--monoid", "K4", "xy = yx"});
  CHECK(r.code == 1);
  auto parsed = nlohmann::json::parse(r.out);
  CHECK(parsed["holds"] == false);
  CHECK(parsed["witness"]["condition"] == "first-letter");
}

TEST_CASE("multiply in coordinates and in the wire algebra") {
  RunResult sq = run_cli({"multiply", "--rank", "4", "h1", "h1"});
  CHECK(sq.code == 0);
  CHECK(sq.out == "{n: 4, pairs: [[1,2],[3,\"3'\"],[4,\"4'\"],[\"1'\",\"2'\"]], circles: 1}\n");

  RunResult down = run_cli({"multiply", "--rank", "2", "d"});
  CHECK(down.code == 0);
  CHECK(down.out == "{n: 2, pairs: [[1,\"1'\"],[2,\"2'\"]], circles: -1}\n");
  CHECK(run_cli({"multiply", "--rank", "2", "d", "c"}).out ==
        "{n: 2, pairs: [[1,\"1'\"],[2,\"2'\"]], circles: 0}\n");

  // a literal operand fixes the rank and allows crossings
  RunResult crossed = run_cli({"multiply",
                               "{n: 2, pairs: [[1,\"2'\"],[2,\"1'\"]]}",
                               "{n: 2, pairs: [[1,\"2'\"],[2,\"1'\"]]}"});
  CHECK(crossed.code == 0);
  CHECK(crossed.out == "{n: 2, pairs: [[1,\"1'\"],[2,\"2'\"]], circles: 0}\n");

  RunResult mixed = run_cli({"multiply", "{n: 4, pairs: [[1,2],[3,\"3'\"],[4,\"4'\"],"
                             "[\"1'\",\"2'\"]], circles: 0}", "h1"});
  CHECK(mixed.code == 0);
  CHECK(contains(mixed.out, "circles: 1"));

  CHECK(run_cli({"multiply", "h1", "h2"}).code == 2);  // no rank to infer
  RunResult negative = run_cli({"multiply", "--rank", "2",
                                "{n: 2, pairs: [[1,\"1'\"],[2,\"2'\"]]}", "d"});
  CHECK(negative.code == 2);
  CHECK(contains(negative.err, "negative circles"));
}

TEST_CASE("enumerate counts jones elements") {
  RunResult n4 = run_cli({"enumerate", "4"});
  CHECK(n4.code == 0);
  CHECK(n4.out == "14\n");

  RunResult listed = run_cli({"enumerate", "3", "--elements"});
  CHECK(listed.code == 0);
  std::istringstream lines(listed.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    ++count;
    if (count > 1) {
      CHECK(line.substr(0, 5) == "{n: 3");
    }
  }
  CHECK(count == 6);

  CHECK(run_cli({"enumerate", "9"}).code == 2);
}

TEST_CASE("verification suites") {
  RunResult catalan = run_cli({"verify", "catalan", "--max", "7"});
  CHECK(catalan.code == 0);
  CHECK(contains(catalan.out, "PASS"));
  CHECK(contains(catalan.out, "429"));
  CHECK(!contains(catalan.out, "FAIL"));

  RunResult cutting = run_cli({"verify", "cutting-j4"});
  CHECK(cutting.code == 0);
  CHECK(contains(cutting.out, "169"));

  CHECK(run_cli({"verify", "k5-counterexample"}).code == 0);
  CHECK(run_cli({"verify", "structure-j4"}).code == 0);

  RunResult unknown = run_cli({"verify", "nonsense"});
  CHECK(unknown.code == 2);
  CHECK(contains(unknown.err, "error:"));
}

TEST_CASE("render draws hooks") {
  RunResult ascii = run_cli({"render", "--rank", "4", "h1"});
  CHECK(ascii.code == 0);
  CHECK(ascii.out ==
        "1 \\   / 1\n"
        "2 /   \\ 2\n"
        "3 ----- 3\n"
        "4 ----- 4\n"
        "circles: 0\n");

  RunResult svg = run_cli({"render", "--format", "svg", "--rank", "4", "h1"});
  CHECK(svg.code == 0);
  CHECK(svg.out.rfind("<svg", 0) == 0);

  RunResult literal = run_cli({"render", "{n: 2, pairs: [[1,2],[\"1'\",\"2'\"]], circles: 1}"});
  CHECK(literal.code == 0);
  CHECK(contains(literal.out, "O\n"));

  CHECK(run_cli({"render", "h1"}).code == 2);
  CHECK(run_cli({"render", "--format", "png", "--rank", "4", "h1"}).code == 2);
}

TEST_CASE("usage errors and help") {
  RunResult help = run_cli({"--help"});
  CHECK(help.code == 0);
  CHECK(contains(help.out, "check"));
  CHECK(contains(help.out, "render"));

  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({"check"}).code == 2);

  RunResult bad_identity = run_cli({"check", "xy = "});
  CHECK(bad_identity.code == 2);
  CHECK(contains(bad_identity.err, "at position 5"));

  RunResult bad_monoid = run_cli({"check", "--monoid", "Q8", "x = x"});
  CHECK(bad_monoid.code == 2);
  CHECK(contains(bad_monoid.err, "unknown monoid"));
}

TEST_CASE("installed binary honors the exit-code contract") {
  const char* binary = std::getenv("KAUFFMAN_CLI");
  if (binary == nullptr) {
    MESSAGE("KAUFFMAN_CLI not set; binary smoke test skipped");
    return;
  }
  std::string base = "\"" + std::string(binary) + "\"";
  auto exit_code = [&](const std::string& argv_tail) {
    int status = std::system((base + " " + argv_tail + " > /dev/null 2>&1").c_str());
    REQUIRE(status != -1);
    return WEXITSTATUS(status);
  };
  CHECK(exit_code("check \"xxyx = xyxx\"") == 0);
  CHECK(exit_code("check \"xy = yx\"") == 1);
  CHECK(exit_code("check \"xy = \"") == 2);
  CHECK(exit_code("verify catalan --max 5") == 0);
  CHECK(exit_code("--help") == 0);
  CHECK(exit_code("") == 2);
}
