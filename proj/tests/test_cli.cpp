#include <doctest.h>

#include "test_support.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#ifndef NETOBS_CLI_PATH
#error "NETOBS_CLI_PATH must be defined by the build"
#endif

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  const fs::path dir = fs::temp_directory_path() / "netobs_cli_tests";
  fs::create_directories(dir);
  const fs::path out = dir / ("out" + std::to_string(counter) + ".txt");
  const fs::path err = dir / ("err" + std::to_string(counter) + ".txt");
  ++counter;
  const std::string cmd = std::string(NETOBS_CLI_PATH) + " " + args + " > " +
                          out.string() + " 2> " + err.string();
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.code = (status >= 0 && status <= 255) ? status : status >> 8;
  r.out = testsupport::slurp(out.string());
  r.err = testsupport::slurp(err.string());
  return r;
}

std::size_t count_of(const std::string& haystack, const std::string& needle) {
  std::size_t count = 0;
  for (std::size_t pos = haystack.find(needle); pos != std::string::npos;
       pos = haystack.find(needle, pos + needle.size()))
    ++count;
  return count;
}

std::string data(const std::string& name) {
  return testsupport::data_path(name);
}

}  // namespace

TEST_CASE("check exit codes follow the verdict") {
  CHECK(run_cli("check --network " + data("wdn.json") + " --sensors 4,6")
            .code == 0);
  CHECK(run_cli("check --network " + data("wdn.json") + " --sensors 8").code ==
        1);
  CHECK(run_cli("check --network " + data("wdn.json")).code == 1);

  const auto bad = run_cli("check --network " + data("wdn.json") +
                           " --sensors 9");
  CHECK(bad.code == 2);
  CHECK(bad.err.substr(0, 7) == "error: ");
  CHECK(count_of(bad.err, "\n") == 1);  // single-line machine-parsable error

  CHECK(run_cli("check --network " + data("wdn.json") + " --sensors 4,4")
            .code == 2);
  CHECK(run_cli("check --network /does/not/exist.json --sensors 1").code == 2);
}

TEST_CASE("check emits verdict and traces") {
  const auto r = run_cli("check --network " + data("wdn.json") +
                         " --sensors 4,6 --format json");
  CHECK(r.code == 0);
  CHECK(r.out.find("\"observable\": true") != std::string::npos);
  CHECK(r.out.find("\"trace_m\"") != std::string::npos);
  CHECK(r.out.find("\"trace_mbar\"") != std::string::npos);

  const auto t = run_cli("check --network " + data("star.pattern") +
                         " --sensors 1,2,3 --format text");
  CHECK(t.code == 0);
  CHECK(t.out.find("observable: yes") != std::string::npos);
}

TEST_CASE("check with trials produces a cross-validation report") {
  const auto r = run_cli("check --network " + data("wdn.json") +
                         " --sensors 4,6 --trials 25 --seed 5");
  CHECK(r.code == 0);
  CHECK(r.out.find("\"structural\": true") != std::string::npos);
  CHECK(r.out.find("\"passes\": 25") != std::string::npos);
  CHECK(r.out.find("\"failures\": 0") != std::string::npos);
}

TEST_CASE("color reports the rule outcome via the exit code") {
  const auto bad = run_cli("color --network " + data("m_noncolorable.pattern"));
  CHECK(bad.code == 1);
  CHECK(bad.out.empty());  // no forcing happens at all

  const auto good = run_cli("color --network " + data("m_colorable.pattern"));
  CHECK(good.code == 0);
  CHECK(count_of(good.out, "\"forcer\"") == 3);
  CHECK(good.out.find("{\"round\":1,\"forcer\":5,\"forced\":3}") !=
        std::string::npos);
}

TEST_CASE("place returns the fixture solutions") {
  const auto star = run_cli("place --network " + data("star.pattern") +
                            " --costs " + data("star_costs.csv"));
  CHECK(star.code == 0);
  CHECK(star.out.find("\"accepted\"") != std::string::npos);
  CHECK(star.out.find("\"group\": 2") != std::string::npos);
  CHECK(star.out.find("\"k\": 3") != std::string::npos);

  const auto wdn = run_cli("place --network " + data("wdn.json") + " --costs " +
                           data("wdn_costs.csv") + " --format text");
  CHECK(wdn.code == 0);
  CHECK(wdn.out.find("accepted: {4,6} {4,7}") != std::string::npos);
  CHECK(wdn.out.find("terminating group: 4, subset size: 2") !=
        std::string::npos);
}

TEST_CASE("pagerank emits a node,pr,cost csv") {
  const fs::path cycle = fs::temp_directory_path() / "cycle.pattern";
  {
    std::ofstream f(cycle);
    f << "0*0\n00*\n*00\n";  // directed 3-cycle
  }
  const auto r = run_cli("pagerank --network " + cycle.string());
  CHECK(r.code == 0);
  CHECK(r.out.substr(0, 13) == "node,pr,cost\n");
  CHECK(count_of(r.out, "0.333333333333") == 3);

  const auto physical =
      run_cli("pagerank --network " + data("wdn.json") + " --graph physical");
  CHECK(physical.code == 0);
  CHECK(count_of(physical.out, "\n") == 5);  // header + 4 nodes
}

TEST_CASE("oracle reports the recomputed minima") {
  const auto star = run_cli("oracle --network " + data("star.pattern"));
  CHECK(star.code == 0);
  CHECK(star.out.find("\"min_k\": 2") != std::string::npos);

  const auto wdn = run_cli("oracle --network " + data("wdn.json"));
  CHECK(wdn.code == 0);
  CHECK(wdn.out.find("\"min_k\": 2") != std::string::npos);
}

TEST_CASE("simulate from the fixture equilibrium stays constant") {
  const auto r = run_cli("simulate --network " + data("wdn.json") +
                         " --x0 1,1,1,1,5,4,3,9 --steps 10 --dt 0.001");
  CHECK(r.code == 0);
  CHECK(r.out.substr(0, 2) == "t,");
  CHECK(count_of(r.out, "\n") == 12);  // header + 11 rows
  CHECK(count_of(r.out, ",1,1,1,1,5,4,3,9") == 11);
}

TEST_CASE("export-dot solid and dashed edge counts") {
  const auto stalled = run_cli("export-dot --network " + data("m_noncolorable.pattern"));
  CHECK(stalled.code == 0);
  CHECK(count_of(stalled.out, "->") == 9);
  CHECK(count_of(stalled.out, "style=dashed") == 1);

  const auto star = run_cli("export-dot --network " + data("star.pattern") +
                            " --sensors 1,2,3");
  CHECK(star.code == 0);
  CHECK(count_of(star.out, "shape=circle") == 5);
  CHECK(count_of(star.out, "shape=star") == 3);
  CHECK(count_of(star.out, "fillcolor=\"gray25\"") == 8);  // colorable: all

  const fs::path empty = fs::temp_directory_path() / "empty.pattern";
  {
    std::ofstream f(empty);
    f << "00\n00\n";
  }
  const auto none = run_cli("export-dot --network " + empty.string());
  CHECK(none.code == 0);
  CHECK(count_of(none.out, "->") == 0);
  CHECK(none.out.find("digraph") != std::string::npos);
}

TEST_CASE("outputs are byte-identical across runs") {
  const auto a = run_cli("place --network " + data("wdn.json") + " --costs " +
                         data("wdn_costs.csv"));
  const auto b = run_cli("place --network " + data("wdn.json") + " --costs " +
                         data("wdn_costs.csv"));
  CHECK(a.out == b.out);

  const auto c = run_cli("check --network " + data("wdn.json") +
                         " --sensors 4,6 --trials 50 --seed 9");
  const auto d = run_cli("check --network " + data("wdn.json") +
                         " --sensors 4,6 --trials 50 --seed 9");
  CHECK(c.out == d.out);
}
