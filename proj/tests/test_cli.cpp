// End-to-end tests that spawn the CLI binary (path injected by CMake).

#include <cstdlib>
#include <filesystem>
#include <string>

#include <unistd.h>

#include <doctest.h>

#include "dirset/io.hpp"

namespace fs = std::filesystem;

namespace {

const std::string kCli = DIRSET_CLI_PATH;

struct Sandbox {
  fs::path dir;
  Sandbox() {
    dir = fs::temp_directory_path() / ("dirset_cli_test_" + std::to_string(::getpid()));
    fs::remove_all(dir);
    fs::create_directories(dir);
  }
  ~Sandbox() { fs::remove_all(dir); }
  std::string path(const std::string& name) const { return (dir / name).string(); }
};

int run(const std::string& args) {
  const std::string cmd = kCli + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) { return dirset::read_text_file(path); }

}  // namespace

TEST_CASE("gen -> dirs -> caps -> cover -> classify round trip") {
  Sandbox box;
  REQUIRE(run("gen circle --n 8 --out " + box.path("c.csv")) == 0);
  REQUIRE(run("dirs " + box.path("c.csv") + " --out " + box.path("d.json")) == 0);
  REQUIRE(run("caps " + box.path("d.json") + " --out " + box.path("cap.json")) == 0);
  REQUIRE(run("cover " + box.path("d.json") + " --eps 0.3927 --out " + box.path("cert.json")) ==
          0);
  REQUIRE(run("classify " + box.path("c.csv") + " --out " + box.path("cls.json")) == 0);

  const dirset::DirectionSet ds = dirset::direction_set_from_json_file(box.path("d.json"));
  CHECK(ds.projective.size() == 8);
  CHECK(ds.pairs_examined == 28);

  const dirset::CapReport cap = dirset::cap_report_from_json_file(box.path("cap.json"));
  CHECK(cap.radius > 0.19);
  CHECK(cap.radius < 0.20);

  CHECK(slurp(box.path("cert.json")).find("\"covered\": true") != std::string::npos);
  CHECK(slurp(box.path("cls.json")).find("\"tool_version\"") != std::string::npos);
}

TEST_CASE("outputs embed their regeneration config") {
  Sandbox box;
  REQUIRE(run("gen circle --n 8 --out " + box.path("c.csv")) == 0);
  REQUIRE(run("dirs " + box.path("c.csv") + " --tol 1e-9 --out " + box.path("d.json")) == 0);
  const std::string text = slurp(box.path("d.json"));
  CHECK(text.find("\"config_echo\"") != std::string::npos);
  CHECK(text.find("\"input\"") != std::string::npos);
  CHECK(text.find("\"tol\"") != std::string::npos);
  CHECK(text.find("\"pair_budget\": \"none\"") != std::string::npos);
}

TEST_CASE("repeated runs and thread counts give identical bytes") {
  Sandbox box;
  REQUIRE(run("gen random_ball --n 40 --dim 3 --seed 5 --out " + box.path("b.csv")) == 0);
  REQUIRE(run("--threads 1 dirs " + box.path("b.csv") + " --out " + box.path("d1.json")) == 0);
  REQUIRE(run("--threads 8 dirs " + box.path("b.csv") + " --out " + box.path("d8.json")) == 0);
  CHECK(slurp(box.path("d1.json")) == slurp(box.path("d8.json")));

  REQUIRE(run("--threads 1 classify " + box.path("b.csv") + " --out " + box.path("c1.json")) ==
          0);
  REQUIRE(run("--threads 8 classify " + box.path("b.csv") + " --out " + box.path("c8.json")) ==
          0);
  CHECK(slurp(box.path("c1.json")) == slurp(box.path("c8.json")));

  REQUIRE(run("gen random_ball --n 40 --dim 3 --seed 5 --out " + box.path("b2.csv")) == 0);
  CHECK(slurp(box.path("b.csv")) == slurp(box.path("b2.csv")));
}

TEST_CASE("slopes, refine and plot subcommands") {
  Sandbox box;
  REQUIRE(run("gen absolute_value --n 101 --out " + box.path("v.csv")) == 0);
  REQUIRE(run("slopes " + box.path("v.csv") + " --M 1 --eps 0.4 --out " + box.path("s.csv")) ==
          0);
  const std::string slopes = slurp(box.path("s.csv"));
  CHECK(slopes.rfind("slope\n", 0) == 0);

  REQUIRE(run("refine weierstrass --a 0.5 --b 3 --depths 4..6 --out " + box.path("t.csv")) == 0);
  const std::string table = slurp(box.path("t.csv"));
  CHECK(table.rfind("depth,n,max_abs_slope,fill_eps,M\n", 0) == 0);
  CHECK(table.find("\n4,17,") != std::string::npos);

  REQUIRE(run("dirs " + box.path("v.csv") + " --out " + box.path("d.json")) == 0);
  REQUIRE(run("plot " + box.path("d.json") + " --out " + box.path("ring.svg")) == 0);
  REQUIRE(run("plot " + box.path("s.csv") + " --out " + box.path("hist.svg")) == 0);
  CHECK(slurp(box.path("ring.svg")).rfind("<svg", 0) == 0);
  CHECK(slurp(box.path("hist.svg")).rfind("<svg", 0) == 0);

  // d=3 scatter renders too.
  REQUIRE(run("gen random_ball --n 12 --dim 3 --out " + box.path("b.csv")) == 0);
  REQUIRE(run("dirs " + box.path("b.csv") + " --out " + box.path("d3.json")) == 0);
  REQUIRE(run("plot " + box.path("d3.json") + " --out " + box.path("sc.svg")) == 0);
  CHECK(slurp(box.path("sc.svg")).find("orthographic") != std::string::npos);
}

TEST_CASE("exit codes distinguish validation from computation") {
  Sandbox box;
  CHECK(run("gen nonsense --out " + box.path("x.csv")) == 2);
  CHECK(run("gen circle --out " + box.path("x.csv")) == 2);  // missing --n
  CHECK(run("gen weierstrass --a 1.5 --b 3 --depth 4 --out " + box.path("x.csv")) == 2);
  CHECK(run("dirs " + box.path("no_such_file.csv") + " --out " + box.path("y.json")) == 2);
  CHECK(run("bogus_subcommand") == 2);

  REQUIRE(run("gen circle --n 8 --out " + box.path("c.csv")) == 0);
  REQUIRE(run("dirs " + box.path("c.csv") + " --out " + box.path("d.json")) == 0);
  CHECK(run("cover " + box.path("d.json") + " --eps 0.1 --net-density 0.06 --out " +
            box.path("z.json")) == 2);

  // Oriented flag round trip.
  REQUIRE(run("dirs " + box.path("c.csv") + " --oriented --out " + box.path("do.json")) == 0);
  const dirset::DirectionSet ds = dirset::direction_set_from_json_file(box.path("do.json"));
  CHECK(ds.oriented_included);
  CHECK(ds.oriented.size() == 56);
}

TEST_CASE("pair budget is echoed and respected") {
  Sandbox box;
  REQUIRE(run("gen random_ball --n 30 --dim 2 --seed 1 --out " + box.path("b.csv")) == 0);
  REQUIRE(run("dirs " + box.path("b.csv") + " --pair-budget 50 --seed 9 --out " +
              box.path("d.json")) == 0);
  const dirset::DirectionSet ds = dirset::direction_set_from_json_file(box.path("d.json"));
  CHECK(ds.pairs_examined == 50);
  CHECK(slurp(box.path("d.json")).find("\"pair_budget\": \"50\"") != std::string::npos);
}
