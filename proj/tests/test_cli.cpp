#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "tatami/cli.hpp"
#include "tatami/core.hpp"
#include "tatami/structure.hpp"

using namespace tatami;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> split_blocks(const std::string& text) {
  std::vector<std::string> blocks;
  std::string current;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (line.empty()) {
      if (!current.empty()) blocks.push_back(current);
      current.clear();
    } else {
      current += line + '\n';
    }
  }
  if (!current.empty()) blocks.push_back(current);
  return blocks;
}

// True if b is a single diagonal flip away from a.
bool one_flip_apart(const Tiling& a, const Tiling& b) {
  for (const Diagonal& d : find_flippable_diagonals(a)) {
    if (flip_diagonal(a, d) == b) return true;
  }
  return false;
}

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("tatami_cli_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

fs::path write_file(const fs::path& dir, const std::string& name, const std::string& text) {
  const fs::path p = dir / name;
  std::ofstream(p, std::ios::binary) << text;
  return p;
}

}  // namespace

TEST_CASE("closed forms") {
  CHECK(run({"count", "--n", "8", "--m", "2"}).out == "32\n");
  CHECK(run({"count", "--n", "5", "--m", "2"}).out == "0\n");
  CHECK(run({"count", "--n", "4"}).out == "0\t2\n2\t32\n4\t32\n");
  CHECK(run({"total", "--n", "5"}).out == "178\n");
  CHECK(run({"total", "--n", "80"}).out == "142653246714526242615328770\n");
  CHECK(run({"distance", "--n", "4", "--k", "1"}).out == "24\n");
  CHECK(run({"compositions", "--n", "5"}).out == "178\n");
}

TEST_CASE("verify") {
  const Result r = run({"verify", "--max-n", "4"});
  CHECK(r.code == 0);
  const auto lines = split_blocks(r.out);
  REQUIRE(lines.size() == 1);
  std::istringstream in(lines[0]);
  std::string header;
  std::getline(in, header);
  CHECK(header == "n\tm\toracle\tformula\tconstructive");
  int rows = 0;
  for (std::string line; std::getline(in, line); ++rows) {
    std::istringstream row(line);
    std::uint64_t n, m, a, b, c;
    row >> n >> m >> a >> b >> c;
    CHECK(a == b);
    CHECK(b == c);
  }
  CHECK(rows == 8);
}

TEST_CASE("gray generation through the command line") {
  const Result r = run({"gen-max", "--n", "6", "--gray"});
  REQUIRE(r.code == 0);
  const auto blocks = split_blocks(r.out);
  REQUIRE(blocks.size() == 48);
  std::set<std::string> distinct(blocks.begin(), blocks.end());
  CHECK(distinct.size() == 48);
  for (std::size_t i = 1; i < blocks.size(); ++i) {
    const Tiling a = decode(blocks[i - 1]);
    const Tiling b = decode(blocks[i]);
    CHECK(is_tatami(b));
    CHECK(one_flip_apart(a, b));
  }
}

TEST_CASE("generation") {
  const Result r = run({"gen", "--n", "5", "--m", "3"});
  CHECK(r.code == 0);
  const auto blocks = split_blocks(r.out);
  CHECK(blocks.size() == 88);
  for (const auto& b : blocks) CHECK(is_tatami(decode(b)));

  CHECK(split_blocks(run({"gen", "--n", "4", "--m", "4"}).out).size() == 32);
  CHECK(split_blocks(run({"gen-max", "--n", "5"}).out).size() == 80);
  CHECK(split_blocks(run({"gen-max", "--n", "5", "--fixed-corners"}).out).size() == 20);
  CHECK(run({"gen", "--n", "5", "--m", "2"}).out.empty());

  const Result svg = run({"gen", "--n", "3", "--m", "1", "--format", "svg"});
  CHECK(svg.code == 0);
  std::size_t docs = 0;
  for (std::size_t p = svg.out.find("<svg"); p != std::string::npos; p = svg.out.find("<svg", p + 1)) ++docs;
  CHECK(docs == 10);
}

TEST_CASE("generation into a directory") {
  const fs::path dir = scratch_dir("gen");
  const Result r = run({"gen", "--n", "3", "--m", "1", "--out", dir.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::size_t files = 0;
  for (const auto& entry : fs::directory_iterator(dir)) {
    ++files;
    std::ifstream in(entry.path());
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(is_tatami(decode(buf.str())));
  }
  CHECK(files == 10);
  fs::remove_all(dir);
}

TEST_CASE("validate and render files") {
  const fs::path dir = scratch_dir("files");
  const auto good = write_file(dir, "good.tatami", "tatami v1\nn 2\nH 0 0\nH 0 1\n");
  const auto bad = write_file(dir, "bad.tatami", "tatami v1\nn 2\nM 0 0\nM 1 0\nM 0 1\nM 1 1\n");
  const auto broken = write_file(dir, "broken.tatami", "tatami v1\nn 2\nH 0 0\n");

  const Result ok = run({"validate", good.string()});
  CHECK(ok.code == 0);
  CHECK(ok.out == "ok n=2 monomers=0\nHBidimer (1, 1)\n");

  const Result violation = run({"validate", bad.string()});
  CHECK(violation.code == 1);
  CHECK(violation.out == "four tiles meet at (1, 1)\n");

  CHECK(run({"validate", broken.string()}).code == 1);
  CHECK(run({"validate", (dir / "missing").string()}).code == 1);

  const Result pic = run({"render", good.string(), "--format", "ascii", "--ascii-only"});
  CHECK(pic.code == 0);
  CHECK(pic.out == "+---+\n|   |\n+---+\n|   |\n+---+\n");
  const Result svg = run({"render", good.string(), "--format", "svg", "--cell-size", "10", "--highlight"});
  CHECK(svg.code == 0);
  CHECK(svg.out.find("tile hdimer highlight") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("ternary representations") {
  const Result r = run({"decode-rep", "--n", "6", "(1,0)·(0,0)"});
  CHECK(r.code == 0);
  CHECK(is_tatami(decode(r.out)));
  CHECK(run({"decode-rep", "--n", "6", "(1,-1).(0,0)"}).code == 1);
  CHECK(run({"decode-rep", "--n", "6", "(1,0,0)"}).code == 1);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"count"}).code == 2);
  CHECK(run({"count", "--n", "3", "--bogus"}).code == 2);
  CHECK(run({"gen", "--n", "3", "--m", "1", "--format", "png"}).code == 2);
  CHECK(run({"render", "x", "--cell-size", "0"}).code == 2);

  CHECK(run({"count", "--n", "0", "--m", "0"}).code == 1);
  CHECK(run({"distance", "--n", "4", "--k", "4"}).code == 1);
  CHECK(run({"gen-max", "--n", "7", "--gray"}).code == 1);
  CHECK(run({"gen", "--n", "3", "--m", "5"}).code == 1);
  CHECK(run({"verify", "--max-n", "9"}).code == 1);

  const Result help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("gen-max") != std::string::npos);
}
