#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "raag/cli.hpp"
#include "raag/graph_io.hpp"

using namespace raag;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    static int counter = 0;
    path = fs::temp_directory_path() / ("raag_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  fs::path write(const std::string& name, const std::string& content) const {
    std::ofstream(path / name) << content;
    return path / name;
  }
};

}  // namespace

TEST_CASE("exit codes") {
  CHECK(run({"validate", "--family", "cycle:5"}).code == kOk);
  CHECK(run({"analyze", "--family", "nmtree:2,2"}).code == kOk);
  CHECK(run({"frobnicate"}).code == kParse);
  CHECK(run({"analyze", "--family", "cube:3"}).code == kParse);
  CHECK(run({"analyze", "/nonexistent/graph.txt"}).code == kIo);
  CHECK(run({"verify", "kernel", "--family", "spider:2"}).code == kOk);
  CHECK(run({"verify", "nothing", "--family", "spider:2"}).code == kParse);
  CHECK(run({"reduce", "--family", "cycle:4", "c1 z"}).code == kParse);
  CHECK(run({"--help"}).code == kOk);

  TempDir dir;
  auto tri = dir.write("tri.txt", "a b\nb c\nc a\n");
  CHECK(run({"validate", tri.string()}).code == kFail);
  auto a = run({"analyze", tri.string()});
  CHECK(a.code == kFail);
  CHECK(a.out.find("admissible: no") != std::string::npos);
  CHECK(run({"verify", "joins", tri.string()}).code == kFail);
}

TEST_CASE("analyze JSON report") {
  auto r = run({"--format", "json", "analyze", "--family", "nmtree:2,3"});
  REQUIRE(r.code == kOk);
  auto j = json::parse(r.out);
  for (const char* key : {"graph", "validation", "structure", "generators", "bounds", "verifications", "warnings"})
    CHECK(j.contains(key));
  CHECK(j["bounds"]["vcd_lower"] == 13);
  CHECK(j["bounds"]["vcd_upper_better"] == 13);
  CHECK(j["bounds"]["vcd_exact"] == 13);
  CHECK(j["bounds"]["rank_G"] == 13);
  CHECK(j["structure"]["V0"] == json::array({"v", "w"}));
  CHECK(j["generators"]["symmetries"]["q"] == 1);

  auto after = run({"analyze", "--family", "nmtree:2,3", "--format", "json"});
  CHECK(after.out == r.out);
  CHECK(run({"--format", "json", "analyze", "--family", "nmtree:2,3"}).out == r.out);

  auto star = json::parse(run({"--format", "json", "analyze", "--family", "path:3"}).out);
  CHECK(star["bounds"]["rank_G"].is_null());
  CHECK(star["structure"]["star"] == true);

  auto skipped = json::parse(run({"--format", "json", "analyze", "--family", "cycle:5", "--skip-symmetries"}).out);
  CHECK(skipped["generators"]["symmetries"].contains("skipped"));
}

TEST_CASE("symmetry limit from the environment") {
  ::setenv("RAAG_MAX_SYM_VERTICES", "4", 1);
  auto j = json::parse(run({"--format", "json", "analyze", "--family", "cycle:5"}).out);
  ::unsetenv("RAAG_MAX_SYM_VERTICES");
  CHECK(j["generators"]["symmetries"].contains("skipped"));
  CHECK(j["bounds"]["vcd_exact"] == 0);
}

TEST_CASE("graph JSON round trip") {
  TempDir dir;
  auto file = dir.write("g.txt", "a b\nb c\nc d\nd a\nd e\n");
  auto first = json::parse(run({"--format", "json", "analyze", file.string()}).out);
  auto copy = dir.write("g.json", first["graph"].dump());
  auto second = json::parse(run({"--format", "json", "analyze", copy.string()}).out);
  CHECK(first == second);
}

TEST_CASE("reduce and apply") {
  CHECK(run({"reduce", "--family", "cycle:4", "c1 c2 c1^-1"}).out == "c2\n");
  CHECK(run({"reduce", "--family", "cycle:4", "c1 c3 c1^-1"}).out == "c1 c3 c1^-1\n");
  auto steps = run({"reduce", "--family", "cycle:4", "c1 c2 c1^-1", "--show-steps"});
  CHECK(steps.out == "cancel c1 at 0 with c1^-1 at 2\nc2\n");
  auto j = json::parse(run({"--format", "json", "reduce", "--family", "cycle:4", "c2 c1", "--show-steps"}).out);
  CHECK(j["normal_form"] == "c1 c2");
  CHECK(j["steps"].empty());

  CHECK(run({"apply", "--family", "spider:2", "pc(v; a b)", "b"}).out == "v b v^-1\n");
  CHECK(run({"apply", "--family", "path:3", "tv(p1<-p1*p2)", "p1 p3"}).out == "p1 p2 p3\n");
  CHECK(run({"apply", "--family", "path:3", "bogus(p1)", "p1"}).code == kParse);

  TempDir dir;
  auto file = dir.write("p.txt", "a b\nb c\n");
  CHECK(run({"reduce", file.string(), "b a"}).out == "a b\n");
  CHECK(run({"apply", file.string(), "inv(a)", "a b"}).out == "a^-1 b\n");
}

TEST_CASE("verify suites") {
  for (const char* suite : {"kernel", "commute", "joins", "symmetries", "words"}) {
    auto r = run({"verify", suite, "--family", "spider:2"});
    CHECK_MESSAGE(r.code == kOk, suite);
    CHECK(r.out.find(" 0 failed") != std::string::npos);
  }
  auto j = json::parse(
      run({"--format", "json", "verify", "joins", "--family", "spider:2", "--aut", "pc(v; a b)", "--aut", "inv(a)"})
          .out);
  REQUIRE(j["verifications"].is_array());
  CHECK(j["verifications"].size() == 6);
  for (const auto& c : j["verifications"]) CHECK(c["status"] == "pass");
  CHECK(run({"verify", "words", "--family", "cycle:5", "--pairs", "50", "--seed", "9"}).code == kOk);
}

TEST_CASE("duplicate edges are reported as warnings") {
  TempDir dir;
  auto file = dir.write("dup.txt", "a b\nb c\nb a\nc d\n");
  auto r = run({"validate", file.string()});
  CHECK(r.code == kOk);
  CHECK(r.out.find("warning: duplicate edge") != std::string::npos);
  auto j = json::parse(run({"--format", "json", "analyze", file.string()}).out);
  CHECK(j["warnings"].size() == 1);
}

TEST_CASE("batch over a directory") {
  TempDir dir;
  dir.write("b_square.txt", "a b\nb c\nc d\nd a\n");
  dir.write("a_tri.txt", "a b\nb c\nc a\n");
  dir.write("c_bad.txt", "a b c\n");
  auto r = run({"--format", "json", "batch", dir.path.string(), "--jobs", "3"});
  CHECK(r.code == kFail);
  auto rows = json::parse(r.out);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0]["name"] == "a_tri");
  CHECK(rows[0]["status"] == "rejected");
  CHECK(rows[1]["name"] == "b_square");
  CHECK(rows[1]["status"] == "ok");
  CHECK(rows[1]["exact"] == 2);
  CHECK(rows[2]["status"].get<std::string>().starts_with("parse error"));
  CHECK(fs::exists(dir.path / "b_square.report.json"));
  CHECK(fs::exists(dir.path / "a_tri.report.json"));
  for (const auto& e : fs::directory_iterator(dir.path)) CHECK(e.path().extension() != ".tmp");

  auto single = run({"--format", "json", "batch", dir.path.string(), "--jobs", "1"});
  CHECK(single.out == r.out);

  TempDir empty;
  auto e = run({"batch", empty.path.string()});
  CHECK(e.code == kOk);
}

TEST_CASE("batch over a manifest") {
  TempDir dir;
  dir.write("pent.txt", "a b\nb c\nc d\nd e\ne a\n");
  auto manifest = dir.write("list.txt", "# corpus\npent.txt\nfamily:nmtree:2,3\nfamily:join:3,4\n");
  auto r = run({"batch", manifest.string(), "--jobs", "2"});
  CHECK(r.code == kOk);
  auto lines = std::count(r.out.begin(), r.out.end(), '\n');
  CHECK(lines == 4);
  CHECK(r.out.find("nmtree_2_3") < r.out.find("join_3_4"));
  CHECK(fs::exists(dir.path / "nmtree_2_3.report.json"));
  auto report = json::parse(std::ifstream(dir.path / "join_3_4.report.json"));
  CHECK(report["bounds"]["vcd_exact"] == 8);

  CHECK(run({"batch", (dir.path / "missing.txt").string()}).code == kIo);
}
