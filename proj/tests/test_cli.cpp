#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hyperpath/cli/commands.hpp"

namespace fs = std::filesystem;
using hyperpath::cli::run;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  args.insert(args.begin(), "hyperpath");
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  explicit TempDir(const std::string& name) : path_(fs::temp_directory_path() / ("hyperpath_cli_" + name)) {
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name, const std::string& body = {}) const {
    const auto p = path_ / name;
    if (!body.empty()) {
      std::ofstream out(p);
      out << body;
    }
    return p.string();
  }
  std::string str() const { return path_.string(); }

 private:
  fs::path path_;
};

}  // namespace

TEST_CASE("solve exit codes and report fields") {
  TempDir d("solve");
  const auto g = d.file("g.hg", "3 5 3 directed\n0 1 2\n1 2 3\n2 3 4\n");
  auto yes = call({"--json", "solve", "path", g, "-k", "5"});
  CHECK(yes.code == 0);
  const json doc = json::parse(yes.out);
  CHECK(doc["schema"] == "hyperpath.run/1");
  CHECK(doc["decision"]["answer"] == "yes");
  CHECK(doc["instance"]["k"] == 5);
  CHECK(doc["decision"]["method"] == "algebraic");
  CHECK(doc["decision"]["false_negative_bound"] == 0.0);
  CHECK(doc.contains("wall_time_s"));

  auto no = call({"--json", "solve", "cycle", g, "-k", "5"});
  CHECK(no.code == 1);
  CHECK(json::parse(no.out)["decision"]["false_negative_bound"].get<double>() > 0.0);

  auto oracle = call({"solve", "path", g, "-k", "5", "--oracle", "--witness"});
  CHECK(oracle.code == 0);
  CHECK(oracle.out.find("witness: 0 1 2 3 4\n") != std::string::npos);

  auto witness = call({"--json", "solve", "path", g, "-k", "4", "--witness"});
  CHECK(witness.code == 0);
  CHECK(json::parse(witness.out)["witness"].size() == 4);
}

TEST_CASE("text and json output carry the same fields") {
  TempDir d("text");
  const auto g = d.file("g.hg", "3 4 2 directed\n0 1 2\n1 2 3\n");
  const auto j = json::parse(call({"--json", "solve", "path", g, "-k", "4"}).out);
  const auto text = call({"solve", "path", g, "-k", "4"}).out;
  for (const auto& [key, value] : j.items()) {
    if (!value.is_object()) {
      CHECK_MESSAGE(text.find(key + ":") != std::string::npos, key);
      continue;
    }
    for (const auto& [inner, leaf] : value.items()) {
      const std::string path = key + "." + inner;
      CHECK_MESSAGE(text.find(path + ": ") != std::string::npos, path);
    }
  }
}

TEST_CASE("errors exit with 2") {
  TempDir d("errors");
  const auto g = d.file("g.hg", "3 4 2 directed\n0 1 2\n1 2 3\n");
  CHECK(call({"solve", "path", d.file("missing.hg"), "-k", "4"}).code == 2);
  CHECK(call({"solve", "path", g, "-k", "2"}).code == 2);
  CHECK(call({"solve", "path", g}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"--field-degree", "12", "solve", "path", g, "-k", "4"}).code == 2);
  const auto bad = d.file("bad.hg", "3 4 1 directed\n0 1 9\n");
  const auto r = call({"solve", "path", bad, "-k", "3"});
  CHECK(r.code == 2);
  CHECK(r.err.find("error:") != std::string::npos);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("verify") {
  TempDir d("verify");
  const auto g = d.file("g.hg", "3 4 4 directed\n0 1 2\n1 2 3\n2 3 0\n3 0 1\n");
  CHECK(call({"verify", "path", g, d.file("p", "0 1 2 3\n")}).code == 0);
  CHECK(call({"verify", "path", g, d.file("q", "0 2 1 3\n")}).code == 1);
  CHECK(call({"verify", "cycle", g, d.file("c", "# cycle\n0 1 2 3\n")}).code == 0);
  const auto exc = d.file("e.exc", "4 3\n0 1\n2 3\n1 2\n");
  CHECK(call({"verify", "cover", exc, d.file("ok", "0 1\n")}).code == 0);
  CHECK(call({"verify", "cover", exc, d.file("bad", "0 2\n")}).code == 1);
  const auto sp = d.file("s.exc", "4 3 1\n0 1\n2 3\n1 2\n");
  CHECK(call({"verify", "cover", sp, d.file("ok2", "0 1\n")}).code == 1);
}

TEST_CASE("reduce exc-to-khp and path-to-cover") {
  TempDir d("reduce");
  const auto exc = d.file("e.exc", "12 2\n0 1 2 3 4 5\n6 7 8 9 10 11\n");
  const auto r = call({"--json", "reduce", "exc-to-khp", exc, "-o", d.str(), "-r", "3"});
  REQUIRE(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["summary"]["k"] == 29);
  CHECK(doc["summary"]["vertices"] == 34);
  CHECK(fs::exists(d.str() + "/gadget.hg"));
  CHECK(fs::exists(d.str() + "/gadget.map.json"));

  const auto solved = call({"--json", "solve", "path", d.str() + "/gadget.hg", "-k", "29", "--oracle", "--witness",
                            "--force"});
  REQUIRE(solved.code == 0);
  std::string seq;
  const json witness = json::parse(solved.out)["witness"];
  for (const auto& v : witness) seq += std::to_string(v.get<int>()) + " ";
  const auto path_file = d.file("path.txt", seq + "\n");
  const auto back =
      call({"--json", "reduce", "path-to-cover", d.str() + "/gadget.hg", d.str() + "/gadget.map.json", path_file});
  REQUIRE(back.code == 0);
  CHECK(json::parse(back.out)["cover"] == json::array({0, 1}));

  const auto bad = d.file("small.exc", "5 1\n0 1 2 3 4\n");
  const auto fail = call({"reduce", "exc-to-khp", bad, "-o", d.str()});
  CHECK(fail.code == 2);
  CHECK(fail.err.find("Assumption 1") != std::string::npos);
}

TEST_CASE("reduce pad-exc, sp-to-exc and sc-to-sp write their files") {
  TempDir d("reduce2");
  const auto exc = d.file("e.exc", "4 3\n0 1\n2 3\n1 2\n");
  const auto pad = call({"--json", "reduce", "pad-exc", exc, "-o", d.str() + "/pad", "-r", "3"});
  REQUIRE(pad.code == 0);
  CHECK(json::parse(pad.out)["summary"]["kappa"] == 12);
  CHECK(fs::exists(d.str() + "/pad/padded_6.exc"));

  const auto sp = call({"--json", "reduce", "sp-to-exc", exc, "-t", "2", "-o", d.str() + "/sp"});
  REQUIRE(sp.code == 0);
  CHECK(json::parse(sp.out)["summary"]["instances"] == 64);
  CHECK(fs::exists(d.str() + "/sp/colored_63.exc"));
  CHECK(call({"reduce", "sp-to-exc", exc, "-o", d.str() + "/sp2"}).code == 2);

  const auto sc = call({"--json", "reduce", "sc-to-sp", exc, "-o", d.str() + "/sc"});
  REQUIRE(sc.code == 0);
  CHECK(json::parse(sc.out)["summary"]["generated"] == 9);
  CHECK(fs::exists(d.str() + "/sc/closure.exc"));
}

TEST_CASE("gen is deterministic for a fixed seed") {
  TempDir d("gen");
  const auto a = d.file("a.hg");
  const auto b = d.file("b.hg");
  REQUIRE(call({"--seed", "5", "gen", "planted-path", "-o", a, "-r", "3", "-n", "12", "-k", "8"}).code == 0);
  REQUIRE(call({"--seed", "5", "gen", "planted-path", "-o", b, "-r", "3", "-n", "12", "-k", "8"}).code == 0);
  auto slurp = [](const std::string& p) {
    std::ifstream in(p);
    return std::string(std::istreambuf_iterator<char>(in), {});
  };
  CHECK(slurp(a) == slurp(b));
  CHECK(call({"verify", "path", a, a + ".plant"}).code == 0);
  CHECK(call({"solve", "path", a, "-k", "8"}).code == 0);

  const auto c = d.file("c.hg");
  REQUIRE(call({"gen", "planted-cycle", "-o", c, "-r", "3", "-n", "10", "-k", "7", "--undirected"}).code == 0);
  CHECK(call({"verify", "cycle", c, c + ".plant"}).code == 0);
  REQUIRE(call({"gen", "random-exc", "-o", d.file("r.exc"), "-n", "8", "-m", "5"}).code == 0);
  REQUIRE(call({"gen", "random-hypergraph", "-o", d.file("r.hg"), "-n", "8", "-m", "5", "-r", "4"}).code == 0);
}

TEST_CASE("solve output is reproducible apart from timing") {
  TempDir d("repro");
  const auto g = d.file("g.hg");
  REQUIRE(call({"--seed", "3", "gen", "random-hypergraph", "-o", g, "-n", "9", "-m", "14"}).code == 0);
  auto strip = [](std::string s) {
    json j = json::parse(s);
    j.erase("wall_time_s");
    return j;
  };
  const auto x = call({"--json", "--seed", "9", "solve", "path", g, "-k", "6"});
  const auto y = call({"--json", "--seed", "9", "solve", "path", g, "-k", "6"});
  CHECK(x.code == y.code);
  CHECK(strip(x.out) == strip(y.out));
}

TEST_CASE("bench") {
  const auto r = call({"--json", "bench", "--k-min", "6", "--k-max", "7", "--samples", "1", "--trials", "1", "-n", "12",
                       "--plant", "8", "--noise", "5"});
  REQUIRE(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["schema"] == "hyperpath.bench/1");
  CHECK(doc["rows"].size() == 2);
  const auto guard = call({"bench", "--k-min", "39", "--k-max", "40"});
  CHECK(guard.code == 2);
  CHECK(guard.err.find("2^k") != std::string::npos);
}
