#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"
#include "penta/errors.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = penta::cli::run(std::move(args), in, out, err);
  return {code, out.str(), err.str()};
}

std::string last_line(const std::string& text) {
  std::string s = text;
  while (!s.empty() && s.back() == '\n') s.pop_back();
  return s.substr(s.rfind('\n') + 1);
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("penta_cli_test_" + name);
}

}  // namespace

TEST_CASE("ranges") {
  CHECK(penta::cli::parse_range("8") == std::pair{8, 8});
  CHECK(penta::cli::parse_range("5..10") == std::pair{5, 10});
  CHECK_THROWS_AS(penta::cli::parse_range("10..5"), penta::UsageError);
  CHECK_THROWS_AS(penta::cli::parse_range("x"), penta::UsageError);
  CHECK_THROWS_AS(penta::cli::parse_range("5.."), penta::UsageError);
}

TEST_CASE("construct --count") {
  auto r = run({"construct", "--family", "dn", "--n", "6", "--count"});
  CHECK(r.code == 0);
  CHECK(last_line(r.out) == "24");
  r = run({"construct", "--family", "dn", "--n", "7", "--count"});
  CHECK(last_line(r.out) == "41");
  r = run({"construct", "--family", "en", "--n", "6", "--count"});
  CHECK(last_line(r.out) == "18");
  r = run({"construct", "--family", "a11", "--count"});
  CHECK(last_line(r.out) == "144");
  r = run({"construct", "--family", "exc2", "--count"});
  CHECK(last_line(r.out) == "79");
}

TEST_CASE("construct formats and ranges") {
  auto r = run({"construct", "--family", "dn", "--n", "5..7"});
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 3);
  r = run({"construct", "--family", "en", "--n", "5", "--format", "edgelist"});
  CHECK(r.out.rfind("5 9\n", 0) == 0);
  r = run({"construct", "--family", "a8", "--format", "json", "--count"});
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["schema_version"] == 1);
  CHECK(doc["n"] == 8);
  CHECK(doc["c5"] == 60);
  CHECK(doc["edges"].size() == 18);
  r = run({"construct", "--catalog"});
  CHECK(nlohmann::json::parse(r.out).size() == 8);
}

TEST_CASE("construct usage errors") {
  CHECK(run({"construct", "--family", "zz", "--n", "6"}).code == 2);
  CHECK(run({"construct", "--family", "dn"}).code == 2);
  CHECK(run({"construct", "--family", "dn", "--n", "4"}).code == 2);
  CHECK(run({"construct", "--family", "a8", "--n", "9"}).code == 2);
  CHECK(run({"construct", "--family", "dn", "--n", "6", "--format", "dot"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("count") {
  auto r = run({"count", "--k", "3"}, "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
  CHECK(r.code == 0);
  CHECK(r.out == "4\n");
  const std::string d7 = run({"construct", "--family", "dn", "--n", "7"}).out;
  r = run({"count", "--k", "5", "--oracle"}, d7);
  CHECK(r.code == 0);
  CHECK(r.out == "41\n");
  r = run({"count"}, "Dhc\n");  // C5
  CHECK(r.out == "1\n");
  r = run({"count", "--json"}, "Dhc\nC~\n");
  const auto doc = nlohmann::json::parse(r.out);
  REQUIRE(doc.is_array());
  CHECK(doc[0]["c5"] == 1);
  CHECK(doc[1]["c3"] == 4);
  CHECK(doc[1]["per_edge_c5"].size() == 6);
  CHECK(doc[1]["schema_version"] == 1);
}

TEST_CASE("count errors") {
  CHECK(run({"count"}, "not a graph\n").code == 1);
  CHECK(run({"count"}, "").code == 1);
  CHECK(run({"count", "--k", "6"}, "C~").code == 2);
  CHECK(run({"count", "--format", "dot"}, "C~").code == 2);
  CHECK(run({"count", "/nonexistent/file"}).code == 2);
}

TEST_CASE("round trip construct -> count --oracle") {
  for (const char* family : {"dn", "en"}) {
    const std::string graphs = run({"construct", "--family", family, "--n", "5..20"}).out;
    const auto r = run({"count", "--oracle"}, graphs);
    CHECK(r.code == 0);
    CHECK(r.err.empty());
  }
  for (const char* family : {"a8", "a11", "exc0", "exc1", "exc2", "exc3", "exc4", "exc5"}) {
    const std::string g = run({"construct", "--family", family}).out;
    CHECK(run({"count", "--oracle"}, g).code == 0);
  }
}

TEST_CASE("enumerate") {
  auto r = run({"enumerate", "--n", "5"});
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 1);
  r = run({"enumerate", "--n", "6"});
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 2);
  r = run({"enumerate", "--n", "8", "--json"});
  const auto cert = nlohmann::json::parse(r.out);
  CHECK(cert["count"] == 14);
  CHECK(cert["schema_version"] == 1);

  const auto path = temp_file("corpus8.g6");
  r = run({"enumerate", "--n", "8", "--out", path.string(), "--workers", "2"});
  CHECK(r.code == 0);
  std::ifstream f(path);
  std::string line;
  int lines = 0;
  while (std::getline(f, line)) ++lines;
  CHECK(lines == 14);
  std::filesystem::remove(path);

  CHECK(run({"enumerate", "--n", "3"}).code == 2);
  CHECK(run({"enumerate", "--n", "15"}).code == 2);
  CHECK(run({"enumerate", "--n", "6", "--workers", "0"}).code == 2);
}

TEST_CASE("verify") {
  auto r = run({"verify", "--n", "8", "--json", "--workers", "1"});
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["ok"] == true);
  const auto& c = doc["certificates"][0];
  CHECK(c["max_c5"] == 60);
  CHECK(c["extremal"].size() == 2);
  CHECK(c["theorem_match"] == true);

  r = run({"verify", "--n", "5..10"});
  CHECK(r.code == 0);
  CHECK(r.out.find("NO") == std::string::npos);

  r = run({"verify", "--lemmas-only", "--n", "9", "--json"});
  CHECK(r.code == 0);
  const auto lemmas = nlohmann::json::parse(r.out)["certificates"][0]["lemmas"];
  CHECK(lemmas["lemma1"]["violations"] == 0);
  CHECK(lemmas["lemma2"]["violations"] == 0);
  CHECK(lemmas["lemma3"]["violations"] == 0);

  CHECK(run({"verify", "--n", "13"}).code == 2);
  CHECK(run({"verify", "--n", "4"}).code == 2);
}

TEST_CASE("bench keeps non-timing output stable") {
  auto strip = [](nlohmann::json doc) {
    doc.erase("workers");
    for (auto& r : doc["runs"]) r.erase("timing");
    return doc;
  };
  const auto a = nlohmann::json::parse(run({"bench", "--n", "9", "--json", "--workers", "1"}).out);
  const auto b = nlohmann::json::parse(run({"bench", "--n", "9", "--json", "--workers", "8"}).out);
  CHECK(strip(a) == strip(b));
  const auto e = nlohmann::json::parse(run({"bench", "--suite", "enumeration", "--n", "10", "--json"}).out);
  CHECK(e["runs"][0]["results"]["classes"] == 233);
  const auto c = nlohmann::json::parse(run({"bench", "--suite", "counting", "--json"}).out);
  CHECK(c["runs"][0]["timing"].contains("graphs_per_sec"));
  CHECK(run({"bench", "--suite", "io"}).code == 2);
}
