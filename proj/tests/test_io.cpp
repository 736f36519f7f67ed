#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "mnchain/io.hpp"

using namespace mnchain;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct TempDir {
  fs::path path;
  TempDir() {
    static int counter = 0;
    path = fs::temp_directory_path() /
           ("mnchain-io-test-" + std::to_string(counter++));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_SUITE("io") {

TEST_CASE("doubles round-trip through the formatter") {
  for (double v : {0.0, 1.0 / 3.0, -2.718281828459045e-7, 6.62607015e34}) {
    CHECK(std::stod(format_double(v)) == v);
  }
}

TEST_CASE("csv writer emits a config comment, header, and rows") {
  TempDir tmp;
  fs::path file = tmp.path / "table.csv";
  ConfigMap cfg{{"L", 4LL}, {"t", 1.5}, {"periodic", false}, {"mode", std::string("x")}};
  {
    CsvWriter w(file.string(), {"a", "b"}, cfg);
    w.write_row(std::vector<double>{1.0, 0.5});
    w.write_row(std::vector<std::string>{"text", "cell"});
    w.finish();
  }
  std::string content = slurp(file);
  CHECK(content.find("# ") == 0);
  CHECK(content.find("L=4") != std::string::npos);
  CHECK(content.find("a,b\n") != std::string::npos);
  CHECK(content.find("1,0.5\n") != std::string::npos);
  CHECK(content.find("text,cell\n") != std::string::npos);
}

TEST_CASE("row width mismatches are rejected") {
  TempDir tmp;
  fs::path file = tmp.path / "bad.csv";
  CsvWriter w(file.string(), {"a", "b", "c"}, {});
  CHECK_THROWS(w.write_row(std::vector<double>{1.0}));
}

TEST_CASE("unfinished tables are not left on disk") {
  TempDir tmp;
  fs::path file = tmp.path / "partial.csv";
  {
    CsvWriter w(file.string(), {"a"}, {});
    w.write_row(std::vector<double>{1.0});
    // no finish(): destructor must clean up
  }
  CHECK(!fs::exists(file));
}

TEST_CASE("metadata is valid JSON and preserves types") {
  TempDir tmp;
  fs::path file = tmp.path / "run.meta.json";
  ConfigMap cfg{{"L", 16LL},
                {"U", 0.1 + 0.2},
                {"periodic", true},
                {"sector", std::string("staggered-a")}};
  write_metadata_json(file.string(), cfg);
  auto j = nlohmann::json::parse(slurp(file));
  CHECK(j["config"]["L"].get<long long>() == 16);
  CHECK(j["config"]["U"].get<double>() == 0.1 + 0.2);
  CHECK(j["config"]["periodic"].get<bool>() == true);
  CHECK(j["config"]["sector"].get<std::string>() == "staggered-a");
  CHECK(j.contains("format_version"));
}

TEST_CASE("config comments render deterministically") {
  ConfigMap cfg{{"b", 2LL}, {"a", 1LL}};
  CHECK(config_comment(cfg) == config_comment(cfg));
  std::string c = config_comment(cfg);
  CHECK(c.find("a=1") < c.find("b=2"));  // sorted keys
}

}  // TEST_SUITE
