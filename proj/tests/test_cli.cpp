#include "doctest.h"
#include "oracles.hpp"

#include "cli.hpp"
#include "flatknot/json_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace {
struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = flatknot::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}
}  // namespace

TEST_CASE("cli jones of a curl") {
  const Result r = call({"jones", "O1+ U1+"});
  CHECK(r.code == 0);
  CHECK(r.out.find("()") != std::string::npos);
  CHECK(r.err.find("# flatknot jones") != std::string::npos);
}

TEST_CASE("cli exit codes") {
  CHECK(call({"validate", "O1+"}).code == flatknot::cli::kInvalid);
  CHECK(call({"validate", "O1+ U1+"}).code == flatknot::cli::kOk);
  CHECK(call({"bracket", "--cap", "1", oracle::fixture_path("classical/3_1.gauss")}).code == flatknot::cli::kBudget);
  CHECK(call({"phi", "--d", "4", oracle::fixture_path("annular/whitehead.json")}).code ==
        flatknot::cli::kPrecondition);
}

TEST_CASE("cli json output") {
  const Result r = call({"--format", "json", "mf-delta", oracle::fixture_path("eight2flat.gauss")});
  REQUIRE(r.code == 0);
  const flatknot::Json j = flatknot::parse_json_text(r.out);
  CHECK(j["command"] == "mf-delta");
  CHECK(j.contains("config"));
  CHECK(j.contains("result"));
}

TEST_CASE("cli colourings with a table file") {
  const Result r = call({"colorings", "--biquandle", oracle::fixture_path("biquandles/dihedral3.json"),
                         oracle::fixture_path("classical/3_1.gauss")});
  CHECK(r.code == 0);
  CHECK(r.out.find('9') != std::string::npos);
}

TEST_CASE("cli convert round trip") {
  const Result p = call({"convert", "--to", "planar", "O1+ U2+ O3+ U1+ O2+ U3+"});
  REQUIRE(p.code == 0);
  const auto path = std::filesystem::temp_directory_path() / "flatknot_cli_test.json";
  { std::ofstream(path) << p.out; }
  const Result g = call({"convert", "--to", "gauss", path.string()});
  CHECK(g.code == 0);
  CHECK(g.out.find("O1+ U2+ O3+ U1+ O2+ U3+") != std::string::npos);
  std::filesystem::remove(path);
}
