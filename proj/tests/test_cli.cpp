#include "qhw/cli.hpp"
#include "qhw/json_io.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;
using qhw::cli::run;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

// <name>.args holds one argument per line, <name>.out the expected stdout and
// <name>.code the exit code.
std::vector<std::string> read_args(const fs::path& p) {
  std::vector<std::string> args;
  std::istringstream in(slurp(p));
  for (std::string line; std::getline(in, line);) args.push_back(line);
  return args;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("golden files") {
    int cases = 0;
    for (const auto& entry : fs::directory_iterator(QHW_GOLDEN_DIR)) {
      if (entry.path().extension() != ".args") continue;
      ++cases;
      fs::path base = entry.path();
      base.replace_extension();
      CAPTURE(base.filename().string());
      const auto args = read_args(entry.path());
      const auto first = run(args);
      const auto again = run(args);
      CHECK(first.out == again.out);
      CHECK(first.out == slurp(base.string() + ".out"));
      CHECK(first.exit_code == std::stoi(slurp(base.string() + ".code")));
    }
    CHECK(cases >= 12);
  }

  TEST_CASE("exit codes") {
    CHECK(run({"classify", R"({"a2":"-1","b3":"-1"})"}).exit_code == 0);
    CHECK(run({"classify", R"({"a1":"1","a3":"1","b1":"1","b3":"2"})"}).exit_code == 2);
    CHECK(run({"classify", R"({"a1":"x"})"}).exit_code == 1);
    CHECK(run({"classify", R"({"a1":"1")"}).exit_code == 1);
    CHECK(run({"classify"}).exit_code == 1);
    CHECK(run({"classify", "/nonexistent/input.json"}).exit_code == 1);
    CHECK(run({"quantize", R"({"a1":"1","a3":"1","b1":"1","b3":"2"})"}).exit_code == 2);
    CHECK(run({"quantize", "--family", "type4"}).exit_code == 1);
    CHECK(run({"verify", "--family", "type2", "--order", "0"}).exit_code == 1);
    CHECK(run({"verify", "--family", "type2", R"({"a2":"1"})"}).exit_code == 1);
    CHECK(run({"coboundary", R"({"xi":"1","eta":"2"})"}).exit_code == 1);
    CHECK(run({"frobnicate"}).exit_code == 1);
    CHECK(run({}).exit_code == 1);
    CHECK(run({"--help"}).exit_code == 0);
  }

  TEST_CASE("input from a file") {
    const fs::path p = fs::temp_directory_path() / "qhw_cli_input.json";
    std::ofstream(p) << R"({"b1":"1","b2":"1"})";
    const auto inline_run = run({"classify", R"({"b1":"1","b2":"1"})"});
    CHECK(run({"classify", "--input", p.string()}).out == inline_run.out);
    CHECK(run({"classify", p.string()}).out == inline_run.out);
    CHECK(run({"classify", p.string(), "--input", p.string()}).exit_code == 1);
    fs::remove(p);
  }

  TEST_CASE("json output round-trips") {
    const auto r = run({"quantize", "--family", "type1minus", "--order", "3", "--format", "json"});
    REQUIRE(r.exit_code == 0);
    const auto j = qhw::parse_json(r.out);
    CHECK(qhw::to_json(qhw::rendered_from_json(j)) == j);
    CHECK(j.at("coproduct_closed").at("A+") == "1 (x) A+ + A+ (x) exp(-b1*A-) - b2*M (x) A-*exp(-b1*A-)");

    const auto c = run({"classify", "--format", "json", R"({"a2":"-1","b3":"-1"})"});
    const auto cj = qhw::parse_json(c.out);
    CHECK(cj.at("type") == "TYPE_II");
    CHECK(cj.at("coboundary") == true);
    CHECK(qhw::to_json(qhw::cocommutator_from_json(cj.at("normalized"))) == cj.at("normalized"));
  }

  TEST_CASE("documented command examples") {
    CHECK(run({"classify", R"({"a2":"-1","b3":"-1"})"}).out.rfind("TYPE_II, coboundary, xi=1\n", 0) == 0);
    CHECK(run({"classify", "{}"}).out.rfind("TRIVIAL", 0) == 0);
    const auto bad = run({"classify", R"({"a1":"1","a3":"1","b1":"1","b3":"2"})"});
    CHECK(bad.out.find("-2") != std::string::npos);
    const auto q = run({"quantize", "--family", "type1plus"});
    CHECK(q.out.find("A- (x) exp(a1*A+)") != std::string::npos);
    const auto cob = run({"coboundary", R"({"xi":"1"})"});
    CHECK(cob.out.find("schouten: -(M ^ A+ ^ A-)") != std::string::npos);
    CHECK(cob.out.find("mCYBE: PASS") != std::string::npos);
    CHECK(run({"verify", "--family", "type2", "--order", "4"}).exit_code == 0);
    CHECK(run({"poisson", "--check", "homomorphism", "--family", "type1plus"}).exit_code == 0);
  }
}

TEST_CASE("omitted c coefficients are forced one by one" * doctest::test_suite("cli")) {
  const auto j = qhw::parse_json(R"({"a1":"2","b1":"3","c2":"1"})");
  const auto d = qhw::cocommutator_from_json(j);
  CHECK(d.c(1).is_zero());
  CHECK(d.c(2) == qhw::ParamPoly::constant(1));
  CHECK(d.c(3) == qhw::ParamPoly::constant(-2));
  CHECK(run({"classify", R"({"a1":"1","c3":"5"})"}).exit_code == 2);
}
