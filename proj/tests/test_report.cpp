#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"
#include "modgroup/growth_report.hpp"
#include "modgroup/oracle.hpp"
#include "properties.hpp"

using namespace modgroup;

namespace {

struct CliRun {
  int status;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_SUITE("growth_report") {
  TEST_CASE("row layout") {
    const RowType types[] = {RowType::inert, RowType::ambiguous};
    const auto rows = asymptotic_report(3, 4, types);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].t == 3);
    CHECK(rows[0].type == RowType::inert);
    CHECK(rows[0].word_length == 12);
    CHECK(*rows[0].formula == 2);
    CHECK(rows[1].word_length == 6);
    CHECK(*rows[1].formula == 4);
    CHECK_FALSE(rows[0].oracle.has_value());
  }

  TEST_CASE("reciprocal rows are oracle only") {
    const RowType types[] = {RowType::reciprocal_cumulative};
    auto rows = asymptotic_report(1, 6, types);
    CHECK_FALSE(rows[5].formula.has_value());
    CHECK_FALSE(rows[5].ratio.has_value());
    attach_oracle(rows, OracleOptions{});
    CHECK(rows[5].oracle.has_value());
    CHECK(rows[5].ratio.has_value());
  }

  TEST_CASE("oracle columns stop at the ceiling") {
    const RowType types[] = {RowType::inert};
    auto rows = asymptotic_report(1, 8, types);
    OracleOptions opts;
    opts.max_length = 12;
    attach_oracle(rows, opts);
    CHECK(rows[5].oracle.has_value());
    CHECK_FALSE(rows[6].oracle.has_value());
  }

  TEST_CASE("csv header and formatting") {
    const RowType types[] = {RowType::inert};
    std::ostringstream out;
    write_csv(out, asymptotic_report(1, 1, types));
    CHECK(out.str() == "t,word_length,type,formula,oracle,asymptote,ratio,bounds_ok\n"
                       "1,4,inert,1,,1.000000e+00,1.000000,true\n");
  }

  TEST_CASE("row type names round trip") {
    for (RowType type : kAllRowTypes) CHECK(parse_row_type(to_string(type)) == type);
    CHECK_FALSE(parse_row_type("bogus").has_value());
  }
}

TEST_SUITE("cli") {
  TEST_CASE("classify") {
    const CliRun r = run({"classify", "ABAb"});
    CHECK(r.status == cli::kOk);
    CHECK(r.out.find("hyperbolic") != std::string::npos);
    CHECK(r.out.find("trace:") != std::string::npos);
    CHECK(r.out.find(" 3\n") != std::string::npos);
    CHECK(r.out.find("m=1") != std::string::npos);
    CHECK(r.out.find("length:") != std::string::npos);

    const CliRun p = run({"classify", "AB"});
    CHECK(p.out.find("parabolic") != std::string::npos);
    CHECK(p.out.find("length:") == std::string::npos);
    CHECK(p.out.find("inert:") != std::string::npos);

    CHECK(run({"classify", "AA"}).out.find("identity") != std::string::npos);

    const CliRun e = run({"classify", "BAb"});
    CHECK(e.status == cli::kOk);
    CHECK(e.out.find("elliptic") != std::string::npos);
    CHECK(e.out.find("none (") != std::string::npos);
  }

  TEST_CASE("classify rejects bad words") {
    const CliRun r = run({"classify", "ABx"});
    CHECK(r.status == cli::kUsage);
    CHECK(r.err.find("2") != std::string::npos);
  }

  TEST_CASE("count") {
    CHECK(run({"count", "inert", "3"}).out.rfind("inert(3) = 2 ", 0) == 0);
    CHECK(run({"count", "ambiguous", "5"}).out.rfind("ambiguous(5) = 8 ", 0) == 0);
    CHECK(run({"count", "inert", "0"}).status == cli::kUsage);
    CHECK(run({"count", "bogus", "3"}).status == cli::kUsage);
    const auto j = nlohmann::json::parse(run({"count", "all", "4", "--format", "json"}).out);
    CHECK(j.size() == 7);
  }

  TEST_CASE("table matches the golden fixture") {
    const CliRun r = run({"table", "inert", "12", "--format", "csv"});
    CHECK(r.status == cli::kOk);
    CHECK(r.out == read_file(MODGROUP_FIXTURE_DIR "/table_inert_12.csv"));
    CHECK(run({"table", "inert", "--t-max", "12", "--format", "csv"}).out == r.out);
  }

  TEST_CASE("verify") {
    CHECK(run({"verify", "10"}).status == cli::kOk);
    CHECK(run({"verify", "0"}).status == cli::kUsage);
    CHECK(run({"verify", "15"}).status == cli::kResource);
    CHECK(run({"verify", "11", "--max-oracle-t", "20"}).status == cli::kResource);
    CHECK(run({"verify", "11", "--max-oracle-t", "22"}).status == cli::kOk);
    const CliRun r = run({"verify", "4", "--ambiguous-criterion", "reversal-fixed"});
    CHECK(r.status == cli::kOk);
    CHECK(r.out.find("not asserted") != std::string::npos);
    CHECK(run({"verify", "6", "--hyperbolic-only"}).status == cli::kOk);
  }

  TEST_CASE("matrix") {
    CHECK(run({"matrix", "ABAb"}).out == "[[2,1],[1,1]]\n");
    CHECK(run({"matrix", "A"}).out == "[[0,1],[-1,0]]\n");
  }

  TEST_CASE("usage errors") {
    CHECK(run({}).status == cli::kUsage);
    CHECK(run({"table", "inert"}).status == cli::kUsage);
    CHECK(run({"table", "inert", "5", "--format", "xml"}).status == cli::kUsage);
    CHECK(run({"--help"}).status == cli::kOk);
  }

  TEST_CASE("out flag writes a file") {
    const std::string path = "cli_out_test.csv";
    CHECK(run({"table", "ambiguous", "5", "--format", "csv", "--out", path}).out.empty());
    CHECK(read_file(path).rfind("t,word_length", 0) == 0);
  }
}

TEST_SUITE("manifest") {
  TEST_CASE("seed recorded in the manifest matches the suites") {
    std::ifstream in(MODGROUP_TEST_DIR "/property_manifest.json");
    REQUIRE(in);
    const auto manifest = nlohmann::json::parse(in);
    CHECK(manifest.at("seed").get<std::uint64_t>() == props::kSeed);
    CHECK(manifest.at("random_cases").get<std::size_t>() == props::kRandomCases);
    CHECK(manifest.at("properties").size() == props::all_properties().size());
  }
}
