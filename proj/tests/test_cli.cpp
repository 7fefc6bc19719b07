#include <doctest.h>

#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "nicholson/cli.hpp"

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "nicholson");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = nicholson::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("eval prints a bare value") {
  const Result r = run({"eval", "--fn", "jn", "--n", "0", "--x", "0"});
  CHECK(r.code == 0);
  CHECK(r.out == "1.0\n");
}

TEST_CASE("eval at full precision") {
  const Result r = run({"--precision", "17", "eval", "--fn", "f1", "--n", "5000000.2", "--x", "5000000.1"});
  CHECK(r.code == 0);
  CHECK(r.out == "0.002614463961695188\n");
}

TEST_CASE("eval csv and json") {
  const Result csv = run({"--format", "csv", "eval", "--fn", "ai", "--x", "0"});
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("fn,n,x,value,abs_err_est\n", 0) == 0);
  CHECK(count_lines(csv.out) == 2);

  const Result js = run({"--format", "json", "eval", "--fn", "gi", "--x", "1.5"});
  REQUIRE(js.code == 0);
  const auto j = nlohmann::json::parse(js.out);
  CHECK(j.at("fn") == "gi");
  CHECK(j.at("value").get<double>() > 0.0);
}

TEST_CASE("eval rejects bad input") {
  CHECK(run({"eval", "--fn", "s0n", "--n", "3", "--x", "2"}).code != 0);
  CHECK(run({"eval", "--fn", "jn", "--n", "-1", "--x", "2"}).code != 0);
  CHECK(run({"eval", "--fn", "nope", "--x", "2"}).code != 0);
  CHECK(run({"--format", "xml", "eval", "--fn", "ai", "--x", "0"}).code != 0);
}

TEST_CASE("lattice evaluations honour the velocity") {
  const Result a = run({"--precision", "17", "--c", "0.5", "eval", "--fn", "u-exact", "--n", "3", "--x", "16"});
  const Result b = run({"--precision", "17", "eval", "--fn", "u-exact", "--n", "3", "--x", "8"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("single-order table") {
  const Result r = run({"--precision", "5", "table", "--which", "delta12", "--orders", "6"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "family,n,max_exact,max_approx,delta_pct,status\n"
        "delta1,6,0.35414,0.34429,2.7814,ok\n"
        "delta2,6,0.22895,0.24074,-5.1461,ok\n");
}

TEST_CASE("odd order in the Lommel table") {
  const Result r = run({"table", "--which", "delta34", "--orders", "6,7"});
  CHECK(r.code != 0);
  CHECK(r.out.find("delta3,6,") != std::string::npos);
  CHECK(r.out.find("delta3,7,nan,nan,nan,error") != std::string::npos);
  CHECK(r.err.find("n=7") != std::string::npos);
}

TEST_CASE("unknown table") {
  CHECK(run({"table", "--which", "delta56"}).code == 2);
}

TEST_CASE("figure output") {
  const Result r = run({"figure", "--which", "1", "--n", "10", "--t-min", "8", "--t-max", "9", "--step", "0.5"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("t,exact,approx\n8.0,", 0) == 0);
  CHECK(count_lines(r.out) == 4);

  const Result js = run({"--format", "json", "figure", "--which", "5", "--n", "2.5", "--t-min", "1", "--t-max", "2"});
  REQUIRE(js.code == 0);
  CHECK_NOTHROW((void)nlohmann::json::parse(js.out));
}

TEST_CASE("empty figure range is a usage error") {
  const Result r = run({"figure", "--which", "1", "--n", "10", "--t-min", "5", "--t-max", "4"});
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("scaling needs at least four orders") {
  const Result r = run({"scaling", "--quantity", "width", "--family", "bessel", "--orders", "10,20"});
  CHECK(r.code != 0);
  CHECK(r.err.find("at least 4") != std::string::npos);
}

TEST_CASE("scaling output") {
  const Result r = run({"scaling", "--quantity", "amplitude", "--family", "bessel", "--orders", "10,20,40,80"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("n,measured,fit_exponent,t_at\n", 0) == 0);
  CHECK(r.out.find("# exponent=") != std::string::npos);
  CHECK(r.out.find("exponent_vs_n=") != std::string::npos);
}

TEST_CASE("bigorder report") {
  const Result r = run({"bigorder"});
  CHECK(r.code == 0);
  CHECK(r.out.find("agreeing_sig_figs: 8\n") != std::string::npos);
  const Result js = run({"--format", "json", "bigorder"});
  REQUIRE(js.code == 0);
  CHECK(nlohmann::json::parse(js.out).at("agreeing_sig_figs") == 8);
}

TEST_CASE("repeated runs are byte-identical") {
  const std::vector<std::string> args{"--precision", "17", "table", "--which", "delta34", "--orders", "6,10"};
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("missing subcommand") {
  CHECK(run({}).code != 0);
}
