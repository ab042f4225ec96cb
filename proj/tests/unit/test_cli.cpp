#include <sstream>

#include "babyverma/cli.hpp"
#include "babyverma/errors.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace bv;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  args.insert(args.begin(), "babyverma");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

bool contains(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("decide: sl2 Steinberg weight") {
    auto r = call({"decide", "--type", "A1", "--p", "5", "--lambda", "4", "--oracle"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "verdict: simple"));
    CHECK(contains(r.out, "oracle: simple"));
  }

  TEST_CASE("decide: A2 examples") {
    auto simple = call({"decide", "--type", "A2", "--p", "3", "--lambda", "2,2", "--oracle"});
    CHECK(simple.code == 0);
    CHECK(contains(simple.out, "verdict: simple"));
    CHECK(contains(simple.out, "oracle: simple"));

    auto zero = call({"decide", "--type", "A2", "--p", "3", "--lambda", "0,0", "--oracle"});
    CHECK(zero.code == 0);
    CHECK(contains(zero.out, "not simple; 3 vanishing factors"));
    CHECK(contains(zero.out, "oracle: not simple"));
    CHECK(contains(zero.out, "straightened R = 0"));
  }

  TEST_CASE("decide: factor lines are listed") {
    auto r = call({"decide", "--type", "B2", "--p", "5", "--I", "1", "--lambda", "1,3"});
    CHECK(r.code == 0);
    // complement of {alpha_1} in B2 has three roots
    int factors = 0;
    std::istringstream in(r.out);
    for (std::string line; std::getline(in, line);) factors += line.rfind("factor ", 0) == 0;
    CHECK(factors == 3);
  }

  TEST_CASE("scan row counts") {
    auto r = call({"scan", "--type", "A2", "--p", "3"});
    CHECK(r.code == 0);
    CHECK(count_lines(r.out) == 1 + 9);
    CHECK(r.out.rfind(cli::csv_header() + "\n", 0) == 0);

    auto b = call({"scan", "--type", "B2", "--p", "5", "--I", "2"});
    CHECK(count_lines(b.out) == 1 + 25);

    auto o = call({"scan", "--type", "A2", "--p", "3", "--oracle"});
    CHECK(o.code == 0);
    CHECK_FALSE(contains(o.out, ",off,"));
    CHECK_FALSE(contains(o.err, "MISMATCH"));
  }

  TEST_CASE("scan is deterministic across job counts") {
    auto a = call({"scan", "--type", "B2", "--p", "3", "--oracle", "--jobs", "1"});
    auto b = call({"scan", "--type", "B2", "--p", "3", "--oracle", "--jobs", "3"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }

  TEST_CASE("scan over GF(9) with an empty domain warns") {
    // chi(h) = 1 has nonzero trace, so x^3 - x = 1 has no solution in GF(9)
    auto r = call({"scan", "--type", "A1", "--p", "3", "--e", "2", "--chi-h", "1/0"});
    CHECK(r.code == 0);
    CHECK(count_lines(r.out) == 1);
    CHECK(contains(r.err, "warning"));
  }

  TEST_CASE("nilpotent character on the Levi part") {
    auto r = call({"scan", "--type", "A2", "--p", "3", "--I", "1", "--chi-f", "10:1", "--oracle"});
    CHECK(r.code == 0);
    CHECK(count_lines(r.out) == 10);
    CHECK(contains(r.out, "f=10:1"));
  }

  TEST_CASE("exit codes") {
    CHECK(call({"decide", "--type", "G2", "--p", "3", "--lambda", "0,0"}).code == 2);
    CHECK(call({"decide", "--type", "A2", "--p", "4", "--lambda", "0,0"}).code == 2);
    CHECK(call({"decide", "--type", "A2", "--p", "3", "--lambda", "0"}).code == 2);
    CHECK(call({"decide", "--type", "A2", "--p", "3", "--I", "1,2", "--lambda", "0,0"}).code == 2);
    CHECK(call({"decide", "--type", "A2", "--p", "3", "--I", "2", "--chi-f", "10:1", "--lambda", "0,0"}).code == 2);
    CHECK(call({"decide", "--type", "Q7", "--p", "3", "--lambda", "0"}).code == 2);
    CHECK(call({"bogus"}).code == 2);
    CHECK(call({"verify", "--check", "nonsense"}).code == 2);
    CHECK(call({"export", "--type", "A2", "--what", "matrices", "--p", "3", "--lambda", "0,0", "--bound", "5"}).code ==
          3);
  }

  TEST_CASE("oracle skip beyond the bound is not a failure") {
    auto r = call({"decide", "--type", "A2", "--p", "3", "--lambda", "2,2", "--oracle", "--bound", "10"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "oracle: skipped"));
  }

  TEST_CASE("export formats") {
    auto roots = call({"export", "--type", "B2", "--what", "roots"});
    REQUIRE(roots.code == 0);
    auto j = nlohmann::json::parse(roots.out);
    CHECK(j.dump().find("cartan") != std::string::npos);

    auto consts = call({"export", "--type", "A2", "--what", "constants"});
    CHECK(consts.code == 0);
    CHECK(count_lines(consts.out) > 1);

    auto factors = call({"export", "--type", "A3", "--what", "factors", "--I", "2"});
    REQUIRE(factors.code == 0);
    CHECK(nlohmann::json::parse(factors.out).is_array());

    auto m = call({"export", "--type", "A1", "--what", "matrices", "--p", "3", "--lambda", "1", "--label", "f[1]"});
    CHECK(m.code == 0);
    CHECK(m.out == "%%babyverma f[1] 3 2\n2 1 1\n3 2 1\n");
  }

  TEST_CASE("verify runs a selected check") {
    auto r = call({"verify", "--check", "strings,rho", "--ranks", "3"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "strings"));
    CHECK(contains(r.out, "rho"));
    CHECK_FALSE(contains(r.out, "FAIL"));
    CHECK(cli::check_names().size() == 11);
  }

  TEST_CASE("argument parsers") {
    auto sys = build_root_system("B3");
    CHECK(cli::parse_I(sys, "3,1") == std::vector<int>{0, 2});
    CHECK(cli::parse_I(sys, "") == std::vector<int>{});
    CHECK_THROWS_AS(cli::parse_I(sys, "4"), ConfigError);
    CHECK_THROWS_AS(cli::parse_I(sys, "1,1"), ConfigError);
    Field F = Field::make(5);
    CHECK(cli::parse_lambda(F, 3, "1,-1,7").x == std::vector<Elem>{Elem{1}, Elem{4}, Elem{2}});
    auto chi = cli::parse_chi(F, sys, "0,1,2", "010:3");
    CHECK(chi.chi_h[2] == Elem{2});
    CHECK(chi.chi_f[1] == Elem{3});
  }
}
