#include <doctest.h>

#include <sstream>

#include "csurg/commands.hpp"
#include "csurg/errors.hpp"

using namespace csurg;
using namespace csurg::cli;

namespace {

struct Captured {
  int code = 0;
  std::vector<Json> lines;
  std::string err;
};

Captured capture(const std::string& command, const Json& echo, const std::function<void(const Emit&)>& body) {
  std::ostringstream out, err;
  Captured c;
  c.code = run(command, echo, OutputFormat::json, out, err, body);
  std::istringstream in(out.str());
  for (std::string line; std::getline(in, line);) c.lines.push_back(Json::parse(line));
  c.err = err.str();
  return c;
}

template <typename Args, typename Fn>
Captured call(const std::string& command, const Args& a, Fn fn) {
  return capture(command, a.echo(), [&](const Emit& emit) { emit(fn(a)); });
}

}  // namespace

TEST_CASE("analyze reports hypothesis data") {
  AnalyzeArgs a;
  a.braid = "B3 s1^7 s2^-1";
  const auto c = call("analyze", a, analyze);
  REQUIRE(c.code == kOk);
  const Json& j = c.lines.at(0);
  CHECK(j["schema"] == 1);
  CHECK(j["command"] == "analyze");
  CHECK(j["inputs_echo"]["braid"] == "B3 s1^7 s2^-1");
  CHECK(j["hypothesis"]["cond_tb"] == true);
  a.braid = "B3 s1^3 s2^-1";
  CHECK(call("analyze", a, analyze).lines.at(0)["hypothesis"]["cond_tb"] == false);
}

TEST_CASE("malformed input maps to exit code 2") {
  AnalyzeArgs a;
  a.braid = "B3 s3";
  const auto c = call("analyze", a, analyze);
  CHECK(c.code == kParseError);
  CHECK(c.lines.at(0)["error"]["type"] == "parse_error");
  CHECK(c.lines.at(0)["error"].contains("position"));
  CHECK_FALSE(c.err.empty());
}

TEST_CASE("enumerate counts") {
  for (auto [slopes, count] : std::vector<std::pair<std::string, long>>{{"1/5", 4}, {"1/2", 1}}) {
    EnumerateArgs a;
    a.braid = "B3 s1^7 s2^-1";
    a.slopes = slopes;
    const auto c = capture("enumerate", a.echo(), [&](const Emit& emit) { enumerate(a, emit); });
    REQUIRE(c.code == kOk);
    CHECK(c.lines.at(0)["count"] == count);
    CHECK(c.lines.size() == static_cast<std::size_t>(count) + 1);
    for (std::size_t i = 1; i < c.lines.size(); ++i) CHECK(c.lines[i]["valid"] == true);
  }
  EnumerateArgs a;
  a.braid = "B4 s1^5 s3^5";
  a.slopes = "2/5,2/7";
  a.count_only = true;
  a.isom_order = "4";
  const auto c = capture("enumerate", a.echo(), [&](const Emit& emit) { enumerate(a, emit); });
  CHECK(c.lines.at(0)["count"] == 6);
  CHECK(c.lines.at(0)["contactomorphism_lower_bound"] == 2);
  CHECK(c.lines.size() == 1);
}

TEST_CASE("enumerate hypothesis failure maps to exit code 3") {
  EnumerateArgs a;
  a.braid = "B3 s1^3 s2^-1";
  a.slopes = "1/5";
  const auto c = capture("enumerate", a.echo(), [&](const Emit& emit) { enumerate(a, emit); });
  CHECK(c.code == kHypothesisError);
  CHECK(c.lines.at(0)["error"]["type"] == "hypothesis_violation");
}

TEST_CASE("theta for unit slopes is constant") {
  ThetaArgs a;
  a.braid = "B2 s1^5";
  a.slopes = "1/5";
  a.all = true;
  const auto c = call("theta", a, cli::theta);
  REQUIRE(c.code == kOk);
  const Json& groups = c.lines.at(0)["groups"];
  REQUIRE(groups.size() == 1);
  CHECK(groups[0]["theta"] == "-6/1");
  CHECK(groups[0]["count"] == 4);
}

TEST_CASE("theta tuple selection") {
  ThetaArgs a;
  a.braid = "B2 s1^5";
  a.slopes = "1/1";
  a.tuple = "";
  SUBCASE("integer slope has the empty tuple") { CHECK(call("theta", a, cli::theta).code == kOk); }
  SUBCASE("bad tuple") {
    a.tuple = "2";
    CHECK(call("theta", a, cli::theta).code == kParseError);
  }
}

TEST_CASE("cfrac modes") {
  CfracArgs a;
  a.value = "-7/2";
  auto j = call("cfrac", a, cfrac).lines.at(0);
  CHECK(j["coeffs"] == Json::parse("[-4,-2]"));
  CHECK(j["phi"] == 3);
  a = {};
  a.slopes = "2/5,2/7";
  CHECK(call("cfrac", a, cfrac).lines.at(0)["phi_vector"] == 6);
  a = {};
  a.convergents = 2;
  a.cycle = "-2";
  CHECK(call("cfrac", a, cfrac).lines.at(0)["convergents"] == Json::parse(R"(["-2/1","-3/2","-4/3"])"));
  a = {};
  CHECK(call("cfrac", a, cfrac).code == kParseError);
}

TEST_CASE("surgery homology") {
  SurgeryArgs a;
  a.braid = "B3 s1^7 s2^-1";
  a.slopes = "2/7";
  auto j = call("surgery", a, surgery).lines.at(0);
  CHECK(j["homology"]["h1_order"] == 2);
  a.slopes = "7";
  a.axis = "-1/2";
  a.twist = "2,2";
  j = call("surgery", a, surgery).lines.at(0);
  CHECK(j["homology"]["h1_order"] == 7 + 2 * 9);
  a.slopes = "0";
  a.axis.reset();
  a.twist.reset();
  CHECK(call("surgery", a, surgery).code == kParseError);
}

TEST_CASE("limits and family") {
  LimitsArgs l;
  l.cycle_coeffs = "-3";
  l.tail = "ones";
  l.n = 3;
  l.braid = "B2 s1^5";
  l.other_tail = "max";
  auto j = call("limits", l, limits).lines.at(0);
  CHECK(j["sign"] == "-");
  CHECK(j["other_sign"] == "+");
  CHECK(j["properly_isotopic"] == false);
  CHECK(j["truncation_consistency"] == true);
  l.tail = "sometimes";
  CHECK(call("limits", l, limits).code == kParseError);

  FamilyArgs f;
  f.kind = "lspace";
  f.m = 3;
  f.k = 7;
  f.l = 2;
  j = call("family", f, family).lines.at(0);
  CHECK(j["additivity_check"] == true);
  CHECK(j["next_order"] == 34);
  f = {};
  f.kind = "example420";
  f.k = 1;
  CHECK(call("family", f, family).lines.at(0)["braid"]["text"] == "B3 s1^3 s2^-1");
}

TEST_CASE("argument helpers") {
  CHECK(parse_positive_slopes("1/2,2+1/3").slopes.size() == 2);
  CHECK_THROWS_AS(parse_positive_slopes("0"), DomainError);
  CHECK(parse_tuple_entries("1,max,3") == std::vector<std::int64_t>{1, 0, 3});
  CHECK_THROWS_AS(parse_tuple_entries("0"), ParseError);
}

TEST_CASE("output is deterministic") {
  ThetaArgs a;
  a.braid = "B3 s1^7 s2^-1";
  a.slopes = "3/10";
  a.all = true;
  std::ostringstream o1, o2, e;
  const auto body = [&](const Emit& emit) { emit(theta(a)); };
  run("theta", a.echo(), OutputFormat::json, o1, e, body);
  run("theta", a.echo(), OutputFormat::json, o2, e, body);
  CHECK(o1.str() == o2.str());
  std::ostringstream t;
  CHECK(run("theta", a.echo(), OutputFormat::table, t, e, body) == kOk);
  CHECK(t.str().find("command") != std::string::npos);
}
