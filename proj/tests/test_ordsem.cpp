#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "generators.hpp"
#include "strata/error.hpp"
#include "strata/ordsem.hpp"

using namespace strata;

namespace {

std::vector<std::pair<std::string, std::string>> pairs(const PropertyReport& r) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& w : r.witnesses) out.emplace_back(w.first, w.second);
  return out;
}

}  // namespace

TEST_CASE("isomorphisms") {
  const AF f2 = fixtures::fig2();
  IsoMap id;
  for (const auto& a : f2.arguments()) id.emplace(a, a);
  CHECK(is_isomorphism(f2, f2, id));

  const IsoMap rename{{"A1", "x"}, {"A2", "y"}, {"A3", "z"}};
  const AF renamed({"x", "y", "z"}, {{"x", "y"}, {"x", "z"}, {"y", "z"}});
  CHECK(is_isomorphism(f2, renamed, rename));
  CHECK(apply_isomorphism(f2, rename) == renamed);

  const AF two_edges({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}});
  CHECK_FALSE(is_isomorphism(f2, two_edges, rename));
  CHECK_FALSE(is_isomorphism(f2, renamed, {{"A1", "x"}, {"A2", "x"}, {"A3", "z"}}));
  CHECK_FALSE(is_isomorphism(f2, renamed, {{"A1", "x"}, {"A2", "y"}}));
  CHECK_THROWS_AS(apply_isomorphism(f2, {{"A1", "x"}}), UnknownArgumentError);
}

TEST_CASE("random isomorphisms are permutations") {
  std::mt19937_64 rng(1);
  const AF f3 = fixtures::fig3();
  for (int i = 0; i < 20; ++i) {
    const IsoMap m = random_isomorphism(f3, rng);
    CHECK(is_isomorphism(f3, apply_isomorphism(f3, m), m));
  }
}

TEST_CASE("weak components") {
  CHECK(wcom(fixtures::fig1()).size() == 1);
  CHECK(wcom(fixtures::fig1())[0].size() == 5);
  CHECK(wcom(AF()).empty());

  const AF both({"A1", "A2", "A3", "B1", "B2", "B3"},
                {{"A1", "A2"}, {"A1", "A3"}, {"A2", "A3"}, {"B1", "B2"}, {"B2", "B1"}, {"B1", "B3"},
                 {"B3", "B1"}, {"B2", "B3"}, {"B3", "B2"}});
  const auto comps = wcom(both);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == fixtures::fig2());
  CHECK(comps[1].arguments() == std::vector<std::string>{"B1", "B2", "B3"});
}

TEST_CASE("postulate names") {
  CHECK(parse_postulate("qp") == Postulate::quality_precedence);
  CHECK(parse_postulate("xx") == std::nullopt);
  CHECK(to_string(Postulate::weak_void_precedence) == "wvp");
}

TEST_CASE("void precedence fails on the three-argument chain") {
  for (Semantics s : all_semantics) {
    const PropertyReport r = check_property(fixtures::vp3(), s, Postulate::void_precedence);
    CHECK_FALSE(r.holds);
    CHECK(pairs(r) == std::vector<std::pair<std::string, std::string>>{{"A", "B"}});
  }
}

TEST_CASE("quality precedence fails on the five-argument example") {
  const PropertyReport r = check_property(fixtures::fig3(), Semantics::grounded, Postulate::quality_precedence);
  CHECK_FALSE(r.holds);
  const auto p = pairs(r);
  CHECK(std::count(p.begin(), p.end(), std::pair<std::string, std::string>{"A5", "A2"}) == 1);
  CHECK(p == std::vector<std::pair<std::string, std::string>>{{"A3", "A2"}, {"A4", "A2"}, {"A5", "A2"}});
}

TEST_CASE("defense precedence is reported") {
  // A and B both have one attacker; only B's attacker is attacked.
  const AF af({"A", "B", "X", "Y", "Z"}, {{"X", "A"}, {"Y", "B"}, {"Z", "Y"}});
  const PropertyReport r = check_property(af, Semantics::grounded, Postulate::defense_precedence);
  CHECK(r.holds == r.witnesses.empty());
}

TEST_CASE("abstraction, irrelevance and weak void precedence hold") {
  std::mt19937_64 rng(8);
  CheckOptions opts;
  opts.trials = 10;
  for (int i = 0; i < 60; ++i) {
    const AF af = gen::random_af_between(rng, 1, 6);
    for (Semantics s : all_semantics) {
      for (Postulate p : {Postulate::abstraction, Postulate::irrelevance, Postulate::weak_void_precedence}) {
        const PropertyReport r = check_property(af, s, p, opts);
        INFO(to_string(p) << " " << to_string(s));
        CHECK(r.holds);
        CHECK(r.witnesses.empty());
      }
    }
  }
}

TEST_CASE("irrelevance on a disconnected framework") {
  const AF both({"A1", "A2", "A3", "B1", "B2", "B3"},
                {{"A1", "A2"}, {"A1", "A3"}, {"A2", "A3"}, {"B1", "B2"}, {"B2", "B1"}, {"B1", "B3"},
                 {"B3", "B1"}, {"B2", "B3"}, {"B3", "B2"}});
  for (Semantics s : all_semantics) CHECK(check_property(both, s, Postulate::irrelevance).holds);
}

TEST_CASE("abstraction is deterministic in the seed") {
  CheckOptions opts;
  opts.trials = 5;
  opts.seed = 42;
  const auto a = check_property(fixtures::fig6(), Semantics::complete, Postulate::abstraction, opts);
  const auto b = check_property(fixtures::fig6(), Semantics::complete, Postulate::abstraction, opts);
  CHECK(a.holds == b.holds);
  CHECK(a.witnesses == b.witnesses);
}
