#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "generators.hpp"
#include "strata/error.hpp"
#include "strata/io.hpp"
#include "strata/stratified.hpp"
#include "strata/systemz.hpp"

using namespace strata;

namespace {

Conditional cond(const char* claim, const char* premise = "T") {
  return {parse_formula(claim), parse_formula(premise)};
}

World w(const char* name) { return World::from_name(fixtures::penguin().atoms(), name); }

// Z ranks straight from the definitions: peel tolerated conditionals,
// then rank each world by the highest layer it falsifies.
std::vector<Rank> kappa_oracle(const KnowledgeBase& kb) {
  const auto& ds = kb.conditionals();
  std::vector<int> layer(ds.size(), -1);
  std::vector<World> ws = worlds(kb.atoms());
  for (int z = 0;; ++z) {
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < ds.size(); ++i) {
      if (layer[i] < 0) rest.push_back(i);
    }
    if (rest.empty()) break;
    std::vector<std::size_t> now;
    for (std::size_t i : rest) {
      for (const World& x : ws) {
        bool ok = eval(x, ds[i].claim) && eval(x, ds[i].premise);
        for (std::size_t j : rest) ok = ok && !(!eval(x, ds[j].claim) && eval(x, ds[j].premise));
        if (ok) {
          now.push_back(i);
          break;
        }
      }
    }
    REQUIRE_FALSE(now.empty());
    for (std::size_t i : now) layer[i] = z;
  }
  std::vector<Rank> out;
  for (const World& x : ws) {
    int top = -1;
    for (std::size_t i = 0; i < ds.size(); ++i) {
      if (!eval(x, ds[i].claim) && eval(x, ds[i].premise)) top = std::max(top, layer[i]);
    }
    out.push_back(Rank(static_cast<std::uint32_t>(top + 1)));
  }
  return out;
}

}  // namespace

TEST_CASE("knowledge base construction") {
  CHECK_THROWS_AS(KnowledgeBase({cond("a"), cond("a")}), Error);
  const KnowledgeBase kb({cond("b", "p"), cond("f", "b")});
  CHECK(kb.atoms().names() == std::vector<std::string>{"b", "f", "p"});
  CHECK_THROWS_AS(KnowledgeBase({cond("q")}, AtomSet({"p"})), Error);
}

TEST_CASE("satisfied set") {
  const KnowledgeBase kb = fixtures::penguin();
  CHECK(satisfied_set(kb, w("-pbf")).size() == 3);
  CHECK(satisfied_set(kb, w("p-bf")) == std::vector{cond("f", "b")});
  CHECK(satisfied_set(KnowledgeBase({}, AtomSet({"a"})), World(AtomSet({"a"}), 0)).empty());
}

TEST_CASE("table of verification and satisfaction") {
  const KnowledgeBase kb = fixtures::penguin();
  // Per world: (satisfies, verifies) for (b|p), (!f|p), (f|b).
  const std::vector<std::array<std::pair<bool, bool>, 3>> table{
      {{{true, true}, {false, false}, {true, true}}},     // pbf
      {{{true, true}, {true, true}, {false, false}}},     // pb-f
      {{{false, false}, {false, false}, {true, false}}},  // p-bf
      {{{false, false}, {true, true}, {true, false}}},    // p-b-f
      {{{true, false}, {true, false}, {true, true}}},     // -pbf
      {{{true, false}, {true, false}, {false, false}}},   // -pb-f
      {{{true, false}, {true, false}, {true, false}}},    // -p-bf
      {{{true, false}, {true, false}, {true, false}}},    // -p-b-f
  };
  const auto ws = worlds(kb.atoms());
  for (std::size_t i = 0; i < 8; ++i) {
    CHECK(ws[i].name() == fixtures::penguin_worlds[i]);
    for (std::size_t j = 0; j < 3; ++j) {
      const auto s = conditional_status(ws[i], kb.conditionals()[j]);
      CHECK((s != ConditionalStatus::falsifies) == table[i][j].first);
      CHECK((s == ConditionalStatus::verifies) == table[i][j].second);
    }
  }
}

TEST_CASE("tolerance") {
  const KnowledgeBase kb = fixtures::penguin();
  const auto t = tolerated(kb, cond("f", "b"));
  REQUIRE(t);
  CHECK(t->name() == "-pbf");
  CHECK_FALSE(tolerated(kb, cond("b", "p")));
  const auto e = tolerated(KnowledgeBase(), cond("a", "a"));
  REQUIRE(e);
  CHECK(e->name() == "a");
}

TEST_CASE("z partition") {
  const ZPartition z = z_partition(fixtures::penguin());
  REQUIRE(z.strata.size() == 2);
  CHECK(z.strata[0] == std::vector{cond("f", "b")});
  CHECK(z.strata[1] == std::vector{cond("b", "p"), cond("!f", "p")});
  CHECK(z.stratum_of(cond("!f", "p")) == 1);
  CHECK_THROWS_AS(z.stratum_of(cond("x")), Error);

  CHECK(z_partition(KnowledgeBase({cond("a")})).strata.size() == 1);
  CHECK_THROWS_AS(z_partition(KnowledgeBase({cond("a"), cond("!a")})), InconsistentKnowledgeBaseError);
  CHECK_THROWS_AS(kappa_z(KnowledgeBase({cond("a"), cond("!a")})), InconsistentKnowledgeBaseError);
}

TEST_CASE("kappa z of the penguin base") {
  const KnowledgeBase kb = fixtures::penguin();
  const RankingFunction k = kappa_z(kb);
  const std::vector<Rank> expected{Rank(2), Rank(1), Rank(2), Rank(2), Rank(0), Rank(1), Rank(0), Rank(0)};
  CHECK(k.ranks() == expected);
  CHECK(rank_of_formula(k, parse_formula("p && b")) == Rank(1));
  CHECK(rank_of_formula(k, parse_formula("F")) == Rank::infinity());
  CHECK(rank_of_formula(k, parse_formula("T")) == Rank(0));
  for (const auto& d : kb.conditionals()) CHECK(accepts(k, d));
  CHECK_FALSE(accepts(k, cond("f", "p")));
}

TEST_CASE("ranking function validation") {
  CHECK_THROWS_AS(RankingFunction(AtomSet({"a"}), {Rank(1), Rank(1)}), Error);
  CHECK_THROWS_AS(RankingFunction(AtomSet({"a"}), {Rank(0)}), Error);
}

TEST_CASE("induced framework") {
  const AF af = induced_af(fixtures::penguin());
  CHECK(af.size() == 8);
  const auto edges = fixtures::penguin_edges();
  CHECK(af.attack_pairs() == std::set<std::pair<std::string, std::string>>(edges.begin(), edges.end()));
  CHECK(attackers(af, "pbf") == ArgumentSet{"-p-b-f", "-p-bf", "-pbf", "pb-f", "-pb-f"});

  const AF flat = induced_af(KnowledgeBase({}, AtomSet({"a"})));
  CHECK(flat.size() == 2);
  CHECK(flat.attack_count() == 0);
}

TEST_CASE("bridge") {
  CHECK(bridge_check(fixtures::penguin()).holds);
  CHECK(bridge_check(KnowledgeBase({}, AtomSet({"a", "b"}))).holds);
}

TEST_CASE("random consistent bases") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const KnowledgeBase kb = gen::random_kb(rng);
    const RankingFunction k = kappa_z(kb);
    CHECK(k.ranks() == kappa_oracle(kb));
    for (const auto& d : kb.conditionals()) CHECK(accepts(k, d));
    CHECK(std::count(k.ranks().begin(), k.ranks().end(), Rank(0)) > 0);

    const ZPartition z = z_partition(kb);
    std::size_t total = 0;
    for (const auto& layer : z.strata) {
      CHECK_FALSE(layer.empty());
      total += layer.size();
    }
    CHECK(total == kb.size());

    const AF af = induced_af(kb);
    for (ArgIndex a = 0; a < af.size(); ++a) CHECK_FALSE(af.attacks(a, a));
    CHECK(grounded_stratified(af).is_finite());
    const BridgeReport r = bridge_check(kb);
    CHECK(r.holds);
    CHECK(r.mismatches.empty());
  }
}
