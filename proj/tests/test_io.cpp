#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <regex>

#include "fixtures.hpp"
#include "generators.hpp"
#include "strata/error.hpp"
#include "strata/io.hpp"
#include "strata/stratified.hpp"

using namespace strata;

namespace {

template <class E, class F>
E thrown(F&& f) {
  try {
    f();
  } catch (const E& e) {
    return e;
  }
  FAIL("nothing thrown");
  throw std::logic_error("unreachable");
}

}  // namespace

TEST_CASE("apx") {
  const AF af = parse_af("arg(a1). arg(a2). att(a1,a2).", AfFormat::apx);
  CHECK(af.size() == 2);
  CHECK(af.attack_count() == 1);

  const AF spaced = parse_af("% comment\n  arg( a1 ) .\narg(a2).\n att ( a1 , a2 ) . % tail\n", AfFormat::apx);
  CHECK(spaced == af);

  CHECK(parse_af("", AfFormat::apx).size() == 0);
}

TEST_CASE("apx errors carry locations") {
  const auto unknown = thrown<UnknownArgumentError>([] { parse_af("att(a1,a2).", AfFormat::apx); });
  CHECK(std::string(unknown.what()).find("1:1") != std::string::npos);

  const auto dup = thrown<DuplicateArgumentError>([] { parse_af("arg(a).\narg(a).", AfFormat::apx); });
  CHECK(std::string(dup.what()).find("2:5") != std::string::npos);

  const auto missing = thrown<ParseError>([] { parse_af("arg(a).\narg(b)", AfFormat::apx); });
  CHECK(missing.line() == 2);
  CHECK(missing.column() == 7);

  const auto keyword = thrown<ParseError>([] { parse_af("arg(a). foo(a).", AfFormat::apx); });
  CHECK(keyword.line() == 1);
  CHECK(keyword.column() == 9);

  CHECK_THROWS_AS(parse_af("arg().", AfFormat::apx), ParseError);
  CHECK_THROWS_AS(parse_af("att(a).", AfFormat::apx), ParseError);
}

TEST_CASE("tgf") {
  const AF af = parse_af("a1\na2\n#\na1 a2\n", AfFormat::tgf);
  CHECK(af == parse_af("arg(a1). arg(a2). att(a1,a2).", AfFormat::apx));
  CHECK(parse_af("a1 first label\r\na2\r\n#\r\na1 a2 edge label\r\n", AfFormat::tgf) == af);
  CHECK(parse_af("a\nb\n", AfFormat::tgf).attack_count() == 0);

  const auto e = thrown<UnknownArgumentError>([] { parse_af("a\n#\na b\n", AfFormat::tgf); });
  CHECK(std::string(e.what()).find("3:1") != std::string::npos);
  CHECK_THROWS_AS(parse_af("a\na\n#\n", AfFormat::tgf), DuplicateArgumentError);
  CHECK_THROWS_AS(parse_af("a\n#\na\n", AfFormat::tgf), ParseError);
}

TEST_CASE("round trips on random frameworks") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    const AF af = gen::random_af_between(rng, 0, 9);
    for (AfFormat fmt : {AfFormat::apx, AfFormat::tgf}) CHECK(parse_af(print_af(af, fmt), fmt) == af);
  }
}

TEST_CASE("formulas") {
  CHECK(parse_formula("a && b || c") == Formula::disjunction(Formula::conjunction(Formula::atom("a"), Formula::atom("b")),
                                                             Formula::atom("c")));
  CHECK(parse_formula("a -> b -> c") ==
        Formula::implication(Formula::atom("a"), Formula::implication(Formula::atom("b"), Formula::atom("c"))));
  CHECK(parse_formula("a <-> b -> c") ==
        Formula::equivalence(Formula::atom("a"), Formula::implication(Formula::atom("b"), Formula::atom("c"))));
  CHECK(parse_formula("!a && b") == Formula::conjunction(Formula::negation(Formula::atom("a")), Formula::atom("b")));
  CHECK(parse_formula("T") == Formula::top());
  CHECK(parse_formula("F || x1") == Formula::disjunction(Formula::bottom(), Formula::atom("x1")));

  const auto e = thrown<ParseError>([] { parse_formula("a && "); });
  CHECK(e.column() == 6);
  CHECK_THROWS_AS(parse_formula("(a"), ParseError);
  CHECK_THROWS_AS(parse_formula("a b"), ParseError);
  CHECK_THROWS_AS(parse_formula("A"), ParseError);
  CHECK_THROWS_AS(parse_formula("a & b"), ParseError);
}

TEST_CASE("knowledge bases") {
  const KnowledgeBase kb = parse_kb("(b | p)\n(!f | p)\n(f | b)");
  REQUIRE(kb.size() == 3);
  CHECK(kb.conditionals()[1].claim == parse_formula("!f"));
  CHECK(kb.conditionals()[1].premise == parse_formula("p"));
  CHECK(kb.atoms().names() == std::vector<std::string>{"b", "f", "p"});

  const KnowledgeBase single = parse_kb("(a)");
  CHECK(single.conditionals()[0].premise == Formula::top());

  const KnowledgeBase inner = parse_kb("(a || b | c)");
  CHECK(inner.conditionals()[0].claim == parse_formula("a || b"));
  CHECK(inner.conditionals()[0].premise == parse_formula("c"));

  // A bar nested inside parentheses is not a formula operator.
  CHECK_THROWS_AS(parse_kb("((a | b))"), ParseError);
  CHECK(parse_kb("((a || b))").conditionals()[0].premise == Formula::top());

  CHECK(parse_kb("% nothing\n\n(a) % trailing\n").size() == 1);
  CHECK(parse_kb(print_kb(kb)).conditionals() == kb.conditionals());

  const KnowledgeBase ordered = parse_kb("(b | p)", AtomSet({"p", "b"}));
  CHECK(ordered.atoms().names() == std::vector<std::string>{"p", "b"});
}

TEST_CASE("knowledge base errors") {
  const auto bar = thrown<AmbiguousBarError>([] { parse_kb("(a)\n(a | b | c)"); });
  CHECK(bar.line() == 2);
  CHECK(bar.column() == 8);
  CHECK_THROWS_AS(parse_kb("a | b"), ParseError);
  CHECK_THROWS_AS(parse_kb("(a | b"), ParseError);
  CHECK_THROWS_AS(parse_kb("(a) b"), ParseError);
  CHECK_THROWS_AS(parse_kb("( | b)"), ParseError);
  CHECK_THROWS_AS(parse_kb("(a)\n(a)"), ParseError);
  const auto bad = thrown<ParseError>([] { parse_kb("(a)\n(a && $)"); });
  CHECK(bad.line() == 2);
  CHECK(bad.column() == 7);
}

TEST_CASE("dot") {
  const AF f6 = fixtures::fig6();
  const StratifiedLabeling s = grounded_stratified(f6);
  const std::string dot = to_dot(f6, &s);
  CHECK(dot.rfind("digraph af {", 0) == 0);

  const std::regex node(R"re(\n  "([^"]+)" \[label="[^"]+\\n([0-9]+|inf)")re");
  std::size_t nodes = 0;
  for (auto it = std::sregex_iterator(dot.begin(), dot.end(), node); it != std::sregex_iterator(); ++it) {
    ++nodes;
    CHECK((*it)[2].str() == s.at(f6, (*it)[1].str()).to_string());
  }
  CHECK(nodes == f6.size());

  const std::regex edge(R"re("[^"]+" -> "[^"]+";)re");
  CHECK(std::distance(std::sregex_iterator(dot.begin(), dot.end(), edge), std::sregex_iterator()) ==
        static_cast<long>(f6.attack_count()));
  CHECK(dot.find("#bababa") != std::string::npos);

  const AF odd({"a\"b"}, {});
  CHECK(to_dot(odd).find(R"("a\"b")") != std::string::npos);
}
