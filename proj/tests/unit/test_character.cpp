#include <doctest.h>

#include "artin/character.hpp"
#include "artin/errors.hpp"
#include "fixtures.hpp"
#include "generators.hpp"

using namespace artin;
using namespace artin::testing;

namespace {

std::vector<std::pair<std::string, std::string>> edge_names(const LabeledGraph& g,
                                                            const std::vector<Edge>& edges) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& e : edges) out.emplace_back(g.name(e.u), g.name(e.v));
  return out;
}

}  // namespace

TEST_SUITE("characters") {
  TEST_CASE("parsing") {
    const auto f3 = fixture("f3");
    const auto chi = parse_character(f3, "a=1,b=-1");
    CHECK(chi.value("a") == 1);
    CHECK(chi.value("b") == -1);
    const auto half = parse_character(f3, " a = 1/2 , b=-3/6 ");
    CHECK(half.value("b") == Rational(-1, 2));

    const auto f2 = fixture("f2");
    CHECK_THROWS_AS(parse_character(f2, "u=1,v=2"), DomainError);
    const auto ok = parse_character(f2, "u=1,w=1,v=-1");
    CHECK(ok.value("w") == 1);

    CHECK_THROWS_AS(parse_character(f3, "c=1"), ParseError);
    CHECK_THROWS_AS(parse_character(f3, "a=1/0"), ParseError);
    CHECK_THROWS_AS(parse_character(f3, "a=x"), ParseError);
    CHECK_THROWS_AS(parse_character(f3, "a=0"), DomainError);
    CHECK_THROWS_AS(parse_character(f3, "a=1,b=1/-2"), ParseError);
  }

  TEST_CASE("characters in graph files") {
    const auto doc = parse_artin_document("v a\nv b\ne a b 4\nc a 1\nc b -1/2\n");
    const auto chi = make_character(doc.graph, doc.character);
    CHECK(chi.value("b") == Rational(-1, 2));
    CHECK(format_character(chi) == "a=1,b=-1/2");
  }

  TEST_CASE("support subgraph") {
    const auto f3 = fixture("f3");
    CHECK(lf_subgraph(parse_character(f3, "a=1,b=-1")) == f3);
    const auto f5 = fixture("f5");
    const auto lf = lf_subgraph(parse_character(f5, "a=1,c=1"));
    CHECK(lf.names() == std::vector<std::string>{"a", "c"});
    CHECK(lf.edge_count() == 0);
    const auto f1 = fixture("f1");
    CHECK(lf_subgraph(parse_character(f1, "v=1,s=1,u=-1,w=-1")) == f1);
  }

  TEST_CASE("dead edges") {
    const auto f3 = fixture("f3");
    CHECK(dead_edges(parse_character(f3, "a=1,b=-1")).size() == 1);
    CHECK(dead_edges(parse_character(f3, "a=1,b=2")).empty());
    const auto f1 = fixture("f1");
    const auto dead = edge_names(f1, dead_edges(parse_character(f1, "v=1,s=1,u=-1,w=-1")));
    // Edges are reported with endpoints in declaration order (v, s, u, w).
    const std::vector<std::pair<std::string, std::string>> expected{
        {"v", "u"}, {"v", "w"}, {"s", "u"}, {"s", "w"}};
    CHECK(dead == expected);
  }

  TEST_CASE("living subgraph") {
    const auto f3 = fixture("f3");
    const auto l = living_subgraph(parse_character(f3, "a=1,b=-1"));
    CHECK(l.vertex_count() == 2);
    CHECK(l.edge_count() == 0);
    CHECK(living_subgraph(parse_character(f3, "a=1,b=2")) == f3);
    const auto f1 = fixture("f1");
    const auto lf1 = living_subgraph(parse_character(f1, "v=1,s=1,u=-1,w=-1"));
    const auto comps = connected_components(lf1);
    REQUIRE(comps.size() == 2);
    CHECK(edge_names(lf1, lf1.edges()) ==
          std::vector<std::pair<std::string, std::string>>{{"v", "s"}, {"u", "w"}});
  }

  TEST_CASE("derived subgraphs are invariant under sign and positive scaling") {
    Gen gen(21);
    for (int i = 0; i < 300; ++i) {
      const auto g = gen.graph(gen.uniform(1, 7), 0.5, {2, 3, 4, 6});
      const auto chi = gen.character(g, 5, 4);
      const auto neg = -chi;
      const auto scaled = chi.scaled(Rational(gen.uniform(1, 9), gen.uniform(1, 5)));
      CHECK(living_subgraph(chi).names() == lf_subgraph(chi).names());
      CHECK(dead_edges(chi) == dead_edges(neg));
      CHECK(living_subgraph(chi) == living_subgraph(neg));
      CHECK(lf_subgraph(chi) == lf_subgraph(scaled));
      CHECK(dead_edges(chi) == dead_edges(scaled));
      CHECK(living_subgraph(chi) == living_subgraph(scaled));
    }
  }

  TEST_CASE("right-angled graphs have no dead edges") {
    Gen gen(22);
    for (int i = 0; i < 100; ++i) {
      const auto g = gen.graph(gen.uniform(1, 7), 0.6, {2});
      CHECK(dead_edges(gen.character(g, 3, 2)).empty());
    }
  }
}
