#include <doctest.h>

#include <algorithm>

#include "artin/errors.hpp"
#include "artin/kt_module.hpp"
#include "fixtures.hpp"
#include "generators.hpp"

using namespace artin;
using namespace artin::testing;

namespace {

using ZP = LaurentPoly<IntegerRing>;

ZP var(const std::vector<std::string>& vars, const std::string& name, int power = 1) {
  const auto it = std::find(vars.begin(), vars.end(), name);
  REQUIRE(it != vars.end());
  return ZP::variable(IntegerRing{}, vars, static_cast<std::size_t>(it - vars.begin()), power);
}

ZP one(const std::vector<std::string>& vars) { return ZP::one(IntegerRing{}, vars); }

BipartiteForest f5_forest() {
  return BipartiteForest({"a", "c"}, {"b"}, {{"a", "b", 2}, {"c", "b", 2}});
}

// Linear extension of d over a Koszul element, compared to zero.
bool is_zero(const KoszulElement& x) {
  return std::all_of(x.begin(), x.end(), [](const auto& kv) { return kv.second.is_zero(); });
}

// Even graph whose living subgraph is the two sides (complete, label 2) and
// whose dead edges are exactly the forest edges.
LabeledGraph two_sided_graph(const BipartiteForest& t) {
  LabeledGraph g;
  for (const auto& name : t.vertices()) g.add_vertex(name);
  for (const auto* side : {&t.v_side(), &t.w_side()}) {
    for (std::size_t i = 0; i < side->size(); ++i) {
      for (std::size_t j = i + 1; j < side->size(); ++j) {
        g.add_edge(g.index_of((*side)[i]), g.index_of((*side)[j]), 2);
      }
    }
  }
  for (const auto& e : t.edges()) g.add_edge(g.index_of(e.v), g.index_of(e.w), 2 * e.m);
  return g;
}

Character side_character(const BipartiteForest& t, const LabeledGraph& g, int c) {
  std::vector<Rational> values(g.vertex_count());
  for (const auto& v : t.v_side()) values[g.index_of(v)] = c;
  for (const auto& w : t.w_side()) values[g.index_of(w)] = -c;
  return Character(g, values);
}

}  // namespace

TEST_SUITE("kt-module") {
  TEST_CASE("forest validation") {
    CHECK_THROWS_AS(BipartiteForest({"a", "c"}, {"b", "d"},
                                    {{"a", "b", 2}, {"c", "b", 2}, {"c", "d", 2}, {"a", "d", 2}}),
                    DomainError);
    CHECK_THROWS_AS(BipartiteForest({"a"}, {"b"}, {{"a", "b", 1}}), DomainError);
    CHECK_THROWS_AS(BipartiteForest({"a"}, {"a"}, {}), DomainError);
    CHECK_THROWS_AS(BipartiteForest({"a"}, {"b"}, {{"b", "a", 2}}), DomainError);
    const auto t = f5_forest();
    CHECK(t.components().size() == 1);
    CHECK(t.basepoints() == std::vector<std::string>{"a"});
    CHECK(t.m("c", "b") == std::optional<int>(2));
    CHECK_FALSE(t.m("a", "c").has_value());
    const auto isolated = BipartiteForest({"v"}, {"w"}, {});
    CHECK(isolated.components().size() == 2);
    CHECK(t.with_basepoints({"b"}).basepoints() == std::vector<std::string>{"b"});
    CHECK_THROWS_AS(t.with_basepoints({"a", "b"}), DomainError);
  }

  TEST_CASE("K_T presentations") {
    const auto single = build_kt(BipartiteForest({"v"}, {"w"}, {{"v", "w", 2}}));
    REQUIRE(single.generators.size() == 1);
    REQUIRE(single.rows.size() == 1);
    const auto& sv = single.variables;
    CHECK(single.rows[0][0] == one(sv) + var(sv, "v") * var(sv, "w"));

    const auto kt = build_kt(f5_forest());
    const auto& v = kt.variables;
    ModulePresentation expected;
    expected.generators = {{"a", "b"}, {"c", "b"}};
    expected.variables = v;
    const auto z = ZP(IntegerRing{}, v);
    expected.rows = {{one(v) + var(v, "a") * var(v, "b"), z},
                     {z, one(v) + var(v, "c") * var(v, "b")},
                     {var(v, "c") - one(v), -(var(v, "a") - one(v))}};
    CHECK(kt.canonical() == expected.canonical());

    const auto free = build_kt(BipartiteForest({"v"}, {"w"}, {}));
    CHECK(free.generators.size() == 1);
    CHECK(free.canonical().rows.empty());

    const auto m3 = build_kt(BipartiteForest({"v"}, {"w"}, {{"v", "w", 3}}));
    const auto vw = var(m3.variables, "v") * var(m3.variables, "w");
    CHECK(m3.rows.at(0).at(0) == one(m3.variables) + vw + vw.pow(2));
  }

  TEST_CASE("relation family counts") {
    Gen gen(71);
    for (int i = 0; i < 50; ++i) {
      const auto t = gen.forest(6, {2, 3, 4});
      const auto p = build_kt(t);
      const std::size_t nv = t.v_side().size(), nw = t.w_side().size();
      CHECK(p.generators.size() == nv * nw);
      CHECK(p.rows.size() == t.edges().size() + nv * (nv - 1) / 2 * nw + nv * nw * (nw - 1) / 2);
    }
  }

  TEST_CASE("canonical form is order and sign invariant") {
    auto p = build_kt(f5_forest());
    auto q = p;
    std::reverse(q.rows.begin(), q.rows.end());
    for (auto& entry : q.rows[0]) entry = -entry;
    q.rows.push_back(p.rows[1]);
    CHECK(p.canonical() == q.canonical());
    CHECK(p.canonical().canonical() == p.canonical());
  }

  TEST_CASE("Koszul differential examples") {
    const std::vector<std::string> vars{"a", "b", "c"};
    const auto d2 = koszul_differential(vars, {0, 1});
    CHECK(d2.at({0}) == var(vars, "b") - one(vars));
    CHECK(d2.at({1}) == -(var(vars, "a") - one(vars)));
    CHECK(koszul_differential(vars, {0}).at({}) == var(vars, "a") - one(vars));
    const auto d3 = koszul_differential(vars, {0, 1, 2});
    CHECK(d3.at({1, 2}) == var(vars, "a") - one(vars));
    CHECK(d3.at({0, 2}) == -(var(vars, "b") - one(vars)));
    CHECK(d3.at({0, 1}) == var(vars, "c") - one(vars));
    const auto swapped = koszul_differential(vars, {1, 0});
    CHECK(swapped.at({0}) == -d2.at({0}));
    CHECK(is_zero(koszul_differential(vars, {1, 1})));
    CHECK_THROWS_AS(koszul_differential(vars, {0, 1, 2, 0}), DomainError);
    CHECK_THROWS_AS(koszul_differential(vars, {}), DomainError);
  }

  TEST_CASE("Koszul chain condition") {
    for (std::size_t n = 1; n <= 6; ++n) {
      std::vector<std::string> vars;
      for (std::size_t i = 0; i < n; ++i) vars.push_back("x" + std::to_string(i));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (i == j) continue;
          CHECK(is_zero(koszul_apply(vars, koszul_differential(vars, {i, j}))));
          for (std::size_t k = 0; k < n; ++k) {
            if (k == i || k == j) continue;
            CHECK(is_zero(koszul_apply(vars, koszul_differential(vars, {i, j, k}))));
          }
        }
      }
    }
  }

  TEST_CASE("two-sided presentations match K_T") {
    const auto f5 = fixture("f5");
    const auto chi5 = parse_character(f5, "a=1,b=-1,c=1");
    const auto split = two_sided_split(chi5);
    CHECK(split.first == std::vector<std::string>{"a", "c"});
    CHECK(split.second == std::vector<std::string>{"b"});
    CHECK(build_gamma0_presentation(chi5).canonical() == build_kt(f5_forest()).canonical());

    const auto f3 = fixture("f3");
    const auto chi3 = parse_character(f3, "a=1,b=-1");
    const auto g3 = build_gamma0_presentation(chi3);
    CHECK(g3.generators.size() == 1);
    CHECK(g3.canonical() ==
          build_kt(BipartiteForest({"a"}, {"b"}, {{"a", "b", 2}})).canonical());

    const auto f4 = fixture("f4");
    CHECK_THROWS_AS(build_gamma0_presentation(parse_character(f4, "a=1,b=-1,c=1,d=-1")),
                    DomainError);
    CHECK_THROWS_AS(build_gamma0_presentation(parse_character(f5, "a=1,b=0,c=1")), DomainError);
    CHECK_THROWS_AS(build_gamma0_presentation(parse_character(f5, "a=1,b=-1,c=1"),
                                              std::vector<std::string>{"a", "b"}),
                    DomainError);
  }

  TEST_CASE("random two-sided presentations match K_T") {
    Gen gen(72);
    for (int i = 0; i < 60; ++i) {
      const auto t = gen.forest(6, {2, 3, 4});
      const auto g = two_sided_graph(t);
      const auto chi = side_character(t, g, gen.uniform(1, 4) * (gen.coin() ? 1 : -1));
      const auto p = build_gamma0_presentation(chi, t.v_side());
      CHECK(p.canonical() == build_kt(t).canonical());
      const auto forest = dead_edge_forest(chi, t.v_side());
      CHECK(forest.edges().size() == t.edges().size());
    }
  }

  TEST_CASE("mu specialization examples") {
    const auto single = BipartiteForest({"v"}, {"w"}, {{"v", "w", 2}});
    const auto gs = single.as_graph();
    const auto s = mu_specialize(build_kt(single), single, parse_character(gs, "v=1,w=-1"));
    CHECK(s.field.order() == 2);
    CHECK(s.images.at("v").second == 1);
    CHECK(s.images.at("w") == std::make_pair(s.field.from_int(-1), -1L));
    REQUIRE(s.matrix.rows == 1);
    CHECK(s.matrix.at(0, 0).is_zero());

    const auto t = f5_forest();
    const auto g = t.as_graph();
    const auto s5 = mu_specialize(build_kt(t), t, parse_character(g, "a=1,b=-1,c=1"));
    CHECK(s5.images.at("a") == std::make_pair(s5.field.one(), 1L));
    CHECK(s5.images.at("b") == std::make_pair(s5.field.from_int(-1), -1L));
    CHECK(s5.images.at("c") == std::make_pair(s5.field.one(), 1L));
    REQUIRE(s5.matrix.rows == 3);
    REQUIRE(s5.matrix.cols == 2);
    std::size_t zero_rows = 0;
    for (std::size_t r = 0; r < 3; ++r) {
      const auto& x0 = s5.matrix.at(r, 0);
      const auto& x1 = s5.matrix.at(r, 1);
      if (x0.is_zero() && x1.is_zero()) {
        ++zero_rows;
      } else {
        CHECK((x0 + x1).is_zero());
        CHECK(x0.size() == 2);
      }
    }
    CHECK(zero_rows == 2);

    const auto free = BipartiteForest({"v"}, {"w"}, {});
    const auto sf = mu_specialize(build_kt(free), free, parse_character(free.as_graph(), "v=1,w=2"));
    CHECK(sf.matrix.rows == 0);

    CHECK_THROWS_AS(mu_specialize(build_kt(single), single, parse_character(gs, "v=1,w=1")),
                    DomainError);
    CHECK_THROWS_AS(mu_specialize(build_kt(single), single, parse_character(gs, "v=1/2,w=-1/2")),
                    DomainError);
  }

  TEST_CASE("certificates") {
    const auto single = BipartiteForest({"v"}, {"w"}, {{"v", "w", 2}});
    const auto c1 = certify_not_finitely_generated(single, parse_character(single.as_graph(), "v=1,w=-1"));
    CHECK(c1.rank == 0);
    CHECK(c1.generators == 1);
    CHECK(c1.conclusion == Conclusion::kNotFinitelyGenerated);

    const auto t = f5_forest();
    const auto c5 = certify_not_finitely_generated(t, parse_character(t.as_graph(), "a=1,b=-1,c=1"));
    CHECK(c5.rank == 1);
    CHECK(c5.generators == 2);
    CHECK(c5.order == 2);
    CHECK(c5.conclusion == Conclusion::kNotFinitelyGenerated);
    CHECK(to_string(c5.conclusion) == "not_finitely_generated");

    const auto m3 = BipartiteForest({"v"}, {"w"}, {{"v", "w", 3}});
    const auto c3 = certify_not_finitely_generated(m3, parse_character(m3.as_graph(), "v=2,w=-2"));
    CHECK(c3.rank == 0);
    CHECK(c3.order == 3);
    CHECK(c3.conclusion == Conclusion::kNotFinitelyGenerated);
    REQUIRE(c3.roots.size() == 1);
    CHECK(c3.roots[0] == std::make_pair(std::string("(v,w)"), std::string("zeta^1")));
    CHECK(to_string(Conclusion::kInconclusive) == "inconclusive");
  }

  TEST_CASE("random forests always certify") {
    Gen gen(73);
    for (int i = 0; i < 100; ++i) {
      const auto t = gen.forest(6, {2, 3, 4});
      const auto chi = gen.forest_character(t, 4);
      const auto c = certify_not_finitely_generated(t, chi);
      CHECK(c.rank < c.generators);
      CHECK(c.conclusion == Conclusion::kNotFinitelyGenerated);
    }
  }

  TEST_CASE("certificates do not depend on basepoints") {
    Gen gen(74);
    for (int i = 0; i < 60; ++i) {
      const auto t = gen.forest(6, {2, 3, 4});
      const auto chi = gen.forest_character(t, 3);
      std::vector<std::string> bases;
      for (const auto& comp : t.components()) bases.push_back(gen.pick(comp));
      const auto moved = t.with_basepoints(bases);
      const auto a = certify_not_finitely_generated(t, chi);
      const auto b = certify_not_finitely_generated(moved, chi);
      CHECK(a.rank == b.rank);
      CHECK(a.conclusion == b.conclusion);
      const auto s = mu_specialize(build_kt(moved), moved, chi);
      for (const auto& name : t.vertices()) {
        CHECK(s.images.at(name).second == chi.value(name).get_num().get_si());
      }
    }
  }
}
