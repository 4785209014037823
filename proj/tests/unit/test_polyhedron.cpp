#include <doctest.h>

#include <algorithm>

#include "artin/errors.hpp"
#include "artin/polyhedron.hpp"
#include "artin/sigma1.hpp"
#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace artin;
using namespace artin::testing;

namespace {

// Forms of a piece as sorted lists of vertex names with coefficient 1.
std::vector<std::vector<std::string>> forms_of(const LabeledGraph& g, const SubSphere& s) {
  std::vector<std::vector<std::string>> out;
  for (const auto& f : s.forms) {
    std::vector<std::string> names;
    for (VertexId v = 0; v < f.coefficients.size(); ++v) {
      if (f.coefficients[v] != 0) names.push_back(g.name(v));
    }
    out.push_back(names);
  }
  std::sort(out.begin(), out.end());
  return out;
}

SubSphere piece(std::size_t n, std::vector<std::vector<VertexId>> supports) {
  SubSphere s;
  for (const auto& sup : supports) {
    LinearForm f{std::vector<Rational>(n, Rational(0))};
    for (auto v : sup) f.coefficients[v] = 1;
    s.forms.push_back(f);
  }
  return s;
}

// Brute force: chi lies in the complement iff some vertex subset Y1 and set
// of removable edges, all vanishing at chi, disconnect or fail to dominate.
bool complement_oracle(const Character& chi) { return !predicate_oracle(chi); }

}  // namespace

TEST_SUITE("complement-polyhedron") {
  TEST_CASE("dominance pieces") {
    CHECK(dominance_pieces(fixture("f3")).empty());
    const auto f5 = fixture("f5");
    const auto d = dominance_pieces(f5);
    REQUIRE(d.size() == 2);
    CHECK(forms_of(f5, d[0]) == std::vector<std::vector<std::string>>{{"a"}, {"b"}});
    CHECK(forms_of(f5, d[1]) == std::vector<std::vector<std::string>>{{"b"}, {"c"}});
    CHECK(dominance_pieces(parse_graph("v a\nv b\nv c\ne a b 2\ne b c 2\ne a c 2")).empty());
  }

  TEST_CASE("disconnection pieces") {
    const auto f3 = fixture("f3");
    const auto d3 = disconnection_pieces(f3);
    REQUIRE(d3.size() == 1);
    CHECK(forms_of(f3, d3[0]) == std::vector<std::vector<std::string>>{{"a", "b"}});

    // Besides the two single-edge cuts, removing b leaves a and c apart.
    const auto f5 = fixture("f5");
    const auto d5 = disconnection_pieces(f5);
    REQUIRE(d5.size() == 3);
    CHECK(forms_of(f5, d5[0]) == std::vector<std::vector<std::string>>{{"a", "b"}});
    CHECK(forms_of(f5, d5[1]) == std::vector<std::vector<std::string>>{{"b", "c"}});
    CHECK(forms_of(f5, d5[2]) == std::vector<std::vector<std::string>>{{"b"}});
  }

  TEST_CASE("F1 contains the three-edge piece only through a real cut") {
    const auto f1 = fixture("f1");
    const auto pieces = unpruned_pieces(f1);
    // Removing all four dead-able edges of F1 leaves the two label-2 edges.
    const std::vector<std::vector<std::string>> cut4{{"s", "u"}, {"s", "w"}, {"v", "u"}, {"v", "w"}};
    bool found = false;
    for (const auto& p : pieces) found = found || forms_of(f1, p) == cut4;
    CHECK(found);
    for (const auto& p : pieces) {
      if (p.origin.kind == PieceOrigin::Kind::kDisconnection && p.origin.y1.empty()) {
        CHECK(p.origin.edges.size() == 4);
      }
    }
  }

  TEST_CASE("complement polyhedra of fixtures") {
    const auto f3 = fixture("f3");
    const auto p3 = complement_polyhedron(f3);
    REQUIRE(p3.pieces.size() == 1);
    CHECK(polyhedron_contains(p3, parse_character(f3, "a=1,b=-1")));
    CHECK_FALSE(polyhedron_contains(p3, parse_character(f3, "a=1,b=2")));

    const auto f5 = fixture("f5");
    const auto p5 = complement_polyhedron(f5);
    CHECK(p5.pieces.size() == 3);
    CHECK(polyhedron_contains(p5, parse_character(f5, "c=1")));
    CHECK(polyhedron_contains(p5, parse_character(f5, "a=1,c=1")));

    const auto k3 = parse_graph("v a\nv b\nv c\ne a b 2\ne b c 2\ne a c 2");
    CHECK(complement_polyhedron(k3).pieces.empty());
    CHECK_THROWS_AS(polyhedron_contains(p5, parse_character(f3, "a=1")), DomainError);
  }

  TEST_CASE("containment of subspheres") {
    const auto a = piece(3, {{0}, {1}});
    const auto b = piece(3, {{0, 1}});
    CHECK(subsphere_contained(a, b));
    CHECK_FALSE(subsphere_contained(b, a));
    CHECK(subsphere_contained(a, a));
    CHECK(subsphere_empty(piece(2, {{0}, {1}}), 2));
    CHECK_FALSE(subsphere_empty(piece(2, {{0, 1}}), 2));
  }

  TEST_CASE("containment agrees with solution-set inclusion on sampled points") {
    Gen gen(41);
    for (int i = 0; i < 200; ++i) {
      const std::size_t n = 4;
      auto random_piece = [&] {
        std::vector<std::vector<VertexId>> sup;
        const int k = gen.uniform(1, 3);
        for (int j = 0; j < k; ++j) {
          const auto u = static_cast<VertexId>(gen.uniform(0, 3));
          auto v = static_cast<VertexId>(gen.uniform(0, 3));
          sup.push_back(u == v ? std::vector<VertexId>{u} : std::vector<VertexId>{u, v});
        }
        return piece(n, sup);
      };
      const auto a = random_piece(), b = random_piece();
      // a in b iff the rank of a's forms equals that of a and b together.
      std::vector<std::vector<Rational>> rows_a, rows_ab;
      for (const auto& f : a.forms) rows_a.push_back(f.coefficients);
      rows_ab = rows_a;
      for (const auto& f : b.forms) rows_ab.push_back(f.coefficients);
      CHECK(subsphere_contained(a, b) == (gauss_rank(rows_a) == gauss_rank(rows_ab)));
    }
  }

  TEST_CASE("membership matches the complement of the predicate on all graphs") {
    Gen gen(42);
    for (int i = 0; i < 80; ++i) {
      const auto g = gen.graph(gen.uniform(1, 6), gen.uniform(2, 8) / 10.0, {2, 3, 4, 6});
      const auto p = complement_polyhedron(g);
      const auto raw = unpruned_pieces(g);
      for (const auto& s : p.pieces) {
        CHECK_FALSE(subsphere_empty(s, g.vertex_count()));
        for (const auto& f : s.forms) {
          int nonzero = 0;
          for (const auto& c : f.coefficients) {
            CHECK((c == 0 || c == 1));
            nonzero += c != 0;
          }
          if (s.origin.kind == PieceOrigin::Kind::kDominance) {
            CHECK(nonzero == 1);
          } else {
            CHECK((nonzero == 1 || nonzero == 2));
          }
        }
      }
      for (std::size_t a = 0; a < p.pieces.size(); ++a) {
        for (std::size_t b = 0; b < p.pieces.size(); ++b) {
          if (a != b) CHECK_FALSE(subsphere_contained(p.pieces[a], p.pieces[b]));
        }
      }
      for (int j = 0; j < 60; ++j) {
        const auto chi = gen.character(g, 3, 2, 0.35);
        const bool in_p = polyhedron_contains(p, chi);
        const bool in_raw = std::any_of(raw.begin(), raw.end(),
                                        [&](const SubSphere& s) { return subsphere_contains(s, chi); });
        CHECK(in_p == complement_oracle(chi));
        CHECK(in_p == in_raw);
        CHECK(in_p == polyhedron_contains(p, -chi));
        const auto status = decide_sigma1(chi).status;
        CHECK(in_p == (status != Status::kIn));
      }
    }
  }

  TEST_CASE("parallel enumeration is deterministic") {
    Gen gen(43);
    for (int i = 0; i < 10; ++i) {
      const auto g = gen.graph(7, 0.5, {2, 4, 6});
      const auto one = complement_polyhedron(g, 1);
      const auto four = complement_polyhedron(g, 4);
      REQUIRE(one.pieces.size() == four.pieces.size());
      for (std::size_t k = 0; k < one.pieces.size(); ++k) {
        CHECK(one.pieces[k].origin.y1 == four.pieces[k].origin.y1);
        CHECK(one.pieces[k].origin.edges == four.pieces[k].origin.edges);
      }
    }
  }

  TEST_CASE("vertex cap") {
    Gen gen(44);
    CHECK_THROWS_AS(complement_polyhedron(gen.graph(17, 0.2, {2})), DomainError);
  }
}
