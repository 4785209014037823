#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "artin/character.hpp"
#include "artin/graph.hpp"
#include "artin/kt_module.hpp"
#include "artin/laurent.hpp"
#include "artin/word.hpp"

namespace artin::testing {

/// Deterministic source of random test inputs.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }
  template <class T>
  const T& pick(const std::vector<T>& items) {
    return items.at(static_cast<std::size_t>(uniform(0, static_cast<int>(items.size()) - 1)));
  }
  std::mt19937_64& engine() { return rng_; }

  /// Vertices v0..v{n-1}, each pair joined with probability p, labels drawn
  /// from the list.
  LabeledGraph graph(int n, double p, const std::vector<int>& labels) {
    LabeledGraph g;
    for (int i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (coin(p)) g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(j), pick(labels));
      }
    }
    return g;
  }

  /// Value in [-bound, bound] with denominator at most max_den.
  Rational rational(int bound, int max_den) {
    const int den = uniform(1, max_den);
    Rational r(uniform(-bound * den, bound * den), den);
    r.canonicalize();
    return r;
  }

  /// Nonzero character with rational values; odd-edge classes share a value.
  Character character(const LabeledGraph& g, int bound, int max_den, double zero_prob = 0.2) {
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> parent(n);
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x];
      return x;
    };
    for (const auto& e : g.edges()) {
      if (e.label % 2 == 1) parent[find(e.u)] = find(e.v);
    }
    while (true) {
      std::vector<Rational> root_value(n);
      for (std::size_t v = 0; v < n; ++v) {
        if (find(v) == v) root_value[v] = coin(zero_prob) ? Rational(0) : rational(bound, max_den);
      }
      std::vector<Rational> values(n);
      bool nonzero = false;
      for (std::size_t v = 0; v < n; ++v) {
        values[v] = root_value[find(v)];
        nonzero = nonzero || values[v] != 0;
      }
      if (nonzero) return Character(g, values);
    }
  }

  /// Reduced or unreduced word of the given length over the generators.
  FreeWord word(int length, const std::vector<std::string>& gens) {
    std::vector<Letter> letters;
    for (int i = 0; i < length; ++i) letters.push_back(Letter{pick(gens), coin() ? 1 : -1});
    return FreeWord(letters);
  }

  /// Random Laurent polynomial with up to `terms` terms, exponents in
  /// [-e, e] and small coefficients.
  template <class Ring, class CoeffFn>
  LaurentPoly<Ring> laurent(const Ring& ring, const std::vector<std::string>& vars, int terms,
                            int e, CoeffFn coeff) {
    LaurentPoly<Ring> p(ring, vars);
    const int count = uniform(0, terms);
    for (int t = 0; t < count; ++t) {
      Exponent x(vars.size());
      for (auto& c : x) c = uniform(-e, e);
      p.add_term(std::move(x), coeff(*this));
    }
    return p;
  }

  /// Random bipartite forest on at most max_vertices vertices (both sides
  /// nonempty) with labels 2m, m drawn from ms.
  BipartiteForest forest(int max_vertices, const std::vector<int>& ms) {
    const int n = uniform(2, max_vertices);
    const int nv = uniform(1, n - 1);
    std::vector<std::string> vs, ws;
    for (int i = 0; i < nv; ++i) vs.push_back("p" + std::to_string(i));
    for (int i = nv; i < n; ++i) ws.push_back("q" + std::to_string(i));
    std::vector<int> parent(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = i;
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
      return x;
    };
    std::vector<ForestEdge> edges;
    for (int i = 0; i < nv; ++i) {
      for (int j = nv; j < n; ++j) {
        if (!coin(0.5)) continue;
        const int a = find(i), b = find(j);
        if (a == b) continue;
        parent[static_cast<std::size_t>(a)] = b;
        edges.push_back(ForestEdge{vs[static_cast<std::size_t>(i)],
                                   ws[static_cast<std::size_t>(j - nv)], pick(ms)});
      }
    }
    return BipartiteForest(vs, ws, edges);
  }

  /// Integral character on the forest graph with chi(v) = -chi(w) along
  /// tree edges, nonzero everywhere.
  Character forest_character(const BipartiteForest& t, int bound) {
    const LabeledGraph g = t.as_graph();
    std::vector<Rational> values(g.vertex_count());
    const auto& vs = t.v_side();
    for (const auto& comp : t.components()) {
      int c = 0;
      while (c == 0) c = uniform(-bound, bound);
      for (const auto& name : comp) {
        const bool in_v = std::find(vs.begin(), vs.end(), name) != vs.end();
        values[g.index_of(name)] = in_v ? c : -c;
      }
    }
    return Character(g, values);
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace artin::testing
