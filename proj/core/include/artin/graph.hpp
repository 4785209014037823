#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "artin/rational.hpp"

namespace artin {

using VertexId = std::size_t;

/// Undirected labeled edge, stored with u < v (declaration indices).
struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  int label = 2;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite simplicial graph with integer edge labels >= 2. The labels define
/// the Artin group: one braid relation of the given length per edge.
///
/// Vertices keep their declaration order, which every output follows.
class LabeledGraph {
 public:
  LabeledGraph() = default;

  /// Throws DomainError on duplicate or malformed names.
  VertexId add_vertex(std::string name);

  /// Throws DomainError on loops, duplicate edges, labels < 2 and unknown
  /// endpoints.
  void add_edge(VertexId a, VertexId b, int label);
  void add_edge(std::string_view a, std::string_view b, int label);

  std::size_t vertex_count() const noexcept { return names_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return names_.empty(); }

  const std::string& name(VertexId v) const { return names_.at(v); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<VertexId> find(std::string_view name) const;
  /// Like find, but throws DomainError for an unknown name.
  VertexId index_of(std::string_view name) const;

  /// Sorted by (u, v).
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<VertexId>& neighbors(VertexId v) const { return adjacency_.at(v); }
  std::optional<int> label(VertexId a, VertexId b) const;

  /// True when every label is even (vacuously true without edges).
  bool is_even() const;

  friend bool operator==(const LabeledGraph& a, const LabeledGraph& b) {
    return a.names_ == b.names_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::string> names_;
  std::map<std::string, VertexId, std::less<>> index_;
  std::vector<Edge> edges_;
  std::vector<std::vector<VertexId>> adjacency_;
};

/// Subset of the vertices of a carrier graph.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : members_(universe, false) {}

  static VertexSet all(const LabeledGraph& g);
  /// Throws DomainError for names not in g.
  static VertexSet from_names(const LabeledGraph& g, std::span<const std::string> names);
  static VertexSet from_ids(std::size_t universe, std::span<const VertexId> ids);

  void insert(VertexId v) { members_.at(v) = true; }
  void erase(VertexId v) { members_.at(v) = false; }
  bool contains(VertexId v) const { return v < members_.size() && members_[v]; }
  std::size_t universe() const noexcept { return members_.size(); }
  std::size_t size() const;
  std::vector<VertexId> ids() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<bool> members_;
};

/// Character lines (`c <name> <rational>`) found alongside a graph.
struct ArtinDocument {
  LabeledGraph graph;
  std::vector<std::pair<std::string, Rational>> character;
};

/// Parses the line-based `.artin` format. Throws ParseError with the
/// offending line number.
ArtinDocument parse_artin_document(std::string_view text);
LabeledGraph parse_graph(std::string_view text);
std::string format_graph(const LabeledGraph& g);

/// Full (induced) subgraph on s, vertices in carrier order.
LabeledGraph full_subgraph(const LabeledGraph& g, const VertexSet& s);
LabeledGraph full_subgraph(const LabeledGraph& g, std::span<const std::string> names);

/// Same vertices, only the edges accepted by keep.
template <class Pred>
LabeledGraph filter_edges(const LabeledGraph& g, Pred keep) {
  LabeledGraph out;
  for (const auto& n : g.names()) out.add_vertex(n);
  for (const auto& e : g.edges()) {
    if (keep(e)) out.add_edge(e.u, e.v, e.label);
  }
  return out;
}

/// Components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<VertexId>> connected_components(const LabeledGraph& g);

/// The empty graph and one-vertex graphs count as connected.
bool is_connected(const LabeledGraph& g);

/// Every vertex outside s has a neighbor in s.
bool is_dominant(const LabeledGraph& g, const VertexSet& s);

/// Biconnected component.
struct Block {
  std::vector<VertexId> vertices;  // sorted
  std::vector<Edge> edges;         // sorted

  friend bool operator==(const Block&, const Block&) = default;
};

/// Biconnected components, ordered by their smallest edge. Isolated vertices
/// belong to no block.
std::vector<Block> blocks(const LabeledGraph& g);

enum class HypothesisMode {
  kSimpleCycle,  // no even simple cycle with all labels > 2
  kStrict,       // labels > 2 span a forest
};

std::string_view to_string(HypothesisMode mode);
/// Accepts "simple-cycle" and "strict". Throws ParseError.
HypothesisMode parse_hypothesis_mode(std::string_view text);

/// Whether the even-cycle hypothesis holds on the subgraph of edges with
/// label > 2. Decided through the block decomposition: a graph has no even
/// simple cycle iff each block is a single edge or an odd cycle.
bool check_hypothesis(const LabeledGraph& g, HypothesisMode mode = HypothesisMode::kSimpleCycle);

/// A closed walk violating the hypothesis, as a vertex sequence without the
/// repeated start. In simple-cycle mode this is an even simple cycle; in strict
/// mode an even simple cycle if one exists, otherwise an odd cycle walked twice.
/// Cycles start at their smallest vertex and continue towards the smaller
/// neighbor. Empty when the hypothesis holds.
std::vector<VertexId> hypothesis_witness(const LabeledGraph& g,
                                         HypothesisMode mode = HypothesisMode::kSimpleCycle);

/// |E| - |V| + number of components (rank of the free group pi_1).
long cycle_rank(const LabeledGraph& g);

}  // namespace artin
