#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "artin/graph.hpp"
#include "artin/rational.hpp"

namespace artin {

/// Nonzero rational character of the Artin group of a graph, given by its
/// values on the vertices. Endpoints of odd-labeled edges carry equal values.
class Character {
 public:
  /// Validates: values.size() == vertex count, not all zero, equal values
  /// across odd-labeled edges. Throws DomainError.
  Character(LabeledGraph carrier, std::vector<Rational> values);

  const LabeledGraph& carrier() const noexcept { return carrier_; }
  const std::vector<Rational>& values() const noexcept { return values_; }
  const Rational& operator[](VertexId v) const { return values_.at(v); }
  const Rational& value(std::string_view name) const { return values_.at(carrier_.index_of(name)); }

  /// Vertices with nonzero value.
  VertexSet support() const;
  bool is_integral() const;

  Character operator-() const;
  /// r * chi; throws DomainError for r == 0.
  Character scaled(const Rational& r) const;

  friend bool operator==(const Character&, const Character&) = default;

 private:
  LabeledGraph carrier_;
  std::vector<Rational> values_;
};

/// Parses `name=p/q,name=p,...`; unspecified vertices default to 0.
/// Unknown names and bad rationals raise ParseError; zero characters and
/// odd-edge mismatches raise DomainError.
Character parse_character(const LabeledGraph& g, std::string_view text);
Character make_character(const LabeledGraph& g,
                         const std::vector<std::pair<std::string, Rational>>& entries);

std::string format_character(const Character& chi);

/// Full subgraph on the support of chi.
LabeledGraph lf_subgraph(const Character& chi);

/// Edges with even label > 2 whose endpoint values sum to zero.
std::vector<Edge> dead_edges(const Character& chi);

/// lf_subgraph(chi) without the dead edges.
LabeledGraph living_subgraph(const Character& chi);

}  // namespace artin
