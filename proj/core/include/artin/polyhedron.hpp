#pragma once

#include <cstddef>
#include <vector>

#include "artin/character.hpp"
#include "artin/graph.hpp"
#include "artin/rational.hpp"

namespace artin {

/// Rational linear form on Hom(G, R), one coefficient per carrier vertex.
struct LinearForm {
  std::vector<Rational> coefficients;

  Rational evaluate(const std::vector<Rational>& values) const;
  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

/// Where a piece comes from: a vertex set Y1 on which chi vanishes, plus for
/// disconnection pieces the cut edges e_i with chi(u_i) + chi(v_i) = 0.
struct PieceOrigin {
  enum class Kind { kDominance, kDisconnection };
  Kind kind = Kind::kDominance;
  std::vector<VertexId> y1;
  std::vector<Edge> edges;

  friend bool operator==(const PieceOrigin&, const PieceOrigin&) = default;
};

/// The characters (up to positive scaling) on which all forms vanish.
struct SubSphere {
  std::vector<LinearForm> forms;
  PieceOrigin origin;

  friend bool operator==(const SubSphere&, const SubSphere&) = default;
};

struct SphericalPolyhedron {
  LabeledGraph carrier;
  std::vector<SubSphere> pieces;
};

/// Rank of a rational matrix (exact Gaussian elimination).
std::size_t rational_rank(std::vector<std::vector<Rational>> rows);

/// The forms span the whole dual space, leaving only chi = 0.
bool subsphere_empty(const SubSphere& s, std::size_t dimension);

/// Solution set of a is contained in that of b: every form of b lies in the
/// span of the forms of a.
bool subsphere_contained(const SubSphere& a, const SubSphere& b);

bool subsphere_contains(const SubSphere& s, const Character& chi);

/// Pieces {chi = 0 on N[x]} for the closed neighborhoods that are minimal
/// under inclusion; full neighborhoods give empty pieces and are dropped.
std::vector<SubSphere> dominance_pieces(const LabeledGraph& g);

/// Pieces Delta(Y1, e_1..e_m): the full subgraph on V \ Y1 (at least two
/// vertices) becomes disconnected after removing the edges e_i, all with even
/// label > 2. Only the cuts delta(A) are generated (every disconnecting edge
/// set contains one, and its piece is contained in the cut's piece); the
/// result is pruned.
std::vector<SubSphere> disconnection_pieces(const LabeledGraph& g, std::size_t threads = 0);

/// Every candidate piece before containment pruning: all closed
/// neighborhoods and all (Y1, cut) pairs.
std::vector<SubSphere> unpruned_pieces(const LabeledGraph& g, std::size_t threads = 0);

/// Drops empty pieces and pieces contained in another, then sorts
/// canonically. Among pieces with equal solution sets the first in canonical
/// order is kept.
std::vector<SubSphere> prune_pieces(std::vector<SubSphere> pieces, std::size_t dimension);

/// Union of the dominance and disconnection pieces, pruned. Describes the
/// characters failing the living-subgraph criterion. Throws DomainError for
/// more than kMaxPolyhedronVertices vertices.
SphericalPolyhedron complement_polyhedron(const LabeledGraph& g, std::size_t threads = 0);

inline constexpr std::size_t kMaxPolyhedronVertices = 16;

/// Throws DomainError if chi lives on a different graph.
bool polyhedron_contains(const SphericalPolyhedron& p, const Character& chi);

/// Worker count: ARTIN_SIGMA_THREADS when set and positive, else hardware
/// concurrency.
std::size_t default_parallelism();

}  // namespace artin
