#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "artin/character.hpp"
#include "artin/cyclotomic.hpp"
#include "artin/graph.hpp"
#include "artin/laurent.hpp"
#include "artin/poly_matrix.hpp"
#include "artin/rings.hpp"

namespace artin {

/// Tree edge between v in V and w in W with label 2m.
struct ForestEdge {
  std::string v;
  std::string w;
  int m = 2;

  friend auto operator<=>(const ForestEdge&, const ForestEdge&) = default;
};

/// Forest on a vertex set split into sides V and W, every edge joining the
/// sides, with one basepoint per connected component.
class BipartiteForest {
 public:
  /// Validates names, sides, m >= 2 and acyclicity (DomainError). Basepoints
  /// default to the first vertex (V before W) of each component.
  BipartiteForest(std::vector<std::string> v_side, std::vector<std::string> w_side,
                  std::vector<ForestEdge> edges);

  const std::vector<std::string>& v_side() const noexcept { return v_; }
  const std::vector<std::string>& w_side() const noexcept { return w_; }
  const std::vector<ForestEdge>& edges() const noexcept { return edges_; }
  /// V followed by W.
  std::vector<std::string> vertices() const;
  /// Components as vertex-name lists, ordered by first vertex.
  const std::vector<std::vector<std::string>>& components() const noexcept { return components_; }
  const std::vector<std::string>& basepoints() const noexcept { return basepoints_; }
  std::optional<int> m(const std::string& v, const std::string& w) const;

  /// Same forest with the given basepoints, one per component in any order.
  BipartiteForest with_basepoints(const std::vector<std::string>& basepoints) const;

  /// Graph on V followed by W with edge labels 2m.
  LabeledGraph as_graph() const;

 private:
  std::vector<std::string> v_;
  std::vector<std::string> w_;
  std::vector<ForestEdge> edges_;
  std::vector<std::vector<std::string>> components_;
  std::vector<std::string> basepoints_;
};

/// Finitely presented module over an integral Laurent ring: free on the
/// generators modulo the row space of the relation rows.
struct ModulePresentation {
  std::vector<std::pair<std::string, std::string>> generators;
  std::vector<std::string> variables;
  std::vector<std::vector<LaurentPoly<IntegerRing>>> rows;

  /// Variables and generators sorted by name, zero rows dropped, each row
  /// signed so its first nonzero entry has a positive lex-leading
  /// coefficient, rows sorted and deduplicated.
  ModulePresentation canonical() const;

  friend bool operator==(const ModulePresentation&, const ModulePresentation&) = default;
};

/// Generators f_{v,w} for all v in V, w in W. Relations: the cyclotomic sum
/// (1 + vw + ... + (vw)^(m-1)) f_{v,w} per tree edge, (t-1) f_{v,w} -
/// (v-1) f_{t,w} for v before t in V and each w, and (s-1) f_{v,w} -
/// (w-1) f_{v,s} for each v and w before s in W.
ModulePresentation build_kt(const BipartiteForest& t);

/// Element of the Koszul complex: sorted index tuples (wedge factors) with
/// Laurent coefficients.
using KoszulElement = std::map<std::vector<std::size_t>, LaurentPoly<IntegerRing>>;

/// d_k of the wedge e_{i1} ^ ... ^ e_{ik}, k = 1, 2, 3, with
/// d(e_1 ^ ... ^ e_k) = sum_j (-1)^(k-1-j) (x_{ij} - 1) e_{...omit ij...}.
/// Indices may come in any order (the sign of the sorting permutation is
/// applied); repeated indices give zero. Throws DomainError for other k.
KoszulElement koszul_differential(const std::vector<std::string>& vars,
                                  const std::vector<std::size_t>& wedge);
/// Linear extension of koszul_differential.
KoszulElement koszul_apply(const std::vector<std::string>& vars, const KoszulElement& x);

/// Sides of the two-sided construction for an even graph and a character
/// that is nonzero on every vertex. With an explicit first side, every living
/// component must lie on one side. Without it, the two living components are
/// used; with more components, the split by sign of chi is used when each
/// component has constant sign. Throws DomainError otherwise, listing the
/// components.
std::pair<std::vector<std::string>, std::vector<std::string>> two_sided_split(
    const Character& chi, const std::optional<std::vector<std::string>>& first_side = std::nullopt);

/// Dead edges of chi as a forest with V, W the sides of two_sided_split.
/// Throws DomainError if a dead edge stays within one side or they contain a
/// cycle.
BipartiteForest dead_edge_forest(
    const Character& chi, const std::optional<std::vector<std::string>>& first_side = std::nullopt);

/// Presentation of G0'/G0'' for the two-sided graph built from chi: generators
/// e_v ^ e_w (v on the first side, w on the second), the cyclotomic sum per
/// dead edge, and the projections of d_3(e_v ^ e_w ^ e_t) for every third
/// vertex t, where wedges of two same-side vertices vanish.
ModulePresentation build_gamma0_presentation(
    const Character& chi, const std::optional<std::vector<std::string>>& first_side = std::nullopt);

/// Image of the relation matrix under mu: vw -> lambda_{v,w} =
/// zeta_M^(M/m), basepoint b -> x^chi(b), propagated along tree edges.
struct Specialization {
  CyclotomicField field{1};
  std::map<std::string, std::pair<CyclotomicField::Element, long>> images;  // coeff * x^exp
  PolyMatrix<CyclotomicField> matrix;
};

/// chi must be integral and nonzero on the forest vertices with
/// chi(v) = -chi(w) along tree edges; it may live on any graph containing
/// those vertex names. Throws DomainError.
Specialization mu_specialize(const ModulePresentation& p, const BipartiteForest& t,
                             const Character& chi);

enum class Conclusion { kNotFinitelyGenerated, kInconclusive };
std::string to_string(Conclusion c);

struct Certificate {
  unsigned order = 1;                                        // M
  std::vector<std::pair<std::string, std::string>> roots;    // "(v,w)" -> "zeta^k"
  std::vector<std::pair<std::string, Integer>> basepoints;   // basepoint -> chi value
  std::size_t generators = 0;
  std::size_t rank = 0;
  Conclusion conclusion = Conclusion::kInconclusive;
};

Certificate certify_not_finitely_generated(const BipartiteForest& t, const Character& chi);

}  // namespace artin
