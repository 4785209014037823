#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "artin/graph.hpp"
#include "artin/laurent.hpp"
#include "artin/rings.hpp"
#include "artin/word.hpp"

namespace artin {

/// Fox derivative d w / d x, computed letter by letter with
/// d(gh) = dg + g dh and d(g^-1) = -g^-1 dg.
GroupRingElement fox_derivative(const FreeWord& w, std::string_view x);

enum class RelatorForm {
  kStandard,        // (uvu...)_n (vuv...)_n^-1
  kEvenCommutator,  // [(uv)^m, u] for n = 2m
};

/// Braid relator of length n between u and v. Throws DomainError for n < 2
/// or for the commutator form with odd n.
FreeWord artin_relator(const std::string& u, const std::string& v, int n, RelatorForm form);

/// Map from generators to the free abelian quotient of an Artin group:
/// vertices joined by odd-labeled paths become one Laurent variable, named
/// after the first vertex of the class.
class AbelianizationMap {
 public:
  explicit AbelianizationMap(const LabeledGraph& g);

  const LabeledGraph& carrier() const noexcept { return carrier_; }
  std::size_t class_count() const noexcept { return variables_.size(); }
  /// Variable names, one per class, ordered by first vertex.
  const std::vector<std::string>& variables() const noexcept { return variables_; }
  /// Vertex names per class.
  std::vector<std::vector<std::string>> classes() const;
  /// Throws DomainError for unknown generators.
  std::size_t class_of(std::string_view generator) const;

 private:
  LabeledGraph carrier_;
  std::vector<std::size_t> class_of_vertex_;
  std::vector<std::string> variables_;
};

LaurentPoly<IntegerRing> abelianize(const FreeWord& w, const AbelianizationMap& m);
LaurentPoly<IntegerRing> abelianize(const GroupRingElement& e, const AbelianizationMap& m);

struct Presentation {
  std::vector<std::string> generators;
  std::vector<FreeWord> relators;
};

/// One generator per vertex and one relator per edge: the commutator form for
/// even labels, the standard form for odd labels.
Presentation artin_presentation(const LabeledGraph& g);

struct JacobianMatrix {
  std::vector<std::string> generators;  // columns
  std::vector<FreeWord> relators;       // rows
  std::vector<std::string> variables;
  std::vector<std::vector<LaurentPoly<IntegerRing>>> entries;

  std::size_t rows() const noexcept { return entries.size(); }
  std::size_t cols() const noexcept { return generators.size(); }
};

/// Entry (r, x) is the abelianized Fox derivative of relator r by x.
JacobianMatrix jacobian(const std::vector<std::string>& generators,
                        const std::vector<FreeWord>& relators, const AbelianizationMap& m);
JacobianMatrix jacobian(const LabeledGraph& g);

}  // namespace artin
