#include "artin/fox.hpp"

#include <algorithm>
#include <numeric>

#include "artin/errors.hpp"

namespace artin {

GroupRingElement fox_derivative(const FreeWord& w, std::string_view x) {
  GroupRingElement out;
  FreeWord prefix;
  for (const auto& l : w.letters()) {
    const FreeWord letter(std::vector<Letter>{l});
    if (l.gen == x) {
      if (l.exp > 0) {
        out.add_term(prefix, 1);
      } else {
        out.add_term(prefix * letter, -1);
      }
    }
    prefix *= letter;
  }
  return out;
}

FreeWord artin_relator(const std::string& u, const std::string& v, int n, RelatorForm form) {
  if (n < 2) throw DomainError("relator length must be at least 2");
  const FreeWord fu = FreeWord::generator(u);
  const FreeWord fv = FreeWord::generator(v);
  if (form == RelatorForm::kEvenCommutator) {
    if (n % 2 != 0) throw DomainError("commutator form needs an even label, got " + std::to_string(n));
    return commutator((fu * fv).pow(n / 2), fu);
  }
  FreeWord left, right;
  for (int i = 0; i < n; ++i) {
    left *= i % 2 == 0 ? fu : fv;
    right *= i % 2 == 0 ? fv : fu;
  }
  return left * right.inverse();
}

AbelianizationMap::AbelianizationMap(const LabeledGraph& g) : carrier_(g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& e : g.edges()) {
    if (e.label % 2 == 0) continue;
    const auto a = find(e.u), b = find(e.v);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  // Roots are the smallest vertex of each class.
  class_of_vertex_.assign(n, 0);
  std::vector<std::size_t> root_class(n, n);
  for (VertexId v = 0; v < n; ++v) {
    const auto r = find(v);
    if (root_class[r] == n) {
      root_class[r] = variables_.size();
      variables_.push_back(g.name(r));
    }
    class_of_vertex_[v] = root_class[r];
  }
}

std::vector<std::vector<std::string>> AbelianizationMap::classes() const {
  std::vector<std::vector<std::string>> out(variables_.size());
  for (VertexId v = 0; v < carrier_.vertex_count(); ++v) {
    out[class_of_vertex_[v]].push_back(carrier_.name(v));
  }
  return out;
}

std::size_t AbelianizationMap::class_of(std::string_view generator) const {
  return class_of_vertex_.at(carrier_.index_of(generator));
}

LaurentPoly<IntegerRing> abelianize(const FreeWord& w, const AbelianizationMap& m) {
  Exponent e(m.class_count(), 0);
  for (const auto& l : w.letters()) e[m.class_of(l.gen)] += l.exp;
  return LaurentPoly<IntegerRing>::monomial(IntegerRing{}, m.variables(), std::move(e), 1);
}

LaurentPoly<IntegerRing> abelianize(const GroupRingElement& x, const AbelianizationMap& m) {
  LaurentPoly<IntegerRing> out(IntegerRing{}, m.variables());
  for (const auto& [w, c] : x.terms()) out += abelianize(w, m).scaled(c);
  return out;
}

Presentation artin_presentation(const LabeledGraph& g) {
  Presentation p;
  p.generators = g.names();
  for (const auto& e : g.edges()) {
    const auto form = e.label % 2 == 0 ? RelatorForm::kEvenCommutator : RelatorForm::kStandard;
    p.relators.push_back(artin_relator(g.name(e.u), g.name(e.v), e.label, form));
  }
  return p;
}

JacobianMatrix jacobian(const std::vector<std::string>& generators,
                        const std::vector<FreeWord>& relators, const AbelianizationMap& m) {
  JacobianMatrix j;
  j.generators = generators;
  j.relators = relators;
  j.variables = m.variables();
  for (const auto& r : relators) {
    std::vector<LaurentPoly<IntegerRing>> row;
    for (const auto& x : generators) row.push_back(abelianize(fox_derivative(r, x), m));
    j.entries.push_back(std::move(row));
  }
  return j;
}

JacobianMatrix jacobian(const LabeledGraph& g) {
  const auto p = artin_presentation(g);
  return jacobian(p.generators, p.relators, AbelianizationMap(g));
}

}  // namespace artin
