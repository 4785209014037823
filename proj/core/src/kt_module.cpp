#include "artin/kt_module.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "artin/errors.hpp"

namespace artin {

namespace {

using ZPoly = LaurentPoly<IntegerRing>;

std::size_t position(const std::vector<std::string>& names, const std::string& name) {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw DomainError("unknown vertex '" + name + "'");
  return static_cast<std::size_t>(it - names.begin());
}

// x_i - 1 over the given variables.
ZPoly variable_minus_one(const std::vector<std::string>& vars, std::size_t i) {
  return ZPoly::variable(IntegerRing{}, vars, i) - ZPoly::one(IntegerRing{}, vars);
}

// 1 + (x_a x_b) + ... + (x_a x_b)^(m-1).
ZPoly cyclotomic_sum(const std::vector<std::string>& vars, std::size_t a, std::size_t b, int m) {
  ZPoly out(IntegerRing{}, vars);
  for (int k = 0; k < m; ++k) {
    Exponent e(vars.size(), 0);
    e[a] += k;
    e[b] += k;
    out.add_term(std::move(e), 1);
  }
  return out;
}

std::vector<ZPoly> zero_row(const std::vector<std::string>& vars, std::size_t n) {
  return std::vector<ZPoly>(n, ZPoly(IntegerRing{}, vars));
}

bool is_zero_row(const std::vector<ZPoly>& row) {
  return std::all_of(row.begin(), row.end(), [](const ZPoly& p) { return p.is_zero(); });
}

std::string join_components(const std::vector<std::vector<std::string>>& comps) {
  std::string out;
  for (const auto& c : comps) {
    if (!out.empty()) out += ", ";
    out += "{";
    for (std::size_t i = 0; i < c.size(); ++i) out += (i ? "," : "") + c[i];
    out += "}";
  }
  return out;
}

}  // namespace

BipartiteForest::BipartiteForest(std::vector<std::string> v_side, std::vector<std::string> w_side,
                                 std::vector<ForestEdge> edges)
    : v_(std::move(v_side)), w_(std::move(w_side)), edges_(std::move(edges)) {
  const auto all = vertices();
  std::set<std::string> seen;
  for (const auto& n : all) {
    if (n.empty()) throw DomainError("empty vertex name in forest");
    if (!seen.insert(n).second) throw DomainError("vertex '" + n + "' appears twice in forest");
  }
  std::vector<std::size_t> parent(all.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::set<std::pair<std::string, std::string>> pairs;
  for (const auto& e : edges_) {
    if (std::find(v_.begin(), v_.end(), e.v) == v_.end() ||
        std::find(w_.begin(), w_.end(), e.w) == w_.end()) {
      throw DomainError("forest edge (" + e.v + "," + e.w + ") does not join V to W");
    }
    if (e.m < 2) throw DomainError("forest edge labels must be 2m with m >= 2");
    if (!pairs.emplace(e.v, e.w).second) {
      throw DomainError("duplicate forest edge (" + e.v + "," + e.w + ")");
    }
    const auto a = find(position(all, e.v)), b = find(position(all, e.w));
    if (a == b) throw DomainError("forest edges contain a cycle through " + e.v + " and " + e.w);
    parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> comp_of_root(all.size(), all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    const auto r = find(i);
    if (comp_of_root[r] == all.size()) {
      comp_of_root[r] = components_.size();
      components_.emplace_back();
      basepoints_.push_back(all[i]);
    }
    components_[comp_of_root[r]].push_back(all[i]);
  }
}

std::vector<std::string> BipartiteForest::vertices() const {
  std::vector<std::string> out = v_;
  out.insert(out.end(), w_.begin(), w_.end());
  return out;
}

std::optional<int> BipartiteForest::m(const std::string& v, const std::string& w) const {
  for (const auto& e : edges_) {
    if (e.v == v && e.w == w) return e.m;
  }
  return std::nullopt;
}

BipartiteForest BipartiteForest::with_basepoints(const std::vector<std::string>& basepoints) const {
  if (basepoints.size() != components_.size()) {
    throw DomainError("expected one basepoint per component (" +
                      std::to_string(components_.size()) + ")");
  }
  BipartiteForest out = *this;
  std::vector<bool> assigned(components_.size(), false);
  for (const auto& b : basepoints) {
    bool found = false;
    for (std::size_t c = 0; c < components_.size() && !found; ++c) {
      const auto& comp = components_[c];
      if (std::find(comp.begin(), comp.end(), b) == comp.end()) continue;
      if (assigned[c]) throw DomainError("two basepoints in the component of '" + b + "'");
      assigned[c] = true;
      out.basepoints_[c] = b;
      found = true;
    }
    if (!found) throw DomainError("basepoint '" + b + "' is not a forest vertex");
  }
  return out;
}

LabeledGraph BipartiteForest::as_graph() const {
  LabeledGraph g;
  for (const auto& n : vertices()) g.add_vertex(n);
  for (const auto& e : edges_) g.add_edge(e.v, e.w, 2 * e.m);
  return g;
}

ModulePresentation ModulePresentation::canonical() const {
  ModulePresentation out;
  out.variables = variables;
  std::sort(out.variables.begin(), out.variables.end());
  std::vector<std::size_t> perm(generators.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::sort(perm.begin(), perm.end(),
            [&](std::size_t a, std::size_t b) { return generators[a] < generators[b]; });
  for (auto i : perm) out.generators.push_back(generators[i]);

  std::vector<std::pair<std::vector<std::string>, std::vector<ZPoly>>> keyed;
  for (const auto& row : rows) {
    std::vector<ZPoly> r;
    for (auto i : perm) r.push_back(row.at(i).with_vars(out.variables));
    if (is_zero_row(r)) continue;
    const auto first = std::find_if(r.begin(), r.end(), [](const ZPoly& p) { return !p.is_zero(); });
    if (first->leading().second < 0) {
      for (auto& p : r) p = -p;
    }
    std::vector<std::string> key;
    for (const auto& p : r) key.push_back(p.to_string());
    keyed.emplace_back(std::move(key), std::move(r));
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  keyed.erase(std::unique(keyed.begin(), keyed.end(),
                          [](const auto& a, const auto& b) { return a.first == b.first; }),
              keyed.end());
  for (auto& [key, r] : keyed) out.rows.push_back(std::move(r));
  return out;
}

ModulePresentation build_kt(const BipartiteForest& t) {
  ModulePresentation p;
  p.variables = t.vertices();
  const auto& vs = t.v_side();
  const auto& ws = t.w_side();
  for (const auto& v : vs) {
    for (const auto& w : ws) p.generators.emplace_back(v, w);
  }
  auto gen = [&](const std::string& v, const std::string& w) {
    return position(vs, v) * ws.size() + position(ws, w);
  };
  auto var = [&](const std::string& name) { return position(p.variables, name); };
  const auto n = p.generators.size();

  for (const auto& e : t.edges()) {
    auto row = zero_row(p.variables, n);
    row[gen(e.v, e.w)] = cyclotomic_sum(p.variables, var(e.v), var(e.w), e.m);
    p.rows.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      for (const auto& w : ws) {
        auto row = zero_row(p.variables, n);
        row[gen(vs[i], w)] = variable_minus_one(p.variables, var(vs[j]));
        row[gen(vs[j], w)] = -variable_minus_one(p.variables, var(vs[i]));
        p.rows.push_back(std::move(row));
      }
    }
  }
  for (const auto& v : vs) {
    for (std::size_t i = 0; i < ws.size(); ++i) {
      for (std::size_t j = i + 1; j < ws.size(); ++j) {
        auto row = zero_row(p.variables, n);
        row[gen(v, ws[i])] = variable_minus_one(p.variables, var(ws[j]));
        row[gen(v, ws[j])] = -variable_minus_one(p.variables, var(ws[i]));
        p.rows.push_back(std::move(row));
      }
    }
  }
  return p;
}

KoszulElement koszul_differential(const std::vector<std::string>& vars,
                                  const std::vector<std::size_t>& wedge) {
  const std::size_t k = wedge.size();
  if (k < 1 || k > 3) throw DomainError("Koszul differential degree must be 1, 2 or 3");
  for (auto i : wedge) {
    if (i >= vars.size()) throw DomainError("wedge index out of range");
  }
  std::vector<std::size_t> sorted = wedge;
  int sign = 1;
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      if (wedge[a] == wedge[b]) return {};
      if (wedge[a] > wedge[b]) sign = -sign;
    }
  }
  std::sort(sorted.begin(), sorted.end());
  KoszulElement out;
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<std::size_t> face;
    for (std::size_t i = 0; i < k; ++i) {
      if (i != j) face.push_back(sorted[i]);
    }
    const int s = ((k - 1 - j) % 2 == 0 ? 1 : -1) * sign;
    ZPoly c = variable_minus_one(vars, sorted[j]);
    out.emplace(std::move(face), s > 0 ? c : -c);
  }
  return out;
}

KoszulElement koszul_apply(const std::vector<std::string>& vars, const KoszulElement& x) {
  KoszulElement out;
  for (const auto& [wedge, coeff] : x) {
    for (const auto& [face, c] : koszul_differential(vars, wedge)) {
      auto [it, inserted] = out.try_emplace(face, ZPoly(IntegerRing{}, vars));
      it->second += coeff * c;
      if (it->second.is_zero()) out.erase(it);
    }
  }
  return out;
}

std::pair<std::vector<std::string>, std::vector<std::string>> two_sided_split(
    const Character& chi, const std::optional<std::vector<std::string>>& first_side) {
  const LabeledGraph& g = chi.carrier();
  if (!g.is_even()) throw DomainError("the two-sided construction needs an even Artin group");
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (chi[v] == 0) throw DomainError("character vanishes at '" + g.name(v) + "'");
  }
  const LabeledGraph living = living_subgraph(chi);
  std::vector<std::vector<std::string>> comps;
  for (const auto& c : connected_components(living)) {
    std::vector<std::string> names;
    for (auto id : c) names.push_back(living.name(id));
    comps.push_back(std::move(names));
  }
  std::vector<bool> first(g.vertex_count(), false);
  if (first_side) {
    for (const auto& n : *first_side) first[g.index_of(n)] = true;
    for (const auto& c : comps) {
      const bool side = first[g.index_of(c.front())];
      for (const auto& n : c) {
        if (first[g.index_of(n)] != side) {
          throw DomainError("living component " + join_components({c}) + " is split by the bipartition");
        }
      }
    }
  } else if (comps.size() == 2) {
    for (const auto& n : comps.front()) first[g.index_of(n)] = true;
  } else {
    const bool sign_ok = comps.size() > 2 && std::all_of(comps.begin(), comps.end(), [&](const auto& c) {
      return std::all_of(c.begin(), c.end(), [&](const std::string& n) {
        return (chi.value(n) > 0) == (chi.value(c.front()) > 0);
      });
    });
    if (!sign_ok) {
      throw DomainError("living subgraph has " + std::to_string(comps.size()) +
                        " components: " + join_components(comps) +
                        "; give the first side explicitly");
    }
    const bool positive = chi[0] > 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) first[v] = (chi[v] > 0) == positive;
  }
  std::pair<std::vector<std::string>, std::vector<std::string>> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    (first[v] ? out.first : out.second).push_back(g.name(v));
  }
  if (out.first.empty() || out.second.empty()) throw DomainError("both sides must be nonempty");
  return out;
}

BipartiteForest dead_edge_forest(const Character& chi,
                                 const std::optional<std::vector<std::string>>& first_side) {
  auto [v_side, w_side] = two_sided_split(chi, first_side);
  const LabeledGraph& g = chi.carrier();
  std::vector<ForestEdge> edges;
  for (const auto& e : dead_edges(chi)) {
    std::string a = g.name(e.u), b = g.name(e.v);
    const bool a_first = std::find(v_side.begin(), v_side.end(), a) != v_side.end();
    const bool b_first = std::find(v_side.begin(), v_side.end(), b) != v_side.end();
    if (a_first == b_first) {
      throw DomainError("dead edge (" + a + "," + b + ") lies within one side");
    }
    if (!a_first) std::swap(a, b);
    edges.push_back(ForestEdge{a, b, e.label / 2});
  }
  return BipartiteForest(std::move(v_side), std::move(w_side), std::move(edges));
}

ModulePresentation build_gamma0_presentation(
    const Character& chi, const std::optional<std::vector<std::string>>& first_side) {
  const BipartiteForest forest = dead_edge_forest(chi, first_side);
  const LabeledGraph& g = chi.carrier();
  const auto& side1 = forest.v_side();
  const auto& side2 = forest.w_side();

  ModulePresentation p;
  p.variables = g.names();
  for (const auto& v : side1) {
    for (const auto& w : side2) p.generators.emplace_back(v, w);
  }
  const auto n = p.generators.size();
  std::vector<int> side_of(g.vertex_count(), 2);
  for (const auto& v : side1) side_of[g.index_of(v)] = 1;
  auto gen = [&](VertexId v, VertexId w) {
    return position(side1, g.name(v)) * side2.size() + position(side2, g.name(w));
  };

  for (const auto& e : forest.edges()) {
    auto row = zero_row(p.variables, n);
    const auto a = g.index_of(e.v), b = g.index_of(e.w);
    row[gen(a, b)] = cyclotomic_sum(p.variables, a, b, e.m);
    p.rows.push_back(std::move(row));
  }
  for (const auto& vn : side1) {
    for (const auto& wn : side2) {
      const auto v = g.index_of(vn), w = g.index_of(wn);
      for (VertexId t = 0; t < g.vertex_count(); ++t) {
        if (t == v || t == w) continue;
        auto row = zero_row(p.variables, n);
        for (const auto& [pair, c] : koszul_differential(p.variables, {v, w, t})) {
          const VertexId a = pair[0], b = pair[1];
          if (side_of[a] == side_of[b]) continue;
          if (side_of[a] == 1) {
            row[gen(a, b)] += c;
          } else {
            row[gen(b, a)] -= c;
          }
        }
        if (!is_zero_row(row)) p.rows.push_back(std::move(row));
      }
    }
  }
  return p;
}

Specialization mu_specialize(const ModulePresentation& p, const BipartiteForest& t,
                             const Character& chi) {
  std::map<std::string, long> values;
  for (const auto& q : t.vertices()) {
    const Rational& r = chi.value(q);
    if (r.get_den() != 1) throw DomainError("character value at '" + q + "' is not an integer");
    if (r == 0) throw DomainError("character vanishes at '" + q + "'");
    if (!r.get_num().fits_slong_p()) throw DomainError("character value at '" + q + "' too large");
    values[q] = r.get_num().get_si();
  }
  unsigned order = 1;
  for (const auto& e : t.edges()) {
    if (values[e.v] != -values[e.w]) {
      throw DomainError("character is not opposite across tree edge (" + e.v + "," + e.w + ")");
    }
    order = std::lcm(order, static_cast<unsigned>(e.m));
  }
  Specialization s;
  s.field = CyclotomicField(order);
  const auto& field = s.field;

  for (const auto& b : t.basepoints()) {
    s.images[b] = {field.one(), values[b]};
    std::deque<std::string> queue{b};
    while (!queue.empty()) {
      const std::string cur = queue.front();
      queue.pop_front();
      const auto [coeff, exp] = s.images.at(cur);
      for (const auto& e : t.edges()) {
        std::string next;
        if (e.v == cur) next = e.w;
        if (e.w == cur) next = e.v;
        if (next.empty() || s.images.count(next)) continue;
        const auto lambda = field.zeta(static_cast<long>(order / static_cast<unsigned>(e.m)));
        const long next_exp = -exp;
        if (next_exp != values[next]) {
          throw DomainError("specialization of '" + next + "' is not a multiple of x^chi");
        }
        s.images[next] = {field.mul(lambda, field.inverse(coeff)), next_exp};
        queue.push_back(next);
      }
    }
  }

  const std::vector<std::string> xvars{"x"};
  using KPoly = LaurentPoly<CyclotomicField>;
  std::vector<KPoly> images;
  for (const auto& v : p.variables) {
    auto it = s.images.find(v);
    if (it == s.images.end()) throw DomainError("variable '" + v + "' is not a forest vertex");
    images.push_back(KPoly::monomial(field, xvars, Exponent{static_cast<int>(it->second.second)},
                                     it->second.first));
  }
  s.matrix = PolyMatrix<CyclotomicField>(field, xvars, p.rows.size(), p.generators.size());
  for (std::size_t r = 0; r < p.rows.size(); ++r) {
    for (std::size_t c = 0; c < p.generators.size(); ++c) {
      const auto& entry = p.rows[r].at(c);
      if (entry.is_zero()) continue;
      s.matrix.at(r, c) = entry.substitute(
          images, [&](const Integer& z) { return field.from_rational(Rational(z)); });
    }
  }
  return s;
}

std::string to_string(Conclusion c) {
  return c == Conclusion::kNotFinitelyGenerated ? "not_finitely_generated" : "inconclusive";
}

Certificate certify_not_finitely_generated(const BipartiteForest& t, const Character& chi) {
  const auto presentation = build_kt(t);
  const auto specialized = mu_specialize(presentation, t, chi);
  Certificate cert;
  cert.order = specialized.field.order();
  for (const auto& e : t.edges()) {
    cert.roots.emplace_back("(" + e.v + "," + e.w + ")",
                            "zeta^" + std::to_string(cert.order / static_cast<unsigned>(e.m)));
  }
  for (const auto& b : t.basepoints()) cert.basepoints.emplace_back(b, chi.value(b).get_num());
  cert.generators = presentation.generators.size();
  cert.rank = matrix_rank(specialized.matrix);
  cert.conclusion =
      cert.rank < cert.generators ? Conclusion::kNotFinitelyGenerated : Conclusion::kInconclusive;
  return cert;
}

}  // namespace artin
