#include "artin/character.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "artin/errors.hpp"

namespace artin {

Character::Character(LabeledGraph carrier, std::vector<Rational> values)
    : carrier_(std::move(carrier)), values_(std::move(values)) {
  if (values_.size() != carrier_.vertex_count()) {
    throw DomainError("character has " + std::to_string(values_.size()) + " values for " +
                      std::to_string(carrier_.vertex_count()) + " vertices");
  }
  if (std::all_of(values_.begin(), values_.end(), [](const Rational& r) { return r == 0; })) {
    throw DomainError("character is zero");
  }
  for (const auto& e : carrier_.edges()) {
    if (e.label % 2 == 1 && values_[e.u] != values_[e.v]) {
      throw DomainError("odd edge " + carrier_.name(e.u) + "-" + carrier_.name(e.v) +
                        " (label " + std::to_string(e.label) + ") needs equal values, got " +
                        to_string(values_[e.u]) + " and " + to_string(values_[e.v]));
    }
  }
}

VertexSet Character::support() const {
  VertexSet s(values_.size());
  for (VertexId v = 0; v < values_.size(); ++v) {
    if (values_[v] != 0) s.insert(v);
  }
  return s;
}

bool Character::is_integral() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](const Rational& r) { return r.get_den() == 1; });
}

Character Character::operator-() const { return scaled(Rational(-1)); }

Character Character::scaled(const Rational& r) const {
  if (r == 0) throw DomainError("scaling a character by zero");
  std::vector<Rational> out(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) out[i] = values_[i] * r;
  return Character(carrier_, std::move(out));
}

Character make_character(const LabeledGraph& g,
                         const std::vector<std::pair<std::string, Rational>>& entries) {
  std::vector<Rational> values(g.vertex_count(), Rational(0));
  std::set<VertexId> seen;
  for (const auto& [name, value] : entries) {
    auto id = g.find(name);
    if (!id) throw ParseError("unknown vertex '" + name + "' in character");
    if (!seen.insert(*id).second) throw ParseError("vertex '" + name + "' assigned twice");
    values[*id] = value;
  }
  return Character(g, std::move(values));
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Character parse_character(const LabeledGraph& g, std::string_view text) {
  std::vector<std::pair<std::string, Rational>> entries;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    auto item = text.substr(start, comma - start);
    item = trim(item);
    if (item.empty()) throw ParseError("empty entry in character '" + std::string(text) + "'");
    auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("expected name=value, got '" + std::string(item) + "'");
    }
    entries.emplace_back(std::string(trim(item.substr(0, eq))),
                         parse_rational(trim(item.substr(eq + 1))));
    if (comma == text.size()) break;
    start = comma + 1;
  }
  return make_character(g, entries);
}

std::string format_character(const Character& chi) {
  std::ostringstream os;
  bool first = true;
  for (VertexId v = 0; v < chi.values().size(); ++v) {
    if (!first) os << ',';
    first = false;
    os << chi.carrier().name(v) << '=' << to_string(chi[v]);
  }
  return os.str();
}

LabeledGraph lf_subgraph(const Character& chi) { return full_subgraph(chi.carrier(), chi.support()); }

std::vector<Edge> dead_edges(const Character& chi) {
  std::vector<Edge> out;
  for (const auto& e : chi.carrier().edges()) {
    if (e.label > 2 && e.label % 2 == 0 && chi[e.u] + chi[e.v] == 0) out.push_back(e);
  }
  return out;
}

LabeledGraph living_subgraph(const Character& chi) {
  // Dead edges join two vertices of the support (values are negatives of each
  // other, and a dead edge between two zeros is outside the support anyway).
  const auto& g = chi.carrier();
  const auto support = chi.support();
  LabeledGraph out;
  std::vector<VertexId> remap(g.vertex_count(), 0);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (support.contains(v)) remap[v] = out.add_vertex(g.name(v));
  }
  for (const auto& e : g.edges()) {
    if (!support.contains(e.u) || !support.contains(e.v)) continue;
    if (e.label > 2 && e.label % 2 == 0 && chi[e.u] + chi[e.v] == 0) continue;
    out.add_edge(remap[e.u], remap[e.v], e.label);
  }
  return out;
}

}  // namespace artin
