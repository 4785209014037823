#include "artin/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "artin/errors.hpp"

namespace artin {

namespace {

bool valid_name(std::string_view s) {
  if (s.empty()) return false;
  auto head = static_cast<unsigned char>(s.front());
  if (!(std::isalpha(head) || head == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    auto u = static_cast<unsigned char>(c);
    return std::isalnum(u) || u == '_';
  });
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

// Rotates a cycle to start at its smallest vertex, heading to the smaller
// of the two neighbors.
std::vector<VertexId> canonical_cycle(std::vector<VertexId> cycle) {
  if (cycle.size() < 3) return cycle;
  auto it = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), it, cycle.end());
  if (cycle.back() < cycle[1]) std::reverse(cycle.begin() + 1, cycle.end());
  return cycle;
}

// Walks a block that is a simple cycle.
std::vector<VertexId> walk_cycle_block(const Block& b) {
  std::map<VertexId, std::vector<VertexId>> adj;
  for (const auto& e : b.edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<VertexId> cycle{b.vertices.front()};
  VertexId prev = b.vertices.front();
  VertexId cur = std::min(adj[prev][0], adj[prev][1]);
  while (cur != cycle.front()) {
    cycle.push_back(cur);
    const auto& n = adj[cur];
    VertexId next = n[0] == prev ? n[1] : n[0];
    prev = cur;
    cur = next;
  }
  return cycle;
}

// Even simple cycle inside a 2-connected block that is not a cycle: take any
// cycle C and an ear P between two vertices of C; among the two arcs of C and
// P, two have equal parity and close up to an even cycle.
std::vector<VertexId> even_cycle_in_block(const Block& b) {
  std::map<VertexId, std::vector<VertexId>> adj;
  for (const auto& e : b.edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (auto& [v, n] : adj) std::sort(n.begin(), n.end());

  // BFS tree, first non-tree edge closes a cycle through the LCA.
  const VertexId root = b.vertices.front();
  std::map<VertexId, VertexId> parent;
  std::map<VertexId, std::size_t> depth;
  std::deque<VertexId> queue{root};
  parent[root] = root;
  depth[root] = 0;
  std::optional<std::pair<VertexId, VertexId>> extra;
  while (!queue.empty() && !extra) {
    VertexId x = queue.front();
    queue.pop_front();
    for (VertexId y : adj[x]) {
      if (!parent.count(y)) {
        parent[y] = x;
        depth[y] = depth[x] + 1;
        queue.push_back(y);
      } else if (parent[x] != y) {
        extra = {x, y};
        break;
      }
    }
  }
  auto [x, y] = *extra;
  std::vector<VertexId> left{x}, right{y};
  while (left.back() != right.back()) {
    if (depth[left.back()] >= depth[right.back()]) {
      left.push_back(parent[left.back()]);
    } else {
      right.push_back(parent[right.back()]);
    }
  }
  right.pop_back();
  std::vector<VertexId> cycle(left.begin(), left.end());
  cycle.insert(cycle.end(), right.rbegin(), right.rend());
  if (cycle.size() % 2 == 0) return canonical_cycle(cycle);

  std::map<VertexId, std::size_t> pos;
  for (std::size_t i = 0; i < cycle.size(); ++i) pos[cycle[i]] = i;
  auto on_cycle_edge = [&](VertexId a, VertexId c) {
    auto ia = pos.find(a), ic = pos.find(c);
    if (ia == pos.end() || ic == pos.end()) return false;
    std::size_t d = ia->second > ic->second ? ia->second - ic->second : ic->second - ia->second;
    return d == 1 || d == cycle.size() - 1;
  };

  // Ear start: a cycle vertex with an edge leaving the cycle.
  std::vector<VertexId> ear;
  for (VertexId c : cycle) {
    for (VertexId w : adj[c]) {
      if (on_cycle_edge(c, w)) continue;
      if (pos.count(w)) {
        ear = {c, w};
      } else {
        std::map<VertexId, VertexId> from{{w, w}};
        std::deque<VertexId> q{w};
        std::optional<VertexId> hit;
        while (!q.empty() && !hit) {
          VertexId z = q.front();
          q.pop_front();
          for (VertexId t : adj[z]) {
            if (t == c || from.count(t)) continue;
            from[t] = z;
            if (pos.count(t)) {
              hit = t;
              break;
            }
            q.push_back(t);
          }
        }
        std::vector<VertexId> tail{*hit};
        while (tail.back() != w) tail.push_back(from[tail.back()]);
        ear = {c};
        ear.insert(ear.end(), tail.rbegin(), tail.rend());
      }
      break;
    }
    if (!ear.empty()) break;
  }

  const std::size_t n = cycle.size();
  const std::size_t i = pos[ear.front()], j = pos[ear.back()];
  const std::size_t ear_len = ear.size() - 1;
  // Arc from i forward to j.
  std::vector<VertexId> arc;
  for (std::size_t k = i;; k = (k + 1) % n) {
    arc.push_back(cycle[k]);
    if (k == j) break;
  }
  if ((arc.size() - 1) % 2 != ear_len % 2) {
    arc.clear();
    for (std::size_t k = i;; k = (k + n - 1) % n) {
      arc.push_back(cycle[k]);
      if (k == j) break;
    }
  }
  // arc runs ear.front() .. ear.back(); close with the ear reversed.
  std::vector<VertexId> out(arc.begin(), arc.end());
  for (std::size_t k = ear.size() - 2; k >= 1; --k) out.push_back(ear[k]);
  return canonical_cycle(out);
}

}  // namespace

VertexId LabeledGraph::add_vertex(std::string name) {
  if (!valid_name(name)) throw DomainError("invalid vertex name '" + name + "'");
  if (index_.count(name)) throw DomainError("duplicate vertex '" + name + "'");
  const VertexId id = names_.size();
  index_.emplace(name, id);
  names_.push_back(std::move(name));
  adjacency_.emplace_back();
  return id;
}

void LabeledGraph::add_edge(VertexId a, VertexId b, int label) {
  if (a >= names_.size() || b >= names_.size()) throw DomainError("edge endpoint out of range");
  if (a == b) throw DomainError("loop edge at '" + names_[a] + "'");
  if (label < 2) {
    throw DomainError("label " + std::to_string(label) + " < 2 on edge " + names_[a] + "-" +
                      names_[b]);
  }
  if (b < a) std::swap(a, b);
  Edge e{a, b, label};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e,
                             [](const Edge& x, const Edge& y) {
                               return std::tie(x.u, x.v) < std::tie(y.u, y.v);
                             });
  if (it != edges_.end() && it->u == a && it->v == b) {
    throw DomainError("duplicate edge " + names_[a] + "-" + names_[b]);
  }
  edges_.insert(it, e);
  auto& na = adjacency_[a];
  na.insert(std::lower_bound(na.begin(), na.end(), b), b);
  auto& nb = adjacency_[b];
  nb.insert(std::lower_bound(nb.begin(), nb.end(), a), a);
}

void LabeledGraph::add_edge(std::string_view a, std::string_view b, int label) {
  add_edge(index_of(a), index_of(b), label);
}

std::optional<VertexId> LabeledGraph::find(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VertexId LabeledGraph::index_of(std::string_view name) const {
  auto id = find(name);
  if (!id) throw DomainError("unknown vertex '" + std::string(name) + "'");
  return *id;
}

std::optional<int> LabeledGraph::label(VertexId a, VertexId b) const {
  if (b < a) std::swap(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{a, b, 0},
                             [](const Edge& x, const Edge& y) {
                               return std::tie(x.u, x.v) < std::tie(y.u, y.v);
                             });
  if (it != edges_.end() && it->u == a && it->v == b) return it->label;
  return std::nullopt;
}

bool LabeledGraph::is_even() const {
  return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.label % 2 == 0; });
}

VertexSet VertexSet::all(const LabeledGraph& g) {
  VertexSet s(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) s.insert(v);
  return s;
}

VertexSet VertexSet::from_names(const LabeledGraph& g, std::span<const std::string> names) {
  VertexSet s(g.vertex_count());
  for (const auto& n : names) s.insert(g.index_of(n));
  return s;
}

VertexSet VertexSet::from_ids(std::size_t universe, std::span<const VertexId> ids) {
  VertexSet s(universe);
  for (VertexId v : ids) s.insert(v);
  return s;
}

std::size_t VertexSet::size() const {
  return static_cast<std::size_t>(std::count(members_.begin(), members_.end(), true));
}

std::vector<VertexId> VertexSet::ids() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < members_.size(); ++v) {
    if (members_[v]) out.push_back(v);
  }
  return out;
}

ArtinDocument parse_artin_document(std::string_view text) {
  ArtinDocument doc;
  std::set<std::string, std::less<>> charactered;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    const auto kind = tokens.front();
    try {
      if (kind == "v") {
        if (tokens.size() != 2) throw ParseError("expected 'v <name>'", line_no);
        if (!valid_name(tokens[1])) {
          throw ParseError("invalid vertex name '" + std::string(tokens[1]) + "'", line_no);
        }
        doc.graph.add_vertex(std::string(tokens[1]));
      } else if (kind == "e") {
        if (tokens.size() != 4) throw ParseError("expected 'e <name> <name> <label>'", line_no);
        int label = 0;
        auto lt = tokens[3];
        auto [ptr, ec] = std::from_chars(lt.data(), lt.data() + lt.size(), label);
        if (ec != std::errc() || ptr != lt.data() + lt.size()) {
          throw ParseError("invalid label '" + std::string(lt) + "'", line_no);
        }
        doc.graph.add_edge(tokens[1], tokens[2], label);
      } else if (kind == "c") {
        if (tokens.size() != 3) throw ParseError("expected 'c <name> <rational>'", line_no);
        doc.graph.index_of(tokens[1]);
        if (!charactered.insert(std::string(tokens[1])).second) {
          throw ParseError("duplicate character value for '" + std::string(tokens[1]) + "'",
                           line_no);
        }
        doc.character.emplace_back(std::string(tokens[1]), parse_rational(tokens[2]));
      } else {
        throw ParseError("unknown declaration '" + std::string(kind) + "'", line_no);
      }
    } catch (const ParseError& e) {
      if (e.line() != 0) throw;
      throw ParseError(e.what(), line_no);
    } catch (const DomainError& e) {
      throw ParseError(e.what(), line_no);
    }
    if (end == text.size()) break;
  }
  return doc;
}

LabeledGraph parse_graph(std::string_view text) { return parse_artin_document(text).graph; }

std::string format_graph(const LabeledGraph& g) {
  std::ostringstream os;
  for (const auto& n : g.names()) os << "v " << n << '\n';
  for (const auto& e : g.edges()) {
    os << "e " << g.name(e.u) << ' ' << g.name(e.v) << ' ' << e.label << '\n';
  }
  return os.str();
}

LabeledGraph full_subgraph(const LabeledGraph& g, const VertexSet& s) {
  if (s.universe() != g.vertex_count()) throw DomainError("vertex set from a different graph");
  LabeledGraph out;
  std::vector<VertexId> remap(g.vertex_count(), 0);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (s.contains(v)) remap[v] = out.add_vertex(g.name(v));
  }
  for (const auto& e : g.edges()) {
    if (s.contains(e.u) && s.contains(e.v)) out.add_edge(remap[e.u], remap[e.v], e.label);
  }
  return out;
}

LabeledGraph full_subgraph(const LabeledGraph& g, std::span<const std::string> names) {
  return full_subgraph(g, VertexSet::from_names(g, names));
}

std::vector<std::vector<VertexId>> connected_components(const LabeledGraph& g) {
  UnionFind uf(g.vertex_count());
  for (const auto& e : g.edges()) uf.unite(e.u, e.v);
  std::map<std::size_t, std::vector<VertexId>> groups;
  for (VertexId v = 0; v < g.vertex_count(); ++v) groups[uf.find(v)].push_back(v);
  std::vector<std::vector<VertexId>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_connected(const LabeledGraph& g) { return connected_components(g).size() <= 1; }

bool is_dominant(const LabeledGraph& g, const VertexSet& s) {
  if (s.universe() != g.vertex_count()) throw DomainError("vertex set from a different graph");
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (s.contains(v)) continue;
    const auto& n = g.neighbors(v);
    if (std::none_of(n.begin(), n.end(), [&](VertexId w) { return s.contains(w); })) return false;
  }
  return true;
}

std::vector<Block> blocks(const LabeledGraph& g) {
  // Iterative Hopcroft-Tarjan with an edge stack.
  const std::size_t n = g.vertex_count();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> disc(n, kUnset), low(n, 0);
  std::vector<Edge> stack;
  std::vector<Block> out;
  std::size_t timer = 0;

  auto make_edge = [&](VertexId a, VertexId b) {
    return Edge{std::min(a, b), std::max(a, b), *g.label(a, b)};
  };
  auto pop_block = [&](const Edge& until) {
    Block blk;
    std::set<VertexId> verts;
    while (true) {
      Edge e = stack.back();
      stack.pop_back();
      blk.edges.push_back(e);
      verts.insert(e.u);
      verts.insert(e.v);
      if (e.u == until.u && e.v == until.v) break;
    }
    std::sort(blk.edges.begin(), blk.edges.end());
    blk.vertices.assign(verts.begin(), verts.end());
    out.push_back(std::move(blk));
  };

  struct Frame {
    VertexId v;
    VertexId parent;
    std::size_t next;
  };
  for (VertexId root = 0; root < n; ++root) {
    if (disc[root] != kUnset) continue;
    std::vector<Frame> frames{{root, kUnset, 0}};
    disc[root] = low[root] = timer++;
    while (!frames.empty()) {
      Frame& f = frames.back();
      const auto& nbrs = g.neighbors(f.v);
      if (f.next < nbrs.size()) {
        VertexId w = nbrs[f.next++];
        if (w == f.parent) continue;
        if (disc[w] == kUnset) {
          stack.push_back(make_edge(f.v, w));
          disc[w] = low[w] = timer++;
          frames.push_back({w, f.v, 0});
        } else if (disc[w] < disc[f.v]) {
          stack.push_back(make_edge(f.v, w));
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        Frame done = f;
        frames.pop_back();
        if (!frames.empty()) {
          VertexId p = frames.back().v;
          low[p] = std::min(low[p], low[done.v]);
          if (low[done.v] >= disc[p]) pop_block(make_edge(p, done.v));
        }
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Block& a, const Block& b) { return a.edges.front() < b.edges.front(); });
  return out;
}

std::string_view to_string(HypothesisMode mode) {
  return mode == HypothesisMode::kStrict ? "strict" : "simple-cycle";
}

HypothesisMode parse_hypothesis_mode(std::string_view text) {
  if (text == "simple-cycle") return HypothesisMode::kSimpleCycle;
  if (text == "strict") return HypothesisMode::kStrict;
  throw ParseError("unknown mode '" + std::string(text) + "' (expected simple-cycle|strict)");
}

namespace {

LabeledGraph heavy_subgraph(const LabeledGraph& g) {
  return filter_edges(g, [](const Edge& e) { return e.label > 2; });
}

bool block_is_edge_or_odd_cycle(const Block& b) {
  if (b.edges.size() == 1) return true;
  return b.edges.size() == b.vertices.size() && b.vertices.size() % 2 == 1;
}

}  // namespace

bool check_hypothesis(const LabeledGraph& g, HypothesisMode mode) {
  const auto heavy = heavy_subgraph(g);
  if (mode == HypothesisMode::kStrict) return cycle_rank(heavy) == 0;
  const auto bs = blocks(heavy);
  return std::all_of(bs.begin(), bs.end(), block_is_edge_or_odd_cycle);
}

std::vector<VertexId> hypothesis_witness(const LabeledGraph& g, HypothesisMode mode) {
  const auto heavy = heavy_subgraph(g);
  const auto bs = blocks(heavy);
  for (const auto& b : bs) {
    if (block_is_edge_or_odd_cycle(b)) continue;
    if (b.edges.size() == b.vertices.size()) return walk_cycle_block(b);
    return even_cycle_in_block(b);
  }
  if (mode == HypothesisMode::kStrict) {
    for (const auto& b : bs) {
      if (b.edges.size() > 1) {
        auto cycle = walk_cycle_block(b);
        auto twice = cycle;
        twice.insert(twice.end(), cycle.begin(), cycle.end());
        return twice;
      }
    }
  }
  return {};
}

long cycle_rank(const LabeledGraph& g) {
  return static_cast<long>(g.edge_count()) - static_cast<long>(g.vertex_count()) +
         static_cast<long>(connected_components(g).size());
}

}  // namespace artin
