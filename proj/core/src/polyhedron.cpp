#include "artin/polyhedron.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <thread>
#include <tuple>

#include "artin/errors.hpp"

namespace artin {

namespace {

using Mask = std::uint32_t;

LinearForm unit_form(std::size_t n, VertexId v) {
  LinearForm f{std::vector<Rational>(n, Rational(0))};
  f.coefficients[v] = 1;
  return f;
}

LinearForm sum_form(std::size_t n, const Edge& e) {
  LinearForm f{std::vector<Rational>(n, Rational(0))};
  f.coefficients[e.u] = 1;
  f.coefficients[e.v] = 1;
  return f;
}

SubSphere make_piece(std::size_t n, PieceOrigin origin) {
  SubSphere s;
  for (VertexId y : origin.y1) s.forms.push_back(unit_form(n, y));
  for (const auto& e : origin.edges) s.forms.push_back(sum_form(n, e));
  s.origin = std::move(origin);
  return s;
}

auto canonical_key(const SubSphere& s) {
  return std::make_tuple(s.forms.size(), s.origin.kind == PieceOrigin::Kind::kDisconnection,
                         std::cref(s.origin.y1), std::cref(s.origin.edges));
}

bool canonical_less(const SubSphere& a, const SubSphere& b) {
  return canonical_key(a) < canonical_key(b);
}

bool removable(const Edge& e) { return e.label > 2 && e.label % 2 == 0; }

// All (Y1, delta(A)) candidates for the Y1 masks in [begin, end) of `order`.
void cut_candidates(const LabeledGraph& g, const std::vector<Mask>& order, std::size_t begin,
                    std::size_t end, std::vector<SubSphere>& out) {
  const std::size_t n = g.vertex_count();
  const Mask full = (Mask{1} << n) - 1;
  for (std::size_t idx = begin; idx < end; ++idx) {
    const Mask y1 = order[idx];
    const Mask rest = full & ~y1;
    if (std::popcount(rest) < 2) continue;
    const Mask anchor = rest & (~rest + 1);
    std::vector<Edge> local;
    for (const auto& e : g.edges()) {
      if ((rest >> e.u & 1) && (rest >> e.v & 1)) local.push_back(e);
    }
    std::vector<std::vector<Edge>> seen;
    // Subsets A of rest containing the lowest vertex, A != rest.
    const Mask others = rest & ~anchor;
    for (Mask sub = others;; sub = (sub - 1) & others) {
      const Mask a = anchor | sub;
      if (a != rest) {
        std::vector<Edge> cut;
        bool ok = true;
        for (const auto& e : local) {
          if (((a >> e.u) & 1) != ((a >> e.v) & 1)) {
            if (!removable(e)) {
              ok = false;
              break;
            }
            cut.push_back(e);
          }
        }
        if (ok && std::find(seen.begin(), seen.end(), cut) == seen.end()) {
          seen.push_back(cut);
          PieceOrigin origin{PieceOrigin::Kind::kDisconnection, {}, cut};
          for (VertexId v = 0; v < n; ++v) {
            if (y1 >> v & 1) origin.y1.push_back(v);
          }
          out.push_back(make_piece(n, std::move(origin)));
        }
      }
      if (sub == 0) break;
    }
  }
}

std::vector<SubSphere> all_cut_candidates(const LabeledGraph& g, std::size_t threads) {
  const std::size_t n = g.vertex_count();
  if (n > kMaxPolyhedronVertices) {
    throw DomainError("polyhedron enumeration supports at most " +
                      std::to_string(kMaxPolyhedronVertices) + " vertices, got " +
                      std::to_string(n));
  }
  if (n < 2) return {};
  std::vector<Mask> order;
  for (Mask m = 0; m < (Mask{1} << n); ++m) order.push_back(m);
  std::stable_sort(order.begin(), order.end(),
                   [](Mask a, Mask b) { return std::popcount(a) < std::popcount(b); });

  if (threads == 0) threads = default_parallelism();
  threads = std::max<std::size_t>(1, std::min(threads, order.size() / 64 + 1));
  std::vector<std::vector<SubSphere>> parts(threads);
  if (threads == 1) {
    cut_candidates(g, order, 0, order.size(), parts[0]);
  } else {
    std::vector<std::thread> workers;
    const std::size_t chunk = (order.size() + threads - 1) / threads;
    for (std::size_t t = 0; t < threads; ++t) {
      const std::size_t lo = std::min(order.size(), t * chunk);
      const std::size_t hi = std::min(order.size(), lo + chunk);
      workers.emplace_back([&, t, lo, hi] { cut_candidates(g, order, lo, hi, parts[t]); });
    }
    for (auto& w : workers) w.join();
  }
  std::vector<SubSphere> out;
  for (auto& p : parts) {
    out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  }
  return out;
}

std::vector<SubSphere> neighborhood_pieces(const LabeledGraph& g) {
  std::vector<SubSphere> out;
  const std::size_t n = g.vertex_count();
  for (VertexId x = 0; x < n; ++x) {
    std::vector<VertexId> closed = g.neighbors(x);
    closed.insert(std::lower_bound(closed.begin(), closed.end(), x), x);
    out.push_back(make_piece(n, PieceOrigin{PieceOrigin::Kind::kDominance, closed, {}}));
  }
  return out;
}

}  // namespace

Rational LinearForm::evaluate(const std::vector<Rational>& values) const {
  Rational sum(0);
  for (std::size_t i = 0; i < coefficients.size() && i < values.size(); ++i) {
    if (coefficients[i] != 0) sum += coefficients[i] * values[i];
  }
  return sum;
}

std::size_t rational_rank(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      const Rational factor = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= factor * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

bool subsphere_empty(const SubSphere& s, std::size_t dimension) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& f : s.forms) rows.push_back(f.coefficients);
  return rational_rank(std::move(rows)) >= dimension;
}

bool subsphere_contained(const SubSphere& a, const SubSphere& b) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& f : a.forms) rows.push_back(f.coefficients);
  const std::size_t base = rational_rank(rows);
  for (const auto& f : b.forms) {
    auto extended = rows;
    extended.push_back(f.coefficients);
    if (rational_rank(std::move(extended)) != base) return false;
  }
  return true;
}

bool subsphere_contains(const SubSphere& s, const Character& chi) {
  return std::all_of(s.forms.begin(), s.forms.end(),
                     [&](const LinearForm& f) { return f.evaluate(chi.values()) == 0; });
}

std::vector<SubSphere> prune_pieces(std::vector<SubSphere> pieces, std::size_t dimension) {
  std::stable_sort(pieces.begin(), pieces.end(), canonical_less);
  std::vector<SubSphere> kept;
  for (auto& p : pieces) {
    if (subsphere_empty(p, dimension)) continue;
    bool redundant = std::any_of(kept.begin(), kept.end(),
                                 [&](const SubSphere& k) { return subsphere_contained(p, k); });
    if (!redundant) kept.push_back(std::move(p));
  }
  // A later piece can still swallow an earlier one.
  std::vector<SubSphere> out;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < kept.size() && !redundant; ++j) {
      if (i != j && subsphere_contained(kept[i], kept[j])) {
        redundant = !subsphere_contained(kept[j], kept[i]) || j < i;
      }
    }
    if (!redundant) out.push_back(kept[i]);
  }
  return out;
}

std::vector<SubSphere> dominance_pieces(const LabeledGraph& g) {
  return prune_pieces(neighborhood_pieces(g), g.vertex_count());
}

std::vector<SubSphere> disconnection_pieces(const LabeledGraph& g, std::size_t threads) {
  return prune_pieces(all_cut_candidates(g, threads), g.vertex_count());
}

std::vector<SubSphere> unpruned_pieces(const LabeledGraph& g, std::size_t threads) {
  auto out = neighborhood_pieces(g);
  auto cuts = all_cut_candidates(g, threads);
  out.insert(out.end(), std::make_move_iterator(cuts.begin()),
             std::make_move_iterator(cuts.end()));
  return out;
}

SphericalPolyhedron complement_polyhedron(const LabeledGraph& g, std::size_t threads) {
  SphericalPolyhedron p;
  p.carrier = g;
  auto pieces = dominance_pieces(g);
  auto cuts = disconnection_pieces(g, threads);
  pieces.insert(pieces.end(), std::make_move_iterator(cuts.begin()),
                std::make_move_iterator(cuts.end()));
  p.pieces = prune_pieces(std::move(pieces), g.vertex_count());
  return p;
}

bool polyhedron_contains(const SphericalPolyhedron& p, const Character& chi) {
  if (!(p.carrier == chi.carrier())) {
    throw DomainError("character and polyhedron live on different graphs");
  }
  return std::any_of(p.pieces.begin(), p.pieces.end(),
                     [&](const SubSphere& s) { return subsphere_contains(s, chi); });
}

std::size_t default_parallelism() {
  if (const char* env = std::getenv("ARTIN_SIGMA_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace artin
