#include "artin_cli/serialize.hpp"

#include <cstdio>

#include "artin/errors.hpp"

namespace artin::cli {

namespace {

std::string_view provenance_text(Provenance p) {
  switch (p) {
    case Provenance::kMmwSufficient:
      return "Meier–Meinert–VanWyk sufficient";
    case Provenance::kMmwNecessary:
      return "Meier–Meinert–VanWyk necessary";
    case Provenance::kTheoremA:
      return "even graph, no even cycle of labels > 2";
    case Provenance::kLowCycleRank:
      return "cycle rank at most 2";
    case Provenance::kConjectureOnly:
      return "conjecture only, hypothesis fails";
  }
  return "";
}

std::string_view kind_name(PieceOrigin::Kind k) {
  return k == PieceOrigin::Kind::kDominance ? "dominance" : "disconnection";
}

}  // namespace

json to_json(const Verdict& v) {
  const auto& d = v.diagnostics;
  return json{{"status", to_string(v.status)},
              {"provenance", to_string(v.provenance)},
              {"diagnostics",
               {{"lf_connected", d.lf_connected},
                {"lf_dominant", d.lf_dominant},
                {"l_connected", d.l_connected},
                {"even", d.even},
                {"hypothesis_holds", d.hypothesis_holds},
                {"cycle_rank", d.cycle_rank}}}};
}

json to_json(const SphericalPolyhedron& p) {
  const auto& g = p.carrier;
  json pieces = json::array();
  for (const auto& s : p.pieces) {
    json forms = json::array();
    for (const auto& f : s.forms) {
      json form = json::object();
      for (VertexId v = 0; v < f.coefficients.size(); ++v) {
        if (f.coefficients[v] != 0) form[g.name(v)] = to_string(f.coefficients[v]);
      }
      forms.push_back(std::move(form));
    }
    json y1 = json::array();
    for (auto v : s.origin.y1) y1.push_back(g.name(v));
    json edges = json::array();
    for (const auto& e : s.origin.edges) edges.push_back(json{g.name(e.u), g.name(e.v), e.label});
    pieces.push_back(
        {{"forms", forms}, {"origin", {{"kind", kind_name(s.origin.kind)}, {"y1", y1}, {"edges", edges}}}});
  }
  return json{{"pieces", pieces}};
}

SphericalPolyhedron polyhedron_from_json(const json& doc, const LabeledGraph& carrier) {
  SphericalPolyhedron p;
  p.carrier = carrier;
  const std::size_t n = carrier.vertex_count();
  try {
    for (const auto& piece : doc.at("pieces")) {
      SubSphere s;
      for (const auto& form : piece.at("forms")) {
        LinearForm f{std::vector<Rational>(n, Rational(0))};
        for (const auto& [name, value] : form.items()) {
          const auto v = carrier.find(name);
          if (!v) throw ParseError("unknown vertex '" + name + "' in polyhedron");
          f.coefficients[*v] = parse_rational(value.get<std::string>());
        }
        s.forms.push_back(std::move(f));
      }
      const auto& origin = piece.at("origin");
      const auto kind = origin.at("kind").get<std::string>();
      if (kind == "dominance") {
        s.origin.kind = PieceOrigin::Kind::kDominance;
      } else if (kind == "disconnection") {
        s.origin.kind = PieceOrigin::Kind::kDisconnection;
      } else {
        throw ParseError("unknown piece kind '" + kind + "'");
      }
      for (const auto& y : origin.at("y1")) s.origin.y1.push_back(carrier.index_of(y.get<std::string>()));
      for (const auto& e : origin.at("edges")) {
        auto a = carrier.index_of(e.at(0).get<std::string>());
        auto b = carrier.index_of(e.at(1).get<std::string>());
        if (a > b) std::swap(a, b);
        s.origin.edges.push_back(Edge{a, b, e.at(2).get<int>()});
      }
      p.pieces.push_back(std::move(s));
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed polyhedron document: ") + e.what());
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
  return p;
}

json to_json(const JacobianMatrix& j) {
  json relators = json::array();
  for (const auto& r : j.relators) relators.push_back(r.to_string());
  json matrix = json::array();
  for (const auto& row : j.entries) {
    json out = json::array();
    for (const auto& e : row) out.push_back(e.to_string());
    matrix.push_back(std::move(out));
  }
  return json{{"generators", j.generators},
              {"relators", relators},
              {"variables", j.variables},
              {"matrix", matrix}};
}

json to_json(const Certificate& c) {
  json roots = json::object();
  for (const auto& [edge, root] : c.roots) roots[edge] = root;
  json basepoints = json::object();
  for (const auto& [b, value] : c.basepoints) basepoints[b] = to_string(value);
  return json{{"M", c.order},
              {"roots", roots},
              {"basepoints", basepoints},
              {"generators", c.generators},
              {"rank", c.rank},
              {"conclusion", to_string(c.conclusion)}};
}

json to_json(const GroupRingElement& e) {
  json terms = json::array();
  for (const auto& [w, c] : e.terms()) {
    terms.push_back({{"word", w.to_string()}, {"coefficient", to_string(c)}});
  }
  return json{{"element", e.to_string()}, {"terms", terms}};
}

std::string verdict_text(const Verdict& v) {
  std::string head;
  switch (v.status) {
    case Status::kIn:
      head = "IN Sigma^1";
      break;
    case Status::kOut:
      head = "NOT IN Sigma^1";
      break;
    case Status::kOutConjectural:
      head = "PREDICTED NOT IN Sigma^1";
      break;
  }
  return head + " (" + std::string(provenance_text(v.provenance)) + ")";
}

std::string certificate_text(const Certificate& c) {
  const std::string counts = std::to_string(c.rank) + (c.rank < c.generators ? " < " : " = ") +
                             std::to_string(c.generators) + " generators";
  if (c.conclusion == Conclusion::kNotFinitelyGenerated) {
    return "NOT f.g. over ZKer(chi): rank " + counts;
  }
  return "inconclusive: rank " + counts;
}

std::string fnv1a_digest(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

}  // namespace artin::cli
