#pragma once

#include <nlohmann/json.hpp>

#include "artin/fox.hpp"
#include "artin/groebner.hpp"
#include "artin/kt_module.hpp"
#include "artin/polyhedron.hpp"
#include "artin/sigma1.hpp"

namespace artin::cli {

using nlohmann::json;

json to_json(const Verdict& v);
json to_json(const SphericalPolyhedron& p);
json to_json(const JacobianMatrix& j);
json to_json(const Certificate& c);
json to_json(const GroupRingElement& e);

/// Inverse of to_json(SphericalPolyhedron) for a known carrier graph.
/// Throws ParseError on malformed documents.
SphericalPolyhedron polyhedron_from_json(const json& doc, const LabeledGraph& carrier);

/// One-line human summaries.
std::string verdict_text(const Verdict& v);
std::string certificate_text(const Certificate& c);

/// 64-bit FNV-1a digest as "fnv1a64:<16 hex digits>".
std::string fnv1a_digest(std::string_view data);

}  // namespace artin::cli
