#pragma once

#include <nlohmann/json.hpp>

#include "polyslice/norm_space.hpp"
#include "polyslice/polytope.hpp"
#include "polyslice/slice.hpp"

namespace polyslice {

// JSON layouts. Every rational is a "p/q" string.
//   polytope:    {"dim": d, "halfspaces": [{"a": [...], "b": "p/q"}], "vertices": [[...]]}
//   space:       {"kind": "II"|"VII"|"custom", "N": n, "r": "p/q", "omega": [...], "generators": [[...]]}
//   diameter:    {"value": "p/q", "witness_pair": [[...], [...]], "vertex_count": k}
//   certificate: inputs (g, alpha, r) and every derived quantity, so it can be re-verified.

nlohmann::json to_json(const Scalar& q);
nlohmann::json to_json(const Vec& v);
nlohmann::json to_json(const HPolytope& p);
nlohmann::json to_json(const VPolytope& v);
/// Both representations of one polytope in a single object.
nlohmann::json to_json(const HPolytope& p, const VPolytope& v);
nlohmann::json to_json(const PolyhedralNormSpace& space);
nlohmann::json to_json(const DiameterResult& d);
nlohmann::json to_json(const LowerBoundCertificate& c);

Scalar scalar_from_json(const nlohmann::json& j);
Vec vec_from_json(const nlohmann::json& j);
HPolytope hpolytope_from_json(const nlohmann::json& j);
VPolytope vpolytope_from_json(const nlohmann::json& j);
/// Accepts kind + parameters, or explicit generators (kind "custom" or absent).
PolyhedralNormSpace space_from_json(const nlohmann::json& j);
LowerBoundCertificate certificate_from_json(const nlohmann::json& j);

}  // namespace polyslice
