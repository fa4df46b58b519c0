#include "polyslice/serialize.hpp"

#include "polyslice/errors.hpp"

namespace polyslice {

using nlohmann::json;

namespace {

json vec_list(const std::vector<Vec>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(to_json(v));
  return out;
}

std::vector<Vec> vec_list_from_json(const json& j) {
  std::vector<Vec> out;
  for (const auto& item : j) out.push_back(vec_from_json(item));
  return out;
}

std::size_t dim_from_json(const json& j) {
  const auto d = j.at("dim").get<long long>();
  if (d <= 0) throw InvalidArgument("\"dim\" must be positive");
  return static_cast<std::size_t>(d);
}

}  // namespace

json to_json(const Scalar& q) { return format_scalar(q); }

json to_json(const Vec& v) {
  json out = json::array();
  for (const auto& c : v) out.push_back(format_scalar(c));
  return out;
}

json to_json(const HPolytope& p) {
  json hs = json::array();
  for (const auto& h : p.halfspaces()) hs.push_back({{"a", to_json(h.a)}, {"b", to_json(h.b)}});
  return {{"dim", p.dim()}, {"halfspaces", std::move(hs)}};
}

json to_json(const VPolytope& v) { return {{"dim", v.dim()}, {"vertices", vec_list(v.vertices())}}; }

json to_json(const HPolytope& p, const VPolytope& v) {
  if (p.dim() != v.dim()) throw DimensionMismatch("H- and V-representation dimensions differ");
  json out = to_json(p);
  out["vertices"] = vec_list(v.vertices());
  return out;
}

json to_json(const PolyhedralNormSpace& space) {
  json out{{"kind", space.label()}, {"dim", space.dim()}, {"generators", vec_list(space.generators())}};
  const auto& params = space.params();
  if (auto it = params.find("N"); it != params.end()) out["N"] = it->second.get_num().get_si();
  if (auto it = params.find("r"); it != params.end()) out["r"] = to_json(it->second);
  if (space.label() == "VII") {
    json omega = json::array();
    const long n = params.at("N").get_num().get_si();
    for (long k = 2; k <= n; ++k) omega.push_back(to_json(params.at("omega_" + std::to_string(k))));
    out["omega"] = std::move(omega);
  }
  return out;
}

json to_json(const DiameterResult& d) {
  return {{"value", to_json(d.value)},
          {"value_decimal", d.value.get_d()},
          {"witness_pair", {to_json(d.witness_pair.first), to_json(d.witness_pair.second)}},
          {"vertex_count", d.vertex_count}};
}

json to_json(const LowerBoundCertificate& c) {
  return {{"g", to_json(c.g)},
          {"alpha", to_json(c.alpha)},
          {"r", to_json(c.r)},
          {"level", to_json(c.level)},
          {"x", to_json(c.x)},
          {"y", to_json(c.y)},
          {"active_set", vec_list(c.active_set)},
          {"bound", to_json(c.bound)},
          {"plus_in_slice", c.plus_in_slice},
          {"minus_in_slice", c.minus_in_slice},
          {"point_rule", c.point_rule}};
}

Scalar scalar_from_json(const json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<long>());
  throw InvalidArgument("rational values must be \"p/q\" strings");
}

Vec vec_from_json(const json& j) {
  if (!j.is_array()) throw InvalidArgument("vector must be a JSON array");
  std::vector<Scalar> coords;
  for (const auto& c : j) coords.push_back(scalar_from_json(c));
  return Vec(std::move(coords));
}

HPolytope hpolytope_from_json(const json& j) {
  std::vector<HalfSpace> hs;
  for (const auto& h : j.at("halfspaces")) hs.emplace_back(vec_from_json(h.at("a")), scalar_from_json(h.at("b")));
  return HPolytope(dim_from_json(j), std::move(hs));
}

VPolytope vpolytope_from_json(const json& j) {
  return VPolytope(dim_from_json(j), vec_list_from_json(j.at("vertices")));
}

PolyhedralNormSpace space_from_json(const json& j) {
  const std::string kind = j.value("kind", "custom");
  if (kind == "II") return make_space_ii(j.at("N").get<int>(), scalar_from_json(j.at("r")));
  if (kind == "VII") {
    const int n = j.at("N").get<int>();
    if (!j.contains("omega")) return make_space_vii(n, default_omega(n));
    std::vector<Scalar> omega;
    for (const auto& w : j.at("omega")) omega.push_back(scalar_from_json(w));
    return make_space_vii(n, omega);
  }
  if (kind == "custom") return make_custom_space(vec_list_from_json(j.at("generators")));
  throw InvalidArgument("unknown space kind '" + kind + "'");
}

LowerBoundCertificate certificate_from_json(const json& j) {
  LowerBoundCertificate c;
  c.g = vec_from_json(j.at("g"));
  c.alpha = scalar_from_json(j.at("alpha"));
  c.r = scalar_from_json(j.at("r"));
  c.level = scalar_from_json(j.at("level"));
  c.x = vec_from_json(j.at("x"));
  c.y = vec_from_json(j.at("y"));
  c.active_set = vec_list_from_json(j.at("active_set"));
  c.bound = scalar_from_json(j.at("bound"));
  c.plus_in_slice = j.at("plus_in_slice").get<bool>();
  c.minus_in_slice = j.at("minus_in_slice").get<bool>();
  c.point_rule = j.value("point_rule", "");
  return c;
}

}  // namespace polyslice
