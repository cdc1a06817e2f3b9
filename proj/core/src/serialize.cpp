#include "hullforge/serialize.hpp"

namespace hullforge {

namespace {

[[noreturn]] void malformed(const std::string& why) { fail(ErrorCode::MalformedDescriptor, why); }

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::uint64_t as_uint(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) malformed(std::string(what) + " must be a non-negative integer");
  return j.get<std::uint64_t>();
}

std::vector<std::uint32_t> as_coeffs(const json& j, const char* what) {
  if (!j.is_array()) malformed(std::string(what) + " must be a coefficient array");
  std::vector<std::uint32_t> out;
  for (const auto& c : j) out.push_back(static_cast<std::uint32_t>(as_uint(c, what)));
  return out;
}

}  // namespace

json field_to_json(const Field& F) {
  return json{{"p", F.p()}, {"e", F.e()}, {"modulus", F.modulus()}, {"alpha", F.coeffs(F.alpha())}};
}

FieldPtr field_from_json(const json& j) {
  const std::uint64_t p = as_uint(member(j, "p"), "p");
  const auto e = static_cast<unsigned>(as_uint(member(j, "e"), "e"));
  std::optional<std::vector<std::uint32_t>> modulus, alpha;
  if (j.contains("modulus")) modulus = as_coeffs(j.at("modulus"), "modulus");
  if (j.contains("alpha")) alpha = as_coeffs(j.at("alpha"), "alpha");
  return Field::create(p, e, modulus, alpha);
}

json element_to_json(const Field& F, Element x) {
  if (x.code == 0) return nullptr;
  return F.discrete_log(x);
}

Element element_from_json(const Field& F, const json& j) {
  if (j.is_null()) return F.zero();
  if (j.is_array()) {
    const auto coeffs = as_coeffs(j, "element");
    return F.from_coeffs(coeffs);
  }
  const std::uint64_t t = as_uint(j, "element log");
  if (t >= F.group_order()) malformed("discrete log " + std::to_string(t) + " out of range");
  return F.exp(t);
}

json elements_to_json(const Field& F, std::span<const Element> xs) {
  json out = json::array();
  for (Element x : xs) out.push_back(element_to_json(F, x));
  return out;
}

std::vector<Element> elements_from_json(const Field& F, const json& j) {
  if (!j.is_array()) malformed("element list must be an array");
  std::vector<Element> out;
  for (const auto& x : j) out.push_back(element_from_json(F, x));
  return out;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.field().coeffs(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

Matrix matrix_from_json(const FieldPtr& F, const json& j) {
  const std::size_t rows = as_uint(member(j, "rows"), "rows");
  const std::size_t cols = as_uint(member(j, "cols"), "cols");
  const json& entries = member(j, "entries");
  if (!entries.is_array() || entries.size() != rows) malformed("matrix entries do not match the row count");
  Matrix m(F, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!entries[r].is_array() || entries[r].size() != cols) malformed("matrix row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, F->from_coeffs(as_coeffs(entries[r][c], "matrix entry")));
  }
  return m;
}

json hull_report_to_json(const HullReport& r) {
  return json{{"l", r.l.value},
              {"dim", r.dim()},
              {"basis", matrix_to_json(r.basis)},
              {"methods", {{"stacked", r.dim_stacked}, {"rankHH", r.dim_rank}}}};
}

json eaqecc_to_json(const EaqeccParams& p) {
  json prov = json::object();
  if (!p.source.empty()) prov["family"] = p.source;
  prov["hull_dim"] = p.hull_dim;
  if (p.request) prov["request"] = family_request_to_json(*p.request);
  return json{{"n", p.n}, {"k", p.k}, {"d", p.d}, {"c", p.c}, {"q", p.q}, {"mds", p.mds}, {"provenance", prov}};
}

EaqeccParams eaqecc_from_json(const json& j) {
  EaqeccParams p;
  p.n = as_uint(member(j, "n"), "n");
  p.k = as_uint(member(j, "k"), "k");
  p.d = as_uint(member(j, "d"), "d");
  p.c = as_uint(member(j, "c"), "c");
  p.q = as_uint(member(j, "q"), "q");
  const json& mds = member(j, "mds");
  if (!mds.is_boolean()) malformed("mds must be a boolean");
  p.mds = mds.get<bool>();
  if (j.contains("provenance")) {
    const json& prov = j.at("provenance");
    if (prov.contains("family") && prov.at("family").is_string()) p.source = prov.at("family").get<std::string>();
    if (prov.contains("hull_dim")) p.hull_dim = as_uint(prov.at("hull_dim"), "hull_dim");
  }
  return p;
}

json family_request_to_json(const FamilyRequest& r) {
  json j{{"family", std::string(to_string(r.family))}, {"p", r.p}, {"e", r.e}, {"l", r.l}, {"k", r.k}, {"h", r.h}};
  if (r.n) j["n"] = *r.n;
  if (uses_eq6_points(r.family)) {
    j["x1"] = r.x1;
    j["x2"] = r.x2;
    j["r"] = r.r;
  } else if (uses_coset_points(r.family)) {
    j["m"] = r.m;
    j["r"] = r.r;
  }
  return j;
}

FamilyRequest family_request_from_json(const json& j) {
  FamilyRequest r;
  const json& fam = member(j, "family");
  if (!fam.is_string()) malformed("family must be a string");
  const auto family = family_from_string(fam.get<std::string>());
  if (!family) malformed("unknown family '" + fam.get<std::string>() + "'");
  r.family = *family;
  r.p = as_uint(member(j, "p"), "p");
  r.e = static_cast<unsigned>(as_uint(member(j, "e"), "e"));
  r.l = static_cast<unsigned>(as_uint(member(j, "l"), "l"));
  r.k = as_uint(member(j, "k"), "k");
  r.h = as_uint(member(j, "h"), "h");
  if (j.contains("n")) r.n = as_uint(j.at("n"), "n");
  if (j.contains("x1")) r.x1 = as_uint(j.at("x1"), "x1");
  if (j.contains("x2")) r.x2 = as_uint(j.at("x2"), "x2");
  if (j.contains("r")) r.r = as_uint(j.at("r"), "r");
  if (j.contains("m")) r.m = as_uint(j.at("m"), "m");
  return r;
}

json provenance_to_json(const Field& F, const ConstructionProvenance& p) {
  json j{{"family", p.family},
         {"z", p.z},
         {"scaled_indices", p.scaled_indices},
         {"self_orthogonal_multipliers", p.self_orthogonal_multipliers}};
  if (p.scale_exponent) j["scale_exponent"] = *p.scale_exponent;
  if (p.scale_element) j["scale_element"] = element_to_json(F, *p.scale_element);
  if (p.point_set) {
    if (const auto* eq6 = std::get_if<Eq6Provenance>(&*p.point_set)) {
      j["point_set"] = {{"kind", "subgroup_product"},
                        {"x1", eq6->x1},
                        {"x2", eq6->x2},
                        {"xi1", element_to_json(F, eq6->xi1)},
                        {"xi2", element_to_json(F, eq6->xi2)},
                        {"r1", eq6->r1},
                        {"r2", eq6->r2}};
    } else {
      const auto& cs = std::get<CosetProvenance>(*p.point_set);
      j["point_set"] = {{"kind", "coset"},
                        {"m", cs.m},
                        {"m1", cs.m1},
                        {"m2", cs.m2},
                        {"y", cs.y},
                        {"r", cs.r},
                        {"theta1", element_to_json(F, cs.theta1)},
                        {"theta2", element_to_json(F, cs.theta2)},
                        {"eta_exponents", cs.eta_exponents},
                        {"eta", elements_to_json(F, cs.eta)}};
    }
  }
  return j;
}

json spec_to_json(const GrsSpec& spec) {
  const Field& F = *spec.field;
  return json{{"field", field_to_json(F)},
              {"a", elements_to_json(F, spec.a)},
              {"v", elements_to_json(F, spec.v)},
              {"k", spec.k},
              {"extended", spec.extended}};
}

json descriptor_to_json(const FamilyEmission& emission) {
  const Construction& c = emission.construction;
  const Field& F = *c.spec.field;
  json j = spec_to_json(c.spec);
  j["l"] = c.request.l;
  j["claims"] = {{"hull_dim", c.expected_hull}, {"eaqecc", eaqecc_to_json(emission.params)}};
  j["hull"] = hull_report_to_json(c.hull);
  json prov = provenance_to_json(F, c.provenance);
  prov["request"] = family_request_to_json(c.request);
  prov["n"] = c.n;
  j["provenance"] = std::move(prov);
  return j;
}

CodeDescriptor descriptor_from_json(const json& j) {
  try {
    CodeDescriptor d;
    const FieldPtr F = field_from_json(member(j, "field"));
    d.spec.field = F;
    d.spec.a = elements_from_json(*F, member(j, "a"));
    d.spec.v = elements_from_json(*F, member(j, "v"));
    d.spec.k = as_uint(member(j, "k"), "k");
    const json& ext = member(j, "extended");
    if (!ext.is_boolean()) malformed("extended must be a boolean");
    d.spec.extended = ext.get<bool>();
    if (j.contains("l")) d.l = static_cast<unsigned>(as_uint(j.at("l"), "l"));
    if (j.contains("claims")) {
      const json& claims = j.at("claims");
      if (claims.contains("hull_dim")) d.claimed_hull = as_uint(claims.at("hull_dim"), "hull_dim");
      if (claims.contains("eaqecc")) d.claimed_eaqecc = eaqecc_from_json(claims.at("eaqecc"));
    }
    if (j.contains("provenance")) d.provenance = j.at("provenance");
    return d;
  } catch (const json::exception& ex) {
    malformed(ex.what());
  }
}

}  // namespace hullforge
