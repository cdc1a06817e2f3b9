#pragma once

#include <optional>

#include <nlohmann/json.hpp>

#include "hullforge/eaqecc.hpp"

namespace hullforge {

using json = nlohmann::json;

/// {"p", "e", "modulus": [...], "alpha": [...]}, coefficient lists constant term first.
json field_to_json(const Field& F);
FieldPtr field_from_json(const json& j);

/// Discrete log for nonzero elements, null for zero.
json element_to_json(const Field& F, Element x);
/// Accepts a discrete log, null (zero) or a coefficient array.
Element element_from_json(const Field& F, const json& j);
json elements_to_json(const Field& F, std::span<const Element> xs);
std::vector<Element> elements_from_json(const Field& F, const json& j);

/// {"rows", "cols", "entries": [[[coeffs]...]...]}.
json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const FieldPtr& F, const json& j);

/// {"l", "dim", "basis", "methods": {"stacked", "rankHH"}}.
json hull_report_to_json(const HullReport& r);
json eaqecc_to_json(const EaqeccParams& p);
EaqeccParams eaqecc_from_json(const json& j);

json family_request_to_json(const FamilyRequest& r);
FamilyRequest family_request_from_json(const json& j);

json provenance_to_json(const Field& F, const ConstructionProvenance& p);

/// {"field", "a", "v", "k", "extended"}.
json spec_to_json(const GrsSpec& spec);

/// A parsed code descriptor: the code plus whatever it claims about itself.
struct CodeDescriptor {
  GrsSpec spec;
  std::optional<unsigned> l;
  std::optional<std::size_t> claimed_hull;
  std::optional<EaqeccParams> claimed_eaqecc;
  json provenance;
};

/// Full descriptor of a family emission: spec, l, claims, hull report and
/// the provenance block needed to replay the construction.
json descriptor_to_json(const FamilyEmission& emission);
/// Throws MalformedDescriptor on schema errors; spec invariant violations
/// surface with their own codes from GrsSpec::validate.
CodeDescriptor descriptor_from_json(const json& j);

}  // namespace hullforge
