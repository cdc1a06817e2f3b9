#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hullforge/hull.hpp"

namespace hullforge {

enum class Family { T1a, T1b, T2, T3n, T3n1, T3n2, T4n, T4n1, T4n2 };

inline constexpr Family kAllFamilies[] = {Family::T1a,  Family::T1b,  Family::T2,
                                          Family::T3n,  Family::T3n1, Family::T3n2,
                                          Family::T4n,  Family::T4n1, Family::T4n2};

std::string_view to_string(Family f) noexcept;
std::optional<Family> family_from_string(std::string_view name) noexcept;

/// Points taken from the subgroup-product set (T3*) or the coset set (T4*).
bool uses_eq6_points(Family f) noexcept;
bool uses_coset_points(Family f) noexcept;
/// Length of the code relative to the point-set size n: 0, 1 or 2 extra.
std::size_t extra_length(Family f) noexcept;
/// Largest admissible h for dimension k.
std::size_t max_hull(Family f, std::size_t k) noexcept;

struct FamilyRequest {
  Family family = Family::T1a;
  std::uint64_t p = 0;
  unsigned e = 0;
  unsigned l = 0;
  /// Required for T1a/T1b/T2; derived from (x1, x2, r) or (m, r) otherwise,
  /// and checked against the derived value when given.
  std::optional<std::size_t> n;
  std::size_t k = 0;
  std::size_t h = 0;
  std::uint64_t x1 = 0;
  std::uint64_t x2 = 0;
  std::uint64_t r = 0;
  std::uint64_t m = 0;
};

struct Eq6Provenance {
  std::uint64_t x1 = 0, x2 = 0;
  Element xi1, xi2;
  std::uint64_t r1 = 0, r2 = 0;
};

struct CosetProvenance {
  std::uint64_t m = 0, m1 = 0, m2 = 0, y = 0, r = 0;
  Element theta1, theta2;
  /// eta_s = theta2^{eta_exponents[s]}.
  std::vector<std::uint64_t> eta_exponents;
  std::vector<Element> eta;
};

struct SubgroupPointSet {
  std::vector<Element> points;
  /// u_i from the closed form of the owning lemma.
  std::vector<Element> u_closed;
  std::variant<Eq6Provenance, CosetProvenance> provenance;
};

struct PairedVerdict {
  bool first = false;
  bool second = false;
  bool agree() const noexcept { return first == second; }
};

/// first: gcd(ord(alpha^x1), ord(alpha^x2)) = 1 from measured orders;
/// second: (q-1) | lcm(x1, x2).
PairedVerdict lemma5_predicate(const Field& F, std::uint64_t x1, std::uint64_t x2);
/// first: (q-1) | lcm(x1,x2) and gcd(x2, q-1) | x1 (p^l - 1);
/// second: (q-1) | lcm(x1,x2) and (q-1)/(p^l-1) | x1.  Requires l >= 1, l | e.
PairedVerdict lemma7_predicate(const Field& F, unsigned l, std::uint64_t x1, std::uint64_t x2);

/// Points xi1^i xi2^j for i = 1..r, j = 1..ord(xi2), ordered by (i, j).
SubgroupPointSet build_pointset_eq6(const Field& F, unsigned l, std::uint64_t x1, std::uint64_t x2, std::uint64_t r);
/// Points eta_s theta1^t for s = 1..r, t = 1..m, ordered by (s, t).
SubgroupPointSet build_pointset_coset(const Field& F, unsigned l, std::uint64_t m, std::uint64_t r);

/// n^{-1} beta^{i-1} for beta the n-th root of unity used as points.
std::vector<Element> u_closed_form_roots(const Field& F, std::size_t n);
/// prod_j (0 - a_j)^{-1} for the subgroup-product set, from the exponent closed form.
Element w_last_closed_form_eq6(const Field& F, const Eq6Provenance& prov);

/// Smallest alpha^s, s >= 1, with (alpha^s)^{p^l+1} != 1.  Throws
/// NoScalingElement when no such element exists.
std::pair<std::uint64_t, Element> smallest_scaling_element(const Field& F, GaloisLevel l);

/// Checks the admissibility predicate of the requested family and returns
/// the point-set size n.  Throws PredicateFailed naming the violated bound.
std::size_t check_admissible(const Field& F, const FamilyRequest& req);

struct ConstructionProvenance {
  std::string family;
  std::size_t z = 0;
  /// 0-based coordinates whose multiplier was scaled or replaced.
  std::vector<std::size_t> scaled_indices;
  std::optional<std::uint64_t> scale_exponent;
  std::optional<Element> scale_element;
  /// T1 with h = k: multipliers chosen with v_i^{p^l+1} = a_i.
  bool self_orthogonal_multipliers = false;
  std::optional<std::variant<Eq6Provenance, CosetProvenance>> point_set;
};

struct Construction {
  FamilyRequest request;
  std::size_t n = 0;
  GrsSpec spec;
  std::size_t expected_hull = 0;
  ConstructionProvenance provenance;
  HullReport hull;
};

/// Builds the family's (a, v) recipe, measures the hull, and throws
/// TheoremMismatch unless the measured dimension equals req.h.
Construction construct(const FieldPtr& F, const FamilyRequest& req);
Construction construct(const FamilyRequest& req);

/// Only the recipe; no hull measurement.
std::pair<GrsSpec, ConstructionProvenance> construct_spec(const FieldPtr& F, const FamilyRequest& req);

}  // namespace hullforge
