#include "hullforge/families.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "hullforge/arith.hpp"

namespace hullforge {

namespace {

using arith::u128;

struct FamilyName {
  Family family;
  std::string_view name;
};

constexpr FamilyName kNames[] = {
    {Family::T1a, "T1a"},   {Family::T1b, "T1b"},   {Family::T2, "T2"},
    {Family::T3n, "T3n"},   {Family::T3n1, "T3n1"}, {Family::T3n2, "T3n2"},
    {Family::T4n, "T4n"},   {Family::T4n1, "T4n1"}, {Family::T4n2, "T4n2"},
};

[[noreturn]] void reject(const std::string& why) { fail(ErrorCode::PredicateFailed, why); }

std::string num(std::uint64_t v) { return std::to_string(v); }

// (q-1) | lcm(x1, x2), evaluated on the integers themselves.
bool divides_lcm(std::uint64_t N, std::uint64_t x1, std::uint64_t x2) {
  const std::uint64_t g = std::gcd(x1, x2);
  const u128 lcm = static_cast<u128>(x1 / g) * x2;
  return lcm % N == 0;
}

// x^{-E} for x = alpha^{x_exp}, where E = tri * r (mod N) and tri = a(a+1)/2.
Element alpha_pow_neg(const Field& F, std::uint64_t x_exp, std::uint64_t a, std::uint64_t r) {
  const std::uint64_t N = F.group_order();
  const std::uint64_t tri = static_cast<std::uint64_t>((static_cast<u128>(a) * (a + 1) / 2) % N);
  const std::uint64_t E = arith::mul_mod(tri, r % N, N);
  const std::uint64_t t = arith::mul_mod(x_exp % N, E, N);
  return F.exp((N - t) % N);
}

void require_subfield_level(const Field& F, unsigned l) {
  F.level(l);
  if (l == 0) reject("l >= 1 is required (F_{p^l} must be a proper subfield)");
  if (F.e() % l != 0) reject("l | e is required, got l = " + num(l) + ", e = " + num(F.e()));
}

void require_theorem_field(const Field& F, unsigned l) {
  if (F.p() % 2 == 0) reject("p must be odd, got p = " + num(F.p()));
  require_subfield_level(F, l);
  if (F.e() % (2 * l) != 0) reject("2l | e is required, got l = " + num(l) + ", e = " + num(F.e()));
}

void check_k_h(const FamilyRequest& req, std::size_t k_max, const std::string& bound_name) {
  if (req.k < 1) reject("k >= 1 is required");
  if (req.k > k_max) reject("k = " + num(req.k) + " exceeds " + bound_name + " = " + num(k_max));
  const std::size_t h_max = max_hull(req.family, req.k);
  if (req.h > h_max) reject("h = " + num(req.h) + " exceeds its maximum " + num(h_max) + " for k = " + num(req.k));
}

void check_given_n(const FamilyRequest& req, std::size_t derived) {
  if (req.n && *req.n != derived)
    reject("n = " + num(*req.n) + " does not match the point-set size " + num(derived));
}

std::vector<Element> scale_prefix(const Field& F, std::vector<Element> v, std::size_t z, Element beta,
                                  ConstructionProvenance& prov) {
  for (std::size_t i = 0; i < z; ++i) {
    v[i] = F.mul(beta, v[i]);
    prov.scaled_indices.push_back(i);
  }
  return v;
}

}  // namespace

std::string_view to_string(Family f) noexcept {
  for (const auto& entry : kNames)
    if (entry.family == f) return entry.name;
  return "?";
}

std::optional<Family> family_from_string(std::string_view name) noexcept {
  for (const auto& entry : kNames)
    if (entry.name == name) return entry.family;
  return std::nullopt;
}

bool uses_eq6_points(Family f) noexcept { return f == Family::T3n || f == Family::T3n1 || f == Family::T3n2; }
bool uses_coset_points(Family f) noexcept { return f == Family::T4n || f == Family::T4n1 || f == Family::T4n2; }

std::size_t extra_length(Family f) noexcept {
  switch (f) {
    case Family::T3n1:
    case Family::T4n1:
      return 1;
    case Family::T3n2:
    case Family::T4n2:
      return 2;
    default:
      return 0;
  }
}

std::size_t max_hull(Family f, std::size_t k) noexcept {
  switch (f) {
    case Family::T3n:
    case Family::T3n2:
    case Family::T4n:
    case Family::T4n2:
      return k == 0 ? 0 : k - 1;
    default:
      return k;
  }
}

PairedVerdict lemma5_predicate(const Field& F, std::uint64_t x1, std::uint64_t x2) {
  if (x1 == 0 || x2 == 0) reject("x1, x2 >= 1 is required");
  const std::uint64_t o1 = F.element_order(F.exp(x1));
  const std::uint64_t o2 = F.element_order(F.exp(x2));
  return {std::gcd(o1, o2) == 1, divides_lcm(F.group_order(), x1, x2)};
}

PairedVerdict lemma7_predicate(const Field& F, unsigned l, std::uint64_t x1, std::uint64_t x2) {
  require_subfield_level(F, l);
  if (x1 == 0 || x2 == 0) reject("x1, x2 >= 1 is required");
  const std::uint64_t N = F.group_order();
  const std::uint64_t sub = F.p_power(l) - 1;
  const bool lcm_ok = divides_lcm(N, x1, x2);
  const bool c1 = lcm_ok && (static_cast<u128>(x1) * sub) % std::gcd(x2, N) == 0;
  const bool c2 = lcm_ok && x1 % (N / sub) == 0;
  return {c1, c2};
}

SubgroupPointSet build_pointset_eq6(const Field& F, unsigned l, std::uint64_t x1, std::uint64_t x2,
                                    std::uint64_t r) {
  const PairedVerdict l7 = lemma7_predicate(F, l, x1, x2);
  if (!l7.agree()) fail(ErrorCode::MethodDisagreement, "the two point-set conditions disagree");
  if (!l7.second) {
    reject("point-set conditions fail: need (q-1) | lcm(x1, x2) and (q-1)/(p^l-1) | x1 for x1 = " + num(x1) +
           ", x2 = " + num(x2));
  }
  const std::uint64_t N = F.group_order();
  const std::uint64_t r_max = N / std::gcd(x1, N);
  if (r < 1 || r > r_max) reject("r = " + num(r) + " outside [1, (q-1)/gcd(x1, q-1) = " + num(r_max) + "]");

  Eq6Provenance prov{x1, x2, F.exp(x1), F.exp(x2), r, N / std::gcd(x2, N)};
  if (F.element_order(prov.xi2) != prov.r2) fail(ErrorCode::MethodDisagreement, "ord(xi2) mismatch");

  SubgroupPointSet set;
  set.points.reserve(r * prov.r2);
  std::set<std::uint32_t> seen;
  Element row = F.one();
  for (std::uint64_t i = 1; i <= r; ++i) {
    row = F.mul(row, prov.xi1);
    Element pt = row;
    for (std::uint64_t j = 1; j <= prov.r2; ++j) {
      pt = F.mul(pt, prov.xi2);
      if (!seen.insert(pt.code).second) fail(ErrorCode::DuplicatePoints, "point set has a repeated element");
      set.points.push_back(pt);
    }
  }

  // A_s = xi1^{s r2}; u_i = a_i A_s^{-1} r2^{-1} prod_{s' != s} (A_s - A_s')^{-1}.
  std::vector<Element> A(r);
  const Element xi1_r2 = F.pow(prov.xi1, prov.r2);
  A[0] = xi1_r2;
  for (std::uint64_t s = 1; s < r; ++s) A[s] = F.mul(A[s - 1], xi1_r2);
  const Element r2_inv = F.inv(F.from_int(static_cast<std::int64_t>(prov.r2)));
  set.u_closed.resize(set.points.size());
  for (std::uint64_t s = 0; s < r; ++s) {
    Element factor = F.mul(F.inv(A[s]), r2_inv);
    for (std::uint64_t t = 0; t < r; ++t)
      if (t != s) factor = F.mul(factor, F.inv(F.sub(A[s], A[t])));
    for (std::uint64_t j = 0; j < prov.r2; ++j) {
      const std::size_t idx = s * prov.r2 + j;
      set.u_closed[idx] = F.mul(set.points[idx], factor);
    }
  }
  set.provenance = prov;
  return set;
}

SubgroupPointSet build_pointset_coset(const Field& F, unsigned l, std::uint64_t m, std::uint64_t r) {
  require_subfield_level(F, l);
  const std::uint64_t N = F.group_order();
  if (m < 1 || N % m != 0) reject("m = " + num(m) + " must divide q-1 = " + num(N));
  const std::uint64_t sub = F.p_power(l) - 1;
  CosetProvenance prov;
  prov.m = m;
  prov.y = N / sub;
  prov.m2 = std::gcd(m, prov.y);
  prov.m1 = m / prov.m2;
  if (sub % prov.m1 != 0) fail(ErrorCode::PredicateFailed, "m1 does not divide p^l-1");
  const std::uint64_t r_max = sub / prov.m1;
  if (r < 1 || r > r_max) reject("r = " + num(r) + " outside [1, (p^l-1)/m1 = " + num(r_max) + "]");
  prov.r = r;
  prov.theta1 = F.exp(N / m);
  prov.theta2 = F.exp(prov.y / prov.m2);

  // Coset eta H is determined by eta^m, since H is the group of m-th roots of unity.
  const std::uint64_t order_g = sub * prov.m2;
  std::set<std::uint32_t> seen_m;
  Element eta = F.one();
  for (std::uint64_t j = 1; j <= order_g && prov.eta.size() < r; ++j) {
    eta = F.mul(eta, prov.theta2);
    if (seen_m.insert(F.pow(eta, m).code).second) {
      prov.eta.push_back(eta);
      prov.eta_exponents.push_back(j);
    }
  }
  if (prov.eta.size() < r) fail(ErrorCode::PredicateFailed, "not enough coset representatives");

  SubgroupPointSet set;
  set.points.reserve(r * m);
  std::set<std::uint32_t> seen;
  for (Element rep : prov.eta) {
    Element pt = rep;
    for (std::uint64_t t = 1; t <= m; ++t) {
      pt = F.mul(pt, prov.theta1);
      if (!seen.insert(pt.code).second) fail(ErrorCode::DuplicatePoints, "point set has a repeated element");
      set.points.push_back(pt);
    }
  }

  std::vector<Element> B(r);
  for (std::uint64_t s = 0; s < r; ++s) B[s] = F.pow(prov.eta[s], m);
  const Element m_inv = F.inv(F.from_int(static_cast<std::int64_t>(m)));
  set.u_closed.resize(set.points.size());
  for (std::uint64_t s = 0; s < r; ++s) {
    Element factor = F.mul(F.inv(B[s]), m_inv);
    for (std::uint64_t t = 0; t < r; ++t)
      if (t != s) factor = F.mul(factor, F.inv(F.sub(B[s], B[t])));
    for (std::uint64_t t = 0; t < m; ++t) {
      const std::size_t idx = s * m + t;
      set.u_closed[idx] = F.mul(set.points[idx], factor);
    }
  }
  set.provenance = std::move(prov);
  return set;
}

std::vector<Element> u_closed_form_roots(const Field& F, std::size_t n) {
  const Element beta = F.nth_root_of_unity(n);
  const Element n_inv = F.inv(F.from_int(static_cast<std::int64_t>(n)));
  std::vector<Element> u(n);
  Element power = F.one();
  for (std::size_t i = 0; i < n; ++i) {
    u[i] = F.mul(n_inv, power);
    power = F.mul(power, beta);
  }
  return u;
}

Element w_last_closed_form_eq6(const Field& F, const Eq6Provenance& prov) {
  const std::uint64_t n = prov.r1 * prov.r2;
  Element w = F.mul(alpha_pow_neg(F, prov.x1, prov.r1, prov.r2), alpha_pow_neg(F, prov.x2, prov.r2, prov.r1));
  return n % 2 == 1 ? F.neg(w) : w;
}

std::pair<std::uint64_t, Element> smallest_scaling_element(const Field& F, GaloisLevel l) {
  const std::uint64_t norm_exp = F.p_power(l.value) + 1;
  for (std::uint64_t s = 1; s + 1 < F.q(); ++s) {
    const Element x = F.exp(s);
    if (F.pow(x, norm_exp) != F.one()) return {s, x};
  }
  fail(ErrorCode::NoScalingElement, "no element with x^{p^l+1} != 1 in F_" + num(F.q()));
}

std::size_t check_admissible(const Field& F, const FamilyRequest& req) {
  if (req.p != F.p() || req.e != F.e())
    fail(ErrorCode::MixedFields, "request field (" + num(req.p) + ", " + num(req.e) + ") differs from the context");
  F.level(req.l);
  const std::uint64_t N = F.group_order();
  const std::uint64_t pl = F.p_power(req.l);

  switch (req.family) {
    case Family::T1a: {
      if (!req.n || *req.n < 1) reject("n >= 1 is required");
      const std::size_t n = *req.n;
      if (N % n != 0) reject("n = " + num(n) + " must divide q-1 = " + num(N));
      const std::size_t k_max = static_cast<std::size_t>((pl + n - 1) / (pl + 1));
      check_k_h(req, k_max, "floor((p^l+n-1)/(p^l+1))");
      // Degree condition used by the witness polynomials; equivalent to the
      // floor bound for integer k, checked separately all the same.
      const auto lhs = arith::checked_mul(pl, req.k - 1);
      const bool witness_ok = lhs && req.k + 1 <= n && *lhs <= n - req.k - 1;
      if (!witness_ok) {
        fail(ErrorCode::MethodDisagreement,
             "floor bound admits k = " + num(req.k) + " but p^l(k-1) <= n-k-1 fails");
      }
      return n;
    }
    case Family::T1b: {
      if (req.l == 0) reject("l >= 1 is required");
      if (!req.n || *req.n < 1) reject("n >= 1 is required");
      const std::size_t n = *req.n;
      if ((pl - 1) % n != 0) reject("n = " + num(n) + " must divide p^l-1 = " + num(pl - 1));
      check_k_h(req, n / 2, "floor(n/2)");
      return n;
    }
    case Family::T2: {
      require_theorem_field(F, req.l);
      if (!req.n || *req.n < 1) reject("n >= 1 is required");
      const std::size_t n = *req.n;
      if (n > pl) reject("n = " + num(n) + " exceeds p^l = " + num(pl));
      check_k_h(req, n / 2, "floor(n/2)");
      return n;
    }
    case Family::T3n:
    case Family::T3n1:
    case Family::T3n2: {
      require_theorem_field(F, req.l);
      const PairedVerdict l7 = lemma7_predicate(F, req.l, req.x1, req.x2);
      if (!l7.agree()) fail(ErrorCode::MethodDisagreement, "the two point-set conditions disagree");
      if (!l7.second) {
        reject("need (q-1) | lcm(x1, x2) and (q-1)/(p^l-1) | x1, got x1 = " + num(req.x1) + ", x2 = " +
               num(req.x2));
      }
      const std::uint64_t r_max = N / std::gcd(req.x1, N);
      if (req.r < 1 || req.r > r_max) reject("r = " + num(req.r) + " outside [1, (q-1)/gcd(x1,q-1) = " + num(r_max) + "]");
      const std::size_t n = req.r * (N / std::gcd(req.x2, N));
      check_given_n(req, n);
      check_k_h(req, static_cast<std::size_t>((pl + n) / (pl + 1)), "floor((p^l+n)/(p^l+1))");
      return n;
    }
    case Family::T4n:
    case Family::T4n1:
    case Family::T4n2: {
      require_theorem_field(F, req.l);
      if (req.m < 1 || N % req.m != 0) reject("m = " + num(req.m) + " must divide q-1 = " + num(N));
      const std::uint64_t y = N / (pl - 1);
      const std::uint64_t m1 = req.m / std::gcd(req.m, y);
      const std::uint64_t r_max = (pl - 1) / m1;
      if (req.r < 1 || req.r > r_max) reject("r = " + num(req.r) + " outside [1, (p^l-1)/m1 = " + num(r_max) + "]");
      const std::size_t n = req.r * req.m;
      check_given_n(req, n);
      check_k_h(req, static_cast<std::size_t>((pl + n) / (pl + 1)), "floor((p^l+n)/(p^l+1))");
      return n;
    }
  }
  reject("unknown family");
}

namespace {

std::pair<GrsSpec, ConstructionProvenance> construct_t1(const FieldPtr& Fp, const FamilyRequest& req, std::size_t n) {
  const Field& F = *Fp;
  const GaloisLevel l{req.l};
  ConstructionProvenance prov;
  prov.family = std::string(to_string(req.family));
  prov.z = req.k - req.h;

  GrsSpec spec{Fp, std::vector<Element>(n), std::vector<Element>(n, F.one()), req.k, false};
  const Element root = F.nth_root_of_unity(n);
  Element power = F.one();
  for (std::size_t i = 0; i < n; ++i) {
    spec.a[i] = power;
    power = F.mul(power, root);
  }

  if (prov.z == 0) {
    // Self-orthogonal case: v_i^{p^l+1} = a_i turns every codeword into an
    // l-Galois dual word (g = n f^{p^l} / x after the twist).
    const std::uint64_t norm_exp = F.p_power(l.value) + 1;
    for (std::size_t i = 0; i < n; ++i) {
      auto v = F.power_preimage(spec.a[i], norm_exp);
      if (!v) {
        fail(ErrorCode::NoPreimage,
             "no v with v^{p^l+1} = a_i for point " + num(i) + "; h = k is unreachable by this recipe");
      }
      spec.v[i] = *v;
      prov.scaled_indices.push_back(i);
    }
    prov.self_orthogonal_multipliers = true;
    return {std::move(spec), std::move(prov)};
  }

  // The last z-1 coordinates carry a multiplier with v^{p^l+1} != 1.
  if (prov.z > 1) {
    const auto [s, x] = smallest_scaling_element(F, l);
    prov.scale_exponent = s;
    prov.scale_element = x;
    for (std::size_t i = n - (prov.z - 1); i < n; ++i) {
      spec.v[i] = x;
      prov.scaled_indices.push_back(i);
    }
  }
  return {std::move(spec), std::move(prov)};
}

std::pair<GrsSpec, ConstructionProvenance> construct_t2(const FieldPtr& Fp, const FamilyRequest& req, std::size_t n) {
  const Field& F = *Fp;
  const GaloisLevel l{req.l};
  ConstructionProvenance prov;
  prov.family = "T2";
  prov.z = req.k - req.h;

  GrsSpec spec{Fp, {}, {}, req.k, false};
  spec.a.push_back(F.zero());
  const Element gamma = F.exp(F.group_order() / (F.p_power(l.value) - 1));
  Element power = F.one();
  while (spec.a.size() < n) {
    spec.a.push_back(power);
    power = F.mul(power, gamma);
  }
  const auto u = compute_u(F, spec.a);
  std::vector<Element> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = F.galois_norm_preimage(u[i], l);
  if (prov.z > 0) {
    const auto [s, beta] = smallest_scaling_element(F, l);
    prov.scale_exponent = s;
    prov.scale_element = beta;
    v = scale_prefix(F, std::move(v), prov.z, beta, prov);
  }
  spec.v = std::move(v);
  return {std::move(spec), std::move(prov)};
}

std::pair<GrsSpec, ConstructionProvenance> construct_subgroup(const FieldPtr& Fp, const FamilyRequest& req) {
  const Field& F = *Fp;
  const GaloisLevel l{req.l};
  const SubgroupPointSet set = uses_eq6_points(req.family) ? build_pointset_eq6(F, req.l, req.x1, req.x2, req.r)
                                                           : build_pointset_coset(F, req.l, req.m, req.r);
  const auto u = compute_u(F, set.points);
  if (u != set.u_closed) fail(ErrorCode::MethodDisagreement, "closed-form u differs from the direct product");

  ConstructionProvenance prov;
  prov.family = std::string(to_string(req.family));
  prov.point_set = set.provenance;
  const std::size_t extra = extra_length(req.family);
  prov.z = (extra == 1) ? req.k - req.h : req.k - 1 - req.h;

  GrsSpec spec{Fp, set.points, {}, req.k, extra == 2};
  std::vector<Element> targets;
  if (extra == 0) {
    targets.resize(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) targets[i] = F.div(u[i], spec.a[i]);
  } else {
    spec.a.push_back(F.zero());
    targets = compute_u(F, spec.a);
  }
  std::vector<Element> v(targets.size());
  for (std::size_t i = 0; i < targets.size(); ++i) v[i] = F.galois_norm_preimage(targets[i], l);
  if (prov.z > 0) {
    const auto [s, beta] = smallest_scaling_element(F, l);
    prov.scale_exponent = s;
    prov.scale_element = beta;
    v = scale_prefix(F, std::move(v), prov.z, beta, prov);
  }
  spec.v = std::move(v);
  return {std::move(spec), std::move(prov)};
}

}  // namespace

std::pair<GrsSpec, ConstructionProvenance> construct_spec(const FieldPtr& F, const FamilyRequest& req) {
  const std::size_t n = check_admissible(*F, req);
  switch (req.family) {
    case Family::T1a:
    case Family::T1b:
      return construct_t1(F, req, n);
    case Family::T2:
      return construct_t2(F, req, n);
    default:
      return construct_subgroup(F, req);
  }
}

Construction construct(const FieldPtr& F, const FamilyRequest& req) {
  auto [spec, prov] = construct_spec(F, req);
  const std::size_t n = uses_eq6_points(req.family) || uses_coset_points(req.family)
                            ? spec.points() - (extra_length(req.family) > 0 ? 1 : 0)
                            : spec.points();
  const LinearCode code = grs_generator(spec);
  HullReport hull = hull_compute(code, GaloisLevel{req.l});
  if (hull.dim() != req.h) {
    fail(ErrorCode::TheoremMismatch, std::string(to_string(req.family)) + ": requested hull dimension " + num(req.h) +
                                         ", measured " + num(hull.dim()));
  }
  return Construction{req, n, std::move(spec), req.h, std::move(prov), std::move(hull)};
}

Construction construct(const FamilyRequest& req) { return construct(Field::create(req.p, req.e), req); }

}  // namespace hullforge
