#include "hullforge/hull.hpp"

#include <string>

namespace hullforge {

LinearCode galois_dual(const LinearCode& code, GaloisLevel l) {
  const Field& F = code.field();
  F.level(l.value);
  return LinearCode(null_space(entrywise_frobenius(code.generator(), F.e() - l.value)));
}

std::size_t rank_h_hdagger(const LinearCode& code, GaloisLevel l) {
  const Field& F = code.field();
  const Matrix& h = code.parity();
  return rank(matmul(h, transpose(entrywise_frobenius(h, F.e() - l.value))));
}

HullReport hull_compute(const LinearCode& code, GaloisLevel l) {
  const Field& F = code.field();
  F.level(l.value);
  const LinearCode dual = galois_dual(code, l);
  Matrix basis = intersection_basis(code.generator(), dual.generator());
  const std::size_t stacked = intersection_dim(code.generator(), dual.generator());
  const std::size_t redundancy = code.length() - code.dimension();
  const std::size_t rhh = rank_h_hdagger(code, l);
  const std::size_t by_rank = redundancy - rhh;
  if (stacked != by_rank || basis.rows() != stacked) {
    fail(ErrorCode::MethodDisagreement,
         "hull dimension: stacked " + std::to_string(stacked) + ", rank(HH^‡) route " + std::to_string(by_rank) +
             ", basis rows " + std::to_string(basis.rows()));
  }
  return HullReport{l, stacked, by_rank, std::move(basis)};
}

Element galois_form(const Field& F, std::span<const Element> x, std::span<const Element> y, GaloisLevel l) {
  if (x.size() != y.size()) fail(ErrorCode::ShapeMismatch, "vectors of different length");
  Element acc = F.zero();
  for (std::size_t i = 0; i < x.size(); ++i) acc = F.add(acc, F.mul(x[i], F.frobenius(y[i], l)));
  return acc;
}

namespace {

std::ptrdiff_t g_degree_bound(const GrsSpec& spec) {
  const auto n = static_cast<std::ptrdiff_t>(spec.points());
  const auto k = static_cast<std::ptrdiff_t>(spec.k);
  return spec.extended ? n - k : n - k - 1;
}

// v_i^{p^l+1} f(a_i)^{p^l} for every evaluation point.
std::vector<Element> twisted_values(const GrsSpec& spec, GaloisLevel l, const Poly& f) {
  const Field& F = *spec.field;
  const std::uint64_t norm_exp = F.p_power(l.value) + 1;
  std::vector<Element> out(spec.points());
  for (std::size_t i = 0; i < spec.points(); ++i) {
    out[i] = F.mul(F.pow(spec.v[i], norm_exp), F.frobenius(poly::eval(F, f, spec.a[i]), l));
  }
  return out;
}

}  // namespace

bool membership_witness_check(const GrsSpec& spec, GaloisLevel l, const HullWitness& w) {
  spec.validate();
  const Field& F = *spec.field;
  F.level(l.value);
  if (poly::degree(w.f) > static_cast<std::ptrdiff_t>(spec.k) - 1)
    fail(ErrorCode::DegreeViolation, "deg f exceeds k-1");
  const std::ptrdiff_t bound = g_degree_bound(spec);
  if (poly::degree(w.g) > bound) fail(ErrorCode::DegreeViolation, "deg g exceeds " + std::to_string(bound));

  const auto u = compute_u(F, spec.a);
  const auto lhs = twisted_values(spec, l, w.f);
  for (std::size_t i = 0; i < spec.points(); ++i) {
    if (lhs[i] != F.mul(u[i], poly::eval(F, w.g, spec.a[i]))) return false;
  }
  if (spec.extended) {
    const Element top = F.frobenius(poly::coefficient(w.f, spec.k - 1), l);
    if (bound < 0) return false;
    if (top != F.neg(poly::coefficient(w.g, static_cast<std::size_t>(bound)))) return false;
  }
  return true;
}

std::optional<Poly> witness_solve(const GrsSpec& spec, GaloisLevel l, const Poly& f) {
  spec.validate();
  const Field& F = *spec.field;
  F.level(l.value);
  if (poly::degree(f) > static_cast<std::ptrdiff_t>(spec.k) - 1)
    fail(ErrorCode::DegreeViolation, "deg f exceeds k-1");
  const auto u = compute_u(F, spec.a);
  auto targets = twisted_values(spec, l, f);
  for (std::size_t i = 0; i < targets.size(); ++i) targets[i] = F.div(targets[i], u[i]);
  Poly g = poly::interpolate(F, spec.a, targets);
  HullWitness w{f, g, {}};
  if (poly::degree(g) > g_degree_bound(spec)) return std::nullopt;
  if (!membership_witness_check(spec, l, w)) return std::nullopt;
  return g;
}

}  // namespace hullforge
