#include "hullforge/polynomial.hpp"

#include <algorithm>

namespace hullforge::poly {

void trim(Poly& f) {
  while (!f.empty() && f.back().code == 0) f.pop_back();
}

std::ptrdiff_t degree(const Poly& f) {
  for (std::size_t i = f.size(); i-- > 0;)
    if (f[i].code != 0) return static_cast<std::ptrdiff_t>(i);
  return -1;
}

Element coefficient(const Poly& f, std::size_t i) { return i < f.size() ? f[i] : Element{}; }

Element eval(const Field& F, const Poly& f, Element x) {
  Element acc = F.zero();
  for (std::size_t i = f.size(); i-- > 0;) acc = F.add(F.mul(acc, x), f[i]);
  return acc;
}

Poly add(const Field& F, const Poly& f, const Poly& g) {
  Poly out(std::max(f.size(), g.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.add(coefficient(f, i), coefficient(g, i));
  trim(out);
  return out;
}

Poly sub(const Field& F, const Poly& f, const Poly& g) {
  Poly out(std::max(f.size(), g.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.sub(coefficient(f, i), coefficient(g, i));
  trim(out);
  return out;
}

Poly mul(const Field& F, const Poly& f, const Poly& g) {
  if (f.empty() || g.empty()) return {};
  Poly out(f.size() + g.size() - 1);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i].code == 0) continue;
    for (std::size_t j = 0; j < g.size(); ++j) out[i + j] = F.add(out[i + j], F.mul(f[i], g[j]));
  }
  trim(out);
  return out;
}

Poly scale(const Field& F, const Poly& f, Element c) {
  Poly out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = F.mul(f[i], c);
  trim(out);
  return out;
}

Poly divide_by_x(const Poly& f) {
  if (f.empty()) return {};
  return Poly(f.begin() + 1, f.end());
}

Poly from_roots(const Field& F, std::span<const Element> roots) {
  Poly out{F.one()};
  for (Element r : roots) out = mul(F, out, Poly{F.neg(r), F.one()});
  return out;
}

Poly frobenius_coeffs(const Field& F, const Poly& f, GaloisLevel l) {
  Poly out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = F.frobenius(f[i], l);
  trim(out);
  return out;
}

Poly frobenius_power(const Field& F, const Poly& f, GaloisLevel l) {
  Poly g = f;
  trim(g);
  if (g.empty()) return {};
  const std::size_t step = static_cast<std::size_t>(F.p_power(F.level(l.value).value));
  Poly out((g.size() - 1) * step + 1);
  for (std::size_t i = 0; i < g.size(); ++i) out[i * step] = F.frobenius(g[i], l);
  return out;
}

Poly interpolate(const Field& F, std::span<const Element> xs, std::span<const Element> ys) {
  // Lagrange form: sum_i y_i * prod_{j != i} (x - x_j) / (x_i - x_j).
  const Poly full = from_roots(F, xs);
  Poly out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (ys[i].code == 0) continue;
    // full / (x - x_i) by synthetic division.
    Poly basis(xs.size());
    Element carry = F.zero();
    for (std::size_t d = full.size() - 1; d-- > 0;) {
      carry = F.add(full[d + 1], F.mul(carry, xs[i]));
      basis[d] = carry;
    }
    const Element denom = eval(F, basis, xs[i]);
    out = add(F, out, scale(F, basis, F.div(ys[i], denom)));
  }
  trim(out);
  return out;
}

}  // namespace hullforge::poly
