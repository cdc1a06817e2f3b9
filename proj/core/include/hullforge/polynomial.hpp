#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hullforge/ffield.hpp"

namespace hullforge {

/// Dense polynomial over F_q, coefficients constant term first.  The zero
/// polynomial is the empty vector after `trim`.
using Poly = std::vector<Element>;

namespace poly {

void trim(Poly& f);
/// Degree, or -1 for the zero polynomial.
std::ptrdiff_t degree(const Poly& f);
Element coefficient(const Poly& f, std::size_t i);

Element eval(const Field& F, const Poly& f, Element x);
Poly add(const Field& F, const Poly& f, const Poly& g);
Poly sub(const Field& F, const Poly& f, const Poly& g);
Poly mul(const Field& F, const Poly& f, const Poly& g);
Poly scale(const Field& F, const Poly& f, Element c);
/// f(x) / x when f(0) = 0.
Poly divide_by_x(const Poly& f);

/// prod (x - r) over the given roots.
Poly from_roots(const Field& F, std::span<const Element> roots);

/// Coefficient-wise Frobenius: sum f_i^{p^l} x^i.
Poly frobenius_coeffs(const Field& F, const Poly& f, GaloisLevel l);
/// The polynomial f(x)^{p^l} = sum f_i^{p^l} x^{i p^l}.
Poly frobenius_power(const Field& F, const Poly& f, GaloisLevel l);

/// Unique polynomial of degree < n through (xs[i], ys[i]); xs distinct.
Poly interpolate(const Field& F, std::span<const Element> xs, std::span<const Element> ys);

}  // namespace poly
}  // namespace hullforge
