#pragma once

#include <cstddef>
#include <optional>

#include "hullforge/grs.hpp"

namespace hullforge {

/// Hull_l(C) = C ∩ C^{⊥_l}, measured two independent ways.
struct HullReport {
  GaloisLevel l;
  /// rank(G) + rank(G_dual) - rank([G; G_dual]).
  std::size_t dim_stacked = 0;
  /// (n - k) - rank(H * H^‡), H^‡ = (H^{(p^{e-l})})^T.
  std::size_t dim_rank = 0;
  Matrix basis;

  std::size_t dim() const noexcept { return dim_stacked; }
};

/// C^{⊥_l} = (C^{p^{e-l}})^⊥.
LinearCode galois_dual(const LinearCode& code, GaloisLevel l);

/// Throws MethodDisagreement if the two dimension routes differ.
HullReport hull_compute(const LinearCode& code, GaloisLevel l);

/// rank(H * H^‡) for the parity-check matrix H of `code`.
std::size_t rank_h_hdagger(const LinearCode& code, GaloisLevel l);

/// l-Galois form sum x_i y_i^{p^l}.
Element galois_form(const Field& F, std::span<const Element> x, std::span<const Element> y, GaloisLevel l);

/// Polynomials certifying that the codeword of f lies in the l-Galois dual of
/// a GRS code: v_i^{p^l+1} f(a_i)^{p^l} = u_i g(a_i) for every point, and for
/// the extended code additionally f_{k-1}^{p^l} = -g_{n-k}.  `c` is the
/// cofactor f was built from, kept for provenance only.
struct HullWitness {
  Poly f;
  Poly g;
  Poly c;
};

/// Throws DegreeViolation when deg f > k-1 or deg g exceeds n-k-1 (n-k when
/// extended), n being the number of evaluation points.
bool membership_witness_check(const GrsSpec& spec, GaloisLevel l, const HullWitness& w);

/// Interpolates g through the forced values and returns it when it meets the
/// degree (and extended-coordinate) constraints.
std::optional<Poly> witness_solve(const GrsSpec& spec, GaloisLevel l, const Poly& f);

}  // namespace hullforge
