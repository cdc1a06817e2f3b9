#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hullforge/error.hpp"

namespace hullforge {

struct PrimePower {
  std::uint64_t p = 0;
  unsigned e = 0;
  std::uint64_t q = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// A field element in canonical polynomial-basis form.  `code` packs the
/// coordinates c_0 + c_1 p + ... + c_{e-1} p^{e-1}, so equality of codes is
/// equality of coefficient vectors.
struct Element {
  std::uint32_t code = 0;

  friend constexpr auto operator<=>(Element, Element) = default;
};

/// Galois level l of the form sum x_i y_i^{p^l}; always 0 <= l <= e-1.
struct GaloisLevel {
  unsigned value = 0;

  friend constexpr bool operator==(GaloisLevel, GaloisLevel) = default;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// F_{p^e} with a fixed monic irreducible modulus and primitive element.
///
/// Immutable after construction.  When q <= 2^20 multiplication goes through
/// log/antilog tables (and addition through Zech logarithms for odd p);
/// larger fields fall back to polynomial arithmetic with reduction.
class Field {
 public:
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 31;
  static constexpr std::uint64_t kTableThreshold = std::uint64_t{1} << 20;

  /// Builds F_{p^e}.  Without an explicit modulus the lexicographically
  /// smallest monic irreducible is used (coefficients compared constant term
  /// first); without an explicit alpha the smallest primitive element in the
  /// same order is used.
  static FieldPtr create(std::uint64_t p, unsigned e,
                         std::optional<std::vector<std::uint32_t>> modulus = std::nullopt,
                         std::optional<std::vector<std::uint32_t>> alpha = std::nullopt);

  const PrimePower& prime_power() const noexcept { return pp_; }
  std::uint64_t p() const noexcept { return pp_.p; }
  unsigned e() const noexcept { return pp_.e; }
  std::uint64_t q() const noexcept { return pp_.q; }
  /// |F_q^*| = q - 1.
  std::uint64_t group_order() const noexcept { return pp_.q - 1; }
  /// Coefficients of the modulus, constant term first, length e+1.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
  Element alpha() const noexcept { return alpha_; }
  bool has_log_tables() const noexcept { return !antilog_.empty(); }
  const std::vector<std::uint64_t>& group_order_primes() const noexcept { return order_primes_; }

  /// True when elements of both fields share one encoding (same p, e, modulus).
  bool compatible_with(const Field& other) const noexcept;

  Element zero() const noexcept { return Element{0}; }
  Element one() const noexcept { return Element{1}; }
  Element from_int(std::int64_t value) const;
  Element from_code(std::uint64_t code) const;
  Element from_coeffs(std::span<const std::uint32_t> coeffs) const;
  std::vector<std::uint32_t> coeffs(Element x) const;
  bool in_prime_field(Element x) const noexcept { return x.code < pp_.p; }

  Element add(Element a, Element b) const;
  Element sub(Element a, Element b) const;
  Element neg(Element a) const;
  Element mul(Element a, Element b) const;
  Element inv(Element a) const;
  Element div(Element a, Element b) const;
  Element pow(Element x, std::uint64_t exponent) const;
  /// alpha^t for any t >= 0.
  Element exp(std::uint64_t t) const;

  /// p^j for 0 <= j <= e.
  std::uint64_t p_power(unsigned j) const noexcept { return p_powers_[j]; }
  GaloisLevel level(unsigned l) const;

  /// x^{p^l}.
  Element frobenius(Element x, GaloisLevel l) const;
  /// x^{p^j} for any j (reduced mod e); used for the p^{e-l} twist.
  Element frobenius_power(Element x, unsigned j) const;
  /// Membership of x in the subfield F_{p^l}; requires l | e and l >= 1.
  bool in_subfield(Element x, unsigned l) const;

  std::uint64_t element_order(Element x) const;
  Element nth_root_of_unity(std::uint64_t n) const;
  std::uint64_t discrete_log(Element x) const;

  /// Smallest power v = alpha^s with v^exponent = u, or nullopt.
  std::optional<Element> power_preimage(Element u, std::uint64_t exponent) const;
  /// v with v^{p^l+1} = u for u in F_{p^l}^*.
  Element galois_norm_preimage(Element u, GaloisLevel l) const;

  std::string describe() const;

 private:
  Field() = default;

  void decompose(std::uint32_t code, std::uint32_t* digits) const noexcept;
  std::uint32_t compose(const std::uint32_t* digits) const noexcept;
  Element add_digits(Element a, Element b) const noexcept;
  Element mul_poly(Element a, Element b) const;
  Element pow_poly(Element x, std::uint64_t exponent) const;
  std::uint64_t discrete_log_pohlig_hellman(Element x) const;
  void build_tables();

  PrimePower pp_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint64_t> p_powers_;
  std::vector<std::uint64_t> order_primes_;
  Element alpha_{};
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> antilog_;
  std::vector<std::uint32_t> zech_;
};

}  // namespace hullforge
