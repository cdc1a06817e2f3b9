#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hullforge/falinalg.hpp"
#include "hullforge/polynomial.hpp"

namespace hullforge {

/// One (extended) generalized Reed-Solomon code: evaluation points `a`,
/// column multipliers `v`, dimension `k`.  The extended code appends the
/// coordinate carrying the coefficient of x^{k-1}.
struct GrsSpec {
  FieldPtr field;
  std::vector<Element> a;
  std::vector<Element> v;
  std::size_t k = 0;
  bool extended = false;

  std::size_t points() const noexcept { return a.size(); }
  std::size_t length() const noexcept { return a.size() + (extended ? 1 : 0); }
  /// Throws DuplicatePoints / ZeroMultiplier / InvalidDimension / ShapeMismatch.
  void validate() const;
};

/// A linear code given by a full-rank generator; the parity-check matrix is
/// the cached right kernel of the generator.
class LinearCode {
 public:
  /// Throws RankDeficient unless `generator` has full row rank.
  explicit LinearCode(Matrix generator);
  /// Code spanned by the rows of `m`, reduced to a basis first.
  static LinearCode from_span(const Matrix& m);

  const Matrix& generator() const noexcept { return gen_; }
  const Matrix& parity() const noexcept { return parity_; }
  std::size_t length() const noexcept { return gen_.cols(); }
  std::size_t dimension() const noexcept { return gen_.rows(); }
  const Field& field() const noexcept { return gen_.field(); }
  const FieldPtr& field_ptr() const noexcept { return gen_.field_ptr(); }

 private:
  Matrix gen_;
  Matrix parity_;
};

LinearCode grs_generator(const GrsSpec& spec);

/// u_i = prod_{j != i} (a_i - a_j)^{-1}.
std::vector<Element> compute_u(const Field& F, std::span<const Element> a);

/// message * generator.
std::vector<Element> encode(const LinearCode& code, std::span<const Element> message);

/// Codeword of f (coefficient i multiplies x^i) by direct evaluation:
/// (v_1 f(a_1), ..., v_n f(a_n) [, f_{k-1}]).
std::vector<Element> evaluate_grs(const GrsSpec& spec, const Poly& f);

inline constexpr std::uint64_t kMinorBudget = 1'000'000;
inline constexpr std::uint64_t kBruteForceBudget = std::uint64_t{1} << 20;

/// Every k-subset of columns of the generator is independent.  Throws
/// TooLarge when C(n, k) exceeds `budget`.
bool mds_check_minors(const LinearCode& code, std::uint64_t budget = kMinorBudget);

/// Minimum Hamming weight over all q^k - 1 nonzero codewords.  Throws
/// TooLarge when q^k exceeds `budget`.
std::size_t min_distance_bruteforce(const LinearCode& code, std::uint64_t budget = kBruteForceBudget);

std::size_t hamming_weight(std::span<const Element> word);

}  // namespace hullforge
