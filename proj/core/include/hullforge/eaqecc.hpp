#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hullforge/families.hpp"

namespace hullforge {

/// [[n, k, d; c]]_q entanglement-assisted code parameters.
struct EaqeccParams {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t d = 0;
  std::size_t c = 0;
  std::uint64_t q = 0;
  bool mds = false;
  /// Hull dimension the tuple was derived from.
  std::size_t hull_dim = 0;
  std::string source;
  std::optional<FamilyRequest> request;

  bool same_tuple(const EaqeccParams& o) const noexcept {
    return n == o.n && k == o.k && d == o.d && c == o.c && q == o.q;
  }
  std::string to_string() const;
};

struct SingletonVerdict {
  std::int64_t slack = 0;
  bool mds = false;
};

/// slack = n + c - k - 2(d-1).  Throws BoundViolated when negative or when
/// c leaves [0, n-1].
SingletonVerdict singleton_verdict(const EaqeccParams& p);

/// Tuple from an [n, k, d] code whose l-Galois hull has dimension `hull`.
EaqeccParams eaqecc_from_hull(std::size_t n, std::size_t k, std::size_t d, std::size_t hull, std::uint64_t q);

/// Measures the hull of `code` and derives the tuple; d must be the code's
/// true minimum distance.
EaqeccParams derive_eaqecc(const LinearCode& code, GaloisLevel l, std::size_t d);

/// Closed-form tuple claimed for the family: length n + extra, dimension
/// k - h, distance n + extra - k + 1, c = n + extra - k - h.
EaqeccParams closed_form_tuple(Family family, std::size_t n, std::size_t k, std::size_t h, std::uint64_t q);

struct FamilyEmission {
  Construction construction;
  EaqeccParams params;
};

/// construct + measured hull + derived tuple, checked against the closed
/// form (TheoremMismatch on any difference) and the Singleton bound.
FamilyEmission theorem_family_emit(const FieldPtr& F, const FamilyRequest& req);

struct DualSide {
  EaqeccParams params;
  std::size_t hull_primal = 0;
  std::size_t hull_dual = 0;
};

/// [[n, n-k-h', k+1; k-h']] with h' the l-Galois hull dimension of the
/// l-Galois dual.  Expects an MDS input code.
DualSide dual_side_eaqecc(const LinearCode& code, GaloisLevel l);

struct HullPair {
  std::uint64_t p = 0;
  unsigned e = 0;
  unsigned l = 0;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t hull_primal = 0;
  std::size_t hull_dual = 0;
};

std::string hull_pairs_csv_header();
std::string hull_pairs_csv(const std::vector<HullPair>& rows);

enum class SweepSource { Random, T1a };

struct SweepConfig {
  std::vector<std::pair<std::uint64_t, unsigned>> fields;
  /// Inclusive; clipped to [0, e-1] per field.  Empty range when l_min > l_max.
  unsigned l_min = 0;
  unsigned l_max = 0;
  std::size_t n_min = 1;
  std::size_t n_max = 0;
  std::size_t k_min = 1;
  std::size_t k_max = 0;
  /// Random GRS specs per (field, l, n, k) cell.
  std::size_t samples = 1;
  std::uint64_t seed = 1;
  SweepSource source = SweepSource::Random;
  std::size_t threads = 0;
};

/// Primal and dual hull dimensions over the sweep, in a fixed order
/// independent of the thread count.
std::vector<HullPair> sweep_hull_pairs(const SweepConfig& cfg);

}  // namespace hullforge
