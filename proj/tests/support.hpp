#pragma once

#include <random>
#include <vector>

#include "hullforge/grs.hpp"
#include "oracles.hpp"

namespace testing_support {

using namespace hullforge;

inline oracle::Field mirror(const Field& F) { return oracle::Field(F.p(), F.modulus()); }

inline std::vector<oracle::Word> rows_of(const Matrix& m) {
  std::vector<oracle::Word> out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    oracle::Word w;
    for (Element x : m.row(r)) w.push_back(x.code);
    out.push_back(std::move(w));
  }
  return out;
}

inline oracle::Word codes(std::span<const Element> xs) {
  oracle::Word w;
  for (Element x : xs) w.push_back(x.code);
  return w;
}

inline Element random_element(const Field& F, std::mt19937_64& rng, bool nonzero = false) {
  std::uniform_int_distribution<std::uint64_t> d(nonzero ? 1 : 0, F.q() - 1);
  return F.from_code(d(rng));
}

inline Matrix random_matrix(const FieldPtr& F, std::size_t r, std::size_t c, std::mt19937_64& rng) {
  Matrix m(F, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, random_element(*F, rng));
  return m;
}

// n distinct points, nonzero multipliers.
inline GrsSpec random_grs(const FieldPtr& F, std::size_t n, std::size_t k, bool extended, std::mt19937_64& rng) {
  GrsSpec s;
  s.field = F;
  s.k = k;
  s.extended = extended;
  std::vector<std::uint64_t> all(F->q());
  for (std::uint64_t i = 0; i < F->q(); ++i) all[i] = i;
  std::shuffle(all.begin(), all.end(), rng);
  for (std::size_t i = 0; i < n; ++i) {
    s.a.push_back(F->from_code(all[i]));
    s.v.push_back(random_element(*F, rng, true));
  }
  return s;
}

}  // namespace testing_support
