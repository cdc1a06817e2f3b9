#include "hullforge/grs.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "hullforge/arith.hpp"

namespace hullforge {

void GrsSpec::validate() const {
  if (!field) fail(ErrorCode::MalformedDescriptor, "GRS spec without a field");
  if (a.empty()) fail(ErrorCode::InvalidDimension, "GRS spec needs at least one point");
  if (v.size() != a.size()) fail(ErrorCode::ShapeMismatch, "points and multipliers differ in length");
  std::set<std::uint32_t> seen;
  for (Element x : a) {
    if (x.code >= field->q()) fail(ErrorCode::InvalidElement, "point outside the field");
    if (!seen.insert(x.code).second) fail(ErrorCode::DuplicatePoints, "evaluation points are not distinct");
  }
  for (Element x : v) {
    if (x.code == 0) fail(ErrorCode::ZeroMultiplier, "column multiplier is zero");
    if (x.code >= field->q()) fail(ErrorCode::InvalidElement, "multiplier outside the field");
  }
  const std::size_t max_k = a.size() + (extended ? 1 : 0);
  if (k < 1 || k > max_k) {
    fail(ErrorCode::InvalidDimension,
         "dimension k = " + std::to_string(k) + " outside [1, " + std::to_string(max_k) + "]");
  }
}

LinearCode::LinearCode(Matrix generator) : gen_(std::move(generator)), parity_(null_space(gen_)) {
  if (parity_.rows() != gen_.cols() - gen_.rows())
    fail(ErrorCode::RankDeficient, "generator matrix does not have full row rank");
}

LinearCode LinearCode::from_span(const Matrix& m) { return LinearCode(row_basis(m)); }

LinearCode grs_generator(const GrsSpec& spec) {
  spec.validate();
  const Field& F = *spec.field;
  const std::size_t n = spec.points();
  Matrix g(spec.field, spec.k, spec.length());
  for (std::size_t j = 0; j < n; ++j) {
    Element entry = spec.v[j];
    for (std::size_t i = 0; i < spec.k; ++i) {
      g.set(i, j, entry);
      entry = F.mul(entry, spec.a[j]);
    }
  }
  if (spec.extended) g.set(spec.k - 1, n, F.one());
  return LinearCode(std::move(g));
}

std::vector<Element> compute_u(const Field& F, std::span<const Element> a) {
  std::vector<Element> u(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    Element prod = F.one();
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (j == i) continue;
      const Element d = F.sub(a[i], a[j]);
      if (d.code == 0) fail(ErrorCode::DuplicatePoints, "evaluation points are not distinct");
      prod = F.mul(prod, d);
    }
    u[i] = F.inv(prod);
  }
  return u;
}

std::vector<Element> encode(const LinearCode& code, std::span<const Element> message) {
  if (message.size() != code.dimension()) fail(ErrorCode::ShapeMismatch, "message length != k");
  return vec_mat(message, code.generator());
}

std::vector<Element> evaluate_grs(const GrsSpec& spec, const Poly& f) {
  const Field& F = *spec.field;
  if (poly::degree(f) >= static_cast<std::ptrdiff_t>(spec.k))
    fail(ErrorCode::DegreeViolation, "message polynomial degree exceeds k-1");
  std::vector<Element> word(spec.length());
  for (std::size_t i = 0; i < spec.points(); ++i) word[i] = F.mul(spec.v[i], poly::eval(F, f, spec.a[i]));
  if (spec.extended) word.back() = poly::coefficient(f, spec.k - 1);
  return word;
}

std::size_t hamming_weight(std::span<const Element> word) {
  return static_cast<std::size_t>(std::count_if(word.begin(), word.end(), [](Element x) { return x.code != 0; }));
}

namespace {

std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  arith::u128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > cap) return cap + 1;
  }
  return static_cast<std::uint64_t>(r);
}

}  // namespace

bool mds_check_minors(const LinearCode& code, std::uint64_t budget) {
  const std::size_t n = code.length(), k = code.dimension();
  if (k == 0) return true;
  const std::uint64_t subsets = binomial_capped(n, k, budget);
  if (subsets > budget) {
    fail(ErrorCode::TooLarge, "C(" + std::to_string(n) + "," + std::to_string(k) + ") exceeds the minor budget");
  }
  std::vector<std::size_t> cols(k);
  for (std::size_t i = 0; i < k; ++i) cols[i] = i;
  while (true) {
    if (rank(select_columns(code.generator(), cols)) != k) return false;
    // next k-subset in lexicographic order
    std::size_t i = k;
    while (i > 0 && cols[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cols[i - 1];
    for (std::size_t j = i; j < k; ++j) cols[j] = cols[j - 1] + 1;
  }
  return true;
}

std::size_t min_distance_bruteforce(const LinearCode& code, std::uint64_t budget) {
  const Field& F = code.field();
  const std::size_t n = code.length(), k = code.dimension();
  auto total = arith::checked_pow(F.q(), static_cast<unsigned>(k));
  if (!total || *total > budget) {
    fail(ErrorCode::TooLarge, "q^k exceeds the brute-force budget");
  }
  if (k == 0) return 0;
  // Odometer over message digits (element codes); the codeword is updated
  // incrementally by (new - old) * row.
  std::vector<std::uint32_t> digits(k, 0);
  std::vector<Element> word(n);
  std::size_t best = n + 1;
  const Matrix& g = code.generator();
  while (true) {
    std::size_t pos = 0;
    while (pos < k && digits[pos] + 1 == F.q()) {
      const Element delta = F.neg(Element{digits[pos]});
      for (std::size_t j = 0; j < n; ++j) word[j] = F.add(word[j], F.mul(delta, g.at(pos, j)));
      digits[pos] = 0;
      ++pos;
    }
    if (pos == k) break;
    const Element delta = F.sub(Element{digits[pos] + 1}, Element{digits[pos]});
    for (std::size_t j = 0; j < n; ++j) word[j] = F.add(word[j], F.mul(delta, g.at(pos, j)));
    ++digits[pos];
    best = std::min(best, hamming_weight(word));
  }
  return best;
}

}  // namespace hullforge
