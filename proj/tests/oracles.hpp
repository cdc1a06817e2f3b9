#pragma once

// Slow, obviously-correct reference implementations.  Nothing here calls
// into the library's arithmetic; elements travel as base-p digit codes
// (c_0 + c_1 p + ...), the same packing the library exposes.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Code = std::uint32_t;
using Word = std::vector<Code>;

// Schoolbook arithmetic in F_p[x]/(m(x)).
class Field {
 public:
  Field(std::uint64_t p, std::vector<std::uint32_t> monic_modulus)
      : p_(p), mod_(std::move(monic_modulus)), e_(static_cast<unsigned>(mod_.size() - 1)) {
    q_ = 1;
    for (unsigned i = 0; i < e_; ++i) q_ *= p_;
  }

  std::uint64_t p() const { return p_; }
  unsigned e() const { return e_; }
  std::uint64_t q() const { return q_; }

  std::vector<std::uint64_t> digits(Code x) const {
    std::vector<std::uint64_t> d(e_);
    for (unsigned i = 0; i < e_; ++i) {
      d[i] = x % p_;
      x = static_cast<Code>(x / p_);
    }
    return d;
  }
  Code pack(const std::vector<std::uint64_t>& d) const {
    std::uint64_t x = 0;
    for (unsigned i = e_; i-- > 0;) x = x * p_ + d[i];
    return static_cast<Code>(x);
  }

  Code add(Code a, Code b) const {
    auto x = digits(a), y = digits(b);
    for (unsigned i = 0; i < e_; ++i) x[i] = (x[i] + y[i]) % p_;
    return pack(x);
  }
  Code neg(Code a) const {
    auto x = digits(a);
    for (auto& c : x) c = (p_ - c) % p_;
    return pack(x);
  }
  Code sub(Code a, Code b) const { return add(a, neg(b)); }

  Code mul(Code a, Code b) const {
    auto x = digits(a), y = digits(b);
    std::vector<std::uint64_t> prod(2 * e_ + 1, 0);
    for (unsigned i = 0; i < e_; ++i)
      for (unsigned j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
    // Reduce from the top: x^e = -(m_0 + ... + m_{e-1} x^{e-1}).
    for (std::size_t d = prod.size(); d-- > e_;) {
      const std::uint64_t c = prod[d];
      if (c == 0) continue;
      prod[d] = 0;
      for (unsigned i = 0; i < e_; ++i) prod[d - e_ + i] = (prod[d - e_ + i] + (p_ - c) * mod_[i]) % p_;
    }
    prod.resize(e_);
    return pack(prod);
  }

  Code pow(Code x, std::uint64_t n) const {
    Code r = 1;
    for (std::uint64_t i = 0; i < n; ++i) r = mul(r, x);
    return r;
  }
  Code pow_fast(Code x, std::uint64_t n) const {
    Code r = 1;
    while (n) {
      if (n & 1) r = mul(r, x);
      x = mul(x, x);
      n >>= 1;
    }
    return r;
  }
  Code inv(Code x) const {
    for (Code y = 1; y < q_; ++y)
      if (mul(x, y) == 1) return y;
    return 0;
  }
  std::uint64_t order(Code x) const {
    Code y = x;
    std::uint64_t t = 1;
    while (y != 1) {
      y = mul(y, x);
      ++t;
    }
    return t;
  }
  Code frob(Code x, unsigned l) const {
    std::uint64_t pl = 1;
    for (unsigned i = 0; i < l; ++i) pl *= p_;
    return pow_fast(x, pl);
  }

 private:
  std::uint64_t p_;
  std::vector<std::uint32_t> mod_;
  unsigned e_;
  std::uint64_t q_;
};

// --- polynomials over F_p (coefficient lists, constant term first) ---

inline std::vector<std::uint64_t> poly_mod_p(std::vector<std::uint64_t> a, const std::vector<std::uint64_t>& b,
                                             std::uint64_t p) {
  auto inv_p = [p](std::uint64_t x) {
    for (std::uint64_t y = 1; y < p; ++y)
      if (x * y % p == 1) return y;
    return std::uint64_t{0};
  };
  const std::size_t db = b.size() - 1;
  const std::uint64_t lead_inv = inv_p(b.back());
  while (a.size() > db) {
    const std::uint64_t c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] = (a[shift + i] + (p - c) * b[i]) % p;
    a.pop_back();
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

// No monic factor of degree 1..deg/2, found by trial division.
inline bool irreducible_by_trial(const std::vector<std::uint32_t>& m, std::uint64_t p) {
  const std::size_t deg = m.size() - 1;
  std::vector<std::uint64_t> f(m.begin(), m.end());
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t t = 0; t < count; ++t) {
      std::vector<std::uint64_t> g(d + 1, 0);
      std::uint64_t x = t;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = x % p;
        x /= p;
      }
      g[d] = 1;
      if (poly_mod_p(f, g, p).empty()) return false;
    }
  }
  return true;
}

// Monic degree-e polynomials (or length-e vectors) enumerated with the
// constant coefficient most significant.
inline std::vector<std::uint32_t> lex_vector(std::uint64_t t, std::uint64_t p, unsigned e) {
  std::vector<std::uint32_t> v(e);
  for (unsigned i = e; i-- > 0;) {
    v[i] = static_cast<std::uint32_t>(t % p);
    t /= p;
  }
  return v;
}

inline std::vector<std::uint32_t> smallest_irreducible(std::uint64_t p, unsigned e) {
  std::uint64_t count = 1;
  for (unsigned i = 0; i < e; ++i) count *= p;
  for (std::uint64_t t = 0; t < count; ++t) {
    auto m = lex_vector(t, p, e);
    m.push_back(1);
    if (irreducible_by_trial(m, p)) return m;
  }
  return {};
}

inline Code smallest_primitive(const Field& F) {
  for (std::uint64_t t = 1; t < F.q(); ++t) {
    const auto v = lex_vector(t, F.p(), F.e());
    Code x = 0;
    for (unsigned i = F.e(); i-- > 0;) x = static_cast<Code>(x * F.p() + v[i]);
    if (x != 0 && F.order(x) == F.q() - 1) return x;
  }
  return 0;
}

// --- words and codes ---

inline Word scale(const Field& F, Code c, const Word& w) {
  Word r(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) r[i] = F.mul(c, w[i]);
  return r;
}

inline Word add(const Field& F, const Word& a, const Word& b) {
  Word r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.add(a[i], b[i]);
  return r;
}

// Every linear combination of the rows.
inline std::set<Word> rowspace(const Field& F, const std::vector<Word>& rows, std::size_t cols) {
  std::set<Word> span{Word(cols, 0)};
  for (const auto& row : rows) {
    std::set<Word> next;
    for (const auto& w : span)
      for (Code c = 0; c < F.q(); ++c) next.insert(add(F, w, scale(F, c, row)));
    span = std::move(next);
  }
  return span;
}

inline std::size_t log_q(const Field& F, std::size_t count) {
  std::size_t d = 0;
  while (count > 1) {
    count /= F.q();
    ++d;
  }
  return d;
}

inline Code galois_form(const Field& F, const Word& x, const Word& y, unsigned l) {
  Code s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s = F.add(s, F.mul(x[i], F.frob(y[i], l)));
  return s;
}

// |C ∩ C^{⊥_l}| counted over the codewords of C; returns its log_q.
inline std::size_t hull_dim_by_enumeration(const Field& F, const std::vector<Word>& gen, unsigned l) {
  const std::size_t cols = gen.empty() ? 0 : gen[0].size();
  std::size_t count = 0;
  for (const auto& c : rowspace(F, gen, cols)) {
    bool orth = true;
    for (const auto& g : gen)
      if (galois_form(F, g, c, l) != 0) {
        orth = false;
        break;
      }
    count += orth;
  }
  return log_q(F, count);
}

inline std::size_t min_weight(const Field& F, const std::vector<Word>& gen) {
  const std::size_t cols = gen[0].size();
  std::size_t best = cols + 1;
  for (const auto& w : rowspace(F, gen, cols)) {
    const auto wt = static_cast<std::size_t>(std::count_if(w.begin(), w.end(), [](Code c) { return c != 0; }));
    if (wt != 0) best = std::min(best, wt);
  }
  return best;
}

// f(x) = sum f_i x^i by Horner's rule.
inline Code horner(const Field& F, const Word& f, Code x) {
  Code acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = F.add(F.mul(acc, x), f[i]);
  return acc;
}

// (v_1 f(a_1), ..., v_n f(a_n) [, f_{k-1}]).
inline Word grs_word(const Field& F, const Word& a, const Word& v, const Word& f, bool extended) {
  Word w;
  for (std::size_t i = 0; i < a.size(); ++i) w.push_back(F.mul(v[i], horner(F, f, a[i])));
  if (extended) w.push_back(f.size() ? f.back() : 0);
  return w;
}

inline Code u_product(const Field& F, const Word& a, std::size_t i) {
  Code prod = 1;
  for (std::size_t j = 0; j < a.size(); ++j)
    if (j != i) prod = F.mul(prod, F.sub(a[i], a[j]));
  return F.inv(prod);
}

// Solvability of v^{p^l+1} = u by exhaustion over the field.
inline bool has_norm_preimage(const Field& F, Code u, unsigned l) {
  std::uint64_t pl = 1;
  for (unsigned i = 0; i < l; ++i) pl *= F.p();
  for (Code v = 1; v < F.q(); ++v)
    if (F.pow_fast(v, pl + 1) == u) return true;
  return false;
}

}  // namespace oracle
