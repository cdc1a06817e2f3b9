#include "hullforge/ffield.hpp"

#include <array>
#include <cmath>
#include <sstream>
#include <unordered_map>

#include "hullforge/arith.hpp"

namespace hullforge {
namespace {

constexpr std::uint32_t kNoLog = 0xFFFFFFFFu;
constexpr unsigned kMaxDegree = 32;

// Dense polynomials over F_p, constant term first.  Only used while choosing
// the modulus and the primitive element.
using PPoly = std::vector<std::uint64_t>;

void trim(PPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PPoly poly_mod(PPoly a, const PPoly& f, std::uint64_t p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const std::uint64_t lead_inv = *arith::inverse_mod(f.back(), p);
  while (a.size() >= f.size()) {
    const std::uint64_t c = arith::mul_mod(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t i = 0; i <= df; ++i) {
      a[shift + i] = (a[shift + i] + p - arith::mul_mod(c, f[i], p)) % p;
    }
    trim(a);
  }
  return a;
}

PPoly poly_mulmod(const PPoly& a, const PPoly& b, const PPoly& f, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  PPoly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      prod[i + j] = (prod[i + j] + arith::mul_mod(a[i], b[j], p)) % p;
  return poly_mod(std::move(prod), f, p);
}

PPoly poly_powmod(PPoly base, std::uint64_t exp, const PPoly& f, std::uint64_t p) {
  PPoly result{1};
  base = poly_mod(std::move(base), f, p);
  while (exp > 0) {
    if (exp & 1) result = poly_mulmod(result, base, f, p);
    base = poly_mulmod(base, base, f, p);
    exp >>= 1;
  }
  return result;
}

PPoly poly_gcd(PPoly a, PPoly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    PPoly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Rabin's test: f of degree e is irreducible iff x^{p^e} = x mod f and
// gcd(x^{p^{e/r}} - x, f) = 1 for every prime r | e.
bool is_irreducible(const PPoly& f, std::uint64_t p) {
  const unsigned e = static_cast<unsigned>(f.size() - 1);
  if (e == 1) return true;
  if (f[0] == 0) return false;
  std::vector<PPoly> frob(e + 1);
  frob[0] = poly_mod(PPoly{0, 1}, f, p);
  for (unsigned j = 1; j <= e; ++j) frob[j] = poly_powmod(frob[j - 1], p, f, p);
  if (frob[e] != frob[0]) return false;
  for (std::uint64_t r : arith::prime_factors(e)) {
    PPoly h = frob[e / r];
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = (h[1] + p - 1) % p;
    trim(h);
    if (h.empty()) return false;
    PPoly g = poly_gcd(f, h, p);
    if (g.size() != 1) return false;
  }
  return true;
}

// The t-th coefficient vector of length e in lexicographic order with the
// constant term most significant.
void lex_coeffs(std::uint64_t t, std::uint64_t p, unsigned e, std::uint32_t* out) {
  for (unsigned i = e; i-- > 0;) {
    out[i] = static_cast<std::uint32_t>(t % p);
    t /= p;
  }
}

}  // namespace

FieldPtr Field::create(std::uint64_t p, unsigned e, std::optional<std::vector<std::uint32_t>> modulus,
                       std::optional<std::vector<std::uint32_t>> alpha) {
  if (!arith::is_prime(p)) fail(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (e == 0) fail(ErrorCode::DegreeMismatch, "extension degree must be at least 1");
  auto q = arith::checked_pow(p, e);
  if (!q || *q > kMaxOrder) {
    fail(ErrorCode::FieldTooLarge,
         std::to_string(p) + "^" + std::to_string(e) + " exceeds the supported order 2^31");
  }

  std::shared_ptr<Field> f(new Field());
  f->pp_ = PrimePower{p, e, *q};
  f->p_powers_.resize(e + 1);
  f->p_powers_[0] = 1;
  for (unsigned j = 1; j <= e; ++j) f->p_powers_[j] = f->p_powers_[j - 1] * p;
  f->order_primes_ = arith::prime_factors(*q - 1);

  if (modulus) {
    if (modulus->size() != e + 1)
      fail(ErrorCode::DegreeMismatch, "modulus must have degree " + std::to_string(e));
    if (modulus->back() != 1) fail(ErrorCode::DegreeMismatch, "modulus must be monic");
    for (auto c : *modulus)
      if (c >= p) fail(ErrorCode::InvalidElement, "modulus coefficient out of range");
    PPoly poly(modulus->begin(), modulus->end());
    if (!is_irreducible(poly, p)) fail(ErrorCode::ReducibleModulus, "modulus is reducible over F_p");
    f->modulus_ = *modulus;
  } else {
    std::array<std::uint32_t, kMaxDegree> digits{};
    for (std::uint64_t t = 0; t < *q; ++t) {
      lex_coeffs(t, p, e, digits.data());
      PPoly poly(digits.begin(), digits.begin() + e);
      poly.push_back(1);
      if (is_irreducible(poly, p)) {
        f->modulus_.assign(poly.begin(), poly.end());
        break;
      }
    }
  }

  const std::uint64_t n = *q - 1;
  auto primitive = [&](Element x) {
    if (x.code == 0) return false;
    for (auto r : f->order_primes_)
      if (f->pow_poly(x, n / r) == f->one()) return false;
    return true;
  };

  if (alpha) {
    Element a = f->from_coeffs(*alpha);
    if (!primitive(a)) fail(ErrorCode::InvalidElement, "alpha is not a primitive element");
    f->alpha_ = a;
  } else {
    std::array<std::uint32_t, kMaxDegree> digits{};
    for (std::uint64_t t = 1; t < *q; ++t) {
      lex_coeffs(t, p, e, digits.data());
      Element cand{f->compose(digits.data())};
      if (primitive(cand)) {
        f->alpha_ = cand;
        break;
      }
    }
  }

  if (*q <= kTableThreshold) f->build_tables();
  return f;
}

void Field::build_tables() {
  const std::uint64_t n = group_order();
  antilog_.assign(n, 0);
  log_.assign(pp_.q, kNoLog);
  Element cur = one();
  for (std::uint64_t i = 0; i < n; ++i) {
    antilog_[i] = cur.code;
    log_[cur.code] = static_cast<std::uint32_t>(i);
    cur = mul_poly(cur, alpha_);
  }
  if (pp_.p != 2) {
    zech_.assign(n, kNoLog);
    for (std::uint64_t t = 0; t < n; ++t) {
      Element s = add_digits(one(), Element{antilog_[t]});
      zech_[t] = s.code == 0 ? kNoLog : log_[s.code];
    }
  }
}

bool Field::compatible_with(const Field& other) const noexcept {
  return this == &other || (pp_ == other.pp_ && modulus_ == other.modulus_);
}

void Field::decompose(std::uint32_t code, std::uint32_t* digits) const noexcept {
  const auto p = static_cast<std::uint32_t>(pp_.p);
  for (unsigned i = 0; i < pp_.e; ++i) {
    digits[i] = code % p;
    code /= p;
  }
}

std::uint32_t Field::compose(const std::uint32_t* digits) const noexcept {
  std::uint64_t code = 0;
  for (unsigned i = pp_.e; i-- > 0;) code = code * pp_.p + digits[i];
  return static_cast<std::uint32_t>(code);
}

Element Field::from_int(std::int64_t value) const {
  const auto p = static_cast<std::int64_t>(pp_.p);
  return Element{static_cast<std::uint32_t>(((value % p) + p) % p)};
}

Element Field::from_code(std::uint64_t code) const {
  if (code >= pp_.q) fail(ErrorCode::InvalidElement, "element code " + std::to_string(code) + " out of range");
  return Element{static_cast<std::uint32_t>(code)};
}

Element Field::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  std::array<std::uint32_t, kMaxDegree> digits{};
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] >= pp_.p) fail(ErrorCode::InvalidElement, "coefficient out of range");
    if (i >= pp_.e) {
      if (coeffs[i] != 0) fail(ErrorCode::InvalidElement, "coefficient vector longer than e");
      continue;
    }
    digits[i] = coeffs[i];
  }
  return Element{compose(digits.data())};
}

std::vector<std::uint32_t> Field::coeffs(Element x) const {
  std::vector<std::uint32_t> out(pp_.e);
  decompose(x.code, out.data());
  return out;
}

Element Field::add_digits(Element a, Element b) const noexcept {
  const auto p = static_cast<std::uint32_t>(pp_.p);
  std::uint64_t code = 0;
  std::uint64_t scale = 1;
  std::uint32_t x = a.code, y = b.code;
  for (unsigned i = 0; i < pp_.e; ++i) {
    std::uint32_t d = (x % p + y % p) % p;
    code += d * scale;
    scale *= p;
    x /= p;
    y /= p;
  }
  return Element{static_cast<std::uint32_t>(code)};
}

Element Field::add(Element a, Element b) const {
  if (pp_.p == 2) return Element{a.code ^ b.code};
  if (a.code == 0) return b;
  if (b.code == 0) return a;
  if (!zech_.empty()) {
    const std::uint64_t n = group_order();
    const std::uint64_t la = log_[a.code], lb = log_[b.code];
    const std::uint32_t z = zech_[(lb + n - la) % n];
    if (z == kNoLog) return zero();
    return Element{antilog_[(la + z) % n]};
  }
  return add_digits(a, b);
}

Element Field::neg(Element a) const {
  if (pp_.p == 2 || a.code == 0) return a;
  std::array<std::uint32_t, kMaxDegree> digits{};
  decompose(a.code, digits.data());
  const auto p = static_cast<std::uint32_t>(pp_.p);
  for (unsigned i = 0; i < pp_.e; ++i) digits[i] = (p - digits[i]) % p;
  return Element{compose(digits.data())};
}

Element Field::sub(Element a, Element b) const { return add(a, neg(b)); }

Element Field::mul_poly(Element a, Element b) const {
  if (a.code == 0 || b.code == 0) return zero();
  const unsigned e = pp_.e;
  const std::uint64_t p = pp_.p;
  std::array<std::uint32_t, kMaxDegree> da{}, db{};
  decompose(a.code, da.data());
  decompose(b.code, db.data());
  std::array<std::uint64_t, 2 * kMaxDegree> prod{};
  for (unsigned i = 0; i < e; ++i) {
    if (da[i] == 0) continue;
    for (unsigned j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{da[i]} * db[j]) % p;
  }
  for (unsigned d = 2 * e - 1; d-- > e;) {
    const std::uint64_t c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (unsigned i = 0; i < e; ++i) prod[d - e + i] = (prod[d - e + i] + (p - c) * modulus_[i]) % p;
  }
  std::array<std::uint32_t, kMaxDegree> out{};
  for (unsigned i = 0; i < e; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
  return Element{compose(out.data())};
}

Element Field::pow_poly(Element x, std::uint64_t exponent) const {
  Element result = one();
  while (exponent > 0) {
    if (exponent & 1) result = mul_poly(result, x);
    x = mul_poly(x, x);
    exponent >>= 1;
  }
  return result;
}

Element Field::mul(Element a, Element b) const {
  if (a.code == 0 || b.code == 0) return zero();
  if (!antilog_.empty()) return Element{antilog_[(std::uint64_t{log_[a.code]} + log_[b.code]) % group_order()]};
  return mul_poly(a, b);
}

Element Field::inv(Element a) const {
  if (a.code == 0) fail(ErrorCode::ZeroElement, "zero has no inverse");
  const std::uint64_t n = group_order();
  if (!antilog_.empty()) return Element{antilog_[(n - log_[a.code]) % n]};
  return pow_poly(a, n - 1);
}

Element Field::div(Element a, Element b) const { return mul(a, inv(b)); }

Element Field::pow(Element x, std::uint64_t exponent) const {
  if (exponent == 0) return one();
  if (x.code == 0) return zero();
  const std::uint64_t n = group_order();
  if (!antilog_.empty()) return Element{antilog_[arith::mul_mod(log_[x.code], exponent % n, n)]};
  return pow_poly(x, exponent % n);
}

Element Field::exp(std::uint64_t t) const {
  const std::uint64_t n = group_order();
  if (!antilog_.empty()) return Element{antilog_[t % n]};
  return pow_poly(alpha_, t % n);
}

GaloisLevel Field::level(unsigned l) const {
  if (l >= pp_.e) {
    fail(ErrorCode::InvalidLevel,
         "Galois level " + std::to_string(l) + " outside [0, " + std::to_string(pp_.e - 1) + "]");
  }
  return GaloisLevel{l};
}

Element Field::frobenius_power(Element x, unsigned j) const {
  j %= pp_.e;
  if (j == 0 || x.code == 0) return x;
  const std::uint64_t n = group_order();
  if (!antilog_.empty()) return Element{antilog_[arith::mul_mod(log_[x.code], p_powers_[j] % n, n)]};
  return pow_poly(x, p_powers_[j]);
}

Element Field::frobenius(Element x, GaloisLevel l) const { return frobenius_power(x, level(l.value).value); }

bool Field::in_subfield(Element x, unsigned l) const {
  if (l == 0 || pp_.e % l != 0) {
    fail(ErrorCode::NotInSubfield,
         "F_{p^" + std::to_string(l) + "} is not a subfield of F_{p^" + std::to_string(pp_.e) + "}");
  }
  return frobenius_power(x, l) == x;
}

std::uint64_t Field::element_order(Element x) const {
  if (x.code == 0) fail(ErrorCode::ZeroElement, "zero has no multiplicative order");
  std::uint64_t t = group_order();
  for (auto r : order_primes_) {
    while (t % r == 0 && pow(x, t / r) == one()) t /= r;
  }
  return t;
}

Element Field::nth_root_of_unity(std::uint64_t n) const {
  if (n == 0 || group_order() % n != 0)
    fail(ErrorCode::NotADivisor, std::to_string(n) + " does not divide q-1 = " + std::to_string(group_order()));
  return exp(group_order() / n);
}

std::uint64_t Field::discrete_log(Element x) const {
  if (x.code == 0) fail(ErrorCode::ZeroElement, "discrete log of zero");
  if (!antilog_.empty()) return log_[x.code];
  return discrete_log_pohlig_hellman(x);
}

std::uint64_t Field::discrete_log_pohlig_hellman(Element x) const {
  const std::uint64_t n = group_order();
  std::uint64_t result = 0, modulus = 1;
  for (auto r : order_primes_) {
    std::uint64_t ra = 1;
    unsigned a = 0;
    while (n % (ra * r) == 0) {
      ra *= r;
      ++a;
    }
    const Element g = pow(alpha_, n / ra);
    const Element h = pow(x, n / ra);
    const Element gamma = pow(g, ra / r);  // order r

    // Baby-step giant-step inside <gamma>.
    const auto m = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(r))));
    std::unordered_map<std::uint32_t, std::uint64_t> baby;
    baby.reserve(m);
    Element cur = one();
    for (std::uint64_t j = 0; j < m; ++j) {
      baby.emplace(cur.code, j);
      cur = mul(cur, gamma);
    }
    const Element giant = inv(pow(gamma, m));
    auto log_gamma = [&](Element target) {
      Element y = target;
      for (std::uint64_t i = 0; i <= m; ++i) {
        auto it = baby.find(y.code);
        if (it != baby.end()) return (i * m + it->second) % r;
        y = mul(y, giant);
      }
      fail(ErrorCode::InvalidElement, "discrete log failed");
    };

    std::uint64_t xr = 0, rk = 1;
    const Element g_inv = inv(g);
    for (unsigned k = 0; k < a; ++k) {
      Element hk = pow(mul(pow(g_inv, xr), h), ra / (rk * r));
      xr += log_gamma(hk) * rk;
      rk *= r;
    }

    // CRT merge of result (mod modulus) with xr (mod ra).
    const std::uint64_t inv_m = *arith::inverse_mod(modulus % ra, ra);
    const std::uint64_t diff = (xr + ra - result % ra) % ra;
    const std::uint64_t t = arith::mul_mod(diff, inv_m, ra);
    result += modulus * t;
    modulus *= ra;
    result %= modulus;
  }
  return result;
}

std::optional<Element> Field::power_preimage(Element u, std::uint64_t exponent) const {
  if (u.code == 0) fail(ErrorCode::ZeroElement, "power preimage of zero");
  const std::uint64_t n = group_order();
  auto s = arith::solve_linear_congruence(exponent % n, discrete_log(u), n);
  if (!s) return std::nullopt;
  return exp(*s);
}

Element Field::galois_norm_preimage(Element u, GaloisLevel l) const {
  level(l.value);
  if (l.value == 0 || pp_.e % l.value != 0)
    fail(ErrorCode::NotInSubfield, "F_{p^l} must be a subfield with l >= 1");
  if (u.code == 0 || !in_subfield(u, l.value))
    fail(ErrorCode::NotInSubfield, "u is not a nonzero element of F_{p^" + std::to_string(l.value) + "}");
  auto v = power_preimage(u, p_powers_[l.value] + 1);
  if (!v) {
    fail(ErrorCode::NoPreimage,
         "no v with v^(p^" + std::to_string(l.value) + "+1) = u (log u = " + std::to_string(discrete_log(u)) + ")");
  }
  return *v;
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "F_" << pp_.q << " = F_" << pp_.p << "^" << pp_.e << ", modulus [";
  for (std::size_t i = 0; i < modulus_.size(); ++i) os << (i ? "," : "") << modulus_[i];
  os << "], alpha [";
  auto ac = coeffs(alpha_);
  for (std::size_t i = 0; i < ac.size(); ++i) os << (i ? "," : "") << ac[i];
  os << "], " << (has_log_tables() ? "log tables" : "polynomial arithmetic");
  return os.str();
}

}  // namespace hullforge
