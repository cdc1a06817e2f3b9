#include "hullforge/eaqecc.hpp"

#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "hullforge/parallel.hpp"

namespace hullforge {

std::string EaqeccParams::to_string() const {
  std::ostringstream out;
  out << "[[" << n << "," << k << "," << d << ";" << c << "]]_" << q;
  return out.str();
}

SingletonVerdict singleton_verdict(const EaqeccParams& p) {
  if (p.n == 0 || p.c > p.n - 1) {
    fail(ErrorCode::BoundViolated, p.to_string() + ": c must lie in [0, n-1]");
  }
  const auto n = static_cast<std::int64_t>(p.n), k = static_cast<std::int64_t>(p.k);
  const auto d = static_cast<std::int64_t>(p.d), c = static_cast<std::int64_t>(p.c);
  const std::int64_t slack = n + c - k - 2 * (d - 1);
  if (slack < 0) fail(ErrorCode::BoundViolated, p.to_string() + ": n + c - k < 2(d-1)");
  return {slack, slack == 0};
}

EaqeccParams eaqecc_from_hull(std::size_t n, std::size_t k, std::size_t d, std::size_t hull, std::uint64_t q) {
  if (hull > k || k + hull > n) {
    fail(ErrorCode::BoundViolated, "hull dimension " + std::to_string(hull) + " exceeds min(k, n-k)");
  }
  EaqeccParams p;
  p.n = n;
  p.k = k - hull;
  p.d = d;
  p.c = n - k - hull;
  p.q = q;
  p.hull_dim = hull;
  p.mds = singleton_verdict(p).mds;
  return p;
}

EaqeccParams derive_eaqecc(const LinearCode& code, GaloisLevel l, std::size_t d) {
  const HullReport hull = hull_compute(code, l);
  return eaqecc_from_hull(code.length(), code.dimension(), d, hull.dim(), code.field().q());
}

EaqeccParams closed_form_tuple(Family family, std::size_t n, std::size_t k, std::size_t h, std::uint64_t q) {
  const std::size_t len = n + extra_length(family);
  EaqeccParams p;
  p.n = len;
  p.k = k - h;
  p.d = len - k + 1;
  p.c = len - k - h;
  p.q = q;
  p.hull_dim = h;
  p.mds = true;
  p.source = std::string(to_string(family));
  return p;
}

FamilyEmission theorem_family_emit(const FieldPtr& F, const FamilyRequest& req) {
  Construction built = construct(F, req);
  const std::size_t len = built.spec.length();
  // GRS and extended GRS codes are MDS, so d = len - k + 1.
  EaqeccParams measured = eaqecc_from_hull(len, req.k, len - req.k + 1, built.hull.dim(), F->q());
  measured.source = std::string(to_string(req.family));
  measured.request = req;
  const EaqeccParams expected = closed_form_tuple(req.family, built.n, req.k, req.h, F->q());
  if (!measured.same_tuple(expected) || !measured.mds) {
    fail(ErrorCode::TheoremMismatch,
         std::string(to_string(req.family)) + ": derived " + measured.to_string() + ", closed form " + expected.to_string());
  }
  return {std::move(built), std::move(measured)};
}

DualSide dual_side_eaqecc(const LinearCode& code, GaloisLevel l) {
  const LinearCode dual = galois_dual(code, l);
  const std::size_t primal = hull_compute(code, l).dim();
  DualSide out;
  out.params = derive_eaqecc(dual, l, code.dimension() + 1);
  out.params.source = "dual";
  out.hull_primal = primal;
  out.hull_dual = out.params.hull_dim;
  return out;
}

std::string hull_pairs_csv_header() { return "p,e,l,n,k,hullPrimal,hullDual\n"; }

std::string hull_pairs_csv(const std::vector<HullPair>& rows) {
  std::ostringstream out;
  out << hull_pairs_csv_header();
  for (const auto& r : rows) {
    out << r.p << ',' << r.e << ',' << r.l << ',' << r.n << ',' << r.k << ',' << r.hull_primal << ',' << r.hull_dual
        << '\n';
  }
  return out.str();
}

namespace {

struct SweepTask {
  FieldPtr field;
  unsigned l = 0;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t h = 0;
  std::uint64_t seed = 0;
};

GrsSpec random_spec(const FieldPtr& F, std::size_t n, std::size_t k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> any(0, F->q() - 1);
  std::uniform_int_distribution<std::uint64_t> nonzero(1, F->q() - 1);
  GrsSpec spec{F, {}, {}, k, false};
  std::set<std::uint64_t> used;
  while (spec.a.size() < n) {
    const std::uint64_t c = any(rng);
    if (used.insert(c).second) spec.a.push_back(F->from_code(c));
  }
  for (std::size_t i = 0; i < n; ++i) spec.v.push_back(F->from_code(nonzero(rng)));
  return spec;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

}  // namespace

std::vector<HullPair> sweep_hull_pairs(const SweepConfig& cfg) {
  std::vector<SweepTask> tasks;
  for (const auto& [p, e] : cfg.fields) {
    const FieldPtr F = Field::create(p, e);
    const unsigned l_hi = std::min(cfg.l_max, e - 1);
    for (unsigned l = cfg.l_min; l <= l_hi; ++l) {
      const std::uint64_t pl = F->p_power(l);
      const std::size_t n_hi = static_cast<std::size_t>(std::min<std::uint64_t>(cfg.n_max, F->q()));
      for (std::size_t n = std::max<std::size_t>(cfg.n_min, 2); n <= n_hi; ++n) {
        if (cfg.source == SweepSource::T1a && F->group_order() % n != 0) continue;
        std::size_t k_hi = std::min(cfg.k_max, n - 1);
        if (cfg.source == SweepSource::T1a) k_hi = std::min<std::size_t>(k_hi, (pl + n - 1) / (pl + 1));
        for (std::size_t k = std::max<std::size_t>(cfg.k_min, 1); k <= k_hi; ++k) {
          if (cfg.source == SweepSource::T1a) {
            for (std::size_t h = 0; h <= k; ++h) tasks.push_back({F, l, n, k, h, 0});
          } else {
            for (std::size_t s = 0; s < cfg.samples; ++s)
              tasks.push_back({F, l, n, k, 0, mix_seed(cfg.seed, tasks.size())});
          }
        }
      }
    }
  }

  std::vector<std::optional<HullPair>> results(tasks.size());
  parallel_for(
      tasks.size(),
      [&](std::size_t i) {
        const SweepTask& t = tasks[i];
        std::optional<LinearCode> code;
        if (cfg.source == SweepSource::T1a) {
          FamilyRequest req{Family::T1a, t.field->p(), t.field->e(), t.l, t.n, t.k, t.h};
          try {
            code.emplace(grs_generator(construct(t.field, req).spec));
          } catch (const Error& err) {
            // Requests the recipe cannot realize (h = k without a multiplier) are skipped.
            if (err.code() == ErrorCode::NoPreimage || err.code() == ErrorCode::NoScalingElement) return;
            throw;
          }
        } else {
          code.emplace(grs_generator(random_spec(t.field, t.n, t.k, t.seed)));
        }
        const GaloisLevel l{t.l};
        const std::size_t primal = hull_compute(*code, l).dim();
        const std::size_t dual = hull_compute(galois_dual(*code, l), l).dim();
        results[i] = HullPair{t.field->p(), t.field->e(), t.l, t.n, t.k, primal, dual};
      },
      cfg.threads);

  std::vector<HullPair> out;
  for (auto& r : results)
    if (r) out.push_back(*r);
  return out;
}

}  // namespace hullforge
