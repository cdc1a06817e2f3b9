// Acceptance suite: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "grid.hpp"
#include "hullforge/eaqecc.hpp"
#include "hullforge/parallel.hpp"
#include "hullforge/tables.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace hullforge;
using testing_support::codes;
using testing_support::mirror;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Criterion 1 output is reused by 2 and 8.
std::vector<TableReport> g_tables;

const std::vector<grid::Level> kGridLevels = {
    {2, 6, 2}, {2, 6, 3}, {2, 6, 0}, {2, 4, 1}, {2, 4, 2}, {2, 3, 1}, {3, 2, 1}, {3, 4, 1}, {3, 4, 2},
    {3, 4, 0}, {5, 2, 1}, {5, 2, 0}, {7, 2, 1}, {3, 3, 1}, {5, 4, 2}};

Outcome criterion_tables() {
  const auto t0 = Clock::now();
  std::size_t rows = 0, ok = 0;
  std::ostringstream bad;
  for (int which = 1; which <= 4; ++which) {
    g_tables.push_back(reproduce_table(which));
    for (const auto& r : g_tables.back().rows) {
      ++rows;
      if (r.match) {
        ++ok;
      } else {
        bad << " T" << which << "(k=" << r.expected.k << ",h=" << r.expected.h << ",n=" << r.expected.n << ")";
      }
    }
  }
  const double secs = seconds_since(t0);
  std::ostringstream os;
  os << ok << "/" << rows << " rows across tables 1-4 (" << g_tables[0].rows.size() << ", "
     << g_tables[1].rows.size() << ", " << g_tables[2].rows.size() << ", " << g_tables[3].rows.size() << "), "
     << secs << " s" << bad.str();
  return {ok == rows && rows > 0 && secs < 120.0, os.str()};
}

Outcome criterion_two_methods() {
  std::size_t codes_checked = 0, disagreements = 0;
  for (const auto& t : g_tables)
    for (const auto& r : t.rows) {
      ++codes_checked;
      disagreements += r.hull_stacked != r.hull_rank;
    }
  std::mt19937_64 rng(20240611);
  const std::pair<std::uint64_t, unsigned> fields[] = {{2, 3}, {3, 2}, {5, 2}, {3, 3}, {2, 6}, {3, 4}};
  for (auto [p, e] : fields) {
    auto F = Field::create(p, e);
    for (unsigned l = 0; l < e; ++l)
      for (int t = 0; t < 24; ++t) {
        const std::size_t n = 2 + rng() % std::min<std::uint64_t>(F->q() - 1, 20);
        const std::size_t k = 1 + rng() % (n - 1);
        const bool extended = t % 3 == 0;
        const auto code = grs_generator(testing_support::random_grs(F, n, k, extended, rng));
        const auto dual = galois_dual(code, F->level(l));
        const std::size_t stacked = intersection_dim(code.generator(), dual.generator());
        const std::size_t by_rank = (code.length() - k) - rank_h_hdagger(code, F->level(l));
        ++codes_checked;
        disagreements += stacked != by_rank;
      }
  }
  std::ostringstream os;
  os << codes_checked << " codes, " << disagreements << " disagreements";
  return {codes_checked >= 500 && disagreements == 0, os.str()};
}

std::vector<FamilyRequest> g_grid;

Outcome criterion_theorem_postconditions() {
  grid::Options opt;
  opt.max_points = 90;
  g_grid = grid::requests(kGridLevels, opt);
  std::map<Family, std::size_t> per_family;
  std::size_t measured_ok = 0, wrong = 0, no_preimage = 0;
  std::ostringstream bad;
  std::vector<int> status(g_grid.size(), 0);
  std::vector<std::string> why(g_grid.size());
  parallel_for(g_grid.size(), [&](std::size_t i) {
    try {
      const auto c = construct(g_grid[i]);
      status[i] = c.hull.dim() == g_grid[i].h && c.hull.dim_rank == g_grid[i].h ? 1 : 2;
    } catch (const Error& e) {
      status[i] = e.code() == ErrorCode::NoPreimage ? 3 : 2;
      why[i] = e.what();
    }
  });
  for (std::size_t i = 0; i < g_grid.size(); ++i) {
    if (status[i] == 1) {
      ++measured_ok;
      ++per_family[g_grid[i].family];
    } else if (status[i] == 3) {
      ++no_preimage;
    } else {
      ++wrong;
      if (wrong <= 5) bad << " [" << to_string(g_grid[i].family) << " q=" << g_grid[i].p << "^" << g_grid[i].e
                          << " k=" << g_grid[i].k << " h=" << g_grid[i].h << " " << why[i] << "]";
    }
  }
  std::ostringstream os;
  os << measured_ok << " requests with measured hull = h, " << wrong << " exceptions; per family:";
  bool all_variants = true;
  for (Family f : kAllFamilies) {
    os << " " << to_string(f) << "=" << per_family[f];
    all_variants &= per_family[f] > 0;
  }
  os << "; " << no_preimage << " T1 h=k requests have no multiplier preimage" << bad.str();
  return {measured_ok >= 300 && wrong == 0 && all_variants, os.str()};
}

Outcome criterion_u_formulas() {
  std::size_t sets = 0, points = 0, failures = 0;
  auto check_set = [&](const Field& F, unsigned l, const std::vector<Element>& a, const std::vector<Element>& closed,
                       bool subfield) {
    const auto O = mirror(F);
    const auto direct = compute_u(F, a);
    const auto ac = codes(a);
    ++sets;
    for (std::size_t i = 0; i < a.size(); ++i) {
      ++points;
      bool ok = direct[i] == closed[i] && direct[i].code == oracle::u_product(O, ac, i);
      if (subfield) {
        const auto ratio = O.mul(O.inv(ac[i]), direct[i].code);
        ok = ok && ratio != 0 && O.frob(ratio, l) == ratio;
      }
      failures += !ok;
    }
  };
  // Roots-of-unity sets.
  for (auto [p, e] : {std::pair<std::uint64_t, unsigned>{2, 6}, {3, 4}, {5, 2}, {3, 2}, {2, 4}}) {
    auto F = Field::create(p, e);
    for (std::uint64_t n : grid::divisors(F->group_order())) {
      const Element rho = F->nth_root_of_unity(n);
      std::vector<Element> a;
      Element x = F->one();
      for (std::uint64_t i = 0; i < n; ++i, x = F->mul(x, rho)) a.push_back(x);
      check_set(*F, 0, a, u_closed_form_roots(*F, n), false);
    }
  }
  // Subgroup-product and coset sets, with the appended-zero weight.
  for (auto [p, e, l] : {std::tuple<std::uint64_t, unsigned, unsigned>{3, 2, 1}, {5, 2, 1}, {7, 2, 1}, {3, 4, 1}, {3, 4, 2}}) {
    auto F = Field::create(p, e);
    const std::uint64_t N = F->group_order();
    for (std::uint64_t x1 = 1; x1 <= N; ++x1)
      for (std::uint64_t x2 = 1; x2 <= N; ++x2) {
        if (!lemma7_predicate(*F, l, x1, x2).second) continue;
        for (std::uint64_t r = 1; r <= std::min<std::uint64_t>(N / std::gcd(x1, N), 2); ++r) {
          const auto set = build_pointset_eq6(*F, l, x1, x2, r);
          check_set(*F, l, set.points, set.u_closed, true);
          std::vector<Element> with_zero = set.points;
          with_zero.push_back(F->zero());
          const auto O = mirror(*F);
          const auto w_last = oracle::u_product(O, codes(with_zero), with_zero.size() - 1);
          failures += w_last != w_last_closed_form_eq6(*F, std::get<Eq6Provenance>(set.provenance)).code;
        }
      }
    for (std::uint64_t m : grid::divisors(N))
      for (std::uint64_t r = 1; r <= F->p_power(l) - 1; ++r) {
        try {
          const auto set = build_pointset_coset(*F, l, m, r);
          check_set(*F, l, set.points, set.u_closed, true);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::PredicateFailed) throw;
        }
      }
  }
  std::ostringstream os;
  os << sets << " point sets, " << points << " points, " << failures << " mismatches";
  return {failures == 0 && sets > 0, os.str()};
}

Outcome criterion_lemma4() {
  const std::tuple<std::uint64_t, unsigned, unsigned> cases[] = {{3, 2, 1}, {3, 4, 1}, {3, 4, 2}, {5, 2, 1},
                                                                 {3, 3, 1}, {5, 4, 1}, {3, 6, 1}, {3, 6, 3}};
  bool pass = true;
  std::ostringstream os;
  for (auto [p, e, l] : cases) {
    auto F = Field::create(p, e);
    const auto O = mirror(*F);
    std::size_t total = 0, solved = 0;
    bool consistent = true;
    for (std::uint64_t a = 1; a < F->q(); ++a) {
      const Element u = F->from_code(a);
      if (!F->in_subfield(u, l)) continue;
      ++total;
      try {
        const Element v = F->galois_norm_preimage(u, F->level(l));
        consistent &= O.pow_fast(v.code, F->p_power(l) + 1) == a;
        ++solved;
      } catch (const Error& ex) {
        consistent &= ex.code() == ErrorCode::NoPreimage && !oracle::has_norm_preimage(O, a, l);
      }
    }
    const bool expect_all = e % (2 * l) == 0;
    const bool ok = consistent && (expect_all ? solved == total : solved < total);
    pass &= ok;
    os << " (" << p << "," << e << "," << l << "):" << solved << "/" << total << (ok ? "" : "!");
  }
  return {pass, "preimages found per grid point" + os.str()};
}

Outcome criterion_lemma57() {
  std::size_t pairs = 0, disagree = 0;
  for (auto [p, e] : {std::pair<std::uint64_t, unsigned>{3, 2}, {5, 2}, {3, 3}}) {
    auto F = Field::create(p, e);
    const std::uint64_t N = F->group_order();
    for (std::uint64_t x1 = 1; x1 <= 2 * N; ++x1)
      for (std::uint64_t x2 = 1; x2 <= 2 * N; ++x2) {
        ++pairs;
        disagree += !lemma5_predicate(*F, x1, x2).agree();
        for (unsigned l = 1; l < e; ++l)
          if (e % l == 0) disagree += !lemma7_predicate(*F, l, x1, x2).agree();
      }
  }
  std::ostringstream os;
  os << pairs << " (x1, x2) pairs over q in {9, 25, 27}, " << disagree << " disagreements";
  return {disagree == 0, os.str()};
}

Outcome criterion_mds_shadows() {
  const std::vector<grid::Level> levels = {{2, 3, 1}, {2, 4, 1}, {2, 4, 2}, {3, 2, 1}, {5, 2, 1},
                                           {7, 2, 1}, {3, 4, 1}, {3, 4, 2}, {2, 6, 2}, {3, 3, 1}};
  grid::Options opt;
  opt.max_points = 12;
  opt.max_k = 5;
  opt.max_q = 81;
  opt.sets_per_length = 2;
  const auto reqs = grid::requests(levels, opt);
  std::map<Family, std::size_t> per_family;
  std::size_t minors = 0, brute = 0, failures = 0, skipped = 0;
  std::ostringstream bad;
  for (const auto& req : reqs) {
    const auto F = Field::create(req.p, req.e);
    std::pair<GrsSpec, ConstructionProvenance> built;
    try {
      built = construct_spec(F, req);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NoPreimage) throw;
      ++skipped;
      continue;
    }
    const auto code = grs_generator(built.first);
    const std::size_t len = code.length(), k = code.dimension();
    if (len > 14) continue;
    ++per_family[req.family];
    const bool m = mds_check_minors(code);
    ++minors;
    failures += !m;
    std::uint64_t qk = 1;
    for (std::size_t i = 0; i < k; ++i) qk *= F->q();
    if (qk <= (std::uint64_t{1} << 20)) {
      ++brute;
      const std::size_t d = min_distance_bruteforce(code);
      // Length n gives n-k+1; the extended code (one extra coordinate) n-k+2.
      const std::size_t expect = built.first.points() - k + 1 + (built.first.extended ? 1 : 0);
      if (d != expect || d != len - k + 1) {
        ++failures;
        bad << " [" << to_string(req.family) << " k=" << k << " d=" << d << "]";
      }
    }
  }
  std::ostringstream os;
  os << minors << " shadow codes (n <= 12, k <= 5, q <= 81) minor-checked, " << brute << " brute-forced, " << failures
     << " failures; per family:";
  bool all = true;
  for (Family f : kAllFamilies) {
    os << " " << to_string(f) << "=" << per_family[f];
    all &= per_family[f] > 0;
  }
  os << bad.str();
  return {failures == 0 && all, os.str()};
}

Outcome criterion_singleton() {
  std::size_t tuples = 0, bad = 0;
  auto audit = [&](const EaqeccParams& p) {
    ++tuples;
    try {
      const auto v = singleton_verdict(p);
      bad += v.slack != 0 || p.c > p.n - 1;
    } catch (const Error&) {
      ++bad;
    }
  };
  for (const auto& t : g_tables)
    for (const auto& r : t.rows)
      if (r.measured) audit(*r.measured);
  std::vector<std::optional<EaqeccParams>> emitted(g_grid.size());
  parallel_for(g_grid.size(), [&](std::size_t i) {
    try {
      emitted[i] = theorem_family_emit(Field::create(g_grid[i].p, g_grid[i].e), g_grid[i]).params;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NoPreimage) throw;
    }
  });
  for (const auto& p : emitted)
    if (p) audit(*p);
  std::ostringstream os;
  os << tuples << " emitted tuples, " << bad << " with nonzero slack or c outside [0, n-1]";
  return {bad == 0 && tuples > 300, os.str()};
}

Outcome criterion_dual_symmetry() {
  SweepConfig cfg;
  cfg.fields = {{2, 2}, {3, 2}, {2, 4}, {5, 2}, {3, 3}, {2, 6}, {3, 4}};
  cfg.l_min = 0;
  cfg.l_max = 5;
  cfg.n_min = 2;
  cfg.n_max = 10;
  cfg.k_min = 1;
  cfg.k_max = 9;
  cfg.samples = 2;
  cfg.seed = 99;
  auto rows = sweep_hull_pairs(cfg);
  SweepConfig t1 = cfg;
  t1.fields = {{3, 4}};
  t1.l_min = t1.l_max = 1;
  t1.n_min = 2;
  t1.n_max = 80;
  t1.k_max = 20;
  t1.source = SweepSource::T1a;
  const auto t1_rows = sweep_hull_pairs(t1);
  rows.insert(rows.end(), t1_rows.begin(), t1_rows.end());
  std::size_t asserted = 0, violations = 0, logged = 0, logged_differ = 0;
  for (const auto& r : rows) {
    if (r.l == 0 || 2 * r.l == r.e) {
      ++asserted;
      violations += r.hull_primal != r.hull_dual;
    } else {
      ++logged;
      logged_differ += r.hull_primal != r.hull_dual;
    }
  }
  std::ostringstream os;
  os << asserted << " rows at l in {0, e/2}, " << violations << " asymmetric; " << logged
     << " other-level rows logged (" << logged_differ << " with primal != dual)";
  return {violations == 0 && asserted > 0, os.str()};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"table reproduction", criterion_tables},
      {"two hull methods agree", criterion_two_methods},
      {"theorem postconditions", criterion_theorem_postconditions},
      {"u-formula agreement", criterion_u_formulas},
      {"norm preimage iff 2l | e", criterion_lemma4},
      {"paired predicate agreement", criterion_lemma57},
      {"MDS shadow checks", criterion_mds_shadows},
      {"Singleton audit", criterion_singleton},
      {"dual-side symmetry", criterion_dual_symmetry},
  };
  int failed = 0, index = 0;
  for (const auto& [name, fn] : criteria) {
    ++index;
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& ex) {
      o = {false, std::string("exception: ") + ex.what()};
    }
    std::printf("%s %d %s: %s [%.2f s]\n", o.pass ? "PASS" : "FAIL", index, name, o.detail.c_str(), seconds_since(t0));
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
