#include <gtest/gtest.h>

#include "hullforge/eaqecc.hpp"
#include "support.hpp"

using namespace hullforge;

namespace {

ErrorCode error_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::TooLarge;
}

EaqeccParams tuple(std::size_t n, std::size_t k, std::size_t d, std::size_t c, std::uint64_t q) {
  EaqeccParams p;
  p.n = n;
  p.k = k;
  p.d = d;
  p.c = c;
  p.q = q;
  return p;
}

}  // namespace

TEST(DeriveEaqecc, TableRows) {
  const auto t1 = construct(FamilyRequest{Family::T1a, 2, 6, 2, 63, 10, 1});
  const auto p1 = derive_eaqecc(grs_generator(t1.spec), GaloisLevel{2}, 54);
  EXPECT_EQ(p1.to_string(), "[[63,9,54;52]]_64");
  EXPECT_TRUE(p1.mds);

  const auto t3 = construct(FamilyRequest{Family::T3n, 3, 4, 1, std::nullopt, 20, 6, 160, 3, 1});
  const auto p3 = derive_eaqecc(grs_generator(t3.spec), GaloisLevel{1}, 61);
  EXPECT_TRUE(p3.same_tuple(tuple(80, 14, 61, 54, 81)));
}

TEST(DeriveEaqecc, DualContainingGivesStabilizerCode) {
  EXPECT_EQ(eaqecc_from_hull(10, 6, 5, 4, 16).c, 0u);
  // F_16, Hermitian level: a self-orthogonal [3,1] code; its dual contains it.
  const auto c = construct(FamilyRequest{Family::T1a, 2, 4, 2, 3, 1, 1});
  const auto dual = galois_dual(grs_generator(c.spec), GaloisLevel{2});
  const auto p = derive_eaqecc(dual, GaloisLevel{2}, 2);
  EXPECT_EQ(p.c, 0u);
  EXPECT_TRUE(p.same_tuple(tuple(3, 1, 2, 0, 16)));
}

TEST(Singleton, Verdicts) {
  EXPECT_EQ(singleton_verdict(tuple(63, 9, 54, 52, 64)).slack, 0);
  EXPECT_TRUE(singleton_verdict(tuple(63, 9, 54, 52, 64)).mds);
  EXPECT_TRUE(singleton_verdict(tuple(25, 8, 17, 15, 390625)).mds);
  const auto d1 = singleton_verdict(tuple(9, 4, 1, 0, 9));
  EXPECT_EQ(d1.slack, 5);
  EXPECT_FALSE(d1.mds);
  EXPECT_EQ(error_of([] { singleton_verdict(tuple(5, 3, 3, 0, 9)); }), ErrorCode::BoundViolated);
  EXPECT_EQ(error_of([] { singleton_verdict(tuple(5, 0, 1, 5, 9)); }), ErrorCode::BoundViolated);
}

TEST(FamilyEmit, ClosedForms) {
  auto F = Field::create(5, 8);
  const auto t2 = theorem_family_emit(F, FamilyRequest{Family::T2, 5, 8, 2, 25, 12, 12});
  EXPECT_EQ(t2.params.to_string(), "[[25,0,14;1]]_390625");

  auto F81 = Field::create(3, 4);
  const auto t3 = theorem_family_emit(F81, FamilyRequest{Family::T3n2, 3, 4, 1, std::nullopt, 20, 19, 160, 3, 1});
  EXPECT_TRUE(t3.params.same_tuple(tuple(82, 1, 63, 43, 81)));

  // h = k on a length-(n+1) family: [[n+1, 0, n-k+2; n+1-2k]].
  const std::size_t n = 40, k = 9;
  const auto t4 = theorem_family_emit(F81, FamilyRequest{Family::T4n1, 3, 4, 1, std::nullopt, k, k, 0, 0, 1, 40});
  EXPECT_TRUE(t4.params.same_tuple(tuple(n + 1, 0, n - k + 2, n + 1 - 2 * k, 81)));
  EXPECT_TRUE(t4.params.same_tuple(closed_form_tuple(Family::T4n1, n, k, k, 81)));
}

TEST(DualSide, SymmetricLevelsAgree) {
  std::mt19937_64 rng(14);
  for (auto [p, e] : {std::pair<std::uint64_t, unsigned>{3, 2}, {2, 4}, {3, 4}}) {
    auto F = Field::create(p, e);
    for (unsigned l : {0u, e / 2})
      for (int t = 0; t < 15; ++t) {
        const auto code = grs_generator(testing_support::random_grs(F, 8, 1 + t % 6, t % 2 == 0, rng));
        const auto side = dual_side_eaqecc(code, F->level(l));
        EXPECT_EQ(side.hull_primal, side.hull_dual);
        EXPECT_EQ(side.params.d, code.dimension() + 1);
      }
  }
}

TEST(DualSide, T1aLevelOneLogged) {
  auto F = Field::create(3, 4);
  for (std::size_t h = 0; h <= 2; ++h) {
    const auto c = construct(F, FamilyRequest{Family::T1a, 3, 4, 1, 16, 3, h});
    const auto side = dual_side_eaqecc(grs_generator(c.spec), GaloisLevel{1});
    EXPECT_EQ(side.hull_primal, h);
    EXPECT_LE(side.hull_dual, 13u);
    EXPECT_EQ(side.params.n, 16u);
  }
}

TEST(Sweep, EmptyRangeHasHeaderOnly) {
  SweepConfig cfg;
  cfg.fields = {{3, 2}};
  cfg.n_min = 5;
  cfg.n_max = 4;
  EXPECT_TRUE(sweep_hull_pairs(cfg).empty());
  EXPECT_EQ(hull_pairs_csv({}), "p,e,l,n,k,hullPrimal,hullDual\n");
}

TEST(Sweep, EuclideanRowsSymmetricAndDeterministic) {
  SweepConfig cfg;
  cfg.fields = {{3, 2}, {2, 3}, {5, 2}};
  cfg.l_min = 0;
  cfg.l_max = 0;
  cfg.n_min = 3;
  cfg.n_max = 7;
  cfg.k_min = 1;
  cfg.k_max = 4;
  cfg.samples = 3;
  cfg.seed = 2024;
  cfg.threads = 1;
  const auto one = sweep_hull_pairs(cfg);
  ASSERT_FALSE(one.empty());
  for (const auto& r : one) EXPECT_EQ(r.hull_primal, r.hull_dual);
  cfg.threads = 4;
  EXPECT_EQ(hull_pairs_csv(sweep_hull_pairs(cfg)), hull_pairs_csv(one));
}

TEST(Sweep, T1aRowsOverF81) {
  SweepConfig cfg;
  cfg.fields = {{3, 4}};
  cfg.l_min = cfg.l_max = 1;
  cfg.n_min = cfg.n_max = 16;
  cfg.k_min = 1;
  cfg.k_max = 4;
  cfg.source = SweepSource::T1a;
  const auto rows = sweep_hull_pairs(cfg);
  ASSERT_FALSE(rows.empty());
  for (const auto& r : rows) {
    EXPECT_EQ(r.n, 16u);
    EXPECT_LE(r.hull_primal, r.k);
  }
}
