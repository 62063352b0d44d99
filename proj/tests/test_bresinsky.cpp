#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "curvelab/bresinsky.hpp"
#include "curvelab/error.hpp"
#include "fixtures.hpp"

using namespace curvelab;
using fixtures::bino;
using fixtures::key;
using fixtures::mono;

namespace {

const MonomialOrder kStd = MonomialOrder::standard();

// Direct eight-fold search over parameters with row sums at most `cap`.
std::vector<BresinskyData> naive_search(const DegreeVector& a, std::int64_t cap) {
  std::vector<BresinskyData> out;
  for (std::int64_t d21 = 1; d21 < cap; ++d21)
    for (std::int64_t d41 = 1; d21 + d41 <= cap; ++d41)
      for (std::int64_t d32 = 1; d32 < cap; ++d32)
        for (std::int64_t d42 = 1; d32 + d42 <= cap; ++d42)
          for (std::int64_t d13 = 1; d13 < cap; ++d13)
            for (std::int64_t d23 = 1; d13 + d23 <= cap; ++d23)
              for (std::int64_t d14 = 1; d14 < cap; ++d14)
                for (std::int64_t d34 = 1; d14 + d34 <= cap; ++d34) {
                  auto d = BresinskyData::create({d21, d41, d32, d42, d13, d23, d14, d34});
                  if (a_from_d(d) == a) out.push_back(d);
                }
  return out;
}

std::int64_t brute_w(const BresinskyData& d, std::int64_t m) {
  for (std::int64_t l = 1;; ++l)
    if (d.d1() + m - l * d.d21() <= 0 || d.d3() - l * d.d23() <= 0) return l;
}

}  // namespace

TEST(BresinskyData, RejectsNonPositive) {
  EXPECT_THROW(BresinskyData::create({0, 3, 3, 1, 2, 3, 1, 1}), Error);
  EXPECT_THROW(BresinskyData::create({2, 3, 3, 1, 2, 3, 1, -1}), Error);
}

TEST(BresinskyData, RowSums) {
  const auto d = fixtures::basic();
  EXPECT_EQ(d.d1(), 5);
  EXPECT_EQ(d.d2(), 4);
  EXPECT_EQ(d.d3(), 5);
  EXPECT_EQ(d.d4(), 2);
}

TEST(AFromD, Fixtures) {
  EXPECT_EQ(a_from_d(fixtures::basic()), (DegreeVector{19, 29, 26, 43}));
  EXPECT_EQ(a_from_d(fixtures::large()), (DegreeVector{1191, 1239, 582, 2303}));
  EXPECT_EQ(a_from_d(fixtures::non_cm(2)), (DegreeVector{8, 5, 7, 9}));
  EXPECT_EQ(a_from_d(fixtures::non_cm(3)), (DegreeVector{19, 7, 9, 20}));
  EXPECT_EQ(a_from_d(fixtures::example11(4)), (DegreeVector{36, 34, 25, 58}));
}

TEST(AFromD, ClosedFormsInA) {
  for (std::int64_t a = 2; a < 12; ++a) {
    EXPECT_EQ(a_from_d(fixtures::non_cm(a)), (DegreeVector{2 * a * a + a - 2, 2 * a + 1, 2 * a + 3, 2 * a * a + a - 1}));
    EXPECT_EQ(a_from_d(fixtures::example11(a)), (DegreeVector{a * a + 5 * a, 7 * a + 6, 6 * a + 1, 3 * a * a + 3 * a - 2}));
  }
}

TEST(AFromD, Overflow) {
  const std::int64_t big = std::int64_t{1} << 40;
  auto d = BresinskyData::create({big, big, big, big, big, big, big, big});
  try {
    a_from_d(d);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Overflow);
  }
}

TEST(DFromA, Fixtures) {
  auto basic = d_from_a({19, 29, 26, 43});
  ASSERT_EQ(basic.size(), 1u);
  EXPECT_EQ(basic[0], fixtures::basic());
  auto large = d_from_a({1191, 1239, 582, 2303});
  ASSERT_EQ(large.size(), 1u);
  EXPECT_EQ(large[0], fixtures::large());
  auto noncm = d_from_a({8, 5, 7, 9});
  ASSERT_EQ(noncm.size(), 1u);
  EXPECT_EQ(noncm[0], fixtures::non_cm(2));
}

TEST(DFromA, NoSolutionForOneTwoThreeFour) {
  EXPECT_TRUE(d_from_a({1, 2, 3, 4}).empty());
  EXPECT_TRUE(naive_search({1, 2, 3, 4}, 8).empty());
}

TEST(DFromA, AgreesWithNaiveSearch) {
  const std::vector<DegreeVector> inputs{{8, 5, 7, 9}, {19, 29, 26, 43}, {19, 7, 9, 20}, {1, 2, 3, 4}, {2, 3, 4, 5},
                                         {5, 6, 7, 11}, {13, 10, 9, 21}};
  RecoveryOptions opts;
  opts.d_cap = 7;
  for (const auto& a : inputs) {
    std::vector<BresinskyData> fast;
    try {
      fast = d_from_a(a, opts);
    } catch (const Error& e) {
      ASSERT_EQ(e.kind(), ErrorKind::SearchBound) << to_string(a);
      continue;
    }
    auto slow = naive_search(a, 7);
    auto by_array = [](const BresinskyData& x, const BresinskyData& y) { return x.as_array() < y.as_array(); };
    std::sort(fast.begin(), fast.end(), by_array);
    std::sort(slow.begin(), slow.end(), by_array);
    EXPECT_EQ(fast, slow) << to_string(a);
  }
}

TEST(DFromA, Preconditions) {
  try {
    d_from_a({1, 1, 1, 1});
    FAIL();
  } catch (const Refusal& r) {
    EXPECT_EQ(r.reason(), "max-coordinate fails");
  }
  try {
    d_from_a({2, 4, 6, 8});
    FAIL();
  } catch (const Refusal& r) {
    EXPECT_EQ(r.reason(), "gcd>1");
  }
}

TEST(DFromA, RoundTripOnRandomData) {
  std::mt19937_64 rng(41);
  int tested = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto d = fixtures::random_data(rng, 12);
    const auto a = a_from_d(d);
    if (!last_is_strict_max(a)) continue;
    const auto found = d_from_a(a);
    ASSERT_EQ(found.size(), 1u) << d.to_string();
    EXPECT_EQ(found[0], d);
    ++tested;
  }
  EXPECT_GT(tested, 50);
}

TEST(DFromAAnyOrder, BasicFamilyAtEight) {
  const auto d = fixtures::basic();
  const auto member = ShiftFamily::from_data(d).member(8);
  EXPECT_EQ(member.degrees, (DegreeVector{107, 133, 106, 131}));
  const auto hits = d_from_a_any_order(member.degrees);
  ASSERT_EQ(hits.size(), 1u);
  EXPECT_EQ(hits[0].perm, (Permutation{2, 0, 3, 1}));
  EXPECT_EQ(permuted(member.degrees, hits[0].perm), (DegreeVector{106, 107, 131, 133}));
  EXPECT_EQ(hits[0].data, BresinskyData::create({2, 3, 11, 2, 1, 9, 3, 1}));
  // x1^5 - x3 x4^3, x2^13 - x1^2 x3^9, x3^10 - x2^11 x4, x1^3 x2^2 - x4^4, x2^2 x3 - x1^2 x4.
  const auto g = generators(hits[0].data, 0);
  EXPECT_EQ(key(g[0]), key(bino(mono(5, 0, 0, 0), mono(0, 0, 1, 3))));
  EXPECT_EQ(key(g[1]), key(bino(mono(0, 13, 0, 0), mono(2, 0, 9, 0))));
  EXPECT_EQ(key(g[2]), key(bino(mono(0, 0, 10, 0), mono(0, 11, 0, 1))));
  EXPECT_EQ(key(g[3]), key(bino(mono(3, 2, 0, 0), mono(0, 0, 0, 4))));
  EXPECT_EQ(key(g[4]), key(bino(mono(0, 2, 1, 0), mono(2, 0, 0, 1))));
}

TEST(DFromAAnyOrder, IdentityComesFirstInRoleOrder) {
  const auto hits = d_from_a_any_order({19, 29, 26, 43});
  ASSERT_FALSE(hits.empty());
  EXPECT_EQ(hits[0].perm, (Permutation{0, 1, 2, 3}));
  EXPECT_EQ(hits[0].data, fixtures::basic());
}

TEST(DFromAAnyOrder, AllEqualIsEmpty) {
  EXPECT_TRUE(d_from_a_any_order({1, 1, 1, 1}).empty());
  EXPECT_TRUE(d_from_a_any_order({5, 5, 5, 5}).empty());
}

TEST(ShiftVector, Fixtures) {
  EXPECT_EQ(shift_vector(fixtures::basic()), (DegreeVector{11, 13, 10, 11}));
  EXPECT_EQ(shift_vector(fixtures::large()), (DegreeVector{149, 141, 42, 149}));
  EXPECT_EQ(shift_vector(fixtures::example11(4)), (DegreeVector{20, 14, 9, 20}));
  for (std::int64_t a = 2; a < 15; ++a)
    EXPECT_EQ(shift_vector(fixtures::non_cm(a)), (DegreeVector{a * a + a - 1, a + 1, a + 2, a * a + a - 1}));
}

TEST(ShiftVector, FirstEqualsLastOnRandomData) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 300; ++i) {
    const auto v = shift_vector(fixtures::random_data(rng, 15));
    EXPECT_EQ(v[0], v[3]);
  }
}

TEST(ShiftFamily, MembersAndShiftedIdentity) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 100; ++i) {
    const auto d = fixtures::random_data(rng, 10);
    const auto fam = ShiftFamily::from_data(d);
    for (std::int64_t m = 0; m < 6; ++m) {
      const auto mem = fam.member(m);
      DegreeVector expected;
      for (int k = 0; k < 4; ++k) expected[static_cast<std::size_t>(k)] = fam.base()[k] + m * fam.shift()[k];
      EXPECT_EQ(mem.degrees, expected);
      EXPECT_EQ(a_from_d(d.shifted(m)), expected);
      EXPECT_EQ(mem.gcd_ok, gcd_of(expected) == 1);
      EXPECT_EQ(mem.max_ok, last_is_strict_max(expected));
    }
  }
}

TEST(ShiftFamily, BasicFamilyMaximumMovesAfterSeven) {
  const auto fam = ShiftFamily::from_data(fixtures::basic());
  for (std::int64_t m = 0; m <= 6; ++m) EXPECT_TRUE(fam.member(m).max_ok) << m;
  const auto seven = fam.member(7);
  EXPECT_EQ(seven.degrees, (DegreeVector{96, 120, 96, 120}));
  EXPECT_FALSE(seven.max_ok);
  EXPECT_FALSE(seven.gcd_ok);
  for (std::int64_t m = 8; m <= 20; ++m) EXPECT_FALSE(fam.member(m).max_ok) << m;
}

TEST(ShiftFamily, RefusesNonCoprimeBase) {
  // Every row doubled keeps the shape but scales a by 8.
  auto d = BresinskyData::create({2, 2, 2, 2, 2, 2, 2, 2});
  EXPECT_THROW(ShiftFamily::from_data(d), Refusal);
}

TEST(Generators, BasicAtZero) {
  const auto g = generators(fixtures::basic(), 0);
  EXPECT_EQ(key(g[0]), key(bino(mono(5, 0, 0, 0), mono(0, 0, 2, 1))));
  EXPECT_EQ(key(g[1]), key(bino(mono(0, 4, 0, 0), mono(2, 0, 3, 0))));
  EXPECT_EQ(key(g[2]), key(bino(mono(0, 0, 5, 0), mono(0, 3, 0, 1))));
  EXPECT_EQ(key(g[3]), key(bino(mono(3, 1, 0, 0), mono(0, 0, 0, 2))));
  EXPECT_EQ(key(g[4]), key(bino(mono(0, 1, 2, 0), mono(2, 0, 0, 1))));
}

TEST(Generators, ShiftTouchesOnlyF1AndF4) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 50; ++i) {
    const auto d = fixtures::random_data(rng, 9);
    const auto g0 = generators(d, 0);
    const auto g1 = generators(d, 1);
    EXPECT_EQ(g0[1], g1[1]);
    EXPECT_EQ(g0[2], g1[2]);
    EXPECT_EQ(g0[4], g1[4]);
    EXPECT_EQ(key(g1[0]), key(bino(mono(d.d1() + 1, 0, 0, 0), mono(0, 0, d.d13(), d.d14() + 1))));
    EXPECT_EQ(key(g1[3]), key(bino(mono(d.d41() + 1, d.d42(), 0, 0), mono(0, 0, 0, d.d4() + 1))));
  }
}

TEST(Generators, NonCmAtThree) {
  const auto d = fixtures::non_cm(2);
  const auto g = generators(d, 3);
  EXPECT_EQ(key(g[0]), key(bino(mono(5, 0, 0, 0), mono(0, 0, 1, 4))));
  EXPECT_EQ(key(g[3]), key(bino(mono(4, 2, 0, 0), mono(0, 0, 0, 5))));
  const auto a = ShiftFamily::from_data(d).member(3).degrees;
  EXPECT_EQ(a, (DegreeVector{23, 14, 19, 24}));
  for (const auto& f : g) EXPECT_TRUE(toric_membership(f, a)) << f.to_string();
}

TEST(Generators, MembershipOnRandomData) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 100; ++i) {
    const auto d = fixtures::random_data(rng, 10);
    for (std::int64_t m = 0; m < 5; ++m) {
      const auto a = ShiftFamily::from_data(d).member(m).degrees;
      for (const auto& f : generators(d, m)) EXPECT_TRUE(toric_membership(f, a));
    }
  }
}

TEST(ComputeW, Fixtures) {
  EXPECT_EQ(compute_w(fixtures::large(), 0), 2);
  EXPECT_EQ(compute_w(fixtures::large(), 5), 3);
  EXPECT_EQ(compute_w(fixtures::basic(), 0), 2);
}

TEST(ComputeW, MatchesBruteForce) {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 200; ++i) {
    const auto d = fixtures::random_data(rng, 10);
    for (std::int64_t m = 0; m < 8; ++m) {
      const auto w = brute_w(d, m);
      if (w >= 2) {
        EXPECT_EQ(compute_w(d, m), w);
      } else {
        EXPECT_THROW(compute_w(d, m), Error);
      }
    }
  }
}

TEST(ExtraBinomials, LargeAtZero) {
  const auto e = extra_binomials(fixtures::large(), 0);
  EXPECT_EQ(e.w, 2);
  EXPECT_EQ(e.branch, -2);
  EXPECT_TRUE(e.p.empty());
  EXPECT_TRUE(e.q.empty());
  EXPECT_EQ(key(e.r), key(bino(mono(0, 21, 0, 0), mono(2, 0, 5, 9))));
  EXPECT_TRUE(toric_membership(e.r, {1191, 1239, 582, 2303}));
}

TEST(ExtraBinomials, LargeAtTwelve) {
  const auto d = fixtures::large();
  const auto e = extra_binomials(d, 12);
  EXPECT_EQ(e.w, 3);
  EXPECT_EQ(e.branch, 1);
  ASSERT_EQ(e.p.size(), 1u);
  ASSERT_EQ(e.q.size(), 1u);
  EXPECT_EQ(key(e.p[0]), key(bino(mono(0, 21, 4, 0), mono(18, 0, 0, 3))));
  EXPECT_EQ(key(e.q[0]), key(bino(mono(10, 21, 0, 0), mono(0, 0, 5, 21))));
  EXPECT_EQ(key(e.r), key(bino(mono(0, 32, 0, 0), mono(27, 0, 1, 3))));
  const auto a = ShiftFamily::from_data(d).member(12).degrees;
  EXPECT_TRUE(toric_membership(e.p[0], a));
  EXPECT_TRUE(toric_membership(e.q[0], a));
  EXPECT_TRUE(toric_membership(e.r, a));
}

TEST(ExtraBinomials, WTwoGivesOnlyR) {
  std::mt19937_64 rng(15);
  int seen = 0;
  for (int i = 0; i < 300; ++i) {
    const auto d = fixtures::random_data(rng, 10);
    if (d.d2() >= d.d21() + d.d23()) continue;
    for (std::int64_t m = 0; m < 6; ++m) {
      std::optional<ExtraBinomials> e;
      try {
        e = extra_binomials(d, m);
      } catch (const Error&) {
        continue;
      }
      EXPECT_EQ(e->p.size(), static_cast<std::size_t>(e->w - 2));
      EXPECT_EQ(e->q.size(), static_cast<std::size_t>(e->w - 2));
      const auto a = ShiftFamily::from_data(d).member(m).degrees;
      for (const auto& b : e->p) EXPECT_TRUE(toric_membership(b, a));
      for (const auto& b : e->q) EXPECT_TRUE(toric_membership(b, a));
      EXPECT_TRUE(toric_membership(e->r, a));
      if (e->w == 2) ++seen;
    }
  }
  EXPECT_GT(seen, 0);
}

TEST(ExtraBinomials, RefusedInCaseOne) {
  EXPECT_THROW(extra_binomials(fixtures::non_cm(2), 0), Error);
}

TEST(ToricMembership, Examples) {
  EXPECT_TRUE(toric_membership(bino(mono(0, 1, 2, 0), mono(2, 0, 0, 1)), {19, 29, 26, 43}));
  EXPECT_TRUE(toric_membership(bino(mono(1, 0, 0, 0), mono(0, 1, 0, 0)), {7, 7, 9, 11}));
  EXPECT_FALSE(toric_membership(bino(mono(1, 0, 0, 0), mono(0, 1, 0, 0)), {19, 29, 26, 43}));
}

TEST(Conditions, BasicFailsSixByOne) {
  const auto ev = evaluate_conditions(fixtures::basic(), 0);
  EXPECT_EQ(ev.case_id, 2);
  EXPECT_EQ(ev.w, 2);
  const auto* six = ev.find(6);
  ASSERT_NE(six, nullptr);
  EXPECT_EQ(six->value, -1);
  EXPECT_EQ(ev.find(7), nullptr);
  EXPECT_FALSE(ev.all_pass());
}

TEST(Conditions, LargeRegimes) {
  const auto d = fixtures::large();
  for (std::int64_t m = 0; m <= 30; ++m) {
    const auto ev = evaluate_conditions(d, m);
    EXPECT_EQ(ev.case_id, 2);
    EXPECT_TRUE(ev.all_pass()) << m;
    if (m <= 2) {
      EXPECT_EQ(ev.w, 2);
      ASSERT_NE(ev.find(7), nullptr);
      EXPECT_EQ(ev.find(7)->value, 5);
      EXPECT_EQ(ev.find(4)->value, 7);
    } else if (m <= 11) {
      EXPECT_EQ(ev.w, 3);
      ASSERT_NE(ev.find(7), nullptr);
      EXPECT_EQ(ev.find(7)->value, 2);
      EXPECT_EQ(ev.find(4)->value, 4);
    } else {
      EXPECT_EQ(ev.w, 3);
      ASSERT_NE(ev.find(6), nullptr);
      EXPECT_EQ(ev.find(6)->value, 1);
      EXPECT_EQ(ev.find(5)->value, 5);
    }
  }
}

TEST(ClosedFormBasis, NonCmCaseOneIsG) {
  const auto d = fixtures::non_cm(2);
  for (std::int64_t m = 0; m < 10; ++m) {
    const auto c = closed_form_basis(d, m);
    EXPECT_EQ(c.evaluation.case_id, 1);
    EXPECT_TRUE(c.basis.reduced());
    const auto g = generators(d, m);
    EXPECT_EQ(fixtures::key_set(c.basis.elements()), fixtures::key_set(g));
  }
}

TEST(ClosedFormBasis, LargeAtZeroIsGPlusR) {
  const auto c = closed_form_basis(fixtures::large(), 0);
  EXPECT_EQ(c.evaluation.case_id, 2);
  EXPECT_EQ(c.basis.size(), 6u);
  EXPECT_TRUE(c.basis.groebner_verified());
  EXPECT_FALSE(c.basis.reduced());
}

TEST(ClosedFormBasis, NonCmThreeRefusesOnConditionOne) {
  try {
    closed_form_basis(fixtures::non_cm(3), 0);
    FAIL();
  } catch (const Refusal& r) {
    EXPECT_EQ(r.reason(), "condition fails");
  }
  const auto ev = evaluate_conditions(fixtures::non_cm(3), 0);
  ASSERT_NE(ev.first_failure(), nullptr);
  EXPECT_EQ(ev.first_failure()->index, 1);
  EXPECT_EQ(ev.first_failure()->value, -1);
}

TEST(ClosedFormBasis, RefusesNonCoprimeMember) {
  try {
    closed_form_basis(fixtures::basic(), 7);
    FAIL();
  } catch (const Refusal& r) {
    EXPECT_EQ(r.reason(), "gcd>1");
  }
}
