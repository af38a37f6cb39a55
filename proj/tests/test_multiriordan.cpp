#include <gtest/gtest.h>

#include "mrd/matrix.hpp"
#include "mrd/multiriordan.hpp"
#include "support.hpp"

using namespace mrd;
using namespace mrd::testing;

namespace {

constexpr std::size_t N = 24;

::testing::AssertionResult same(const RationalMatrix& a, const RationalMatrix& b) {
  if (equal(a, b)) return ::testing::AssertionSuccess();
  const auto [r, c] = first_difference(a, b);
  if (r < 0) return ::testing::AssertionFailure() << "shapes differ";
  return ::testing::AssertionFailure() << "first difference at (" << r << "," << c << "): " << to_string(a(r, c))
                                       << " vs " << to_string(b(r, c));
}

void expect_same_spec(const RationalMultiRiordan& a, const RationalMultiRiordan& b) {
  ASSERT_EQ(a.ell(), b.ell());
  EXPECT_EQ(a.g(), b.g());
  for (std::size_t i = 0; i < a.ell(); ++i) EXPECT_EQ(a.f(i), b.f(i)) << "f_" << i + 1;
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::BudgetExceeded;
}

const std::vector<std::vector<long>> example_rows = {
    {1, 0, 0, 0, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0, 0, 0, 0},
    {1, 0, 0, 1, 0, 0, 0, 0, 0}, {0, 2, 0, 0, 1, 0, 0, 0, 0}, {0, 0, 3, 0, 0, 1, 0, 0, 0},
    {1, 0, 0, 2, 0, 0, 1, 0, 0}, {0, 3, 0, 0, 3, 0, 0, 1, 0}, {0, 0, 5, 0, 0, 4, 0, 0, 1}};

const std::vector<std::vector<long>> example_production = {
    {1, 0, 0, 1, 0, 0, 0, 0, 0},  {0, 2, 0, 0, 1, 0, 0, 0, 0},  {0, 0, 3, 0, 0, 1, 0, 0, 0},
    {0, 0, 0, 1, 0, 0, 1, 0, 0},  {0, -1, 0, 0, 1, 0, 0, 1, 0}, {0, 0, -4, 0, 0, 1, 0, 0, 1},
    {0, 0, 0, 0, 0, 0, 1, 0, 0},  {0, 1, 0, 0, 0, 0, 0, 1, 0},  {0, 0, 8, 0, 0, 0, 0, 0, 1}};

}  // namespace

TEST(MultiSpec, Validation) {
  const auto t = E("t", 6);
  EXPECT_EQ(kind_of([&] { RationalMultiRiordan::proper(E("1", 6), {t}); }), ErrorKind::InvalidSpec);
  EXPECT_EQ(kind_of([&] { RationalMultiRiordan::proper(E("1+t", 6), {t, t}); }), ErrorKind::GradingViolation);
  EXPECT_EQ(kind_of([&] { RationalMultiRiordan::proper(E("1", 6), {t, E("t+t^2", 6)}); }),
            ErrorKind::GradingViolation);
  EXPECT_EQ(kind_of([&] { RationalMultiRiordan::proper(E("t^2", 6), {t, t}); }), ErrorKind::InvalidSpec);
  EXPECT_EQ(kind_of([&] { RationalMultiRiordan::proper(E("1", 6), {t, E("t^3", 6)}); }), ErrorKind::InvalidSpec);
  EXPECT_EQ(kind_of([&] { RationalMultiRiordan::type(E("1", 6), {E("1", 6), E("t^2", 6)}); }),
            ErrorKind::InvalidSpec);
  const auto ok = example_multi(12);
  EXPECT_EQ(ok.ell(), 3u);
  EXPECT_EQ(ok.graded_f(1).residue(), 1u);
}

TEST(MultiBuild, RunningExample) {
  EXPECT_TRUE(same(mbuild(example_multi(12), 9, 9), from_rows(example_rows)));
}

TEST(MultiBuild, TypeExample) {
  const RationalMatrix d = mbuild(example_multi_type(24), 10, 9);
  const std::vector<std::vector<long>> nonzero = {{1, 1, 1, 1, 1, 1, 1, 1, 1},
                                                  {1, 2, 3, 2, 3, 4, 3, 4, 5},
                                                  {1, 3, 5, 3, 6, 9, 6, 10, 14},
                                                  {1, 4, 7, 4, 10, 16, 10, 20, 30}};
  for (Eigen::Index r = 0; r < 10; ++r)
    for (Eigen::Index c = 0; c < 9; ++c) {
      const long expected = r % 3 == 0 ? nonzero[r / 3][c] : 0;
      EXPECT_EQ(d(r, c), Rational(expected)) << r << "," << c;
    }
}

TEST(MultiBuild, ColumnsFollowTheGrading) {
  Random rng(31);
  for (std::size_t ell = 2; ell <= 4; ++ell) {
    const RationalMatrix d = mbuild(rng.multi(ell, 16), 16, 16);
    for (Eigen::Index r = 0; r < d.rows(); ++r)
      for (Eigen::Index c = 0; c < d.cols(); ++c)
        if ((r - c) % static_cast<Eigen::Index>(ell) != 0) EXPECT_EQ(d(r, c), Rational(0));
  }
}

TEST(MultiGroup, IdentityIsNeutral) {
  const auto a = example_multi(N);
  const auto id = multi_identity<Rational>(3, N);
  expect_same_spec(mmul(a, id), a);
  expect_same_spec(mmul(id, a), a);
  EXPECT_TRUE(same(mbuild(id, 6, 6), identity<Rational>(6)));
}

TEST(MultiGroup, AxiomsOnRandomSpecs) {
  Random rng(32);
  for (std::size_t ell = 2; ell <= 4; ++ell) {
    const auto id = multi_identity<Rational>(ell, N);
    for (int i = 0; i < 6; ++i) {
      const auto a = rng.multi(ell, N), b = rng.multi(ell, N), c = rng.multi(ell, N);
      expect_same_spec(mmul(mmul(a, b), c), mmul(a, mmul(b, c)));
      expect_same_spec(mmul(a, minv(a)), id);
      expect_same_spec(mmul(minv(a), a), id);
      const std::size_t n = 12;
      EXPECT_TRUE(same(mbuild(mmul(a, b), n, n), RationalMatrix(mbuild(a, n, n) * mbuild(b, n, n))));
    }
  }
}

TEST(MultiGroup, Mismatches) {
  Random rng(33);
  const auto a = rng.multi(2, 10), b = rng.multi(3, 10);
  EXPECT_EQ(kind_of([&] { (void)mmul(a, b); }), ErrorKind::EllMismatch);
  EXPECT_EQ(kind_of([&] { (void)mmul(a, example_multi_type(10)); }), ErrorKind::EllMismatch);
  EXPECT_EQ(kind_of([&] { (void)mmul(example_multi(10), example_multi_type(10)); }), ErrorKind::KindMismatch);
  EXPECT_EQ(kind_of([&] { (void)minv(example_multi_type(10)); }), ErrorKind::KindMismatch);
}

TEST(MultiGroup, PivotRootNeedsPerfectPowerLead) {
  const auto a = RationalMultiRiordan::proper(E("1", 8), {E("2*t", 8), E("t", 8)});
  EXPECT_EQ(kind_of([&] { (void)pivot_root(a); }), ErrorKind::LeadingCoefficientNotPerfectPower);
  const auto b = RationalMultiRiordan::proper(E("1", 8), {E("2*t", 8), E("2*t", 8)});
  EXPECT_EQ(pivot_root(b), E("2*t", 8));
}

TEST(FundamentalTheorem, MatchesMatrixVectorProduct) {
  Random rng(34);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t ell = 2 + trial % 3;
    const std::size_t n = 14;
    const auto a = rng.multi(ell, N);
    const RationalMatrix d = mbuild(a, n, n);
    for (std::size_t j = 0; j < ell; ++j) {
      const RationalSeries v = rng.series(n - 1, ell, j);
      RationalMatrix col = zeros<Rational>(static_cast<Eigen::Index>(n), 1);
      for (std::size_t k = 0; k < n; ++k) col(static_cast<Eigen::Index>(k), 0) = v[k];
      const RationalMatrix image = d * col;
      const RationalSeries s = ft_apply(a, GradedSeries<Rational>(v, ell, j));
      for (std::size_t r = 0; r < n; ++r) EXPECT_EQ(s[r], image(static_cast<Eigen::Index>(r), 0)) << r;
    }
  }
}

TEST(FundamentalTheorem, Errors) {
  const auto a = example_multi(10);
  EXPECT_EQ(kind_of([&] { (void)ft_apply(a, GradedSeries<Rational>(E("t", 10), 2, 1)); }), ErrorKind::EllMismatch);
  EXPECT_EQ(kind_of([&] { (void)ft_apply(example_multi_type(10), GradedSeries<Rational>(E("1", 10), 3, 0)); }),
            ErrorKind::KindMismatch);
}

TEST(SumGfs, RowBivariateAndDiagonal) {
  const auto three = sum_gfs(example_multi(N), 12);
  EXPECT_TRUE(three.row_sums_ok);
  EXPECT_TRUE(three.bivariate_ok);
  EXPECT_FALSE(three.diag_gf_ok.has_value());
  const auto two = sum_gfs(double_example(N), 12);
  EXPECT_TRUE(two.row_sums_ok);
  EXPECT_TRUE(two.bivariate_ok);
  ASSERT_TRUE(two.diag_gf_ok.has_value());
  EXPECT_TRUE(*two.diag_gf_ok);
  Random rng(35);
  for (int i = 0; i < 5; ++i) {
    const auto r = sum_gfs(rng.multi(2, N), 10);
    EXPECT_TRUE(r.row_sums_ok && r.bivariate_ok && r.diag_gf_ok.value_or(false));
  }
}

TEST(Subgroups, Membership) {
  const auto id = subgroup_membership(multi_identity<Rational>(3, 10));
  EXPECT_TRUE(id.appell);
  EXPECT_TRUE(id.lagrange);
  const auto ex = subgroup_membership(example_multi(10));
  EXPECT_FALSE(ex.appell);
  EXPECT_FALSE(ex.lagrange);
  EXPECT_TRUE(ex.bell[0]);
  EXPECT_FALSE(ex.bell[1]);
  const auto lag = subgroup_membership(RationalMultiRiordan::proper(E("1", 10), {E("t/(1-t^2)", 10), E("t", 10)}));
  EXPECT_TRUE(lag.lagrange);
  EXPECT_FALSE(lag.appell);
}

TEST(SeqChar, RunningExample) {
  const SeqChar<Rational> s = mseq(example_multi(40));
  EXPECT_EQ(s.ell, 3u);
  EXPECT_EQ(strided_longs(s.a, 3, 8), (std::vector<long>{1, 1, 0, 0, 0, 0, 0, 0}));
  EXPECT_EQ(strided_longs(s.z[0], 3, 8), (std::vector<long>{1, 0, 0, 0, 0, 0, 0, 0}));
  EXPECT_EQ(strided_longs(s.z[1], 3, 8), (std::vector<long>{2, -1, 1, -1, 1, -1, 1, -1}));
  EXPECT_EQ(strided_longs(s.z[2], 3, 8), (std::vector<long>{3, -4, 8, -16, 32, -64, 128, -256}));
  for (const auto& z : s.z) EXPECT_TRUE(has_grading(z, 3, 0));
}

TEST(ProductionMatrix, RunningExample) {
  const auto a = example_multi(40);
  const RationalMatrix p = production_matrix(a, 9);
  EXPECT_TRUE(same(p, from_rows(example_production)));
  EXPECT_TRUE(same(p, production_matrix_by_solve(a, 9)));
}

// D · P reproduces D with its first ell rows removed (a shift by ell rows, not by one).
TEST(ProductionMatrix, ShiftsByEllRows) {
  const auto a = example_multi(40);
  const RationalMatrix d = mbuild(a, 12, 9);
  const RationalMatrix p = production_matrix(a, 9);
  EXPECT_TRUE(same(RationalMatrix(d.topRows(9) * p), up_shift(d, 3, 9)));
  EXPECT_FALSE(equal(RationalMatrix(d.topRows(9) * p), up_shift(d, 1, 9)));
}

TEST(ProductionMatrix, OracleOnRandomSpecs) {
  Random rng(36);
  for (std::size_t ell = 2; ell <= 4; ++ell)
    for (int i = 0; i < 4; ++i) {
      const auto a = rng.multi(ell, 40);
      EXPECT_TRUE(same(production_matrix(a, 12), production_matrix_by_solve(a, 12)));
    }
}

// Row i of D times P is row i + ell, so the first ell rows and P determine the array.
TEST(ProductionMatrix, RebuildsTheArrayFromItsFirstRows) {
  const auto a = double_example(40);
  const Eigen::Index n = 12, l = 2;
  const RationalMatrix d = mbuild(a, n, n);
  const RationalMatrix p = production_matrix(a, n);
  RationalMatrix r = zeros<Rational>(n, n);
  r.topRows(l) = d.topRows(l);
  for (Eigen::Index i = 0; i + l < n; ++i) r.row(i + l) = r.row(i) * p;
  EXPECT_TRUE(same(r, d));
}

TEST(Decompose, ReconstructsTheArray) {
  Random rng(37);
  for (std::size_t ell = 2; ell <= 4; ++ell) {
    const auto a = rng.multi(ell, N);
    const auto parts = decompose(a);
    ASSERT_EQ(parts.size(), ell);
    for (std::size_t m = 0; m < ell; ++m) EXPECT_EQ(parts[m].offset, m);
    EXPECT_TRUE(same(reconstruct(parts, 16, 16), mbuild(a, 16, 16)));
  }
  EXPECT_TRUE(same(reconstruct(decompose(example_multi(N)), 9, 9), from_rows(example_rows)));
}

TEST(TypeArrays, RecurrencesHoldOnTheTypeExample) {
  const auto report = mtype_recurrence_check(example_multi_type(60), 9);
  EXPECT_TRUE(report.holds());
  EXPECT_GT(report.checked, 0u);
  const auto seq = mseq(example_multi_type(60));
  EXPECT_EQ(seq.z.size(), 3u);
}

TEST(TypeArrays, AssociationShiftsMultipliers) {
  const auto t = example_multi_type(12);
  const auto p = massociate(t);
  EXPECT_EQ(p.kind(), ArrayKind::proper);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(p.f(i), shift_up(t.f(i), 1));
}
