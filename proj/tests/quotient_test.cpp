#include <gtest/gtest.h>

#include <cmath>

#include "oddcrit/params.hpp"
#include "oddcrit/quotient.hpp"
#include "support/oracles.hpp"

namespace oddcrit {
namespace {

std::vector<OddFactorParams> grid() {
  std::vector<OddFactorParams> out;
  for (long long b : {1, 3, 5})
    for (long long k : {1, 2, 3})
      for (long long n = 1; n <= 40; ++n) {
        OddFactorParams p{b, k, n};
        if ((n - k) % 2 == 0 && p.meets_order_bound() && p.extremal_clique() >= 1) out.push_back(p);
      }
  return out;
}

Cubic as_cubic(const std::array<long long, 4>& c) { return Cubic{{c[0], c[1], c[2], c[3]}}; }

/// Last sign change of the cubic scanning down from a wide bracket, then bisection.
double largest_root_by_scan(const Cubic& c) {
  long double hi = 1e4, step = 0.5;
  while (c(hi - step) > 0) hi -= step;
  long double lo = hi - step;
  for (int i = 0; i < 300; ++i) {
    long double mid = (lo + hi) / 2;
    (c(mid) > 0 ? hi : lo) = mid;
  }
  return static_cast<double>(lo);
}

TEST(Quotient, ExtremalGraphCanonicalPartition) {
  const OddFactorParams p{1, 1, 15};
  const auto spec = extremal_spec(p);
  const auto q = quotient_matrix(distance_matrix(build_family(spec)), three_block_partition(spec));
  EXPECT_TRUE(q.equitable);
  const IntMatrix3 expected{{{1, 11, 2}, {2, 10, 4}, {2, 22, 2}}};
  EXPECT_EQ(q.exact3(), expected);
  EXPECT_EQ(extremal_quotient(p), expected);
  EXPECT_DOUBLE_EQ(q(2, 1), 22.0);
}

TEST(Quotient, PathPartitionIsNotEquitable) {
  const Graph p3 = from_edge_list("3 2\n0 1\n1 2\n");
  const auto q = quotient_matrix(distance_matrix(p3), VertexPartition(3, {VertexSet({0}), VertexSet({1, 2})}));
  EXPECT_FALSE(q.equitable);
  EXPECT_DOUBLE_EQ(q(1, 0), 1.5);
  EXPECT_THROW(q.exact(0, 0), ValidationError);
}

TEST(Quotient, SingleBlock) {
  const auto q = quotient_matrix(distance_matrix(complete(6)), VertexPartition::from_sizes(6, {6}));
  EXPECT_TRUE(q.equitable);
  EXPECT_DOUBLE_EQ(q(0, 0), 5.0);
  EXPECT_NEAR(quotient_largest_eigenvalue(q), 5.0, 1e-10);

  const Graph p3 = from_edge_list("3 2\n0 1\n1 2\n");
  const auto qp = quotient_matrix(distance_matrix(p3), VertexPartition::from_sizes(3, {3}));
  EXPECT_FALSE(qp.equitable);
  EXPECT_DOUBLE_EQ(qp(0, 0), 8.0 / 3.0);
}

TEST(Quotient, MalformedPartitions) {
  EXPECT_THROW(VertexPartition(3, {VertexSet({0, 1})}), ValidationError);
  EXPECT_THROW(VertexPartition(3, {VertexSet({0, 1}), VertexSet({1, 2})}), ValidationError);
  EXPECT_THROW(VertexPartition(3, {VertexSet({0, 1, 2}), VertexSet{}}), ValidationError);
  EXPECT_THROW(VertexPartition(3, {VertexSet({0, 1, 3})}), ValidationError);
  EXPECT_THROW(quotient_matrix(distance_matrix(complete(4)), VertexPartition::from_sizes(3, {3})), ValidationError);
}

TEST(ClosedForms, ExtremalPolynomialAt1_1_15) {
  const OddFactorParams p{1, 1, 15};
  EXPECT_EQ(char_poly_Bstar(p), (Cubic{{1, -13, -82, -24}}));
  EXPECT_EQ(as_cubic(testing::char_poly_by_interpolation(IntMatrix3{{{1, 11, 2}, {2, 10, 4}, {2, 22, 2}}})),
            char_poly_Bstar(p));
}

TEST(ClosedForms, SplitJoinPolynomialAt1_1_15_3) {
  const OddFactorParams p{1, 1, 15};
  const Cubic fb = char_poly_B(p, 3);
  EXPECT_EQ(fb.c[1], -14);
  const auto spec = split_join_spec(p, 3);
  const auto q = quotient_matrix(distance_matrix(build_family(spec)), three_block_partition(spec));
  ASSERT_TRUE(q.equitable);
  EXPECT_EQ(q.exact3(), split_join_quotient(p, 3));
  EXPECT_EQ(as_cubic(testing::char_poly_by_interpolation(q.exact3())), fb);
}

TEST(ClosedForms, SplitJoinAtMinimumSIsTheExtremalPolynomial) {
  for (const auto& p : grid()) EXPECT_EQ(char_poly_B(p, p.k + 1), char_poly_Bstar(p));
}

TEST(ClosedForms, CoefficientsAreTraceMinorsAndDeterminant) {
  for (const auto& p : grid()) {
    const Cubic fstar = char_poly_Bstar(p);
    const IntMatrix3 bs = extremal_quotient(p);
    EXPECT_EQ(-fstar.c[1], bs[0][0] + bs[1][1] + bs[2][2]);
    EXPECT_EQ(fstar.c[1], -(p.n + p.b - 3));
    EXPECT_EQ(characteristic_polynomial(bs), fstar);
    std::array<std::array<long long, 3>, 3> m{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m[i][j] = bs[i][j];
    EXPECT_EQ(fstar.c[3], -testing::det3(m));

    for (long long s = p.k + 1; s <= p.max_split_size(); ++s) {
      const IntMatrix3 b = split_join_quotient(p, s);
      EXPECT_EQ(as_cubic(testing::char_poly_by_interpolation(b)), char_poly_B(p, s));
    }
  }
}

TEST(ClosedForms, DifferenceFactorsThroughG) {
  for (const auto& p : grid())
    for (long long s = p.k + 1; s <= p.max_split_size(); ++s) {
      const Quadratic g = g_poly(p, s);
      EXPECT_EQ(g.a[0], -p.b);
      EXPECT_EQ(char_poly_B(p, s) - char_poly_Bstar(p), scaled(s - p.k - 1, g)) << p.b << ' ' << p.k << ' ' << p.n << ' ' << s;
    }
}

TEST(ClosedForms, GAt1_1_15_3) {
  const Quadratic g = g_poly({1, 1, 15}, 3);
  const auto [num, den] = g.symmetry_axis();
  EXPECT_EQ(g.a[1], -6);
  EXPECT_EQ(num % den, 0);
  EXPECT_EQ(num / den, -3);
  EXPECT_LT(g.exact(17), 0);
}

TEST(ClosedForms, ParameterValidation) {
  EXPECT_THROW(char_poly_B({1, 1, 15}, 1), ValidationError);   // s < k+1
  EXPECT_THROW(char_poly_B({1, 1, 15}, 8), ValidationError);   // n < (b+1)s - bk + 2
  EXPECT_THROW(char_poly_Bstar({1, 1, 4}), ValidationError);   // empty clique part
  EXPECT_THROW(g_poly({2, 1, 15}, 3), ValidationError);        // b even
  EXPECT_THROW(char_poly_Bstar({1, 1, 2'000'001}), ValidationError);
}

TEST(LargestRoot, Examples) {
  EXPECT_NEAR(largest_root(Cubic{{1, 0, -1, 0}}), 1.0, 1e-10);
  EXPECT_NEAR(largest_root(Cubic{{1, -13, -82, -24}}), 17.7074, 1e-4);
  const double theta = largest_root(char_poly_Bstar({1, 1, 15}));
  EXPECT_NEAR(theta, spectral_radius(distance_matrix(extremal_graph({1, 1, 15}))).value, 1e-8);
  EXPECT_NEAR(theta, spectral_radius_dense(distance_matrix(extremal_graph({1, 1, 15}))).value, 1e-6);
  EXPECT_THROW(largest_root(Cubic{{2, 0, 0, 0}}), ValidationError);
}

TEST(LargestRoot, SingleRealRootAndRepeatedRoots) {
  EXPECT_NEAR(largest_root(Cubic{{1, 0, 1, 1}}), -0.6823278038280193, 1e-10);  // x^3 + x + 1
  EXPECT_NEAR(largest_root(Cubic{{1, -3, 3, -1}}), 1.0, 1e-5);                  // (x - 1)^3
  EXPECT_NEAR(largest_root(Cubic{{1, 0, -3, 2}}), 1.0, 1e-9);                   // (x - 1)^2 (x + 2)
  EXPECT_NEAR(largest_root(Cubic{{1, -3, 0, 4}}), 2.0, 1e-7);                   // (x - 2)^2 (x + 1)
  EXPECT_NEAR(largest_root(Cubic{{1, 6, 9, 0}}), 0.0, 1e-10);                   // x (x + 3)^2
}

TEST(LargestRoot, IndependentOfBracketing) {
  for (const auto& p : grid()) {
    const Cubic c = char_poly_Bstar(p);
    EXPECT_NEAR(largest_root(c), largest_root_by_scan(c), 1e-10);
  }
}

TEST(QuotientEigenvalue, Examples) {
  QuotientMatrix q;
  q.rank = 3;
  q.entries = {1, 11, 2, 2, 10, 4, 2, 22, 2};
  EXPECT_NEAR(quotient_largest_eigenvalue(q), largest_root(Cubic{{1, -13, -82, -24}}), 1e-9);
  QuotientMatrix one;
  one.rank = 1;
  one.entries = {4.5};
  EXPECT_NEAR(quotient_largest_eigenvalue(one), 4.5, 1e-12);
  q.entries[0] = -1;
  EXPECT_THROW(quotient_largest_eigenvalue(q), ValidationError);
}

TEST(QuotientEigenvalue, FamiliesShareTheLargestEigenvalue) {
  for (const auto& p : grid()) {
    if (p.n > 30) continue;
    for (long long s = p.k + 1; s <= std::min(p.max_split_size(), p.k + 3); ++s) {
      const auto spec = split_join_spec(p, s);
      const auto d = distance_matrix(build_family(spec));
      const auto q = quotient_matrix(d, three_block_partition(spec));
      ASSERT_TRUE(q.equitable);
      const double dense = spectral_radius_dense(d).value;
      EXPECT_NEAR(quotient_largest_eigenvalue(q), dense, 1e-7);
      EXPECT_NEAR(quotient_largest_eigenvalue(q), largest_root(char_poly_B(p, s)), 1e-9);
    }
  }
}

}  // namespace
}  // namespace oddcrit
