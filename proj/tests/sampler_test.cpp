#include "ssbm/graph.hpp"
#include "ssbm/sampler.hpp"
#include "support/random_graphs.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <set>

namespace ssbm {
namespace {

// Moments of a single entry taking -1 w.p. p·s, +1 w.p. p·(1-s), 0 otherwise.
struct EntryMoments {
  double mean;
  double variance;
  double fourth_central;
};

EntryMoments entry_moments(double p, double s) {
  const double mean = p * (1.0 - 2.0 * s);
  const double pm = p * s;
  const double pp = p * (1.0 - s);
  const double p0 = 1.0 - p;
  auto central = [&](int power) {
    return pm * std::pow(-1.0 - mean, power) + pp * std::pow(1.0 - mean, power) + p0 * std::pow(-mean, power);
  };
  return {mean, central(2), central(4)};
}

TEST(Sample, ZeroProbabilityGivesEmptyGraph) {
  const auto g = testing::erdos_renyi(10, 0.0, 0.3, {1, 2});
  EXPECT_EQ(g.node_count(), 10);
  EXPECT_EQ(g.edge_count(), 0u);
}

TEST(Sample, CertainNegativeEdges) {
  const auto g = testing::erdos_renyi(3, 1.0, 1.0, {5, 0});
  ASSERT_EQ(g.edge_count(), 3u);
  for (const auto& e : g.edges()) EXPECT_EQ(e.sign, -1);
  const auto A = adjacency(g);
  Matrix<double> expected = -Matrix<double>::Ones(3, 3);
  expected.diagonal().setZero();
  EXPECT_EQ(A, expected);
}

TEST(Sample, NearCertainEdgesOnFourNodes) {
  const auto g = testing::erdos_renyi(4, 1.0 - 1e-12, 0.0, {9, 9});
  ASSERT_EQ(g.edge_count(), 6u);
  for (const auto& e : g.edges()) EXPECT_EQ(e.sign, 1);
}

TEST(Sample, SameSeedSameGraph) {
  const BisectionSpec spec{40, 0.3, 0.1, 0.2};
  const auto a = sample_bisection(spec, {123, 7});
  const auto b = sample_bisection(spec, {123, 7});
  EXPECT_EQ(a.first, b.first);
  const auto c = sample_bisection(spec, {123, 8});
  EXPECT_NE(a.first, c.first);
  const auto d = sample_bisection(spec, {124, 7});
  EXPECT_NE(a.first, d.first);
}

TEST(Sample, OutputIsCanonical) {
  const auto g = testing::erdos_renyi(30, 0.4, 0.5, {3, 3});
  std::set<std::pair<Index, Index>> seen;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto& edge = g.edges()[e];
    EXPECT_LT(edge.i, edge.j);
    EXPECT_TRUE(edge.sign == 1 || edge.sign == -1);
    EXPECT_TRUE(seen.insert({edge.i, edge.j}).second);
    if (e > 0) {
      const auto& prev = g.edges()[e - 1];
      EXPECT_TRUE(prev.i < edge.i || (prev.i == edge.i && prev.j < edge.j));
    }
  }
}

TEST(Sample, GroundTruthLabels) {
  const auto [g, truth] = sample_bisection({3, 0.5, 0.2, 0.1}, {0, 0});
  EXPECT_EQ(truth, (std::vector<int>{1, 1, 1, -1, -1, -1}));
  EXPECT_EQ(g.node_count(), 6);
}

TEST(Sample, RejectsMismatchedSizes) {
  EXPECT_THROW(sample(ProbabilityMatrix::constant(3, 0.5), ProbabilityMatrix::constant(4, 0.5), {0, 0}),
               ValidationError);
}

TEST(SignedGraph, RejectsNonCanonicalEdges) {
  EXPECT_THROW(SignedGraph(3, {{1, 0, 1}}), ValidationError);
  EXPECT_THROW(SignedGraph(3, {{0, 3, 1}}), ValidationError);
  EXPECT_THROW(SignedGraph(3, {{0, 1, 2}}), ValidationError);
  EXPECT_THROW(SignedGraph(3, {{0, 2, 1}, {0, 1, 1}}), ValidationError);
  EXPECT_THROW(SignedGraph(3, {{0, 1, 1}, {0, 1, -1}}), ValidationError);
  EXPECT_THROW(SignedGraph(3, {{1, 1, 1}}), ValidationError);
}

TEST(PairIndex, EnumeratesUpperTriangle) {
  const Index n = 7;
  std::uint64_t expected = 0;
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) EXPECT_EQ(pair_index(i, j, n), expected++);
  }
}

TEST(PairStream, UniformInUnitInterval) {
  const PairStream stream({77, 3});
  double sum = 0.0;
  const int count = 100000;
  for (int i = 0; i < count; ++i) {
    const double u = stream.uniform(static_cast<std::uint64_t>(i), 0);
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
  }
  // Mean of U(0,1) has SE sqrt(1/12 / count).
  EXPECT_NEAR(sum / count, 0.5, 4.0 * std::sqrt(1.0 / 12.0 / count));
}

// Aggregated first moment over every within and across pair of a bisection.
TEST(Sample, BisectionEntryMeansMatchModel) {
  const BisectionSpec spec{200, 0.3, 0.1, 0.2};
  const int trials = 50;
  const double k = static_cast<double>(spec.k);
  double within = 0.0;
  double across = 0.0;
  for (int t = 0; t < trials; ++t) {
    const auto [g, truth] = sample_bisection(spec, {2024, static_cast<std::uint64_t>(t)});
    for (const auto& e : g.edges()) {
      if (truth[static_cast<std::size_t>(e.i)] == truth[static_cast<std::size_t>(e.j)]) {
        within += e.sign;
      } else {
        across += e.sign;
      }
    }
  }
  const double within_count = trials * k * (k - 1.0);
  const double across_count = trials * k * k;
  const auto w = entry_moments(spec.p, spec.s);
  const auto a = entry_moments(spec.q, 1.0 - spec.s);
  EXPECT_NEAR(within / within_count, w.mean, 4.0 * std::sqrt(w.variance / within_count));
  EXPECT_NEAR(across / across_count, a.mean, 4.0 * std::sqrt(a.variance / across_count));
}

TEST(Sample, FixedEntryMomentsAndIndependence) {
  // Five nodes with heterogeneous probabilities; follow two fixed pairs.
  Matrix<double> p = Matrix<double>::Zero(5, 5);
  Matrix<double> s = Matrix<double>::Zero(5, 5);
  for (Index i = 0; i < 5; ++i) {
    for (Index j = i + 1; j < 5; ++j) {
      p(i, j) = p(j, i) = 0.1 + 0.15 * static_cast<double>(i + j) / 2.0;
      s(i, j) = s(j, i) = 0.05 * static_cast<double>(j);
    }
  }
  const ProbabilityMatrix P(p, "P");
  const ProbabilityMatrix S(s, "S");
  const int trials = 20000;
  double sum1 = 0.0, sum2 = 0.0, sq1 = 0.0, cross = 0.0;
  for (int t = 0; t < trials; ++t) {
    const auto A = adjacency(sample(P, S, {99, static_cast<std::uint64_t>(t)}));
    const double x = A(1, 3);
    const double y = A(0, 4);
    sum1 += x;
    sum2 += y;
    sq1 += x * x;
    cross += x * y;
  }
  const auto m1 = entry_moments(p(1, 3), s(1, 3));
  const auto m2 = entry_moments(p(0, 4), s(0, 4));
  const double n = trials;
  const double mean1 = sum1 / n;
  const double mean2 = sum2 / n;
  const double var1 = (sq1 - n * mean1 * mean1) / (n - 1.0);
  const double cov = cross / n - mean1 * mean2;

  EXPECT_NEAR(mean1, m1.mean, 4.0 * std::sqrt(m1.variance / n));
  EXPECT_NEAR(mean2, m2.mean, 4.0 * std::sqrt(m2.variance / n));
  EXPECT_NEAR(var1, m1.variance, 4.0 * std::sqrt((m1.fourth_central - m1.variance * m1.variance) / n));
  EXPECT_NEAR(cov, 0.0, 4.0 * std::sqrt(m1.variance * m2.variance / n));
}

}  // namespace
}  // namespace ssbm
