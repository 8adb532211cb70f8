#include "support/random_graphs.hpp"

#include "ssbm/models.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace ssbm::testing {

SignedGraph erdos_renyi(Index n, double p, double s, Seed seed) {
  return sample(ProbabilityMatrix::constant(n, p, "P"), ProbabilityMatrix::constant(n, s, "S"), seed);
}

bool is_connected(const SignedGraph& g) {
  const Index n = g.node_count();
  if (n <= 1) return true;
  std::vector<std::vector<Index>> nbrs(static_cast<std::size_t>(n));
  for (const auto& e : g.edges()) {
    nbrs[static_cast<std::size_t>(e.i)].push_back(e.j);
    nbrs[static_cast<std::size_t>(e.j)].push_back(e.i);
  }
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::queue<Index> frontier;
  frontier.push(0);
  seen[0] = true;
  Index reached = 1;
  while (!frontier.empty()) {
    const Index v = frontier.front();
    frontier.pop();
    for (Index w : nbrs[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        ++reached;
        frontier.push(w);
      }
    }
  }
  return reached == n;
}

SignedGraph connected_erdos_renyi(Index n, double p, double s, Seed& seed) {
  for (;;) {
    SignedGraph g = erdos_renyi(n, p, s, seed);
    ++seed.trial;
    if (is_connected(g)) return g;
  }
}

SignedGraph make_graph(Index n, std::vector<SignedEdge> edges) {
  for (auto& e : edges) {
    if (e.i > e.j) std::swap(e.i, e.j);
  }
  std::sort(edges.begin(), edges.end(),
            [](const SignedEdge& a, const SignedEdge& b) { return a.i != b.i ? a.i < b.i : a.j < b.j; });
  return SignedGraph(n, std::move(edges));
}

namespace {

std::vector<int> labeling_from_bits(std::uint64_t bits, Index n) {
  std::vector<int> f(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) f[static_cast<std::size_t>(i)] = ((bits >> i) & 1U) ? -1 : 1;
  return f;
}

}  // namespace

double naive_eta2_index(const SignedGraph& g) {
  const Index n = g.node_count();
  std::vector<double> deg(static_cast<std::size_t>(n), 0.0);
  for (const auto& e : g.edges()) {
    deg[static_cast<std::size_t>(e.i)] += 1.0;
    deg[static_cast<std::size_t>(e.j)] += 1.0;
  }
  double best = std::numeric_limits<double>::infinity();
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    const auto f = labeling_from_bits(bits, n);
    double num = 0.0;
    for (const auto& e : g.edges()) {
      const double d = f[static_cast<std::size_t>(e.i)] - e.sign * f[static_cast<std::size_t>(e.j)];
      num += d * d;
    }
    double den = 0.0;
    for (Index i = 0; i < n; ++i) den += deg[static_cast<std::size_t>(i)];
    best = std::min(best, num / den);
  }
  return best;
}

double naive_eta1_index(const SignedGraph& g, Eta1Normalization normalization) {
  const Index n = g.node_count();
  std::vector<double> deg(static_cast<std::size_t>(n), 0.0);
  for (const auto& e : g.edges()) {
    deg[static_cast<std::size_t>(e.i)] += 1.0;
    deg[static_cast<std::size_t>(e.j)] += 1.0;
  }
  double best = std::numeric_limits<double>::infinity();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    auto in = [mask](Index v) { return ((mask >> v) & 1U) != 0; };
    double den = 0.0;
    for (Index v = 0; v < n; ++v) {
      if (in(v)) den += normalization == Eta1Normalization::Degree ? deg[static_cast<std::size_t>(v)] : 1.0;
    }
    if (den == 0.0) continue;
    double cut = 0.0;
    for (const auto& e : g.edges()) {
      if (in(e.i) != in(e.j)) cut += 1.0;
    }
    double frustration = std::numeric_limits<double>::infinity();
    // Labels outside the subset are irrelevant; enumerate all of them anyway.
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      if ((bits & ~mask) != 0) continue;
      const auto f = labeling_from_bits(bits, n);
      double sum = 0.0;
      for (const auto& e : g.edges()) {
        if (in(e.i) && in(e.j)) {
          sum += std::abs(f[static_cast<std::size_t>(e.i)] - e.sign * f[static_cast<std::size_t>(e.j)]);
        }
      }
      frustration = std::min(frustration, sum);
    }
    best = std::min(best, (frustration + cut) / den);
  }
  return best;
}

Index naive_min_violations(const SignedGraph& g) {
  const Index n = g.node_count();
  Index best = std::numeric_limits<Index>::max();
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    const auto f = labeling_from_bits(bits, n);
    Index count = 0;
    for (const auto& e : g.edges()) {
      if (f[static_cast<std::size_t>(e.i)] * f[static_cast<std::size_t>(e.j)] * e.sign < 0) ++count;
    }
    best = std::min(best, count);
  }
  return best;
}

SignedGraph balanced_k4() {
  return SignedGraph(4, {{0, 1, 1}, {0, 2, -1}, {0, 3, -1}, {1, 2, -1}, {1, 3, -1}, {2, 3, 1}});
}

SignedGraph frustrated_triangle() {
  return SignedGraph(3, {{0, 1, 1}, {0, 2, 1}, {1, 2, -1}});
}

}  // namespace ssbm::testing
