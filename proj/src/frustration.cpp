#include "ssbm/frustration.hpp"

#include "ssbm/graph.hpp"
#include "ssbm/spectra.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

namespace ssbm {

namespace {

struct Neighbor {
  Index node;
  int sign;
};

using AdjacencyLists = std::vector<std::vector<Neighbor>>;

AdjacencyLists adjacency_lists(const SignedGraph& g) {
  AdjacencyLists lists(static_cast<std::size_t>(g.node_count()));
  for (const auto& e : g.edges()) {
    lists[static_cast<std::size_t>(e.i)].push_back({e.j, e.sign});
    lists[static_cast<std::size_t>(e.j)].push_back({e.i, e.sign});
  }
  return lists;
}

void require_at_most(const SignedGraph& g, Index cap, const char* oracle) {
  if (g.node_count() > cap) {
    throw OracleRefusal(std::string(oracle) + ": " + std::to_string(g.node_count()) +
                        " nodes exceeds the exhaustive-search cap of " + std::to_string(cap) +
                        "; use the spectral estimator sgn(u1) for larger graphs");
  }
  if (g.node_count() == 0) {
    throw ValidationError(std::string(oracle) + ": graph has no nodes");
  }
}

// An edge is violated by f when f(i) != σ_ij f(j).
Index count_violations(const SignedGraph& g, const Labeling& f) {
  Index count = 0;
  for (const auto& e : g.edges()) {
    if (f[static_cast<std::size_t>(e.i)] != e.sign * f[static_cast<std::size_t>(e.j)]) ++count;
  }
  return count;
}

struct BestLabeling {
  Index violations;
  Labeling labeling;
};

// Minimizes the violated-edge count over f ∈ {±1}^V with f(0) = +1, walking
// the labelings in Gray-code order so each step flips one node.
BestLabeling min_violations(const SignedGraph& g) {
  const Index n = g.node_count();
  const auto lists = adjacency_lists(g);
  Labeling f(static_cast<std::size_t>(n), 1);
  Index current = count_violations(g, f);
  BestLabeling best{current, f};
  const std::uint64_t count = std::uint64_t{1} << (n - 1);
  for (std::uint64_t step = 1; step < count; ++step) {
    const auto node = static_cast<std::size_t>(std::countr_zero(step)) + 1;
    for (const auto& nb : lists[node]) {
      const bool violated = f[node] != nb.sign * f[static_cast<std::size_t>(nb.node)];
      current += violated ? -1 : 1;
    }
    f[node] = -f[node];
    if (current < best.violations || (current == best.violations && f < best.labeling)) {
      best.violations = current;
      best.labeling = f;
    }
  }
  return best;
}

}  // namespace

double eta2(const SignedGraph& g, const Labeling& f) {
  if (static_cast<Index>(f.size()) != g.node_count()) {
    throw ValidationError("eta2: labeling length " + std::to_string(f.size()) +
                          " does not match node count " + std::to_string(g.node_count()));
  }
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] != 1 && f[i] != -1 && f[i] != 0) {
      throw ValidationError("eta2: label " + std::to_string(i) + " is not in {+1,-1,0}");
    }
  }
  const auto deg = degrees(g);
  double numerator = 0.0;
  for (const auto& e : g.edges()) {
    const double diff = f[static_cast<std::size_t>(e.i)] - e.sign * f[static_cast<std::size_t>(e.j)];
    numerator += diff * diff;
  }
  double denominator = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    denominator += static_cast<double>(f[i] * f[i]) * static_cast<double>(deg.d[i]);
  }
  if (denominator == 0.0) {
    throw ValidationError("eta2: zero denominator (labeling supported only on isolated nodes)");
  }
  return numerator / denominator;
}

FrustrationReport eta2_index_bruteforce(const SignedGraph& g) {
  require_at_most(g, kEta2OracleMaxNodes, "eta2_index_bruteforce");
  if (g.edge_count() == 0) {
    throw ValidationError("eta2_index_bruteforce: graph has no edges (zero denominator)");
  }
  auto best = min_violations(g);

  FrustrationReport report;
  report.eta2_value = eta2(g, best.labeling);
  report.argmin_labeling = std::move(best.labeling);
  report.lambda1_normalized = eigenvalues(normalized_laplacian(g))(0);
  report.cheeger_upper = std::sqrt(8.0 * std::max(report.lambda1_normalized, 0.0));
  report.lower_holds = report.lambda1_normalized <= report.eta2_value + kCheegerTolerance;
  report.upper_holds = report.eta2_value <= report.cheeger_upper + kCheegerTolerance;
  return report;
}

BalanceReport eta1_balance_bruteforce(const SignedGraph& g) {
  require_at_most(g, kBalanceOracleMaxNodes, "eta1_balance_bruteforce");
  const Index deletions = min_violations(g).violations;
  return {deletions, deletions == 0};
}

double eta1_index_bruteforce(const SignedGraph& g, Eta1Normalization normalization) {
  require_at_most(g, kEta1OracleMaxNodes, "eta1_index_bruteforce");
  const Index n = g.node_count();
  const auto lists = adjacency_lists(g);
  const auto deg = degrees(g);

  double best = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> members;
  Labeling f(static_cast<std::size_t>(n), 1);
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    const auto in_subset = [mask](Index v) { return ((mask >> v) & 1U) != 0; };
    members.clear();
    double denominator = 0.0;
    for (Index v = 0; v < n; ++v) {
      if (!in_subset(v)) continue;
      members.push_back(static_cast<std::size_t>(v));
      denominator += normalization == Eta1Normalization::Degree
                         ? static_cast<double>(deg.d[static_cast<std::size_t>(v)])
                         : 1.0;
    }
    if (denominator == 0.0) continue;

    Index cut = 0;
    Index violations = 0;
    for (const std::size_t v : members) f[v] = 1;
    for (const auto& e : g.edges()) {
      const bool a = in_subset(e.i);
      const bool b = in_subset(e.j);
      if (a != b) ++cut;
      if (a && b && e.sign < 0) ++violations;
    }
    Index fewest = violations;
    const std::uint64_t count = std::uint64_t{1} << (members.size() - 1);
    for (std::uint64_t step = 1; step < count && fewest > 0; ++step) {
      const std::size_t node = members[static_cast<std::size_t>(std::countr_zero(step)) + 1];
      for (const auto& nb : lists[node]) {
        if (!in_subset(nb.node)) continue;
        const bool violated = f[node] != nb.sign * f[static_cast<std::size_t>(nb.node)];
        violations += violated ? -1 : 1;
      }
      f[node] = -f[node];
      fewest = std::min(fewest, violations);
    }
    // Each violated edge contributes |f(i) - σ f(j)| = 2.
    const double value = (2.0 * static_cast<double>(fewest) + static_cast<double>(cut)) / denominator;
    best = std::min(best, value);
  }
  if (!std::isfinite(best)) {
    throw ValidationError("eta1_index_bruteforce: every subset has zero denominator");
  }
  return best;
}

Eta1Certificate eta1_certificate(const SignedGraph& g, Eta1Normalization normalization) {
  Eta1Certificate cert;
  cert.eta1_value = eta1_index_bruteforce(g, normalization);
  cert.lambda1_laplacian = eigenvalues(unnormalized_laplacian(g))(0);
  cert.max_degree = degrees(g).max();
  const double lambda = std::max(cert.lambda1_laplacian, 0.0);
  cert.upper_bound = std::sqrt(8.0 * static_cast<double>(cert.max_degree) * lambda);
  cert.lower_holds = 0.5 * cert.lambda1_laplacian <= cert.eta1_value + kCheegerTolerance;
  cert.upper_holds = cert.eta1_value <= cert.upper_bound + kCheegerTolerance;
  return cert;
}

Misclassification misclassification(const Labeling& f, const Labeling& truth) {
  if (f.size() != truth.size()) {
    throw ValidationError("misclassification: lengths differ (" + std::to_string(f.size()) + " vs " +
                          std::to_string(truth.size()) + ")");
  }
  if (f.empty()) throw ValidationError("misclassification: empty labeling");
  Index same_flip = 0;
  Index opposite_flip = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] != truth[i]) ++same_flip;
    if (-f[i] != truth[i]) ++opposite_flip;
  }
  Misclassification out;
  out.count = std::min(same_flip, opposite_flip);
  out.rate = static_cast<double>(out.count) / static_cast<double>(f.size());
  return out;
}

}  // namespace ssbm
