#include "ssbm/sampler.hpp"

#include <algorithm>
#include <string>

namespace ssbm {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

constexpr std::uint32_t kPresenceStream = 0;
constexpr std::uint32_t kSignStream = 1;

}  // namespace

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  return mix64(mix64(a + kGolden) ^ (b + 2 * kGolden));
}

SignedGraph::SignedGraph(Index n, std::vector<SignedEdge> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ < 0) throw ValidationError("graph: negative node count");
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto& edge = edges_[e];
    const std::string where = "graph edge #" + std::to_string(e) + ": ";
    if (edge.i < 0 || edge.j >= n_ || edge.i >= edge.j) {
      throw ValidationError(where + "requires 0 <= i < j < n");
    }
    if (edge.sign != 1 && edge.sign != -1) {
      throw ValidationError(where + "sign must be +1 or -1");
    }
    if (e > 0) {
      const auto& prev = edges_[e - 1];
      if (prev.i > edge.i || (prev.i == edge.i && prev.j >= edge.j)) {
        throw ValidationError(where + "edges must be sorted by (i, j) without repeats");
      }
    }
  }
}

PairStream::PairStream(Seed seed) : key_(mix_seed(seed.master, seed.trial)) {}

double PairStream::uniform(std::uint64_t pair_index, std::uint32_t stream) const {
  const std::uint64_t counter = 2 * pair_index + stream + 1;
  const std::uint64_t bits = mix64(key_ + counter * kGolden);
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

SignedGraph sample(const ProbabilityMatrix& P, const ProbabilityMatrix& S, Seed seed) {
  if (P.size() != S.size()) {
    throw ValidationError("sample: P is " + std::to_string(P.size()) + " nodes but S is " +
                          std::to_string(S.size()));
  }
  const Index n = P.size();
  const PairStream stream(seed);
  std::vector<SignedEdge> edges;
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      const std::uint64_t pair = pair_index(i, j, n);
      // Both draws are taken for every pair so the stream layout is fixed.
      const double presence = stream.uniform(pair, kPresenceStream);
      const double sign = stream.uniform(pair, kSignStream);
      if (presence < P(i, j)) {
        edges.push_back({i, j, sign < S(i, j) ? -1 : 1});
      }
    }
  }
  return SignedGraph(n, std::move(edges));
}

std::pair<SignedGraph, std::vector<int>> sample_bisection(const BisectionSpec& spec, Seed seed) {
  const auto [P, S] = expand_blocks(bisection_to_blocks(spec));
  std::vector<int> truth(static_cast<std::size_t>(spec.node_count()), -1);
  std::fill(truth.begin(), truth.begin() + spec.k, 1);
  return {sample(P, S, seed), std::move(truth)};
}

}  // namespace ssbm
