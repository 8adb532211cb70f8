#ifndef SSBM_SAMPLER_HPP
#define SSBM_SAMPLER_HPP

#include "ssbm/models.hpp"
#include "ssbm/types.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace ssbm {

/// (master, trial) fully determines a sampled graph.
struct Seed {
  std::uint64_t master = 0;
  std::uint64_t trial = 0;
};

struct SignedEdge {
  Index i;
  Index j;
  int sign;  // +1 or -1

  friend bool operator==(const SignedEdge&, const SignedEdge&) = default;
};

/// Node count plus a canonical edge list: i < j, sorted by (i, j), no repeats.
class SignedGraph {
 public:
  SignedGraph() = default;
  /// Validates canonical form; throws ValidationError otherwise.
  SignedGraph(Index n, std::vector<SignedEdge> edges);

  Index node_count() const { return n_; }
  const std::vector<SignedEdge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  friend bool operator==(const SignedGraph&, const SignedGraph&) = default;

 private:
  Index n_ = 0;
  std::vector<SignedEdge> edges_;
};

/// Counter-based uniform draws in [0,1). Every (seed, pair, stream) triple
/// maps to one fixed value independent of evaluation order.
class PairStream {
 public:
  explicit PairStream(Seed seed);

  double uniform(std::uint64_t pair_index, std::uint32_t stream) const;

 private:
  std::uint64_t key_;
};

/// Mixes several 64-bit words into one well-distributed word.
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);

/// Upper-triangle index of pair (i, j) with i < j on n nodes.
constexpr std::uint64_t pair_index(Index i, Index j, Index n) {
  const auto ui = static_cast<std::uint64_t>(i);
  const auto un = static_cast<std::uint64_t>(n);
  return ui * un - ui * (ui + 1) / 2 + static_cast<std::uint64_t>(j - i - 1);
}

SignedGraph sample(const ProbabilityMatrix& P, const ProbabilityMatrix& S, Seed seed);

/// Returns the graph and the ground truth labels (+1 on [0,k), -1 on [k,2k)).
std::pair<SignedGraph, std::vector<int>> sample_bisection(const BisectionSpec& spec, Seed seed);

}  // namespace ssbm

#endif  // SSBM_SAMPLER_HPP
