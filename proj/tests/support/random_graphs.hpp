#ifndef SSBM_TESTS_RANDOM_GRAPHS_HPP
#define SSBM_TESTS_RANDOM_GRAPHS_HPP

#include "ssbm/frustration.hpp"
#include "ssbm/sampler.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace ssbm::testing {

/// Homogeneous signed Erdős–Rényi graph G(n, p) with negative-sign probability s.
SignedGraph erdos_renyi(Index n, double p, double s, Seed seed);

bool is_connected(const SignedGraph& g);

/// Rejection-samples a connected G(n, p, s), advancing seed.trial per attempt.
SignedGraph connected_erdos_renyi(Index n, double p, double s, Seed& seed);

/// Builds a graph from unsorted (i, j, sign) triples.
SignedGraph make_graph(Index n, std::vector<SignedEdge> edges);

/// Straightforward η₂(σ): tries all 2^n labelings and evaluates the formula.
double naive_eta2_index(const SignedGraph& g);

/// Straightforward η₁(σ): every nonempty subset and every labeling of it.
double naive_eta1_index(const SignedGraph& g, Eta1Normalization normalization);

/// Fewest violated edges over all 2^n labelings.
Index naive_min_violations(const SignedGraph& g);

/// Balanced K₄: + inside {0,1} and {2,3}, - across.
SignedGraph balanced_k4();

/// Triangle with one negative edge (1,2).
SignedGraph frustrated_triangle();

}  // namespace ssbm::testing

#endif  // SSBM_TESTS_RANDOM_GRAPHS_HPP
