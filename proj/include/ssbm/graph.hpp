#ifndef SSBM_GRAPH_HPP
#define SSBM_GRAPH_HPP

#include "ssbm/sampler.hpp"
#include "ssbm/types.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace ssbm {

struct DegreeVector {
  std::vector<Index> d;

  Index min() const { return d.empty() ? 0 : *std::min_element(d.begin(), d.end()); }
  Index max() const { return d.empty() ? 0 : *std::max_element(d.begin(), d.end()); }
  Index sum() const {
    Index total = 0;
    for (Index v : d) total += v;
    return total;
  }
};

inline DegreeVector degrees(const SignedGraph& g) {
  DegreeVector deg{std::vector<Index>(static_cast<std::size_t>(g.node_count()), 0)};
  for (const auto& e : g.edges()) {
    ++deg.d[static_cast<std::size_t>(e.i)];
    ++deg.d[static_cast<std::size_t>(e.j)];
  }
  return deg;
}

template <typename Scalar = double>
SymmetricMatrix<Scalar> adjacency(const SignedGraph& g) {
  const Index n = g.node_count();
  SymmetricMatrix<Scalar> A = SymmetricMatrix<Scalar>::Zero(n, n);
  for (const auto& e : g.edges()) {
    A(e.i, e.j) = A(e.j, e.i) = static_cast<Scalar>(e.sign);
  }
  return A;
}

/// |A|: the underlying unsigned graph.
template <typename Scalar = double>
SymmetricMatrix<Scalar> unsigned_adjacency(const SignedGraph& g) {
  const Index n = g.node_count();
  SymmetricMatrix<Scalar> A = SymmetricMatrix<Scalar>::Zero(n, n);
  for (const auto& e : g.edges()) {
    A(e.i, e.j) = A(e.j, e.i) = Scalar(1);
  }
  return A;
}

/// L = D - A.
template <typename Scalar = double>
SymmetricMatrix<Scalar> unnormalized_laplacian(const SignedGraph& g) {
  SymmetricMatrix<Scalar> L = -adjacency<Scalar>(g);
  const auto deg = degrees(g);
  for (Index i = 0; i < g.node_count(); ++i) {
    L(i, i) = static_cast<Scalar>(deg.d[static_cast<std::size_t>(i)]);
  }
  return L;
}

/// D^{-1/2} (D - A) D^{-1/2} with D^{-1/2}_ii = 0 for isolated nodes, so an
/// isolated node has an all-zero row and column including the diagonal.
template <typename Scalar = double>
SymmetricMatrix<Scalar> normalized_laplacian(const SignedGraph& g) {
  using std::sqrt;
  const Index n = g.node_count();
  const auto deg = degrees(g);
  SymmetricMatrix<Scalar> N = SymmetricMatrix<Scalar>::Zero(n, n);
  for (Index i = 0; i < n; ++i) {
    if (deg.d[static_cast<std::size_t>(i)] > 0) N(i, i) = Scalar(1);
  }
  for (const auto& e : g.edges()) {
    const auto di = static_cast<Scalar>(deg.d[static_cast<std::size_t>(e.i)]);
    const auto dj = static_cast<Scalar>(deg.d[static_cast<std::size_t>(e.j)]);
    N(e.i, e.j) = N(e.j, e.i) = -static_cast<Scalar>(e.sign) / sqrt(di * dj);
  }
  return N;
}

}  // namespace ssbm

#endif  // SSBM_GRAPH_HPP
