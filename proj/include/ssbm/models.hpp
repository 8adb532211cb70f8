#ifndef SSBM_MODELS_HPP
#define SSBM_MODELS_HPP

#include "ssbm/types.hpp"

#include <utility>
#include <vector>

namespace ssbm {

/// Symmetric n×n matrix of probabilities with zero diagonal, entries in [0,1].
/// Holds either the edge probabilities P or the negative-sign probabilities S.
class ProbabilityMatrix {
 public:
  /// Validates and takes ownership. `name` is used in error messages.
  explicit ProbabilityMatrix(Matrix<double> entries, const char* name = "probability matrix");

  static ProbabilityMatrix constant(Index n, double value, const char* name = "probability matrix");

  Index size() const { return entries_.rows(); }
  double operator()(Index i, Index j) const { return entries_(i, j); }
  const Matrix<double>& matrix() const { return entries_; }

 private:
  Matrix<double> entries_;
};

/// General signed stochastic block model: an m-partition with block-level
/// edge and sign probabilities. Nodes are laid out block after block.
struct BlockSpec {
  std::vector<Index> sizes;
  Matrix<double> p_block;
  Matrix<double> s_block;

  Index node_count() const;
  void validate() const;
};

/// Two equal communities of size k; within edges appear with probability p and
/// are negative with probability s, across edges appear with probability q and
/// are negative with probability 1-s.
struct BisectionSpec {
  Index k = 0;
  double p = 0.0;
  double q = 0.0;
  double s = 0.0;

  Index node_count() const { return 2 * k; }
  void validate() const;
};

struct EigenvalueMultiplicity {
  double value;
  Index multiplicity;
};

/// Exact spectra of the mean bisection model, grouped as (value, multiplicity).
struct ClosedFormSpectra {
  std::vector<EigenvalueMultiplicity> adjacency;
  std::vector<EigenvalueMultiplicity> normalized_laplacian;

  /// Expands to an ascending list with multiplicities repeated.
  static Vector<double> expand(const std::vector<EigenvalueMultiplicity>& groups);
};

struct MeanModel {
  SymmetricMatrix<double> mean_adjacency;
  Vector<double> expected_degrees;
  SymmetricMatrix<double> mean_normalized_laplacian;
  /// (1_k, -1_k) / sqrt(2k); only set by closed_form_mean.
  Vector<double> mean_leading_vector;
};

std::pair<ProbabilityMatrix, ProbabilityMatrix> expand_blocks(const BlockSpec& spec);

BlockSpec bisection_to_blocks(const BisectionSpec& spec);

/// Entrywise p_ij (1 - 2 s_ij).
SymmetricMatrix<double> mean_adjacency(const ProbabilityMatrix& P, const ProbabilityMatrix& S);

/// Mean model for arbitrary (P, S). The normalized mean Laplacian uses
/// expected degrees, with the zero-degree convention for d̄_i = 0.
MeanModel mean_model(const ProbabilityMatrix& P, const ProbabilityMatrix& S);

std::pair<MeanModel, ClosedFormSpectra> closed_form_mean(const BisectionSpec& spec);

/// Community size k for the bisection ground truth (+1 on the first k nodes).
Vector<double> bisection_leading_vector(Index k);

}  // namespace ssbm

#endif  // SSBM_MODELS_HPP
