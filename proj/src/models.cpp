#include "ssbm/models.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

namespace ssbm {

namespace {

void check_probability_block(const Matrix<double>& m, const std::string& name) {
  if (m.rows() != m.cols()) {
    throw ValidationError(name + ": must be square");
  }
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      const double v = m(i, j);
      if (!(v >= 0.0 && v <= 1.0)) {
        std::ostringstream os;
        os << name << "(" << i << "," << j << ") = " << v << " is outside [0,1]";
        throw ValidationError(os.str());
      }
      if (v != m(j, i)) {
        std::ostringstream os;
        os << name << " is not symmetric at (" << i << "," << j << ")";
        throw ValidationError(os.str());
      }
    }
  }
}

void check_open_unit(double v, const char* name) {
  if (!(v > 0.0 && v < 1.0)) {
    std::ostringstream os;
    os << "bisection " << name << " = " << v << " must lie in (0,1)";
    throw ValidationError(os.str());
  }
}

}  // namespace

ProbabilityMatrix::ProbabilityMatrix(Matrix<double> entries, const char* name)
    : entries_(std::move(entries)) {
  if (entries_.rows() == 0) {
    throw ValidationError(std::string(name) + ": node count must be positive");
  }
  check_probability_block(entries_, name);
  for (Index i = 0; i < entries_.rows(); ++i) {
    if (entries_(i, i) != 0.0) {
      throw ValidationError(std::string(name) + ": diagonal must be zero (node " +
                            std::to_string(i) + ")");
    }
  }
}

ProbabilityMatrix ProbabilityMatrix::constant(Index n, double value, const char* name) {
  Matrix<double> m = Matrix<double>::Constant(n, n, value);
  m.diagonal().setZero();
  return ProbabilityMatrix(std::move(m), name);
}

Index BlockSpec::node_count() const {
  Index n = 0;
  for (Index size : sizes) n += size;
  return n;
}

void BlockSpec::validate() const {
  if (sizes.size() < 2) {
    throw ValidationError("sizes: at least two blocks are required");
  }
  for (std::size_t t = 0; t < sizes.size(); ++t) {
    if (sizes[t] < 1) {
      throw ValidationError("sizes[" + std::to_string(t) + "] must be at least 1");
    }
  }
  const auto m = static_cast<Index>(sizes.size());
  if (p_block.rows() != m || p_block.cols() != m) {
    throw ValidationError("P_block: must be " + std::to_string(m) + "x" + std::to_string(m));
  }
  if (s_block.rows() != m || s_block.cols() != m) {
    throw ValidationError("S_block: must be " + std::to_string(m) + "x" + std::to_string(m));
  }
  check_probability_block(p_block, "P_block");
  check_probability_block(s_block, "S_block");
}

void BisectionSpec::validate() const {
  if (k < 2) {
    throw ValidationError("bisection k = " + std::to_string(k) + " must be at least 2");
  }
  check_open_unit(p, "p");
  check_open_unit(q, "q");
  check_open_unit(s, "s");
}

Vector<double> ClosedFormSpectra::expand(const std::vector<EigenvalueMultiplicity>& groups) {
  Index total = 0;
  for (const auto& g : groups) total += g.multiplicity;
  Vector<double> out(total);
  Index pos = 0;
  for (const auto& g : groups) {
    out.segment(pos, g.multiplicity).setConstant(g.value);
    pos += g.multiplicity;
  }
  std::sort(out.data(), out.data() + out.size());
  return out;
}

std::pair<ProbabilityMatrix, ProbabilityMatrix> expand_blocks(const BlockSpec& spec) {
  spec.validate();
  const Index n = spec.node_count();
  Matrix<double> P(n, n);
  Matrix<double> S(n, n);
  Index row = 0;
  for (std::size_t a = 0; a < spec.sizes.size(); ++a) {
    Index col = 0;
    for (std::size_t b = 0; b < spec.sizes.size(); ++b) {
      const auto ia = static_cast<Index>(a);
      const auto ib = static_cast<Index>(b);
      P.block(row, col, spec.sizes[a], spec.sizes[b]).setConstant(spec.p_block(ia, ib));
      S.block(row, col, spec.sizes[a], spec.sizes[b]).setConstant(spec.s_block(ia, ib));
      col += spec.sizes[b];
    }
    row += spec.sizes[a];
  }
  // Within-block pattern is J - I.
  P.diagonal().setZero();
  S.diagonal().setZero();
  return {ProbabilityMatrix(std::move(P), "P"), ProbabilityMatrix(std::move(S), "S")};
}

BlockSpec bisection_to_blocks(const BisectionSpec& spec) {
  spec.validate();
  BlockSpec blocks;
  blocks.sizes = {spec.k, spec.k};
  blocks.p_block.resize(2, 2);
  blocks.p_block << spec.p, spec.q, spec.q, spec.p;
  blocks.s_block.resize(2, 2);
  blocks.s_block << spec.s, 1.0 - spec.s, 1.0 - spec.s, spec.s;
  return blocks;
}

SymmetricMatrix<double> mean_adjacency(const ProbabilityMatrix& P, const ProbabilityMatrix& S) {
  if (P.size() != S.size()) {
    throw ValidationError("mean_adjacency: P is " + std::to_string(P.size()) + " nodes but S is " +
                          std::to_string(S.size()));
  }
  return P.matrix().cwiseProduct((1.0 - 2.0 * S.matrix().array()).matrix());
}

MeanModel mean_model(const ProbabilityMatrix& P, const ProbabilityMatrix& S) {
  MeanModel mean;
  mean.mean_adjacency = mean_adjacency(P, S);
  mean.expected_degrees = P.matrix().rowwise().sum();
  const Index n = P.size();
  Vector<double> inv_sqrt(n);
  for (Index i = 0; i < n; ++i) {
    const double d = mean.expected_degrees(i);
    inv_sqrt(i) = d > 0.0 ? 1.0 / std::sqrt(d) : 0.0;
  }
  Matrix<double> laplacian = -mean.mean_adjacency;
  laplacian.diagonal() += mean.expected_degrees;
  mean.mean_normalized_laplacian = inv_sqrt.asDiagonal() * laplacian * inv_sqrt.asDiagonal();
  return mean;
}

Vector<double> bisection_leading_vector(Index k) {
  Vector<double> u(2 * k);
  const double scale = 1.0 / std::sqrt(static_cast<double>(2 * k));
  u.head(k).setConstant(scale);
  u.tail(k).setConstant(-scale);
  return u;
}

std::pair<MeanModel, ClosedFormSpectra> closed_form_mean(const BisectionSpec& spec) {
  spec.validate();
  const Index k = spec.k;
  const Index n = 2 * k;
  const double p = spec.p;
  const double q = spec.q;
  const double contrast = 1.0 - 2.0 * spec.s;
  const double within = p * contrast;
  const double across = -q * contrast;
  const double degree = p * static_cast<double>(k - 1) + q * static_cast<double>(k);

  MeanModel mean;
  mean.mean_adjacency.resize(n, n);
  mean.mean_adjacency.topLeftCorner(k, k).setConstant(within);
  mean.mean_adjacency.bottomRightCorner(k, k).setConstant(within);
  mean.mean_adjacency.topRightCorner(k, k).setConstant(across);
  mean.mean_adjacency.bottomLeftCorner(k, k).setConstant(across);
  mean.mean_adjacency.diagonal().setZero();
  mean.expected_degrees = Vector<double>::Constant(n, degree);
  mean.mean_normalized_laplacian = -mean.mean_adjacency / degree;
  mean.mean_normalized_laplacian.diagonal().array() += 1.0;
  mean.mean_leading_vector = bisection_leading_vector(k);

  const double kd = static_cast<double>(k);
  const double pk1 = p * (kd - 1.0);
  ClosedFormSpectra spectra;
  spectra.adjacency = {
      {contrast * (pk1 + q * kd), 1},
      {contrast * (pk1 - q * kd), 1},
      {-p * contrast, n - 2},
  };
  spectra.normalized_laplacian = {
      {2.0 * spec.s, 1},
      {1.0 - contrast * (pk1 - q * kd) / degree, 1},
      {1.0 + contrast * p / degree, n - 2},
  };
  return {std::move(mean), std::move(spectra)};
}

}  // namespace ssbm
