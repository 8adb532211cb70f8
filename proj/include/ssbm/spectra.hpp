#ifndef SSBM_SPECTRA_HPP
#define SSBM_SPECTRA_HPP

#include "ssbm/types.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace ssbm {

/// λ₁ is reported as simple only when λ₂ - λ₁ is at least this large.
inline constexpr double kSimpleGapThreshold = 1e-10;

template <typename Scalar = double>
struct SpectralSummary {
  Vector<Scalar> eigenvalues;  // ascending
  Scalar lambda1 = 0;
  Vector<Scalar> u1;           // unit norm, first non-negligible component positive
  Scalar gap = 0;              // λ₂ - λ₁ (0 for n = 1)
  Scalar op_norm = 0;          // max |λ_i|
  bool simple = false;
};

template <typename Scalar = double>
struct FullEigendecomposition {
  Vector<Scalar> eigenvalues;  // ascending
  Matrix<Scalar> eigenvectors; // column i pairs with eigenvalues(i)
};

template <typename Scalar = double>
struct Alignment {
  int tau = 1;
  Scalar dist = 0;
};

namespace detail {

template <typename Scalar>
Scalar symmetry_tolerance() {
  return std::max(Scalar(1e-12), Scalar(64) * Eigen::NumTraits<Scalar>::epsilon());
}

template <typename Derived>
Matrix<typename Derived::Scalar> checked_symmetric(const Eigen::MatrixBase<Derived>& expr,
                                                   const char* who) {
  using Scalar = typename Derived::Scalar;
  Matrix<Scalar> M = expr;
  if (M.rows() != M.cols()) {
    throw ValidationError(std::string(who) + ": matrix is not square");
  }
  if (M.rows() == 0) {
    throw ValidationError(std::string(who) + ": matrix is empty");
  }
  const Scalar scale = std::max(Scalar(1), M.cwiseAbs().maxCoeff());
  const Scalar asym = (M - M.transpose()).cwiseAbs().maxCoeff();
  if (!(asym <= symmetry_tolerance<Scalar>() * scale)) {
    throw ValidationError(std::string(who) + ": matrix is not symmetric (max asymmetry " +
                          std::to_string(static_cast<double>(asym)) + ")");
  }
  return M;
}

// Solves (T - shift I) x = rhs in place for the symmetric tridiagonal T given
// by (diag, offdiag), using Gaussian elimination with partial pivoting.
// Exactly zero pivots are nudged so that inverse iteration stays finite.
template <typename Scalar>
class ShiftedTridiagonalSolver {
 public:
  ShiftedTridiagonalSolver(const Vector<Scalar>& diag, const Vector<Scalar>& offdiag, Scalar shift,
                           Scalar tiny)
      : n_(diag.size()), lower_(offdiag), d_(diag.array() - shift), upper_(offdiag),
        upper2_(std::max<Index>(n_ - 2, 0)), swapped_(static_cast<std::size_t>(std::max<Index>(n_ - 1, 0))) {
    upper2_.setZero();
    for (Index i = 0; i + 1 < n_; ++i) {
      if (std::abs(d_(i)) >= std::abs(lower_(i))) {
        if (d_(i) == Scalar(0)) d_(i) = tiny;
        const Scalar factor = lower_(i) / d_(i);
        lower_(i) = factor;
        d_(i + 1) -= factor * upper_(i);
        swapped_[static_cast<std::size_t>(i)] = false;
      } else {
        const Scalar factor = d_(i) / lower_(i);
        d_(i) = lower_(i);
        lower_(i) = factor;
        const Scalar temp = upper_(i);
        upper_(i) = d_(i + 1);
        d_(i + 1) = temp - factor * d_(i + 1);
        if (i + 2 < n_) {
          upper2_(i) = upper_(i + 1);
          upper_(i + 1) = -factor * upper_(i + 1);
        }
        swapped_[static_cast<std::size_t>(i)] = true;
      }
    }
    if (d_(n_ - 1) == Scalar(0)) d_(n_ - 1) = tiny;
  }

  void solve(Vector<Scalar>& b) const {
    for (Index i = 0; i + 1 < n_; ++i) {
      if (!swapped_[static_cast<std::size_t>(i)]) {
        b(i + 1) -= lower_(i) * b(i);
      } else {
        const Scalar temp = b(i);
        b(i) = b(i + 1);
        b(i + 1) = temp - lower_(i) * b(i);
      }
    }
    b(n_ - 1) /= d_(n_ - 1);
    if (n_ > 1) b(n_ - 2) = (b(n_ - 2) - upper_(n_ - 2) * b(n_ - 1)) / d_(n_ - 2);
    for (Index i = n_ - 3; i >= 0; --i) {
      b(i) = (b(i) - upper_(i) * b(i + 1) - upper2_(i) * b(i + 2)) / d_(i);
    }
  }

 private:
  Index n_;
  Vector<Scalar> lower_;
  Vector<Scalar> d_;
  Vector<Scalar> upper_;
  Vector<Scalar> upper2_;
  std::vector<bool> swapped_;
};

template <typename Scalar>
Vector<Scalar> tridiagonal_eigenvector(const Vector<Scalar>& diag, const Vector<Scalar>& offdiag,
                                       Scalar eigenvalue) {
  const Index n = diag.size();
  const Scalar eps = Eigen::NumTraits<Scalar>::epsilon();
  Scalar norm = diag.cwiseAbs().maxCoeff();
  if (n > 1) norm += Scalar(2) * offdiag.cwiseAbs().maxCoeff();
  norm = std::max(norm, Scalar(1));
  const Scalar shift = eigenvalue - Scalar(4) * eps * norm;
  const ShiftedTridiagonalSolver<Scalar> solver(diag, offdiag, shift, eps * norm);

  Vector<Scalar> x(n);
  for (Index i = 0; i < n; ++i) {
    // Deterministic start with no special alignment to any eigenvector.
    x(i) = Scalar(1) + Scalar(0.5) * std::sin(Scalar(1.0 + 0.7 * static_cast<double>(i)));
  }
  x.normalize();
  for (int iter = 0; iter < 8; ++iter) {
    solver.solve(x);
    x.normalize();
    Vector<Scalar> r = diag.cwiseProduct(x) - eigenvalue * x;
    if (n > 1) {
      r.head(n - 1) += offdiag.cwiseProduct(x.tail(n - 1));
      r.tail(n - 1) += offdiag.cwiseProduct(x.head(n - 1));
    }
    if (iter >= 1 && r.norm() <= Scalar(16) * eps * norm) break;
  }
  return x;
}

template <typename Scalar>
void canonicalize_sign(Vector<Scalar>& u) {
  const Scalar threshold = std::sqrt(Eigen::NumTraits<Scalar>::epsilon()) * Scalar(1e-2);
  for (Index i = 0; i < u.size(); ++i) {
    if (std::abs(u(i)) > threshold) {
      if (u(i) < 0) u = -u;
      return;
    }
  }
}

}  // namespace detail

/// Ascending eigenvalues of a symmetric matrix.
template <typename Derived>
Vector<typename Derived::Scalar> eigenvalues(const Eigen::MatrixBase<Derived>& M) {
  using Scalar = typename Derived::Scalar;
  const Matrix<Scalar> S = detail::checked_symmetric(M, "eigenvalues");
  Eigen::SelfAdjointEigenSolver<Matrix<Scalar>> solver(S, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigenvalues: symmetric eigensolver did not converge");
  }
  return solver.eigenvalues();
}

/// Full spectrum plus the lowest eigenpair. Only u₁ is formed: the matrix is
/// reduced to tridiagonal form once, the spectrum comes from the tridiagonal
/// QR iteration, and u₁ from inverse iteration mapped back through the
/// Householder reflectors.
template <typename Derived>
SpectralSummary<typename Derived::Scalar> eigendecompose(const Eigen::MatrixBase<Derived>& M) {
  using Scalar = typename Derived::Scalar;
  const Matrix<Scalar> S = detail::checked_symmetric(M, "eigendecompose");
  const Index n = S.rows();
  if (n == 1) {
    SpectralSummary<Scalar> one;
    one.eigenvalues = S.diagonal();
    one.lambda1 = S(0, 0);
    one.u1 = Vector<Scalar>::Ones(1);
    one.op_norm = std::abs(S(0, 0));
    one.simple = true;
    return one;
  }

  Eigen::Tridiagonalization<Matrix<Scalar>> tri(S);
  const Vector<Scalar> diag = tri.diagonal();
  const Vector<Scalar> offdiag = tri.subDiagonal();
  Eigen::SelfAdjointEigenSolver<Matrix<Scalar>> solver;
  solver.computeFromTridiagonal(diag, offdiag, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigendecompose: tridiagonal QR iteration did not converge");
  }

  SpectralSummary<Scalar> out;
  out.eigenvalues = solver.eigenvalues();
  out.lambda1 = out.eigenvalues(0);
  out.gap = out.eigenvalues(1) - out.eigenvalues(0);
  out.simple = out.gap >= Scalar(kSimpleGapThreshold);
  out.op_norm = std::max(std::abs(out.eigenvalues(0)), std::abs(out.eigenvalues(n - 1)));

  const Vector<Scalar> z = detail::tridiagonal_eigenvector(diag, offdiag, out.lambda1);
  out.u1 = tri.matrixQ() * z;
  out.u1.normalize();
  detail::canonicalize_sign(out.u1);
  return out;
}

/// All eigenpairs; O(n³) with a large constant, intended for small matrices.
template <typename Derived>
FullEigendecomposition<typename Derived::Scalar> full_eigendecomposition(
    const Eigen::MatrixBase<Derived>& M) {
  using Scalar = typename Derived::Scalar;
  const Matrix<Scalar> S = detail::checked_symmetric(M, "full_eigendecomposition");
  Eigen::SelfAdjointEigenSolver<Matrix<Scalar>> solver(S);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("full_eigendecomposition: eigensolver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

template <typename Derived>
typename Derived::Scalar operator_norm(const Eigen::MatrixBase<Derived>& M) {
  const auto values = eigenvalues(M);
  return std::max(std::abs(values(0)), std::abs(values(values.size() - 1)));
}

/// ‖M1 - M2‖_op = max_i |λ_i(M1 - M2)|.
template <typename Derived1, typename Derived2>
typename Derived1::Scalar operator_norm_diff(const Eigen::MatrixBase<Derived1>& M1,
                                             const Eigen::MatrixBase<Derived2>& M2) {
  if (M1.rows() != M2.rows() || M1.cols() != M2.cols()) {
    throw ValidationError("operator_norm_diff: dimension mismatch (" + std::to_string(M1.rows()) +
                          " vs " + std::to_string(M2.rows()) + ")");
  }
  return operator_norm(M1 - M2);
}

/// Sign τ ∈ {±1} minimizing ‖τu - v‖₂, and that minimum. Ties pick τ = +1.
template <typename Derived1, typename Derived2>
Alignment<typename Derived1::Scalar> alignment(const Eigen::MatrixBase<Derived1>& u,
                                               const Eigen::MatrixBase<Derived2>& v) {
  using Scalar = typename Derived1::Scalar;
  if (u.size() != v.size()) {
    throw ValidationError("alignment: vector lengths differ");
  }
  const Scalar unit_tol = std::max(Scalar(1e-8), Scalar(64) * Eigen::NumTraits<Scalar>::epsilon());
  if (std::abs(u.norm() - Scalar(1)) > unit_tol || std::abs(v.norm() - Scalar(1)) > unit_tol) {
    throw ValidationError("alignment: inputs must be unit vectors");
  }
  Alignment<Scalar> out;
  out.tau = u.dot(v) >= Scalar(0) ? 1 : -1;
  out.dist = (static_cast<Scalar>(out.tau) * u - v).norm();
  return out;
}

}  // namespace ssbm

#endif  // SSBM_SPECTRA_HPP
