#ifndef SSBM_TYPES_HPP
#define SSBM_TYPES_HPP

#include <Eigen/Core>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ssbm {

template <typename Scalar = double>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar = double>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

// Dense real symmetric matrix (A, L, normalized L and their means).
// Symmetry is established by the builders, not re-checked on every use.
template <typename Scalar = double>
using SymmetricMatrix = Matrix<Scalar>;

using Index = Eigen::Index;

/// Raised for any violated precondition on model parameters or inputs.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A brute-force oracle refused an instance that is too large.
class OracleRefusal : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ssbm

#endif  // SSBM_TYPES_HPP
