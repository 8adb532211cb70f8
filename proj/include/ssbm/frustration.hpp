#ifndef SSBM_FRUSTRATION_HPP
#define SSBM_FRUSTRATION_HPP

#include "ssbm/sampler.hpp"
#include "ssbm/types.hpp"

#include <Eigen/Core>

#include <vector>

namespace ssbm {

/// Node labels in {+1, -1}, or {+1, -1, 0} for the relaxed variant.
using Labeling = std::vector<int>;

inline constexpr Index kEta2OracleMaxNodes = 22;
inline constexpr Index kBalanceOracleMaxNodes = 16;
inline constexpr Index kEta1OracleMaxNodes = 12;

/// Tolerance used when certifying the Cheeger-type inequalities.
inline constexpr double kCheegerTolerance = 1e-9;

/// ℓ₂-frustration of a labeling:
///   Σ_{ij ∈ E} |f(i) - σ_ij f(j)|²  /  Σ_i f(i)² d_i.
/// Throws ValidationError for a zero denominator.
double eta2(const SignedGraph& g, const Labeling& f);

struct FrustrationReport {
  double eta2_value = 0.0;
  Labeling argmin_labeling;
  double lambda1_normalized = 0.0;
  double cheeger_upper = 0.0;  // sqrt(8 λ₁(normalized L))
  bool lower_holds = false;    // λ₁ ≤ η₂(σ)
  bool upper_holds = false;    // η₂(σ) ≤ sqrt(8 λ₁)
};

/// Exact η₂(σ) by exhaustive search with f(0) = +1. Ties are broken toward
/// the lexicographically smallest labeling. Requires n ≤ 22 and an edge.
FrustrationReport eta2_index_bruteforce(const SignedGraph& g);

struct BalanceReport {
  Index deletions = 0;  // fewest edges whose removal leaves a balanced graph
  bool balanced = false;
};

/// η₁(V) read as an edge-deletion count. Requires n ≤ 16.
BalanceReport eta1_balance_bruteforce(const SignedGraph& g);

/// Denominator of the ℓ₁ frustration ratio.
enum class Eta1Normalization {
  Degree,       // Σ_{i∈V₁} d_i
  Cardinality,  // |V₁|, the convention paired with the unnormalized L
};

/// min over nonempty V₁ of (η₁(V₁) + |E(V₁, V₁ᶜ)|) / denominator(V₁), where
/// η₁(V₁) = min_f Σ_{ij ∈ E(V₁)} |f(i) - σ_ij f(j)| over edges inside V₁.
/// Subsets with zero denominator are skipped. Requires n ≤ 12.
double eta1_index_bruteforce(const SignedGraph& g,
                             Eta1Normalization normalization = Eta1Normalization::Degree);

struct Eta1Certificate {
  double eta1_value = 0.0;
  double lambda1_laplacian = 0.0;  // λ₁(L), L = D - A
  Index max_degree = 0;
  double upper_bound = 0.0;  // sqrt(8 Δ λ₁(L))
  bool lower_holds = false;  // λ₁(L) / 2 ≤ η₁(σ)
  bool upper_holds = false;
};

Eta1Certificate eta1_certificate(const SignedGraph& g,
                                 Eta1Normalization normalization = Eta1Normalization::Cardinality);

/// sgn(x)_i = +1 if x_i ≥ 0, else -1.
template <typename Derived>
Labeling sign_estimator(const Eigen::MatrixBase<Derived>& u) {
  Labeling f(static_cast<std::size_t>(u.size()));
  for (Index i = 0; i < u.size(); ++i) {
    f[static_cast<std::size_t>(i)] = u(i) >= 0 ? 1 : -1;
  }
  return f;
}

struct Misclassification {
  Index count = 0;
  double rate = 0.0;
};

/// Disagreements with the truth after the better of the two global flips.
Misclassification misclassification(const Labeling& f, const Labeling& truth);

}  // namespace ssbm

#endif  // SSBM_FRUSTRATION_HPP
