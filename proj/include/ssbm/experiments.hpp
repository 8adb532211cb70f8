#ifndef SSBM_EXPERIMENTS_HPP
#define SSBM_EXPERIMENTS_HPP

#include "ssbm/models.hpp"
#include "ssbm/sampler.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace ssbm {

enum class Setting { Dense, Sparse };

std::string to_string(Setting setting);
Setting parse_setting(const std::string& text);

/// Dense: p = γ₁ k^{-1/2}, q = γ₂ k^{-1/2}. Sparse: p = γ₁ log k / k, q = γ₂ log k / k.
BisectionSpec bisection_for(Setting setting, Index k, double gamma1, double gamma2, double s);

inline constexpr Index kDefaultMaxNodes = 5000;

struct ExperimentConfig {
  Setting setting = Setting::Dense;
  std::vector<Index> k_grid;
  double gamma1 = 10.0;
  double gamma2 = 1.0;
  std::vector<double> s_grid;
  int trials = 25;
  std::uint64_t master_seed = 0;
  Index max_nodes = kDefaultMaxNodes;  // refuse sweeps with 2k above this
  int jobs = 1;

  void validate() const;

  /// Full grid: k = 50, 100, ..., 2500 with 1000 trials per cell.
  static ExperimentConfig full_scale(Setting setting, double gamma1, double gamma2, double s,
                                     std::uint64_t master_seed);
};

struct ExperimentRecord {
  Setting setting = Setting::Dense;
  Index k = 0;
  double s = 0.0;
  int trial = 0;
  double lambda1 = 0.0;         // λ₁(normalized L)
  double gap_error = 0.0;       // |λ₁ - 2s|
  double lambda_top_adj = 0.0;  // λ_{2k}(A)
  double adj_norm_dev = 0.0;    // ‖A - Ā‖_op
  double lap_norm_dev = 0.0;    // ‖𝓛 - 𝓛̄‖_op
  double align_dist = 0.0;      // min_τ ‖τu₁ - ū₁‖₂
  double misclass_rate = 0.0;
  Index misclass_count = 0;
  Index d_min = 0;
  bool simple_lambda1 = false;
};

/// Sub-seed for trial t of cell (k, s).
Seed trial_seed(std::uint64_t master_seed, Index k, double s, int trial);

ExperimentRecord run_trial(Setting setting, Index k, double gamma1, double gamma2, double s,
                           Seed seed);

/// Records sorted by (k, s, trial); independent of `jobs`.
std::vector<ExperimentRecord> run_sweep(const ExperimentConfig& config);

struct FieldSummary {
  double mean = 0.0;
  double std = 0.0;
  double q05 = 0.0;
  double q95 = 0.0;
};

struct CellSummary {
  Setting setting = Setting::Dense;
  Index k = 0;
  double s = 0.0;
  int trials = 0;
  std::vector<FieldSummary> fields;  // parallel to summary_field_names()
};

const std::vector<std::string>& summary_field_names();

/// Per-(k, s) mean, sample standard deviation and nearest-rank 5%/95%
/// quantiles. lap_norm_dev skips trials with an isolated node.
std::vector<CellSummary> summarize(const std::vector<ExperimentRecord>& records);

struct MinDegreeReport {
  Setting setting = Setting::Dense;
  int trials = 0;
  int violations = 0;
  double violation_fraction = 0.0;
  /// Sparse only: largest C ∈ (0, 1] for which d_min ≥ C·bound holds on ≥ 99% of trials.
  double empirical_constant = 0.0;
};

/// Dense bound (γ₁+γ₂)√k/2. Sparse bound C((γ₁+γ₂)log k - γ₁ log k / k),
/// counted with C = 1 for violations and fitted for empirical_constant.
MinDegreeReport min_degree_check(const std::vector<ExperimentRecord>& records, Setting setting,
                                 double gamma1, double gamma2);

extern const char* const kResultsHeader;

/// %.10g formatting used for every float in the CSV outputs.
std::string format_float(double value);

void write_results_csv(std::ostream& out, const std::vector<ExperimentRecord>& records,
                       const std::vector<std::string>& comments = {});
void write_summary_csv(std::ostream& out, const std::vector<CellSummary>& cells,
                       const std::vector<std::string>& comments = {});

}  // namespace ssbm

#endif  // SSBM_EXPERIMENTS_HPP
