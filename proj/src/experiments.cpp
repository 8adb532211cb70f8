#include "ssbm/experiments.hpp"

#include "ssbm/frustration.hpp"
#include "ssbm/graph.hpp"
#include "ssbm/spectra.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdio>
#include <exception>
#include <map>
#include <mutex>
#include <ostream>
#include <thread>
#include <tuple>

namespace ssbm {

std::string to_string(Setting setting) {
  return setting == Setting::Dense ? "dense" : "sparse";
}

Setting parse_setting(const std::string& text) {
  if (text == "dense") return Setting::Dense;
  if (text == "sparse") return Setting::Sparse;
  throw ValidationError("setting must be 'dense' or 'sparse', got '" + text + "'");
}

BisectionSpec bisection_for(Setting setting, Index k, double gamma1, double gamma2, double s) {
  if (!(gamma1 > 0.0 && gamma2 > 0.0)) {
    throw ValidationError("gamma1 and gamma2 must be positive");
  }
  if (!(gamma1 > gamma2)) {
    throw ValidationError("gamma1 must exceed gamma2");
  }
  if (k < 2) {
    throw ValidationError("k = " + std::to_string(k) + " must be at least 2");
  }
  const double kd = static_cast<double>(k);
  const double scale = setting == Setting::Dense ? 1.0 / std::sqrt(kd) : std::log(kd) / kd;
  BisectionSpec spec{k, gamma1 * scale, gamma2 * scale, s};
  if (!(spec.p < 1.0)) {
    throw ValidationError(to_string(setting) + " setting with k = " + std::to_string(k) +
                          " gives p = " + format_float(spec.p) + ", outside (0,1)");
  }
  spec.validate();
  return spec;
}

void ExperimentConfig::validate() const {
  if (k_grid.empty()) throw ValidationError("k grid is empty");
  if (s_grid.empty()) throw ValidationError("s grid is empty");
  if (trials < 1) throw ValidationError("trials must be positive");
  if (jobs < 1) throw ValidationError("jobs must be positive");
  for (double s : s_grid) {
    if (!(s > 0.0 && s < 0.5)) {
      throw ValidationError("s = " + format_float(s) + " must lie in (0, 1/2)");
    }
  }
  for (Index k : k_grid) {
    if (2 * k > max_nodes) {
      throw ValidationError("k = " + std::to_string(k) + " needs " + std::to_string(2 * k) +
                            " nodes, above the dense-matrix cap of " + std::to_string(max_nodes));
    }
    for (double s : s_grid) bisection_for(setting, k, gamma1, gamma2, s);
  }
}

ExperimentConfig ExperimentConfig::full_scale(Setting setting, double gamma1, double gamma2,
                                              double s, std::uint64_t master_seed) {
  ExperimentConfig config;
  config.setting = setting;
  for (Index k = 50; k <= 2500; k += 50) config.k_grid.push_back(k);
  config.gamma1 = gamma1;
  config.gamma2 = gamma2;
  config.s_grid = {s};
  config.trials = 1000;
  config.master_seed = master_seed;
  return config;
}

Seed trial_seed(std::uint64_t master_seed, Index k, double s, int trial) {
  const std::uint64_t cell =
      mix_seed(mix_seed(master_seed, static_cast<std::uint64_t>(k)), std::bit_cast<std::uint64_t>(s));
  return {cell, static_cast<std::uint64_t>(trial)};
}

ExperimentRecord run_trial(Setting setting, Index k, double gamma1, double gamma2, double s,
                           Seed seed) {
  const BisectionSpec spec = bisection_for(setting, k, gamma1, gamma2, s);
  const auto [graph, truth] = sample_bisection(spec, seed);
  const auto [mean, closed_form] = closed_form_mean(spec);

  ExperimentRecord rec;
  rec.setting = setting;
  rec.k = k;
  rec.s = s;
  rec.trial = static_cast<int>(seed.trial);

  const SymmetricMatrix<double> A = adjacency(graph);
  const Vector<double> adjacency_spectrum = eigenvalues(A);
  rec.lambda_top_adj = adjacency_spectrum(adjacency_spectrum.size() - 1);
  rec.adj_norm_dev = operator_norm_diff(A, mean.mean_adjacency);

  const SymmetricMatrix<double> laplacian = normalized_laplacian(graph);
  const SpectralSummary<double> summary = eigendecompose(laplacian);
  rec.lambda1 = summary.lambda1;
  rec.gap_error = std::abs(summary.lambda1 - 2.0 * s);
  rec.simple_lambda1 = summary.simple;
  rec.lap_norm_dev = operator_norm_diff(laplacian, mean.mean_normalized_laplacian);

  rec.align_dist = alignment(summary.u1, mean.mean_leading_vector).dist;
  const auto miss = misclassification(sign_estimator(summary.u1), truth);
  rec.misclass_count = miss.count;
  rec.misclass_rate = miss.rate;
  rec.d_min = degrees(graph).min();
  return rec;
}

std::vector<ExperimentRecord> run_sweep(const ExperimentConfig& config) {
  config.validate();
  std::vector<Index> ks = config.k_grid;
  std::vector<double> ss = config.s_grid;
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  std::sort(ss.begin(), ss.end());
  ss.erase(std::unique(ss.begin(), ss.end()), ss.end());

  struct Task {
    Index k;
    double s;
    int trial;
  };
  std::vector<Task> tasks;
  for (Index k : ks) {
    for (double s : ss) {
      for (int t = 0; t < config.trials; ++t) tasks.push_back({k, s, t});
    }
  }

  std::vector<ExperimentRecord> records(tasks.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      const Task& t = tasks[i];
      try {
        records[i] = run_trial(config.setting, t.k, config.gamma1, config.gamma2, t.s,
                               trial_seed(config.master_seed, t.k, t.s, t.trial));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = tasks.size();
      }
    }
  };
  const auto workers = static_cast<std::size_t>(std::max(1, config.jobs));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return records;
}

const std::vector<std::string>& summary_field_names() {
  static const std::vector<std::string> names = {
      "lambda1",      "gap_error",     "lambda_top_adj", "adj_norm_dev",   "lap_norm_dev",
      "align_dist",   "misclass_rate", "d_min",          "simple_lambda1",
  };
  return names;
}

namespace {

// Parallel to summary_field_names(). Returns false when the value is excluded.
bool field_value(const ExperimentRecord& r, std::size_t field, double& value) {
  switch (field) {
    case 0: value = r.lambda1; return true;
    case 1: value = r.gap_error; return true;
    case 2: value = r.lambda_top_adj; return true;
    case 3: value = r.adj_norm_dev; return true;
    case 4: value = r.lap_norm_dev; return r.d_min > 0;
    case 5: value = r.align_dist; return true;
    case 6: value = r.misclass_rate; return true;
    case 7: value = static_cast<double>(r.d_min); return true;
    case 8: value = r.simple_lambda1 ? 1.0 : 0.0; return true;
    default: return false;
  }
}

double nearest_rank(const std::vector<double>& sorted, double q) {
  const auto n = static_cast<double>(sorted.size());
  auto rank = static_cast<std::size_t>(std::ceil(q * n - 1e-9));
  rank = std::clamp<std::size_t>(rank, 1, sorted.size());
  return sorted[rank - 1];
}

FieldSummary describe(std::vector<double> values) {
  FieldSummary out;
  if (values.empty()) {
    const double nan = std::nan("");
    return {nan, nan, nan, nan};
  }
  double sum = 0.0;
  for (double v : values) sum += v;
  out.mean = sum / static_cast<double>(values.size());
  if (values.size() > 1) {
    double sq = 0.0;
    for (double v : values) sq += (v - out.mean) * (v - out.mean);
    out.std = std::sqrt(sq / static_cast<double>(values.size() - 1));
  }
  std::sort(values.begin(), values.end());
  out.q05 = nearest_rank(values, 0.05);
  out.q95 = nearest_rank(values, 0.95);
  return out;
}

}  // namespace

std::vector<CellSummary> summarize(const std::vector<ExperimentRecord>& records) {
  if (records.empty()) throw ValidationError("summarize: no records");
  using Key = std::tuple<int, Index, double>;
  std::map<Key, std::vector<const ExperimentRecord*>> cells;
  for (const auto& r : records) {
    cells[{static_cast<int>(r.setting), r.k, r.s}].push_back(&r);
  }
  std::vector<CellSummary> out;
  for (const auto& [key, members] : cells) {
    CellSummary cell;
    cell.setting = static_cast<Setting>(std::get<0>(key));
    cell.k = std::get<1>(key);
    cell.s = std::get<2>(key);
    cell.trials = static_cast<int>(members.size());
    for (std::size_t f = 0; f < summary_field_names().size(); ++f) {
      std::vector<double> values;
      for (const auto* r : members) {
        double v = 0.0;
        if (field_value(*r, f, v)) values.push_back(v);
      }
      cell.fields.push_back(describe(std::move(values)));
    }
    out.push_back(std::move(cell));
  }
  return out;
}

MinDegreeReport min_degree_check(const std::vector<ExperimentRecord>& records, Setting setting,
                                 double gamma1, double gamma2) {
  if (records.empty()) throw ValidationError("min_degree_check: no records");
  MinDegreeReport report;
  report.setting = setting;
  std::vector<double> ratios;
  for (const auto& r : records) {
    if (r.setting != setting) {
      throw ValidationError("min_degree_check: records mix dense and sparse settings");
    }
    const double kd = static_cast<double>(r.k);
    const double bound = setting == Setting::Dense
                             ? 0.5 * (gamma1 + gamma2) * std::sqrt(kd)
                             : (gamma1 + gamma2) * std::log(kd) - gamma1 * std::log(kd) / kd;
    if (static_cast<double>(r.d_min) < bound) ++report.violations;
    ratios.push_back(static_cast<double>(r.d_min) / bound);
  }
  report.trials = static_cast<int>(records.size());
  report.violation_fraction = static_cast<double>(report.violations) / report.trials;
  if (setting == Setting::Sparse) {
    std::sort(ratios.begin(), ratios.end());
    const auto drop = static_cast<std::size_t>(std::floor(0.01 * static_cast<double>(ratios.size())));
    report.empirical_constant = std::min(1.0, ratios[drop]);
  }
  return report;
}

const char* const kResultsHeader =
    "setting,k,s,trial,lambda1,gap_error,lambda_top_adj,adj_norm_dev,lap_norm_dev,align_dist,"
    "misclass_rate,d_min,simple_lambda1";

std::string format_float(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", value);
  return buf;
}

void write_results_csv(std::ostream& out, const std::vector<ExperimentRecord>& records,
                       const std::vector<std::string>& comments) {
  for (const auto& c : comments) out << "# " << c << '\n';
  out << kResultsHeader << '\n';
  for (const auto& r : records) {
    out << to_string(r.setting) << ',' << r.k << ',' << format_float(r.s) << ',' << r.trial << ','
        << format_float(r.lambda1) << ',' << format_float(r.gap_error) << ','
        << format_float(r.lambda_top_adj) << ',' << format_float(r.adj_norm_dev) << ','
        << format_float(r.lap_norm_dev) << ',' << format_float(r.align_dist) << ','
        << format_float(r.misclass_rate) << ',' << r.d_min << ',' << (r.simple_lambda1 ? 1 : 0)
        << '\n';
  }
}

void write_summary_csv(std::ostream& out, const std::vector<CellSummary>& cells,
                       const std::vector<std::string>& comments) {
  for (const auto& c : comments) out << "# " << c << '\n';
  out << "setting,k,s,trials";
  for (const auto& name : summary_field_names()) {
    out << ',' << name << "_mean," << name << "_std," << name << "_q05," << name << "_q95";
  }
  out << '\n';
  for (const auto& cell : cells) {
    out << to_string(cell.setting) << ',' << cell.k << ',' << format_float(cell.s) << ','
        << cell.trials;
    for (const auto& f : cell.fields) {
      out << ',' << format_float(f.mean) << ',' << format_float(f.std) << ',' << format_float(f.q05)
          << ',' << format_float(f.q95);
    }
    out << '\n';
  }
}

}  // namespace ssbm
