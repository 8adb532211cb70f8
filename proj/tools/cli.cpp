#include "cli.hpp"

#include "ssbm/edge_list.hpp"
#include "ssbm/experiments.hpp"
#include "ssbm/frustration.hpp"
#include "ssbm/graph.hpp"
#include "ssbm/spectra.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>

namespace ssbm::cli {

namespace {

struct SampleOptions {
  std::string setting = "dense";
  Index k = 0;
  double gamma1 = 10.0;
  double gamma2 = 1.0;
  double s = 0.1;
  std::uint64_t seed = 0;
  std::uint64_t trial = 0;
  std::string out;
};

struct SpectrumOptions {
  std::string in;
  std::string matrix = "normalized";
  std::string out;
};

struct DetectOptions {
  std::string in;
  std::string out;
};

struct CheckOptions {
  std::string in;
  std::string oracle = "all";
};

struct ExperimentOptions {
  std::string setting = "dense";
  std::vector<Index> k;
  std::vector<double> s;
  double gamma1 = 10.0;
  double gamma2 = 1.0;
  int trials = 25;
  std::uint64_t seed = 0;
  int jobs = 1;
  Index max_nodes = kDefaultMaxNodes;
  bool full_scale = false;
  std::string out;
  std::string summary;
};

// Resolved configuration of a subcommand as "key=value" lines.
std::vector<std::string> resolved_config(const CLI::App& sub) {
  std::vector<std::string> lines{"command=" + sub.get_name()};
  std::istringstream in(sub.config_to_str(true, false));
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.front() != '[') lines.push_back(line);
  }
  return lines;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << content;
  out.close();
  if (!out) throw IoError("write to '" + path + "' failed");
}

int run_sample(const CLI::App& sub, const SampleOptions& o) {
  const auto spec = bisection_for(parse_setting(o.setting), o.k, o.gamma1, o.gamma2, o.s);
  const auto [graph, truth] = sample_bisection(spec, Seed{o.seed, o.trial});
  std::ostringstream text;
  write_edge_list(text, graph, resolved_config(sub));
  write_file(o.out, text.str());
  std::cout << "sampled " << graph.node_count() << " nodes, " << graph.edge_count() << " edges -> "
            << o.out << '\n';
  return kExitOk;
}

int run_spectrum(const CLI::App& sub, const SpectrumOptions& o) {
  const SignedGraph graph = load_edge_list(o.in);
  if (graph.node_count() == 0) throw ValidationError("spectrum: graph has no nodes");
  SymmetricMatrix<double> M;
  if (o.matrix == "adjacency") {
    M = adjacency(graph);
  } else if (o.matrix == "laplacian") {
    M = unnormalized_laplacian(graph);
  } else {
    M = normalized_laplacian(graph);
  }
  const Vector<double> values = eigenvalues(M);
  std::ostringstream text;
  for (const auto& line : resolved_config(sub)) text << "# " << line << '\n';
  text << "index,eigenvalue\n";
  for (Index i = 0; i < values.size(); ++i) {
    text << i << ',' << format_float(values(i)) << '\n';
  }
  write_file(o.out, text.str());
  std::cout << "wrote " << values.size() << " eigenvalues of " << o.matrix << " -> " << o.out << '\n';
  return kExitOk;
}

int run_detect(const CLI::App& sub, const DetectOptions& o) {
  const SignedGraph graph = load_edge_list(o.in);
  if (graph.node_count() == 0) throw ValidationError("detect: graph has no nodes");
  const auto summary = eigendecompose(normalized_laplacian(graph));
  const Labeling labels = sign_estimator(summary.u1);
  std::ostringstream text;
  for (const auto& line : resolved_config(sub)) text << "# " << line << '\n';
  text << "# lambda1=" << format_float(summary.lambda1) << '\n';
  if (!summary.simple) text << "# warning: lambda1 is not simple; u1 is not unique\n";
  for (std::size_t i = 0; i < labels.size(); ++i) text << i << ',' << labels[i] << '\n';
  write_file(o.out, text.str());
  std::cout << "lambda1=" << format_float(summary.lambda1) << (summary.simple ? "" : " (not simple)")
            << " -> " << o.out << '\n';
  return kExitOk;
}

bool flag_given(const std::vector<std::string>& args, const std::string& flag) {
  for (const auto& a : args) {
    if (a == flag || a.rfind(flag + "=", 0) == 0) return true;
  }
  return false;
}

// Expands `--config <file>` into explicit flags placed ahead of the user's
// arguments. Keys already given on the command line are skipped, so flags
// override the file.
std::vector<std::string> expand_config(const std::vector<std::string>& args) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (path.empty() || args.size() < 2) return args;
  if (!std::ifstream(path)) throw IoError("cannot open config file '" + path + "'");
  std::vector<std::string> injected;
  for (const auto& item : CLI::ConfigINI().from_file(path)) {
    if (!item.parents.empty()) {
      throw ValidationError("config file '" + path + "': sections are not supported (" +
                            item.fullname() + ")");
    }
    if (item.name == "++" || item.name == "--") continue;
    const std::string flag = "--" + item.name;
    if (item.name == "config" || flag_given(args, flag)) continue;
    if (item.inputs.size() == 1 && (item.inputs[0] == "true" || item.inputs[0] == "false")) {
      if (item.inputs[0] == "true") injected.push_back(flag);
      continue;
    }
    std::string value;
    for (std::size_t i = 0; i < item.inputs.size(); ++i) value += (i ? "," : "") + item.inputs[i];
    injected.push_back(flag + "=" + value);
  }
  std::vector<std::string> out(args.begin(), args.begin() + 2);
  out.insert(out.end(), injected.begin(), injected.end());
  out.insert(out.end(), args.begin() + 2, args.end());
  return out;
}

const char* verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

int run_check(const CheckOptions& o) {
  const SignedGraph graph = load_edge_list(o.in);
  const bool want_eta2 = o.oracle == "all" || o.oracle == "eta2";
  const bool want_eta1 = o.oracle == "all" || o.oracle == "eta1";
  bool all_hold = true;

  // Size caps are checked up front so a refusal produces no partial report.
  if (want_eta2 && graph.node_count() > kEta2OracleMaxNodes) {
    throw OracleRefusal("check: eta2 oracle supports at most " + std::to_string(kEta2OracleMaxNodes) +
                        " nodes; use `detect` for larger graphs");
  }
  if (want_eta1 && graph.node_count() > kEta1OracleMaxNodes) {
    throw OracleRefusal("check: eta1 oracle supports at most " + std::to_string(kEta1OracleMaxNodes) +
                        " nodes; use `detect` for larger graphs");
  }

  if (want_eta2) {
    const auto report = eta2_index_bruteforce(graph);
    std::cout << "eta2_sigma=" << format_float(report.eta2_value) << '\n'
              << "lambda1_normalized=" << format_float(report.lambda1_normalized) << '\n'
              << "sqrt(8*lambda1_normalized)=" << format_float(report.cheeger_upper) << '\n'
              << verdict(report.lower_holds) << " lambda1(normalized) <= eta2_sigma\n"
              << verdict(report.upper_holds) << " eta2_sigma <= sqrt(8*lambda1(normalized))\n";
    all_hold = all_hold && report.lower_holds && report.upper_holds;
  }
  if (want_eta1) {
    const auto balance = eta1_balance_bruteforce(graph);
    const auto cert = eta1_certificate(graph, Eta1Normalization::Cardinality);
    std::cout << "eta1_deletions=" << balance.deletions << '\n'
              << "balanced=" << (balance.balanced ? "yes" : "no") << '\n'
              << "eta1_sigma_degree=" << format_float(eta1_index_bruteforce(graph, Eta1Normalization::Degree))
              << '\n'
              << "eta1_sigma_cardinality=" << format_float(cert.eta1_value) << '\n'
              << "lambda1_laplacian=" << format_float(cert.lambda1_laplacian) << '\n'
              << "max_degree=" << cert.max_degree << '\n'
              << verdict(cert.lower_holds) << " lambda1(L)/2 <= eta1_sigma_cardinality\n"
              << verdict(cert.upper_holds) << " eta1_sigma_cardinality <= sqrt(8*max_degree*lambda1(L))\n";
    all_hold = all_hold && cert.lower_holds && cert.upper_holds;
  }
  return all_hold ? kExitOk : kExitInequalityFailed;
}

int run_experiment(const CLI::App& sub, ExperimentOptions o) {
  const Setting setting = parse_setting(o.setting);
  ExperimentConfig config;
  if (o.full_scale) {
    config = ExperimentConfig::full_scale(setting, o.gamma1, o.gamma2, 0.1, o.seed);
    if (!o.k.empty()) config.k_grid = o.k;
    if (!o.s.empty()) config.s_grid = o.s;
    if (sub.count("--trials") > 0) config.trials = o.trials;
  } else {
    if (o.k.empty()) throw ValidationError("experiment: --k is required");
    config.setting = setting;
    config.k_grid = o.k;
    config.s_grid = o.s.empty() ? std::vector<double>{0.1} : o.s;
    config.gamma1 = o.gamma1;
    config.gamma2 = o.gamma2;
    config.trials = o.trials;
    config.master_seed = o.seed;
  }
  config.jobs = o.jobs;
  config.max_nodes = o.max_nodes;

  const auto records = run_sweep(config);
  const auto comments = resolved_config(sub);
  std::ostringstream text;
  write_results_csv(text, records, comments);
  write_file(o.out, text.str());
  if (!o.summary.empty()) {
    std::ostringstream summary;
    write_summary_csv(summary, summarize(records), comments);
    write_file(o.summary, summary.str());
  }
  std::cout << "wrote " << records.size() << " records -> " << o.out << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args) {
  CLI::App app{"Signed stochastic block model sampler, spectra and frustration tools", "ssbm"};
  app.require_subcommand(1);

  SampleOptions sample_opts;
  auto* sample = app.add_subcommand("sample", "Sample a signed bisection graph to an edge-list file");
  sample->add_option("--config", "Flat key=value file supplying flag values");
  sample->add_option("--setting", sample_opts.setting, "dense or sparse")
      ->check(CLI::IsMember({"dense", "sparse"}))
      ->capture_default_str();
  sample->add_option("--k", sample_opts.k, "Community size")->required();
  sample->add_option("--gamma1", sample_opts.gamma1)->capture_default_str();
  sample->add_option("--gamma2", sample_opts.gamma2)->capture_default_str();
  sample->add_option("--s", sample_opts.s, "Sign-flip probability")->capture_default_str();
  sample->add_option("--seed", sample_opts.seed, "Master seed")->required();
  sample->add_option("--trial", sample_opts.trial, "Trial index")->capture_default_str();
  sample->add_option("--out", sample_opts.out, "Output edge list")->required();

  SpectrumOptions spectrum_opts;
  auto* spectrum = app.add_subcommand("spectrum", "Write all eigenvalues of A, L or the normalized L");
  spectrum->add_option("--config", "Flat key=value file supplying flag values");
  spectrum->add_option("--in", spectrum_opts.in)->required();
  spectrum->add_option("--matrix", spectrum_opts.matrix, "adjacency, laplacian or normalized")
      ->check(CLI::IsMember({"adjacency", "laplacian", "normalized"}))
      ->capture_default_str();
  spectrum->add_option("--out", spectrum_opts.out)->required();

  DetectOptions detect_opts;
  auto* detect = app.add_subcommand("detect", "Label nodes with sgn(u1) of the normalized Laplacian");
  detect->add_option("--config", "Flat key=value file supplying flag values");
  detect->add_option("--in", detect_opts.in)->required();
  detect->add_option("--out", detect_opts.out)->required();

  CheckOptions check_opts;
  auto* check = app.add_subcommand("check", "Brute-force frustration indices and Cheeger-type bounds");
  check->add_option("--config", "Flat key=value file supplying flag values");
  check->add_option("--in", check_opts.in)->required();
  check->add_option("--oracle", check_opts.oracle, "all, eta2 or eta1")
      ->check(CLI::IsMember({"all", "eta2", "eta1"}))
      ->capture_default_str();

  ExperimentOptions exp_opts;
  auto* experiment = app.add_subcommand("experiment", "Monte Carlo sweep over k (and s)");
  experiment->add_option("--config", "Flat key=value file supplying flag values");
  experiment->add_option("--setting", exp_opts.setting)
      ->check(CLI::IsMember({"dense", "sparse"}))
      ->capture_default_str();
  experiment->add_option("--k", exp_opts.k, "Comma-separated community sizes")->delimiter(',');
  experiment->add_option("--s", exp_opts.s, "Comma-separated sign-flip probabilities")->delimiter(',');
  experiment->add_option("--gamma1", exp_opts.gamma1)->capture_default_str();
  experiment->add_option("--gamma2", exp_opts.gamma2)->capture_default_str();
  experiment->add_option("--trials", exp_opts.trials)->capture_default_str();
  experiment->add_option("--seed", exp_opts.seed, "Master seed")->required();
  experiment->add_option("--jobs", exp_opts.jobs, "Worker threads")->capture_default_str();
  experiment->add_option("--max-nodes", exp_opts.max_nodes, "Largest 2k allowed")->capture_default_str();
  experiment->add_flag("--full-scale", exp_opts.full_scale,
                       "k = 50..2500 step 50, 1000 trials (explicit --k/--s/--trials still apply)");
  experiment->add_option("--out", exp_opts.out, "Results CSV")->required();
  experiment->add_option("--summary", exp_opts.summary, "Optional per-cell summary CSV");

  std::vector<std::string> expanded;
  try {
    expanded = expand_config(args);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  std::vector<const char*> argv;
  for (const auto& a : expanded) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return kExitValidation;
  }

  try {
    if (*sample) return run_sample(*sample, sample_opts);
    if (*spectrum) return run_spectrum(*spectrum, spectrum_opts);
    if (*detect) return run_detect(*detect, detect_opts);
    if (*check) return run_check(check_opts);
    return run_experiment(*experiment, exp_opts);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  }
}

}  // namespace ssbm::cli
