#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "ssc/clustering.hpp"
#include "ssc/greedy.hpp"
#include "ssc/guarantees.hpp"
#include "ssc/io.hpp"
#include "ssc/synth.hpp"
#include "ssc/types.hpp"

namespace ssc {

std::string algorithm_name(Algorithm a);
Algorithm algorithm_from_name(const std::string& s);
std::string convention_name(Convention c);
Convention convention_from_name(const std::string& s);

Scalar snr_db_from_eps(Scalar eps);  // 10 log10(1/eps^2); +inf at eps = 0
Scalar eps_from_snr_db(Scalar snr_db);

// ---------------------------------------------------------------------------
// lemma-validate: Monte Carlo containment check of the noisy inner-product
// bounds, one row per sampled pair.
struct LemmaValidateConfig {
  std::vector<Scalar> phis{0.9};
  std::vector<Scalar> epsilons{0.2, 0.4, 0.6, 0.8};
  long trials = 5000;
  int ambient_dim = 5;
  std::uint64_t master_seed = 1;
};

struct LemmaValidateOutcome {
  ResultTable table;
  long total_violations = 0;
};

LemmaValidateConfig parse_lemma_validate_config(const nlohmann::json& j);
LemmaValidateOutcome run_lemma_validate(const LemmaValidateConfig& cfg);

// ---------------------------------------------------------------------------
// extremal-solve: tabulate the polynomial extremizer against the dense-grid
// reference over a (phi, eps) grid.
struct ExtremalSolveConfig {
  std::vector<Scalar> phis;      // default 0.05..1.50 step 0.05
  std::vector<Scalar> epsilons;  // default 0.05..0.95 step 0.10
  long oracle_grid = 1000000;
  ExtremalSolveConfig();
};

struct ExtremalSolveOutcome {
  ResultTable table;
  Scalar worst_value_delta = 0;        // max |f_extremes - grid| over the grid
  Scalar worst_stationarity = 0;       // max stationarity residual of returned thetas
};

ExtremalSolveConfig parse_extremal_solve_config(const nlohmann::json& j);
ExtremalSolveOutcome run_extremal_solve(const ExtremalSolveConfig& cfg);

// ---------------------------------------------------------------------------
// trace / ccr-sweep share a synthetic-experiment core.
struct SynthExperimentConfig {
  int n = 100, d = 20, L = 3, N_l = 150;
  std::vector<Scalar> rhos{0.02, 0.5};
  std::vector<Scalar> epsilons{0.1, 0.4, 0.7};
  std::vector<Algorithm> algorithms{Algorithm::MP, Algorithm::OMP};
  int trials = 1;
  int m_max = 0;  // 0 -> d
  Scalar tau_abs = 1e-6, tau_rel = 1e-6;
  std::uint64_t master_seed = 1;
  Scalar scale = 1.0;
  int threads = 0;
  bool with_ccr = false;

  void apply_scale();  // halves/multiplies n, d, N_l; keeps the spec feasible
  int effective_m_max() const { return m_max > 0 ? m_max : d; }
};

struct TraceCurve {
  Algorithm algorithm = Algorithm::MP;
  Scalar rho = 0, eps = 0;
  // Per-iteration means, averaged over trials.
  std::vector<Scalar> r_par, r_perp, aod, p_correct;
  std::vector<long> active;  // summed over trials
  Scalar ccr_mean = -1, ccr_stderr = 0;
  std::vector<Scalar> ccr_per_trial;
};

std::vector<TraceCurve> run_synth_experiment(const SynthExperimentConfig& cfg);

struct TraceOutcome {
  ResultTable table;
  std::vector<TraceCurve> curves;
};

SynthExperimentConfig parse_trace_config(const nlohmann::json& j);
TraceOutcome run_trace(SynthExperimentConfig cfg);

struct CcrSweepConfig {
  SynthExperimentConfig base;
  std::vector<Scalar> snrs_db{2, 5, 8, 11, 14, 17, 20};
};

struct CcrSweepOutcome {
  ResultTable table;
  std::vector<TraceCurve> curves;
};

CcrSweepConfig parse_ccr_sweep_config(const nlohmann::json& j);
CcrSweepOutcome run_ccr_sweep(CcrSweepConfig cfg);

// ---------------------------------------------------------------------------
// certify: per-point certificate margins along real runs plus the
// holds-but-wrong soundness cross-check.
struct CertifyConfig {
  int n = 40, d = 5, L = 2, N_l = 12;
  Scalar rho = 0.1;
  Scalar epsilon = 0.05;
  std::vector<Algorithm> algorithms{Algorithm::MP, Algorithm::OMP};
  int trials = 1;
  int m_max = 0;
  Scalar tau_abs = 1e-6, tau_rel = 1e-6;
  Convention convention = Convention::lemma;
  int inradius_samples = 20000, inradius_refine = 16;
  std::uint64_t master_seed = 1;
  Scalar scale = 1.0;
  int threads = 0;
};

struct CertifyOutcome {
  ResultTable table;
  long soundness_violations = 0;
  long certified_points = 0;  // points whose first-selection certificate held
};

CertifyConfig parse_certify_config(const nlohmann::json& j);
CertifyOutcome run_certify(CertifyConfig cfg);

// ---------------------------------------------------------------------------
// cluster: full pipeline over an ingested point matrix.
struct ClusterConfig {
  std::string data_path;
  std::string meta_path;  // defaults to meta.json next to the data file
  int L = 0;              // 0 -> taken from the sidecar
  Algorithm algorithm = Algorithm::OMP;
  int m_max = 10;
  Scalar tau_abs = 1e-6, tau_rel = 1e-6;
  int pca_rank = 0;  // > 0: estimate per-cluster subspaces for AoD traces
  std::uint64_t master_seed = 1;
  int threads = 0;
};

struct ClusterOutcome {
  ResultTable labels_table;
  std::optional<ResultTable> aod_table;
  std::vector<int> predicted;
  Scalar ccr = -1;  // -1 when no ground-truth labels
  std::vector<std::string> notices;
};

ClusterConfig parse_cluster_config(const nlohmann::json& j);
ClusterOutcome run_cluster(const ClusterConfig& cfg);

// ---------------------------------------------------------------------------
// gen: materialize a synthetic dataset (noisy points + labels, clean points,
// bases, JSON sidecar).
struct GenConfig {
  SynthSpec spec;
  Scalar scale = 1.0;
};

GenConfig parse_gen_config(const nlohmann::json& j);
std::vector<std::string> run_gen(GenConfig cfg, const std::string& out_dir);

/// Hash of the canonical config dump; stamped into output metadata.
std::string config_fingerprint(const nlohmann::json& j, std::uint64_t seed);

}  // namespace ssc
