#pragma once

#include <optional>
#include <vector>

#include "ssc/types.hpp"

namespace ssc {

enum class Algorithm { MP, OMP };

struct GreedyConfig {
  int m_max = 1;
  Scalar tau_abs = 1e-6;
  Scalar tau_rel = 1e-6;  // fraction of ||y_i||
  Algorithm algorithm = Algorithm::OMP;
  // Residual snapshots are kept by default for N <= 2000 and m_max <= 64;
  // set explicitly to override.
  std::optional<bool> keep_residuals;
};

/// Record of one greedy regression of column i against the rest of Y.
struct GreedyTrace {
  int query_index = -1;
  std::vector<int> selections;          // selections[t] chosen at iteration t+1
  std::vector<Scalar> residual_norms;   // ||r_m|| after iteration m = t+1
  std::vector<Vec> residuals;           // r_m snapshots (empty if not kept)
  Vec coefficients;                     // final coefficient vector over all N positions
};

/// Matching pursuit: deflate against the best-correlated column each
/// iteration; previously selected columns may be selected again.
GreedyTrace mp_regress(const Mat& Y, int i, const GreedyConfig& cfg);

/// Orthogonal matching pursuit: grow a distinct support and re-fit y_i on it
/// by least squares each iteration.
GreedyTrace omp_regress(const Mat& Y, int i, const GreedyConfig& cfg);

/// Dispatch on cfg.algorithm.
GreedyTrace regress(const Mat& Y, int i, const GreedyConfig& cfg);

/// Regression of every column against the rest; traces in column order.
std::vector<GreedyTrace> regress_all(const Mat& Y, const GreedyConfig& cfg, int threads = 1);

}  // namespace ssc
