#pragma once

#include <cstdint>
#include <vector>

#include "ssc/geometry.hpp"
#include "ssc/greedy.hpp"
#include "ssc/types.hpp"

namespace ssc {

struct SimilarityGraph {
  Mat weights;  // symmetric, nonnegative, zero diagonal
};

/// W(i, j) = |c_i[j]| + |c_j[i]| where column i of `coefficients` is the
/// coefficient vector of point i. Throws on a nonzero self-coefficient.
SimilarityGraph build_similarity(const Mat& coefficients);
SimilarityGraph build_similarity(const std::vector<GreedyTrace>& traces);

/// Normalized spectral clustering: symmetric normalized Laplacian, the L
/// bottom eigenvectors row-normalized, then seeded k-means (greedy
/// farthest-point seeding, 10 restarts, 100 iterations, best inertia wins).
/// Labels take values in {1..L}. Deterministic given the seed.
std::vector<int> spectral_cluster(const SimilarityGraph& graph, int L, std::uint64_t seed);

/// Correct clustering rate: matched points under the best label permutation
/// (optimal assignment on the contingency matrix) divided by N.
Scalar ccr(const std::vector<int>& predicted, const std::vector<int>& truth);

/// Per-iteration averages over all traced points plus the correct-neighbor
/// probability. Entries of traces that stopped before iteration m are
/// excluded from the iteration-m averages.
struct MetricSeries {
  std::vector<Scalar> r_par_mean;   // mean ||P_{S_k} r_m||
  std::vector<Scalar> r_perp_mean;  // mean ||(I - P_{S_k}) r_m||
  std::vector<Scalar> aod_mean;
  std::vector<Scalar> p_correct;    // fraction of correct m-th selections
  std::vector<long> active;         // traces contributing at iteration m
  Scalar ccr = -1;                  // filled by the caller after clustering
  Scalar snr_db = 0;                // 10 log10(1 / eps^2)
};

/// Requires residual snapshots on every trace.
MetricSeries compute_metrics(const std::vector<GreedyTrace>& traces,
                             const std::vector<SubspaceModel>& models,
                             const std::vector<int>& labels, Scalar eps);

}  // namespace ssc
