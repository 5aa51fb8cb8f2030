#pragma once

#include <optional>
#include <vector>

#include "ssc/numerics.hpp"
#include "ssc/types.hpp"

namespace ssc {

/// Linear subspace of R^n given by an orthonormal basis (n x d, 0 < d < n).
struct SubspaceModel {
  Mat basis;
  int dim = 0;
};

/// Validates orthonormality (within tol::kOrtho) and 0 < d < n.
SubspaceModel make_subspace(const Mat& basis);

/// Observed points (columns), with optional ground truth: per-column cluster
/// labels in {1..L}, paired noiseless unit-norm points, and the noise bound.
struct DataSet {
  Mat points;                                // n x N
  std::optional<std::vector<int>> labels;    // values in {1..L}
  std::optional<Mat> clean_points;           // n x N, unit-norm columns
  std::optional<Scalar> noise_bound;

  int n() const { return static_cast<int>(points.rows()); }
  int N() const { return static_cast<int>(points.cols()); }
  int num_clusters() const;                       // requires labels
  std::vector<int> cluster_indices(int k) const;  // columns with label k
  Mat cluster_clean(int k) const;                 // requires clean_points
};

/// Checks the DataSet invariants; throws std::invalid_argument on violation.
void validate_dataset(const DataSet& ds);

/// max |u^T v| over all cross pairs of (unit-norm) columns.
Scalar mutual_coherence(const Mat& Xk, const Mat& Xl);

/// max over l != k of mutual_coherence between the clean clusters k and l.
Scalar worst_coherence(const DataSet& ds, int k);

/// First principal angle: arccos of the largest singular value of A^T B.
Scalar min_subspace_angle(const SubspaceModel& A, const SubspaceModel& B);

/// ||A^T B||_F / sqrt(min(dim A, dim B)), in [0, 1].
Scalar affinity(const SubspaceModel& A, const SubspaceModel& B);

/// In-radius of the symmetric convex hull of the given columns, measured
/// inside their span: min over unit directions u of max_j |x_j^T u|.
/// Estimated by sampling `num_samples` random directions and refining the
/// `num_refine` best by projected subgradient descent; the returned value is
/// an upper bound on the true in-radius.
Scalar inradius_hull(const Mat& X_minus_i, int num_samples = 20000, int num_refine = 16);

/// min over leave-one-out in-radius estimates of the cluster's columns.
Scalar inradius_cluster(const Mat& Xk, int num_samples = 20000, int num_refine = 16);

/// Angle of deviation of a residual from a subspace:
/// arctan(||(I - P) r|| / ||P r||), in [0, pi/2].
/// Throws std::invalid_argument("AoD undefined") when ||r|| <= 1e-12.
Scalar aod(const Vec& r, const SubspaceModel& S);

/// Top-d eigenvectors of the uncentered second-moment matrix of the columns
/// (the model's subspaces pass through the origin, so no mean removal).
SubspaceModel pca_subspace(const Mat& points, int d);

/// Per-cluster coherence, in-radius and minimal-angle summary plus the
/// pairwise affinity matrix.
struct GeometrySummary {
  Vec mu_c;     // worst inter-cluster coherence, per cluster
  Vec r_k;      // leave-one-out in-radius, per cluster
  Vec theta_k;  // minimal angle to the nearest other subspace, per cluster
  Mat rho;      // pairwise affinity, unit diagonal
};

GeometrySummary geometry_summary(const DataSet& ds,
                                 const std::vector<SubspaceModel>& models,
                                 int inradius_samples = 20000,
                                 int inradius_refine = 16);

}  // namespace ssc
