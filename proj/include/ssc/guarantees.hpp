#pragma once

#include <vector>

#include "ssc/geometry.hpp"
#include "ssc/greedy.hpp"
#include "ssc/types.hpp"

namespace ssc {

/// The first-selection certificate subtracts a noise penalty built from the
/// extremes of f. In the `lemma` convention the penalty is
/// [max f - min f] (the noise level already enters through f itself); the
/// `printed` convention additionally multiplies the bracket by eps.
enum class Convention { lemma, printed };

struct FirstSelectionCert {
  bool holds = false;
  Scalar lhs = 0;      // mu_c
  Scalar rhs = 0;      // r_k - penalty
  Scalar margin = 0;   // rhs - lhs
  Scalar penalty = 0;
};

/// Certifies that the first greedy selection lands in the query's cluster:
/// mu_c < r_k - penalty(mu_c, r_k, eps). Requires mu_c, r_k in (0, 1).
FirstSelectionCert check_first_selection(Scalar mu_c, Scalar r_k, Scalar eps,
                                         Convention conv = Convention::lemma);

struct IterationCert {
  bool holds = false;
  Scalar lhs = 0;  // cos(max{theta_k - aod, 0}) + 2 eps
  Scalar rhs = 0;  // max over clean in-cluster points of |cos angle(r_m, x_j)|
  Scalar aod = 0;
  Scalar theta_k = 0;
};

/// Certifies the next selection given the residual after iteration m: the
/// residual must stay close enough to the true subspace that every in-cluster
/// point beats every out-of-cluster point.
/// `exclude` is the column of Xk_clean holding the query's own clean point
/// (-1 if absent). Throws on a zero residual (the certificate is vacuous once
/// the iteration has converged).
IterationCert check_iteration(const Vec& r_m, const SubspaceModel& Sk, Scalar theta_k,
                              const Mat& Xk_clean, int exclude, Scalar eps);

/// Noiseless residual-coherence condition for OMP:
/// max over l != k of mutual_coherence(Wk, X_l) < r_k, where Wk collects the
/// normalized OMP residuals of every point in cluster k.
/// Throws if the dataset carries noise.
bool noiseless_omp_condition(const Mat& Wk, const DataSet& ds, int k, Scalar r_k);

/// Collects normalized residual snapshots of the given traces (columns);
/// residuals with norm <= 1e-12 are skipped.
Mat collect_normalized_residuals(const std::vector<GreedyTrace>& traces);

/// True iff every selected index shares the query's label.
bool sdp_verdict(const GreedyTrace& trace, const std::vector<int>& labels, int i);

struct IterationCertEntry {
  int m = 0;
  Scalar lhs = 0;
  Scalar rhs = 0;
  bool holds = false;
  Scalar aod = 0;
  Scalar theta_k = 0;
};

struct CertificateReport {
  int query_index = -1;
  bool first_holds = false;
  Scalar first_lhs = 0;
  Scalar first_rhs = 0;
  Scalar first_margin = 0;
  std::vector<IterationCertEntry> per_iter;
  Convention convention = Convention::lemma;
  bool sdp = false;
  std::vector<int> selections;
  std::vector<bool> selection_correct;
};

/// Runs the configured algorithm for every point and evaluates the full
/// certificate chain against the ground truth. Requires labels, clean points
/// and the noise bound.
std::vector<CertificateReport> certify_run(const DataSet& ds,
                                           const std::vector<SubspaceModel>& models,
                                           const GreedyConfig& cfg, Convention conv,
                                           int inradius_samples = 20000,
                                           int inradius_refine = 16);

/// Number of (certificate chain holds but the certified selection is wrong)
/// events across the reports. The chain certifies selection 1 when the
/// first-selection certificate holds, and selection m+1 when additionally the
/// iteration certificates 1..m hold. Any nonzero count is a bug in either the
/// certificates or the greedy loops.
long soundness_violations(const std::vector<CertificateReport>& reports);

}  // namespace ssc
