#pragma once

#include <cstdint>
#include <utility>

#include "ssc/types.hpp"

namespace ssc {

/// Perturbation of the inner product of two unit vectors at angle phi when
/// both are displaced by eps along the shared in-plane direction angle theta:
///   f(theta) = 2 eps cos(phi/2 + theta) + eps^2 cos(2 theta).
Scalar f_eval(Scalar phi, Scalar eps, Scalar theta);

/// First-order stationarity residual of f: sin(phi/2 + theta) + eps sin(2 theta).
Scalar f_stationarity(Scalar phi, Scalar eps, Scalar theta);

enum class ExtremalMethod { quartic, bracketed_1d };

struct ExtremalResult {
  Scalar theta_max = 0;
  Scalar f_max = 0;
  Scalar theta_min = 0;
  Scalar f_min = 0;
  ExtremalMethod method = ExtremalMethod::quartic;
};

/// Exact extremes of f over theta in [0, 2pi). The default path reduces the
/// stationarity condition to a degree-4 polynomial in tan(theta/2 - phi/4)
/// and selects among the verified stationary candidates; near phi = pi/2
/// (where that reduction is singular) or when the candidate set looks
/// inconsistent it falls back to dense 1-D root bracketing.
/// Requires phi in (0, pi/2), eps >= 0.
ExtremalResult f_extremes(Scalar phi, Scalar eps);
ExtremalResult f_extremes(Scalar phi, Scalar eps, ExtremalMethod method);

/// Reference extremizer: dense theta grid plus golden-section refinement.
/// Slow; used by the extremal-solve command and the acceptance suite to
/// cross-check f_extremes.
ExtremalResult f_extremes_grid(Scalar phi, Scalar eps, long grid_points = 1000000);

/// Tight upper/lower bounds on (x_i + e_i)^T (x_j + e_j) over all noise pairs
/// with ||e||_2 <= eps, given the clean inner product c = x_i^T x_j in (0, 1):
///   upper = c + max f,  lower = c + min f  at phi = arccos(c).
/// Throws std::invalid_argument("lemma hypothesis violated") outside (0, 1).
std::pair<Scalar, Scalar> noisy_inner_bounds(Scalar c, Scalar eps);

/// Perturbed inner product when the two in-plane noise angles differ:
///   cos phi + eps (cos(phi/2 + theta_i) + cos(phi/2 + theta_j))
///           + eps^2 cos(theta_i + theta_j).
/// Brute-force reference objective for the two-angle optimization.
Scalar pairwise_objective(Scalar phi, Scalar eps, Scalar theta_i, Scalar theta_j);

/// Unit pair at angle phi embedded in R^n:
///   x1 = [cos(phi/2),  sin(phi/2), 0...],
///   x2 = [cos(phi/2), -sin(phi/2), 0...].
std::pair<Vec, Vec> planar_pair(Scalar phi, int n);

struct McReport {
  long trials = 0;
  long violations = 0;      // samples outside [bound_min - 1e-9, bound_max + 1e-9]
  Scalar empirical_max = 0;
  Scalar empirical_min = 0;
  Scalar bound_max = 0;
  Scalar bound_min = 0;
};

/// Monte Carlo check of noisy_inner_bounds: draws `trials` noise pairs
/// uniformly from the eps-ball in R^n around the planar pair at angle phi and
/// counts bound violations.
McReport mc_validate(Scalar phi, Scalar eps, long trials, std::uint64_t master_seed,
                     int n = 5);

}  // namespace ssc
