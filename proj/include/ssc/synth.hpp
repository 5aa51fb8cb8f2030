#pragma once

#include <cstdint>
#include <vector>

#include "ssc/geometry.hpp"
#include "ssc/numerics.hpp"
#include "ssc/types.hpp"

namespace ssc {

/// Ground-truth generator settings: L subspaces of identical dimension d in
/// R^n with every pairwise affinity equal to rho, N_l unit-sphere samples per
/// subspace, noise uniform in the closed epsilon-ball.
struct SynthSpec {
  int n = 100;
  int d = 20;
  int L = 3;
  Scalar rho = 0.5;   // in [0, 1)
  int N_l = 150;
  Scalar epsilon = 0.0;
  std::uint64_t master_seed = 1;
};

void validate_spec(const SynthSpec& spec);  // n >= d (L + 1), d >= 1, L >= 2, rho < 1

/// Equal-affinity construction: a shared orthonormal block mixed into L
/// mutually orthogonal blocks at angle alpha with cos^2(alpha) = rho, drawn
/// inside a seeded random orthonormal frame. Every pairwise affinity equals
/// rho and every principal angle equals arccos(rho); the achieved affinity is
/// verified to 1e-10 before returning.
std::vector<SubspaceModel> gen_subspaces(const SynthSpec& spec);

/// N_l points uniform on the unit sphere of the subspace (U g / ||g||).
Mat gen_points(const SubspaceModel& model, int N_l, RngStream& stream);

/// y_i = x_i + e_i with e_i uniform in the closed eps-ball; no renormalizing.
Mat add_noise(const Mat& X, Scalar eps, RngStream& stream);

struct SynthResult {
  DataSet data;
  std::vector<SubspaceModel> models;
};

/// Full pipeline: subspaces, per-cluster points, noise, labels {1..L}.
/// Bit-identical output for identical specs.
SynthResult make_dataset(const SynthSpec& spec);

}  // namespace ssc
