#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "ssc/types.hpp"

namespace ssc {

// Default tolerances. Entry points that make rank/symmetry decisions accept
// an override so callers can tighten or relax them.
namespace tol {
inline constexpr Scalar kOrtho = 1e-10;          // orthonormality / symmetry checks
inline constexpr Scalar kRankRel = 1e-10;        // rank decisions, relative to largest column norm
inline constexpr Scalar kLstsqResidual = 1e-9;   // normal-equation residual
inline constexpr Scalar kQuarticDegenerate = 1e-12;
inline constexpr Scalar kQuarticResidual = 1e-8;
inline constexpr Scalar kStationarity = 1e-8;    // first-order condition residual
}  // namespace tol

/// Orthonormal basis for the column span of `cols`. Columns whose component
/// outside the already-accepted span has norm below
/// `rank_rel_tol * max column norm` are dropped.
/// Throws std::invalid_argument("degenerate span") if nothing survives.
Mat orthonormalize(const Mat& cols, Scalar rank_rel_tol = tol::kRankRel);

/// Orthogonal split of v against an orthonormal basis: returns (v_par, v_perp)
/// with v_par in span(basis) and v_par + v_perp == v.
std::pair<Vec, Vec> project(const Mat& basis, const Vec& v);

/// Minimizer of ||A c - b||_2; minimum-norm solution when A is rank deficient.
Vec least_squares(const Mat& A, const Vec& b);

struct EigenPairs {
  Vec values;   // ascending
  Mat vectors;  // orthonormal columns, vectors.col(i) pairs with values(i)
};

/// Eigendecomposition of a symmetric matrix, eigenvalues ascending.
/// Throws if S is not symmetric within sym_tol (relative to its magnitude).
EigenPairs sym_eig(const Mat& S, Scalar sym_tol = tol::kOrtho);

/// c4 x^4 + c3 x^3 + c2 x^2 + c1 x + c0.
struct Quartic {
  Scalar c4 = 0, c3 = 0, c2 = 0, c1 = 0, c0 = 0;
  Scalar eval(Scalar x) const;
  Scalar deriv(Scalar x) const;
};

/// All real roots, sorted ascending, repeated according to multiplicity.
/// Leading coefficients with magnitude below tol::kQuarticDegenerate fall
/// through to cubic/quadratic/linear solving. Throws on the identically-zero
/// polynomial.
std::vector<Scalar> quartic_real_roots(const Quartic& q);

/// Deterministic counter-seeded random stream. Distinct stream indices give
/// statistically independent sequences; the same (seed, index) reproduces the
/// same sequence regardless of what other streams were drawn from.
class RngStream {
 public:
  RngStream(std::uint64_t master_seed, std::uint64_t stream_index);

  std::uint64_t next_u64();
  std::uint64_t uniform_index(std::uint64_t bound);  // in [0, bound)
  Scalar uniform();                                  // in [0, 1)
  Scalar normal();                                   // standard Gaussian

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  Scalar spare_ = 0;
};

/// 64-bit seed derived from (master, a, b); used to hand child components
/// their own master seeds.
std::uint64_t derived_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b = 0);

/// Uniform sample on the unit sphere of R^n.
Vec sample_unit_sphere(RngStream& stream, int n);

/// Uniform sample from the closed eps-ball of R^n
/// (direction uniform, radius eps * u^{1/n}).
Vec sample_ball(RngStream& stream, int n, Scalar eps);

}  // namespace ssc
