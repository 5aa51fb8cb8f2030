#include "ssc/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace ssc {

Mat orthonormalize(const Mat& cols, Scalar rank_rel_tol) {
  if (cols.cols() == 0 || cols.rows() == 0)
    throw std::invalid_argument("degenerate span");
  const Scalar max_norm = cols.colwise().norm().maxCoeff();
  if (max_norm == 0) throw std::invalid_argument("degenerate span");
  const Scalar drop_tol = rank_rel_tol * max_norm;

  // Modified Gram-Schmidt with one reorthogonalization pass.
  Mat Q(cols.rows(), cols.cols());
  Index accepted = 0;
  for (Index j = 0; j < cols.cols(); ++j) {
    Vec v = cols.col(j);
    for (int pass = 0; pass < 2; ++pass)
      for (Index k = 0; k < accepted; ++k) v -= Q.col(k).dot(v) * Q.col(k);
    const Scalar nv = v.norm();
    if (nv <= drop_tol) continue;
    Q.col(accepted++) = v / nv;
  }
  if (accepted == 0) throw std::invalid_argument("degenerate span");
  return Q.leftCols(accepted);
}

std::pair<Vec, Vec> project(const Mat& basis, const Vec& v) {
  Vec v_par = basis * (basis.transpose() * v);
  Vec v_perp = v - v_par;
  return {std::move(v_par), std::move(v_perp)};
}

Vec least_squares(const Mat& A, const Vec& b) {
  if (A.cols() == 0) throw std::invalid_argument("least_squares: empty matrix");
  return A.completeOrthogonalDecomposition().solve(b);
}

EigenPairs sym_eig(const Mat& S, Scalar sym_tol) {
  if (S.rows() != S.cols()) throw std::invalid_argument("sym_eig: matrix not square");
  const Scalar scale = std::max<Scalar>(1.0, S.cwiseAbs().maxCoeff());
  if ((S - S.transpose()).cwiseAbs().maxCoeff() > sym_tol * scale)
    throw std::invalid_argument("sym_eig: matrix not symmetric");
  Eigen::SelfAdjointEigenSolver<Mat> es(S);
  if (es.info() != Eigen::Success) throw std::runtime_error("sym_eig: solver failed");
  return {es.eigenvalues(), es.eigenvectors()};
}

Scalar Quartic::eval(Scalar x) const {
  return (((c4 * x + c3) * x + c2) * x + c1) * x + c0;
}

Scalar Quartic::deriv(Scalar x) const {
  return ((4 * c4 * x + 3 * c3) * x + 2 * c2) * x + c1;
}

namespace {

using Cplx = std::complex<Scalar>;

Cplx poly_eval(const std::vector<Scalar>& c, Cplx x) {
  Cplx v = c[0];
  for (std::size_t i = 1; i < c.size(); ++i) v = v * x + c[i];
  return v;
}

Cplx poly_deriv_eval(const std::vector<Scalar>& c, Cplx x) {
  const auto deg = static_cast<Scalar>(c.size() - 1);
  Cplx v = c[0] * deg;
  for (std::size_t i = 1; i + 1 < c.size(); ++i)
    v = v * x + c[i] * static_cast<Scalar>(c.size() - 1 - i);
  return v;
}

// Newton in complex arithmetic; converges into multiple roots as well,
// which is what separates a genuinely real double root from a conjugate
// pair straddling the axis.
Cplx polish_root(const std::vector<Scalar>& c, Cplx x) {
  Cplx best = x;
  Scalar best_abs = std::abs(poly_eval(c, x));
  for (int it = 0; it < 60; ++it) {
    const Cplx p = poly_eval(c, x);
    const Cplx dp = poly_deriv_eval(c, x);
    if (std::abs(dp) < 1e-300) break;
    const Cplx step = p / dp;
    x -= step;
    const Scalar ax = std::abs(poly_eval(c, x));
    if (ax < best_abs) {
      best_abs = ax;
      best = x;
    }
    if (std::abs(step) < 1e-16 * std::max<Scalar>(1.0, std::abs(x))) break;
  }
  return best;
}

// Roots of the monic-normalizable polynomial c[0] x^deg + ... + c[deg] via
// companion-matrix eigenvalues plus Newton polish.
std::vector<Scalar> poly_real_roots(std::vector<Scalar> c, Scalar residual_tol) {
  const int deg = static_cast<int>(c.size()) - 1;
  Mat companion = Mat::Zero(deg, deg);
  for (int i = 0; i < deg - 1; ++i) companion(i + 1, i) = 1.0;
  for (int i = 0; i < deg; ++i) companion(i, deg - 1) = -c[deg - i] / c[0];
  Eigen::EigenSolver<Mat> es(companion);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("quartic_real_roots: eigensolver failed");

  const Scalar cmax = *std::max_element(c.begin(), c.end(), [](Scalar a, Scalar b) {
    return std::abs(a) < std::abs(b);
  });
  std::vector<Scalar> roots;
  for (int i = 0; i < deg; ++i) {
    const Cplx z = polish_root(c, es.eigenvalues()(i));
    if (std::abs(z.imag()) > 1e-9 * std::max<Scalar>(1.0, std::abs(z.real()))) continue;
    const Scalar x = z.real();
    const Scalar bound =
        residual_tol * std::max<Scalar>(1.0, std::abs(cmax) * std::pow(std::abs(x), deg));
    if (std::abs(poly_eval(c, Cplx(x, 0))) <= bound) roots.push_back(x);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace

std::vector<Scalar> quartic_real_roots(const Quartic& q) {
  std::vector<Scalar> c{q.c4, q.c3, q.c2, q.c1, q.c0};
  while (!c.empty() && std::abs(c.front()) < tol::kQuarticDegenerate) c.erase(c.begin());
  if (c.empty()) throw std::invalid_argument("quartic_real_roots: zero polynomial");
  const int deg = static_cast<int>(c.size()) - 1;
  if (deg == 0) return {};  // nonzero constant
  if (deg == 1) return {-c[1] / c[0]};
  if (deg == 2) {
    const Scalar a = c[0], b = c[1], d = c[2];
    const Scalar disc = b * b - 4 * a * d;
    if (disc < 0) return {};
    // Stable quadratic: avoid cancellation in the smaller root.
    const Scalar s = std::sqrt(disc);
    const Scalar qq = -0.5 * (b + (b >= 0 ? s : -s));
    Scalar r1 = qq / a;
    Scalar r2 = (qq != 0) ? d / qq : -b / a - r1;
    if (r1 > r2) std::swap(r1, r2);
    return {r1, r2};
  }
  return poly_real_roots(std::move(c), tol::kQuarticResidual);
}

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97f4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t derived_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = master;
  std::uint64_t h = splitmix64(s);
  s = h ^ a;
  h = splitmix64(s);
  s = h ^ b;
  return splitmix64(s);
}

RngStream::RngStream(std::uint64_t master_seed, std::uint64_t stream_index)
    : engine_(derived_seed(master_seed, stream_index)) {}

std::uint64_t RngStream::next_u64() { return engine_(); }

std::uint64_t RngStream::uniform_index(std::uint64_t bound) {
  return bound == 0 ? 0 : next_u64() % bound;
}

Scalar RngStream::uniform() {
  return static_cast<Scalar>(next_u64() >> 11) * 0x1.0p-53;
}

Scalar RngStream::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  const Scalar u1 = uniform();
  const Scalar u2 = uniform();
  const Scalar r = std::sqrt(-2.0 * std::log1p(-u1));
  const Scalar a = kTwoPi * u2;
  spare_ = r * std::sin(a);
  have_spare_ = true;
  return r * std::cos(a);
}

Vec sample_unit_sphere(RngStream& stream, int n) {
  if (n < 1) throw std::invalid_argument("sample_unit_sphere: n must be >= 1");
  Vec x(n);
  for (;;) {
    for (int i = 0; i < n; ++i) x(i) = stream.normal();
    const Scalar nx = x.norm();
    if (nx > 1e-100) return x / nx;
  }
}

Vec sample_ball(RngStream& stream, int n, Scalar eps) {
  if (eps < 0) throw std::invalid_argument("sample_ball: eps must be >= 0");
  if (eps == 0) return Vec::Zero(n);
  Vec dir = sample_unit_sphere(stream, n);
  const Scalar radius = eps * std::pow(stream.uniform(), 1.0 / n);
  return radius * dir;
}

}  // namespace ssc
