#include "ssc/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "ssc/numerics.hpp"

namespace ssc {

Scalar f_eval(Scalar phi, Scalar eps, Scalar theta) {
  return 2.0 * eps * std::cos(phi / 2 + theta) + eps * eps * std::cos(2 * theta);
}

Scalar f_stationarity(Scalar phi, Scalar eps, Scalar theta) {
  return std::sin(phi / 2 + theta) + eps * std::sin(2 * theta);
}

namespace {

constexpr Scalar kTanSingularWindow = 0.05;  // around phi = pi/2

Scalar wrap_angle(Scalar theta) {
  theta = std::fmod(theta, kTwoPi);
  return theta < 0 ? theta + kTwoPi : theta;
}

void check_domain(Scalar phi, Scalar eps) {
  if (!(phi > 0 && phi < kPi / 2))
    throw std::invalid_argument("f_extremes: phi must lie in (0, pi/2)");
  if (!(eps >= 0)) throw std::invalid_argument("f_extremes: eps must be >= 0");
}

ExtremalResult select_extremes(Scalar phi, Scalar eps, const std::vector<Scalar>& thetas,
                               ExtremalMethod method) {
  ExtremalResult res;
  res.method = method;
  bool first = true;
  for (Scalar t : thetas) {
    const Scalar v = f_eval(phi, eps, t);
    if (first || v > res.f_max) {
      res.f_max = v;
      res.theta_max = t;
    }
    if (first || v < res.f_min) {
      res.f_min = v;
      res.theta_min = t;
    }
    first = false;
  }
  return res;
}

// Stationary angles recovered from the degree-4 reduction: with
// a = theta/2 - phi/4 and E = (1 - eps) / (1 + eps), stationarity becomes
//   E tan(phi) x^4 + (1 - 3E) x^3 + 3 tan(phi) (1 - E) x^2 + (E - 3) x - tan(phi) = 0
// at x = tan(a), so theta = 2 atan(x) + phi/2. The substitution cannot express
// a = pi/2, so theta = pi + phi/2 is screened as an extra candidate.
std::vector<Scalar> quartic_candidates(Scalar phi, Scalar eps) {
  const Scalar t = std::tan(phi);
  const Scalar E = (1.0 - eps) / (1.0 + eps);
  const Quartic g{E * t, 1.0 - 3.0 * E, 3.0 * t * (1.0 - E), E - 3.0, -t};
  std::vector<Scalar> thetas;
  for (Scalar x : quartic_real_roots(g))
    thetas.push_back(wrap_angle(2.0 * std::atan(x) + phi / 2));
  thetas.push_back(wrap_angle(kPi + phi / 2));
  std::vector<Scalar> verified;
  for (Scalar th : thetas)
    if (std::abs(f_stationarity(phi, eps, th)) <= tol::kStationarity)
      verified.push_back(th);
  return verified;
}

Scalar bisect_stationarity(Scalar phi, Scalar eps, Scalar lo, Scalar hi) {
  Scalar flo = f_stationarity(phi, eps, lo);
  for (int it = 0; it < 90 && hi - lo > 1e-15; ++it) {
    const Scalar mid = 0.5 * (lo + hi);
    const Scalar fmid = f_stationarity(phi, eps, mid);
    if (fmid == 0) return mid;
    if ((flo < 0) == (fmid < 0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Golden-section refinement of an extremum bracketed on [lo, hi];
// sign = +1 maximizes, -1 minimizes.
Scalar golden_refine(Scalar phi, Scalar eps, Scalar lo, Scalar hi, int sign) {
  constexpr Scalar kInvPhi = 0.6180339887498949;
  Scalar a = lo, b = hi;
  Scalar c = b - kInvPhi * (b - a);
  Scalar d = a + kInvPhi * (b - a);
  Scalar fc = sign * f_eval(phi, eps, c);
  Scalar fd = sign * f_eval(phi, eps, d);
  while (b - a > 1e-13) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = sign * f_eval(phi, eps, c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = sign * f_eval(phi, eps, d);
    }
  }
  return 0.5 * (a + b);
}

std::vector<Scalar> bracketed_candidates(Scalar phi, Scalar eps, int brackets) {
  const Scalar h = kTwoPi / brackets;
  std::vector<Scalar> thetas;
  Scalar prev = f_stationarity(phi, eps, 0.0);
  Scalar best_max = -1e300, best_min = 1e300;
  int arg_max = 0, arg_min = 0;
  for (int k = 0; k <= brackets; ++k) {
    const Scalar th = k * h;
    const Scalar fv = f_eval(phi, eps, th);
    if (fv > best_max) {
      best_max = fv;
      arg_max = k;
    }
    if (fv < best_min) {
      best_min = fv;
      arg_min = k;
    }
    if (k == 0) continue;
    const Scalar cur = f_stationarity(phi, eps, th);
    if (prev == 0) thetas.push_back(wrap_angle((k - 1) * h));
    else if ((prev < 0) != (cur < 0))
      thetas.push_back(wrap_angle(bisect_stationarity(phi, eps, (k - 1) * h, th)));
    prev = cur;
  }
  // Direct grid extremes, golden-refined, as a safety net for any root the
  // sign scan cannot bracket.
  thetas.push_back(wrap_angle(
      golden_refine(phi, eps, (arg_max - 1) * h, (arg_max + 1) * h, +1)));
  thetas.push_back(wrap_angle(
      golden_refine(phi, eps, (arg_min - 1) * h, (arg_min + 1) * h, -1)));
  return thetas;
}

}  // namespace

ExtremalResult f_extremes(Scalar phi, Scalar eps, ExtremalMethod method) {
  check_domain(phi, eps);
  if (method == ExtremalMethod::quartic) {
    if (std::abs(phi - kPi / 2) >= kTanSingularWindow) {
      const std::vector<Scalar> cands = quartic_candidates(phi, eps);
      if (!cands.empty()) {
        ExtremalResult res = select_extremes(phi, eps, cands, ExtremalMethod::quartic);
        // A complete stationary set must straddle zero (f has zero mean).
        if (eps == 0 || (res.f_max >= -1e-12 && res.f_min <= 1e-12)) return res;
      }
    }
    method = ExtremalMethod::bracketed_1d;
  }
  return select_extremes(phi, eps, bracketed_candidates(phi, eps, 4096),
                         ExtremalMethod::bracketed_1d);
}

ExtremalResult f_extremes(Scalar phi, Scalar eps) {
  return f_extremes(phi, eps, ExtremalMethod::quartic);
}

ExtremalResult f_extremes_grid(Scalar phi, Scalar eps, long grid_points) {
  check_domain(phi, eps);
  const Scalar h = kTwoPi / static_cast<Scalar>(grid_points);
  Scalar best_max = -1e300, best_min = 1e300;
  long arg_max = 0, arg_min = 0;
  for (long k = 0; k < grid_points; ++k) {
    const Scalar v = f_eval(phi, eps, k * h);
    if (v > best_max) {
      best_max = v;
      arg_max = k;
    }
    if (v < best_min) {
      best_min = v;
      arg_min = k;
    }
  }
  ExtremalResult res;
  res.method = ExtremalMethod::bracketed_1d;
  res.theta_max =
      wrap_angle(golden_refine(phi, eps, (arg_max - 1) * h, (arg_max + 1) * h, +1));
  res.theta_min =
      wrap_angle(golden_refine(phi, eps, (arg_min - 1) * h, (arg_min + 1) * h, -1));
  res.f_max = f_eval(phi, eps, res.theta_max);
  res.f_min = f_eval(phi, eps, res.theta_min);
  return res;
}

std::pair<Scalar, Scalar> noisy_inner_bounds(Scalar c, Scalar eps) {
  if (!(c > 0 && c < 1)) throw std::invalid_argument("lemma hypothesis violated");
  const ExtremalResult ext = f_extremes(std::acos(c), eps);
  return {c + ext.f_max, c + ext.f_min};
}

Scalar pairwise_objective(Scalar phi, Scalar eps, Scalar theta_i, Scalar theta_j) {
  return std::cos(phi) +
         eps * (std::cos(phi / 2 + theta_i) + std::cos(phi / 2 + theta_j)) +
         eps * eps * std::cos(theta_i + theta_j);
}

std::pair<Vec, Vec> planar_pair(Scalar phi, int n) {
  if (n < 2) throw std::invalid_argument("planar_pair: n must be >= 2");
  if (!(phi > 0 && phi < kPi / 2))
    throw std::invalid_argument("planar_pair: phi must lie in (0, pi/2)");
  Vec x1 = Vec::Zero(n), x2 = Vec::Zero(n);
  x1(0) = std::cos(phi / 2);
  x1(1) = std::sin(phi / 2);
  x2(0) = x1(0);
  x2(1) = -x1(1);
  return {std::move(x1), std::move(x2)};
}

McReport mc_validate(Scalar phi, Scalar eps, long trials, std::uint64_t master_seed,
                     int n) {
  if (trials < 1) throw std::invalid_argument("mc_validate: trials must be >= 1");
  const auto [x1, x2] = planar_pair(phi, n);
  const auto [upper, lower] = noisy_inner_bounds(std::cos(phi), eps);
  McReport report;
  report.trials = trials;
  report.bound_max = upper;
  report.bound_min = lower;
  report.empirical_max = -1e300;
  report.empirical_min = 1e300;
  for (long t = 0; t < trials; ++t) {
    RngStream stream(master_seed, static_cast<std::uint64_t>(t));
    const Vec e1 = sample_ball(stream, n, eps);
    const Vec e2 = sample_ball(stream, n, eps);
    const Scalar ip = (x1 + e1).dot(x2 + e2);
    report.empirical_max = std::max(report.empirical_max, ip);
    report.empirical_min = std::min(report.empirical_min, ip);
    if (ip > upper + 1e-9 || ip < lower - 1e-9) ++report.violations;
  }
  return report;
}

}  // namespace ssc
