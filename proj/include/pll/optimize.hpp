#pragma once

#include <cmath>
#include <cstddef>
#include <functional>

#include "pll/errors.hpp"

namespace pll {

// Result of a one-dimensional PIE maximization over the pulse energy n_f.
struct PpmOperatingPoint {
  double nf_star = 0.0;    // maximizing pulse energy [photons]
  double m_star = 0.0;     // PPM order n_f / n_s (continuous); 0 when n_s unknown
  double pie_star = 0.0;   // bits per photon at the maximum
  bool boundary_hit = false;
  std::size_t evaluations = 0;
};

inline constexpr std::size_t kCoarseScanPoints = 240;
inline constexpr double kDefaultNfRelTol = 1e-10;

// Maximize a PIE objective over n_f in [lo, hi]: coarse log-spaced scan to
// locate the best bracket, then golden-section refinement. Deterministic.
// An objective value of +inf propagates as an infinite result; NaN throws.
inline PpmOperatingPoint maximize_over_nf(
    const std::function<double(double)> &objective, double lo, double hi,
    double rel_tol = kDefaultNfRelTol,
    std::size_t coarse_points = kCoarseScanPoints) {
  if (!(lo > 0.0 && hi > lo)) throw DomainError("maximize_over_nf: need 0 < lo < hi");
  if (coarse_points < 3) throw DomainError("maximize_over_nf: need >= 3 scan points");

  PpmOperatingPoint out;
  auto eval = [&](double nf) {
    const double v = objective(nf);
    ++out.evaluations;
    if (std::isnan(v)) throw ObjectiveError("maximize_over_nf: objective returned NaN");
    return v;
  };

  const double log_lo = std::log(lo);
  const double log_hi = std::log(hi);
  double best_v = -kInfiniteResult;
  std::size_t best_i = 0;
  for (std::size_t i = 0; i < coarse_points; ++i) {
    const double nf = std::exp(log_lo + (log_hi - log_lo) * static_cast<double>(i) /
                                            static_cast<double>(coarse_points - 1));
    const double v = eval(nf);
    if (v == kInfiniteResult) {
      out.nf_star = nf;
      out.pie_star = kInfiniteResult;
      return out;
    }
    if (v > best_v) {
      best_v = v;
      best_i = i;
    }
  }

  auto grid_nf = [&](std::size_t i) {
    return std::exp(log_lo + (log_hi - log_lo) * static_cast<double>(i) /
                                 static_cast<double>(coarse_points - 1));
  };
  double a = grid_nf(best_i == 0 ? 0 : best_i - 1);
  double b = grid_nf(best_i + 1 >= coarse_points ? coarse_points - 1 : best_i + 1);

  // Golden-section on [a, b]; keeps the better interior point each step.
  constexpr double invphi = 0.6180339887498949;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = eval(x1);
  double f2 = eval(x2);
  while (b - a > rel_tol * (std::abs(a) + std::abs(b))) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = eval(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = eval(x1);
    }
  }
  const double nf_star = 0.5 * (a + b);
  const double pie_ref = eval(nf_star);
  out.nf_star = nf_star;
  out.pie_star = std::max({pie_ref, f1, f2, best_v});
  out.boundary_hit = nf_star <= lo * 1.01 || nf_star >= hi * 0.99;
  return out;
}

}  // namespace pll
