#pragma once

#include <cmath>
#include <numbers>

#include "pll/errors.hpp"

namespace pll {

// Rate per slot together with the photon information efficiency (rate / n_s).
struct RatePie {
  double rate_per_slot = 0.0;  // bits per slot
  double pie = 0.0;            // bits per photon
};

inline constexpr double kLog2E = std::numbers::log2e;

// g(x) = (x+1) log2(x+1) - x log2 x, the entropy of a thermal state with
// mean photon number x. Continuous at 0 with g(0) = 0.
inline double g_thermal(double x) {
  if (x < 0.0) throw DomainError("g_thermal: argument must be >= 0");
  if (x == 0.0) return 0.0;
  if (x < 1e-300) return x * std::log2(std::numbers::e / x);
  return (x + 1.0) * std::log2(x + 1.0) - x * std::log2(x);
}

// Shannon-Hartley limit, single-quadrature (homodyne) detection.
inline RatePie shannon_s1(double n_s, double n_n) {
  if (n_s < 0.0 || n_n < 0.0) throw DomainError("shannon_s1: negative argument");
  RatePie out;
  out.rate_per_slot = 0.5 * std::log2(1.0 + 4.0 * n_s / (1.0 + 2.0 * n_n));
  out.pie = n_s > 0.0 ? out.rate_per_slot / n_s
                      : 2.0 / (1.0 + 2.0 * n_n) * kLog2E;
  return out;
}

// Shannon-Hartley limit, dual-quadrature (heterodyne) detection.
inline RatePie shannon_s2(double n_s, double n_n) {
  if (n_s < 0.0 || n_n < 0.0) throw DomainError("shannon_s2: negative argument");
  RatePie out;
  out.rate_per_slot = std::log2(1.0 + n_s / (1.0 + n_n));
  out.pie = n_s > 0.0 ? out.rate_per_slot / n_s : 1.0 / (1.0 + n_n) * kLog2E;
  return out;
}

// PIE upper bound in the n_s -> 0 limit, g'(n_n) = log2(1 + 1/n_n).
// Unbounded for n_n = 0, reported as +inf.
inline double gh_pie_asymptote(double n_n) {
  if (n_n < 0.0) throw DomainError("gh_pie_asymptote: negative noise");
  if (n_n == 0.0) return kInfiniteResult;
  return std::log2(1.0 + 1.0 / n_n);
}

// Gordon-Holevo capacity bound per slot and the implied PIE limit.
inline RatePie gordon_holevo(double n_s, double n_n) {
  if (n_s < 0.0 || n_n < 0.0) throw DomainError("gordon_holevo: negative argument");
  RatePie out;
  out.rate_per_slot = g_thermal(n_s + n_n) - g_thermal(n_n);
  out.pie = n_s > 0.0 ? out.rate_per_slot / n_s : gh_pie_asymptote(n_n);
  return out;
}

// Strong-background classical limit R = (P_rx / N) log2 e [bits/s].
inline double classical_rate_strong_noise(double p_rx_w, double noise_psd_w_per_hz) {
  if (noise_psd_w_per_hz <= 0.0)
    throw DomainError("classical_rate_strong_noise: noise PSD must be > 0");
  if (p_rx_w < 0.0) throw DomainError("classical_rate_strong_noise: negative power");
  return p_rx_w / noise_psd_w_per_hz * kLog2E;
}

}  // namespace pll
