#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "pll/detstats.hpp"
#include "pll/errors.hpp"
#include "pll/linkbudget.hpp"
#include "pll/optimize.hpp"

namespace pll {

// A PPM frame: pulse energy n_f spread over m slots, n_f = m * n_s.
struct PpmFrame {
  double n_f = 0.0;
  double m = 1.0;  // continuous relaxation of the PPM order
  double n_s = 0.0;

  static PpmFrame from_order(double n_f, double m) { return {n_f, m, n_f / m}; }
};

// Noiseless PPM photon information efficiency, (1/n_f)(1 - e^{-n_f}) log2 m.
inline double pie_ppm_noiseless(double n_f, double m) {
  if (!(n_f > 0.0)) throw DomainError("pie_ppm_noiseless: n_f must be > 0");
  if (!(m >= 1.0)) throw DomainError("pie_ppm_noiseless: m must be >= 1");
  return -std::expm1(-n_f) / n_f * std::log2(m);
}

// Optimized noiseless PIE up to O(1): log2(1/n_s) - log2(ln(1/n_s)).
// Outer logs binary, inner log natural.
inline double pie_ppm_asymptotic(double n_s) {
  if (!(n_s > 0.0 && n_s < 1.0 / std::numbers::e))
    throw DomainError("pie_ppm_asymptotic: n_s must lie in (0, 1/e)");
  return std::log2(1.0 / n_s) - std::log2(std::log(1.0 / n_s));
}

// Approximate optimal pulse energy 2 / ln(2e/n_s) for the noiseless optimum.
inline double nf_star_approx(double n_s) {
  if (!(n_s > 0.0 && n_s < 1.0 / std::numbers::e))
    throw DomainError("nf_star_approx: n_s must lie in (0, 1/e)");
  return 2.0 / std::log(2.0 * std::numbers::e / n_s);
}

// Binary relative entropy D(x||y) in bits, with the 0 log 0 = 0 convention.
// Mismatched deterministic support gives +inf.
inline double kl_binary(double x, double y) {
  if (!(x >= 0.0 && x <= 1.0 && y >= 0.0 && y <= 1.0))
    throw DomainError("kl_binary: arguments must lie in [0, 1]");
  auto term = [](double a, double b) {
    if (a == 0.0) return 0.0;
    if (b == 0.0) return kInfiniteResult;
    return a * std::log2(a / b);
  };
  return term(x, y) + term(1.0 - x, 1.0 - y);
}

// Relative entropy in bits between two distributions on 0..k_max.
inline double kl_discrete(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) throw DomainError("kl_discrete: support mismatch");
  double sum = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] == 0.0) continue;
    if (q[k] == 0.0) return kInfiniteResult;
    sum += p[k] * std::log2(p[k] / q[k]);
  }
  return sum;
}

// D(p_k || q_k) against the geometric empty-slot law, with log q_k taken
// analytically so deep tails (where q_k underflows to 0) stay finite.
inline double kl_pnr_vs_thermal(const PnrSlotStats &stats, double n_n) {
  if (!(n_n > 0.0)) throw DomainError("kl_pnr_vs_thermal: n_n must be > 0");
  const double log2_q0 = -std::log2(1.0 + n_n);
  const double log2_r = std::log2(n_n) - std::log2(1.0 + n_n);
  double sum = 0.0;
  for (std::size_t k = 0; k < stats.p_k.size(); ++k) {
    const double pk = stats.p_k[k];
    if (pk == 0.0) continue;
    sum += pk * (std::log2(pk) - log2_q0 - static_cast<double>(k) * log2_r);
  }
  return sum;
}

enum class DetectionMode : std::uint8_t {
  OnOff,  // binary click / no-click statistics
  Pnr,    // photon number resolved statistics
};

namespace detail {

inline BinarySlotStats binary_slot_law(const ChannelPoint &channel, double n_f) {
  return channel.noise_model == NoiseModel::Multimode
             ? sif_stats(n_f, channel.noise)
             : qpg_stats(n_f, channel.noise);
}

}  // namespace detail

// Soft-decoding PIE lower bound: (1/n_f) D(p || w p + (1-w) q) with mixture
// weight w = n_s / n_f = 1/M. Works on binary or integer-valued slot laws.
inline double pie_soft_bound(const ChannelPoint &channel, double n_f,
                             DetectionMode mode = DetectionMode::OnOff) {
  channel.validate();
  if (!(n_f > 0.0)) throw DomainError("pie_soft_bound: n_f must be > 0");
  if (n_f < channel.n_s)
    throw DomainError("pie_soft_bound: n_f < n_s would mean M < 1");
  const double w = channel.n_s / n_f;

  if (mode == DetectionMode::OnOff) {
    const auto [p, q] = detail::binary_slot_law(channel, n_f);
    return kl_binary(p, w * p + (1.0 - w) * q) / n_f;
  }

  if (channel.noise_model != NoiseModel::SingleMode)
    throw DomainError("pie_soft_bound: PNR mode requires single-mode noise");
  const PnrSlotStats stats = pnr_stats(n_f, channel.noise);
  std::vector<double> mix(stats.p_k.size());
  for (std::size_t k = 0; k < mix.size(); ++k)
    mix[k] = w * stats.p_k[k] + (1.0 - w) * stats.q_k[k];
  return kl_discrete(stats.p_k, mix) / n_f;
}

// Hard-decoding PIE: exact mutual information of the channel that decodes a
// frame iff it contains exactly one count, treating everything else as an
// erasure. a = P(correct single click), b = P(single click in a wrong slot).
inline double pie_hard(const ChannelPoint &channel, double n_f, std::size_t m) {
  channel.validate();
  if (m < 2) throw DomainError("pie_hard: m must be >= 2");
  if (!(n_f > 0.0)) throw DomainError("pie_hard: n_f must be > 0");
  const auto [p, q] = detail::binary_slot_law(channel, n_f);
  const double md = static_cast<double>(m);
  const double a = p * std::pow(1.0 - q, md - 1.0);
  const double b = (1.0 - p) * q * std::pow(1.0 - q, md - 2.0);
  const double ybar = (a + (md - 1.0) * b) / md;
  if (ybar == 0.0) return 0.0;
  auto term = [&](double z) { return z == 0.0 ? 0.0 : z * std::log2(z / ybar); };
  return (term(a) + (md - 1.0) * term(b)) / n_f;
}

inline constexpr double kDefaultNfCap = 1e3;

// Infinite-bandwidth PIE limit: sup over n_f of (1/n_f) D(p || q), the
// n_s -> 0 limit of the soft-decoding bound. Zero noise with on/off
// statistics makes the divergence infinite (reported as +inf).
inline PpmOperatingPoint pie_unrestricted_bandwidth(
    NoiseModel noise_model, double noise, DetectionMode mode,
    double nf_cap = kDefaultNfCap) {
  if (noise < 0.0) throw DomainError("pie_unrestricted_bandwidth: negative noise");
  if (!(nf_cap > 0.0)) throw DomainError("pie_unrestricted_bandwidth: nf_cap must be > 0");
  if (mode == DetectionMode::Pnr && noise_model != NoiseModel::SingleMode)
    throw DomainError("pie_unrestricted_bandwidth: PNR requires single-mode noise");

  std::function<double(double)> objective;
  if (mode == DetectionMode::OnOff) {
    objective = [noise_model, noise](double nf) {
      const auto [p, q] = noise_model == NoiseModel::Multimode
                              ? sif_stats(nf, noise)
                              : qpg_stats(nf, noise);
      return kl_binary(p, q) / nf;
    };
  } else {
    if (!(noise > 0.0))
      throw DomainError("pie_unrestricted_bandwidth: PNR requires noise > 0");
    objective = [noise](double nf) {
      const PnrSlotStats stats = pnr_stats(nf, noise);
      return kl_pnr_vs_thermal(stats, noise) / nf;
    };
  }
  return maximize_over_nf(objective, 1e-6, nf_cap);
}

}  // namespace pll
