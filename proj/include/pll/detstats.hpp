#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "pll/errors.hpp"

namespace pll {

// Per-slot click probabilities: p for a slot carrying the pulse, q for an
// empty slot. For all receiver models here q <= p.
struct BinarySlotStats {
  double p = 0.0;
  double q = 0.0;
};

// Integer photocount distributions for a pulse slot (p_k) and an empty slot
// (q_k), truncated so that both missing tails are below tail_mass.
struct PnrSlotStats {
  std::vector<double> p_k;
  std::vector<double> q_k;
  std::size_t k_max = 0;
  double tail_mass = 0.0;
  bool noiseless = false;  // n_n = 0 degenerate case: q concentrated at k = 0
};

// Multimode SIF receiver: Poissonian counts from both pulse and background.
inline BinarySlotStats sif_stats(double n_f, double n_b) {
  if (n_f < 0.0 || n_b < 0.0) throw DomainError("sif_stats: negative argument");
  return {-std::expm1(-n_f - n_b), -std::expm1(-n_b)};
}

// Single-mode QPG receiver: coherent pulse embedded in thermal noise.
inline BinarySlotStats qpg_stats(double n_f, double n_n) {
  if (n_f < 0.0 || n_n < 0.0) throw DomainError("qpg_stats: negative argument");
  const double p = 1.0 - std::exp(-n_f / (1.0 + n_n)) / (1.0 + n_n);
  const double q = n_n / (1.0 + n_n);
  return {p, q};
}

inline constexpr double kDefaultTailTol = 1e-12;
inline constexpr std::size_t kPnrSupportCap = std::size_t{1} << 20;

// Photocount statistics of a PNR detector behind a QPG filter.
//
// Empty slot: Bose-Einstein, q_k = (1/(1+n_n)) (n_n/(1+n_n))^k.
// Pulse slot: displaced thermal law,
//   p_k = (n_n^k / (1+n_n)^(k+1)) exp(-n_f/(1+n_n)) L_k(-n_f/(n_n(1+n_n))),
// evaluated through the damped product t_k = (n_n/(1+n_n))^k L_k(-x) with the
// Laguerre three-term recurrence. At negative argument all recurrence terms
// are positive, so the evaluation is cancellation-mild; a running rescale
// tracked in log space keeps intermediates in range for large n_f/n_n.
inline PnrSlotStats pnr_stats(double n_f, double n_n,
                              double tail_tol = kDefaultTailTol) {
  if (n_f < 0.0 || n_n < 0.0) throw DomainError("pnr_stats: negative argument");
  if (!(tail_tol > 0.0 && tail_tol <= 1e-9))
    throw DomainError("pnr_stats: tail_tol must lie in (0, 1e-9]");

  PnrSlotStats out;
  out.tail_mass = tail_tol;

  if (n_n == 0.0) {
    // Degenerate: empty slots never click, pulse slots are Poissonian.
    out.noiseless = true;
    double term = std::exp(-n_f);
    double cum = 0.0;
    std::size_t k = 0;
    while (cum < 1.0 - tail_tol) {
      out.p_k.push_back(term);
      cum += term;
      ++k;
      if (k > kPnrSupportCap)
        throw TruncationError("pnr_stats: Poisson support cap exceeded");
      term *= n_f / static_cast<double>(k);
    }
    out.q_k.assign(out.p_k.size(), 0.0);
    out.q_k[0] = 1.0;
    out.k_max = out.p_k.size() - 1;
    return out;
  }

  const double r = n_n / (1.0 + n_n);          // geometric ratio of q_k
  const double x = n_f / (n_n * (1.0 + n_n));  // Laguerre argument magnitude
  const double log_c = -n_f / (1.0 + n_n) - std::log1p(n_n);

  // t_{k+1} = r((2k+1+x) t_k - k r t_{k-1}) / (k+1), all terms positive.
  double t_prev = 0.0;
  double t_cur = 1.0;
  double log_scale = 0.0;

  double qk = 1.0 / (1.0 + n_n);
  double p_cum = 0.0;
  double q_cum = 0.0;

  for (std::size_t k = 0;; ++k) {
    if (k > kPnrSupportCap)
      throw TruncationError("pnr_stats: support cap exceeded before tail tolerance");
    const double pk = t_cur * std::exp(log_c + log_scale);
    out.p_k.push_back(pk);
    out.q_k.push_back(qk);
    p_cum += pk;
    q_cum += qk;
    if (p_cum >= 1.0 - tail_tol && q_cum >= 1.0 - tail_tol) break;

    const double kd = static_cast<double>(k);
    double t_next = r * ((2.0 * kd + 1.0 + x) * t_cur - kd * r * t_prev) / (kd + 1.0);
    t_prev = t_cur;
    t_cur = t_next;
    if (t_cur > 1e250) {
      t_prev /= 1e250;
      t_cur /= 1e250;
      log_scale += std::log(1e250);
    }
    qk *= r;
  }
  out.k_max = out.p_k.size() - 1;
  return out;
}

// Collapse an integer photocount law to click/no-click.
inline BinarySlotStats binarize(const PnrSlotStats &stats) {
  return {1.0 - stats.p_k.at(0), 1.0 - stats.q_k.at(0)};
}

}  // namespace pll
