#pragma once

#include <cmath>
#include <cstdint>
#include <cstddef>
#include <numbers>
#include <vector>

#include "pll/errors.hpp"
#include "pll/linkbudget.hpp"

namespace pll {

// Counter-based generator: output is a mix of a strided counter, so streams
// derived from (seed, stream_id) are independent and reproducible regardless
// of scheduling. SplitMix64 mixing function.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static SplitMix64 stream(std::uint64_t seed, std::uint64_t stream_id) {
    SplitMix64 boot(seed ^ (0x9e3779b97f4a7c15ULL * (stream_id + 1)));
    return SplitMix64(boot.next_u64());
  }

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in (0, 1); never returns 0, so logs are safe.
  double next_double() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  double next_normal() {
    // Box-Muller, one value per call (the twin is discarded to keep the
    // stream position independent of call parity).
    const double u1 = next_double();
    const double u2 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
  }

  std::uint64_t next_poisson(double mean) {
    if (mean < 0.0) throw DomainError("next_poisson: negative mean");
    if (mean == 0.0) return 0;
    if (mean > 60.0) {
      // Split large means so the product method never underflows.
      const std::uint64_t half = next_poisson(mean * 0.5);
      return half + next_poisson(mean - mean * 0.5);
    }
    const double limit = std::exp(-mean);
    std::uint64_t k = 0;
    double prod = next_double();
    while (prod > limit) {
      ++k;
      prod *= next_double();
    }
    return k;
  }

 private:
  std::uint64_t state_;
};

// A Monte Carlo estimate with its standard error and provenance.
struct McEstimate {
  double value = 0.0;
  double std_err = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

using CountHistogram = std::vector<std::uint64_t>;

inline void merge_histogram(CountHistogram &into, const CountHistogram &from) {
  if (into.size() < from.size()) into.resize(from.size(), 0);
  for (std::size_t k = 0; k < from.size(); ++k) into[k] += from[k];
}

// Empirical Poisson photocount histogram, the sample-path model behind the
// multimode SIF statistics.
inline CountHistogram sample_sif_counts(double mean, std::uint64_t samples,
                                        std::uint64_t seed) {
  if (mean < 0.0) throw DomainError("sample_sif_counts: negative mean");
  SplitMix64 rng = SplitMix64::stream(seed, 0);
  CountHistogram hist;
  for (std::uint64_t i = 0; i < samples; ++i) {
    const std::uint64_t k = rng.next_poisson(mean);
    if (k >= hist.size()) hist.resize(k + 1, 0);
    ++hist[k];
  }
  return hist;
}

// Empirical photocount histogram behind a QPG filter: coherent amplitude
// sqrt(n_f) plus circular Gaussian noise of mean photon number n_n, then
// Poissonian photodetection of |amplitude|^2.
inline CountHistogram sample_qpg_counts(double n_f, double n_n,
                                        std::uint64_t samples,
                                        std::uint64_t seed) {
  if (n_f < 0.0 || n_n < 0.0) throw DomainError("sample_qpg_counts: negative argument");
  SplitMix64 rng = SplitMix64::stream(seed, 1);
  const double amp = std::sqrt(n_f);
  const double sigma = std::sqrt(n_n * 0.5);
  CountHistogram hist;
  for (std::uint64_t i = 0; i < samples; ++i) {
    const double re = amp + sigma * rng.next_normal();
    const double im = sigma * rng.next_normal();
    const std::uint64_t k = rng.next_poisson(re * re + im * im);
    if (k >= hist.size()) hist.resize(k + 1, 0);
    ++hist[k];
  }
  return hist;
}

inline McEstimate click_probability(const CountHistogram &hist,
                                    std::uint64_t seed) {
  std::uint64_t total = 0;
  for (auto n : hist) total += n;
  if (total == 0) throw DomainError("click_probability: empty histogram");
  const std::uint64_t clicks = total - (hist.empty() ? 0 : hist[0]);
  const double p = static_cast<double>(clicks) / static_cast<double>(total);
  McEstimate est;
  est.value = p;
  est.std_err = std::sqrt(p * (1.0 - p) / static_cast<double>(total));
  est.samples = total;
  est.seed = seed;
  return est;
}

// Plug-in mutual information estimate of the hard-decoding PPM channel,
// in PIE units (bits per photon). Decision rule: the clicked slot iff the
// frame contains exactly one click, otherwise an erasure.
//
// By symmetry only three outcome classes matter per frame: correct decode,
// wrong-slot decode, erasure.
inline McEstimate simulate_hard_frames(double n_s, double noise, std::size_t m,
                                       double n_f, NoiseModel model,
                                       std::uint64_t frames,
                                       std::uint64_t seed) {
  if (m < 2) throw DomainError("simulate_hard_frames: m must be >= 2");
  if (n_f < 0.0 || noise < 0.0)
    throw DomainError("simulate_hard_frames: negative argument");
  (void)n_s;  // n_f = m * n_s is the caller's contract
  SplitMix64 rng = SplitMix64::stream(seed, 2);

  const bool multimode = model == NoiseModel::Multimode;
  const double sigma = std::sqrt(noise * 0.5);
  const double pulse_amp = std::sqrt(n_f);
  auto slot_click = [&](bool pulse) {
    if (multimode) return rng.next_poisson((pulse ? n_f : 0.0) + noise) > 0;
    const double re = (pulse ? pulse_amp : 0.0) + sigma * rng.next_normal();
    const double im = sigma * rng.next_normal();
    return rng.next_poisson(re * re + im * im) > 0;
  };

  std::uint64_t n_correct = 0;
  std::uint64_t n_wrong = 0;
  for (std::uint64_t i = 0; i < frames; ++i) {
    // Uniform symbol; slot identity only matters through correct/wrong.
    std::uint64_t clicks = 0;
    bool pulse_clicked = false;
    for (std::size_t s = 0; s < m; ++s) {
      const bool click = slot_click(s == 0);
      if (click) {
        ++clicks;
        if (s == 0) pulse_clicked = true;
      }
      if (clicks > 1) break;  // already an erasure
    }
    if (clicks == 1) {
      if (pulse_clicked)
        ++n_correct;
      else
        ++n_wrong;
    }
  }

  // I(X;Y) of the symmetric channel with P(correct) = a, P(each wrong) =
  // b/(m-1) spread uniformly, P(erasure) = 1 - a - b.
  const double fd = static_cast<double>(frames);
  const double a = static_cast<double>(n_correct) / fd;
  const double b = static_cast<double>(n_wrong) / fd;
  const double md = static_cast<double>(m);
  const double b1 = b / (md - 1.0);                // per wrong slot
  const double ybar = (a + (md - 1.0) * b1) / md;  // marginal of each slot outcome
  auto term = [&](double z) { return z == 0.0 ? 0.0 : z * std::log2(z / ybar); };
  const double mi_bits = term(a) + (md - 1.0) * term(b1);

  // Delta-method error: MI is a smooth function of (a, b).
  const double eps = 1e-9;
  auto mi_of = [&](double aa, double bb) {
    const double bb1 = bb / (md - 1.0);
    const double yb = (aa + (md - 1.0) * bb1) / md;
    auto t = [&](double z) { return z <= 0.0 ? 0.0 : z * std::log2(z / yb); };
    return t(aa) + (md - 1.0) * t(bb1);
  };
  const double da = (mi_of(a + eps, b) - mi_of(a - eps, b)) / (2.0 * eps);
  const double dbv = (mi_of(a, b + eps) - mi_of(a, b - eps)) / (2.0 * eps);
  const double var = (da * da * a * (1.0 - a) + dbv * dbv * b * (1.0 - b) -
                      2.0 * da * dbv * a * b) /
                     fd;

  McEstimate est;
  est.value = mi_bits / n_f;
  est.std_err = std::sqrt(std::max(0.0, var)) / n_f;
  est.samples = frames;
  est.seed = seed;
  return est;
}

// Pearson chi-square statistic of a histogram against expected probabilities,
// pooling bins with expected count below min_expected into the tail.
// Returns {statistic, degrees of freedom}.
struct ChiSquare {
  double statistic = 0.0;
  std::size_t dof = 0;
};

inline ChiSquare chi_square_gof(const CountHistogram &hist,
                                const std::vector<double> &expected_prob,
                                double min_expected = 5.0) {
  std::uint64_t total = 0;
  for (auto n : hist) total += n;
  const double fd = static_cast<double>(total);

  double stat = 0.0;
  std::size_t bins = 0;
  double pool_obs = 0.0;
  double pool_exp = 0.0;
  const std::size_t kmax = std::max(hist.size(), expected_prob.size());
  for (std::size_t k = 0; k < kmax; ++k) {
    const double obs = k < hist.size() ? static_cast<double>(hist[k]) : 0.0;
    const double exp_n = fd * (k < expected_prob.size() ? expected_prob[k] : 0.0);
    if (exp_n >= min_expected) {
      stat += (obs - exp_n) * (obs - exp_n) / exp_n;
      ++bins;
    } else {
      pool_obs += obs;
      pool_exp += exp_n;
    }
  }
  if (pool_exp > 0.0) {
    stat += (pool_obs - pool_exp) * (pool_obs - pool_exp) / pool_exp;
    ++bins;
  }
  return {stat, bins > 1 ? bins - 1 : 0};
}

}  // namespace pll
