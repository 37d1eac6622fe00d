#include <doctest.h>

#include <cmath>
#include <vector>

#include "pll/detstats.hpp"
#include "pll/mcoracle.hpp"
#include "pll/ppmcore.hpp"

using namespace pll;

namespace {

constexpr std::uint64_t kSeed = 20240817;

double click_fraction(const CountHistogram &hist) {
  std::uint64_t total = 0;
  for (auto n : hist) total += n;
  return static_cast<double>(total - hist[0]) / static_cast<double>(total);
}

// Upper chi-square quantile via the Wilson-Hilferty cube approximation.
double chi2_quantile(double dof, double z_upper) {
  const double k = dof;
  const double t = 1.0 - 2.0 / (9.0 * k) + z_upper * std::sqrt(2.0 / (9.0 * k));
  return k * t * t * t;
}

}  // namespace

TEST_CASE("streams are reproducible and independent") {
  const auto a = sample_sif_counts(0.8, 100000, kSeed);
  const auto b = sample_sif_counts(0.8, 100000, kSeed);
  const auto c = sample_sif_counts(0.8, 100000, kSeed + 1);
  CHECK(a == b);
  CHECK(a != c);
}

TEST_CASE("histogram merge is associative summation") {
  auto a = sample_sif_counts(1.0, 50000, kSeed);
  const auto b = sample_sif_counts(1.0, 50000, kSeed + 7);
  CountHistogram sum = a;
  merge_histogram(sum, b);
  std::uint64_t na = 0, nb = 0, ns = 0;
  for (auto v : a) na += v;
  for (auto v : b) nb += v;
  for (auto v : sum) ns += v;
  CHECK(ns == na + nb);
}

TEST_CASE("poisson sampler basics") {
  const auto zeros = sample_sif_counts(0.0, 1000, kSeed);
  REQUIRE(zeros.size() == 1);
  CHECK(zeros[0] == 1000);

  const std::uint64_t n = 1000000;
  const auto hist = sample_sif_counts(1.0, n, kSeed);
  const double p_click = click_fraction(hist);
  const double expected = 1.0 - 1.0 / std::exp(1.0);
  const double se = std::sqrt(expected * (1.0 - expected) / n);
  CHECK(std::abs(p_click - expected) < 3.0 * se);
}

TEST_CASE("large-mean poisson splitting keeps the mean") {
  const auto hist = sample_sif_counts(150.0, 200000, kSeed);
  double mean = 0.0;
  std::uint64_t total = 0;
  for (std::size_t k = 0; k < hist.size(); ++k) {
    mean += static_cast<double>(k) * static_cast<double>(hist[k]);
    total += hist[k];
  }
  mean /= static_cast<double>(total);
  const double se = std::sqrt(150.0 / static_cast<double>(total));
  CHECK(std::abs(mean - 150.0) < 3.0 * se);
}

TEST_CASE("sif click probabilities match analytics") {
  const double nf = 0.5, nb = 1.122e-4;
  const std::uint64_t n = 1000000;
  const auto stats = sif_stats(nf, nb);
  const auto pulse = sample_sif_counts(nf + nb, n, kSeed);
  const auto empty = sample_sif_counts(nb, n, kSeed + 1);
  const double se_p = std::sqrt(stats.p * (1.0 - stats.p) / n);
  const double se_q = std::sqrt(stats.q * (1.0 - stats.q) / n);
  CHECK(std::abs(click_fraction(pulse) - stats.p) < 3.0 * se_p);
  CHECK(std::abs(click_fraction(empty) - stats.q) < 3.0 * se_q);
}

TEST_CASE("qpg click probabilities match analytics") {
  const double nf = 2.0, nn = 0.1;
  const std::uint64_t n = 1000000;
  const auto stats = qpg_stats(nf, nn);
  const auto pulse = sample_qpg_counts(nf, nn, n, kSeed);
  const auto empty = sample_qpg_counts(0.0, nn, n, kSeed + 1);
  const double se_p = std::sqrt(stats.p * (1.0 - stats.p) / n);
  const double se_q = std::sqrt(stats.q * (1.0 - stats.q) / n);
  CHECK(std::abs(click_fraction(pulse) - stats.p) < 3.0 * se_p);
  CHECK(std::abs(click_fraction(empty) - stats.q) < 3.0 * se_q);

  // Thermal-only slots: P(0) = 1/(1+n_n), checked at n_n = 1.
  const auto thermal = sample_qpg_counts(0.0, 1.0, n, kSeed + 2);
  const double p0 = static_cast<double>(thermal[0]) / n;
  CHECK(std::abs(p0 - 0.5) < 3.0 * std::sqrt(0.25 / n));
}

TEST_CASE("qpg empirical mean is nf plus nn") {
  const double nf = 1.0, nn = 0.1;
  const std::uint64_t n = 1000000;
  const auto hist = sample_qpg_counts(nf, nn, n, kSeed);
  double mean = 0.0;
  for (std::size_t k = 0; k < hist.size(); ++k)
    mean += static_cast<double>(k) * static_cast<double>(hist[k]);
  mean /= static_cast<double>(n);
  // Variance of displaced thermal counts: mean + n_n(n_n + 2 n_f + 1).
  const double var = (nf + nn) + nn * (nn + 2.0 * nf + 1.0);
  CHECK(std::abs(mean - (nf + nn)) < 3.0 * std::sqrt(var / n));
}

TEST_CASE("pnr histogram matches the normalized displaced-thermal law") {
  const double nf = 1.0, nn = 0.1;
  const std::uint64_t n = 1000000;
  const auto analytic = pnr_stats(nf, nn);
  const auto hist = sample_qpg_counts(nf, nn, n, kSeed + 3);
  for (std::size_t k = 0; k < analytic.p_k.size(); ++k) {
    const double expect = static_cast<double>(n) * analytic.p_k[k];
    if (expect < 25.0) continue;
    const double obs = k < hist.size() ? static_cast<double>(hist[k]) : 0.0;
    const double se = std::sqrt(expect * (1.0 - analytic.p_k[k]));
    CAPTURE(k);
    CHECK(std::abs(obs - expect) < 3.0 * se);
  }
}

TEST_CASE("chi-square goodness of fit") {
  const std::uint64_t n = 1000000;
  struct Point {
    double nf, nn;
  };
  const std::vector<Point> grid{{0.0, 0.1}, {0.5, 0.01}, {1.0, 0.1}, {2.0, 1.0}};
  // Bonferroni across the grid at overall significance 1e-3.
  const double z = 3.6;  // upper quantile for ~1e-3 / 4 per test
  std::uint64_t seed = kSeed + 10;
  for (const auto &pt : grid) {
    CAPTURE(pt.nf);
    CAPTURE(pt.nn);
    const auto analytic = pnr_stats(pt.nf, pt.nn);
    const auto hist = sample_qpg_counts(pt.nf, pt.nn, n, seed++);
    const auto gof = chi_square_gof(hist, analytic.p_k);
    REQUIRE(gof.dof >= 1);
    CHECK(gof.statistic < chi2_quantile(static_cast<double>(gof.dof), z));
  }
}

TEST_CASE("hard frame simulator matches the analytic channel") {
  const double ns = 1e-3, nb = 1e-3;
  const std::size_t m = 64;
  const double nf = static_cast<double>(m) * ns;
  ChannelPoint channel{ns, NoiseModel::Multimode, nb, 1};
  const double analytic = pie_hard(channel, nf, m);
  const auto est =
      simulate_hard_frames(ns, nb, m, nf, NoiseModel::Multimode, 1000000, kSeed);
  CHECK(std::abs(est.value - analytic) < 3.0 * est.std_err);
  CHECK(est.std_err > 0.0);
  CHECK(est.samples == 1000000);
}

TEST_CASE("hard frame simulator noiseless reduction") {
  const double ns = 1e-2;
  const std::size_t m = 16;
  const double nf = static_cast<double>(m) * ns;
  const double p = 1.0 - std::exp(-nf);
  const double expected = p * std::log2(static_cast<double>(m)) / nf;
  const auto est =
      simulate_hard_frames(ns, 0.0, m, nf, NoiseModel::Multimode, 500000, kSeed);
  CHECK(std::abs(est.value - expected) < 3.0 * est.std_err);
}

TEST_CASE("hard frame simulator useless channel") {
  // n_f = 0 makes every slot identical; empirical MI must vanish.
  const auto est =
      simulate_hard_frames(0.0, 0.1, 2, 1e-12, NoiseModel::Multimode, 200000, kSeed);
  // MI in bits (undo the PIE scaling); only plug-in bias of order
  // outcomes/frames remains.
  CHECK(std::abs(est.value) * 1e-12 < 1e-4);
}

TEST_CASE("hard frame simulator single-mode model") {
  const double ns = 1e-3, nn = 1e-3;
  const std::size_t m = 32;
  const double nf = static_cast<double>(m) * ns;
  ChannelPoint channel{ns, NoiseModel::SingleMode, nn, 1};
  const double analytic = pie_hard(channel, nf, m);
  const auto est =
      simulate_hard_frames(ns, nn, m, nf, NoiseModel::SingleMode, 1000000, kSeed);
  CHECK(std::abs(est.value - analytic) < 3.0 * est.std_err);
}
