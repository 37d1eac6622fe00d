#include <doctest.h>

#include <cmath>

#include "pll/optimize.hpp"
#include "pll/ppmcore.hpp"
#include "pll/sweep.hpp"

using namespace pll;

TEST_CASE("quadratic objective") {
  const auto point = maximize_over_nf(
      [](double nf) { return -(nf - 3.0) * (nf - 3.0); }, 0.1, 100.0);
  CHECK(point.nf_star == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(point.pie_star == doctest::Approx(0.0).epsilon(1e-12));
  CHECK_FALSE(point.boundary_hit);
  CHECK(point.evaluations > 0);
}

TEST_CASE("monotone objective hits boundary") {
  // Noiseless PPM PIE at fixed M decreases in n_f, so the lower boundary wins.
  const auto point = maximize_over_nf(
      [](double nf) { return pie_ppm_noiseless(nf, 64.0); }, 1e-6, 10.0);
  CHECK(point.boundary_hit);
  CHECK(point.nf_star <= 1e-6 * 1.01);
}

TEST_CASE("infinite objective propagates") {
  const auto point = maximize_over_nf(
      [](double nf) { return kl_binary(1.0 - std::exp(-nf), 0.0) / nf; }, 0.1, 10.0);
  CHECK(is_infinite_result(point.pie_star));
}

TEST_CASE("nan objective throws") {
  CHECK_THROWS_AS(
      maximize_over_nf([](double) { return std::nan(""); }, 0.1, 10.0),
      ObjectiveError);
  CHECK_THROWS_AS(maximize_over_nf([](double nf) { return -nf; }, 1.0, 1.0),
                  DomainError);
}

TEST_CASE("soft on-off optimum matches brute-force scan") {
  // Frozen from an independent 1e6-point exhaustive scan over n_f.
  ChannelPoint channel{1e-4, NoiseModel::Multimode, 1e-3, 1};
  const auto point = maximize_over_nf(
      [&](double nf) { return pie_soft_bound(channel, nf); }, 1e-4, 1e3);
  CHECK(point.pie_star == doctest::Approx(5.853667419405718).epsilon(1e-6));
  CHECK(point.nf_star == doctest::Approx(0.42568).epsilon(1e-3));
}

TEST_CASE("local-max certificate") {
  ChannelPoint channel{1e-3, NoiseModel::Multimode, 1e-4, 1};
  auto objective = [&](double nf) { return pie_soft_bound(channel, nf); };
  const auto point = maximize_over_nf(objective, 1e-3, 1e3);
  if (!point.boundary_hit) {
    CHECK(point.pie_star >= objective(0.5 * point.nf_star));
    CHECK(point.pie_star >= objective(2.0 * point.nf_star));
  }
}

TEST_CASE("determinism") {
  ChannelPoint channel{1e-3, NoiseModel::SingleMode, 1e-4, 1};
  auto objective = [&](double nf) {
    return pie_soft_bound(channel, nf, DetectionMode::Pnr);
  };
  const auto a = maximize_over_nf(objective, 1e-3, 1e3);
  const auto b = maximize_over_nf(objective, 1e-3, 1e3);
  CHECK(a.nf_star == b.nf_star);
  CHECK(a.pie_star == b.pie_star);
}

TEST_CASE("sweep basics") {
  const std::vector<double> ns{1e-4, 1e-3, 1e-2};
  const std::vector<double> noise{1e-4, 1e-3, 1e-2};
  const SweepTable table = sweep(SweepModel::SifSoft, ns, noise, {1e-6, 1e2});
  REQUIRE(table.cells.size() == 9);

  // Degraded channel: PIE falls as noise rises at fixed n_s.
  for (std::size_t si = 0; si < ns.size(); ++si)
    for (std::size_t ni = 1; ni < noise.size(); ++ni)
      CHECK(table.cell(ni, si).point.pie_star <=
            table.cell(ni - 1, si).point.pie_star);

  // Eq.-consistency of the reported order.
  for (std::size_t ni = 0; ni < noise.size(); ++ni)
    for (std::size_t si = 0; si < ns.size(); ++si) {
      const auto &cell = table.cell(ni, si);
      CHECK(cell.error.empty());
      CHECK(cell.point.m_star * ns[si] ==
            doctest::Approx(cell.point.nf_star).epsilon(1e-12));
    }
}

TEST_CASE("sweep nf_star stays somewhat below one in the soft SIF regime") {
  const SweepTable table =
      sweep(SweepModel::SifSoft, {1e-2}, {1e-4}, {1e-6, 1e3});
  const auto &cell = table.cell(0, 0);
  CHECK(cell.point.nf_star > 0.1);
  CHECK(cell.point.nf_star < 1.5);
}

TEST_CASE("sweep pnr dominates onoff cell-wise") {
  const std::vector<double> ns{1e-5, 1e-4, 1e-3};
  const std::vector<double> noise{1e-4, 1e-3};
  const SweepTable onoff = sweep(SweepModel::QpgOnOff, ns, noise, {1e-6, 1e2});
  const SweepTable pnr = sweep(SweepModel::QpgPnr, ns, noise, {1e-6, 1e2});
  for (std::size_t i = 0; i < onoff.cells.size(); ++i)
    CHECK(pnr.cells[i].point.pie_star >=
          onoff.cells[i].point.pie_star * (1.0 - 1e-9));
}

TEST_CASE("sweep saturates below the noise floor") {
  // QPG on-off at n_n = 10^-7.25: PIE varies < 1% once n_s <= n_n / 10.
  const double nn = std::pow(10.0, -7.25);
  const std::vector<double> ns{nn / 1000.0, nn / 100.0, nn / 10.0};
  const SweepTable table = sweep(SweepModel::QpgOnOff, ns, {nn}, {1e-6, 1e3});
  for (const auto &cell : table.cells)
    CHECK(cell.point.pie_star == doctest::Approx(18.48).epsilon(0.01));
}

TEST_CASE("sweep thread count does not change results") {
  const std::vector<double> ns{1e-4, 1e-3};
  const std::vector<double> noise{1e-4, 1e-3};
  const SweepTable one = sweep(SweepModel::SifSoft, ns, noise, {1e-6, 1e2}, 1);
  const SweepTable four = sweep(SweepModel::SifSoft, ns, noise, {1e-6, 1e2}, 4);
  for (std::size_t i = 0; i < one.cells.size(); ++i) {
    CHECK(one.cells[i].point.nf_star == four.cells[i].point.nf_star);
    CHECK(one.cells[i].point.pie_star == four.cells[i].point.pie_star);
  }
}

TEST_CASE("sweep rejects unsorted grids and records cell errors") {
  CHECK_THROWS_AS(sweep(SweepModel::SifSoft, {1e-3, 1e-4}, {1e-3}, {}),
                  DomainError);
  // A cell whose M >= 1 clamp empties the n_f range records the error in place.
  const SweepTable table = sweep(SweepModel::SifSoft, {0.5}, {1e-3}, {1e-6, 0.1});
  CHECK_FALSE(table.cells[0].error.empty());
}
