#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <thread>
#include <vector>

#include "pll/errors.hpp"
#include "pll/ppmcore.hpp"

namespace pll {

enum class SweepModel : std::uint8_t {
  SifHard,   // multimode noise, single-click hard decoding
  SifSoft,   // multimode noise, soft-decoding KL bound
  QpgOnOff,  // single-mode noise, on/off soft bound
  QpgPnr,    // single-mode noise, PNR soft bound
};

inline const char *to_string(SweepModel model) {
  switch (model) {
    case SweepModel::SifHard: return "SIF_HARD";
    case SweepModel::SifSoft: return "SIF_SOFT";
    case SweepModel::QpgOnOff: return "QPG_ONOFF";
    case SweepModel::QpgPnr: return "QPG_PNR";
  }
  return "?";
}

inline NoiseModel noise_model_of(SweepModel model) {
  return (model == SweepModel::SifHard || model == SweepModel::SifSoft)
             ? NoiseModel::Multimode
             : NoiseModel::SingleMode;
}

// One optimized cell; error text is recorded in place so a sweep never aborts.
struct SweepCell {
  PpmOperatingPoint point;
  bool m_clamped = false;  // unconstrained optimum would have needed M < 1
  std::string error;
};

// Rectangular grid of per-cell n_f optimizations, row-major over
// (noise index, n_s index).
struct SweepTable {
  SweepModel model = SweepModel::SifSoft;
  std::vector<double> ns_grid;
  std::vector<double> noise_grid;
  std::vector<SweepCell> cells;

  SweepCell &cell(std::size_t noise_i, std::size_t ns_i) {
    return cells[noise_i * ns_grid.size() + ns_i];
  }
  const SweepCell &cell(std::size_t noise_i, std::size_t ns_i) const {
    return cells[noise_i * ns_grid.size() + ns_i];
  }
};

struct NfRange {
  double lo = 1e-6;
  double hi = kDefaultNfCap;
};

namespace detail {

inline std::function<double(double)> sweep_objective(SweepModel model,
                                                     double n_s, double noise) {
  ChannelPoint channel{n_s, noise_model_of(model), noise, 1};
  switch (model) {
    case SweepModel::SifHard:
      return [channel, n_s](double nf) {
        const auto m = static_cast<std::size_t>(
            std::max(2.0, std::round(nf / n_s)));
        return pie_hard(channel, nf, m);
      };
    case SweepModel::SifSoft:
      return [channel](double nf) {
        return pie_soft_bound(channel, nf, DetectionMode::OnOff);
      };
    case SweepModel::QpgOnOff:
      return [channel](double nf) {
        return pie_soft_bound(channel, nf, DetectionMode::OnOff);
      };
    case SweepModel::QpgPnr:
      return [channel](double nf) {
        return pie_soft_bound(channel, nf, DetectionMode::Pnr);
      };
  }
  throw DomainError("sweep_objective: unknown model");
}

// The rounded-M hard objective is a dense staircase in n_f, so a single
// golden-section pass can settle one step away from the true maximum.
// Re-optimize within each integer-order step near the candidate.
inline PpmOperatingPoint refine_hard_steps(const ChannelPoint &channel,
                                           double n_s, double lo, double hi,
                                           PpmOperatingPoint point) {
  constexpr long kStepWindow = 64;
  const long m_center = std::lround(point.nf_star / n_s);
  for (long m = std::max<long>(2, m_center - kStepWindow);
       m <= m_center + kStepWindow; ++m) {
    const double step_lo = std::max(lo, (static_cast<double>(m) - 0.5) * n_s);
    const double step_hi = std::min(hi, (static_cast<double>(m) + 0.5) * n_s);
    if (!(step_lo < step_hi)) continue;
    const auto local = maximize_over_nf(
        [&](double nf) {
          return pie_hard(channel, nf, static_cast<std::size_t>(m));
        },
        step_lo, step_hi, kDefaultNfRelTol, 8);
    point.evaluations += local.evaluations;
    if (local.pie_star > point.pie_star) {
      point.pie_star = local.pie_star;
      point.nf_star = local.nf_star;
      point.boundary_hit = local.nf_star <= lo * 1.01 || local.nf_star >= hi * 0.99;
    }
  }
  return point;
}

}  // namespace detail

inline SweepCell optimize_cell(SweepModel model, double n_s, double noise,
                               NfRange range) {
  SweepCell cell;
  double lo = range.lo;
  if (lo < n_s) {  // enforce M >= 1
    lo = n_s;
    cell.m_clamped = true;
  }
  try {
    if (!(lo < range.hi))
      throw DomainError("optimize_cell: empty n_f range after M >= 1 clamp");
    cell.point = maximize_over_nf(detail::sweep_objective(model, n_s, noise),
                                  lo, range.hi);
    if (model == SweepModel::SifHard && !is_infinite_result(cell.point.pie_star)) {
      ChannelPoint channel{n_s, NoiseModel::Multimode, noise, 1};
      cell.point =
          detail::refine_hard_steps(channel, n_s, lo, range.hi, cell.point);
    }
    cell.point.m_star = cell.point.nf_star / n_s;
  } catch (const std::exception &e) {
    cell.error = e.what();
  }
  return cell;
}

// Optimize every (n_s, noise) grid cell. Cells are independent; `threads`
// caps parallelism (0 = hardware default). Output is identical for any
// thread count.
inline SweepTable sweep(SweepModel model, std::vector<double> ns_grid,
                        std::vector<double> noise_grid, NfRange range = {},
                        unsigned threads = 0) {
  for (auto *grid : {&ns_grid, &noise_grid})
    if (std::adjacent_find(grid->begin(), grid->end(),
                           [](double a, double b) { return a >= b; }) != grid->end())
      throw DomainError("sweep: grids must be strictly increasing");

  SweepTable table;
  table.model = model;
  table.ns_grid = std::move(ns_grid);
  table.noise_grid = std::move(noise_grid);
  const std::size_t total = table.ns_grid.size() * table.noise_grid.size();
  table.cells.resize(total);

  unsigned n_threads = threads != 0 ? threads : std::thread::hardware_concurrency();
  n_threads = std::max(1u, std::min<unsigned>(n_threads, total));

  auto work = [&](unsigned tid) {
    for (std::size_t idx = tid; idx < total; idx += n_threads) {
      const std::size_t noise_i = idx / table.ns_grid.size();
      const std::size_t ns_i = idx % table.ns_grid.size();
      table.cells[idx] = optimize_cell(model, table.ns_grid[ns_i],
                                       table.noise_grid[noise_i], range);
    }
  };
  if (n_threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(work, t);
    for (auto &th : pool) th.join();
  }
  return table;
}

}  // namespace pll
