// pll: photon-starved link limit calculator.
//
// Subcommands: linkbudget, pie, sweep, table2, mc-validate.
// Exit codes: 0 success, 1 validation/analysis failure, 2 usage error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pll/pll.hpp"

using nlohmann::json;

namespace {

unsigned sweep_threads() {
  if (const char *env = std::getenv("PLL_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return 0;  // hardware default
}

void write_output(const std::string &path, const std::string &content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open output file: " + path);
  os << content;
}

json result_envelope(const std::string &subcommand, json inputs, json outputs,
                     json units) {
  return json{{"tool", "pll"},
              {"version", pll::kVersion},
              {"subcommand", subcommand},
              {"inputs", std::move(inputs)},
              {"outputs", std::move(outputs)},
              {"units", std::move(units)},
              {"provenance", "computed"}};
}

// ---------------------------------------------------------------- linkbudget

struct LinkbudgetOpts {
  double range_m = 0.0, range_au = 0.0;
  double d_tx_m = 0.0, d_rx_m = 0.0;
  double f_c_hz = 0.0, wavelength_nm = 0.0;
  double eta_rx = 1.0, eta_atm = 1.0;
  double p_tx_w = 0.0;
  double signal_flux = -1.0;  // photons/s; bypasses the geometry when given
  double slot_rate_hz = 0.0, slot_ns = 0.0;
  double bg_flux = 0.0;           // background photons/s (all modes)
  double noise_psd_w_per_hz = -1.0;
  unsigned mode_count = 1;
  std::string out, format = "text";
};

int cmd_linkbudget(const LinkbudgetOpts &o) {
  using namespace pll;
  const double f_c = o.wavelength_nm > 0.0
                         ? constants::c / (o.wavelength_nm * 1e-9)
                         : o.f_c_hz;
  const double slot_rate =
      o.slot_ns > 0.0 ? 1.0 / (o.slot_ns * 1e-9) : o.slot_rate_hz;
  if (slot_rate <= 0.0) {
    std::cerr << "linkbudget: slot rate required (--slot-rate-hz or --slot-ns)\n";
    return 2;
  }

  double flux = o.signal_flux;
  double p_rx = 0.0;
  double loss = 0.0;
  bool have_geometry = false;
  if (flux < 0.0) {
    const double range = o.range_au > 0.0 ? o.range_au * constants::au : o.range_m;
    LinkGeometry geom{range, o.d_tx_m, o.d_rx_m, f_c,
                      o.eta_rx, o.eta_atm, o.p_tx_w};
    if (o.p_tx_w == 0.0) {
      // Zero transmit power is a legal query: everything downstream is zero.
      flux = 0.0;
      LinkGeometry probe = geom;
      probe.p_tx_w = 1.0;
      loss = diffraction_loss(probe);
    } else {
      loss = diffraction_loss(geom);
      p_rx = received_power(geom);
      if (f_c <= 0.0) {
        std::cerr << "linkbudget: carrier frequency required\n";
        return 2;
      }
      flux = photon_flux(p_rx, f_c);
    }
    have_geometry = true;
    if (loss > 1.0)
      std::cerr << "warning: diffraction loss > 1 (near field, far-field "
                   "formula invalid)\n";
  }

  const double n_s = signal_per_slot(flux, slot_rate);
  double n_b;
  if (o.noise_psd_w_per_hz >= 0.0) {
    if (f_c <= 0.0) {
      std::cerr << "linkbudget: carrier frequency required for noise PSD\n";
      return 2;
    }
    n_b = noise_per_slot(o.noise_psd_w_per_hz, f_c, o.mode_count);
  } else {
    n_b = o.bg_flux / slot_rate;
  }
  const double n_n = o.mode_count > 0 ? n_b / o.mode_count : n_b;

  auto db_or_ninf = [](double x) { return x > 0.0 ? pll::db(x) : -pll::kInfiniteResult; };

  if (o.format == "json") {
    json inputs{{"slot_rate_hz", slot_rate}, {"mode_count", o.mode_count}};
    if (have_geometry) inputs["f_c_hz"] = f_c;
    json outputs{{"signal_flux", flux},
                 {"n_s", n_s},
                 {"n_b", n_b},
                 {"n_n", n_n},
                 {"n_b_db", db_or_ninf(n_b)},
                 {"n_n_db", db_or_ninf(n_n)}};
    if (have_geometry) {
      outputs["diffraction_loss"] = loss;
      outputs["received_power_w"] = p_rx;
    }
    json units{{"signal_flux", "photons/s"},
               {"n_s", "photons/slot"},
               {"n_b", "photons/slot"},
               {"n_n", "photons/mode"},
               {"received_power_w", "W"}};
    write_output(o.out, result_envelope("linkbudget", inputs, outputs, units).dump(2) + "\n");
    return 0;
  }

  std::ostringstream os;
  os.precision(6);
  if (have_geometry) {
    os << "diffraction loss     " << loss << " (" << db_or_ninf(loss) << " dB)\n";
    os << "received power       " << p_rx << " W\n";
  }
  os << "signal flux          " << flux << " photons/s\n";
  os << "n_s (per slot)       " << n_s << "\n";
  os << "n_b (per slot)       " << n_b << " (" << db_or_ninf(n_b) << " dB)\n";
  os << "n_n (signal mode)    " << n_n << " (" << db_or_ninf(n_n) << " dB)\n";
  write_output(o.out, os.str());
  return 0;
}

// ----------------------------------------------------------------------- pie

struct PieOpts {
  std::string model;
  double n_s = 0.0;
  double noise = -1.0, noise_db = 0.0;
  bool have_noise_db = false;
  double n_f = -1.0;
  unsigned m = 0;
  bool optimize = false;
  double nf_lo = 1e-6, nf_hi = pll::kDefaultNfCap;
  std::string out, format = "text";
};

int cmd_pie(const PieOpts &o) {
  using namespace pll;
  const double noise = o.have_noise_db ? from_db(o.noise_db) : o.noise;
  if (noise < 0.0) {
    std::cerr << "pie: --noise or --noise-db required\n";
    return 2;
  }

  double pie = 0.0;
  std::optional<PpmOperatingPoint> opt;
  if (o.model == "S1") {
    pie = shannon_s1(o.n_s, noise).pie;
  } else if (o.model == "S2") {
    pie = shannon_s2(o.n_s, noise).pie;
  } else if (o.model == "GH") {
    pie = gordon_holevo(o.n_s, noise).pie;
  } else {
    SweepModel model;
    if (o.model == "SIF_HARD") model = SweepModel::SifHard;
    else if (o.model == "SIF_SOFT") model = SweepModel::SifSoft;
    else if (o.model == "QPG_ONOFF") model = SweepModel::QpgOnOff;
    else if (o.model == "QPG_PNR") model = SweepModel::QpgPnr;
    else {
      std::cerr << "pie: unknown model '" << o.model << "'\n";
      return 2;
    }
    if (o.optimize) {
      SweepCell cell = optimize_cell(model, o.n_s, noise, {o.nf_lo, o.nf_hi});
      if (!cell.error.empty()) {
        std::cerr << "pie: " << cell.error << "\n";
        return 1;
      }
      pie = cell.point.pie_star;
      opt = cell.point;
    } else {
      if (o.n_f <= 0.0) {
        std::cerr << "pie: --nf required without --optimize\n";
        return 2;
      }
      ChannelPoint channel{o.n_s, noise_model_of(model), noise, 1};
      if (model == SweepModel::SifHard) {
        const unsigned m = o.m != 0 ? o.m
                                    : static_cast<unsigned>(std::max(
                                          2.0, std::round(o.n_f / o.n_s)));
        pie = pie_hard(channel, o.n_f, m);
      } else {
        pie = pie_soft_bound(channel, o.n_f,
                             model == SweepModel::QpgPnr ? DetectionMode::Pnr
                                                         : DetectionMode::OnOff);
      }
    }
  }

  if (o.format == "json") {
    json inputs{{"model", o.model}, {"n_s", o.n_s}, {"noise", noise}};
    json outputs{{"pie", pie}};
    if (opt) {
      outputs["nf_star"] = opt->nf_star;
      outputs["m_star"] = opt->m_star;
      outputs["boundary_hit"] = opt->boundary_hit;
    }
    json units{{"pie", "bits/photon"}, {"n_s", "photons/slot"}, {"nf_star", "photons"}};
    write_output(o.out, result_envelope("pie", inputs, outputs, units).dump(2) + "\n");
    return 0;
  }
  std::ostringstream os;
  os.precision(10);
  os << "PIE " << pie << " bits/photon\n";
  if (opt)
    os << "nf* " << opt->nf_star << "\nM*  " << opt->m_star
       << (opt->boundary_hit ? "\n(boundary hit)" : "") << "\n";
  write_output(o.out, os.str());
  return 0;
}

// --------------------------------------------------------------------- sweep

struct SweepOpts {
  std::string model = "SIF_SOFT";
  double ns_min = 1e-6, ns_max = 1.0;
  unsigned ns_points = 61;
  double noise_min = 1e-6, noise_max = 1.0;
  unsigned noise_points = 61;
  double nf_lo = 1e-6, nf_hi = pll::kDefaultNfCap;
  std::string out;
};

std::vector<double> log_grid(double lo, double hi, unsigned points) {
  if (!(lo > 0.0 && hi > lo) || points < 2)
    throw pll::DomainError("log_grid: need 0 < lo < hi and >= 2 points");
  std::vector<double> grid(points);
  const double llo = std::log10(lo), lhi = std::log10(hi);
  for (unsigned i = 0; i < points; ++i)
    grid[i] = std::pow(10.0, llo + (lhi - llo) * i / (points - 1));
  return grid;
}

int cmd_sweep(const SweepOpts &o) {
  using namespace pll;
  SweepModel model;
  if (o.model == "SIF_HARD") model = SweepModel::SifHard;
  else if (o.model == "SIF_SOFT") model = SweepModel::SifSoft;
  else if (o.model == "QPG_ONOFF") model = SweepModel::QpgOnOff;
  else if (o.model == "QPG_PNR") model = SweepModel::QpgPnr;
  else {
    std::cerr << "sweep: unknown model '" << o.model << "'\n";
    return 2;
  }
  // PNR optima can run away to large pulse energies; widen the default cap.
  double nf_hi = o.nf_hi;
  if (model == SweepModel::QpgPnr && nf_hi == kDefaultNfCap) nf_hi = 1e4;

  const SweepTable table =
      sweep(model, log_grid(o.ns_min, o.ns_max, o.ns_points),
            log_grid(o.noise_min, o.noise_max, o.noise_points),
            {o.nf_lo, nf_hi}, sweep_threads());
  std::ostringstream os;
  csv::write_sweep(os, table);
  write_output(o.out, os.str());
  return 0;
}

// -------------------------------------------------------------------- table2

struct Table2Opts {
  double night_nb_db = pll::kNightNbDb;
  double night_nn_db = pll::kNightNnDb;
  double day_nn_db = pll::kDayNnDb;
  bool show_sif_day = false;
  std::string out, format = "text";
};

int cmd_table2(const Table2Opts &o) {
  using namespace pll;
  const Table2Pies pies = table2_pies(o.night_nb_db, o.night_nn_db, o.day_nn_db);
  const auto rows = table2_rates(pies);

  if (o.format == "json") {
    json jrows = json::array();
    for (const auto &r : rows) {
      json jr{{"distance_au", r.distance_au},
              {"signal_flux", r.signal_flux},
              {"expected_rate_mbps", r.expected_rate_mbps},
              {"sif_dd_night_mbps", r.sif_dd_night_mbps},
              {"qpg_dd_night_mbps", r.qpg_dd_night_mbps},
              {"qpg_dd_day_mbps", r.qpg_dd_day_mbps},
              {"gh_night_mbps", r.gh_night_mbps},
              {"gh_day_mbps", r.gh_day_mbps}};
      if (o.show_sif_day) jr["sif_dd_day_mbps"] = r.sif_dd_day_mbps;
      jrows.push_back(jr);
    }
    json outputs{{"rows", jrows},
                 {"pie_sif_night", pies.sif_night},
                 {"pie_qpg_night", pies.qpg_night},
                 {"pie_qpg_day", pies.qpg_day},
                 {"pie_gh_night", pies.gh_night},
                 {"pie_gh_day", pies.gh_day},
                 {"expected_rate_provenance",
                  "mission link budget, reference data only"}};
    json inputs{{"night_nb_db", o.night_nb_db},
                {"night_nn_db", o.night_nn_db},
                {"day_nn_db", o.day_nn_db}};
    write_output(o.out, result_envelope("table2", inputs, outputs,
                                        json{{"rates", "Mbps"},
                                             {"pie", "bits/photon"}})
                            .dump(2) + "\n");
    return 0;
  }

  std::ostringstream os;
  os << "# expected data rate column: mission link budget, reference data only\n";
  os << "distance_au,signal_flux[photons/s],expected_rate_mbps,"
        "sif_dd_night_mbps,";
  if (o.show_sif_day) os << "sif_dd_day_mbps[not reported in source],";
  os << "qpg_dd_night_mbps,qpg_dd_day_mbps,gh_night_mbps,gh_day_mbps\n";
  char buf[256];
  for (const auto &r : rows) {
    os << csv::format_double(r.distance_au) << ','
       << csv::format_double(r.signal_flux) << ',';
    std::snprintf(buf, sizeof buf, "%.3f,%.3f,", r.expected_rate_mbps,
                  r.sif_dd_night_mbps);
    os << buf;
    if (o.show_sif_day) {
      std::snprintf(buf, sizeof buf, "%.3f,", r.sif_dd_day_mbps);
      os << buf;
    }
    std::snprintf(buf, sizeof buf, "%.3f,%.3f,%.3f,%.3f\n", r.qpg_dd_night_mbps,
                  r.qpg_dd_day_mbps, r.gh_night_mbps, r.gh_day_mbps);
    os << buf;
  }
  write_output(o.out, os.str());
  return 0;
}

// --------------------------------------------------------------- mc-validate

struct McValidateOpts {
  std::string model = "sif";  // sif | qpg | pnr | hard
  double n_f = 0.5;
  double noise = 1.122e-4;
  unsigned m = 16;
  double n_s = 1e-3;
  std::uint64_t samples = 1000000;
  std::uint64_t seed = 20240817;
  bool corrupt = false;  // negative-control hook: offsets analytic values
  std::string out, format = "text";
};

int cmd_mc_validate(const McValidateOpts &o) {
  using namespace pll;
  struct Check {
    std::string name;
    double analytic, empirical, z;
  };
  std::vector<Check> checks;
  const double corruption = o.corrupt ? 1.0 : 0.0;

  auto add_click_check = [&](const std::string &name, double analytic,
                             const CountHistogram &hist) {
    const McEstimate est = click_probability(hist, o.seed);
    const double shifted = analytic + corruption * 20.0 * est.std_err;
    checks.push_back({name, shifted, est.value,
                      est.std_err > 0.0 ? (est.value - shifted) / est.std_err
                                        : 0.0});
  };

  if (o.model == "sif") {
    const BinarySlotStats stats = sif_stats(o.n_f, o.noise);
    add_click_check("sif.p", stats.p,
                    sample_sif_counts(o.n_f + o.noise, o.samples, o.seed));
    add_click_check("sif.q", stats.q,
                    sample_sif_counts(o.noise, o.samples, o.seed + 1));
  } else if (o.model == "qpg") {
    const BinarySlotStats stats = qpg_stats(o.n_f, o.noise);
    add_click_check("qpg.p", stats.p,
                    sample_qpg_counts(o.n_f, o.noise, o.samples, o.seed));
    add_click_check("qpg.q", stats.q,
                    sample_qpg_counts(0.0, o.noise, o.samples, o.seed + 1));
  } else if (o.model == "pnr") {
    const PnrSlotStats stats = pnr_stats(o.n_f, o.noise);
    const CountHistogram hist =
        sample_qpg_counts(o.n_f, o.noise, o.samples, o.seed);
    const double fd = static_cast<double>(o.samples);
    for (std::size_t k = 0; k < stats.p_k.size(); ++k) {
      const double expect = fd * stats.p_k[k];
      if (expect < 25.0) continue;  // normal approximation valid bins only
      const double obs = k < hist.size() ? static_cast<double>(hist[k]) : 0.0;
      const double se = std::sqrt(expect * (1.0 - stats.p_k[k]));
      const double shifted = expect + corruption * 20.0 * se;
      checks.push_back({"pnr.p_" + std::to_string(k), shifted / fd, obs / fd,
                        (obs - shifted) / se});
    }
  } else if (o.model == "hard") {
    ChannelPoint channel{o.n_s, NoiseModel::Multimode, o.noise, 1};
    const double n_f = static_cast<double>(o.m) * o.n_s;
    const double analytic = pie_hard(channel, n_f, o.m);
    const McEstimate est = simulate_hard_frames(
        o.n_s, o.noise, o.m, n_f, NoiseModel::Multimode, o.samples, o.seed);
    const double shifted = analytic + corruption * 20.0 * est.std_err;
    checks.push_back({"hard.pie", shifted, est.value,
                      est.std_err > 0.0 ? (est.value - shifted) / est.std_err
                                        : 0.0});
  } else {
    std::cerr << "mc-validate: unknown model '" << o.model << "'\n";
    return 2;
  }

  bool all_pass = true;
  std::ostringstream os;
  for (const auto &c : checks) {
    const bool pass = std::abs(c.z) <= 3.0;
    all_pass = all_pass && pass;
    os << (pass ? "PASS" : "FAIL") << ' ' << c.name << " analytic=" << c.analytic
       << " empirical=" << c.empirical << " z=" << c.z << "\n";
  }
  if (o.format == "json") {
    json jchecks = json::array();
    for (const auto &c : checks)
      jchecks.push_back({{"name", c.name},
                         {"analytic", c.analytic},
                         {"empirical", c.empirical},
                         {"z", c.z},
                         {"pass", std::abs(c.z) <= 3.0}});
    write_output(o.out,
                 result_envelope("mc-validate",
                                 json{{"model", o.model},
                                      {"samples", o.samples},
                                      {"seed", o.seed}},
                                 json{{"checks", jchecks}, {"pass", all_pass}},
                                 json::object())
                     .dump(2) + "\n");
  } else {
    write_output(o.out, os.str());
  }
  return all_pass ? 0 : 1;
}

// ---------------------------------------------------------------------- main

// Optional JSON config: an object of long-option names (without "--") to
// values, expanded into arguments ahead of the command line so explicit
// flags win.
std::vector<std::string> expand_config(int argc, char **argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  for (std::size_t i = 0; i + 1 < args.size(); ++i) {
    if (args[i] != "--config") continue;
    std::ifstream is(args[i + 1]);
    if (!is) throw std::runtime_error("cannot open config file: " + args[i + 1]);
    json cfg = json::parse(is);
    std::vector<std::string> expanded;
    for (auto &[key, value] : cfg.items()) {
      expanded.push_back("--" + key);
      if (value.is_boolean()) {
        if (!value.get<bool>()) expanded.pop_back();
      } else if (value.is_string()) {
        expanded.push_back(value.get<std::string>());
      } else {
        expanded.push_back(value.dump());
      }
    }
    args.erase(args.begin() + static_cast<std::ptrdiff_t>(i),
               args.begin() + static_cast<std::ptrdiff_t>(i) + 2);
    // Insert after the subcommand name (first non-flag argument).
    std::size_t pos = 0;
    while (pos < args.size() && !args[pos].empty() && args[pos][0] == '-') ++pos;
    if (pos < args.size()) ++pos;
    args.insert(args.begin() + static_cast<std::ptrdiff_t>(pos),
                expanded.begin(), expanded.end());
    break;
  }
  return args;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Photon-starved optical link PIE limits"};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  LinkbudgetOpts lb;
  auto *c_lb = app.add_subcommand("linkbudget", "Link budget evaluation");
  c_lb->add_option("--range-m", lb.range_m);
  c_lb->add_option("--range-au", lb.range_au);
  c_lb->add_option("--d-tx-m", lb.d_tx_m);
  c_lb->add_option("--d-rx-m", lb.d_rx_m);
  c_lb->add_option("--f-c-hz", lb.f_c_hz);
  c_lb->add_option("--wavelength-nm", lb.wavelength_nm);
  c_lb->add_option("--eta-rx", lb.eta_rx);
  c_lb->add_option("--eta-atm", lb.eta_atm);
  c_lb->add_option("--p-tx-w", lb.p_tx_w);
  c_lb->add_option("--signal-flux", lb.signal_flux, "photons/s, bypasses geometry");
  c_lb->add_option("--slot-rate-hz", lb.slot_rate_hz);
  c_lb->add_option("--slot-ns", lb.slot_ns);
  c_lb->add_option("--bg-flux", lb.bg_flux, "background photons/s");
  c_lb->add_option("--noise-psd-w-per-hz", lb.noise_psd_w_per_hz);
  c_lb->add_option("--mode-count", lb.mode_count);
  c_lb->add_option("--out", lb.out);
  c_lb->add_option("--format", lb.format)->check(CLI::IsMember({"text", "json"}));

  PieOpts pie;
  auto *c_pie = app.add_subcommand("pie", "Single-point PIE query");
  c_pie->add_option("--model", pie.model)->required();
  c_pie->add_option("--ns", pie.n_s);
  c_pie->add_option("--noise", pie.noise);
  c_pie->add_option("--noise-db", pie.noise_db)
      ->each([&pie](const std::string &) { pie.have_noise_db = true; });
  c_pie->add_option("--nf", pie.n_f);
  c_pie->add_option("--m", pie.m);
  c_pie->add_flag("--optimize", pie.optimize);
  c_pie->add_option("--nf-lo", pie.nf_lo);
  c_pie->add_option("--nf-hi", pie.nf_hi);
  c_pie->add_option("--out", pie.out);
  c_pie->add_option("--format", pie.format)->check(CLI::IsMember({"text", "json"}));

  SweepOpts sw;
  auto *c_sw = app.add_subcommand("sweep", "Grid optimization sweep to CSV");
  c_sw->add_option("--model", sw.model);
  c_sw->add_option("--ns-min", sw.ns_min);
  c_sw->add_option("--ns-max", sw.ns_max);
  c_sw->add_option("--ns-points", sw.ns_points);
  c_sw->add_option("--noise-min", sw.noise_min);
  c_sw->add_option("--noise-max", sw.noise_max);
  c_sw->add_option("--noise-points", sw.noise_points);
  c_sw->add_option("--nf-lo", sw.nf_lo);
  c_sw->add_option("--nf-hi", sw.nf_hi);
  c_sw->add_option("--out", sw.out);

  Table2Opts t2;
  auto *c_t2 = app.add_subcommand("table2", "Psyche downlink rate table");
  c_t2->add_option("--night-nb-db", t2.night_nb_db);
  c_t2->add_option("--night-nn-db", t2.night_nn_db);
  c_t2->add_option("--day-nn-db", t2.day_nn_db);
  c_t2->add_flag("--show-sif-day", t2.show_sif_day,
                 "compute the column the source table omits");
  c_t2->add_option("--out", t2.out);
  c_t2->add_option("--format", t2.format)->check(CLI::IsMember({"text", "json"}));

  McValidateOpts mc;
  auto *c_mc = app.add_subcommand("mc-validate",
                                  "Monte Carlo validation of analytic statistics");
  c_mc->add_option("--model", mc.model)
      ->check(CLI::IsMember({"sif", "qpg", "pnr", "hard"}));
  c_mc->add_option("--nf", mc.n_f);
  c_mc->add_option("--noise", mc.noise);
  c_mc->add_option("--m", mc.m);
  c_mc->add_option("--ns", mc.n_s);
  c_mc->add_option("--samples", mc.samples);
  c_mc->add_option("--seed", mc.seed);
  c_mc->add_flag("--corrupt", mc.corrupt,
                 "negative control: offset analytic values");
  c_mc->add_option("--out", mc.out);
  c_mc->add_option("--format", mc.format)->check(CLI::IsMember({"text", "json"}));

  std::vector<std::string> args;
  try {
    args = expand_config(argc, argv);
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  try {
    std::vector<const char *> argv2{argv[0]};
    for (const auto &a : args) argv2.push_back(a.c_str());
    app.parse(static_cast<int>(argv2.size()), argv2.data());
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return 2;
  }

  try {
    if (c_lb->parsed()) return cmd_linkbudget(lb);
    if (c_pie->parsed()) return cmd_pie(pie);
    if (c_sw->parsed()) return cmd_sweep(sw);
    if (c_t2->parsed()) return cmd_table2(t2);
    if (c_mc->parsed()) return cmd_mc_validate(mc);
  } catch (const pll::DomainError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
