#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

#include "pll/errors.hpp"

namespace pll {

// Exact SI-defined values (2019 redefinition) plus the IAU astronomical unit.
namespace constants {
inline constexpr double c = 299792458.0;         // speed of light [m/s]
inline constexpr double h = 6.62607015e-34;      // Planck constant [J*s]
inline constexpr double au = 1.495978707e11;     // astronomical unit [m]
}  // namespace constants

// Physical link parameters, SI units throughout.
struct LinkGeometry {
  double range_m = 0.0;        // link range r
  double d_tx_m = 0.0;         // transmit aperture diameter
  double d_rx_m = 0.0;         // receive aperture diameter
  double f_c_hz = 0.0;         // carrier frequency
  double eta_rx = 1.0;         // receiver subsystem efficiency, (0, 1]
  double eta_atm = 1.0;        // atmospheric transmission, (0, 1]
  double p_tx_w = 0.0;         // transmitted power

  void validate() const {
    if (!(range_m > 0.0 && d_tx_m > 0.0 && d_rx_m > 0.0 && f_c_hz > 0.0 &&
          p_tx_w > 0.0))
      throw DomainError("LinkGeometry: all fields must be strictly positive");
    if (!(eta_rx > 0.0 && eta_rx <= 1.0) || !(eta_atm > 0.0 && eta_atm <= 1.0))
      throw DomainError("LinkGeometry: efficiencies must lie in (0, 1]");
  }
};

enum class NoiseModel : std::uint8_t {
  Multimode,   // noise photons per slot summed over N filter modes (n_b)
  SingleMode,  // noise photons in the signal mode alone (n_n)
};

// A single operating point of the channel: signal strength per slot plus a
// noise strength tagged with the mode model it refers to.
struct ChannelPoint {
  double n_s = 0.0;
  NoiseModel noise_model = NoiseModel::Multimode;
  double noise = 0.0;          // n_b or n_n depending on the tag
  std::uint32_t mode_count = 1;  // N, provenance metadata for Multimode

  void validate() const {
    if (n_s < 0.0) throw DomainError("ChannelPoint: n_s must be >= 0");
    if (noise < 0.0) throw DomainError("ChannelPoint: noise must be >= 0");
  }
};

// Far-field power transmission factor. May exceed 1 for near-field inputs,
// where the formula stops being physical; see near_field().
inline double diffraction_loss(const LinkGeometry &geom) {
  geom.validate();
  const double aperture =
      std::numbers::pi * geom.d_rx_m * geom.d_tx_m / (4.0 * constants::c);
  const double amp = geom.f_c_hz * aperture / geom.range_m;
  return amp * amp;
}

inline bool near_field(const LinkGeometry &geom) {
  return diffraction_loss(geom) > 1.0;
}

inline double received_power(const LinkGeometry &geom) {
  return geom.eta_rx * geom.eta_atm * diffraction_loss(geom) * geom.p_tx_w;
}

// Received photon flux [photons/s] at carrier frequency f_c.
inline double photon_flux(double p_rx_w, double f_c_hz) {
  if (f_c_hz <= 0.0) throw DomainError("photon_flux: f_c must be > 0");
  if (p_rx_w < 0.0) throw DomainError("photon_flux: power must be >= 0");
  return p_rx_w / (constants::h * f_c_hz);
}

// Mean signal photons per slot, n_s = flux / B.
inline double signal_per_slot(double flux, double slot_rate_hz) {
  if (slot_rate_hz <= 0.0) throw DomainError("signal_per_slot: slot rate must be > 0");
  if (flux < 0.0) throw DomainError("signal_per_slot: flux must be >= 0");
  return flux / slot_rate_hz;
}

// Mean noise photons per slot for a filter passing mode_count temporal modes.
// mode_count = 1 gives the single-mode strength n_n.
inline double noise_per_slot(double noise_psd_w_per_hz, double f_c_hz,
                             std::uint32_t mode_count) {
  if (mode_count == 0) throw DomainError("noise_per_slot: mode_count must be >= 1");
  if (f_c_hz <= 0.0) throw DomainError("noise_per_slot: f_c must be > 0");
  if (noise_psd_w_per_hz < 0.0)
    throw DomainError("noise_per_slot: noise PSD must be >= 0");
  return static_cast<double>(mode_count) * noise_psd_w_per_hz /
         (constants::h * f_c_hz);
}

// Power-convention decibels.
inline double db(double x) {
  if (x <= 0.0) throw DomainError("db: argument must be > 0");
  return 10.0 * std::log10(x);
}

inline double from_db(double x_db) {
  return std::pow(10.0, x_db / 10.0);
}

}  // namespace pll
