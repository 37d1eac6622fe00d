#pragma once

#include <charconv>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "pll/errors.hpp"
#include "pll/sweep.hpp"

namespace pll::csv {

// Locale-independent formatting: '.' decimal separator, shortest round-trip
// representation.
inline std::string format_double(double x) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  if (ec != std::errc{}) throw DomainError("format_double: to_chars failed");
  return std::string(buf, ptr);
}

inline double parse_double(std::string_view s) {
  double x = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw DomainError("parse_double: bad number '" + std::string(s) + "'");
  return x;
}

inline std::vector<std::string> split_row(const std::string &line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

inline constexpr const char *kSweepHeader =
    "n_s[photons/slot],noise[photons/slot],pie[bits/photon],nf_star[photons],"
    "m_star,boundary_hit,flags";

inline void write_sweep(std::ostream &os, const SweepTable &table) {
  os << "# model=" << to_string(table.model) << "\n";
  os << kSweepHeader << "\n";
  for (std::size_t ni = 0; ni < table.noise_grid.size(); ++ni) {
    for (std::size_t si = 0; si < table.ns_grid.size(); ++si) {
      const SweepCell &cell = table.cell(ni, si);
      std::string flags;
      if (cell.m_clamped) flags += "M_CLAMPED;";
      if (!cell.error.empty()) flags += "ERROR:" + cell.error + ";";
      os << format_double(table.ns_grid[si]) << ','
         << format_double(table.noise_grid[ni]) << ','
         << format_double(cell.point.pie_star) << ','
         << format_double(cell.point.nf_star) << ','
         << format_double(cell.point.m_star) << ','
         << (cell.point.boundary_hit ? 1 : 0) << ',' << flags << "\n";
    }
  }
}

struct SweepRow {
  double n_s = 0.0;
  double noise = 0.0;
  double pie = 0.0;
  double nf_star = 0.0;
  double m_star = 0.0;
  bool boundary_hit = false;
  std::string flags;
};

inline std::vector<SweepRow> read_sweep(std::istream &is) {
  std::vector<SweepRow> rows;
  std::string line;
  bool header_seen = false;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      if (line != kSweepHeader) throw DomainError("read_sweep: unexpected header");
      header_seen = true;
      continue;
    }
    const auto fields = split_row(line);
    if (fields.size() != 7) throw DomainError("read_sweep: bad field count");
    SweepRow row;
    row.n_s = parse_double(fields[0]);
    row.noise = parse_double(fields[1]);
    row.pie = parse_double(fields[2]);
    row.nf_star = parse_double(fields[3]);
    row.m_star = parse_double(fields[4]);
    row.boundary_hit = fields[5] == "1";
    row.flags = fields[6];
    rows.push_back(row);
  }
  return rows;
}

}  // namespace pll::csv
