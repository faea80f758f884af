// CSV interchange.
//
// Unit-vector files: header x1,...,xq, one observation per row; rows must be
// unit vectors within 1e-6 before renormalization. Lat/lon files: header
// lat,lon, degrees, geographic convention. Numbers are written with 12
// significant digits so a round trip preserves coordinates to 1e-9 and
// depth ranks are unaffected. All writes go through a temp file + rename.
#pragma once

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "dirdepth/depth.hpp"
#include "dirdepth/errors.hpp"
#include "dirdepth/sample.hpp"
#include "dirdepth/unit_vector.hpp"

namespace dirdepth {

inline std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

inline void write_file_atomic(const std::filesystem::path& path,
                              const std::string& content) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
    out << content;
    if (!out) throw IoError("failed writing " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec)
    throw IoError("cannot rename " + tmp.string() + " to " + path.string() +
                  ": " + ec.message());
}

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) {
    // trim surrounding whitespace
    const auto b = field.find_first_not_of(" \t\r");
    const auto e = field.find_last_not_of(" \t\r");
    fields.push_back(b == std::string::npos ? "" : field.substr(b, e - b + 1));
  }
  if (!line.empty() && line.back() == ',') fields.push_back("");
  return fields;
}

inline double parse_field(const std::string& field, std::size_t line_no) {
  std::size_t consumed = 0;
  double v = 0.0;
  try {
    v = std::stod(field, &consumed);
  } catch (const std::exception&) {
    throw MalformedRow("line " + std::to_string(line_no) +
                       ": cannot parse number '" + field + "'");
  }
  if (consumed != field.size())
    throw MalformedRow("line " + std::to_string(line_no) +
                       ": trailing characters in '" + field + "'");
  return v;
}

inline std::vector<std::string> read_lines(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

}  // namespace detail

inline DirectionalSample parse_unit_csv(const std::filesystem::path& path) {
  const std::vector<std::string> lines = detail::read_lines(path);
  if (lines.empty()) throw EmptyInput("empty file " + path.string());
  const std::size_t q = detail::split_csv_line(lines[0]).size();
  if (q < 2)
    throw DimensionTooSmall("header of " + path.string() +
                            " has fewer than 2 columns");
  std::vector<UnitVector> points;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    const std::vector<std::string> fields = detail::split_csv_line(lines[i]);
    if (fields.size() != q)
      throw InconsistentDimension("line " + std::to_string(i + 1) + ": got " +
                                  std::to_string(fields.size()) +
                                  " fields, expected " + std::to_string(q));
    std::vector<double> coords;
    coords.reserve(q);
    for (const std::string& f : fields)
      coords.push_back(detail::parse_field(f, i + 1));
    double norm = 0.0;
    for (double c : coords) norm += c * c;
    norm = std::sqrt(norm);
    if (std::abs(norm - 1.0) > 1e-6)
      throw NotUnitNorm("line " + std::to_string(i + 1) + ": norm " +
                        format_number(norm) + " is not 1 within 1e-6");
    points.push_back(normalize(coords));
  }
  if (points.empty()) throw EmptySample("no data rows in " + path.string());
  return DirectionalSample(std::move(points));
}

inline DirectionalSample parse_latlon_csv(const std::filesystem::path& path) {
  const std::vector<std::string> lines = detail::read_lines(path);
  if (lines.empty()) throw EmptyInput("empty file " + path.string());
  std::vector<UnitVector> points;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    const std::vector<std::string> fields = detail::split_csv_line(lines[i]);
    if (fields.size() != 2)
      throw MalformedRow("line " + std::to_string(i + 1) + ": got " +
                         std::to_string(fields.size()) +
                         " fields, expected lat,lon");
    const double lat = detail::parse_field(fields[0], i + 1);
    const double lon = detail::parse_field(fields[1], i + 1);
    try {
      points.push_back(from_latlon(lat, lon));
    } catch (const LatitudeOutOfRange& e) {
      throw LatitudeOutOfRange("line " + std::to_string(i + 1) + ": " +
                               e.what());
    }
  }
  if (points.empty()) throw EmptySample("no data rows in " + path.string());
  return DirectionalSample(std::move(points));
}

inline std::string sample_to_csv(const DirectionalSample& sample) {
  std::string out;
  for (int j = 0; j < sample.dim(); ++j) {
    if (j) out += ',';
    out += "x" + std::to_string(j + 1);
  }
  out += '\n';
  for (const UnitVector& p : sample) {
    for (int j = 0; j < sample.dim(); ++j) {
      if (j) out += ',';
      out += format_number(p[static_cast<std::size_t>(j)]);
    }
    out += '\n';
  }
  return out;
}

inline std::string profile_to_csv(const DepthProfile& profile,
                                  const std::vector<double>& global_norm,
                                  const std::vector<double>& local_norm) {
  std::string out = "index,global,local,global_norm,local_norm\n";
  for (std::size_t i = 0; i < profile.global.size(); ++i) {
    out += std::to_string(i) + ',' + format_number(profile.global[i]) + ',' +
           format_number(profile.local[i]) + ',' +
           format_number(global_norm[i]) + ',' + format_number(local_norm[i]) +
           '\n';
  }
  return out;
}

inline std::string curve_to_csv(const std::vector<CurvePoint>& curve) {
  std::string out = "angle_rad,depth\n";
  for (const CurvePoint& p : curve)
    out += format_number(p.angle) + ',' + format_number(p.depth) + '\n';
  return out;
}

}  // namespace dirdepth
