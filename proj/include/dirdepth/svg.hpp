// Standalone SVG 1.1 rendering of a GLD plot. Output is a deterministic
// function of the inputs: fixed float formatting, no timestamps, no ids.
//
// Element classes: "pt" for data points, "median" for the two dashed
// 50%-lines, "slope" for the median-ratio line, "diagonal" for the optional
// 45-degree reference.
#pragma once

#include <cmath>
#include <cstdio>
#include <string>

#include "dirdepth/errors.hpp"
#include "dirdepth/gld.hpp"

namespace dirdepth {

struct RenderOptions {
  int width = 640;
  int height = 640;
  double point_radius = 3.0;
  bool show_diagonal = false;
  std::string x_label = "global depth (normalized)";
  std::string y_label = "local depth (normalized)";
};

namespace detail {

inline std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

inline std::string xml_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace detail

inline std::string render_svg(const GldData& gld, const RenderOptions& options) {
  if (options.width <= 0 || options.height <= 0)
    throw InvalidOptions("plot dimensions must be positive");
  if (options.point_radius <= 0.0)
    throw InvalidOptions("point radius must be positive");

  const double ml = 56.0, mr = 16.0, mt = 16.0, mb = 48.0;  // margins
  const double pw = options.width - ml - mr;
  const double ph = options.height - mt - mb;
  if (pw <= 0.0 || ph <= 0.0)
    throw InvalidOptions("plot dimensions too small for the axis margins");

  // Unit square to pixel coordinates; SVG y grows downward.
  auto px = [&](double g) { return ml + g * pw; };
  auto py = [&](double l) { return mt + (1.0 - l) * ph; };
  auto line = [&](double g1, double l1, double g2, double l2,
                  const std::string& cls, const std::string& style) {
    return "  <line class=\"" + cls + "\" x1=\"" + detail::fmt(px(g1)) +
           "\" y1=\"" + detail::fmt(py(l1)) + "\" x2=\"" + detail::fmt(px(g2)) +
           "\" y2=\"" + detail::fmt(py(l2)) + "\" " + style + "/>\n";
  };

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         std::to_string(options.width) + "\" height=\"" +
         std::to_string(options.height) + "\" viewBox=\"0 0 " +
         std::to_string(options.width) + " " + std::to_string(options.height) +
         "\">\n";
  svg += "  <rect x=\"" + detail::fmt(ml) + "\" y=\"" + detail::fmt(mt) +
         "\" width=\"" + detail::fmt(pw) + "\" height=\"" + detail::fmt(ph) +
         "\" fill=\"white\" stroke=\"black\" stroke-width=\"1\"/>\n";

  if (options.show_diagonal)
    svg += line(0.0, 0.0, 1.0, 1.0, "diagonal",
                "stroke=\"#b0b0b0\" stroke-width=\"1\"");

  // The two dashed 50%-quantile lines.
  svg += line(gld.g_median, 0.0, gld.g_median, 1.0, "median",
              "stroke=\"black\" stroke-width=\"1\" stroke-dasharray=\"6,4\"");
  svg += line(0.0, gld.l_median, 1.0, gld.l_median, "median",
              "stroke=\"black\" stroke-width=\"1\" stroke-dasharray=\"6,4\"");

  // Median-ratio line through the origin, clipped to the unit box. An
  // infinite slope (g_median = 0) degenerates to the left edge.
  {
    double gx, ly;
    if (!std::isfinite(gld.slope)) {
      gx = 0.0;
      ly = 1.0;
    } else if (gld.slope <= 1.0) {
      gx = 1.0;
      ly = gld.slope;
    } else {
      gx = 1.0 / gld.slope;
      ly = 1.0;
    }
    svg += line(0.0, 0.0, gx, ly, "slope",
                "stroke=\"#d62728\" stroke-width=\"1.5\"");
  }

  for (const auto& [g, l] : gld.points)
    svg += "  <circle class=\"pt\" cx=\"" + detail::fmt(px(g)) + "\" cy=\"" +
           detail::fmt(py(l)) + "\" r=\"" + detail::fmt(options.point_radius) +
           "\" fill=\"#1f77b4\" fill-opacity=\"0.75\"/>\n";

  for (int tick = 0; tick <= 1; ++tick) {
    const double v = static_cast<double>(tick);
    svg += "  <text x=\"" + detail::fmt(px(v)) + "\" y=\"" +
           detail::fmt(py(0.0) + 18.0) +
           "\" font-family=\"sans-serif\" font-size=\"12\" "
           "text-anchor=\"middle\">" + detail::fmt(v) + "</text>\n";
    svg += "  <text x=\"" + detail::fmt(px(0.0) - 8.0) + "\" y=\"" +
           detail::fmt(py(v) + 4.0) +
           "\" font-family=\"sans-serif\" font-size=\"12\" "
           "text-anchor=\"end\">" + detail::fmt(v) + "</text>\n";
  }
  svg += "  <text x=\"" + detail::fmt(ml + pw / 2.0) + "\" y=\"" +
         detail::fmt(options.height - 10.0) +
         "\" font-family=\"sans-serif\" font-size=\"14\" "
         "text-anchor=\"middle\">" + detail::xml_escape(options.x_label) +
         "</text>\n";
  svg += "  <text x=\"14\" y=\"" + detail::fmt(mt + ph / 2.0) +
         "\" font-family=\"sans-serif\" font-size=\"14\" "
         "text-anchor=\"middle\" transform=\"rotate(-90 14 " +
         detail::fmt(mt + ph / 2.0) + ")\">" +
         detail::xml_escape(options.y_label) + "</text>\n";
  svg += "</svg>\n";
  return svg;
}

}  // namespace dirdepth
