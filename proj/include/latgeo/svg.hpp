#ifndef LATGEO_SVG_HPP
#define LATGEO_SVG_HPP

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "latgeo/descent.hpp"
#include "latgeo/errors.hpp"
#include "latgeo/geometry.hpp"

namespace latgeo {

struct PlotBounds {
  double xmin = -3, xmax = 3, ymin = -3, ymax = 3;
};

struct Scene {
  ConvexPolygon body;
  int max_coeff = 0;  // draw integer lines mx + ny = 1 with |m|, |n| <= max_coeff; 0 draws none
  std::optional<DescentCertificate> trace;
  PlotBounds bounds;
  double pixels_per_unit = 60;
};

namespace detail {

inline std::string fixed(double v) {
  if (std::fabs(v) < 5e-5) v = 0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

struct SvgFrame {
  const Scene& scene;
  double sx(double x) const { return (x - scene.bounds.xmin) * scene.pixels_per_unit; }
  double sy(double y) const { return (scene.bounds.ymax - y) * scene.pixels_per_unit; }

  std::string points(const ConvexPolygon& p) const {
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i) s += ' ';
      s += fixed(sx(p[i].x.get_d())) + "," + fixed(sy(p[i].y.get_d()));
    }
    return s;
  }
};

// Portion of the line m x + n y = 1 inside the plot rectangle.
inline std::optional<std::pair<std::pair<double, double>, std::pair<double, double>>> clip_line(int m, int n,
                                                                                                const PlotBounds& b) {
  std::vector<std::pair<double, double>> hits;
  auto add = [&](double x, double y) {
    const double eps = 1e-12;
    if (x < b.xmin - eps || x > b.xmax + eps || y < b.ymin - eps || y > b.ymax + eps) return;
    for (const auto& h : hits)
      if (std::fabs(h.first - x) < 1e-9 && std::fabs(h.second - y) < 1e-9) return;
    hits.emplace_back(x, y);
  };
  if (n != 0) {
    for (double x : {b.xmin, b.xmax}) add(x, (1 - m * x) / n);
  }
  if (m != 0) {
    for (double y : {b.ymin, b.ymax}) add((1 - n * y) / m, y);
  }
  if (hits.size() < 2) return std::nullopt;
  std::sort(hits.begin(), hits.end());
  return std::make_pair(hits.front(), hits.back());
}

}  // namespace detail

/// SVG 1.1 picture of a body, an optional family of integer lines and an optional descent trace.
inline std::string render_svg(const Scene& scene) {
  const PlotBounds& b = scene.bounds;
  if (!(std::isfinite(b.xmin) && std::isfinite(b.xmax) && std::isfinite(b.ymin) && std::isfinite(b.ymax)) ||
      b.xmin >= b.xmax || b.ymin >= b.ymax)
    throw DegenerateInput("plot bounds must be finite and non-empty");
  detail::SvgFrame f{scene};
  const double w = (b.xmax - b.xmin) * scene.pixels_per_unit;
  const double h = (b.ymax - b.ymin) * scene.pixels_per_unit;
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg height=\"" + detail::fixed(h) + "\" version=\"1.1\" viewBox=\"0 0 " + detail::fixed(w) + " " +
         detail::fixed(h) + "\" width=\"" + detail::fixed(w) + "\" xmlns=\"http://www.w3.org/2000/svg\">\n";
  out += "<rect fill=\"white\" height=\"" + detail::fixed(h) + "\" width=\"" + detail::fixed(w) + "\" x=\"0\" y=\"0\"/>\n";

  if (scene.max_coeff > 0) {
    out += "<g id=\"integer-lines\" stroke=\"#999999\" stroke-width=\"0.75\">\n";
    for (int m = -scene.max_coeff; m <= scene.max_coeff; ++m) {
      for (int n = -scene.max_coeff; n <= scene.max_coeff; ++n) {
        if (m == 0 && n == 0) continue;
        auto seg = detail::clip_line(m, n, b);
        if (!seg) continue;
        out += "<line x1=\"" + detail::fixed(f.sx(seg->first.first)) + "\" x2=\"" + detail::fixed(f.sx(seg->second.first)) +
               "\" y1=\"" + detail::fixed(f.sy(seg->first.second)) + "\" y2=\"" + detail::fixed(f.sy(seg->second.second)) +
               "\"/>\n";
      }
    }
    out += "</g>\n";
  }

  if (scene.trace) {
    out += "<g fill=\"none\" id=\"descent\" stroke=\"#1f77b4\" stroke-dasharray=\"4 3\" stroke-width=\"1.5\">\n";
    for (std::size_t i = 0; i < scene.trace->steps.size(); ++i) {
      const auto& s = scene.trace->steps[i];
      const Point2& x0 = s.start[s.vd.vertex_index];
      out += "<g id=\"step-" + std::to_string(i) + "\">\n";
      out += "<polygon points=\"" + f.points(s.start) + "\"/>\n";
      out += "<text fill=\"#1f77b4\" font-size=\"12\" stroke=\"none\" x=\"" + detail::fixed(f.sx(x0.x.get_d()) + 4) +
             "\" y=\"" + detail::fixed(f.sy(x0.y.get_d()) - 4) + "\">step " + std::to_string(i) + "</text>\n";
      out += "</g>\n";
    }
    out += "<polygon id=\"terminal\" points=\"" + f.points(scene.trace->terminal) +
           "\" stroke=\"#d62728\" stroke-dasharray=\"none\"/>\n";
    out += "</g>\n";
  }

  out += "<polygon fill=\"#cccccc\" fill-opacity=\"0.6\" id=\"body\" points=\"" + f.points(scene.body) +
         "\" stroke=\"black\" stroke-width=\"2\"/>\n";
  out += "<circle cx=\"" + detail::fixed(f.sx(0)) + "\" cy=\"" + detail::fixed(f.sy(0)) + "\" fill=\"black\" r=\"2.5\"/>\n";
  out += "</svg>\n";
  return out;
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << text;
  if (!out) throw IoError("write failed for " + path);
}

}  // namespace latgeo

#endif  // LATGEO_SVG_HPP
