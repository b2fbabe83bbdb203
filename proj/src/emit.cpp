#include "nok/emit.hpp"

#include <algorithm>
#include <cstdio>

namespace nok {

std::string polygon_csv(const NOBPolygon& poly) {
  std::string out;
  for (const auto& [t, s] : poly.vertices) out += t.str() + "," + s.str() + "\n";
  return out;
}

namespace {

double approx(const Rational& r) { return r.to_double(); }

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

std::string polygon_svg(const NOBPolygon& poly) {
  constexpr double width = 640, height = 480, pad = 48;

  double tmin = 0, tmax = 0, smin = 0, smax = 0;
  for (const auto& [t, s] : poly.vertices) {
    tmin = std::min(tmin, approx(t));
    tmax = std::max(tmax, approx(t));
    smin = std::min(smin, approx(s));
    smax = std::max(smax, approx(s));
  }
  if (tmax - tmin < 1e-9) tmax = tmin + 1;
  if (smax - smin < 1e-9) smax = smin + 1;

  auto sx = [&](double t) { return pad + (t - tmin) / (tmax - tmin) * (width - 2 * pad); };
  auto sy = [&](double s) { return height - pad - (s - smin) / (smax - smin) * (height - 2 * pad); };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"480\" "
         "viewBox=\"0 0 640 480\">\n";
  svg += "<rect width=\"640\" height=\"480\" fill=\"white\"/>\n";

  // axes through the origin of the (t, s) plane
  svg += "<line x1=\"" + fmt(sx(tmin)) + "\" y1=\"" + fmt(sy(0)) + "\" x2=\"" + fmt(sx(tmax)) +
         "\" y2=\"" + fmt(sy(0)) + "\" stroke=\"#888\" stroke-width=\"1\"/>\n";
  svg += "<line x1=\"" + fmt(sx(0)) + "\" y1=\"" + fmt(sy(smin)) + "\" x2=\"" + fmt(sx(0)) +
         "\" y2=\"" + fmt(sy(smax)) + "\" stroke=\"#888\" stroke-width=\"1\"/>\n";
  svg += "<text x=\"" + fmt(width - pad + 6) + "\" y=\"" + fmt(sy(0) + 4) +
         "\" font-size=\"14\" fill=\"#444\">t</text>\n";
  svg += "<text x=\"" + fmt(sx(0) - 14) + "\" y=\"" + fmt(pad - 8) +
         "\" font-size=\"14\" fill=\"#444\">s</text>\n";

  std::string points;
  for (const auto& [t, s] : poly.vertices)
    points += fmt(sx(approx(t))) + "," + fmt(sy(approx(s))) + " ";
  svg += "<polygon points=\"" + points +
         "\" fill=\"#9ecae1\" fill-opacity=\"0.5\" stroke=\"#3182bd\" stroke-width=\"2\"/>\n";

  // alpha (lower boundary) and beta (upper boundary) graphs
  auto polyline = [&](const PiecewiseLinearFn& fn, const char* color) {
    std::string pts;
    for (const Rational& b : fn.breaks)
      pts += fmt(sx(approx(b))) + "," + fmt(sy(approx(fn(b)))) + " ";
    return "<polyline points=\"" + pts + "\" fill=\"none\" stroke=\"" + color +
           "\" stroke-width=\"2\" stroke-dasharray=\"6 3\"/>\n";
  };
  svg += polyline(poly.alpha, "#31a354");
  svg += polyline(poly.beta, "#e6550d");

  for (const auto& [t, s] : poly.vertices)
    svg += "<circle cx=\"" + fmt(sx(approx(t))) + "\" cy=\"" + fmt(sy(approx(s))) +
           "\" r=\"3\" fill=\"#08306b\"/>\n";

  svg += "</svg>\n";
  return svg;
}

}  // namespace nok
