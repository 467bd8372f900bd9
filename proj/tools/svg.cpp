#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dirset/geometry.hpp"
#include "dirset/io.hpp"

namespace dirset::svg {

namespace {

constexpr double kSize = 640.0;
constexpr double kCx = 320.0;
constexpr double kCy = 320.0;
constexpr double kRadius = 240.0;

std::string num(double v) { return format_double(v); }

void open_svg(std::ostringstream& out) {
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize
      << "\" viewBox=\"0 0 " << kSize << " " << kSize << "\">\n";
  out << "<rect width=\"" << kSize << "\" height=\"" << kSize << "\" fill=\"white\"/>\n";
}

void text(std::ostringstream& out, double x, double y, const std::string& s) {
  out << "<text x=\"" << num(x) << "\" y=\"" << num(y)
      << "\" font-family=\"monospace\" font-size=\"14\" fill=\"#333\">" << s << "</text>\n";
}

// Ring position of an RP^1 angle: the chart angle doubled, so 0 and pi meet.
void ring_xy(double theta, double r, double& x, double& y) {
  x = kCx + r * std::cos(2.0 * theta);
  y = kCy - r * std::sin(2.0 * theta);
}

}  // namespace

std::string render_rp1_ring(const std::vector<ProjectiveDirection>& dirs,
                            const CapReport* highlight) {
  std::ostringstream out;
  open_svg(out);
  out << "<circle cx=\"" << kCx << "\" cy=\"" << kCy << "\" r=\"" << kRadius
      << "\" fill=\"none\" stroke=\"#888\" stroke-width=\"2\"/>\n";

  if (highlight != nullptr) {
    const double c = rp1_angle(highlight->center);
    const double a0 = c - highlight->radius;
    const double a1 = c + highlight->radius;
    double x0, y0, x1, y1;
    ring_xy(a0, kRadius, x0, y0);
    ring_xy(a1, kRadius, x1, y1);
    const bool large = (a1 - a0) * 2.0 > kPi;
    out << "<path d=\"M " << num(x0) << ' ' << num(y0) << " A " << kRadius << ' ' << kRadius
        << " 0 " << (large ? 1 : 0) << " 0 " << num(x1) << ' ' << num(y1)
        << "\" fill=\"none\" stroke=\"#e4572e\" stroke-width=\"10\" stroke-linecap=\"round\""
        << " opacity=\"0.8\"/>\n";
    double xc, yc;
    ring_xy(c, kRadius + 18.0, xc, yc);
    out << "<circle cx=\"" << num(xc) << "\" cy=\"" << num(yc)
        << "\" r=\"4\" fill=\"#e4572e\"/>\n";
  }

  for (const auto& d : dirs) {
    const double theta = rp1_angle(d);
    double xi, yi, xo, yo;
    ring_xy(theta, kRadius - 8.0, xi, yi);
    ring_xy(theta, kRadius + 8.0, xo, yo);
    out << "<line x1=\"" << num(xi) << "\" y1=\"" << num(yi) << "\" x2=\"" << num(xo)
        << "\" y2=\"" << num(yo) << "\" stroke=\"#1d3557\" stroke-width=\"1.5\"/>\n";
  }

  text(out, 16, 24, "RP^1 classes: " + std::to_string(dirs.size()) + " (ring angle = 2*theta)");
  if (highlight != nullptr) {
    text(out, 16, 44, "largest empty cap radius = " + num(highlight->radius));
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_sphere_scatter(const std::vector<ProjectiveDirection>& dirs,
                                  const CapReport* highlight) {
  std::ostringstream out;
  open_svg(out);
  out << "<circle cx=\"" << kCx << "\" cy=\"" << kCy << "\" r=\"" << kRadius
      << "\" fill=\"none\" stroke=\"#888\" stroke-width=\"2\"/>\n";

  auto draw_point = [&](double x, double y, double z, const char* color) {
    const double px = kCx + kRadius * x;
    const double py = kCy - kRadius * y;
    if (z >= 0.0) {
      out << "<circle cx=\"" << num(px) << "\" cy=\"" << num(py) << "\" r=\"4\" fill=\"" << color
          << "\"/>\n";
    } else {
      out << "<circle cx=\"" << num(px) << "\" cy=\"" << num(py)
          << "\" r=\"4\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\"/>\n";
    }
  };

  for (const auto& d : dirs) {
    draw_point(d.rep[0], d.rep[1], d.rep[2], "#1d3557");
    draw_point(-d.rep[0], -d.rep[1], -d.rep[2], "#1d3557");
  }

  if (highlight != nullptr) {
    // Cap boundary: a small circle of angular radius r around the center.
    const auto& c = highlight->center.rep.coords;
    std::size_t axis = 0;
    for (std::size_t i = 1; i < 3; ++i) {
      if (std::abs(c[i]) < std::abs(c[axis])) axis = i;
    }
    std::vector<double> t1(3, 0.0);
    t1[axis] = 1.0;
    double proj = c[axis];
    double n1 = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
      t1[i] -= proj * c[i];
      n1 += t1[i] * t1[i];
    }
    n1 = std::sqrt(n1);
    for (double& v : t1) v /= n1;
    const std::vector<double> t2 = {c[1] * t1[2] - c[2] * t1[1], c[2] * t1[0] - c[0] * t1[2],
                                    c[0] * t1[1] - c[1] * t1[0]};
    out << "<path d=\"";
    for (int k = 0; k <= 64; ++k) {
      const double phi = 2.0 * kPi * k / 64.0;
      double p[3];
      for (std::size_t i = 0; i < 3; ++i) {
        p[i] = std::cos(highlight->radius) * c[i] +
               std::sin(highlight->radius) * (std::cos(phi) * t1[i] + std::sin(phi) * t2[i]);
      }
      out << (k == 0 ? 'M' : 'L') << ' ' << num(kCx + kRadius * p[0]) << ' '
          << num(kCy - kRadius * p[1]) << ' ';
    }
    out << "\" fill=\"none\" stroke=\"#e4572e\" stroke-width=\"2\"/>\n";
    draw_point(c[0], c[1], c[2], "#e4572e");
    text(out, 16, 44, "cap radius = " + num(highlight->radius));
  }

  text(out, 16, 24,
       "RP^2 classes (orthographic, both lifts): " + std::to_string(dirs.size()) +
           "; filled z>=0, hollow z<0");
  out << "</svg>\n";
  return out.str();
}

std::string render_slope_histogram(const std::vector<double>& slopes) {
  std::ostringstream out;
  open_svg(out);
  constexpr int kBins = 64;
  const double lo = slopes.empty() ? 0.0 : *std::min_element(slopes.begin(), slopes.end());
  const double hi = slopes.empty() ? 1.0 : *std::max_element(slopes.begin(), slopes.end());
  const double width = hi > lo ? hi - lo : 1.0;

  std::vector<std::size_t> bins(kBins, 0);
  for (const double s : slopes) {
    int b = static_cast<int>((s - lo) / width * kBins);
    if (b >= kBins) b = kBins - 1;
    if (b < 0) b = 0;
    ++bins[static_cast<std::size_t>(b)];
  }
  const std::size_t peak = std::max<std::size_t>(
      1, *std::max_element(bins.begin(), bins.end()));

  const double left = 60.0, right = 600.0, top = 60.0, bottom = 560.0;
  const double bw = (right - left) / kBins;
  for (int b = 0; b < kBins; ++b) {
    const double h = (bottom - top) * static_cast<double>(bins[static_cast<std::size_t>(b)]) /
                     static_cast<double>(peak);
    out << "<rect x=\"" << num(left + b * bw) << "\" y=\"" << num(bottom - h) << "\" width=\""
        << num(bw - 1.0) << "\" height=\"" << num(h) << "\" fill=\"#1d3557\"/>\n";
  }
  out << "<line x1=\"" << left << "\" y1=\"" << bottom << "\" x2=\"" << right << "\" y2=\""
      << bottom << "\" stroke=\"#333\" stroke-width=\"1\"/>\n";
  text(out, left, bottom + 24, num(lo));
  text(out, right - 80, bottom + 24, num(hi));
  text(out, 16, 24, "secant slopes: n = " + std::to_string(slopes.size()));
  out << "</svg>\n";
  return out.str();
}

}  // namespace dirset::svg
