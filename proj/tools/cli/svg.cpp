#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace qchaos::cli::svg {

namespace {

constexpr int kPanelW = 420, kPanelH = 320;
constexpr int kMarginL = 58, kMarginR = 14, kMarginT = 30, kMarginB = 44;
const char* kColours[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#17becf", "#7f7f7f"};

std::string num(double v) {
  char b[32];
  std::snprintf(b, sizeof b, "%.2f", v);
  return b;
}

std::string tick_label(double v) {
  char b[32];
  if (v != 0 && (std::abs(v) < 1e-3 || std::abs(v) >= 1e5))
    std::snprintf(b, sizeof b, "%.1e", v);
  else
    std::snprintf(b, sizeof b, "%g", std::abs(v) < 1e-12 ? 0.0 : v);
  return b;
}

std::string escape(const std::string& s) {
  std::string o;
  for (char c : s) {
    if (c == '<') o += "&lt;";
    else if (c == '>') o += "&gt;";
    else if (c == '&') o += "&amp;";
    else o += c;
  }
  return o;
}

double nice_step(double span) {
  double raw = span / 5;
  double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double r = raw / mag;
  return (r < 1.5 ? 1 : r < 3 ? 2 : r < 7 ? 5 : 10) * mag;
}

void panel_svg(std::ostringstream& o, const Panel& p, int ox, int oy) {
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin, ymin = xmin, ymax = -xmin;
  for (const auto& s : p.series)
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
      xmin = std::min(xmin, s.x[i]);
      xmax = std::max(xmax, s.x[i]);
      ymin = std::min(ymin, s.y[i]);
      ymax = std::max(ymax, s.y[i]);
    }
  if (p.unit_circle) {
    xmin = std::min(xmin, -1.0);
    xmax = std::max(xmax, 1.0);
    ymin = std::min(ymin, -1.0);
    ymax = std::max(ymax, 1.0);
  }
  if (!std::isfinite(xmin)) xmin = 0, xmax = 1, ymin = 0, ymax = 1;
  if (xmax - xmin < 1e-12) xmin -= 0.5, xmax += 0.5;
  if (ymax - ymin < 1e-12) ymin -= 0.5, ymax += 0.5;
  double padx = 0.03 * (xmax - xmin), pady = 0.05 * (ymax - ymin);
  xmin -= padx, xmax += padx, ymin -= pady, ymax += pady;
  const int W = kPanelW - kMarginL - kMarginR, H = kPanelH - kMarginT - kMarginB;
  if (p.equal_aspect) {
    double sx = (xmax - xmin) / W, sy = (ymax - ymin) / H, s = std::max(sx, sy);
    double cx = 0.5 * (xmin + xmax), cy = 0.5 * (ymin + ymax);
    xmin = cx - s * W / 2, xmax = cx + s * W / 2, ymin = cy - s * H / 2, ymax = cy + s * H / 2;
  }
  auto X = [&](double x) { return ox + kMarginL + (x - xmin) / (xmax - xmin) * W; };
  auto Y = [&](double y) { return oy + kMarginT + (ymax - y) / (ymax - ymin) * H; };

  o << "<g>\n";
  o << "<rect x=\"" << ox + kMarginL << "\" y=\"" << oy + kMarginT << "\" width=\"" << W << "\" height=\"" << H
    << "\" fill=\"none\" stroke=\"#333\"/>\n";
  o << "<text x=\"" << ox + kMarginL + W / 2 << "\" y=\"" << oy + 18 << "\" text-anchor=\"middle\" font-size=\"13\">"
    << escape(p.title) << "</text>\n";
  o << "<text x=\"" << ox + kMarginL + W / 2 << "\" y=\"" << oy + kPanelH - 8
    << "\" text-anchor=\"middle\" font-size=\"12\">" << escape(p.xlabel) << "</text>\n";
  o << "<text x=\"" << ox + 14 << "\" y=\"" << oy + kMarginT + H / 2 << "\" text-anchor=\"middle\" font-size=\"12\""
    << " transform=\"rotate(-90 " << ox + 14 << " " << oy + kMarginT + H / 2 << ")\">" << escape(p.ylabel)
    << "</text>\n";
  for (int axis = 0; axis < 2; ++axis) {
    double lo = axis ? ymin : xmin, hi = axis ? ymax : xmax, st = nice_step(hi - lo);
    for (double t = std::ceil(lo / st) * st; t <= hi + 1e-12; t += st) {
      if (axis == 0)
        o << "<text x=\"" << num(X(t)) << "\" y=\"" << oy + kMarginT + H + 15
          << "\" text-anchor=\"middle\" font-size=\"10\">" << tick_label(t) << "</text>\n";
      else
        o << "<text x=\"" << ox + kMarginL - 4 << "\" y=\"" << num(Y(t) + 3)
          << "\" text-anchor=\"end\" font-size=\"10\">" << tick_label(t) << "</text>\n";
    }
  }
  if (p.unit_circle) {
    o << "<ellipse cx=\"" << num(X(0)) << "\" cy=\"" << num(Y(0)) << "\" rx=\"" << num(X(1) - X(0)) << "\" ry=\""
      << num(Y(0) - Y(1)) << "\" fill=\"none\" stroke=\"#aaa\" stroke-dasharray=\"4 3\"/>\n";
  }
  int k = 0;
  for (const auto& s : p.series) {
    const char* col = kColours[k % 8];
    if (s.style == Style::Points) {
      for (std::size_t i = 0; i < s.x.size(); ++i) {
        if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
        o << "<circle cx=\"" << num(X(s.x[i])) << "\" cy=\"" << num(Y(s.y[i])) << "\" r=\"1.6\" fill=\"" << col
          << "\"/>\n";
      }
    } else {
      o << "<polyline fill=\"none\" stroke=\"" << col << "\" stroke-width=\"1.4\" points=\"";
      for (std::size_t i = 0; i < s.x.size(); ++i) {
        if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
        if (s.style == Style::Steps && s.x.size() > 1) {
          double h = 0.5 * (i + 1 < s.x.size() ? s.x[i + 1] - s.x[i] : s.x[i] - s.x[i - 1]);
          o << num(X(s.x[i] - h)) << "," << num(Y(s.y[i])) << " " << num(X(s.x[i] + h)) << "," << num(Y(s.y[i]))
            << " ";
        } else {
          o << num(X(s.x[i])) << "," << num(Y(s.y[i])) << " ";
        }
      }
      o << "\"/>\n";
    }
    if (!s.name.empty()) {
      int ly = oy + kMarginT + 14 + 14 * k;
      o << "<rect x=\"" << ox + kMarginL + W - 128 << "\" y=\"" << ly - 8 << "\" width=\"10\" height=\"3\" fill=\""
        << col << "\"/>\n";
      o << "<text x=\"" << ox + kMarginL + W - 114 << "\" y=\"" << ly - 3 << "\" font-size=\"10\">" << escape(s.name)
        << "</text>\n";
    }
    ++k;
  }
  o << "</g>\n";
}

}  // namespace

std::string render(const Figure& f) {
  const int cols = std::max(1, std::min<int>(f.columns, static_cast<int>(f.panels.size())));
  const int rows = (static_cast<int>(f.panels.size()) + cols - 1) / cols;
  const int width = cols * kPanelW, height = rows * kPanelH + 30;
  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
    << "\" viewBox=\"0 0 " << width << " " << height << "\" font-family=\"sans-serif\">\n";
  o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  o << "<text x=\"" << width / 2 << "\" y=\"20\" text-anchor=\"middle\" font-size=\"15\">" << escape(f.title)
    << "</text>\n";
  for (std::size_t i = 0; i < f.panels.size(); ++i)
    panel_svg(o, f.panels[i], static_cast<int>(i % cols) * kPanelW, 30 + static_cast<int>(i / cols) * kPanelH);
  o << "</svg>\n";
  return o.str();
}

void density_histogram(const std::vector<double>& x, int bins, double lo, double hi, std::vector<double>& centres,
                       std::vector<double>& dens) {
  centres.assign(bins, 0.0);
  dens.assign(bins, 0.0);
  const double w = (hi - lo) / bins;
  for (int b = 0; b < bins; ++b) centres[b] = lo + (b + 0.5) * w;
  if (x.empty()) return;
  for (double v : x) {
    if (v < lo || v > hi) continue;
    int b = std::min(bins - 1, static_cast<int>((v - lo) / w));
    dens[b] += 1.0;
  }
  for (double& d : dens) d /= x.size() * w;
}

}  // namespace qchaos::cli::svg
