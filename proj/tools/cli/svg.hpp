#pragma once

#include <string>
#include <vector>

namespace qchaos::cli::svg {

enum class Style { Line, Points, Steps };

struct Series {
  std::string name;
  Style style = Style::Line;
  std::vector<double> x;
  std::vector<double> y;
};

struct Panel {
  std::string title;
  std::string xlabel;
  std::string ylabel;
  std::vector<Series> series;
  bool equal_aspect = false;  // spectra in the complex plane
  bool unit_circle = false;
};

struct Figure {
  std::string title;
  std::vector<Panel> panels;
  int columns = 2;
};

// Deterministic text; numbers go through io::fmt-style fixed formatting.
std::string render(const Figure& f);

// Histogram helper returning bin centres and densities (unit area).
void density_histogram(const std::vector<double>& x, int bins, double lo, double hi, std::vector<double>& centres,
                       std::vector<double>& dens);

}  // namespace qchaos::cli::svg
