#pragma once

#include <map>
#include <optional>
#include <string>

#include "ebnoise/noise_measures.hpp"

namespace ebnoise {

enum class Figure { Fig1, Fig2, Fig2Inset, Fig3, Fig4, Fig5 };

std::optional<Figure> figure_from_name(const std::string& name);
std::string figure_name(Figure f);
/// Exact CSV header line (no trailing newline).
std::string figure_header(Figure f);

struct Axis {
  double min = 0.0;
  double max = 1.0;
  int steps = 200;
  double at(int i) const { return min + (max - min) * i / (steps - 1); }
};

struct SweepSpec {
  Figure figure = Figure::Fig2;
  Axis x;
  /// Second axis for the two-dimensional figures.
  std::optional<Axis> y;
  /// fig1: lambda3; fig2-inset, fig4: gamma.
  std::map<std::string, double> fixed;
  /// fig4 filter: "S1" or "R2R1".
  std::string filter = "S1";
  int cap = kDefaultCap;
  /// Euler points tried by fig3 after the named filters.
  int budget = 0;
};

/// Default window and fixed values for each figure.
SweepSpec default_sweep(Figure f);

/// Throws InvariantError on an invalid spec.
void validate(const SweepSpec& s);

/// Full CSV document, header first, rows in row-major grid order.
std::string run_sweep(const SweepSpec& s);

/// Shortest round-trip decimal form.
std::string format_shortest(double x);

}  // namespace ebnoise
