// Zero set of a real bivariate polynomial on a rational grid (marching squares).
#ifndef STABKIT_TOOLS_CONTOUR_HPP
#define STABKIT_TOOLS_CONTOUR_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "stabkit/multi_poly.hpp"

namespace stabkit::contour {

struct Window {
  Rational z_lo, z_hi, w_lo, w_hi;
};

/// Parses "z_lo,z_hi,w_lo,w_hi"; throws std::invalid_argument.
Window parse_window(const std::string& text);

struct Contour {
  /// Crossing points on grid edges, found by exact linear interpolation.
  std::vector<std::pair<Rational, Rational>> points;
  /// Chains of point indices; a closed chain repeats its first index at the end.
  std::vector<std::vector<std::size_t>> polylines;
};

/// Samples F on a (resolution + 1)^2 grid over the window. A crossing is
/// recorded on every grid edge whose endpoints differ in the predicate F > 0.
/// Throws std::invalid_argument unless F is a real polynomial in two variables.
Contour extract(const MultiPoly& F, const Window& window, unsigned resolution);

std::string to_csv(const Contour& c);
std::string to_svg(const Contour& c, const Window& window);

}  // namespace stabkit::contour

#endif  // STABKIT_TOOLS_CONTOUR_HPP
