#pragma once

#include <hexakit/geometry.hpp>

#include <vector>

namespace hexakit {

// Isoperimetric data for closed polygonal loops that may self-intersect
// (immersed).  The inequality P^2 >= p(k)^2 A holds with the algebraic
// (signed, shoelace) area A, with equality exactly for regular convex
// k-gons.

double polygon_perimeter(const std::vector<Point>& v);
double polygon_oriented_area(const std::vector<Point>& v); // signed shoelace

// p(k) = 2 sqrt(k tan(pi/k)), k >= 3; the perimeter of the unit-area regular
// k-gon.
double p_of_k(int k);

// P^2 - p(k)^2 A for the loop; nonnegative up to rounding.
double immersed_iso_margin(const std::vector<Point>& v);

// Area/perimeter^2 style ratio of the equiangular winding-n configuration
// on a circle: (1/k) sin(2 pi n/k) / (1 - cos(2 pi n/k)).  Degenerate for
// 2n = k.
double circle_config_ratio(int k, int n);

// For points exp(i theta_j) on the unit circle with gaps w_j = theta_{j+1} -
// theta_j: ratio a = N/D^2 with N = sum sin w_j, D = sum sqrt(1 - cos w_j).
double area_ratio(const std::vector<double>& thetas);
std::vector<double> area_ratio_gradient(const std::vector<double>& thetas);

} // namespace hexakit
