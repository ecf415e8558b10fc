#pragma once

#include <hexakit/geometry.hpp>

#include <vector>

namespace hexakit {

// Simply connected region bounded by a simple, positively oriented marked
// curve, cached as a polyline for clipping.
struct Region {
  MarkedCurve boundary;
  std::vector<Point> polyline;
  double area = 0.0; // exact oriented area of the boundary
  double tol = 0.0;  // sampling tolerance used for the polyline

  explicit Region(MarkedCurve b);
  Region(MarkedCurve b, double tol_);
};

struct HexFit {
  Point center;
  double angle = 0.0;    // folded into [0, pi/3)
  double scale = 0.0;    // r with r^2 = region area
  double sym_diff = 0.0; // area of the symmetric difference
};

// Circumradius of the unit-area regular hexagon, sqrt(2 / (3 sqrt(3))).
double hex_unit_circumradius();

// Vertices (counter-clockwise) of the unit-area regular hexagon scaled by r,
// rotated by angle and centered at c.  angle = 0 puts a vertex at direction
// pi/6.
std::vector<Point> hexagon_vertices(Point c, double angle, double r);

// Area of subject /\ clip, clip convex and counter-clockwise.
double convex_clip_area(const std::vector<Point>& subject,
                        const std::vector<Point>& clip);

double sym_diff_area(const Region& rg, Point center, double angle);

// Best-fitting regular hexagon of matched area: coarse placement grid seeded
// from the centroid and principal axis, then Nelder-Mead refinement.  The
// reported sym_diff is an upper bound for the true infimum.
HexFit fit_hexagon(const Region& rg);

double d_hex(const Region& rg);

double hausdorff_distance(const std::vector<Point>& a,
                          const std::vector<Point>& b);

} // namespace hexakit
