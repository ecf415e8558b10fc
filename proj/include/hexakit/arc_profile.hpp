#pragma once

namespace hexakit {

// Scale-invariant circular-arc length profile.  arc1(x) is the length of the
// shortest circular arc that joins the endpoints of a unit chord while
// enclosing area x >= 0 against it; arc_len(l, x) = l * arc1(x / l^2) is the
// chord-l version, and arc_len(0, x) = 2 sqrt(pi x) (full circle limit).
//
// Both branches (convex up to x = pi/8, concave after) come from the single
// parametrization theta in (0, pi):
//   arc1(p(theta)) = theta / sin(theta),  p(theta) = (theta - sin theta cos
//   theta) / (4 sin^2 theta).
double arc1(double x);
double arc_len(double chord, double x);

// d(arc1)/dx; equals the curvature 2 sin(theta) of the unit-chord arc.
double arc1_deriv(double x);

// p(theta) above; strictly increasing on (0, pi), p(pi/2) = pi/8.
double p_of_theta(double theta);

// Inverse of p_of_theta on [0, p_max()]: bisection to width 1e-13 plus a few
// Newton steps.  solve_theta(0) = 0.
double solve_theta(double x);

// Domain cap p(pi - 1e-6); bulge ratios x / l^2 must stay below this.
double p_max();

} // namespace hexakit
