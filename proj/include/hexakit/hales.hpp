#pragma once

#include <hexakit/geometry.hpp>

namespace hexakit {

// 12^(1/4), the hexagonal isoperimetric constant: a unit-area regular
// hexagon has perimeter 2 * 12^(1/4).
double twelve_quarter();

struct HalesConstants {
  double a = 3.0 / 50.0;
  // a2 = c/8 where c is the certified working constant of the scalar
  // ledger (min of the regional lower bounds, attained by f_{5,4}(1, 19/100));
  // a1 = a + a2.
  double a2 = 2.4401997886023588e-4;
  double a1 = 3.0 / 50.0 + 2.4401997886023588e-4;
  double a3_hex = 0.01; // empirical coefficient, only active for k = 6
};

// deficit = L + 12^(1/4) sigma - 2 * 12^(1/4) A; zero exactly on the
// unit-area regular hexagon.
double deficit(const MarkedCurve& c);
double deficit(const PolyChainCurve& c);

// epsilon = a (k - 6) + 12^(1/4) sigma - 2 * 12^(1/4) min(1, A)
double epsilon_excess(const MarkedCurve& c, const HalesConstants& = {});
double epsilon_excess(const PolyChainCurve& c, const HalesConstants& = {});

// Scalar models: g collects the terms shared by all branches, the f's add
// the length lower bound appropriate to each curve class.
double g_term(int k, double x, double y, const HalesConstants& = {});
double f_term(int k, int i, double x, double y, const HalesConstants& = {});
double f_max(int k, double x, double y, const HalesConstants& = {});

// Reduction pipeline.  Each step preserves sigma (step three up to one
// rounding per transfer) and never increases L + epsilon.
MarkedCurve reduce_step_one(const PolyChainCurve& c);   // collapse gaps
MarkedCurve reduce_step_two(MarkedCurve c);             // clamp below -1/2
MarkedCurve reduce_step_three(MarkedCurve c);           // cancel mixed signs
MarkedCurve canonicalize(const PolyChainCurve& c);

// L + a1 (k - 6) + 12^(1/4) sigma - 2 * 12^(1/4) A - a2 |k - 6|
//   - a3(k) (d_hex^2 + (1 - A)),   a3(6) = a3_hex, else 0.
// Requires a simple curve with A <= 1, and A >= 1/100 when 2 <= k <= 6.
double quantitative_gap(const PolyChainCurve& c, const HalesConstants& = {});

} // namespace hexakit
