#pragma once

namespace hexakit {

// Closed interval with outward-rounded arithmetic.  Every operation inflates
// the result by 4 ulps per side, which dominates the 0.5 ulp error of the
// correctly rounded hardware ops; soundness over tightness.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  static Interval of(double v) { return {v, v}; }
  static Interval of(double l, double h);
  static Interval rational(long long p, long long q);
  static Interval pi();

  bool contains(double v) const { return lo <= v && v <= hi; }
  double width() const { return hi - lo; }
  double mag() const; // max |x| over the interval
};

Interval operator+(Interval a, Interval b);
Interval operator-(Interval a, Interval b);
Interval operator-(Interval a);
Interval operator*(Interval a, Interval b);
Interval operator/(Interval a, Interval b); // throws if 0 in b

Interval sqrt_i(Interval a); // domain-intersecting; throws only if a.hi < 0
Interval abs_i(Interval a);
Interval min_i(Interval a, Interval b);
Interval max_i(Interval a, Interval b);

// tan on a sub-interval of (0, pi/2); throws outside that branch.
Interval tan_i(Interval a);

// Conservative enclosures valid on any input.
Interval sin_i(Interval a);
Interval cos_i(Interval a);

} // namespace hexakit
