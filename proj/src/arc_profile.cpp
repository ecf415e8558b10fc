#include <hexakit/arc_profile.hpp>

#include <cmath>
#include <stdexcept>

namespace hexakit {

namespace {

constexpr double k_theta_cap = M_PI - 1e-6;

// theta - sin(theta)cos(theta) = theta - sin(2 theta)/2 loses all leading
// digits as theta -> 0; the series keeps full relative accuracy below 1/4.
double num_series(double t) {
  const double t2 = t * t;
  return t * t2 *
         (2.0 / 3.0 +
          t2 * (-2.0 / 15.0 +
                t2 * (4.0 / 315.0 +
                      t2 * (-2.0 / 2835.0 +
                            t2 * (4.0 / 155925.0 +
                                  t2 * (-4096.0 / 6227020800.0))))));
}

// dp/dtheta = (sin theta - theta cos theta) / (2 sin^3 theta) > 0 on (0, pi).
double dp_dtheta(double t) {
  if (t < 0.25) {
    const double t2 = t * t;
    return 1.0 / 6.0 + t2 * (1.0 / 15.0 + t2 * (1.0 / 63.0));
  }
  const double s = std::sin(t);
  return (s - t * std::cos(t)) / (2.0 * s * s * s);
}

} // namespace

double p_of_theta(double theta) {
  if (!(theta > 0.0) || !(theta < M_PI))
    throw std::domain_error("p_of_theta: theta outside (0, pi)");
  const double s = std::sin(theta);
  const double num = theta < 0.25 ? num_series(theta)
                                  : theta - 0.5 * std::sin(2.0 * theta);
  return num / (4.0 * s * s);
}

double p_max() {
  static const double v = p_of_theta(k_theta_cap);
  return v;
}

double solve_theta(double x) {
  if (!(x >= 0.0))
    throw std::domain_error("solve_theta: negative area ratio");
  if (x == 0.0)
    return 0.0;
  if (x > p_max())
    throw std::domain_error("solve_theta: area ratio above p_max");

  // Tiny x: p(theta) ~ theta/6 + theta^3/45, invert the two-term series.
  if (x < 1e-4 / 6.0) {
    double t = 6.0 * x;
    t = 6.0 * (x - t * t * t / 45.0);
    return t;
  }

  double lo = 0.0, hi = k_theta_cap;
  while (hi - lo > 1e-13) {
    const double mid = 0.5 * (lo + hi);
    if (p_of_theta(mid) < x)
      lo = mid;
    else
      hi = mid;
  }
  double t = 0.5 * (lo + hi);
  for (int i = 0; i < 4; ++i) {
    const double step = (p_of_theta(t) - x) / dp_dtheta(t);
    double next = t - step;
    if (next <= lo || next >= hi)
      break;
    t = next;
  }
  return t;
}

double arc1(double x) {
  if (x == 0.0)
    return 1.0;
  const double t = solve_theta(x);
  return t / std::sin(t);
}

double arc1_deriv(double x) {
  return 2.0 * std::sin(solve_theta(x));
}

double arc_len(double chord, double x) {
  if (!(chord >= 0.0))
    throw std::domain_error("arc_len: negative chord");
  if (!(x >= 0.0))
    throw std::domain_error("arc_len: negative area");
  if (chord == 0.0)
    return 2.0 * std::sqrt(M_PI * x);
  return chord * arc1(x / (chord * chord));
}

} // namespace hexakit
