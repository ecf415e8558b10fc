#include <hexakit/interval.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hexakit {

namespace {

const double k_inf = std::numeric_limits<double>::infinity();

double up4(double x) {
  for (int i = 0; i < 4; ++i)
    x = std::nextafter(x, k_inf);
  return x;
}

double dn4(double x) {
  for (int i = 0; i < 4; ++i)
    x = std::nextafter(x, -k_inf);
  return x;
}

Interval make(double lo, double hi) { return {dn4(lo), up4(hi)}; }

} // namespace

Interval Interval::of(double l, double h) {
  if (!(l <= h))
    throw std::invalid_argument("Interval: lo > hi");
  return {l, h};
}

Interval Interval::rational(long long p, long long q) {
  return Interval::of(static_cast<double>(p)) /
         Interval::of(static_cast<double>(q));
}

Interval Interval::pi() { return {M_PI, std::nextafter(M_PI, k_inf)}; }

double Interval::mag() const { return std::max(std::fabs(lo), std::fabs(hi)); }

Interval operator+(Interval a, Interval b) {
  return make(a.lo + b.lo, a.hi + b.hi);
}

Interval operator-(Interval a, Interval b) {
  return make(a.lo - b.hi, a.hi - b.lo);
}

Interval operator-(Interval a) { return {-a.hi, -a.lo}; }

Interval operator*(Interval a, Interval b) {
  const double p1 = a.lo * b.lo, p2 = a.lo * b.hi;
  const double p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return make(std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4}));
}

Interval operator/(Interval a, Interval b) {
  if (b.lo <= 0.0 && b.hi >= 0.0)
    throw std::domain_error("Interval division by an interval containing 0");
  const double p1 = a.lo / b.lo, p2 = a.lo / b.hi;
  const double p3 = a.hi / b.lo, p4 = a.hi / b.hi;
  return make(std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4}));
}

Interval sqrt_i(Interval a) {
  // partial-function extension: intersect with the domain so that outward
  // rounding through 0 (e.g. pi * [0, 0]) stays usable
  if (a.hi < 0.0)
    throw std::domain_error("sqrt_i of an interval below 0");
  const double lo = a.lo <= 0.0 ? 0.0 : std::max(0.0, dn4(std::sqrt(a.lo)));
  return {lo, up4(std::sqrt(a.hi))};
}

Interval abs_i(Interval a) {
  if (a.lo >= 0.0)
    return a;
  if (a.hi <= 0.0)
    return -a;
  return {0.0, std::max(-a.lo, a.hi)};
}

Interval min_i(Interval a, Interval b) {
  return {std::min(a.lo, b.lo), std::min(a.hi, b.hi)};
}

Interval max_i(Interval a, Interval b) {
  return {std::max(a.lo, b.lo), std::max(a.hi, b.hi)};
}

Interval tan_i(Interval a) {
  // M_PI < pi, so requiring hi < M_PI/2 keeps us inside the branch
  if (!(a.lo > 0.0) || !(a.hi < M_PI / 2.0))
    throw std::domain_error("tan_i outside (0, pi/2)");
  return {dn4(std::tan(a.lo)), up4(std::tan(a.hi))};
}

namespace {

// Conservative test for a critical point 2 pi k + offset inside [lo, hi].
bool has_critical(double lo, double hi, double offset) {
  const double two_pi = 2.0 * M_PI;
  const long k0 = static_cast<long>(std::floor((lo - offset) / two_pi)) - 1;
  const long k1 = static_cast<long>(std::ceil((hi - offset) / two_pi)) + 1;
  for (long k = k0; k <= k1; ++k) {
    const double c = offset + two_pi * static_cast<double>(k);
    if (c > lo - 1e-9 && c < hi + 1e-9)
      return true;
  }
  return false;
}

} // namespace

Interval sin_i(Interval a) {
  if (a.width() >= 2.0 * M_PI)
    return {-1.0, 1.0};
  double lo = std::min(std::sin(a.lo), std::sin(a.hi));
  double hi = std::max(std::sin(a.lo), std::sin(a.hi));
  if (has_critical(a.lo, a.hi, M_PI / 2.0))
    hi = 1.0;
  if (has_critical(a.lo, a.hi, -M_PI / 2.0))
    lo = -1.0;
  return {std::max(-1.0, dn4(lo)), std::min(1.0, up4(hi))};
}

Interval cos_i(Interval a) {
  if (a.width() >= 2.0 * M_PI)
    return {-1.0, 1.0};
  double lo = std::min(std::cos(a.lo), std::cos(a.hi));
  double hi = std::max(std::cos(a.lo), std::cos(a.hi));
  if (has_critical(a.lo, a.hi, 0.0))
    hi = 1.0;
  if (has_critical(a.lo, a.hi, M_PI))
    lo = -1.0;
  return {std::max(-1.0, dn4(lo)), std::min(1.0, up4(hi))};
}

} // namespace hexakit
