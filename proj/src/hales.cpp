#include <hexakit/hales.hpp>

#include <hexakit/arc_profile.hpp>
#include <hexakit/hexfit.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hexakit {

double twelve_quarter() {
  static const double v = std::sqrt(std::sqrt(12.0));
  return v;
}

double deficit(const MarkedCurve& c) {
  const double t4 = twelve_quarter();
  return curve_length(c) + t4 * sigma(c) - 2.0 * t4 * oriented_area(c);
}

double deficit(const PolyChainCurve& c) {
  const double t4 = twelve_quarter();
  return curve_length(c) + t4 * sigma(c) - 2.0 * t4 * oriented_area(c);
}

namespace {

double epsilon_of(double k, double sig, double area, const HalesConstants& hc) {
  const double t4 = twelve_quarter();
  return hc.a * (k - 6.0) + t4 * sig - 2.0 * t4 * std::min(1.0, area);
}

} // namespace

double epsilon_excess(const MarkedCurve& c, const HalesConstants& hc) {
  return epsilon_of(static_cast<double>(c.size()), sigma(c), oriented_area(c),
                    hc);
}

double epsilon_excess(const PolyChainCurve& c, const HalesConstants& hc) {
  return epsilon_of(static_cast<double>(c.corner_count()), sigma(c),
                    oriented_area(c), hc);
}

double g_term(int k, double x, double y, const HalesConstants& hc) {
  if (k < 2)
    throw std::domain_error("g_term: k < 2");
  return hc.a * (k - 6.0) +
         twelve_quarter() * (y - 2.0 * std::min(1.0, x));
}

double f_term(int k, int i, double x, double y, const HalesConstants& hc) {
  const double g = g_term(k, x, y, hc);
  switch (i) {
  case 1:
    if (x < 0.0)
      throw std::domain_error("f_term: x < 0 in branch 1");
    return g + 2.0 * std::sqrt(M_PI * x);
  case 2: {
    const double arg = x + 2.0 * std::max(-y, 0.0);
    if (arg < 0.0)
      throw std::domain_error("f_term: negative argument in branch 2");
    return g + 2.0 * std::sqrt(M_PI * arg);
  }
  case 3:
    return g + 2.0 * std::sqrt(M_PI) * std::fabs(y);
  case 4: {
    if (k < 3)
      throw std::domain_error("f_term: branch 4 needs k >= 3");
    const double pos = std::max(x - y, 0.0);
    return g + 2.0 * std::sqrt(k * std::tan(M_PI / k) * pos);
  }
  default:
    throw std::domain_error("f_term: branch index outside 1..4");
  }
}

double f_max(int k, double x, double y, const HalesConstants& hc) {
  double best = f_term(k, 1, x, y, hc);
  best = std::max(best, f_term(k, 2, x, y, hc));
  best = std::max(best, f_term(k, 3, x, y, hc));
  if (k >= 3)
    best = std::max(best, f_term(k, 4, x, y, hc));
  return best;
}

MarkedCurve reduce_step_one(const PolyChainCurve& c) {
  const std::size_t k = c.corner_count();
  std::vector<Point> nodes(k);
  std::vector<double> bulges(k);
  for (std::size_t i = 0; i < k; ++i) {
    nodes[i] = c.points[c.node_index[i]];
    bulges[i] = c.gap_secant_area(i);
  }
  return MarkedCurve(std::move(nodes), std::move(bulges));
}

MarkedCurve reduce_step_two(MarkedCurve c) {
  for (double& b : c.bulges)
    b = std::max(b, -0.5);
  return c;
}

MarkedCurve reduce_step_three(MarkedCurve c) {
  const std::size_t k = c.size();
  for (;;) {
    std::size_t pos = k, neg = k;
    for (std::size_t i = 0; i < k; ++i) {
      if (c.bulges[i] > 0.0 && (pos == k || c.bulges[i] < c.bulges[pos]))
        pos = i;
      if (c.bulges[i] < 0.0 && (neg == k || c.bulges[i] < c.bulges[neg]))
        neg = i;
    }
    if (pos == k || neg == k)
      break;
    const double beta = c.bulges[pos] + c.bulges[neg];
    if (beta >= 0.0) {
      c.bulges[pos] = beta;
      c.bulges[neg] = 0.0;
    } else {
      c.bulges[pos] = 0.0;
      c.bulges[neg] = beta;
    }
  }
  return c;
}

MarkedCurve canonicalize(const PolyChainCurve& c) {
  return reduce_step_three(reduce_step_two(reduce_step_one(c)));
}

double quantitative_gap(const PolyChainCurve& c, const HalesConstants& hc) {
  if (!curve_is_simple(c, 1e-6))
    throw std::invalid_argument("quantitative_gap: curve crosses itself");
  const double area = oriented_area(c);
  if (area > 1.0 + 1e-9)
    throw std::domain_error("quantitative_gap: area above 1");
  const int k = static_cast<int>(c.corner_count());
  if (k >= 2 && k <= 6 && area < 0.01 - 1e-12)
    throw std::domain_error("quantitative_gap: area below 1/100 for k <= 6");
  const double t4 = twelve_quarter();
  double hex_penalty = 0.0;
  if (k == 6) {
    const double d = d_hex(Region(as_marked(c)));
    hex_penalty = hc.a3_hex * (d * d + (1.0 - std::min(1.0, area)));
  }
  return curve_length(c) + hc.a1 * (k - 6.0) + t4 * sigma(c) -
         2.0 * t4 * std::min(1.0, area) - hc.a2 * std::fabs(k - 6.0) -
         hex_penalty;
}

} // namespace hexakit
