#include <hexakit/hexfit.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <tuple>

namespace hexakit {

Region::Region(MarkedCurve b)
    : Region(std::move(b), 0.0) {}

Region::Region(MarkedCurve b, double tol_) : boundary(std::move(b)) {
  area = oriented_area(boundary);
  if (!(area > 0.0))
    throw std::invalid_argument("Region: boundary must be positively oriented");
  tol = tol_ > 0.0 ? tol_ : 1e-4 * std::sqrt(area);
  polyline = sample_polyline(boundary, tol);
  if (!curve_is_simple(boundary, tol))
    throw std::invalid_argument("Region: boundary crosses itself");
}

double hex_unit_circumradius() {
  static const double v = std::sqrt(2.0 / (3.0 * std::sqrt(3.0)));
  return v;
}

std::vector<Point> hexagon_vertices(Point c, double angle, double r) {
  std::vector<Point> v;
  v.reserve(6);
  const double rr = r * hex_unit_circumradius();
  for (int k = 0; k < 6; ++k) {
    const double a = angle + M_PI / 6.0 + k * M_PI / 3.0;
    v.push_back(c + rr * Point{std::cos(a), std::sin(a)});
  }
  return v;
}

double convex_clip_area(const std::vector<Point>& subject,
                        const std::vector<Point>& clip) {
  std::vector<Point> poly = subject;
  std::vector<Point> next;
  const std::size_t m = clip.size();
  for (std::size_t e = 0; e < m && !poly.empty(); ++e) {
    const Point a = clip[e];
    const Point b = clip[(e + 1) % m];
    next.clear();
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Point p = poly[i];
      const Point q = poly[(i + 1) % n];
      const double sp = cross(b - a, p - a);
      const double sq = cross(b - a, q - a);
      if (sp >= 0.0)
        next.push_back(p);
      if ((sp > 0.0 && sq < 0.0) || (sp < 0.0 && sq > 0.0)) {
        const double t = sp / (sp - sq);
        next.push_back(p + t * (q - p));
      }
    }
    poly.swap(next);
  }
  if (poly.size() < 3)
    return 0.0;
  const double a = shoelace(poly);
  if (std::isnan(a))
    throw std::runtime_error("convex_clip_area: degenerate clip");
  return std::max(a, 0.0);
}

double sym_diff_area(const Region& rg, Point center, double angle) {
  const double inter =
      convex_clip_area(rg.polyline,
                       hexagon_vertices(center, angle, std::sqrt(rg.area)));
  // |A| + |B| - 2|A /\ B| with |B| = |A|; clamp the cancellation noise when
  // the hexagon matches the region almost exactly
  return std::max(0.0, rg.area + rg.area - 2.0 * inter);
}

namespace {

struct Moments {
  Point centroid;
  double principal_angle; // of the larger principal axis
};

Moments polygon_moments(const std::vector<Point>& p) {
  const std::size_t n = p.size();
  double a2 = 0.0, cx = 0.0, cy = 0.0, ixx = 0.0, iyy = 0.0, ixy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point u = p[i];
    const Point v = p[(i + 1) % n];
    const double c = cross(u, v);
    a2 += c;
    cx += (u.x + v.x) * c;
    cy += (u.y + v.y) * c;
    ixx += (u.x * u.x + u.x * v.x + v.x * v.x) * c;
    iyy += (u.y * u.y + u.y * v.y + v.y * v.y) * c;
    ixy += (u.x * v.y + 2.0 * u.x * u.y + 2.0 * v.x * v.y + v.x * u.y) * c;
  }
  const double area = 0.5 * a2;
  Moments m;
  m.centroid = {cx / (6.0 * area), cy / (6.0 * area)};
  const double sxx = ixx / (12.0 * area) - m.centroid.x * m.centroid.x;
  const double syy = iyy / (12.0 * area) - m.centroid.y * m.centroid.y;
  const double sxy = ixy / (24.0 * area) - m.centroid.x * m.centroid.y;
  m.principal_angle = 0.5 * std::atan2(2.0 * sxy, sxx - syy);
  return m;
}

double fold_angle(double a) {
  const double period = M_PI / 3.0;
  double r = std::fmod(a, period);
  if (r < 0.0)
    r += period;
  return r;
}

struct Candidate {
  double value;
  double angle;
  Point center;

  bool operator<(const Candidate& o) const {
    return std::tie(value, angle, center.x, center.y) <
           std::tie(o.value, o.angle, o.center.x, o.center.y);
  }
};

} // namespace

HexFit fit_hexagon(const Region& rg) {
  const double r = std::sqrt(rg.area);
  const Moments mo = polygon_moments(rg.polyline);
  const double base = fold_angle(mo.principal_angle);
  const double step = 0.05 * r;

  auto eval = [&](Point c, double ang) {
    return Candidate{sym_diff_area(rg, c, ang), fold_angle(ang), c};
  };

  Candidate best = eval(mo.centroid, base);
  for (int ia = 0; ia < 24; ++ia) {
    const double ang = fold_angle(base + ia * (M_PI / 3.0) / 24.0);
    for (int ix = -1; ix <= 1; ++ix) {
      for (int iy = -1; iy <= 1; ++iy) {
        const Point c = mo.centroid + Point{ix * step, iy * step};
        best = std::min(best, eval(c, ang));
      }
    }
  }

  // Nelder-Mead on (cx, cy, angle)
  using Vec3 = std::array<double, 3>;
  auto objective = [&](const Vec3& v) {
    return sym_diff_area(rg, {v[0], v[1]}, v[2]);
  };
  std::array<Vec3, 4> simplex;
  simplex[0] = {best.center.x, best.center.y, best.angle};
  simplex[1] = {best.center.x + 0.5 * step, best.center.y, best.angle};
  simplex[2] = {best.center.x, best.center.y + 0.5 * step, best.angle};
  simplex[3] = {best.center.x, best.center.y, best.angle + M_PI / 72.0};
  std::array<double, 4> fv;
  for (int i = 0; i < 4; ++i)
    fv[i] = objective(simplex[i]);

  auto order = [&] {
    std::array<int, 4> idx{0, 1, 2, 3};
    std::sort(idx.begin(), idx.end(),
              [&](int a, int b) { return fv[a] < fv[b]; });
    std::array<Vec3, 4> s2;
    std::array<double, 4> f2;
    for (int i = 0; i < 4; ++i) {
      s2[i] = simplex[idx[i]];
      f2[i] = fv[idx[i]];
    }
    simplex = s2;
    fv = f2;
  };

  for (int it = 0; it < 200; ++it) {
    order();
    Vec3 centroid{};
    for (int i = 0; i < 3; ++i)
      for (int d = 0; d < 3; ++d)
        centroid[d] += simplex[i][d] / 3.0;
    auto blend = [&](double t) {
      Vec3 v;
      for (int d = 0; d < 3; ++d)
        v[d] = centroid[d] + t * (centroid[d] - simplex[3][d]);
      return v;
    };
    const Vec3 refl = blend(1.0);
    const double fr = objective(refl);
    if (fr < fv[0]) {
      const Vec3 exp_ = blend(2.0);
      const double fe = objective(exp_);
      if (fe < fr) {
        simplex[3] = exp_;
        fv[3] = fe;
      } else {
        simplex[3] = refl;
        fv[3] = fr;
      }
    } else if (fr < fv[2]) {
      simplex[3] = refl;
      fv[3] = fr;
    } else {
      const Vec3 con = blend(fr < fv[3] ? 0.5 : -0.5);
      const double fc = objective(con);
      if (fc < std::min(fr, fv[3])) {
        simplex[3] = con;
        fv[3] = fc;
      } else {
        for (int i = 1; i < 4; ++i) {
          for (int d = 0; d < 3; ++d)
            simplex[i][d] = 0.5 * (simplex[i][d] + simplex[0][d]);
          fv[i] = objective(simplex[i]);
        }
      }
    }
  }
  order();

  const Candidate refined =
      eval({simplex[0][0], simplex[0][1]}, simplex[0][2]);
  best = std::min(best, refined);

  HexFit fit;
  fit.center = best.center;
  fit.angle = best.angle;
  fit.scale = r;
  fit.sym_diff = best.value;
  return fit;
}

double d_hex(const Region& rg) { return fit_hexagon(rg).sym_diff; }

double hausdorff_distance(const std::vector<Point>& a,
                          const std::vector<Point>& b) {
  if (a.empty() || b.empty())
    throw std::invalid_argument("hausdorff_distance: empty point set");
  auto directed = [](const std::vector<Point>& u, const std::vector<Point>& v) {
    double worst = 0.0;
    for (const Point& p : u) {
      double nearest = dist(p, v.front());
      for (const Point& q : v)
        nearest = std::min(nearest, dist(p, q));
      worst = std::max(worst, nearest);
    }
    return worst;
  };
  return std::max(directed(a, b), directed(b, a));
}

} // namespace hexakit
