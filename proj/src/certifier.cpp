#include <hexakit/certifier.hpp>

#include <hexakit/arc_profile.hpp>
#include <hexakit/hales.hpp>

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hexakit {

namespace {

struct Ctx {
  Interval a;       // coefficient of (k - 6)
  Interval pi_ = Interval::pi();
  Interval t4 = sqrt_i(sqrt_i(Interval::of(12.0)));
  Interval sqrt12 = sqrt_i(Interval::of(12.0));
  Interval sqrt_pi = sqrt_i(Interval::pi());
  Interval one = Interval::of(1.0);
  Interval two = Interval::of(2.0);

  Interval g(int k, Interval x, Interval y) const {
    return a * Interval::of(k - 6.0) + t4 * (y - two * min_i(one, x));
  }
  Interval f1(int k, Interval x, Interval y) const {
    return g(k, x, y) + two * sqrt_i(pi_ * x);
  }
  Interval f2(int k, Interval x, Interval y) const {
    const Interval ym = max_i(-y, Interval::of(0.0));
    return g(k, x, y) + two * sqrt_i(pi_ * (x + two * ym));
  }
  Interval f4(int k, Interval x, Interval y) const {
    const Interval kk = Interval::of(static_cast<double>(k));
    const Interval xp = max_i(x - y, Interval::of(0.0));
    return g(k, x, y) + two * sqrt_i(kk * tan_i(pi_ / kk) * xp);
  }
  // h(x) = 2 sqrt(pi x) - t4 x - 6/25, the k = 2 lower bound
  Interval h2(Interval x) const {
    return two * sqrt_i(pi_ * x) - t4 * x - Interval::rational(6, 25);
  }
  // phi(y) = 2 sqrt(pi)|y| + t4 y - 2 t4 - 3a, the k = 3 tail bound
  Interval phi(Interval y) const {
    return two * sqrt_pi * abs_i(y) + t4 * y - two * t4 -
           Interval::of(3.0) * a;
  }
  Interval root_disc(int k) const {
    return pi_ + two * a * Interval::of(k - 6.0) * t4;
  }
  Interval z_k(int k) const {
    return (pi_ + a * Interval::of(k - 6.0) * t4 +
            sqrt_pi * sqrt_i(root_disc(k))) /
           (two * sqrt12);
  }
  Interval y_k(int k) const {
    return (pi_ + a * Interval::of(k - 6.0) * t4 -
            sqrt_pi * sqrt_i(root_disc(k))) /
           (two * sqrt12);
  }
};

CheckResult check_gt(std::string id, std::string claim, Interval v,
                     Interval bound) {
  CheckResult r{std::move(id), std::move(claim), "inconclusive", v, 0.0};
  if (v.lo > bound.hi) {
    r.status = "certified";
    r.margin = v.lo - bound.hi;
  } else if (v.hi <= bound.lo) {
    r.status = "refuted";
    r.margin = v.hi - bound.lo;
  }
  return r;
}

CheckResult check_lt(std::string id, std::string claim, Interval v,
                     Interval bound) {
  CheckResult r{std::move(id), std::move(claim), "inconclusive", v, 0.0};
  if (v.hi < bound.lo) {
    r.status = "certified";
    r.margin = bound.lo - v.hi;
  } else if (v.lo >= bound.hi) {
    r.status = "refuted";
    r.margin = bound.hi - v.lo;
  }
  return r;
}

CheckResult check_range(std::string id, std::string claim, Interval v,
                        Interval lo, Interval hi) {
  CheckResult r{std::move(id), std::move(claim), "inconclusive", v, 0.0};
  if (v.lo > lo.hi && v.hi < hi.lo) {
    r.status = "certified";
    r.margin = std::min(v.lo - lo.hi, hi.lo - v.hi);
  } else if (v.hi <= lo.lo || v.lo >= hi.hi) {
    r.status = "refuted";
    r.margin = std::min(v.hi - lo.lo, hi.hi - v.lo);
  }
  return r;
}

CheckResult check_abs_le(std::string id, std::string claim, Interval v,
                         double tol) {
  CheckResult r{std::move(id), std::move(claim), "inconclusive", v, 0.0};
  if (v.mag() <= tol) {
    r.status = "certified";
    r.margin = tol - v.mag();
  } else if (v.lo > tol || v.hi < -tol) {
    r.status = "refuted";
    r.margin = tol - v.mag();
  }
  return r;
}

} // namespace

Certificate check_scalar_ledger(double a_value) {
  Ctx c;
  c.a = Interval::of(a_value);
  const Interval r = Interval::of(0.0); // shorthand zero
  std::vector<CheckResult> out;

  // L1: a < sqrt(pi)/2 - (3/8) 12^(1/4), and that bound exceeds 1/10
  const Interval l1 = c.sqrt_pi / c.two - Interval::rational(3, 8) * c.t4;
  out.push_back(check_gt("L1.a", "sqrt(pi)/2 - (3/8) 12^(1/4) > a", l1, c.a));
  out.push_back(check_gt("L1.tenth", "sqrt(pi)/2 - (3/8) 12^(1/4) > 1/10", l1,
                         Interval::rational(1, 10)));

  // L2: c(a) = 2 sqrt(pi) - (3/2) 12^(1/4) - 4a in (0.51, 0.52)
  const Interval ca = c.two * c.sqrt_pi - Interval::rational(3, 2) * c.t4 -
                      Interval::of(4.0) * c.a;
  out.push_back(check_range("L2", "2 sqrt(pi) - (3/2) 12^(1/4) - 4a in (0.51, 0.52)",
                            ca, Interval::rational(51, 100),
                            Interval::rational(52, 100)));

  // L3: step-four chord function agrees with its secant at z = 3/2 and
  // stays above 7/10 there
  const Interval z32 = Interval::rational(3, 2);
  const Interval f4f = (c.two * c.sqrt_pi - c.t4) * z32 +
                       (c.sqrt_pi - Interval::rational(3, 2) * c.t4) -
                       Interval::of(4.0) * c.a;
  const Interval f4g = c.two * c.sqrt_pi * sqrt_i(c.one + c.two * z32) -
                       c.t4 * z32 - Interval::rational(3, 2) * c.t4 -
                       Interval::of(4.0) * c.a;
  out.push_back(check_abs_le("L3.eq", "chord and secant agree at z = 3/2",
                             f4f - f4g, 1e-12));
  out.push_back(check_gt("L3.lb", "chord value at z = 3/2 >= 7/10", f4f,
                         Interval::rational(7, 10)));
  out.push_back(check_gt("L3.c", "2 sqrt(pi) - (3/2) 12^(1/4) >= 7/10",
                         c.two * c.sqrt_pi - Interval::rational(3, 2) * c.t4,
                         Interval::rational(7, 10)));

  // L4: k = 2 bound min(h(1), h(1/100)) > 9/100
  const Interval l4 = min_i(c.h2(c.one), c.h2(Interval::rational(1, 100)));
  out.push_back(check_gt("L4", "min(h(1), h(1/100)) > 9/100 for h = 2 sqrt(pi x) - 12^(1/4) x - 6/25",
                         l4, Interval::rational(9, 100)));

  // L5: large-|y| ratio bounds and the tail values phi
  const Interval num = c.two * c.t4 + Interval::rational(9, 50);
  out.push_back(check_lt("L5.r1", "(2 t4 + 9/50)/(2 sqrt(pi) + t4) < 4/5",
                         num / (c.two * c.sqrt_pi + c.t4),
                         Interval::rational(4, 5)));
  out.push_back(check_lt("L5.r2", "(2 t4 + 9/50)/(2 sqrt(pi) - t4) < 5/2",
                         num / (c.two * c.sqrt_pi - c.t4),
                         Interval::rational(5, 2)));
  const Interval c0a = c.phi(Interval::rational(4, 5));
  const Interval c0b = c.phi(Interval::rational(-5, 2));
  out.push_back(check_gt("L5.c0a", "phi(4/5) > 0", c0a, r));
  out.push_back(check_gt("L5.c0b", "phi(-5/2) > 0", c0b, r));

  // L6: 2 sqrt(6 pi) - (5/2) t4 - 2 sqrt(pi) > 2/5
  const Interval l6 = c.two * sqrt_i(Interval::of(6.0) * c.pi_) -
                      Interval::rational(5, 2) * c.t4 - c.two * c.sqrt_pi;
  out.push_back(check_gt("L6", "2 sqrt(6 pi) - (5/2) 12^(1/4) - 2 sqrt(pi) > 2/5",
                         l6, Interval::rational(2, 5)));

  // L7: 4 pi - (36/25) t4 > 9
  out.push_back(check_gt("L7", "4 pi - (36/25) 12^(1/4) > 9",
                         Interval::of(4.0) * c.pi_ -
                             Interval::rational(36, 25) * c.t4,
                         Interval::of(9.0)));

  // L8: roots of a(k-6) - 2 t4 x + 2 sqrt(pi x) = 0
  out.push_back(check_gt("L8.z9", "z_9 > 1", c.z_k(9), c.one));
  out.push_back(check_range("L8.z6", "z_6 in (0.9068, 0.9070)", c.z_k(6),
                            Interval::rational(9068, 10000),
                            Interval::rational(9070, 10000)));
  out.push_back(check_abs_le("L8.z6id", "z_6 = pi/sqrt(12)",
                             c.z_k(6) - c.pi_ / c.sqrt12, 1e-12));
  out.push_back(check_gt("L8.z3", "z_3 > 4/5", c.z_k(3),
                         Interval::rational(4, 5)));
  out.push_back(check_lt("L8.y3", "y_3 < 1/100", c.y_k(3),
                         Interval::rational(1, 100)));

  // L9: sqrt(2 pi) - 2 t4 < -1
  out.push_back(check_lt("L9", "sqrt(2 pi) - 2 12^(1/4) < -1",
                         sqrt_i(c.two * c.pi_) - c.two * c.t4,
                         Interval::of(-1.0)));

  // L10: f_{7,2} endpoints
  out.push_back(check_gt("L10.a", "f_{7,2}(1, -5/2) >= 3/10",
                         c.f2(7, c.one, Interval::rational(-5, 2)),
                         Interval::rational(3, 10)));
  out.push_back(check_gt("L10.b", "f_{7,2}(1, -1/10) >= 3/100",
                         c.f2(7, c.one, Interval::rational(-1, 10)),
                         Interval::rational(3, 100)));
  out.push_back(check_lt("L10.c", "f_{7,2}(1, 0) < 0",
                         c.f2(7, c.one, r), r));

  // L11: f_{7,1} endpoints
  out.push_back(check_gt("L11.a", "f_{7,1}(9/10, 1/10) >= 1/4",
                         c.f1(7, Interval::rational(9, 10),
                              Interval::rational(1, 10)),
                         Interval::rational(1, 4)));
  out.push_back(check_gt("L11.b", "f_{7,1}(1, 1/10) >= 3/50",
                         c.f1(7, c.one, Interval::rational(1, 10)),
                         Interval::rational(3, 50)));

  // L12: slopes of the polygonal branch
  const Interval s7 = sqrt_i(Interval::of(7.0) * tan_i(c.pi_ / Interval::of(7.0)) /
                             Interval::rational(4, 5)) -
                      c.two * c.t4;
  out.push_back(check_lt("L12.a", "sqrt(7 tan(pi/7)/(4/5)) - 2 12^(1/4) < -1",
                         s7, Interval::of(-1.0)));
  const Interval s3 = sqrt_i(Interval::of(3.0) * tan_i(c.pi_ / Interval::of(3.0)) /
                             Interval::rational(3, 5)) -
                      c.two * c.t4;
  out.push_back(check_lt("L12.b", "sqrt(3 tan(pi/3)/(3/5)) - 2 12^(1/4) <= -3/4",
                         s3, Interval::rational(-3, 4)));

  // L13: f_{7,4}, f_{8,4} endpoints
  out.push_back(check_gt("L13.a", "f_{7,4}(1, -1/10) >= 1/500",
                         c.f4(7, c.one, Interval::rational(-1, 10)),
                         Interval::rational(1, 500)));
  out.push_back(check_gt("L13.b", "f_{7,4}(1, 1/10) >= 7/1000",
                         c.f4(7, c.one, Interval::rational(1, 10)),
                         Interval::rational(7, 1000)));
  out.push_back(check_gt("L13.c", "f_{8,4}(1, -1/10) >= 1/50",
                         c.f4(8, c.one, Interval::rational(-1, 10)),
                         Interval::rational(1, 50)));
  out.push_back(check_gt("L13.d", "f_{8,4}(1, 1/10) >= 3/100",
                         c.f4(8, c.one, Interval::rational(1, 10)),
                         Interval::rational(3, 100)));

  // L14: f_{3,2} endpoints
  out.push_back(check_gt("L14.a", "f_{3,2}(1, -5/2) > 1/10",
                         c.f2(3, c.one, Interval::rational(-5, 2)),
                         Interval::rational(1, 10)));
  out.push_back(check_gt("L14.b", "f_{3,2}(1, -3/10) > 1/50",
                         c.f2(3, c.one, Interval::rational(-3, 10)),
                         Interval::rational(1, 50)));

  // L15: f_{k,4} endpoints for k = 3, 4, 5
  out.push_back(check_gt("L15.a", "f_{3,4}(1, -3/10) >= 7/10",
                         c.f4(3, c.one, Interval::rational(-3, 10)),
                         Interval::rational(7, 10)));
  out.push_back(check_gt("L15.b", "f_{3,4}(1, 1/5) >= 1/2",
                         c.f4(3, c.one, Interval::rational(1, 5)),
                         Interval::rational(1, 2)));
  out.push_back(check_gt("L15.c", "f_{4,4}(1, -3/10) >= 1/10",
                         c.f4(4, c.one, Interval::rational(-3, 10)),
                         Interval::rational(1, 10)));
  out.push_back(check_gt("L15.d", "f_{4,4}(1, 1/5) >= 1/10",
                         c.f4(4, c.one, Interval::rational(1, 5)),
                         Interval::rational(1, 10)));
  out.push_back(check_lt("L15.e", "f_{5,4}(1, 1/5) < 0",
                         c.f4(5, c.one, Interval::rational(1, 5)), r));
  out.push_back(check_gt("L15.f", "f_{5,4}(1, -3/10) >= 1/200",
                         c.f4(5, c.one, Interval::rational(-3, 10)),
                         Interval::rational(1, 200)));
  out.push_back(check_gt("L15.g", "f_{5,4}(1, 19/100) >= 1/1000",
                         c.f4(5, c.one, Interval::rational(19, 100)),
                         Interval::rational(1, 1000)));

  // L16: f_{k,1} endpoints for k = 3, 4, 5
  out.push_back(check_gt("L16.a", "f_{3,1}(4/5, 1/5) >= 3/10",
                         c.f1(3, Interval::rational(4, 5),
                              Interval::rational(1, 5)),
                         Interval::rational(3, 10)));
  out.push_back(check_gt("L16.b", "f_{3,1}(1, 1/5) >= 1/100",
                         c.f1(3, c.one, Interval::rational(1, 5)),
                         Interval::rational(1, 100)));
  out.push_back(check_gt("L16.c", "f_{4,1}(4/5, 1/5) >= 2/5",
                         c.f1(4, Interval::rational(4, 5),
                              Interval::rational(1, 5)),
                         Interval::rational(2, 5)));
  out.push_back(check_gt("L16.d", "f_{4,1}(1, 1/5) >= 7/100",
                         c.f1(4, c.one, Interval::rational(1, 5)),
                         Interval::rational(7, 100)));
  out.push_back(check_gt("L16.e", "f_{5,1}(4/5, 19/100) >= 2/5",
                         c.f1(5, Interval::rational(4, 5),
                              Interval::rational(19, 100)),
                         Interval::rational(2, 5)));
  out.push_back(check_gt("L16.f", "f_{5,1}(1, 19/100) >= 1/10",
                         c.f1(5, c.one, Interval::rational(19, 100)),
                         Interval::rational(1, 10)));

  // L17: (sqrt(2 pi) - t4) / (2 sqrt(2 pi)) > 0
  const Interval s2pi = sqrt_i(c.two * c.pi_);
  out.push_back(check_gt("L17", "(sqrt(2 pi) - 12^(1/4))/(2 sqrt(2 pi)) > 0",
                         (s2pi - c.t4) / (c.two * s2pi), r));

  // L18: 3/t4 > t4/4
  out.push_back(check_gt("L18", "3/12^(1/4) > 2 * 12^(1/4)/8",
                         Interval::of(3.0) / c.t4,
                         c.two * c.t4 / Interval::of(8.0)));

  // L19: honeycomb constants
  const Interval k0 = c.sqrt_pi -
                      sqrt_i(sqrt_i(Interval::of(3.0))) / sqrt_i(c.two);
  out.push_back(check_range("L19.k0", "K0 = sqrt(pi) - 3^(1/4)/sqrt(2) in (0.84, 0.85)",
                            k0, Interval::rational(84, 100),
                            Interval::rational(85, 100)));
  const Interval m0 =
      c.pi_ / sqrt_i(Interval::of(3.0) * sqrt_i(Interval::of(3.0)) / c.two);
  out.push_back(check_range("L19.m0", "M0 = pi/sqrt(3 sqrt(3)/2) in (1.94, 1.96)",
                            m0, Interval::rational(194, 100),
                            Interval::rational(196, 100)));

  // L20: y_t strictly decreasing through the integer points, derivative
  // negative away from the flat end at t = 6
  {
    double worst = 1.0;
    bool ok = true;
    for (int t = 2; t <= 5; ++t) {
      const Interval gap = c.y_k(t) - c.y_k(t + 1);
      worst = std::min(worst, gap.lo);
      ok = ok && gap.lo > 0.0;
    }
    CheckResult chain{"L20.chain", "y_2 > y_3 > y_4 > y_5 > y_6",
                      ok ? "certified" : "inconclusive",
                      c.y_k(2) - c.y_k(6), worst};
    out.push_back(chain);
    out.push_back(check_abs_le("L20.y6", "y_6 = 0", c.y_k(6), 1e-12));

    // dy/dt = a (t4/(2 sqrt(12))) (1 - sqrt(pi/(pi + 2 s t4))), s = a(t-6);
    // strictly negative for t in [2, 6 - 1/64]
    const double t_hi = 6.0 - 1.0 / 64.0;
    double deriv_hi = -1.0;
    Interval hull{0.0, 0.0};
    bool dok = true;
    for (int i = 0; i < 8; ++i) {
      const double u0 = 2.0 + (t_hi - 2.0) * i / 8.0;
      const double u1 = 2.0 + (t_hi - 2.0) * (i + 1) / 8.0;
      const Interval s = c.a * (Interval::of(u0, u1) - Interval::of(6.0));
      const Interval d =
          c.a * (c.t4 / (c.two * c.sqrt12)) *
          (c.one - sqrt_i(c.pi_ / (c.pi_ + c.two * s * c.t4)));
      if (i == 0)
        hull = d;
      else
        hull = {std::min(hull.lo, d.lo), std::max(hull.hi, d.hi)};
      deriv_hi = std::max(deriv_hi, d.hi);
      dok = dok && d.hi < 0.0;
    }
    CheckResult deriv{"L20.deriv", "dy/dt < 0 on [2, 6 - 1/64]",
                      dok ? "certified" : "inconclusive", hull, -deriv_hi};
    out.push_back(deriv);
  }

  Certificate cert;
  cert.items = std::move(out);

  // working c: minimum of the certified regional lower bounds
  Interval w = min_i(c.h2(c.one), c.h2(Interval::rational(1, 100)));
  w = min_i(w, min_i(Interval::rational(7, 10), ca));
  w = min_i(w, min_i(c0a, c0b));
  Interval c1 = c.f1(9, c.one, r);
  c1 = min_i(c1, c.f1(9, r, r));
  c1 = min_i(c1, c.f1(7, Interval::rational(9, 10), r));
  c1 = min_i(c1, c.f1(7, r, r));
  for (int k : {3, 4, 5}) {
    c1 = min_i(c1, c.f1(k, Interval::rational(1, 100), r));
    c1 = min_i(c1, c.f1(k, Interval::rational(4, 5), r));
  }
  w = min_i(w, c1);
  w = min_i(w, c.f2(7, c.one, Interval::rational(-5, 2)));
  w = min_i(w, c.f2(7, c.one, Interval::rational(-1, 10)));
  w = min_i(w, c.f1(7, Interval::rational(9, 10), Interval::rational(1, 10)));
  w = min_i(w, c.f1(7, c.one, Interval::rational(1, 10)));
  w = min_i(w, c.f4(7, c.one, Interval::rational(-1, 10)));
  w = min_i(w, c.f4(7, c.one, Interval::rational(1, 10)));
  w = min_i(w, c.f4(8, c.one, Interval::rational(-1, 10)));
  w = min_i(w, c.f4(8, c.one, Interval::rational(1, 10)));
  w = min_i(w, c.f2(3, c.one, Interval::rational(-5, 2)));
  w = min_i(w, c.f2(3, c.one, Interval::rational(-3, 10)));
  w = min_i(w, c.f4(3, c.one, Interval::rational(-3, 10)));
  w = min_i(w, c.f4(3, c.one, Interval::rational(1, 5)));
  w = min_i(w, c.f4(4, c.one, Interval::rational(-3, 10)));
  w = min_i(w, c.f4(4, c.one, Interval::rational(1, 5)));
  w = min_i(w, c.f4(5, c.one, Interval::rational(-3, 10)));
  w = min_i(w, c.f4(5, c.one, Interval::rational(19, 100)));
  w = min_i(w, c.f1(3, Interval::rational(4, 5), Interval::rational(1, 5)));
  w = min_i(w, c.f1(3, c.one, Interval::rational(1, 5)));
  w = min_i(w, c.f1(4, Interval::rational(4, 5), Interval::rational(1, 5)));
  w = min_i(w, c.f1(4, c.one, Interval::rational(1, 5)));
  w = min_i(w, c.f1(5, Interval::rational(4, 5), Interval::rational(19, 100)));
  w = min_i(w, c.f1(5, c.one, Interval::rational(19, 100)));
  cert.working_c = w;
  cert.a2 = w / Interval::of(8.0);

  cert.all_certified = true;
  for (const CheckResult& it : cert.items)
    cert.all_certified = cert.all_certified && it.status == "certified";
  return cert;
}

namespace {

nlohmann::ordered_json check_to_json(const CheckResult& it) {
  nlohmann::ordered_json e;
  e["id"] = it.id;
  e["claim"] = it.claim;
  e["status"] = it.status;
  e["enclosure"] = {it.enclosure.lo, it.enclosure.hi};
  e["margin"] = it.margin;
  return e;
}

} // namespace

std::string certificate_json(const Certificate& cert) {
  return certificate_json(cert, {});
}

std::string certificate_json(const Certificate& cert,
                             const std::vector<CheckResult>& scans) {
  nlohmann::ordered_json j;
  j["version"] = 1;
  j["all_certified"] = cert.all_certified;
  j["working_c"] = {cert.working_c.lo, cert.working_c.hi};
  j["a2"] = {cert.a2.lo, cert.a2.hi};
  j["items"] = nlohmann::ordered_json::array();
  for (const CheckResult& it : cert.items) j["items"].push_back(check_to_json(it));
  if (!scans.empty()) {
    j["scans"] = nlohmann::ordered_json::array();
    for (const CheckResult& it : scans) j["scans"].push_back(check_to_json(it));
  }
  return j.dump(1);
}

ScanResult scan_infimum(int k, double x0, double x1, double y0, double y1,
                        int grid, double lipschitz) {
  if (grid < 1 || !(x1 >= x0) || !(y1 >= y0))
    throw std::invalid_argument("scan_infimum: bad box or grid");
  ScanResult res;
  res.min_value = std::numeric_limits<double>::infinity();
  const double dx = (x1 - x0) / grid;
  const double dy = (y1 - y0) / grid;
  for (int i = 0; i <= grid; ++i) {
    for (int j = 0; j <= grid; ++j) {
      const double x = x0 + i * dx;
      const double y = y0 + j * dy;
      const double v = f_max(k, x, y);
      if (v < res.min_value) {
        res.min_value = v;
        res.arg_x = x;
        res.arg_y = y;
      }
    }
  }
  res.certified_bound =
      res.min_value - lipschitz * 0.5 * std::hypot(dx, dy);
  res.certified = lipschitz > 0.0 && res.certified_bound > 0.0;
  return res;
}

std::vector<CheckResult> scan_rows(int grid) {
  struct Box {
    const char* id;
    int k;
    double x0, x1, y0, y1;
  };
  static const Box boxes[] = {
      {"scan.f6_slice", 6, 0.1, 0.1, -2.5, 0.8},
      {"scan.f7", 7, 0.0, 1.0, -2.5, 0.8},
      {"scan.f8", 8, 0.0, 1.0, -2.5, 0.8},
      {"scan.f9", 9, 0.0, 1.0, -2.5, 0.8},
  };
  std::vector<CheckResult> rows;
  for (const Box& b : boxes) {
    ScanResult sc = scan_infimum(b.k, b.x0, b.x1, b.y0, b.y1, grid);
    CheckResult r;
    r.id = b.id;
    r.claim = "grid min of f_" + std::to_string(b.k) + " on [" +
              std::to_string(b.x0) + "," + std::to_string(b.x1) + "]x[" +
              std::to_string(b.y0) + "," + std::to_string(b.y1) +
              "] positive (tails covered by certified items)";
    r.status = sc.min_value > 0.0 ? "heuristic-pass" : "heuristic-fail";
    r.enclosure = Interval::of(sc.min_value);
    r.margin = sc.min_value;
    rows.push_back(std::move(r));
  }
  return rows;
}

double fit_arc_coercivity(double x_max, int grid) {
  if (!(x_max > 0.0) || grid < 1)
    throw std::invalid_argument("fit_arc_coercivity: bad arguments");
  double best = 0.0;
  for (int i = 1; i <= grid; ++i) {
    const double x = x_max * i / grid;
    best = std::max(best, (1.0 + 6.0 * x * x - arc1(x)) / (x * x * x));
  }
  return best;
}

} // namespace hexakit
