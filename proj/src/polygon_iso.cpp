#include <hexakit/polygon_iso.hpp>

#include <cmath>
#include <stdexcept>

namespace hexakit {

double polygon_perimeter(const std::vector<Point>& v) {
    if (v.size() < 3) throw std::invalid_argument("polygon needs >= 3 vertices");
    double p = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i)
        p += dist(v[i], v[(i + 1) % v.size()]);
    return p;
}

double polygon_oriented_area(const std::vector<Point>& v) {
    if (v.size() < 3) throw std::invalid_argument("polygon needs >= 3 vertices");
    double s = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point& a = v[i];
        const Point& b = v[(i + 1) % v.size()];
        s += a.x * b.y - b.x * a.y;
    }
    return 0.5 * s;
}

double p_of_k(int k) {
    if (k < 3) throw std::invalid_argument("p_of_k needs k >= 3");
    return 2.0 * std::sqrt(k * std::tan(M_PI / k));
}

double immersed_iso_margin(const std::vector<Point>& v) {
    double per = polygon_perimeter(v);
    double pk = p_of_k(static_cast<int>(v.size()));
    return per * per - pk * pk * polygon_oriented_area(v);
}

double circle_config_ratio(int k, int n) {
    if (k < 3) throw std::invalid_argument("circle_config_ratio needs k >= 3");
    if (n < 1 || n > k - 1) throw std::invalid_argument("winding n out of range");
    if (2 * n == k) throw std::invalid_argument("degenerate configuration 2n = k");
    double w = 2.0 * M_PI * n / k;
    return std::sin(w) / (k * (1.0 - std::cos(w)));
}

namespace {

// Gaps w_j = theta_{j+1} - theta_j, cyclic; trig functions make the wrap
// term periodic so no angle normalization is needed.
void gaps_of(const std::vector<double>& th, std::vector<double>& w) {
    std::size_t k = th.size();
    if (k < 3) throw std::invalid_argument("need >= 3 angles");
    w.resize(k);
    for (std::size_t j = 0; j < k; ++j) {
        w[j] = th[(j + 1) % k] - th[j];
        if (1.0 - std::cos(w[j]) < 1e-12)
            throw std::invalid_argument("coincident angles in configuration");
    }
}

} // namespace

double area_ratio(const std::vector<double>& thetas) {
    std::vector<double> w;
    gaps_of(thetas, w);
    double num = 0.0, den = 0.0;
    for (double wj : w) {
        num += std::sin(wj);
        den += std::sqrt(1.0 - std::cos(wj));
    }
    return num / (den * den);
}

std::vector<double> area_ratio_gradient(const std::vector<double>& thetas) {
    std::vector<double> w;
    gaps_of(thetas, w);
    std::size_t k = thetas.size();
    double num = 0.0, den = 0.0;
    for (double wj : w) {
        num += std::sin(wj);
        den += std::sqrt(1.0 - std::cos(wj));
    }
    // theta_j enters w_{j-1} with +, w_j with -:
    //   d(num)/d(theta_j) = cos w_{j-1} - cos w_j
    //   d(den)/d(theta_j) = (sin w_{j-1}/sqrt(1-cos w_{j-1})
    //                        - sin w_j/sqrt(1-cos w_j)) / 2
    std::vector<double> g(k);
    double d2 = den * den, d3 = d2 * den;
    for (std::size_t j = 0; j < k; ++j) {
        double wp = w[(j + k - 1) % k], wc = w[j];
        double sp = std::sin(wp) / std::sqrt(1.0 - std::cos(wp));
        double sc = std::sin(wc) / std::sqrt(1.0 - std::cos(wc));
        g[j] = (std::cos(wp) - std::cos(wc)) / d2 + num / d3 * (sc - sp);
    }
    return g;
}

} // namespace hexakit
