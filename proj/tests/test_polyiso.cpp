#include <doctest.h>

#include <hexakit/polygon_iso.hpp>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

using namespace hexakit;

namespace {

std::vector<Point> star_polygon(int k, int winding, double radius) {
    std::vector<Point> v;
    for (int j = 0; j < k; ++j) {
        double th = 2.0 * M_PI * winding * j / k;
        v.push_back({radius * std::cos(th), radius * std::sin(th)});
    }
    return v;
}

} // namespace

TEST_CASE("p_of_k closed forms") {
    CHECK(p_of_k(4) == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(p_of_k(6) == doctest::Approx(2.0 * std::pow(12.0, 0.25)).epsilon(1e-15));
    CHECK(p_of_k(3) == doctest::Approx(2.0 * std::sqrt(3.0 * std::sqrt(3.0)))
                           .epsilon(1e-15));
    // k -> inf approaches the smooth isoperimetric constant from above
    CHECK(p_of_k(100000) == doctest::Approx(2.0 * std::sqrt(M_PI)).epsilon(1e-9));
    CHECK(p_of_k(100000) > 2.0 * std::sqrt(M_PI));
    CHECK_THROWS_AS(p_of_k(2), std::invalid_argument);
}

TEST_CASE("perimeter and oriented area basics") {
    std::vector<Point> square{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    CHECK(polygon_perimeter(square) == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(polygon_oriented_area(square) == doctest::Approx(1.0).epsilon(1e-15));

    std::vector<Point> bowtie{{0, 0}, {1, 1}, {1, 0}, {0, 1}};
    CHECK(polygon_oriented_area(bowtie) == doctest::Approx(0.0));
    double pb = polygon_perimeter(bowtie);
    CHECK(immersed_iso_margin(bowtie) == doctest::Approx(pb * pb).epsilon(1e-15));

    // repeated point: zero-length edge tolerated
    std::vector<Point> degen{{0, 0}, {0, 0}, {1, 0}, {0, 1}};
    CHECK(polygon_perimeter(degen) ==
          doctest::Approx(polygon_perimeter({{0, 0}, {1, 0}, {0, 1}}) )
              .epsilon(1e-15));
    CHECK(immersed_iso_margin(degen) > 0.0);
    CHECK_THROWS_AS((polygon_perimeter({{0, 0}, {1, 1}})), std::invalid_argument);
}

TEST_CASE("pentagram reference values") {
    std::vector<Point> pent = star_polygon(5, 2, 1.0);
    CHECK(polygon_perimeter(pent) ==
          doctest::Approx(9.5105651629515357).epsilon(1e-14));
    CHECK(polygon_oriented_area(pent) ==
          doctest::Approx(1.4694631307311828).epsilon(1e-14));
    CHECK(immersed_iso_margin(pent) > 0.0);

    // 4 A / P^2 of the winding-2 star equals the closed-form ratio
    double p = polygon_perimeter(pent), a = polygon_oriented_area(pent);
    CHECK(4.0 * a / (p * p) ==
          doctest::Approx(circle_config_ratio(5, 2)).epsilon(1e-14));
}

TEST_CASE("regular polygons attain equality") {
    for (int k = 3; k <= 64; ++k) {
        std::vector<Point> v = star_polygon(k, 1, 2.37);
        double p = polygon_perimeter(v);
        double margin = immersed_iso_margin(v);
        CHECK(std::fabs(margin) <= 1e-9 * p * p);
    }
}

TEST_CASE("perturbed polygons have strictly positive margin") {
    // margin grows quadratically in the displacement; at 5% of the
    // circumradius a 1e-5 P^2 floor holds across directions
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * M_PI);
    for (int trial = 0; trial < 200; ++trial) {
        int k = 3 + static_cast<int>(rng() % 10);
        std::vector<Point> v = star_polygon(k, 1, 1.0);
        double dir = ang(rng);
        Point& moved = v[rng() % k];
        moved.x += 0.05 * std::cos(dir);
        moved.y += 0.05 * std::sin(dir);
        double p = polygon_perimeter(v);
        double margin = immersed_iso_margin(v);
        CHECK(margin > 0.0);
        CHECK(margin >= 1e-5 * p * p);
    }
}

TEST_CASE("random immersed polygons satisfy the inequality") {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> coord(-1.0, 1.0);
    for (int trial = 0; trial < 5000; ++trial) {
        int k = 3 + static_cast<int>(rng() % 10);
        std::vector<Point> v;
        for (int j = 0; j < k; ++j) v.push_back({coord(rng), coord(rng)});
        double p = polygon_perimeter(v);
        if (p == 0.0) continue;
        CHECK(immersed_iso_margin(v) >= -1e-9 * p * p);
    }
}

TEST_CASE("circle configuration ratios") {
    CHECK(circle_config_ratio(4, 1) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(circle_config_ratio(5, 1) ==
          doctest::Approx(0.2752763840942347).epsilon(1e-14));
    CHECK(circle_config_ratio(5, 2) ==
          doctest::Approx(0.0649839392465813).epsilon(1e-13));

    // winding n = 1 is the maximizer; k - n mirrors with opposite sign
    for (int k = 3; k <= 64; ++k)
        for (int n = 2; n <= k - 1; ++n) {
            if (2 * n == k) continue;
            CHECK(circle_config_ratio(k, 1) > circle_config_ratio(k, n));
            CHECK(circle_config_ratio(k, k - n) ==
                  doctest::Approx(-circle_config_ratio(k, n)).epsilon(1e-12));
        }

    CHECK_THROWS_AS(circle_config_ratio(2, 1), std::invalid_argument);
    CHECK_THROWS_AS(circle_config_ratio(6, 3), std::invalid_argument);
    CHECK_THROWS_AS(circle_config_ratio(5, 0), std::invalid_argument);
    CHECK_THROWS_AS(circle_config_ratio(5, 5), std::invalid_argument);
}

TEST_CASE("area_ratio matches the equi-angular closed form") {
    for (int k = 3; k <= 12; ++k) {
        for (int n = 1; n <= k - 1; ++n) {
            if (2 * n == k) continue;
            std::vector<double> th(k);
            for (int j = 0; j < k; ++j) th[j] = 2.0 * M_PI * n * j / k;
            CHECK(area_ratio(th) ==
                  doctest::Approx(circle_config_ratio(k, n)).epsilon(1e-12));
        }
    }
}

TEST_CASE("gradient vanishes at regular configurations") {
    for (int k : {3, 5, 7, 12}) {
        std::vector<double> th(k);
        for (int j = 0; j < k; ++j) th[j] = 2.0 * M_PI * j / k;
        for (double gj : area_ratio_gradient(th))
            CHECK(std::fabs(gj) < 1e-9);
    }
}

TEST_CASE("gradient matches central finite differences") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(0.05, 0.6);
    for (int trial = 0; trial < 50; ++trial) {
        int k = 3 + static_cast<int>(rng() % 8);
        std::vector<double> th(k);
        double acc = 0.0;
        for (int j = 0; j < k; ++j) {
            th[j] = acc;
            acc += u(rng);
        }
        std::vector<double> g = area_ratio_gradient(th);
        const double h = 1e-6;
        for (int j = 0; j < k; ++j) {
            std::vector<double> hi = th, lo = th;
            hi[j] += h;
            lo[j] -= h;
            double fd = (area_ratio(hi) - area_ratio(lo)) / (2.0 * h);
            CHECK(g[j] == doctest::Approx(fd).epsilon(5e-6).scale(1.0));
        }
    }
}

TEST_CASE("regular configuration locally maximizes the ratio") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> d(-0.3, 0.3);
    int k = 5;
    std::vector<double> reg(k);
    for (int j = 0; j < k; ++j) reg[j] = 2.0 * M_PI * j / k;
    double best = area_ratio(reg);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> th = reg;
        for (int j = 0; j < k; ++j) th[j] += d(rng);
        bool ok = true;
        for (int j = 0; j < k; ++j)
            if (1.0 - std::cos(th[(j + 1) % k] - th[j]) < 1e-12) ok = false;
        if (!ok) continue;
        CHECK(area_ratio(th) <= best + 1e-12);
    }
}

TEST_CASE("gradient and ratio reject coincident angles") {
    std::vector<double> th{0.0, 0.0, 1.0};
    CHECK_THROWS_AS(area_ratio(th), std::invalid_argument);
    CHECK_THROWS_AS(area_ratio_gradient(th), std::invalid_argument);
    CHECK_THROWS_AS((area_ratio({0.1, 0.9})), std::invalid_argument);
}
