#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "lehmer/sample.hpp"
#include "lehmer/transform.hpp"

using namespace lehmer;

namespace {

double rel_err(double a, double b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

PositiveSample ps(std::vector<double> v) { return PositiveSample::from_values(std::move(v)); }

// Central difference oracle, independent of the analytic path.
double fd_derivative(const PositiveSample& h, double s, double delta) {
    return (lehmer::lehmer(h, s + delta) - lehmer::lehmer(h, s - delta)) / (2.0 * delta);
}

double fd_derivative5(const PositiveSample& h, double s, double delta) {
    return (lehmer::lehmer(h, s - 2.0 * delta) - 8.0 * lehmer::lehmer(h, s - delta) + 8.0 * lehmer::lehmer(h, s + delta) -
            lehmer::lehmer(h, s + 2.0 * delta)) /
           (12.0 * delta);
}

std::vector<double> random_values(std::mt19937& rng, std::size_t n, double lo, double hi) {
    std::uniform_real_distribution<double> dist(lo, hi);
    std::vector<double> v(n);
    for (double& x : v) x = dist(rng);
    return v;
}

}  // namespace

TEST_CASE("pipeline steps match their definitions") {
    SUBCASE("affine-unit maps endpoints to [eps, 1+eps]") {
        const auto h = normalize(Sample({-1.0, 0.0, 1.0}),
                                 NormalizationPipeline({affine_to_unit_interval(0.01)}));
        CHECK(h.min_value() == 0.01);
        CHECK(h.max_value() == doctest::Approx(1.01).epsilon(1e-15));
        CHECK(h.values()[1] == doctest::Approx(0.51).epsilon(1e-15));
    }
    SUBCASE("shift-min sends a constant sample to eps") {
        const auto h =
            normalize(Sample({5.0, 5.0, 5.0}), NormalizationPipeline({affine_shift_min(1.0)}));
        for (double v : h.values()) CHECK(v == 1.0);
    }
    SUBCASE("scale-max divides by the max") {
        const auto h = normalize(Sample({1.0, 2.0, 4.0}), NormalizationPipeline({scale_to_max(1.0)}));
        CHECK(h.values()[0] == 0.25);
        CHECK(h.values()[1] == 0.5);
        CHECK(h.values()[2] == 1.0);
    }
    SUBCASE("softplus and exp yield positive values") {
        const auto sp =
            normalize(Sample({-5.0, 0.0, 5.0}), NormalizationPipeline({softplus()}));
        CHECK(sp.min_value() > 0.0);
        const auto ex = normalize(Sample({-1.0, 0.0, 1.0}), NormalizationPipeline({exp_map()}));
        CHECK(ex.min_value() == doctest::Approx(std::exp(-1.0)));
    }
    SUBCASE("abs-shift") {
        const auto h = normalize(Sample({-3.0, 2.0}), NormalizationPipeline({abs_shift(0.5)}));
        CHECK(h.values()[0] == 2.5);
        CHECK(h.values()[1] == 3.5);
    }
    SUBCASE("nonpositive output is rejected with the step named") {
        CHECK_THROWS_AS(normalize(Sample({0.0, 1.0}), NormalizationPipeline({scale_to_max(1.0)})),
                        PipelineYieldsNonPositive);
    }
    SUBCASE("parameter validation") {
        CHECK_THROWS_AS(affine_shift_min(0.0), std::invalid_argument);
        CHECK_THROWS_AS(scale_to_max(-1.0), std::invalid_argument);
        CHECK_THROWS_AS(normalize(Sample({1.0}), NormalizationPipeline{}), std::invalid_argument);
    }
    SUBCASE("constant sample under affine-unit collapses to eps") {
        const auto h = normalize(Sample({7.0, 7.0}),
                                 NormalizationPipeline({affine_to_unit_interval(0.25)}));
        CHECK(h.min_value() == 0.25);
        CHECK(h.max_value() == 0.25);
    }
}

TEST_CASE("transform reproduces the classical means") {
    const auto h = ps({1.0, 2.0, 4.0});
    CHECK(lehmer::lehmer(h, 0.0) == doctest::Approx(12.0 / 7.0).epsilon(1e-14));  // harmonic
    CHECK(lehmer::lehmer(h, 1.0) == 7.0 / 3.0);                                   // arithmetic
    CHECK(lehmer::lehmer(h, 2.0) == 3.0);                                         // contra-harmonic
    CHECK(lehmer::lehmer(ps({1.0, 4.0}), 0.5) == doctest::Approx(2.0).epsilon(1e-14));  // geometric, n=2
    CHECK(lehmer::lehmer(h, BreveMoment::pos_infinity()) == 4.0);
    CHECK(lehmer::lehmer(h, BreveMoment::neg_infinity()) == 1.0);
}

TEST_CASE("constant samples are fixed points of the transform") {
    const auto h = ps({5.0, 5.0, 5.0});
    for (double s : {-300.0, -7.5, 0.0, 0.3, 1.0, 42.0, 300.0}) CHECK(lehmer::lehmer(h, s) == 5.0);
    CHECK(lehmer::lehmer(h, BreveMoment::pos_infinity()) == 5.0);
    CHECK(lehmer::lehmer(ps({3.25}), -2.0) == 3.25);  // n = 1 degenerates to the same
}

TEST_CASE("spectrum evaluation") {
    const auto h = ps({1.0, 2.0, 4.0});
    const std::vector<BreveMoment> grid = {
        BreveMoment::neg_infinity(), BreveMoment::finite(0.0), BreveMoment::finite(1.0),
        BreveMoment::finite(2.0), BreveMoment::pos_infinity()};
    const auto points = lehmer_spectrum(h, grid);
    REQUIRE(points.size() == 5);
    CHECK(points[0].value == 1.0);
    CHECK(points[1].value == doctest::Approx(12.0 / 7.0).epsilon(1e-14));
    CHECK(points[2].value == 7.0 / 3.0);
    CHECK(points[3].value == 3.0);
    CHECK(points[4].value == 4.0);

    SUBCASE("bitwise consistency with pointwise calls") {
        for (const auto& p : points) CHECK(p.value == lehmer::lehmer(h, p.s));
    }
    SUBCASE("unsorted grids are rejected") {
        const std::vector<BreveMoment> bad = {BreveMoment::finite(1.0), BreveMoment::finite(0.0)};
        CHECK_THROWS_AS(lehmer_spectrum(h, bad), GridNotSorted);
    }
    SUBCASE("constant sample gives a constant spectrum") {
        const auto c = ps({2.0, 2.0});
        for (const auto& p : lehmer_spectrum(c, grid)) CHECK(p.value == 2.0);
    }
}

TEST_CASE("derivative matches the pairwise formula and finite differences") {
    SUBCASE("constant sample has zero derivative") {
        const auto c = ps({4.0, 4.0, 4.0});
        for (double s : {-10.0, 0.0, 3.0}) CHECK(lehmer_derivative(c, s) == 0.0);
    }
    SUBCASE("hand-evaluated two-point case at s = 0") {
        // (2-1)(ln2-ln1)(1*2)^(-1) / (1 + 1/2)^2
        const double expected = (std::log(2.0) * 0.5) / 2.25;
        CHECK(lehmer_derivative(ps({1.0, 2.0}), 0.0) == doctest::Approx(expected).epsilon(1e-14));
        CHECK(expected == doctest::Approx(0.154033).epsilon(1e-5));
    }
    SUBCASE("finite-difference agreement at s = 1") {
        const auto h = ps({1.0, 2.0, 4.0});
        CHECK(rel_err(lehmer_derivative(h, 1.0), fd_derivative(h, 1.0, 1e-5)) <= 1e-6);
    }
    SUBCASE("log-route diagnostic agrees") {
        const auto h = ps({1.0, 2.0, 4.0});
        for (double s : {-3.0, 0.0, 1.0, 4.0})
            CHECK(rel_err(lehmer_derivative(h, s), lehmer_derivative_via_log(h, s)) <= 1e-6);
    }
    SUBCASE("nonnegative everywhere, positive once two values differ") {
        const auto h = ps({1.0, 1.0, 2.0});
        for (double s : {-5.0, 0.0, 5.0}) {
            CHECK(lehmer_derivative(h, s) > 0.0);
            CHECK(fd_derivative(h, s, 1e-5) > 0.0);
        }
    }
}

TEST_CASE("higher-order derivatives") {
    const auto h = ps({1.0, 2.0, 4.0});
    CHECK_THROWS_AS(lehmer_nth_derivative(h, 1.0, 0), OrderZero);
    CHECK(lehmer_nth_derivative(h, 0.0, 1) == lehmer_derivative(h, 0.0));

    SUBCASE("order 2 matches the second difference of the transform") {
        const double delta = 1e-4;
        const double oracle =
            (lehmer::lehmer(h, 1.0 + delta) - 2.0 * lehmer::lehmer(h, 1.0) + lehmer::lehmer(h, 1.0 - delta)) /
            (delta * delta);
        CHECK(rel_err(lehmer_nth_derivative(h, 1.0, 2), oracle) <= 1e-4);
    }
    SUBCASE("order 3 matches the third difference of the transform") {
        const double d = 5e-3;
        const double oracle = (lehmer::lehmer(h, 1.0 + 2 * d) - 2.0 * lehmer::lehmer(h, 1.0 + d) +
                               2.0 * lehmer::lehmer(h, 1.0 - d) - lehmer::lehmer(h, 1.0 - 2 * d)) /
                              (2.0 * d * d * d);
        CHECK(rel_err(lehmer_nth_derivative(h, 1.0, 3), oracle) <= 1e-3);
    }
    SUBCASE("constant samples vanish at every order") {
        const auto c = ps({2.0, 2.0});
        for (int order : {1, 2, 3, 4}) CHECK(lehmer_nth_derivative(c, 0.5, order) == 0.0);
    }
}

TEST_CASE("monotonicity classification") {
    CHECK(monotonicity_class(ps({3.0, 3.0, 3.0})) == MonotonicityClass::Constant);
    CHECK(monotonicity_class(ps({1.0, 2.0, 4.0})) == MonotonicityClass::StrictlyIncreasing);
    CHECK(monotonicity_class(ps({1.0, 1.0, 2.0})) == MonotonicityClass::StrictlyIncreasing);
    CHECK(monotonicity_class(ps({1.0})) == MonotonicityClass::Constant);
}

TEST_CASE("bounds, monotonicity, and permutation invariance on random samples") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + rng() % 63;
        auto values = random_values(rng, n, 0.6, 1.8);
        const auto h = ps(values);

        double prev = -1.0;
        for (int j = 0; j <= 40; ++j) {
            const double s = -25.0 + j * 50.0 / 40.0;
            const double v = lehmer::lehmer(h, s);
            CHECK(v >= h.min_value());
            CHECK(v <= h.max_value());
            if (monotonicity_class(h) == MonotonicityClass::StrictlyIncreasing && j > 0)
                CHECK(v > prev);
            prev = v;
        }

        std::shuffle(values.begin(), values.end(), rng);
        const auto hp = ps(values);
        for (double s : {-7.0, 0.25, 3.0}) CHECK(lehmer::lehmer(h, s) == lehmer::lehmer(hp, s));
    }
}

TEST_CASE("homogeneity of degree one") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const auto values = random_values(rng, 2 + rng() % 15, 0.5, 2.0);
        const auto h = ps(values);
        std::uniform_real_distribution<double> sdist(-10.0, 10.0);
        const double s = sdist(rng);
        for (double c : {1e-6, 0.5, 3.0, 1e6}) {
            std::vector<double> scaled(values);
            for (double& v : scaled) v *= c;
            CHECK(rel_err(lehmer::lehmer(ps(scaled), s), c * lehmer::lehmer(h, s)) <= 1e-12);
        }
    }
}

TEST_CASE("endpoint saturation honors the transform limits") {
    // Distinct values separated by at least ~5.5% relative.
    std::mt19937 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> values;
        double level = 1.0;
        const std::size_t levels = 2 + rng() % 5;
        for (std::size_t k = 0; k < levels; ++k) {
            const std::size_t copies = 1 + rng() % 4;
            for (std::size_t c = 0; c < copies; ++c) values.push_back(level);
            level /= 1.055 + 0.1 * (rng() % 10) / 10.0;
        }
        const auto h = ps(values);
        const double range = h.max_value() - h.min_value();
        CHECK(std::abs(lehmer::lehmer(h, 500.0) - h.max_value()) <= 1e-9 * range);
        CHECK(std::abs(lehmer::lehmer(h, -500.0) - h.min_value()) <= 1e-9 * range);
        CHECK(lehmer::lehmer(h, BreveMoment::pos_infinity()) == h.max_value());
        CHECK(lehmer::lehmer(h, BreveMoment::neg_infinity()) == h.min_value());
    }
}

TEST_CASE("wide-range samples stay finite and bounded across the exponent budget") {
    const auto h = ps({1e-8, 3.7e-3, 12.0, 1e8});
    for (int j = -300; j <= 300; j += 7) {
        const double v = lehmer::lehmer(h, static_cast<double>(j));
        CHECK(std::isfinite(v));
        CHECK(v >= h.min_value());
        CHECK(v <= h.max_value());
    }
}

TEST_CASE("derivative agrees with finite differences across the s range") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 60; ++trial) {
        const auto h = ps(random_values(rng, 2 + rng() % 63, 0.8, 1.3));
        std::uniform_real_distribution<double> sdist(-20.0, 20.0);
        const double s = sdist(rng);
        const double analytic = lehmer_derivative(h, s);
        const double oracle = fd_derivative5(h, s, 1e-3);
        CHECK(rel_err(analytic, oracle) <= 1e-6);
        CHECK(analytic >= 0.0);
    }
}

TEST_CASE("breve moment type") {
    CHECK_THROWS_AS(BreveMoment::finite(std::numeric_limits<double>::infinity()),
                    std::invalid_argument);
    CHECK_THROWS_AS(BreveMoment::from_double(std::nan("")), std::invalid_argument);
    CHECK(BreveMoment::from_double(std::numeric_limits<double>::infinity()).is_pos_infinity());
    CHECK(BreveMoment::finite(2.0).is_finite());
    CHECK(BreveMoment::neg_infinity() < BreveMoment::finite(-1e300));
}
