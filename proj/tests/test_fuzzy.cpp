#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "iods/fuzzy.hpp"
#include "support/random_systems.hpp"

using iods::Interval;
using iods::TriangularFuzzyNumber;

TEST_SUITE("fuzzy") {

TEST_CASE("membership follows the piecewise linear form") {
    const TriangularFuzzyNumber tfn(2.0, 5.0, 8.0);
    CHECK(iods::membership(tfn, 5.0) == 1.0);
    CHECK(iods::membership(tfn, 3.5) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(iods::membership(tfn, 9.0) == 0.0);
    CHECK(iods::membership(tfn, 1.0) == 0.0);
    CHECK(iods::membership(tfn, 2.0) == 0.0);
    CHECK(iods::membership(tfn, 8.0) == 0.0);
    CHECK(iods::membership(tfn, 6.5) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("degenerate number has full membership only at its peak") {
    const TriangularFuzzyNumber crisp(4.0, 4.0, 4.0);
    CHECK(crisp.degenerate());
    CHECK(iods::membership(crisp, 4.0) == 1.0);
    CHECK(iods::membership(crisp, 4.0 + 1e-12) == 0.0);
    CHECK(iods::membership(crisp, 3.0) == 0.0);
}

TEST_CASE("half-degenerate sides keep membership total") {
    const TriangularFuzzyNumber left_flat(2.0, 2.0, 6.0);
    CHECK(iods::membership(left_flat, 2.0) == 1.0);
    CHECK(iods::membership(left_flat, 4.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(iods::membership(left_flat, 6.0) == 0.0);
    const TriangularFuzzyNumber right_flat(1.0, 3.0, 3.0);
    CHECK(iods::membership(right_flat, 3.0) == 1.0);
    CHECK(iods::membership(right_flat, 2.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(iods::membership(right_flat, 1.0) == 0.0);
}

TEST_CASE("alpha cut interpolates between support and core") {
    const TriangularFuzzyNumber tfn(2.0, 5.0, 8.0);
    CHECK(iods::alpha_cut(tfn, 0.0) == Interval{2.0, 8.0});
    CHECK(iods::alpha_cut(tfn, 1.0) == Interval{5.0, 5.0});
    CHECK(iods::alpha_cut(tfn, 0.5) == Interval{3.5, 6.5});
    CHECK_THROWS_AS(iods::alpha_cut(tfn, -0.1), std::domain_error);
    CHECK_THROWS_AS(iods::alpha_cut(tfn, 1.1), std::domain_error);
    CHECK_THROWS_AS(iods::alpha_cut(tfn, std::nan("")), std::domain_error);
}

TEST_CASE("crisp value blends the alpha cut endpoints") {
    const TriangularFuzzyNumber tfn(2.0, 5.0, 8.0);
    CHECK(iods::crisp_value(tfn, 0.0, 0.0) == 2.0);
    CHECK(iods::crisp_value(tfn, 0.0, 1.0) == 8.0);
    CHECK(iods::crisp_value(tfn, 0.0, 0.5) == 5.0);
    CHECK_THROWS_AS(iods::crisp_value(tfn, 0.5, -0.01), std::domain_error);
    CHECK_THROWS_AS(iods::crisp_value(tfn, 2.0, 0.5), std::domain_error);
}

TEST_CASE("crisp value at alpha 1 is the peak for any beta") {
    std::mt19937_64 rng(0x5eed01);
    std::uniform_real_distribution<double> beta_dist(0.0, 1.0);
    for (int i = 0; i < 50; ++i) {
        const TriangularFuzzyNumber tfn = testsupport::random_tfn(rng);
        CHECK(iods::crisp_value(tfn, 1.0, beta_dist(rng)) == tfn.peak());
    }
}

TEST_CASE("crisp value hits the cut endpoints exactly at beta 0 and 1") {
    std::mt19937_64 rng(0x5eed02);
    std::uniform_real_distribution<double> alpha_dist(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        const TriangularFuzzyNumber tfn = testsupport::random_tfn(rng);
        const double alpha = alpha_dist(rng);
        const Interval cut = iods::alpha_cut(tfn, alpha);
        CHECK(iods::crisp_value(tfn, alpha, 0.0) == cut.lo);
        CHECK(iods::crisp_value(tfn, alpha, 1.0) == cut.hi);
    }
}

TEST_CASE("sorted triple construction") {
    const auto reference = TriangularFuzzyNumber::from_sorted_triple(0.6938, 1.7115, 2.3274);
    CHECK(reference.left() == 0.6938);
    CHECK(reference.peak() == 1.7115);
    CHECK(reference.right() == 2.3274);

    const auto shuffled = TriangularFuzzyNumber::from_sorted_triple(2.0, 1.0, 3.0);
    CHECK(shuffled.left() == 1.0);
    CHECK(shuffled.peak() == 2.0);
    CHECK(shuffled.right() == 3.0);

    const auto flat = TriangularFuzzyNumber::from_sorted_triple(4.0, 4.0, 4.0);
    CHECK(flat.degenerate());

    CHECK_THROWS_AS(TriangularFuzzyNumber::from_sorted_triple(1.0, std::nan(""), 2.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        TriangularFuzzyNumber::from_sorted_triple(1.0, 2.0, std::numeric_limits<double>::infinity()),
        std::invalid_argument);
}

TEST_CASE("construction rejects violated ordering") {
    CHECK_THROWS_AS(TriangularFuzzyNumber(2.0, 1.0, 3.0), std::invalid_argument);
    CHECK_THROWS_AS(TriangularFuzzyNumber(0.0, 2.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(TriangularFuzzyNumber(0.0, std::nan(""), 1.0), std::invalid_argument);
}

TEST_CASE("property: alpha cuts nest as alpha grows") {
    std::mt19937_64 rng(0x5eed03);
    std::uniform_real_distribution<double> alpha_dist(0.0, 1.0);
    std::uniform_int_distribution<int> degenerate(0, 9);
    for (int i = 0; i < 300; ++i) {
        const TriangularFuzzyNumber tfn = testsupport::random_tfn(rng, degenerate(rng) == 0);
        double a1 = alpha_dist(rng);
        double a2 = alpha_dist(rng);
        if (a1 > a2) {
            std::swap(a1, a2);
        }
        const Interval outer = iods::alpha_cut(tfn, a1);
        const Interval inner = iods::alpha_cut(tfn, a2);
        CHECK(outer.lo <= inner.lo);
        CHECK(inner.hi <= outer.hi);
        CHECK(inner.lo <= inner.hi);
    }
}

TEST_CASE("property: cut endpoints have membership alpha") {
    std::mt19937_64 rng(0x5eed04);
    std::uniform_real_distribution<double> alpha_dist(1e-6, 1.0);
    for (int i = 0; i < 300; ++i) {
        const TriangularFuzzyNumber tfn = testsupport::random_tfn(rng);
        const double alpha = alpha_dist(rng);
        const Interval cut = iods::alpha_cut(tfn, alpha);
        if (tfn.left() < tfn.peak()) {
            CHECK(std::abs(iods::membership(tfn, cut.lo) - alpha) <= 1e-12);
        }
        if (tfn.peak() < tfn.right()) {
            CHECK(std::abs(iods::membership(tfn, cut.hi) - alpha) <= 1e-12);
        }
    }
}

} // TEST_SUITE
