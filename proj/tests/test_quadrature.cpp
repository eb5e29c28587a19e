#include <doctest.h>

#include <cmath>
#include <cstring>

#include "oracles.hpp"
#include "tfc/prng.hpp"
#include "tfc/quadrature.hpp"

using namespace tfc;

static double rel_err(ComplexScalar got, double want) {
    return std::abs(got - ComplexScalar(want, 0.0)) / std::max(1e-300, std::abs(want));
}

TEST_CASE("weighted integral handles endpoint weights") {
    QuadratureSpec spec;

    auto one = FunctionHandle([](double) { return ComplexScalar(1.0, 0.0); });
    auto r1 = quad::integrate_weighted_left(one, 1.0, -0.5, spec);
    CHECK(rel_err(r1.value, 2.0) < 1e-12);
    CHECK(r1.converged);

    auto r2 = quad::integrate_weighted_left(one, 2.0, 0.0, spec);
    CHECK(rel_err(r2.value, 2.0) < 1e-13);

    auto decay = FunctionHandle([](double s) { return ComplexScalar(std::exp(-s), 0.0); });
    auto r3 = quad::integrate_weighted_left(decay, 50.0, 0.0, spec);
    CHECK(std::abs(r3.value.real() - 1.0) < 1e-12);
}

TEST_CASE("weighted integral rejects bad arguments") {
    auto one = FunctionHandle([](double) { return ComplexScalar(1.0, 0.0); });
    CHECK_THROWS_AS(quad::integrate_weighted_left(one, 1.0, -1.0, {}), DomainError);
    CHECK_THROWS_AS(quad::integrate_weighted_left(one, 0.0, 0.0, {}), DomainError);
    QuadratureSpec bad;
    bad.rel_tol = 1e-18;
    CHECK_THROWS_AS(quad::integrate_weighted_left(one, 1.0, 0.0, bad), DomainError);
}

TEST_CASE("two-ended weighting integrates beta-function singularities") {
    // integral over (0,1) of s^{-1/2} (1-s)^{-1/2} = pi
    auto g = FunctionHandle([](double s) { return ComplexScalar(std::pow(1.0 - s, -0.5), 0.0); });
    auto r = quad::integrate_weighted_two_ended(g, 1.0, -0.5, -0.5, {});
    CHECK(rel_err(r.value, 3.14159265358979324) < 1e-11);
}

TEST_CASE("semi-infinite integration with exponential tail bound") {
    QuadratureSpec spec;
    auto r1 = quad::integrate_semi_infinite(
        FunctionHandle([](double t) { return ComplexScalar(std::exp(-t), 0.0); }), 1.0, spec);
    CHECK(rel_err(r1.value, 1.0) < 1e-11);

    auto r2 = quad::integrate_semi_infinite(
        FunctionHandle([](double t) { return ComplexScalar(t * std::exp(-t), 0.0); }), 1.0, spec);
    CHECK(rel_err(r2.value, 1.0) < 1e-11);

    const double g25 = static_cast<double>(oracle::gamma(2.5L));
    auto r3 = quad::integrate_semi_infinite(
        FunctionHandle([](double t) { return ComplexScalar(std::pow(t, 1.5) * std::exp(-t), 0.0); }),
        1.0, spec);
    CHECK(rel_err(r3.value, g25) < 1e-11);
}

TEST_CASE("finite differences with one Richardson level") {
    auto sq = FunctionHandle([](double t) { return ComplexScalar(t * t, 0.0); });
    CHECK(std::abs(quad::finite_diff(sq, 1.0, 1, 1e-4).real() - 2.0) < 1e-9);

    auto ex = FunctionHandle([](double t) { return ComplexScalar(std::exp(t), 0.0); });
    CHECK(std::abs(quad::finite_diff(ex, 0.0, 2, 1e-3).real() - 1.0) < 1e-7);

    auto sn = FunctionHandle([](double t) { return ComplexScalar(std::sin(t), 0.0); });
    CHECK(std::abs(quad::finite_diff(sn, 0.0, 1, 1e-4).real() - 1.0) < 1e-9);

    auto narrow = FunctionHandle([](double t) { return ComplexScalar(t, 0.0); },
                                 Interval(0.0, 1.0));
    CHECK_THROWS_AS(quad::finite_diff(narrow, 0.9999, 2, 1e-3), DomainError);
}

TEST_CASE("linearity of the weighted integral on random polynomials") {
    SplitMix64 rng(17);
    for (int iter = 0; iter < 25; ++iter) {
        double ca = rng.uniform(-2.0, 2.0);
        double cb = rng.uniform(-2.0, 2.0);
        double p1 = rng.uniform(0.0, 3.0), p2 = rng.uniform(0.0, 3.0);
        double sigma = rng.uniform(-0.9, 1.5);
        auto g1 = FunctionHandle([p1](double s) { return ComplexScalar(std::pow(s, std::floor(p1)), 0.0); });
        auto g2 = FunctionHandle([p2](double s) { return ComplexScalar(1.0 + std::pow(s, std::floor(p2)), 0.0); });
        auto combo = FunctionHandle([=](double s) {
            return ca * std::pow(s, std::floor(p1)) + cb * (1.0 + std::pow(s, std::floor(p2)));
        });
        auto ra = quad::integrate_weighted_left(g1, 1.5, sigma, {});
        auto rb = quad::integrate_weighted_left(g2, 1.5, sigma, {});
        auto rc = quad::integrate_weighted_left(combo, 1.5, sigma, {});
        double tol = 2.0 * (std::abs(ca) * ra.err_estimate + std::abs(cb) * rb.err_estimate +
                            rc.err_estimate) +
                     1e-12 * std::abs(rc.value);
        CHECK(std::abs(rc.value - (ca * ra.value + cb * rb.value)) <= tol + 1e-13);
    }
}

TEST_CASE("identical inputs give bit-identical reports") {
    auto g = FunctionHandle([](double s) { return ComplexScalar(std::cos(3.0 * s), 0.1 * s); });
    auto r1 = quad::integrate_weighted_left(g, 1.7, -0.3, {});
    auto r2 = quad::integrate_weighted_left(g, 1.7, -0.3, {});
    CHECK(std::memcmp(&r1.value, &r2.value, sizeof(r1.value)) == 0);
    CHECK(r1.err_estimate == r2.err_estimate);
    CHECK(r1.effort == r2.effort);
}

TEST_CASE("doubling nodes per panel does not worsen the error estimate") {
    SplitMix64 rng(29);
    for (int iter = 0; iter < 10; ++iter) {
        int deg = static_cast<int>(rng.below(6));
        double sigma = rng.uniform(-0.8, 1.0);
        auto g = FunctionHandle([deg](double s) { return ComplexScalar(std::pow(s, deg) + 1.0, 0.0); });
        QuadratureSpec s1;
        QuadratureSpec s2;
        s2.nodes_per_panel = 2 * s1.nodes_per_panel;
        auto r1 = quad::integrate_weighted_left(g, 1.0, sigma, s1);
        auto r2 = quad::integrate_weighted_left(g, 1.0, sigma, s2);
        CHECK(r2.err_estimate <= r1.err_estimate + 1e-13 * std::abs(r1.value) + 1e-15);
    }
}
