#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "tfc/closed_forms.hpp"
#include "tfc/operators.hpp"
#include "tfc/rl_series.hpp"

using namespace tfc;

namespace {
double relc(ComplexScalar got, ComplexScalar want) {
    return std::abs(got - want) / std::max(1e-300, std::abs(want));
}
}  // namespace

TEST_CASE("power kernel closed form, integral side") {
    // beta = 0 reduces to the RL power rule
    const double want0 = static_cast<double>(1.0L / oracle::gamma(2.5L));
    CHECK(relc(closed::power_integral_closed({1, 0}, {{0.5, 0}, {0, 0}}, 0.0, 1.0),
               {want0, 0.0}) < 1e-12);

    CHECK(relc(closed::power_integral_closed({0, 0}, {{1, 0}, {1, 0}}, 0.0, 1.0),
               {1.0 - std::exp(-1.0), 0.0}) < 1e-12);

    FunctionHandle kernel([](double u) { return ComplexScalar(std::pow(u, 1.4), 0.0); },
                          Interval(0.0, 50.0), Regularity::continuous(1), 1.4);
    auto quad_route = ops::tempered_integral(kernel, {{0.6, 0}, {0.8, 0}}, 0.0, 0.7);
    CHECK(relc(closed::power_integral_closed({1.4, 0}, {{0.6, 0}, {0.8, 0}}, 0.0, 0.7),
               quad_route.value) < 1e-8);
}

TEST_CASE("power kernel closed form with complex order") {
    // exercises the oscillatory s^{i Im alpha} phase folding
    const ComplexScalar alpha{0.7, 0.3};
    const ComplexScalar beta{0.5, 0.0};
    FunctionHandle kernel([](double u) { return ComplexScalar(u, 0.0); }, Interval(0.0, 50.0),
                          Regularity::smooth(), 1.0);
    auto quad_route = ops::tempered_integral(kernel, {alpha, beta}, 0.0, 1.0);
    auto closed_form = closed::power_integral_closed({1.0, 0.0}, {alpha, beta}, 0.0, 1.0);
    CHECK(relc(quad_route.value, closed_form) < 1e-8);
}

TEST_CASE("power kernel closed form, derivative side") {
    const double want0 = static_cast<double>(1.0L / oracle::gamma(1.5L));
    CHECK(relc(closed::power_derivative_closed({1, 0}, {{0.5, 0}, {0, 0}}, 0.0, 1.0),
               {want0, 0.0}) < 1e-12);

    FunctionHandle kernel([](double u) { return ComplexScalar(std::pow(u, 1.4), 0.0); },
                          Interval(0.0, 50.0), Regularity::continuous(1), 1.4);
    auto quad_route = ops::tempered_derivative(kernel, {{0.6, 0}, {0.8, 0}}, 0.0, 0.7);
    CHECK(relc(closed::power_derivative_closed({1.4, 0}, {{0.6, 0}, {0.8, 0}}, 0.0, 0.7),
               quad_route.value) < 1e-5);

    // identity operator at alpha = 0
    CHECK(relc(closed::power_derivative_closed({1.4, 0}, {{0, 0}, {0.8, 0}}, 0.0, 0.7),
               cpow(0.7, {1.4, 0.0})) == 0.0);

    // three-route agreement with the series form
    auto series_route = rlseries::series_derivative(kernel, {{0.6, 0}, {0.8, 0}}, 0.0, 0.7);
    CHECK(relc(series_route.value,
               closed::power_derivative_closed({1.4, 0}, {{0.6, 0}, {0.8, 0}}, 0.0, 0.7)) < 1e-5);

    CHECK_THROWS_AS(closed::power_derivative_closed({0.5, 0}, {{1.5, 0}, {0.3, 0}}, 0.0, 0.5),
                    PoleError);
}

TEST_CASE("gauss-kernel closed form") {
    // beta = 0: single outer term, the classical RL value
    const ComplexScalar mu{1, 0}, lambda{0.5, 0};
    const double alpha = 0.5, t = 0.5;
    ComplexScalar want = specfun::gamma_ratio(mu, mu + alpha) * cpow(t, mu + alpha - 1.0) *
                         specfun::hyp2f1(mu, lambda, mu + alpha, {t, 0});
    CHECK(relc(closed::beta_kernel_closed(mu, lambda, {{alpha, 0}, {0, 0}}, t), want) < 1e-12);

    // lambda = 0 collapses onto the power kernel
    CHECK(relc(closed::beta_kernel_closed({1.3, 0}, {0, 0}, {{0.6, 0}, {0.9, 0}}, 0.5),
               closed::power_integral_closed({0.3, 0}, {{0.6, 0}, {0.9, 0}}, 0.0, 0.5)) < 1e-8);

    // quadrature oracle
    FunctionHandle f([](double u) { return ComplexScalar(std::pow(1.0 - u, -0.3), 0.0); },
                     Interval(0.0, 0.999));
    auto quad_route = ops::tempered_integral(f, {{0.7, 0}, {0.5, 0}}, 0.0, 0.4);
    CHECK(relc(closed::beta_kernel_closed({1, 0}, {0.3, 0}, {{0.7, 0}, {0.5, 0}}, 0.4),
               quad_route.value) < 1e-6);
}

TEST_CASE("gauss-kernel derivative comes from negating alpha") {
    // derivative closed form for alpha in (0,1) against the quadrature route
    const double mu = 1.4, lambda = 0.35, alpha = 0.45, beta = 0.6, t = 0.5;
    FunctionHandle f([mu, lambda](double u) {
        return ComplexScalar(std::pow(u, mu - 1.0) * std::pow(1.0 - u, -lambda), 0.0);
    },
                     Interval(0.0, 0.999), Regularity::continuous(2), mu - 1.0);
    auto quad_route = ops::tempered_derivative(f, {{alpha, 0}, {beta, 0}}, 0.0, t);
    CHECK(relc(closed::beta_kernel_derivative_closed({mu, 0}, {lambda, 0},
                                                     {{alpha, 0}, {beta, 0}}, t),
               quad_route.value) < 1e-5);
}

TEST_CASE("appell-kernel closed form") {
    // bcoef = 0: the Appell factor reduces to the Gauss factor
    closed::AppellKernelParams k0{{1.1, 0}, {0.4, 0}, {0.8, 0}, {1.0, 0}, {0.0, 0}};
    CHECK(relc(closed::appell_kernel_closed(k0, {{0.6, 0}, {0.7, 0}}, 0.5),
               closed::beta_kernel_closed({1.1, 0}, {0.4, 0}, {{0.6, 0}, {0.7, 0}}, 0.5)) < 1e-8);

    // beta = 0: single outer term
    closed::AppellKernelParams k1{{1.2, 0}, {0.4, 0}, {0.3, 0}, {0.5, 0}, {0.25, 0}};
    const double alpha = 0.6, t = 0.8;
    ComplexScalar want = specfun::gamma_ratio(k1.mu, k1.mu + alpha) *
                         cpow(t, k1.mu + alpha - 1.0) *
                         specfun::appell_f1(k1.mu, k1.lambda, k1.exponent2, k1.mu + alpha,
                                            k1.acoef * t, k1.bcoef * t);
    CHECK(relc(closed::appell_kernel_closed(k1, {{alpha, 0}, {0, 0}}, t), want) < 1e-12);

    // quadrature oracle at beta = 0.7
    FunctionHandle f([&](double u) {
        return ComplexScalar(std::pow(u, 0.2) * std::pow(1.0 - 0.5 * u, -0.4) *
                                 std::pow(1.0 - 0.25 * u, -0.3),
                             0.0);
    },
                     Interval(0.0, 1.999), Regularity::continuous(2), 0.2);
    auto quad_route = ops::tempered_integral(f, {{alpha, 0}, {0.7, 0}}, 0.0, t);
    CHECK(relc(closed::appell_kernel_closed(k1, {{alpha, 0}, {0.7, 0}}, t), quad_route.value) <
          1e-6);
}

TEST_CASE("mittag-leffler kernel closed forms") {
    // omega = 0 collapses onto the power kernel with lambda = nu - 1
    closed::MlKernelParams k0{{0.8, 0}, {1.1, 0}, {1.3, 0}, {0.0, 0}};
    FracParams p{{0.6, 0}, {0.7, 0}};
    ComplexScalar m0 = closed::ml_kernel_closed_mform(k0, p, 0.0, 1.0);
    ComplexScalar want0 = closed::power_integral_closed({0.1, 0}, p, 0.0, 1.0) *
                          specfun::reciprocal_gamma({1.1, 0.0});
    CHECK(relc(m0, want0) < 1e-9);
    CHECK(relc(closed::ml_kernel_closed_kform(k0, p, 0.0, 1.0), want0) < 1e-9);

    // beta = 0: single tempering term
    closed::MlKernelParams k1{{0.8, 0}, {1.1, 0}, {1.3, 0}, {0.5, 0}};
    FracParams p0{{0.6, 0}, {0, 0}};
    ComplexScalar mform0 = closed::ml_kernel_closed_mform(k1, p0, 0.0, 1.0);
    ComplexScalar direct = cpow(1.0, k1.nu + p0.alpha - 1.0) *
                           specfun::mittag_leffler3(k1.mu, k1.nu + p0.alpha, k1.gammap, {0.5, 0});
    CHECK(relc(mform0, direct) < 1e-12);

    // quadrature oracle
    FunctionHandle f([&](double u) {
        return cpow(u, k1.nu - 1.0) *
               specfun::mittag_leffler3(k1.mu, k1.nu, k1.gammap, k1.omega * cpow(u, k1.mu));
    },
                     Interval(0.0, 50.0), Regularity::continuous(1), 0.1);
    auto quad_route = ops::tempered_integral(f, p, 0.0, 1.0);
    CHECK(relc(closed::ml_kernel_closed_mform(k1, p, 0.0, 1.0), quad_route.value) < 1e-6);
    CHECK(relc(closed::ml_kernel_closed_kform(k1, p, 0.0, 1.0), quad_route.value) < 1e-6);
}

TEST_CASE("mittag-leffler rearrangement identity residual") {
    closed::MlKernelParams trivial{{0.9, 0}, {1.2, 0}, {1.1, 0}, {0.0, 0}};
    CHECK(closed::ml_identity_residual(trivial, {{0.7, 0}, {0.4, 0}}, 0.0, 1.0) < 1e-12);

    closed::MlKernelParams k1{{0.8, 0}, {1.1, 0}, {1.3, 0}, {0.5, 0}};
    CHECK(closed::ml_identity_residual(k1, {{0.6, 0}, {0.7, 0}}, 0.0, 1.0) < 1e-8);

    closed::MlKernelParams k2{{1.5, 0}, {0.9, 0}, {2.0, 0}, {-0.4, 0}};
    CHECK(closed::ml_identity_residual(k2, {{1.2, 0}, {1.0, 0}}, 0.0, 0.5) < 1e-8);
}
