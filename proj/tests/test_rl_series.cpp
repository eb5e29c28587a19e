#include <doctest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "tfc/rl_series.hpp"

using namespace tfc;

namespace {
double relc(ComplexScalar got, ComplexScalar want) {
    return std::abs(got - want) / std::max(1e-300, std::abs(want));
}
const FunctionHandle kOne([](double) { return ComplexScalar(1.0, 0.0); });
const FunctionHandle kId([](double t) { return ComplexScalar(t, 0.0); }, Interval(0.0, 50.0),
                         Regularity::smooth(), 1.0);
}  // namespace

TEST_CASE("series coefficients match the gamma-ratio form") {
    CHECK(rlseries::series_coefficient(0, {{0.7, 0}, {1.2, 0}}) == ComplexScalar{1.0, 0.0});
    CHECK(relc(rlseries::series_coefficient(1, {{2, 0}, {1, 0}}), {-2.0, 0.0}) < 1e-15);
    CHECK(relc(rlseries::series_coefficient(3, {{0.5, 0}, {2, 0}}), {-2.5, 0.0}) < 1e-14);
    // cross-check against (-beta)^m Gamma(alpha+m)/(m! Gamma(alpha)) directly
    const double alpha = 1.3, beta = 0.8;
    long double fact = 1.0L;
    for (int m = 0; m <= 8; ++m) {
        double want = static_cast<double>(std::pow(-(long double)beta, m) *
                                          oracle::gamma(alpha + m) /
                                          (fact * oracle::gamma(alpha)));
        CHECK(relc(rlseries::series_coefficient(m, {{alpha, 0}, {beta, 0}}), {want, 0.0}) < 1e-13);
        fact *= (m + 1);
    }
}

TEST_CASE("series integral: degenerate and anchored cases") {
    // beta = 0: the m = 0 term is the whole series and equals the RL integral
    auto rl = ops::rl_integral(kId, {0.7, 0}, 0.0, 1.2);
    auto ser = rlseries::series_integral(kId, {{0.7, 0}, {0, 0}}, 0.0, 1.2);
    CHECK(ser.value == rl.value);

    auto r = rlseries::series_integral(kOne, {{1, 0}, {1, 0}}, 0.0, 1.0);
    CHECK(relc(r.value, {1.0 - std::exp(-1.0), 0.0}) < 1e-8);

    auto quad_route = ops::tempered_integral(kId, {{0.5, 0}, {0.5, 0}}, 0.0, 1.0);
    auto series_route = rlseries::series_integral(kId, {{0.5, 0}, {0.5, 0}}, 0.0, 1.0);
    CHECK(relc(series_route.value, quad_route.value) < 1e-7);
}

TEST_CASE("series derivative: degenerate and route agreement") {
    auto rld = ops::rl_derivative(kId, {0.5, 0}, 0.0, 1.0);
    auto ser0 = rlseries::series_derivative(kId, {{0.5, 0}, {0, 0}}, 0.0, 1.0);
    CHECK(ser0.value == rld.value);

    auto quad_route = ops::tempered_derivative(kId, {{0.5, 0}, {0.5, 0}}, 0.0, 1.0);
    auto ser = rlseries::series_derivative(kId, {{0.5, 0}, {0.5, 0}}, 0.0, 1.0);
    CHECK(relc(ser.value, quad_route.value) < 1e-5);

    CHECK_THROWS_AS(rlseries::series_derivative(kId, {{1.0, 0}, {0.5, 0}}, 0.0, 1.0), PoleError);
    CHECK_THROWS_AS(rlseries::series_derivative(kId, {{2.0, 0}, {0.5, 0}}, 0.0, 1.0), PoleError);
}

TEST_CASE("series derivative handles orders above one") {
    // alpha = 1.3: the m = 0, 1 terms are RL derivatives, the rest integrals
    FunctionHandle f([](double t) { return ComplexScalar(t * t + 0.5 * t, 0.0); },
                     Interval(0.0, 50.0));
    auto ser = rlseries::series_derivative(f, {{1.3, 0}, {0.6, 0}}, 0.0, 0.9);
    auto quad_route = ops::tempered_derivative(f, {{1.3, 0}, {0.6, 0}}, 0.0, 0.9);
    CHECK(relc(ser.value, quad_route.value) < 1e-5);
}

TEST_CASE("proportional step lowers the series order by one") {
    auto r1 = rlseries::proportional_step_check(kOne, {{1.5, 0}, {0.5, 0}}, 0.0, 1.0);
    CHECK(r1.pass);
    CHECK(r1.residual_or_slack < 1e-5);

    auto r2 = rlseries::proportional_step_check(kOne, {{1.5, 0}, {0, 0}}, 0.0, 1.0);
    CHECK(r2.residual_or_slack < 1e-6);

    FunctionHandle sq([](double t) { return ComplexScalar(t * t, 0.0); }, Interval(0.0, 50.0));
    auto r3 = rlseries::proportional_step_check(sq, {{2.2, 0}, {1, 0}}, 0.0, 0.8);
    CHECK(r3.residual_or_slack < 1e-5);

    CHECK_THROWS_AS(rlseries::proportional_step_check(kOne, {{0.9, 0}, {1, 0}}, 0.0, 1.0),
                    DomainError);
}

TEST_CASE("term ratios follow the analytic law on monomials") {
    // term_m = c_m * RL^{alpha+m} t^k;  for f = t^k the RL value ratio is
    // t/(k + alpha + m + 1), so |term_{m+1}/term_m| =
    // beta (alpha+m) t / ((m+1)(k+alpha+m+1)).
    const double alpha = 0.8, beta = 1.1, t = 1.4;
    for (int k : {0, 1, 2}) {
        FunctionHandle mono([k](double u) { return ComplexScalar(std::pow(u, k), 0.0); },
                            Interval(0.0, 50.0), Regularity::smooth(), static_cast<double>(k));
        std::vector<double> terms;
        for (int m = 0; m <= 14; ++m) {
            auto c = rlseries::series_coefficient(m, {{alpha, 0}, {beta, 0}});
            auto rl = ops::rl_integral(mono, {alpha + m, 0}, 0.0, t);
            terms.push_back(std::abs(c * rl.value));
        }
        for (int m = 10; m < 14; ++m) {
            double measured = terms[m + 1] / terms[m];
            double analytic = beta * (alpha + m) * t / ((m + 1.0) * (k + alpha + m + 1.0));
            CHECK(std::abs(measured - analytic) < 0.10 * analytic);
        }
    }
}

TEST_CASE("truncation error decreases monotonically once terms shrink") {
    const double alpha = 0.6, beta = 0.9, t = 1.0;  // |beta t| <= 1
    FunctionHandle mono([](double u) { return ComplexScalar(u, 0.0); }, Interval(0.0, 50.0),
                        Regularity::smooth(), 1.0);
    std::vector<ComplexScalar> partial;
    ComplexScalar coef{1.0, 0.0}, sum{0.0, 0.0};
    for (int m = 0; m <= 24; ++m) {
        if (m > 0) coef *= -beta * (alpha + m - 1.0) / m;
        sum += coef * ops::rl_integral(mono, {alpha + m, 0}, 0.0, t).value;
        partial.push_back(sum);
    }
    const ComplexScalar limit = partial.back();
    const int m_start = static_cast<int>(std::ceil(2.0 * beta * t));
    for (int m = m_start; m + 2 < static_cast<int>(partial.size()) - 1; ++m) {
        CHECK(std::abs(partial[m + 1] - limit) <= std::abs(partial[m] - limit) + 1e-15);
    }
}
