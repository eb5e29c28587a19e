#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "tfc/mellin.hpp"

using namespace tfc;
namespace ml = tfc::mellin;

namespace {
double relc(ComplexScalar got, ComplexScalar want) {
    return std::abs(got - want) / std::max(1e-300, std::abs(want));
}
const FunctionHandle kExp([](double t) { return ComplexScalar(std::exp(-t), 0.0); },
                          Interval(0.0, 1e300));
}  // namespace

TEST_CASE("direct transform anchors") {
    CHECK(relc(ml::mellin_numeric(kExp, 2.0, 1.0).value, {1.0, 0.0}) < 1e-11);
    const double g05 = static_cast<double>(oracle::gamma(0.5L));
    CHECK(relc(ml::mellin_numeric(kExp, 0.5, 1.0).value, {g05, 0.0}) < 1e-11);

    FunctionHandle g([](double t) { return ComplexScalar(t * std::exp(-2.0 * t), 0.0); },
                     Interval(0.0, 1e300));
    const double want = static_cast<double>(oracle::gamma(2.5L) / std::pow(2.0L, 2.5L));
    CHECK(relc(ml::mellin_numeric(g, 1.5, 2.0).value, {want, 0.0}) < 1e-10);
}

TEST_CASE("transform scaling law") {
    for (double c : {0.5, 2.0}) {
        for (double s : {1.0, 1.7}) {
            FunctionHandle gc([c](double t) { return ComplexScalar(std::exp(-c * t), 0.0); },
                              Interval(0.0, 1e300));
            auto lhs = ml::mellin_numeric(gc, s, c).value;
            auto rhs = cpow(c, {-s, 0.0}) * ml::mellin_numeric(kExp, s, 1.0).value;
            CHECK(relc(lhs, rhs) < 1e-8);
        }
    }
}

TEST_CASE("generalized-gamma route anchors") {
    // s = 1: the kernel collapses to Gamma(alpha), leaving beta^{-alpha} integral of f
    auto r = ml::mellin_tempered_kobayashi(kExp, {{0.7, 0}, {1.3, 0}}, 1.0, 1.0);
    const double want = std::pow(1.3, -0.7);
    CHECK(relc(r.value, {want, 0.0}) < 1e-9);

    CHECK_THROWS_AS(ml::mellin_tempered_kobayashi(kExp, {{0.5, 0}, {1, 0}}, 0.5, 1.0),
                    DomainError);
    CHECK_THROWS_AS(ml::mellin_tempered_kobayashi(kExp, {{0.5, 0}, {0, 0}}, 1.5, 1.0),
                    DomainError);
}

TEST_CASE("incomplete-gamma ladder sum matches the generalized-gamma kernel") {
    // the series is the binomial expansion of the kernel, so as an oracle
    //   sum = e^{x-x} Gamma_{1-s}(alpha, x) / Gamma(alpha)
    // with the right-hand side computed by independent quadrature
    for (auto [ar, sr] : {std::pair{0.5, 1.5}, {0.5, 2.0}, {1.5, 1.5}, {0.8, 1.2}}) {
        const ComplexScalar alpha{ar, 0.0};
        const ComplexScalar s{sr, 0.0};
        for (double x : {0.3, 1.0, 3.7, 12.0, 41.0}) {
            const ComplexScalar ladder =
                ml::detail::incomplete_gamma_ladder_sum(alpha, s, x, {20000, 1e-9});
            const ComplexScalar kernel =
                specfun::kobayashi_gamma(1.0 - s, alpha, {x, 0.0}) / specfun::gamma(alpha);
            CHECK(std::abs(ladder - kernel) <
                  1e-7 * (std::abs(ladder) + std::abs(kernel) + 1e-30));
        }
    }
}

TEST_CASE("incomplete-gamma route: integer alpha truncates the series") {
    // alpha = 1: only the n = 0 term survives and the transform reduces to
    // beta^{-s} integral of f(u) e^{beta u} Gamma(s, beta u) du; for
    // f = e^{-2u}, beta = 1, s = 1 this equals 1/2.
    FunctionHandle f([](double u) { return ComplexScalar(std::exp(-2.0 * u), 0.0); },
                     Interval(0.0, 1e300));
    auto r = ml::mellin_tempered_incgamma(f, {{1.0, 0}, {1.0, 0}}, 1.0, 2.0);
    CHECK(relc(r.value, {0.5, 0.0}) < 1e-9);
}

TEST_CASE("three routes agree on a spot check") {
    FunctionHandle f([](double u) { return ComplexScalar(std::exp(-u), 0.0); },
                     Interval(0.0, 1e300));
    const FracParams p{{0.5, 0}, {1.0, 0}};
    const ml::MellinPoint s{1.5};

    auto kob = ml::mellin_tempered_kobayashi(f, p, s, 1.0);
    auto inc = ml::mellin_tempered_incgamma(f, p, s, 1.0);
    auto num = ml::mellin_of_operator(f, p, s, 1.0);

    CHECK(relc(kob.value, inc.value) < 1e-5);
    CHECK(relc(kob.value, num.value) < 1e-5);
    CHECK(relc(inc.value, num.value) < 1e-5);
}

TEST_CASE("another route agreement point with u e^{-u}") {
    FunctionHandle f([](double u) { return ComplexScalar(u * std::exp(-u), 0.0); },
                     Interval(0.0, 1e300), Regularity::smooth(), 1.0);
    const FracParams p{{1.0, 0}, {1.0, 0}};
    const ml::MellinPoint s{2.0};

    auto kob = ml::mellin_tempered_kobayashi(f, p, s, 1.0);
    auto inc = ml::mellin_tempered_incgamma(f, p, s, 1.0);
    auto num = ml::mellin_of_operator(f, p, s, 1.0);
    CHECK(relc(kob.value, num.value) < 1e-5);
    CHECK(relc(inc.value, num.value) < 1e-5);
}
