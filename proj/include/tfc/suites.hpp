#pragma once

// Randomized and gridded verification suites. Both the command-line `verify`
// command and the acceptance runner consume these, so every tolerance lives
// here, pinned at the call sites. All randomness is derived from a single
// 64-bit seed through SplitMix64, making the instance corpus reproducible.

#include <cmath>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "tfc/closed_forms.hpp"
#include "tfc/mellin.hpp"
#include "tfc/operators.hpp"
#include "tfc/prng.hpp"
#include "tfc/rl_series.hpp"
#include "tfc/theorems.hpp"

namespace tfc::suites {

struct SuiteRow {
    std::string name;
    std::string inputs;
    double residual_or_slack = 0.0;
    bool pass = false;
    std::string sign = "-";
};

namespace detail {

inline double rel_gap(ComplexScalar a, ComplexScalar b) {
    return std::abs(a - b) / std::max({1e-300, std::abs(a), std::abs(b)});
}

inline SuiteRow row(std::string name, std::string inputs, double value, bool pass,
                    std::string sign = "-") {
    return {std::move(name), std::move(inputs), value, pass, std::move(sign)};
}

inline std::string fmt_inputs(std::initializer_list<std::pair<const char*, double>> kv) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : kv) {
        if (!first) os << ' ';
        os << k << '=' << v;
        first = false;
    }
    return os.str();
}

inline SuiteRow from_record(const VerificationRecord& rec) {
    return {to_string(rec.theorem_id), rec.inputs, rec.residual_or_slack, rec.pass,
            to_string(rec.sign_convention)};
}

}  // namespace detail

/// Unit-kernel identity on a parameter grid: the tempered integral of 1
/// against its incomplete-gamma closed form, relative 1e-8.
inline std::vector<SuiteRow> unit_identity_suite(std::uint64_t /*seed*/ = 0, int per_axis = 5) {
    std::vector<SuiteRow> rows;
    const FunctionHandle one([](double) { return ComplexScalar(1.0, 0.0); },
                             Interval(0.0, 1e6));
    for (int i = 0; i < per_axis; ++i) {
        const double alpha = 0.3 + (2.5 - 0.3) * i / (per_axis - 1.0);
        for (int j = 0; j < per_axis; ++j) {
            const double beta = 0.1 + (2.0 - 0.1) * j / (per_axis - 1.0);
            for (int k = 0; k < per_axis; ++k) {
                const double t = 0.2 + (2.0 - 0.2) * k / (per_axis - 1.0);
                const FracParams p{{alpha, 0.0}, {beta, 0.0}};
                const ComplexScalar got = ops::tempered_integral(one, p, 0.0, t).value;
                const ComplexScalar want = theorems::unit_integral_closed(p, t);
                const double rel = detail::rel_gap(got, want);
                rows.push_back(detail::row(
                    "unit-identity",
                    detail::fmt_inputs({{"alpha", alpha}, {"beta", beta}, {"t", t}}), rel,
                    rel <= 1e-8));
            }
        }
    }
    return rows;
}

/// Power-kernel closed forms against quadrature, integral and derivative
/// sides, relative 1e-6. Derivative instances keep alpha in (0, 1).
inline std::vector<SuiteRow> example1_suite(std::uint64_t seed = 0, int n = 20) {
    std::vector<SuiteRow> rows;
    SplitMix64 rng(seed ^ 0x45584531ull);
    for (int i = 0; i < n; ++i) {
        const double lambda = rng.uniform(-0.4, 2.0);
        const double alpha = rng.uniform(0.1, 0.93);
        const double beta = rng.uniform(0.05, 2.0);
        const double t = rng.uniform(0.3, 1.6);
        const FracParams p{{alpha, 0.0}, {beta, 0.0}};
        // smooth in the interior; the endpoint power law is carried by the
        // declared exponent
        FunctionHandle kernel([lambda](double u) { return cpow(u, {lambda, 0.0}); },
                              Interval(0.0, 1e6), Regularity::smooth(), lambda);

        const ComplexScalar int_quad = ops::tempered_integral(kernel, p, 0.0, t).value;
        const ComplexScalar int_closed = closed::power_integral_closed({lambda, 0.0}, p, 0.0, t);
        const double r_int = detail::rel_gap(int_quad, int_closed);

        const ComplexScalar der_quad = ops::tempered_derivative(kernel, p, 0.0, t).value;
        const ComplexScalar der_closed =
            closed::power_derivative_closed({lambda, 0.0}, p, 0.0, t);
        const double r_der = detail::rel_gap(der_quad, der_closed);

        const double rel = std::max(r_int, r_der);
        rows.push_back(detail::row(
            "example1",
            detail::fmt_inputs(
                {{"lambda", lambda}, {"alpha", alpha}, {"beta", beta}, {"t", t}}),
            rel, rel <= 1e-6));
    }
    return rows;
}

/// Series-of-differintegrals routes against the kernel quadrature routes,
/// relative 1e-6 (integral) / 1e-5 (derivative), |beta (t-a)| <= 2.
inline std::vector<SuiteRow> series_routes_suite(std::uint64_t seed = 0, int n = 20) {
    std::vector<SuiteRow> rows;
    SplitMix64 rng(seed ^ 0x53455253ull);
    for (int i = 0; i < n; ++i) {
        const bool derivative = (i % 2) == 1;
        const double t = rng.uniform(0.4, 1.6);
        const double beta = rng.uniform(0.05, 2.0 / t);
        double alpha = derivative ? rng.uniform(0.15, 1.75) : rng.uniform(0.3, 2.2);
        if (derivative && std::abs(alpha - 1.0) < 0.05) alpha += 0.1;
        const int deg = 1 + static_cast<int>(rng.below(2));
        const double c0 = rng.uniform(0.3, 1.2);
        FunctionHandle f(
            [deg, c0](double u) { return ComplexScalar(c0 + std::pow(u, deg), 0.0); },
            Interval(0.0, 1e6));
        const FracParams p{{alpha, 0.0}, {beta, 0.0}};

        double rel;
        if (derivative) {
            const ComplexScalar ser = rlseries::series_derivative(f, p, 0.0, t).value;
            const ComplexScalar quadv = ops::tempered_derivative(f, p, 0.0, t).value;
            rel = detail::rel_gap(ser, quadv);
        } else {
            const ComplexScalar ser = rlseries::series_integral(f, p, 0.0, t).value;
            const ComplexScalar quadv = ops::tempered_integral(f, p, 0.0, t).value;
            rel = detail::rel_gap(ser, quadv);
        }
        rows.push_back(detail::row(
            derivative ? "series-derivative" : "series-integral",
            detail::fmt_inputs({{"alpha", alpha}, {"beta", beta}, {"t", t}}), rel,
            rel <= (derivative ? 1e-5 : 1e-6)));
    }
    return rows;
}

/// Composition of two integrals against the single call of summed order,
/// relative 1e-6.
inline std::vector<SuiteRow> semigroup_suite(std::uint64_t seed = 0, int n = 20) {
    std::vector<SuiteRow> rows;
    SplitMix64 rng(seed ^ 0x53454d49ull);
    for (int i = 0; i < n; ++i) {
        const double a1 = rng.uniform(0.3, 1.5);
        const double a2 = rng.uniform(0.3, 1.5);
        const double beta = rng.uniform(0.0, 2.0);
        const double t = rng.uniform(0.4, 1.6);
        const int deg = static_cast<int>(rng.below(3));
        FunctionHandle f(
            [deg](double u) { return ComplexScalar(0.5 + std::pow(u, deg), 0.0); },
            Interval(0.0, 1e6));
        FunctionHandle inner(
            [&f, a2, beta](double tau) {
                if (tau <= 0.0) return ComplexScalar{0.0, 0.0};
                return ops::tempered_integral(f, {{a2, 0.0}, {beta, 0.0}}, 0.0, tau).value;
            },
            Interval(0.0, 1e6), Regularity::integrable(), a2);
        const ComplexScalar lhs =
            ops::tempered_integral(inner, {{a1, 0.0}, {beta, 0.0}}, 0.0, t).value;
        const ComplexScalar rhs =
            ops::tempered_integral(f, {{a1 + a2, 0.0}, {beta, 0.0}}, 0.0, t).value;
        const double rel = detail::rel_gap(lhs, rhs);
        rows.push_back(detail::row(
            "semigroup",
            detail::fmt_inputs({{"alpha1", a1}, {"alpha2", a2}, {"beta", beta}, {"t", t}}),
            rel, rel <= 1e-6));
    }
    return rows;
}

/// Kernel route vs conjugation route on a polynomial corpus, relative 1e-8.
inline std::vector<SuiteRow> conjugation_suite(std::uint64_t seed = 0, int n = 20) {
    std::vector<SuiteRow> rows;
    SplitMix64 rng(seed ^ 0x434f4e4aull);
    for (int i = 0; i < n; ++i) {
        const double alpha = rng.uniform(0.3, 2.0);
        const double beta = rng.uniform(0.0, 2.0);
        const double t = rng.uniform(0.3, 1.8);
        const int deg = static_cast<int>(rng.below(4));
        const double c = rng.uniform(0.2, 1.5);
        FunctionHandle f(
            [deg, c](double u) { return ComplexScalar(c + std::pow(u, deg), 0.0); },
            Interval(0.0, 1e6));
        const FracParams p{{alpha, 0.0}, {beta, 0.0}};
        const ComplexScalar direct = ops::tempered_integral(f, p, 0.0, t).value;
        const ComplexScalar conj = ops::tempered_integral_via_rl(f, p, 0.0, t).value;
        const double rel = detail::rel_gap(direct, conj);
        rows.push_back(detail::row(
            "conjugation", detail::fmt_inputs({{"alpha", alpha}, {"beta", beta}, {"t", t}}),
            rel, rel <= 1e-8));
    }
    return rows;
}

/// Proportional-operator equivalence: direct kernel quadrature against the
/// scaled tempered route (1e-9), plus the exact rho = 1 degeneracy.
inline std::vector<SuiteRow> gpf_suite(std::uint64_t seed = 0, int n = 16) {
    std::vector<SuiteRow> rows;
    SplitMix64 rng(seed ^ 0x47504631ull);
    for (int i = 0; i < n; ++i) {
        const double rho = rng.uniform(0.15, 1.0);
        const double alpha = rng.uniform(0.3, 1.8);
        const double t = rng.uniform(0.3, 1.5);
        FunctionHandle f([](double u) { return ComplexScalar(std::exp(0.4 * u), 0.0); },
                         Interval(0.0, 1e6));
        const GpfParams g{{alpha, 0.0}, rho};
        const ComplexScalar remark = ops::gpf_integral(f, g, 0.0, t).value;
        const ComplexScalar direct = ops::gpf_integral_direct(f, g, 0.0, t).value;
        const double rel = detail::rel_gap(remark, direct);
        rows.push_back(detail::row(
            "gpf-route", detail::fmt_inputs({{"rho", rho}, {"alpha", alpha}, {"t", t}}), rel,
            rel <= 1e-9));
    }
    // rho = 1 must reproduce the RL integral bit-for-bit (same code path)
    FunctionHandle sq([](double u) { return ComplexScalar(u * u, 0.0); }, Interval(0.0, 1e6),
                      Regularity::smooth(), 2.0);
    const ComplexScalar rl = ops::rl_integral(sq, {0.7, 0.0}, 0.0, 1.1).value;
    const ComplexScalar gpf1 = ops::gpf_integral(sq, {{0.7, 0.0}, 1.0}, 0.0, 1.1).value;
    rows.push_back(detail::row("gpf-rho1-degeneracy", "alpha=0.7 t=1.1",
                               std::abs(rl - gpf1), rl == gpf1));
    return rows;
}

/// Gauss- and Appell-kernel closed forms against quadrature, 10 in-domain
/// points each, relative 1e-6.
inline std::vector<SuiteRow> examples23_suite(std::uint64_t seed = 0, int n_each = 10) {
    std::vector<SuiteRow> rows;
    SplitMix64 rng(seed ^ 0x45583233ull);
    for (int i = 0; i < n_each; ++i) {
        const double mu = rng.uniform(0.6, 1.8);
        const double lambda = rng.uniform(0.1, 0.8);
        const double alpha = rng.uniform(0.3, 1.4);
        const double beta = rng.uniform(0.1, 1.5);
        const double t = rng.uniform(0.15, 0.8);
        FunctionHandle f(
            [mu, lambda](double u) {
                return ComplexScalar(std::pow(u, mu - 1.0) * std::pow(1.0 - u, -lambda), 0.0);
            },
            Interval(0.0, 0.9999), Regularity::continuous(0), mu - 1.0);
        const FracParams p{{alpha, 0.0}, {beta, 0.0}};
        const ComplexScalar quadv = ops::tempered_integral(f, p, 0.0, t).value;
        const ComplexScalar closedv =
            closed::beta_kernel_closed({mu, 0.0}, {lambda, 0.0}, p, t);
        const double rel = detail::rel_gap(quadv, closedv);
        rows.push_back(detail::row(
            "example2",
            detail::fmt_inputs(
                {{"mu", mu}, {"lambda", lambda}, {"alpha", alpha}, {"beta", beta}, {"t", t}}),
            rel, rel <= 1e-6));
    }
    for (int i = 0; i < n_each; ++i) {
        const double mu = rng.uniform(0.6, 1.8);
        const double lambda = rng.uniform(0.1, 0.7);
        const double e2 = rng.uniform(0.1, 0.7);
        const double t = rng.uniform(0.15, 0.8);
        const double acoef = rng.uniform(0.1, 0.6 / t);
        const double bcoef = rng.uniform(0.1, 0.6 / t);
        const double alpha = rng.uniform(0.3, 1.4);
        const double beta = rng.uniform(0.1, 1.5);
        closed::AppellKernelParams k{{mu, 0.0}, {lambda, 0.0}, {e2, 0.0}, {acoef, 0.0},
                                     {bcoef, 0.0}};
        FunctionHandle f(
            [=](double u) {
                return ComplexScalar(std::pow(u, mu - 1.0) * std::pow(1.0 - acoef * u, -lambda) *
                                         std::pow(1.0 - bcoef * u, -e2),
                                     0.0);
            },
            Interval(0.0, std::min(0.9999 / acoef, 0.9999 / bcoef)), Regularity::continuous(0),
            mu - 1.0);
        const FracParams p{{alpha, 0.0}, {beta, 0.0}};
        const ComplexScalar quadv = ops::tempered_integral(f, p, 0.0, t).value;
        const ComplexScalar closedv = closed::appell_kernel_closed(k, p, t);
        const double rel = detail::rel_gap(quadv, closedv);
        rows.push_back(detail::row(
            "example3",
            detail::fmt_inputs({{"mu", mu}, {"acoef", acoef}, {"bcoef", bcoef},
                                {"alpha", alpha}, {"beta", beta}, {"t", t}}),
            rel, rel <= 1e-6));
    }
    return rows;
}

/// Rearrangement identity between the two Mittag-Leffler kernel series,
/// residual < 1e-8, real parts in (0.5, 2), |omega| (t-a)^mu <= 2.
inline std::vector<SuiteRow> ml_identity_suite(std::uint64_t seed = 0, int n = 10) {
    std::vector<SuiteRow> rows;
    SplitMix64 rng(seed ^ 0x4d4c4944ull);
    for (int i = 0; i < n; ++i) {
        const double mu = rng.uniform(0.5, 2.0);
        const double nu = rng.uniform(0.5, 2.0);
        const double gp = rng.uniform(0.5, 2.0);
        const double alpha = rng.uniform(0.5, 2.0);
        const double beta = rng.uniform(0.5, 2.0);
        const double t = rng.uniform(0.4, 1.4);
        const double omega_mag = rng.uniform(0.0, 2.0) / std::pow(t, mu);
        const double omega = (rng.below(2) == 0 ? 1.0 : -1.0) * std::min(omega_mag, 2.0);
        closed::MlKernelParams k{{mu, 0.0}, {nu, 0.0}, {gp, 0.0}, {omega, 0.0}};
        const double resid =
            closed::ml_identity_residual(k, {{alpha, 0.0}, {beta, 0.0}}, 0.0, t, {400, 1e-12});
        rows.push_back(detail::row(
            "ml-identity",
            detail::fmt_inputs({{"mu", mu}, {"nu", nu}, {"gammap", gp}, {"omega", omega},
                                {"alpha", alpha}, {"beta", beta}, {"t", t}}),
            resid, resid <= 1e-8));
    }
    return rows;
}

/// Pairwise agreement of the three transform routes on the fixed corpus
/// {e^-u, u e^-u, e^-2u} x alpha {0.5,1,1.5} x beta {0.5,1} x s {1,1.5,2},
/// relative 1e-5.
inline std::vector<SuiteRow> mellin_routes_suite(std::uint64_t /*seed*/ = 0, int /*n*/ = 0) {
    std::vector<SuiteRow> rows;
    struct Operand {
        const char* name;
        double decay;
        std::function<ComplexScalar(double)> fn;
        double exponent;
    };
    const std::vector<Operand> operands = {
        {"exp(-u)", 1.0, [](double u) { return ComplexScalar(std::exp(-u), 0.0); }, 0.0},
        {"u*exp(-u)", 1.0, [](double u) { return ComplexScalar(u * std::exp(-u), 0.0); }, 1.0},
        {"exp(-2u)", 2.0, [](double u) { return ComplexScalar(std::exp(-2.0 * u), 0.0); }, 0.0},
    };
    QuadratureSpec lean;
    lean.rel_tol = 1e-9;
    lean.abs_tol = 1e-11;
    for (const auto& op : operands) {
        FunctionHandle f(op.fn, Interval(0.0, 1e300), Regularity::smooth(), op.exponent);
        for (double alpha : {0.5, 1.0, 1.5}) {
            for (double beta : {0.5, 1.0}) {
                for (double s : {1.0, 1.5, 2.0}) {
                    const FracParams p{{alpha, 0.0}, {beta, 0.0}};
                    const ComplexScalar kob =
                        mellin::mellin_tempered_kobayashi(f, p, s, op.decay, lean).value;
                    const ComplexScalar inc =
                        mellin::mellin_tempered_incgamma(f, p, s, op.decay, {6000, 1e-9}, lean)
                            .value;
                    const ComplexScalar num =
                        mellin::mellin_of_operator(f, p, s, op.decay, lean).value;
                    const double rel = std::max({detail::rel_gap(kob, inc),
                                                 detail::rel_gap(kob, num),
                                                 detail::rel_gap(inc, num)});
                    std::ostringstream in;
                    in << "f=" << op.name << " alpha=" << alpha << " beta=" << beta
                       << " s=" << s;
                    rows.push_back(detail::row("mellin-routes", in.str(), rel, rel <= 1e-5));
                }
            }
        }
    }
    return rows;
}

/// Telescoped-expansion suite plus inversion/composition instances; also
/// emits the aggregated sign-consistency row required of the whole family.
inline std::vector<SuiteRow> taylor_suite(std::uint64_t seed = 0, int n = 10) {
    std::vector<SuiteRow> rows;
    std::vector<VerificationRecord> records;
    SplitMix64 rng(seed ^ 0x54594c52ull);

    const int m0_count = std::max(1, n - 6);
    for (int i = 0; i < m0_count; ++i) {  // m = 0, generic smooth operands
        const double alpha = rng.uniform(0.3, 0.9);
        const double beta = rng.uniform(0.1, 1.5);
        const double t = rng.uniform(0.5, 1.2);
        const double c0 = rng.uniform(0.3, 1.2), c1 = rng.uniform(0.0, 1.0);
        FunctionHandle f([c0, c1](double u) { return ComplexScalar(c0 + c1 * u + 0.2 * u * u, 0.0); },
                         Interval(0.0, 4.0));
        records.push_back(theorems::taylor_telescope_check(f, {{alpha, 0.0}, {beta, 0.0}}, 0,
                                                           0.0, t, {}, 1e-4, 96, "poly"));
    }
    for (int i = 0; i < 3; ++i) {  // m = 1, operands vanishing to second order
        const double alpha = rng.uniform(0.3, 0.9);
        const double beta = rng.uniform(0.1, 1.2);
        const double t = rng.uniform(0.4, 0.9);
        const double c1 = rng.uniform(0.2, 1.0);
        FunctionHandle f(
            [beta, c1](double u) {
                return ComplexScalar(std::exp(-beta * u) * u * u * (1.0 + c1 * u), 0.0);
            },
            Interval(0.0, 4.0), Regularity::smooth(), 2.0);
        records.push_back(theorems::taylor_telescope_check(f, {{alpha, 0.0}, {beta, 0.0}}, 1,
                                                           0.0, t, {}, 1e-4, 96, "u^2-family"));
    }
    {   // m = 1 sign probe: alpha = 1/2 with a non-vanishing operand
        FunctionHandle f([](double u) { return ComplexScalar(std::exp(0.4 * u), 0.0); },
                         Interval(0.0, 4.0));
        records.push_back(theorems::taylor_telescope_check(f, {{0.5, 0.0}, {0.6, 0.0}}, 1, 0.0,
                                                           0.8, {}, 1e-4, 96, "exp-probe"));
    }
    {   // m = 2 sign probe: alpha = 1/2, exponential operand
        FunctionHandle f([](double u) { return ComplexScalar(std::exp(u), 0.0); },
                         Interval(0.0, 4.0));
        records.push_back(theorems::taylor_telescope_check(f, {{0.5, 0.0}, {0.5, 0.0}}, 2, 0.0,
                                                           0.4, {}, 1e-3, 96, "exp"));
    }
    {   // m = 2 resonant probe: alpha = 1/3
        FunctionHandle f([](double u) { return ComplexScalar(std::exp(0.2 * u) + 0.3 * u, 0.0); },
                         Interval(0.0, 4.0));
        records.push_back(theorems::taylor_telescope_check(
            f, {{1.0 / 3.0, 0.0}, {0.4, 0.0}}, 2, 0.0, 0.7, {}, 1e-3, 96, "exp-mix"));
    }

    // composition-difference instances at the same sign conventions
    {
        FunctionHandle ex([](double u) { return ComplexScalar(std::exp(u), 0.0); },
                          Interval(0.0, 4.0));
        records.push_back(theorems::lemma_composition_check(ex, {{0.5, 0.0}, {0.4, 0.0}}, 1,
                                                            0.0, 0.9, {}, 1e-4, 96, "exp"));
        FunctionHandle cubic(
            [](double u) { return ComplexScalar(u * u * u * std::exp(-0.3 * u), 0.0); },
            Interval(0.0, 4.0), Regularity::smooth(), 3.0);
        records.push_back(theorems::lemma_composition_check(cubic, {{0.6, 0.0}, {0.3, 0.0}}, 1,
                                                            0.0, 0.8, {}, 1e-4, 96, "cubic"));
        FunctionHandle one([](double) { return ComplexScalar(1.0, 0.0); }, Interval(0.0, 4.0));
        records.push_back(
            theorems::inversion_check(one, {{0.5, 0.0}, {1.0, 0.0}}, 0.0, 1.0, {}, 1e-4, 96, "1"));
    }

    VerificationRecord::SignConvention agreed = VerificationRecord::SignConvention::Undetermined;
    bool consistent = true;
    int determined = 0;
    for (const auto& rec : records) {
        rows.push_back(detail::from_record(rec));
        if (rec.sign_convention != VerificationRecord::SignConvention::Undetermined) {
            if (determined == 0) {
                agreed = rec.sign_convention;
            } else if (rec.sign_convention != agreed) {
                consistent = false;
            }
            ++determined;
        }
    }
    std::ostringstream agg;
    agg << determined << " sign-determining instances";
    rows.push_back(detail::row("sign-consistency", agg.str(), 0.0,
                               consistent && determined > 0,
                               determined > 0 && consistent ? to_string(agreed)
                                                            : "undetermined"));
    return rows;
}

namespace detail {

/// Synchronous pair generator: both increasing or both decreasing.
struct SyncPair {
    FunctionHandle f, g;
    std::string label;
};

inline SyncPair make_sync_pair(SplitMix64& rng) {
    const double a1 = rng.uniform(0.0, 1.2), a2 = rng.uniform(0.0, 1.0);
    const double b1 = rng.uniform(0.0, 1.2), b2 = rng.uniform(0.0, 1.0);
    const double c = rng.uniform(0.1, 1.0);
    if (rng.below(2) == 0) {
        return {FunctionHandle(
                    [a1, a2, c](double u) {
                        return ComplexScalar(c + a1 * u + a2 * u * u, 0.0);
                    },
                    Interval(0.0, 1e6)),
                FunctionHandle(
                    [b1, b2](double u) {
                        return ComplexScalar(0.2 + b1 * u + b2 * std::exp(0.5 * u) , 0.0);
                    },
                    Interval(0.0, 1e6)),
                "increasing-pair"};
    }
    return {FunctionHandle([a1, c](double u) { return ComplexScalar(c + a1 / (1.0 + u), 0.0); },
                           Interval(0.0, 1e6)),
            FunctionHandle(
                [b1](double u) { return ComplexScalar(0.3 + b1 * std::exp(-0.7 * u), 0.0); },
                Interval(0.0, 1e6)),
            "decreasing-pair"};
}

}  // namespace detail

/// One-order synchronous-function inequality suite, plus equality instances.
inline std::vector<SuiteRow> ineq1_suite(std::uint64_t seed = 0, int n = 70) {
    std::vector<SuiteRow> rows;
    SplitMix64 rng(seed ^ 0x494e4531ull);
    const int randomized = std::max(0, n - 2);  // two equality rows complete the count
    for (int i = 0; i < randomized; ++i) {
        auto pair = detail::make_sync_pair(rng);
        const double alpha = rng.uniform(0.3, 2.0);
        const double beta = rng.uniform(0.1, 2.0);
        const double t = rng.uniform(0.1, 2.0);
        auto rec = theorems::chebyshev_slack1(pair.f, pair.g, {{alpha, 0.0}, {beta, 0.0}}, t);
        auto r = detail::from_record(rec);
        r.inputs = pair.label + " " + r.inputs;
        rows.push_back(r);
    }
    for (double cval : {0.7, 2.5}) {  // equality: constant first operand
        FunctionHandle c([cval](double) { return ComplexScalar(cval, 0.0); },
                         Interval(0.0, 1e6));
        FunctionHandle g([](double u) { return ComplexScalar(u + 0.3 * u * u, 0.0); },
                         Interval(0.0, 1e6));
        auto rec = theorems::chebyshev_slack1(c, g, {{0.8, 0.0}, {1.0, 0.0}}, 1.3);
        rows.push_back(detail::row("ineq1-equality", rec.inputs,
                                   rec.residual_or_slack,
                                   std::abs(rec.residual_or_slack) <= 1e-9));
    }
    return rows;
}

/// Two-order inequality suite, plus the numeric reduction to the one-order
/// form at alpha2 = alpha1.
inline std::vector<SuiteRow> ineq2_suite(std::uint64_t seed = 0, int n = 65) {
    std::vector<SuiteRow> rows;
    SplitMix64 rng(seed ^ 0x494e4532ull);
    const int randomized = std::max(0, n - 2);  // reduction + equality rows complete the count
    for (int i = 0; i < randomized; ++i) {
        auto pair = detail::make_sync_pair(rng);
        const double a1 = rng.uniform(0.3, 2.0);
        const double a2 = rng.uniform(0.3, 2.0);
        const double beta = rng.uniform(0.1, 2.0);
        const double t = rng.uniform(0.1, 2.0);
        auto rec = theorems::chebyshev_slack2(pair.f, pair.g, {a1, 0.0}, {a2, 0.0}, beta, t);
        auto r = detail::from_record(rec);
        r.inputs = pair.label + " " + r.inputs;
        rows.push_back(r);
    }
    {   // equal orders reduce to twice the one-order slack scaled by I[1]
        FunctionHandle f([](double u) { return ComplexScalar(0.4 + u, 0.0); },
                         Interval(0.0, 1e6));
        FunctionHandle g([](double u) { return ComplexScalar(0.1 + u * u, 0.0); },
                         Interval(0.0, 1e6));
        const FracParams p{{0.6, 0.0}, {0.9, 0.0}};
        auto two = theorems::chebyshev_slack2(f, g, p.alpha, p.alpha, 0.9, 1.2);
        auto one = theorems::chebyshev_slack1(f, g, p, 1.2);
        const double unit = theorems::unit_integral_closed(p, 1.2).real();
        const double gap =
            std::abs(two.residual_or_slack - 2.0 * unit * one.residual_or_slack);
        rows.push_back(detail::row("ineq2-reduction", "alpha1=alpha2=0.6 beta=0.9 t=1.2", gap,
                                   gap <= 1e-9));
    }
    {   // equality: constant operand
        FunctionHandle c([](double) { return ComplexScalar(1.7, 0.0); }, Interval(0.0, 1e6));
        FunctionHandle g([](double u) { return ComplexScalar(u, 0.0); }, Interval(0.0, 1e6));
        auto rec = theorems::chebyshev_slack2(c, g, {0.5, 0.0}, {1.4, 0.0}, 1.0, 0.9);
        rows.push_back(detail::row("ineq2-equality", rec.inputs, rec.residual_or_slack,
                                   std::abs(rec.residual_or_slack) <= 1e-9));
    }
    return rows;
}

/// Product inequality suite over random families of positive increasing
/// functions, plus the n = 1 equality case.
inline std::vector<SuiteRow> ineq3_suite(std::uint64_t seed = 0, int n = 65) {
    std::vector<SuiteRow> rows;
    SplitMix64 rng(seed ^ 0x494e4533ull);
    const int randomized = std::max(0, n - 1);  // the n = 1 equality row completes the count
    for (int i = 0; i < randomized; ++i) {
        const int count = 2 + static_cast<int>(rng.below(3));
        std::vector<FunctionHandle> fs;
        for (int j = 0; j < count; ++j) {
            const double base = rng.uniform(0.1, 1.0);
            const double lin = rng.uniform(0.0, 1.0);
            const double expc = rng.uniform(0.0, 0.6);
            fs.emplace_back(
                [base, lin, expc](double u) {
                    return ComplexScalar(base + lin * u + expc * (std::exp(0.5 * u) - 1.0), 0.0);
                },
                Interval(0.0, 1e6));
        }
        const double alpha = rng.uniform(0.3, 2.0);
        const double beta = rng.uniform(0.1, 2.0);
        const double t = rng.uniform(0.1, 2.0);
        auto rec = theorems::product_slack_n(fs, {{alpha, 0.0}, {beta, 0.0}}, t);
        rows.push_back(detail::from_record(rec));
    }
    {   // single function: equality by definition
        FunctionHandle f([](double u) { return ComplexScalar(0.2 + u, 0.0); },
                         Interval(0.0, 1e6));
        auto rec = theorems::product_slack_n({f}, {{0.7, 0.0}, {0.8, 0.0}}, 1.1);
        rows.push_back(detail::row("ineq3-equality-n1", rec.inputs, rec.residual_or_slack,
                                   rec.residual_or_slack == 0.0));
    }
    return rows;
}

/// Special-function self-consistency: reflection, complementarity, the m = 0
/// generalized-gamma reduction, and the exponential reduction of the
/// three-parameter Mittag-Leffler function. One row per invariant carrying
/// the worst residual over its samples.
inline std::vector<SuiteRow> specfun_suite(std::uint64_t seed = 0, int n = 100) {
    std::vector<SuiteRow> rows;
    SplitMix64 rng(seed ^ 0x53504643ull);
    const double pi = 3.14159265358979323846;

    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        ComplexScalar z{rng.uniform(-8.0, 8.0), rng.uniform(-4.0, 4.0)};
        if (std::abs(z.imag()) < 0.05) z.imag(z.imag() + 0.1);
        const ComplexScalar lhs =
            specfun::gamma(z) * specfun::gamma(1.0 - z) * std::sin(pi * z) / pi;
        worst = std::max(worst, std::abs(lhs - 1.0));
    }
    rows.push_back(detail::row("gamma-reflection", "100 random complex points", worst,
                               worst <= 1e-10));

    worst = 0.0;
    for (int i = 0; i < n; ++i) {
        // exercise the two native algorithms against each other: the power
        // series of the lower function plus the continued fraction of the
        // upper one must recombine into the complete gamma
        ComplexScalar a{rng.uniform(0.05, 5.0), rng.uniform(-0.4, 0.4)};
        ComplexScalar x{rng.uniform(1.0, 10.0), rng.uniform(-0.4, 0.4)};
        const ComplexScalar lower = specfun::detail::lower_series(a, x);
        const ComplexScalar upper =
            std::exp(-x) * cpow(x, a) * specfun::detail::upper_cf_factor(a, x);
        const double rel = detail::rel_gap(lower + upper, specfun::gamma(a));
        worst = std::max(worst, rel);
    }
    rows.push_back(detail::row("incomplete-complementarity", "random a, x", worst,
                               worst <= 1e-10));

    worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        ComplexScalar u{rng.uniform(0.4, 3.5), rng.uniform(-0.3, 0.3)};
        ComplexScalar v{rng.uniform(0.0, 4.0), 0.0};
        worst = std::max(worst,
                         detail::rel_gap(specfun::kobayashi_gamma({0.0, 0.0}, u, v),
                                         specfun::gamma(u)));
    }
    rows.push_back(detail::row("kobayashi-m0-reduction", "random u, v", worst, worst <= 1e-9));

    worst = 0.0;
    for (int i = 0; i < 40; ++i) {
        ComplexScalar z{rng.uniform(-5.0, 5.0), rng.uniform(-2.0, 2.0)};
        if (std::abs(z) > 5.0) continue;
        worst = std::max(worst, detail::rel_gap(specfun::mittag_leffler3({1.0, 0.0}, {1.0, 0.0},
                                                                         {1.0, 0.0}, z),
                                                std::exp(z)));
    }
    rows.push_back(detail::row("ml-exp-reduction", "|z| <= 5", worst, worst <= 1e-10));
    return rows;
}

/// Inversion-only suite for the CLI.
inline std::vector<SuiteRow> inversion_suite(std::uint64_t seed = 0, int n = 6) {
    std::vector<SuiteRow> rows;
    SplitMix64 rng(seed ^ 0x494e5652ull);
    for (int i = 0; i < n; ++i) {
        const double alpha = rng.uniform(0.2, 0.9);
        const double beta = rng.uniform(0.0, 1.5);
        const double t = rng.uniform(0.5, 1.3);
        const double c0 = rng.uniform(0.3, 1.5);
        FunctionHandle f([c0](double u) { return ComplexScalar(c0 + u * u, 0.0); },
                         Interval(0.0, 4.0));
        rows.push_back(detail::from_record(theorems::inversion_check(
            f, {{alpha, 0.0}, {beta, 0.0}}, 0.0, t, {}, 1e-4, 96, "poly")));
    }
    return rows;
}

/// Composition-difference suite for the CLI.
inline std::vector<SuiteRow> lemma_suite(std::uint64_t seed = 0, int n = 4) {
    std::vector<SuiteRow> rows;
    SplitMix64 rng(seed ^ 0x4c454d41ull);
    for (int i = 0; i < n; ++i) {
        const double alpha = (i % 2 == 0) ? 0.5 : rng.uniform(0.3, 0.8);
        const double beta = rng.uniform(0.1, 1.0);
        const double t = rng.uniform(0.5, 1.0);
        const int r = 1;
        FunctionHandle f([](double u) { return ComplexScalar(std::exp(0.5 * u), 0.0); },
                         Interval(0.0, 4.0));
        rows.push_back(detail::from_record(theorems::lemma_composition_check(
            f, {{alpha, 0.0}, {beta, 0.0}}, r, 0.0, t, {}, 1e-4, 96, "exp")));
    }
    return rows;
}

/// Series-step suite for the CLI.
inline std::vector<SuiteRow> series_step_suite(std::uint64_t seed = 0, int n = 6) {
    std::vector<SuiteRow> rows;
    SplitMix64 rng(seed ^ 0x53545031ull);
    for (int i = 0; i < n; ++i) {
        const double alpha = rng.uniform(1.2, 2.4);
        const double t = rng.uniform(0.5, 1.2);
        const double beta = rng.uniform(0.0, 1.5 / t);
        const int deg = static_cast<int>(rng.below(3));
        FunctionHandle f(
            [deg](double u) { return ComplexScalar(1.0 + std::pow(u, deg), 0.0); },
            Interval(0.0, 1e6));
        rows.push_back(detail::from_record(rlseries::proportional_step_check(
            f, {{alpha, 0.0}, {beta, 0.0}}, 0.0, t)));
    }
    return rows;
}

using SuiteFn = std::function<std::vector<SuiteRow>(std::uint64_t, int)>;

/// Name -> (generator, default instance count). An n of 0 at the call site
/// selects the default.
inline const std::map<std::string, std::pair<SuiteFn, int>>& registry() {
    static const std::map<std::string, std::pair<SuiteFn, int>> reg = {
        {"unit", {[](std::uint64_t s, int n) { return unit_identity_suite(s, n); }, 5}},
        {"example1", {[](std::uint64_t s, int n) { return example1_suite(s, n); }, 20}},
        {"series-routes",
         {[](std::uint64_t s, int n) { return series_routes_suite(s, n); }, 20}},
        {"semigroup", {[](std::uint64_t s, int n) { return semigroup_suite(s, n); }, 20}},
        {"conjugation", {[](std::uint64_t s, int n) { return conjugation_suite(s, n); }, 20}},
        {"gpf", {[](std::uint64_t s, int n) { return gpf_suite(s, n); }, 16}},
        {"examples23", {[](std::uint64_t s, int n) { return examples23_suite(s, n); }, 10}},
        {"ml-identity", {[](std::uint64_t s, int n) { return ml_identity_suite(s, n); }, 10}},
        {"mellin-routes",
         {[](std::uint64_t s, int n) { return mellin_routes_suite(s, n); }, 0}},
        {"taylor", {[](std::uint64_t s, int n) { return taylor_suite(s, n); }, 10}},
        {"inversion", {[](std::uint64_t s, int n) { return inversion_suite(s, n); }, 6}},
        {"lemma", {[](std::uint64_t s, int n) { return lemma_suite(s, n); }, 4}},
        {"series-step", {[](std::uint64_t s, int n) { return series_step_suite(s, n); }, 6}},
        {"ineq1", {[](std::uint64_t s, int n) { return ineq1_suite(s, n); }, 70}},
        {"ineq2", {[](std::uint64_t s, int n) { return ineq2_suite(s, n); }, 65}},
        {"ineq3", {[](std::uint64_t s, int n) { return ineq3_suite(s, n); }, 65}},
        {"specfun", {[](std::uint64_t s, int n) { return specfun_suite(s, n); }, 100}},
    };
    return reg;
}

inline std::vector<SuiteRow> run_suite(const std::string& name, std::uint64_t seed, int n) {
    auto it = registry().find(name);
    if (it == registry().end()) throw DomainError("unknown verification suite: " + name);
    const int count = n > 0 ? n : it->second.second;
    return it->second.first(seed, count);
}

}  // namespace tfc::suites
