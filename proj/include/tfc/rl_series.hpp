#pragma once

#include <cmath>
#include <sstream>

#include "tfc/operators.hpp"
#include "tfc/verification.hpp"

namespace tfc::rlseries {

/// Coefficient (-beta)^m Gamma(alpha + m) / (m! Gamma(alpha)) of the
/// expansion of the tempered operators into Riemann-Liouville terms.
/// Computed by the recurrence c_{m+1} = c_m (-beta)(alpha + m)/(m + 1),
/// which is pole-free and valid for the derivative form (alpha -> -alpha).
inline ComplexScalar series_coefficient(int m, const FracParams& p) {
    if (m < 0) throw DomainError("series coefficient index must be non-negative");
    ComplexScalar c{1.0, 0.0};
    for (int k = 0; k < m; ++k) {
        c *= -p.beta * (p.alpha + static_cast<double>(k)) / (k + 1.0);
    }
    return c;
}

/// Tempered integral as a convergent series of RL integrals of orders
/// alpha + m. Truncated by the two-consecutive-small-terms rule; effort in
/// the report counts the series terms actually used.
inline EvalReport series_integral(const FunctionHandle& f, const FracParams& p, double a,
                                  double t, const SeriesSpec& sspec = {},
                                  const QuadratureSpec& qspec = {}) {
    p.require_integral_order();
    sspec.validate();

    ComplexScalar coef{1.0, 0.0};
    ComplexScalar sum{0.0, 0.0};
    double err = 0.0;
    int small_streak = 0;

    for (int m = 0; m <= sspec.max_terms; ++m) {
        if (m > 0) coef *= -p.beta * (p.alpha + static_cast<double>(m - 1)) / static_cast<double>(m);
        EvalReport rl = ops::rl_integral(f, p.alpha + static_cast<double>(m), a, t, qspec);
        const ComplexScalar term = coef * rl.value;
        sum += term;
        err += std::abs(coef) * rl.err_estimate;
        if (m > 0 && std::abs(term) <= sspec.tail_tol * std::abs(sum)) {
            if (++small_streak >= 2) {
                return {sum, err + std::abs(term), m + 1, true};
            }
        } else {
            small_streak = 0;
        }
    }
    std::ostringstream os;
    os << "series_integral: no convergence within " << sspec.max_terms
       << " terms (|beta (t-a)| = " << std::abs(p.beta) * (t - a) << ")";
    throw NonConvergentError(os.str());
}

/// Tempered derivative as a series of RL differintegrals of orders m - alpha.
/// Leading terms with Re(m - alpha) < 0 are RL derivatives of order alpha - m
/// (differintegral convention); the rest are RL integrals. Integer alpha is
/// rejected: every coefficient carries 1/Gamma(-alpha).
inline EvalReport series_derivative(const FunctionHandle& f, const FracParams& p, double a,
                                    double t, const SeriesSpec& sspec = {},
                                    const QuadratureSpec& qspec = {}) {
    p.require_derivative_order();
    sspec.validate();
    if (is_nonpositive_integer(-p.alpha))
        throw PoleError("series_derivative: integer alpha hits the Gamma(-alpha) pole");

    ComplexScalar coef{1.0, 0.0};
    ComplexScalar sum{0.0, 0.0};
    double err = 0.0;
    int small_streak = 0;

    for (int m = 0; m <= sspec.max_terms; ++m) {
        if (m > 0) coef *= -p.beta * (-p.alpha + static_cast<double>(m - 1)) / static_cast<double>(m);
        const ComplexScalar order = static_cast<double>(m) - p.alpha;  // RL integral order
        EvalReport rl;
        if (order.real() < 0.0 || (order.real() == 0.0 && order != ComplexScalar{0.0, 0.0})) {
            rl = ops::rl_derivative(f, -order, a, t, qspec);
        } else {
            rl = ops::rl_integral(f, order, a, t, qspec);
        }
        const ComplexScalar term = coef * rl.value;
        sum += term;
        err += std::abs(coef) * rl.err_estimate;
        if (m > 0 && std::abs(term) <= sspec.tail_tol * std::abs(sum)) {
            if (++small_streak >= 2) {
                return {sum, err + std::abs(term), m + 1, true};
            }
        } else {
            small_streak = 0;
        }
    }
    std::ostringstream os;
    os << "series_derivative: no convergence within " << sspec.max_terms
       << " terms (|beta (t-a)| = " << std::abs(p.beta) * (t - a) << ")";
    throw NonConvergentError(os.str());
}

/// Single application of the proportional operator (d/dt + beta) to the
/// series form of the integral must reproduce the series of order alpha - 1.
inline VerificationRecord proportional_step_check(const FunctionHandle& f, const FracParams& p,
                                                  double a, double t,
                                                  const SeriesSpec& sspec = {},
                                                  const QuadratureSpec& qspec = {},
                                                  double tol = 1e-5) {
    if (!(p.alpha.real() > 1.0))
        throw DomainError("proportional_step_check requires Re(alpha) > 1");

    FunctionHandle series_map(
        [&](double tau) { return series_integral(f, p, a, tau, sspec, qspec).value; },
        Interval(a, f.domain.b));
    const double h = ops::detail::derivative_step(a, t);
    const ComplexScalar lhs =
        quad::finite_diff(series_map, t, 1, h) + p.beta * series_map(t);
    const ComplexScalar rhs =
        series_integral(f, {p.alpha - 1.0, p.beta}, a, t, sspec, qspec).value;

    VerificationRecord rec;
    rec.theorem_id = VerificationRecord::TheoremId::SeriesStep;
    std::ostringstream os;
    os << "alpha=" << p.alpha.real() << " beta=" << p.beta.real() << " a=" << a << " t=" << t;
    rec.inputs = os.str();
    rec.lhs = lhs;
    rec.rhs = rhs;
    rec.residual_or_slack = std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs));
    rec.pass = rec.residual_or_slack <= tol;
    rec.sign_convention = VerificationRecord::SignConvention::Undetermined;
    return rec;
}

}  // namespace tfc::rlseries
