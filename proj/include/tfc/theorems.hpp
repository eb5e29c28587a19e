#pragma once

#include <cmath>
#include <sstream>
#include <vector>

#include "tfc/cheb.hpp"
#include "tfc/operators.hpp"
#include "tfc/specfun.hpp"
#include "tfc/verification.hpp"

namespace tfc::theorems {

using tfc::VerificationRecord;
using SignConvention = VerificationRecord::SignConvention;

/// Tempered integral of the unit function over length t:
///   gamma(alpha, beta t) / (beta^alpha Gamma(alpha)),
/// with the beta -> 0 limit t^alpha / Gamma(alpha + 1).
inline ComplexScalar unit_integral_closed(const FracParams& p, double t) {
    p.require_integral_order();
    if (!(t > 0.0)) throw DomainError("unit_integral_closed requires t > 0");
    if (p.beta == ComplexScalar{0.0, 0.0}) {
        return cpow(t, p.alpha) * specfun::reciprocal_gamma(p.alpha + 1.0);
    }
    return specfun::lower_incomplete_gamma(p.alpha, p.beta * t) /
           (cpow(p.beta, p.alpha) * specfun::gamma(p.alpha));
}

/// Tempered integral of the damped power e^{-beta(u-a)} (u-a)^{gexp-1}:
///   Gamma(gexp)/Gamma(gexp+alpha) e^{-beta(t-a)} (t-a)^{alpha+gexp-1}.
inline ComplexScalar eab_power_integral(ComplexScalar gexp, const FracParams& p, double a,
                                        double t) {
    if (!(gexp.real() > 0.0)) throw DomainError("eab_power_integral requires Re(gexp) > 0");
    p.require_integral_order();
    if (!(t > a)) throw DomainError("eab_power_integral requires t > a");
    const double dt = t - a;
    return specfun::gamma_ratio(gexp, gexp + p.alpha) * std::exp(-p.beta * dt) *
           cpow(dt, p.alpha + gexp - 1.0);
}

/// Prefactor of the integral-form remainder after m+1 expansion steps:
/// the unit integral of order (m+1) alpha over length t - a.
inline ComplexScalar remainder_prefactor(const FracParams& p, int m, double a, double t) {
    if (m < 0) throw DomainError("remainder_prefactor requires m >= 0");
    return unit_integral_closed({p.alpha * static_cast<double>(m + 1), p.beta}, t - a);
}

namespace detail {

/// A function known to behave like (u - a)^exponent * (analytic) near a.
/// Compositions track the exponent so every nested quadrature can grade
/// its panels correctly.
struct Layer {
    FunctionHandle handle;
    double exponent = 0.0;
};

inline Layer layer_of(const FunctionHandle& f) { return {f, f.left_exponent}; }

/// I^{(c, beta)} applied to a layer, evaluated at one point.
inline ComplexScalar integral_at(const Layer& v, ComplexScalar c, ComplexScalar beta, double a,
                                 double tau, const QuadratureSpec& qspec) {
    FunctionHandle wrapped(v.handle.evaluator, Interval(a, v.handle.domain.b),
                           Regularity::integrable(), v.exponent);
    return ops::detail::kernel_integral(wrapped, c, beta, a, tau, qspec).value;
}

/// Exponent bookkeeping under one proportional-derivative application for
/// alpha in (0, 1): generically e -> e - alpha, but when alpha - 1 - e is a
/// non-negative integer the would-be leading power is annihilated by the
/// 1/Gamma factor; for the resonant case (j = 0) the next power leads.
inline double derivative_exponent(double e, double alpha) {
    const double jstar = alpha - 1.0 - e;
    if (std::abs(jstar - std::round(jstar)) < 1e-9 && std::round(jstar) == 0.0) {
        return e + 1.0 - alpha;
    }
    return e - alpha;
}

/// Proportional derivative (d/dtau + beta) I^{(1-alpha, beta)} v at tau for
/// alpha in (0, 1). The integral map behaves like (tau-a)^psi G(tau) with G
/// analytic; differencing G instead of the map keeps the stencil accurate
/// arbitrarily close to a.
inline ComplexScalar prop_derivative_at(const Layer& v, double alpha, ComplexScalar beta,
                                        double a, double tau, const QuadratureSpec& qspec) {
    const double psi = v.exponent + 1.0 - alpha;
    auto integral_map = [&](double x) {
        return integral_at(v, {1.0 - alpha, 0.0}, beta, a, x, qspec);
    };
    FunctionHandle g_fn([&](double x) { return integral_map(x) * std::pow(x - a, -psi); },
                        Interval(a, v.handle.domain.b));

    const double base = std::max(1e-4, 1e-4 * (tau - a));
    const double h = std::min(base, 0.25 * (tau - a));
    const ComplexScalar g_tau = g_fn(tau);
    const ComplexScalar g_prime = quad::finite_diff(g_fn, tau, 1, h);
    const double dt = tau - a;
    const ComplexScalar f_tau = std::pow(dt, psi) * g_tau;
    const ComplexScalar f_prime = std::pow(dt, psi - 1.0) * (psi * g_tau + dt * g_prime);
    return f_prime + beta * f_tau;
}

/// Chebyshev-cached D^{(alpha,beta)} v on [a, bcap].
inline Layer cache_derivative(const Layer& v, double alpha, ComplexScalar beta, double a,
                              double bcap, const QuadratureSpec& qspec, int ncheb) {
    const double e_new = derivative_exponent(v.exponent, alpha);
    if (e_new <= -1.0)
        throw DomainError("operator composition is no longer integrable at the base point");
    auto interp = cheb::Interpolant::build(
        [&](double u) {
            return prop_derivative_at(v, alpha, beta, a, u, qspec) * std::pow(u - a, -e_new);
        },
        a, bcap, ncheb);
    FunctionHandle cached(
        [interp, a, e_new](double u) { return interp(u) * std::pow(u - a, e_new); },
        Interval(a, bcap), Regularity::integrable(), e_new);
    return {cached, e_new};
}

/// Chebyshev-cached I^{(alpha,beta)} v on [a, bcap].
inline Layer cache_integral(const Layer& v, double alpha, ComplexScalar beta, double a,
                            double bcap, const QuadratureSpec& qspec, int ncheb) {
    const double e_new = v.exponent + alpha;
    auto interp = cheb::Interpolant::build(
        [&](double u) {
            if (u <= a) return ComplexScalar{0.0, 0.0};
            return integral_at(v, {alpha, 0.0}, beta, a, u, qspec) * std::pow(u - a, -e_new);
        },
        a, bcap, ncheb);
    FunctionHandle cached(
        [interp, a, e_new](double u) { return interp(u) * std::pow(u - a, e_new); },
        Interval(a, bcap), Regularity::integrable(), e_new);
    return {cached, e_new};
}

/// Limit of I^{(1-alpha, beta)} v at a from the right, taken at
/// eps = 1e-6 (t - a) with one Richardson step toward a. The integral map
/// approaches its limit like c eps^psi with psi = exponent + 1 - alpha, so
/// the extrapolation step uses that exponent (psi = 0 resonances approach
/// linearly and take the plain step).
inline ComplexScalar base_point_limit(const Layer& v, double alpha, ComplexScalar beta, double a,
                                      double t, const QuadratureSpec& qspec) {
    const double eps = 1e-6 * (t - a);
    const ComplexScalar l1 = integral_at(v, {1.0 - alpha, 0.0}, beta, a, a + eps, qspec);
    const ComplexScalar l2 = integral_at(v, {1.0 - alpha, 0.0}, beta, a, a + 0.5 * eps, qspec);
    const double psi = v.exponent + 1.0 - alpha;
    if (std::abs(psi) < 1e-9) return 2.0 * l2 - l1;
    const double w = std::pow(2.0, psi);
    return (w * l2 - l1) / (w - 1.0);
}

/// Builds the chain f, Df, DDf, ... up to depth levels, cached per level.
inline std::vector<Layer> derivative_chain(const FunctionHandle& f, double alpha,
                                           ComplexScalar beta, double a, double t, int depth,
                                           const QuadratureSpec& qspec, int ncheb) {
    std::vector<Layer> chain;
    chain.push_back(layer_of(f));
    for (int k = 1; k <= depth; ++k) {
        const double pad = 1e-3 * (t - a) * (depth - k + 1);
        double bcap = t + pad;
        if (bcap > f.domain.b) bcap = f.domain.b;
        if (!(bcap > t)) throw DomainError("function domain too tight for composition stencils");
        chain.push_back(cache_derivative(chain.back(), alpha, beta, a, bcap, qspec, ncheb));
    }
    return chain;
}

inline SignConvention pick_sign(double resid_plus, double resid_minus, double correction_scale,
                                double tol) {
    if (correction_scale <= 10.0 * tol) return SignConvention::Undetermined;
    if (resid_plus <= tol && resid_plus < resid_minus) return SignConvention::PropSign;
    if (resid_minus <= tol && resid_minus < resid_plus) return SignConvention::LemmaSign;
    return SignConvention::Undetermined;
}

inline std::string describe(const char* fname, double alpha, ComplexScalar beta, double a,
                            double t, int order) {
    std::ostringstream os;
    os << "f=" << fname << " alpha=" << alpha << " beta=" << beta.real() << " a=" << a
       << " t=" << t;
    if (order >= 0) os << " r=" << order;
    return os.str();
}

}  // namespace detail

/// Default tolerances: compositions stack two quadrature levels plus finite
/// differences, inequalities are single quadratures.
inline constexpr double kCompositionTol = 1e-4;
inline constexpr double kInequalityTol = 1e-8;

/// Checks I^{(alpha,beta)} D^{(alpha,beta)} f = f - (boundary correction)
/// for alpha in (0, 1). The correction sign is not assumed: both conventions
/// are scored and the record reports which one the numbers support.
inline VerificationRecord inversion_check(const FunctionHandle& f, const FracParams& p, double a,
                                          double t, const QuadratureSpec& qspec = {},
                                          double tol = kCompositionTol, int ncheb = 96,
                                          const char* label = "f") {
    const double alpha = p.alpha.real();
    if (!(alpha > 0.0 && alpha < 1.0) || p.alpha.imag() != 0.0)
        throw DomainError("inversion_check requires real alpha in (0, 1)");

    auto chain = detail::derivative_chain(f, alpha, p.beta, a, t, 1, qspec, ncheb);
    const ComplexScalar composed = detail::integral_at(chain[1], p.alpha, p.beta, a, t, qspec);

    const ComplexScalar limit = detail::base_point_limit(chain[0], alpha, p.beta, a, t, qspec);
    const ComplexScalar corr = std::exp(-p.beta * (t - a)) * std::pow(t - a, alpha - 1.0) *
                               specfun::reciprocal_gamma(p.alpha) * limit;

    const ComplexScalar f_t = f(t);
    const double scale = std::max({1.0, std::abs(f_t), std::abs(composed)});
    const double resid_prop = std::abs(composed - (f_t - corr)) / scale;
    const double resid_lemma = std::abs(composed - (f_t + corr)) / scale;

    VerificationRecord rec;
    rec.theorem_id = VerificationRecord::TheoremId::Inversion;
    rec.inputs = detail::describe(label, alpha, p.beta, a, t, -1);
    rec.lhs = composed;
    rec.rhs = f_t - corr;
    rec.residual_or_slack = std::min(resid_prop, resid_lemma);
    rec.pass = rec.residual_or_slack <= tol;
    rec.sign_convention = detail::pick_sign(resid_prop, resid_lemma, std::abs(corr) / scale, tol);
    return rec;
}

/// Checks (I)^r (D)^r f - (I)^{r+1} (D)^{r+1} f against the single boundary
/// term with prefactor (t-a)^{r alpha + alpha - 1} / Gamma(r alpha + alpha),
/// for alpha in (0, 1), r <= 2. Residuals under both signs decide the
/// convention.
inline VerificationRecord lemma_composition_check(const FunctionHandle& f, const FracParams& p,
                                                  int r, double a, double t,
                                                  const QuadratureSpec& qspec = {},
                                                  double tol = kCompositionTol, int ncheb = 96,
                                                  const char* label = "f") {
    const double alpha = p.alpha.real();
    if (!(alpha > 0.0 && alpha < 1.0) || p.alpha.imag() != 0.0)
        throw DomainError("lemma_composition_check requires real alpha in (0, 1)");
    if (r < 0) throw DomainError("lemma_composition_check requires r >= 0");
    if (r > 2) throw CostExceededError("lemma_composition_check supports r <= 2");

    auto chain = detail::derivative_chain(f, alpha, p.beta, a, t, r + 1, qspec, ncheb);

    // (I)^k (D)^k f (t): chain the cached integrals, evaluate the last one.
    // Integral caches need no forward padding: each level only consumes its
    // operand on [a, t].
    auto iterated = [&](int k) -> ComplexScalar {
        if (k == 0) return f(t);
        detail::Layer u = chain[k];
        for (int j = 0; j < k - 1; ++j) {
            u = detail::cache_integral(u, alpha, p.beta, a, t, qspec, ncheb);
        }
        return detail::integral_at(u, p.alpha, p.beta, a, t, qspec);
    };

    const ComplexScalar lhs = iterated(r) - iterated(r + 1);

    const ComplexScalar limit = detail::base_point_limit(chain[r], alpha, p.beta, a, t, qspec);
    const double power = r * alpha + alpha - 1.0;
    const ComplexScalar magnitude = std::exp(-p.beta * (t - a)) * std::pow(t - a, power) *
                                    specfun::reciprocal_gamma({r * alpha + alpha, 0.0}) * limit;

    const double scale = std::max(1.0, std::abs(f(t)));
    const double resid_lemma = std::abs(lhs - (-magnitude)) / scale;  // stated sign
    const double resid_prop = std::abs(lhs - magnitude) / scale;      // opposite sign

    VerificationRecord rec;
    rec.theorem_id = VerificationRecord::TheoremId::LemmaComposition;
    rec.inputs = detail::describe(label, alpha, p.beta, a, t, r);
    rec.lhs = lhs;
    rec.rhs = magnitude;
    rec.residual_or_slack = std::min(resid_prop, resid_lemma);
    rec.pass = rec.residual_or_slack <= tol;
    rec.sign_convention =
        detail::pick_sign(resid_prop, resid_lemma, std::abs(magnitude) / scale, tol);
    return rec;
}

/// Telescoped expansion with integral-form remainder, alpha in (0, 1):
///   f(t) = sum_{r=0}^{m} s_r (t-a)^{r alpha + alpha - 1} e^{-beta(t-a)}
///              / Gamma(r alpha + alpha) * [I^{(1-alpha,beta)} (D)^r f](a+)
///          + I^{((m+1) alpha, beta)} (D)^{m+1} f (t),
/// where the iterated outer integral is collapsed through the semigroup law
/// and the sign s_r = +/-1 of the sum is decided numerically.
inline VerificationRecord taylor_telescope_check(const FunctionHandle& f, const FracParams& p,
                                                 int m, double a, double t,
                                                 const QuadratureSpec& qspec = {},
                                                 double tol = kCompositionTol, int ncheb = 96,
                                                 const char* label = "f") {
    const double alpha = p.alpha.real();
    if (!(alpha > 0.0 && alpha < 1.0) || p.alpha.imag() != 0.0)
        throw DomainError("taylor_telescope_check requires real alpha in (0, 1)");
    if (m < 0) throw DomainError("taylor_telescope_check requires m >= 0");
    if (m > 2) throw CostExceededError("taylor_telescope_check supports m <= 2");

    auto chain = detail::derivative_chain(f, alpha, p.beta, a, t, m + 1, qspec, ncheb);

    ComplexScalar sum{0.0, 0.0};
    for (int r = 0; r <= m; ++r) {
        const ComplexScalar limit =
            detail::base_point_limit(chain[r], alpha, p.beta, a, t, qspec);
        sum += std::pow(t - a, r * alpha + alpha - 1.0) *
               specfun::reciprocal_gamma({r * alpha + alpha, 0.0}) * limit;
    }
    sum *= std::exp(-p.beta * (t - a));

    const ComplexScalar remainder = detail::integral_at(
        chain[m + 1], {(m + 1) * alpha, 0.0}, p.beta, a, t, qspec);

    const ComplexScalar f_t = f(t);
    const double scale = std::max(1.0, std::abs(f_t));
    const double resid_prop = std::abs(f_t - (sum + remainder)) / scale;
    const double resid_lemma = std::abs(f_t - (-sum + remainder)) / scale;

    VerificationRecord rec;
    rec.theorem_id = VerificationRecord::TheoremId::TaylorTelescope;
    rec.inputs = detail::describe(label, alpha, p.beta, a, t, m);
    rec.lhs = f_t;
    rec.rhs = sum + remainder;
    rec.residual_or_slack = std::min(resid_prop, resid_lemma);
    rec.pass = rec.residual_or_slack <= tol;
    rec.sign_convention = detail::pick_sign(resid_prop, resid_lemma, std::abs(sum) / scale, tol);
    return rec;
}

/// True iff (f(u)-f(v))(g(u)-g(v)) >= 0 for all grid pairs. Complex-valued
/// samples are rejected.
inline bool synchrony_check(const FunctionHandle& f, const FunctionHandle& g,
                            const std::vector<double>& grid) {
    std::vector<double> fv(grid.size()), gv(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const ComplexScalar a = f(grid[i]);
        const ComplexScalar b = g(grid[i]);
        if (std::abs(a.imag()) > 1e-12 * (1.0 + std::abs(a.real())) ||
            std::abs(b.imag()) > 1e-12 * (1.0 + std::abs(b.real())))
            throw DomainError("synchrony_check requires real-valued functions");
        fv[i] = a.real();
        gv[i] = b.real();
    }
    for (std::size_t i = 0; i < grid.size(); ++i) {
        for (std::size_t j = i + 1; j < grid.size(); ++j) {
            if ((fv[i] - fv[j]) * (gv[i] - gv[j]) < 0.0) return false;
        }
    }
    return true;
}

namespace detail {

inline std::vector<double> uniform_grid(double lo, double hi, int n) {
    std::vector<double> g(n);
    for (int i = 0; i < n; ++i) g[i] = lo + (hi - lo) * i / (n - 1.0);
    return g;
}

inline double real_part_checked(ComplexScalar z, const char* what) {
    if (std::abs(z.imag()) > 1e-9 * (1.0 + std::abs(z.real())))
        throw DomainError(std::string(what) + ": unexpectedly complex value");
    return z.real();
}

}  // namespace detail

/// Chebyshev-type inequality for one order: slack of
///   I[fg] >= [beta^alpha Gamma(alpha) / gamma(alpha, beta t)] I[f] I[g]
/// for synchronous f, g and real beta > 0.
inline VerificationRecord chebyshev_slack1(const FunctionHandle& f, const FunctionHandle& g,
                                           const FracParams& p, double t,
                                           const QuadratureSpec& qspec = {},
                                           double tol = kInequalityTol) {
    p.require_integral_order();
    if (!(p.beta.imag() == 0.0) || !(p.beta.real() > 0.0))
        throw DomainError("chebyshev_slack1 requires real beta > 0");
    if (!synchrony_check(f, g, detail::uniform_grid(0.0, t, 64)))
        throw SynchronyError("chebyshev_slack1: functions fail the synchrony grid check");

    FunctionHandle fg([&](double u) { return f(u) * g(u); }, f.domain);
    const double i_fg =
        detail::real_part_checked(ops::tempered_integral(fg, p, 0.0, t, qspec).value, "I[fg]");
    const double i_f =
        detail::real_part_checked(ops::tempered_integral(f, p, 0.0, t, qspec).value, "I[f]");
    const double i_g =
        detail::real_part_checked(ops::tempered_integral(g, p, 0.0, t, qspec).value, "I[g]");
    const double unit = detail::real_part_checked(unit_integral_closed(p, t), "I[1]");

    const double rhs = i_f * i_g / unit;
    const double slack = i_fg - rhs;
    const double scale = std::abs(i_fg) + std::abs(rhs) + 1e-30;

    VerificationRecord rec;
    rec.theorem_id = VerificationRecord::TheoremId::Ineq1;
    std::ostringstream os;
    os << "alpha=" << p.alpha.real() << " beta=" << p.beta.real() << " t=" << t;
    rec.inputs = os.str();
    rec.lhs = {i_fg, 0.0};
    rec.rhs = {rhs, 0.0};
    rec.residual_or_slack = slack;
    rec.pass = slack >= -tol * scale;
    return rec;
}

/// Two-order Chebyshev-type inequality: slack of
///   I1[1] I2[fg] + I2[1] I1[fg] >= I1[f] I2[g] + I1[g] I2[f]
/// written with the closed-form unit integrals.
inline VerificationRecord chebyshev_slack2(const FunctionHandle& f, const FunctionHandle& g,
                                           ComplexScalar alpha1, ComplexScalar alpha2,
                                           double beta, double t,
                                           const QuadratureSpec& qspec = {},
                                           double tol = kInequalityTol) {
    const FracParams p1{alpha1, {beta, 0.0}};
    const FracParams p2{alpha2, {beta, 0.0}};
    p1.require_integral_order();
    p2.require_integral_order();
    if (!(beta > 0.0)) throw DomainError("chebyshev_slack2 requires real beta > 0");
    if (!synchrony_check(f, g, detail::uniform_grid(0.0, t, 64)))
        throw SynchronyError("chebyshev_slack2: functions fail the synchrony grid check");

    FunctionHandle fg([&](double u) { return f(u) * g(u); }, f.domain);
    auto ireal = [&](const FunctionHandle& h, const FracParams& p) {
        return detail::real_part_checked(ops::tempered_integral(h, p, 0.0, t, qspec).value,
                                         "tempered integral");
    };
    const double u1 = detail::real_part_checked(unit_integral_closed(p1, t), "I1[1]");
    const double u2 = detail::real_part_checked(unit_integral_closed(p2, t), "I2[1]");

    const double lhs = u2 * ireal(fg, p1) + u1 * ireal(fg, p2);
    const double rhs = ireal(f, p1) * ireal(g, p2) + ireal(g, p1) * ireal(f, p2);
    const double slack = lhs - rhs;
    const double scale = std::abs(lhs) + std::abs(rhs) + 1e-30;

    VerificationRecord rec;
    rec.theorem_id = VerificationRecord::TheoremId::Ineq2;
    std::ostringstream os;
    os << "alpha1=" << alpha1.real() << " alpha2=" << alpha2.real() << " beta=" << beta
       << " t=" << t;
    rec.inputs = os.str();
    rec.lhs = {lhs, 0.0};
    rec.rhs = {rhs, 0.0};
    rec.residual_or_slack = slack;
    rec.pass = slack >= -tol * scale;
    return rec;
}

/// n-function product inequality for positive increasing operands:
///   I[prod f_i] >= (I[1])^{-(n-1)} prod I[f_i].
inline VerificationRecord product_slack_n(const std::vector<FunctionHandle>& fs,
                                          const FracParams& p, double t,
                                          const QuadratureSpec& qspec = {},
                                          double tol = kInequalityTol) {
    p.require_integral_order();
    if (!(p.beta.imag() == 0.0) || !(p.beta.real() > 0.0))
        throw DomainError("product_slack_n requires real beta > 0");
    if (fs.empty()) throw DomainError("product_slack_n requires at least one function");

    const auto grid = detail::uniform_grid(0.0, t, 64);
    for (std::size_t i = 0; i < fs.size(); ++i) {
        double prev = -1e300;
        for (double u : grid) {
            const double val = detail::real_part_checked(fs[i](u), "product operand");
            if (val <= 0.0) throw PositivityError("product_slack_n: operand is not positive");
            if (val < prev - 1e-12 * (1.0 + std::abs(prev)))
                throw MonotonicityError("product_slack_n: operand is not increasing");
            prev = val;
        }
    }

    FunctionHandle prod(
        [&fs](double u) {
            ComplexScalar acc{1.0, 0.0};
            for (const auto& fi : fs) acc *= fi(u);
            return acc;
        },
        fs.front().domain);

    const double lhs =
        detail::real_part_checked(ops::tempered_integral(prod, p, 0.0, t, qspec).value,
                                  "I[prod]");
    const double unit = detail::real_part_checked(unit_integral_closed(p, t), "I[1]");
    double rhs = 1.0;
    for (const auto& fi : fs)
        rhs *= detail::real_part_checked(ops::tempered_integral(fi, p, 0.0, t, qspec).value,
                                         "I[f_i]");
    rhs /= std::pow(unit, static_cast<double>(fs.size()) - 1.0);

    const double slack = lhs - rhs;
    const double scale = std::abs(lhs) + std::abs(rhs) + 1e-30;

    VerificationRecord rec;
    rec.theorem_id = VerificationRecord::TheoremId::Ineq3;
    std::ostringstream os;
    os << "n=" << fs.size() << " alpha=" << p.alpha.real() << " beta=" << p.beta.real()
       << " t=" << t;
    rec.inputs = os.str();
    rec.lhs = {lhs, 0.0};
    rec.rhs = {rhs, 0.0};
    rec.residual_or_slack = slack;
    rec.pass = slack >= -tol * scale;
    return rec;
}

}  // namespace tfc::theorems
