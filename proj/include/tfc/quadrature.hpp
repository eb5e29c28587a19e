#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "tfc/types.hpp"

namespace tfc::quad {

/// Gauss-Legendre rule on [-1, 1].
struct GlRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

namespace detail {

inline GlRule make_gl_rule(int n) {
    GlRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const long double pi = 3.14159265358979323846264338327950288L;
    for (int i = 0; i < (n + 1) / 2; ++i) {
        // Chebyshev-based initial guess, then Newton on P_n.
        long double x = std::cos(pi * (static_cast<long double>(i) + 0.75L) /
                                 (static_cast<long double>(n) + 0.5L));
        long double pp = 0.0L;
        for (int iter = 0; iter < 100; ++iter) {
            long double p0 = 1.0L, p1 = x;
            for (int k = 2; k <= n; ++k) {
                long double p2 = ((2.0L * k - 1.0L) * x * p1 - (k - 1.0L) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0L);
            long double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-19L) break;
        }
        double w = static_cast<double>(2.0L / ((1.0L - x * x) * pp * pp));
        rule.nodes[i] = static_cast<double>(-x);
        rule.nodes[n - 1 - i] = static_cast<double>(x);
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
    return rule;
}

}  // namespace detail

/// Cached Gauss-Legendre rule for a given node count.
inline const GlRule& gl_rule(int n) {
    static std::map<int, GlRule> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, detail::make_gl_rule(n)).first;
    return it->second;
}

namespace detail {

template <class F>
ComplexScalar gl_panel(const F& f, double lo, double hi, const GlRule& rule,
                       long long& effort) {
    const double c = 0.5 * (hi - lo);
    const double m = 0.5 * (hi + lo);
    ComplexScalar acc{0.0, 0.0};
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        acc += rule.weights[i] * f(m + c * rule.nodes[i]);
    }
    effort += static_cast<long long>(rule.nodes.size());
    return c * acc;
}

inline bool near_integer(double x, double tol = 1e-12) {
    return std::abs(x - std::round(x)) <= tol;
}

/// Composite evaluation over a breakpoint list, plus the every-second-panel
/// merged value used as the deterministic error estimate.
template <class F>
void composite_with_estimate(const F& f, const std::vector<double>& bps,
                             const GlRule& rule, long long& effort,
                             ComplexScalar& fine, ComplexScalar& coarse) {
    fine = ComplexScalar{0.0, 0.0};
    coarse = ComplexScalar{0.0, 0.0};
    const std::size_t npan = bps.size() - 1;
    for (std::size_t i = 0; i < npan; ++i)
        fine += gl_panel(f, bps[i], bps[i + 1], rule, effort);
    for (std::size_t i = 0; i + 1 < npan; i += 2)
        coarse += gl_panel(f, bps[i], bps[i + 2], rule, effort);
    if (npan % 2 == 1) coarse += gl_panel(f, bps[npan - 1], bps[npan], rule, effort);
}

/// Breakpoints graded dyadically toward 0 on [0, span]: levels panels of
/// geometrically shrinking size, each split `splits` times.
inline std::vector<double> graded_breakpoints(double span, int levels, int splits) {
    std::vector<double> bps;
    bps.push_back(0.0);
    for (int k = levels; k >= 1; --k) {
        double lo = span * std::ldexp(1.0, -k);
        double hi = (k == 1) ? span : span * std::ldexp(1.0, -(k - 1));
        for (int j = 1; j <= splits; ++j)
            bps.push_back(lo + (hi - lo) * static_cast<double>(j) / splits);
    }
    return bps;
}

/// Weighted integral core: computes the integral over (0, T] of
/// s^sigma * h(s) with h bounded, by the graded substitution s = tau^p,
/// p = ceil(1/(1+sigma)), followed by dyadically graded Gauss-Legendre
/// panels toward the endpoint. `oscillatory` forces extra grading when h
/// carries an s^{i y} phase folded in by the caller.
template <class F>
EvalReport weighted_core(const F& h, double T, double sigma, const QuadratureSpec& spec,
                         bool oscillatory) {
    spec.validate();
    if (!(T > 0.0)) throw DomainError("integration length must be positive");
    if (!(sigma > -1.0)) throw DomainError("weight exponent must exceed -1");

    const int p = sigma < 0.0 ? static_cast<int>(std::ceil(1.0 / (1.0 + sigma) - 1e-12)) : 1;
    const double eta = p * (1.0 + sigma) - 1.0;
    const double B = p == 1 ? T : std::pow(T, 1.0 / p);

    // Transformed integrand p * tau^{p(1+sigma)-1} * h(tau^p); the exponent
    // eta = p(1+sigma)-1 is >= 0 by choice of p, so the integrand is bounded.
    auto integrand = [&](double tau) -> ComplexScalar {
        const double s = p == 1 ? tau : std::pow(tau, static_cast<double>(p));
        const double factor =
            p == 1 && sigma == 0.0 ? 1.0 : p * std::pow(tau, static_cast<double>(p) * (1.0 + sigma) - 1.0);
        return factor * h(s);
    };

    const bool analytic_endpoint = near_integer(eta) && !oscillatory;
    int levels;
    if (analytic_endpoint) {
        levels = 10;
    } else {
        levels = static_cast<int>(std::ceil(44.0 / (1.0 + eta)));
        levels = std::clamp(levels, 12, 480);
    }
    levels = std::min(levels, spec.max_panels - 1);

    const GlRule& rule = gl_rule(spec.nodes_per_panel);
    long long effort = 0;
    ComplexScalar fine{0.0, 0.0};
    double est = 0.0;

    for (int splits = 1;; splits *= 2) {
        if ((levels + 1) * splits > spec.max_panels) {
            throw NonConvergentError("weighted quadrature did not converge within max_panels");
        }
        std::vector<double> bps = graded_breakpoints(B, levels, splits);
        ComplexScalar coarse;
        composite_with_estimate(integrand, bps, rule, effort, fine, coarse);
        est = std::abs(fine - coarse);
        if (est <= std::max(spec.abs_tol, spec.rel_tol * std::abs(fine))) {
            return {fine, est, effort, true};
        }
    }
}

}  // namespace detail

/// Integral over (0, T] of s^sigma * g(s) with g bounded on (0, T]. The
/// endpoint weight is handled by a graded power substitution, never by naive
/// sampling at s = 0.
inline EvalReport integrate_weighted_left(const FunctionHandle& g, double T, double sigma,
                                          const QuadratureSpec& spec = {}) {
    return detail::weighted_core([&](double s) { return g(s); }, T, sigma, spec, false);
}

namespace detail {

/// Split form of the two-ended weighted integral over (0, T):
///   integral of s^sigma_left * g(s) ds, with g behaving like
///   (T - s)^{eta_right} * (bounded) as s -> T.
/// The caller provides the two halves in well-conditioned coordinates:
/// g_left(s) near the kernel end, and g_right_div(w) = s^sigma_left g(s) /
/// w^{eta_right} at s = T - w, written directly in the reflected coordinate w
/// so that evaluations arbitrarily close to the far endpoint do not lose the
/// distance to cancellation.
template <class GLeft, class GRightDiv>
EvalReport weighted_split(const GLeft& g_left, const GRightDiv& g_right_div, double T,
                          double sigma_left, double eta_right, const QuadratureSpec& spec,
                          bool oscillatory) {
    if (eta_right == 0.0) {
        return weighted_core(g_left, T, sigma_left, spec, oscillatory);
    }
    if (!(eta_right > -1.0)) throw DomainError("right endpoint exponent must exceed -1");
    const double M = 0.5 * T;
    EvalReport left = weighted_core(g_left, M, sigma_left, spec, oscillatory);
    EvalReport right = weighted_core(g_right_div, M, eta_right, spec, oscillatory);
    EvalReport out;
    out.value = left.value + right.value;
    out.err_estimate = left.err_estimate + right.err_estimate;
    out.effort = left.effort + right.effort;
    out.converged = left.converged && right.converged;
    return out;
}

}  // namespace detail

/// Convenience form of the split integral for integrands given as a single
/// callable. Prefer the split form when g is singular at T: evaluating
/// g(T - w) here recomputes the distance w by subtraction.
inline EvalReport integrate_weighted_two_ended(const FunctionHandle& g, double T,
                                               double sigma_left, double eta_right,
                                               const QuadratureSpec& spec = {},
                                               bool oscillatory = false) {
    return detail::weighted_split(
        [&](double s) { return g(s); },
        [&](double w) {
            return std::pow(T - w, sigma_left) * g(T - w) * std::pow(w, -eta_right);
        },
        T, sigma_left, eta_right, spec, oscillatory);
}

namespace detail {

template <class F>
void adaptive_panel(const F& g, double lo, double hi, double tol, int depth,
                    const GlRule& rule, long long& effort, ComplexScalar& value,
                    double& err) {
    ComplexScalar whole = gl_panel(g, lo, hi, rule, effort);
    double mid = 0.5 * (lo + hi);
    ComplexScalar halves =
        gl_panel(g, lo, mid, rule, effort) + gl_panel(g, mid, hi, rule, effort);
    double est = std::abs(whole - halves);
    if (est <= tol || depth <= 0) {
        value += halves;
        err += est;
        return;
    }
    adaptive_panel(g, lo, mid, 0.5 * tol, depth - 1, rule, effort, value, err);
    adaptive_panel(g, mid, hi, 0.5 * tol, depth - 1, rule, effort, value, err);
}

}  // namespace detail

/// Integral over [0, inf) of g, for g with |g(t)| <= C exp(-decay_hint t) at
/// large t (caller-asserted). Panels grow geometrically until the exponential
/// tail bound drops below abs_tol.
inline EvalReport integrate_semi_infinite(const FunctionHandle& g, double decay_hint,
                                          const QuadratureSpec& spec = {}) {
    spec.validate();
    if (!(decay_hint > 0.0)) throw DomainError("decay_hint must be positive");

    const GlRule& rule = gl_rule(spec.nodes_per_panel);
    long long effort = 0;
    ComplexScalar value{0.0, 0.0};
    double err = 0.0;
    double lo = 0.0, hi = 1.0;

    // Scale estimate C in |g| <= C exp(-decay t), refreshed from samples.
    double c_est = 0.0;
    auto sample_scale = [&](double a, double b) {
        for (int i = 0; i < 5; ++i) {
            double x = a + (b - a) * (i + 0.5) / 5.0;
            double m = std::abs(g(x)) * std::exp(std::min(decay_hint * x, 700.0));
            c_est = std::max(c_est, m);
        }
        effort += 5;
    };

    for (int panel = 0; panel < spec.max_panels; ++panel) {
        sample_scale(lo, hi);
        detail::adaptive_panel([&](double x) { return g(x); }, lo, hi,
                               0.25 * spec.abs_tol, 14, rule, effort, value, err);
        const double tail = c_est * std::exp(-decay_hint * hi) / decay_hint;
        if (tail <= spec.abs_tol) {
            err += tail;
            bool conv = err <= std::max(spec.abs_tol * 4.0, spec.rel_tol * std::abs(value));
            return {value, err, effort, conv};
        }
        lo = hi;
        hi *= spec.semi_infinite_cutoff_growth;
    }
    throw NonConvergentError("semi-infinite quadrature: tail bound not met within max_panels");
}

/// Central finite difference of order k at t with base step h, sharpened by
/// one Richardson extrapolation level (combines the h and h/2 stencils).
inline ComplexScalar finite_diff(const FunctionHandle& g, double t, int k, double h) {
    if (k < 0) throw DomainError("derivative order must be non-negative");
    if (!(h > 0.0)) throw DomainError("step must be positive");
    if (k == 0) return g(t);
    const double reach = 0.5 * k * h;
    if (t - reach < g.domain.a || t + reach > g.domain.b)
        throw DomainError("finite difference stencil leaves the function domain");

    auto stencil = [&](double step) -> ComplexScalar {
        ComplexScalar acc{0.0, 0.0};
        double binom = 1.0;  // C(k, 0)
        for (int j = 0; j <= k; ++j) {
            const double sign = ((k - j) % 2 == 0) ? 1.0 : -1.0;
            acc += sign * binom * g(t + (j - 0.5 * k) * step);
            binom = binom * (k - j) / (j + 1.0);
        }
        return acc / std::pow(step, k);
    };

    const ComplexScalar d1 = stencil(h);
    const ComplexScalar d2 = stencil(0.5 * h);
    return (4.0 * d2 - d1) / 3.0;
}

}  // namespace tfc::quad
