#pragma once

#include <cmath>
#include <vector>

#include "tfc/operators.hpp"
#include "tfc/specfun.hpp"
#include "tfc/types.hpp"

namespace tfc::mellin {

/// Argument of the transform; kept as a struct so call sites name the symbol.
struct MellinPoint {
    ComplexScalar s{1.0, 0.0};
    MellinPoint() = default;
    MellinPoint(ComplexScalar v) : s(v) {}  // NOLINT: implicit by design
    MellinPoint(double v) : s(v, 0.0) {}    // NOLINT
};

/// Direct numerical transform: integral over (0, inf) of t^{s-1} g(t) dt,
/// split at 1 into a weighted head (the t^{Re s - 1} endpoint weight goes
/// through the graded engine) and an exponentially cut tail.
inline EvalReport mellin_numeric(const FunctionHandle& g, MellinPoint sp, double decay_hint,
                                 const QuadratureSpec& spec = {}) {
    const ComplexScalar s = sp.s;
    if (!(s.real() > 0.0)) throw DomainError("mellin_numeric requires Re(s) > 0");
    if (!(decay_hint > 0.0)) throw DomainError("mellin_numeric requires a positive decay hint");

    const double sigma = s.real() - 1.0;
    const ComplexScalar iphase{0.0, s.imag()};
    const bool osc = s.imag() != 0.0;

    auto head_fn = [&](double t) {
        ComplexScalar val = g(t);
        if (osc) val *= cpow(t, iphase);
        return val;
    };
    EvalReport head = quad::detail::weighted_core(head_fn, 1.0, sigma, spec, osc);

    auto tail_fn = [&](double x) { return cpow(1.0 + x, s - 1.0) * g(1.0 + x); };
    EvalReport tail =
        quad::integrate_semi_infinite(FunctionHandle(tail_fn), 0.9 * decay_hint, spec);

    EvalReport out;
    out.value = head.value + tail.value;
    out.err_estimate = head.err_estimate + tail.err_estimate;
    out.effort = head.effort + tail.effort;
    out.converged = head.converged && tail.converged;
    return out;
}

namespace detail {

/// Gamma(a, x) for |a| <= ~1e-3 and small real x > 0, where the continued
/// fraction converges too slowly. Uses the pole-cancelled split
///   Gamma(a,x) = [Gamma(a+1)-1]/a - expm1(a ln x)/a - x^a sum_{k>=1} (-x)^k/(k!(a+k)),
/// whose a -> 0 limit is the exponential-integral series.
inline ComplexScalar upper_gamma_small_a(ComplexScalar a, double x) {
    const double lnx = std::log(x);
    ComplexScalar term1, term2;
    if (a == ComplexScalar{0.0, 0.0}) {
        term1 = {-0.57721566490153286, 0.0};
        term2 = {lnx, 0.0};
    } else {
        term1 = (specfun::gamma(a + 1.0) - 1.0) / a;
        const ComplexScalar w = a * lnx;
        ComplexScalar em1;
        if (std::abs(w) > 0.3) {
            em1 = std::exp(w) - 1.0;
        } else {
            em1 = w * (1.0 + w / 2.0 * (1.0 + w / 3.0 * (1.0 + w / 4.0 * (1.0 + w / 5.0))));
        }
        term2 = em1 / a;
    }
    ComplexScalar series{0.0, 0.0};
    double tk = 1.0;  // (-x)^k / k!
    for (int k = 1; k < 200; ++k) {
        tk *= -x / k;
        const ComplexScalar inc = tk / (a + static_cast<double>(k));
        series += inc;
        if (std::abs(inc) < 1e-18 * (1.0 + std::abs(series)) && k > 3) break;
    }
    return term1 - term2 - cpow(x, a) * series;
}

inline void require_strip(ComplexScalar alpha, ComplexScalar beta, ComplexScalar s) {
    if (!(alpha.real() > 0.0) || !(beta.real() > 0.0))
        throw DomainError("tempered Mellin transforms require Re(alpha) > 0 and Re(beta) > 0");
    // Validity strip used by both closed forms: the generalized-gamma
    // integrand and the tail must converge absolutely for the decaying
    // corpus; outside the strip the formulas are not evaluated.
    if (s.real() < 1.0 - 1e-12 || !(alpha.real() + s.real() - 1.0 > 0.0))
        throw DomainError("tempered Mellin transforms require Re(s) >= 1 and Re(alpha+s-1) > 0");
}

/// sum_n  (-1)^n e^x Gamma(alpha+s-n-1, x) x^n / (Gamma(alpha - n) n!),  x > 0.
///
/// This is the binomial-expansion series of the generalized-gamma kernel.
/// (The expansion of (t-u)^{alpha-1} contributes (-u)^n; writing the series
/// with a bare u^n does not converge to the kernel.)
///
/// The scaled values G**_n = e^x Gamma(a0 - n, x) x^n obey
///   down:  G**_{n+1} = (x G**_n - P) / (a0 - n - 1),     P = x^{a0},
///   up:    G**_{n-1} = ((a0 - n) G**_n + P) / x,
/// each stable only on one side of n ~ x; the ladder is seeded at a pivot
/// from the continued fraction and run outward in the stable directions.
/// The tail decays like n^{-(1+Re alpha)} with constant sign, so the sum is
/// finished by algebraic tail extrapolation validated over doubling stages.
inline ComplexScalar incomplete_gamma_ladder_sum(ComplexScalar alpha, ComplexScalar s, double x,
                                                 const SeriesSpec& sspec) {
    const ComplexScalar a0 = alpha + s - 1.0;
    const ComplexScalar P = cpow(x, a0);

    // Pivot index: the recurrences are stable downward for n > x and upward
    // for n < x.
    const int pivot = x <= 2.0 ? 0 : static_cast<int>(std::ceil(x)) + 4;

    std::vector<ComplexScalar> head(pivot + 1);
    if (pivot == 0) {
        head[0] = specfun::upper_incomplete_gamma_scaled(a0, {x, 0.0});
    } else {
        head[pivot] =
            P * specfun::detail::upper_cf_factor(a0 - static_cast<double>(pivot), {x, 0.0});
        for (int n = pivot; n > 0; --n) {
            head[n - 1] = ((a0 - static_cast<double>(n)) * head[n] + P) / x;
        }
    }

    // coef_n = (-1)^n / (Gamma(alpha-n) n!);  ratio (n - alpha)/n
    ComplexScalar coef = specfun::reciprocal_gamma(alpha);
    ComplexScalar g_cur = head[0];
    ComplexScalar sum{0.0, 0.0};
    int plain_streak = 0;

    // Terms at power-of-two indices feed the tail fit.
    ComplexScalar pow2_terms[32] = {};
    int stage_end = 64;
    ComplexScalar term{0.0, 0.0};
    ComplexScalar prev_candidate{0.0, 0.0};
    bool have_candidate = false;
    const ComplexScalar q = 1.0 + alpha;  // known tail exponent: |T_n| ~ n^{-(1+Re alpha)}

    // Euler-Maclaurin closure of sum_{m > N} m^{-qq}.
    auto hurwitz_tail = [](ComplexScalar qq, double N) -> ComplexScalar {
        const double a = N + 1.0;
        const ComplexScalar apow = cpow(a, -qq);
        return apow * a / (qq - 1.0) + 0.5 * apow + qq * apow / (12.0 * a) -
               qq * (qq + 1.0) * (qq + 2.0) * apow / (720.0 * a * a * a);
    };

    for (int n = 0; n <= sspec.max_terms; ++n) {
        if (n > 0) {
            coef *= (static_cast<double>(n) - alpha) / static_cast<double>(n);
            // Integer alpha terminates the series exactly.
            if (coef == ComplexScalar{0.0, 0.0}) return sum;
            if (n <= pivot) {
                g_cur = head[n];
            } else {
                const ComplexScalar denom = a0 - static_cast<double>(n);
                // When a0 - n crosses (near) zero the downward step is 0/0;
                // reseed that rung directly (small-a series for small x,
                // continued fraction otherwise).
                if (std::abs(denom) < 1e-3) {
                    g_cur = x <= 5.0 ? std::exp(x) * upper_gamma_small_a(denom, x) *
                                           std::pow(x, static_cast<double>(n))
                                     : P * specfun::detail::upper_cf_factor(denom, {x, 0.0});
                } else {
                    g_cur = (x * g_cur - P) / denom;
                }
            }
        }
        term = coef * g_cur;
        sum += term;

        if (n > 0) {
            const double scale = std::abs(sum) + 1e-300;
            if (std::abs(term) <= sspec.tail_tol * scale) {
                if (++plain_streak >= 2) return sum;
            } else {
                plain_streak = 0;
            }
            if ((n & (n - 1)) == 0) {
                int lg = 0;
                while ((1 << lg) < n) ++lg;
                pow2_terms[lg] = term;
            }
        }

        if (n == stage_end) {
            // Tail closure: T_m = m^{-q} (c0 + c1/m + c2/m^2 + ...) with the
            // exponent known analytically. Fit c0..c2 at m = n/4, n/2, n and
            // close with Hurwitz-type sums; successive stages must agree.
            if (n >= 256 && n >= 4 * (pivot + 8)) {
                int lg = 0;
                while ((1 << lg) < n) ++lg;
                const ComplexScalar w1 = pow2_terms[lg - 2] * cpow(n / 4.0, q);
                const ComplexScalar w2 = pow2_terms[lg - 1] * cpow(n / 2.0, q);
                const ComplexScalar w3 = term * cpow(static_cast<double>(n), q);
                const ComplexScalar c0 = (w1 - 6.0 * w2 + 8.0 * w3) / 3.0;
                const ComplexScalar c1 = (-w1 + 5.0 * w2 - 4.0 * w3) / 2.0 * static_cast<double>(n);
                const ComplexScalar c2 =
                    (w1 - 3.0 * w2 + 2.0 * w3) / 6.0 * static_cast<double>(n) *
                    static_cast<double>(n);
                const ComplexScalar tail = c0 * hurwitz_tail(q, n) +
                                           c1 * hurwitz_tail(q + 1.0, n) +
                                           c2 * hurwitz_tail(q + 2.0, n);
                const ComplexScalar candidate = sum + tail;
                if (have_candidate &&
                    std::abs(candidate - prev_candidate) <=
                        sspec.tail_tol * (std::abs(candidate) + 1e-300)) {
                    return candidate;
                }
                prev_candidate = candidate;
                have_candidate = true;
            }
            stage_end *= 2;
        }
    }
    if (have_candidate) return prev_candidate;
    throw NonConvergentError("incomplete-gamma ladder sum exceeded max_terms");
}

}  // namespace detail

/// Transform of the tempered integral via the generalized-gamma kernel:
///   beta^{1-alpha-s}/Gamma(alpha) * integral of Gamma_{1-s}(alpha, beta u) f(u) du.
inline EvalReport mellin_tempered_kobayashi(const FunctionHandle& f, const FracParams& p,
                                            MellinPoint sp, double decay_hint,
                                            const QuadratureSpec& spec = {}) {
    const ComplexScalar s = sp.s;
    detail::require_strip(p.alpha, p.beta, s);
    if (!(decay_hint > 0.0)) throw DomainError("decay hint must be positive");

    const ComplexScalar one_minus_s = 1.0 - s;
    auto kernel = [&](double u) {
        return specfun::kobayashi_gamma(one_minus_s, p.alpha, p.beta * u, spec) * f(u);
    };

    EvalReport head = quad::detail::weighted_core(kernel, 1.0, 0.0, spec, false);
    auto tail_fn = [&](double x) { return kernel(1.0 + x); };
    EvalReport tail =
        quad::integrate_semi_infinite(FunctionHandle(tail_fn), 0.9 * decay_hint, spec);

    const ComplexScalar norm =
        cpow(p.beta, 1.0 - p.alpha - s) * specfun::reciprocal_gamma(p.alpha);
    EvalReport out;
    out.value = norm * (head.value + tail.value);
    out.err_estimate = std::abs(norm) * (head.err_estimate + tail.err_estimate);
    out.effort = head.effort + tail.effort;
    out.converged = head.converged && tail.converged;
    return out;
}

/// Transform of the tempered integral via the incomplete-gamma series:
///   beta^{1-alpha-s} * integral of f(u) e^{beta u}
///       sum_n Gamma(alpha+s-n-1, beta u)/Gamma(alpha-n) (beta u)^n/n! du.
/// The e^{beta u} growth is cancelled analytically: every incomplete gamma
/// is evaluated in its e^{x}-scaled form, so the integrand decays like f
/// itself and no exponential ever appears.
inline EvalReport mellin_tempered_incgamma(const FunctionHandle& f, const FracParams& p,
                                           MellinPoint sp, double decay_hint,
                                           const SeriesSpec& sspec = {6000, 1e-9},
                                           const QuadratureSpec& qspec = {}) {
    const ComplexScalar s = sp.s;
    detail::require_strip(p.alpha, p.beta, s);
    if (!(decay_hint > 0.0)) throw DomainError("decay hint must be positive");
    if (std::abs(p.beta.imag()) > 1e-14)
        throw DomainError("the incomplete-gamma route is implemented for real beta > 0");
    sspec.validate();
    const double beta = p.beta.real();

    auto integrand = [&](double u) {
        return f(u) * detail::incomplete_gamma_ladder_sum(p.alpha, s, beta * u, sspec);
    };

    EvalReport head = quad::detail::weighted_core(integrand, 1.0, 0.0, qspec, false);
    auto tail_fn = [&](double x) { return integrand(1.0 + x); };
    EvalReport tail =
        quad::integrate_semi_infinite(FunctionHandle(tail_fn), 0.9 * decay_hint, qspec);

    const ComplexScalar norm = cpow(p.beta, 1.0 - p.alpha - s);
    EvalReport out;
    out.value = norm * (head.value + tail.value);
    out.err_estimate = std::abs(norm) * (head.err_estimate + tail.err_estimate);
    out.effort = head.effort + tail.effort;
    out.converged = head.converged && tail.converged;
    return out;
}

/// Third route for cross-validation: the direct transform of the pointwise
/// operator map t -> I^{(alpha,beta)} f (t).
inline EvalReport mellin_of_operator(const FunctionHandle& f, const FracParams& p,
                                     MellinPoint sp, double decay_hint,
                                     const QuadratureSpec& spec = {}) {
    const ComplexScalar s = sp.s;
    detail::require_strip(p.alpha, p.beta, s);
    // The operator map decays like min(decay of f, Re beta).
    const double map_decay = 0.9 * std::min(decay_hint, p.beta.real());
    FunctionHandle map(
        [&, p](double t) {
            if (t <= 0.0) return ComplexScalar{0.0, 0.0};
            return ops::tempered_integral(f, p, 0.0, t, spec).value;
        },
        Interval(0.0, std::numeric_limits<double>::max()), Regularity::continuous(0),
        p.alpha.real());
    return mellin_numeric(map, sp, map_decay, spec);
}

}  // namespace tfc::mellin
