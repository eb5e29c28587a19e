#pragma once

#include <array>
#include <cmath>
#include <vector>

#include "tfc/quadrature.hpp"
#include "tfc/types.hpp"

namespace tfc::specfun {

namespace detail {

// Lanczos approximation, g = 607/128, 15 terms (Godfrey coefficients).
inline constexpr double kLanczosG = 607.0 / 128.0;
inline constexpr std::array<double, 15> kLanczos = {
    0.99999999999999709182,     57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,   0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4, 0.15808870322491248884e-3,
    -0.21026444172410488319e-3, 0.21743961811521264320e-3, -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4, 0.36899182659531622704e-5,
};

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kLogSqrt2Pi = 0.91893853320467274178032973640562;

inline ComplexScalar lanczos_sum(ComplexScalar z) {
    ComplexScalar acc{kLanczos[0], 0.0};
    for (std::size_t k = 1; k < kLanczos.size(); ++k) {
        acc += kLanczos[k] / (z + static_cast<double>(k - 1));
    }
    return acc;
}

}  // namespace detail

/// Complete gamma function for complex argument; reflection is used for
/// Re(z) < 0.5. Relative accuracy ~1e-14 for moderate |z|.
inline ComplexScalar gamma(ComplexScalar z) {
    if (is_nonpositive_integer(z)) throw PoleError("gamma pole at non-positive integer");
    if (z.real() < 0.5) {
        // Gamma(z) Gamma(1-z) = pi / sin(pi z)
        return detail::kPi / (std::sin(detail::kPi * z) * gamma(1.0 - z));
    }
    const ComplexScalar a = detail::lanczos_sum(z);
    const ComplexScalar t = z + (detail::kLanczosG - 0.5);
    return std::sqrt(2.0 * detail::kPi) * std::pow(t, z - 0.5) * std::exp(-t) * a;
}

/// log Gamma(z), principal branch composition. Intended for use inside
/// exp() of term assemblies; the imaginary part may differ from the
/// continuous log-gamma by multiples of 2*pi.
inline ComplexScalar log_gamma(ComplexScalar z) {
    if (is_nonpositive_integer(z)) throw PoleError("log_gamma pole at non-positive integer");
    if (z.real() < 0.5) {
        return std::log(detail::kPi) - std::log(std::sin(detail::kPi * z)) -
               log_gamma(1.0 - z);
    }
    const ComplexScalar a = detail::lanczos_sum(z);
    const ComplexScalar t = z + (detail::kLanczosG - 0.5);
    return detail::kLogSqrt2Pi + (z - 0.5) * std::log(t) - t + std::log(a);
}

/// 1/Gamma(z); zero at the poles.
inline ComplexScalar reciprocal_gamma(ComplexScalar z) {
    if (is_nonpositive_integer(z)) return {0.0, 0.0};
    if (z.real() > 150.0) return std::exp(-log_gamma(z));
    return 1.0 / gamma(z);
}

/// Ratio Gamma(x)/Gamma(y) through log-gamma (safe for large arguments).
inline ComplexScalar gamma_ratio(ComplexScalar x, ComplexScalar y) {
    return std::exp(log_gamma(x) - log_gamma(y));
}

namespace detail {

/// Lower incomplete gamma by its power series:
///   lower(a, x) = x^a e^{-x} sum_n x^n / (a (a+1) ... (a+n)).
inline ComplexScalar lower_series(ComplexScalar a, ComplexScalar x) {
    ComplexScalar term = 1.0 / a;
    ComplexScalar sum = term;
    for (int n = 1; n < 20000; ++n) {
        term *= x / (a + static_cast<double>(n));
        sum += term;
        if (std::abs(term) <= 1e-17 * std::abs(sum) && n > 4) {
            return cpow(x, a) * std::exp(-x) * sum;
        }
    }
    throw NonConvergentError("lower incomplete gamma series did not converge");
}

/// Legendre continued fraction factor of the upper incomplete gamma:
///   Gamma(a, x) = e^{-x} x^a * cf(a, x),
/// evaluated by the modified Lentz algorithm. Valid for Re(x) > 0, any a
/// (including non-positive integers). Returned unscaled so callers can fold
/// the x^a power into their own normalisation.
inline ComplexScalar upper_cf_factor(ComplexScalar a, ComplexScalar x) {
    const double tiny = 1e-300;
    ComplexScalar b = x + 1.0 - a;
    ComplexScalar c = 1.0 / tiny;
    ComplexScalar d = 1.0 / b;
    ComplexScalar f = d;
    for (int k = 1; k < 20000; ++k) {
        const ComplexScalar ak = -static_cast<double>(k) * (static_cast<double>(k) - a);
        b += 2.0;
        d = ak * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + ak / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const ComplexScalar delta = d * c;
        f *= delta;
        if (std::abs(delta - 1.0) < 1e-16) return f;
    }
    throw NonConvergentError("upper incomplete gamma continued fraction stalled");
}

/// e^x Gamma(a, x) = x^a * cf(a, x).
inline ComplexScalar upper_cf_scaled(ComplexScalar a, ComplexScalar x) {
    return cpow(x, a) * upper_cf_factor(a, x);
}

}  // namespace detail

inline ComplexScalar upper_incomplete_gamma(ComplexScalar a, ComplexScalar x);

/// lower(a, x) for Re(a) > 0, Re(x) >= 0. Power series for small |x|,
/// complement otherwise.
inline ComplexScalar lower_incomplete_gamma(ComplexScalar a, ComplexScalar x) {
    if (!(a.real() > 0.0)) throw DomainError("lower incomplete gamma requires Re(a) > 0");
    if (x.real() < 0.0) throw DomainError("lower incomplete gamma requires Re(x) >= 0");
    if (x == ComplexScalar(0.0, 0.0)) return {0.0, 0.0};
    if (std::abs(x) <= std::abs(a) + 1.0) return detail::lower_series(a, x);
    return gamma(a) - upper_incomplete_gamma(a, x);
}

/// Gamma(a, x) for Re(x) > 0 (a unrestricted). Continued fraction for large
/// |x| and for a at the gamma poles; complement otherwise.
inline ComplexScalar upper_incomplete_gamma(ComplexScalar a, ComplexScalar x) {
    if (!(x.real() > 0.0)) throw DomainError("upper incomplete gamma requires Re(x) > 0");
    if (is_nonpositive_integer(a) || std::abs(x) > std::abs(a) + 1.0) {
        return std::exp(-x) * detail::upper_cf_scaled(a, x);
    }
    return gamma(a) - detail::lower_series(a, x);
}

/// e^x Gamma(a, x); avoids the e^{-x} underflow for large Re(x).
inline ComplexScalar upper_incomplete_gamma_scaled(ComplexScalar a, ComplexScalar x) {
    if (!(x.real() > 0.0)) throw DomainError("upper incomplete gamma requires Re(x) > 0");
    if (is_nonpositive_integer(a) || std::abs(x) > std::abs(a) + 1.0) {
        return detail::upper_cf_scaled(a, x);
    }
    return std::exp(x) * (gamma(a) - detail::lower_series(a, x));
}

namespace detail {

/// Term generators shared between the series summers and their tests.
struct Hyp1f1Terms {
    ComplexScalar a, c, term{1.0, 0.0};
    int m = 0;
    ComplexScalar z;
    ComplexScalar ratio() const { return (a + static_cast<double>(m)) / (c + static_cast<double>(m)) * z / (m + 1.0); }
    void advance() {
        term *= ratio();
        ++m;
    }
};

struct Hyp2f1Terms {
    ComplexScalar a, b, c, term{1.0, 0.0};
    int m = 0;
    ComplexScalar z;
    ComplexScalar ratio() const {
        return (a + static_cast<double>(m)) * (b + static_cast<double>(m)) /
               ((c + static_cast<double>(m)) * (m + 1.0)) * z;
    }
    void advance() {
        term *= ratio();
        ++m;
    }
};

template <class Terms>
ComplexScalar sum_with_two_term_rule(Terms terms, const SeriesSpec& spec, const char* name) {
    ComplexScalar sum = terms.term;
    int small_streak = 0;
    for (int m = 1; m <= spec.max_terms; ++m) {
        terms.advance();
        sum += terms.term;
        if (std::abs(terms.term) <= spec.tail_tol * std::abs(sum)) {
            if (++small_streak >= 2) return sum;
        } else {
            small_streak = 0;
        }
    }
    throw NonConvergentError(std::string(name) + ": series exceeded max_terms");
}

}  // namespace detail

/// Kummer confluent hypergeometric 1F1(a; c; z). For Re(z) < 0 the Kummer
/// transformation 1F1(a;c;z) = e^z 1F1(c-a;c;-z) keeps the series terms
/// single-signed.
inline ComplexScalar hyp1f1(ComplexScalar a, ComplexScalar c, ComplexScalar z,
                            const SeriesSpec& spec = {}) {
    spec.validate();
    if (is_nonpositive_integer(c)) throw PoleError("hyp1f1 pole: c is a non-positive integer");
    if (z == ComplexScalar(0.0, 0.0)) return {1.0, 0.0};
    if (z.real() < 0.0 && !is_nonpositive_integer(a)) {
        detail::Hyp1f1Terms t{c - a, c, {1.0, 0.0}, 0, -z};
        return std::exp(z) * detail::sum_with_two_term_rule(t, spec, "hyp1f1");
    }
    detail::Hyp1f1Terms t{a, c, {1.0, 0.0}, 0, z};
    return detail::sum_with_two_term_rule(t, spec, "hyp1f1");
}

/// Gauss hypergeometric 2F1(a, b; c; z) inside the unit disc. No analytic
/// continuation is attempted for |z| >= 1.
inline ComplexScalar hyp2f1(ComplexScalar a, ComplexScalar b, ComplexScalar c,
                            ComplexScalar z, const SeriesSpec& spec = {}) {
    spec.validate();
    if (std::abs(z) >= 1.0) throw DomainError("hyp2f1 requires |z| < 1");
    if (is_nonpositive_integer(c)) throw PoleError("hyp2f1 pole: c is a non-positive integer");
    if (z == ComplexScalar(0.0, 0.0)) return {1.0, 0.0};
    detail::Hyp2f1Terms t{a, b, c, {1.0, 0.0}, 0, z};
    return detail::sum_with_two_term_rule(t, spec, "hyp2f1");
}

/// First Appell function F1(a; b1, b2; c; x, y), |x| < 1, |y| < 1, summed by
/// anti-diagonals: the (a)_{m+n}/(c)_{m+n} coupling is constant on each
/// anti-diagonal, so the stopping rule acts on whole diagonals.
inline ComplexScalar appell_f1(ComplexScalar a, ComplexScalar b1, ComplexScalar b2,
                               ComplexScalar c, ComplexScalar x, ComplexScalar y,
                               const SeriesSpec& spec = {}) {
    spec.validate();
    if (std::abs(x) >= 1.0 || std::abs(y) >= 1.0)
        throw DomainError("appell_f1 requires |x| < 1 and |y| < 1");
    if (is_nonpositive_integer(c)) throw PoleError("appell_f1 pole: c is a non-positive integer");

    std::vector<ComplexScalar> u{{1.0, 0.0}};  // (b1)_j x^j / j!
    std::vector<ComplexScalar> v{{1.0, 0.0}};  // (b2)_j y^j / j!
    ComplexScalar poch_ratio{1.0, 0.0};        // (a)_d / (c)_d
    ComplexScalar sum{0.0, 0.0};
    int small_streak = 0;

    for (int d = 0; d <= spec.max_terms; ++d) {
        if (d > 0) {
            u.push_back(u.back() * (b1 + static_cast<double>(d - 1)) * x / static_cast<double>(d));
            v.push_back(v.back() * (b2 + static_cast<double>(d - 1)) * y / static_cast<double>(d));
            poch_ratio *= (a + static_cast<double>(d - 1)) / (c + static_cast<double>(d - 1));
        }
        ComplexScalar row{0.0, 0.0};
        for (int j = 0; j <= d; ++j) row += u[j] * v[d - j];
        const ComplexScalar diag = poch_ratio * row;
        sum += diag;
        if (d > 0 && std::abs(diag) <= spec.tail_tol * std::abs(sum)) {
            if (++small_streak >= 2) return sum;
        } else {
            small_streak = 0;
        }
    }
    throw NonConvergentError("appell_f1: anti-diagonal series exceeded max_terms");
}

/// Three-parameter Mittag-Leffler function
///   E^{gammap}_{mu, nu}(z) = sum_k Gamma(gammap + k) z^k /
///                            (k! Gamma(gammap) Gamma(mu k + nu)),
/// Re(mu) > 0, Re(nu) > 0. Terms are assembled in log space so large k and
/// large gamma arguments cannot overflow.
inline ComplexScalar mittag_leffler3(ComplexScalar mu, ComplexScalar nu, ComplexScalar gammap,
                                     ComplexScalar z, const SeriesSpec& spec = {}) {
    spec.validate();
    if (!(mu.real() > 0.0) || !(nu.real() > 0.0))
        throw DomainError("mittag_leffler3 requires Re(mu) > 0 and Re(nu) > 0");
    if (z == ComplexScalar(0.0, 0.0)) return reciprocal_gamma(nu);

    const bool gammap_poly = is_nonpositive_integer(gammap);
    const ComplexScalar logz = std::log(z);
    ComplexScalar sum{0.0, 0.0};
    int small_streak = 0;
    // (gammap)_k, tracked directly; it terminates when gammap is a
    // non-positive integer and is otherwise folded into log space.
    ComplexScalar poch{1.0, 0.0};
    for (int k = 0; k <= spec.max_terms; ++k) {
        if (k > 0) poch *= gammap + static_cast<double>(k - 1);
        ComplexScalar term;
        if (gammap_poly) {
            if (poch == ComplexScalar(0.0, 0.0)) break;
            term = poch * std::exp(static_cast<double>(k) * logz - log_gamma({static_cast<double>(k) + 1.0, 0.0})) *
                   reciprocal_gamma(mu * static_cast<double>(k) + nu);
        } else {
            const ComplexScalar arg = mu * static_cast<double>(k) + nu;
            if (is_nonpositive_integer(arg)) {
                term = {0.0, 0.0};
            } else {
                term = std::exp(log_gamma(gammap + static_cast<double>(k)) - log_gamma(gammap) +
                                static_cast<double>(k) * logz -
                                log_gamma({static_cast<double>(k) + 1.0, 0.0}) - log_gamma(arg));
            }
        }
        sum += term;
        if (k > 0 && std::abs(term) <= spec.tail_tol * std::abs(sum)) {
            if (++small_streak >= 2) return sum;
        } else {
            small_streak = 0;
        }
    }
    if (gammap_poly) return sum;
    throw NonConvergentError("mittag_leffler3: series exceeded max_terms");
}

/// Generalized gamma integral over [0, inf) of t^{u-1} e^{-t} (t + v)^{-m},
/// Re(u) > 0, Re(v) >= 0; if v = 0 then additionally Re(u - m) > 0.
/// Computed by weighted quadrature near 0 plus a semi-infinite tail.
inline ComplexScalar kobayashi_gamma(ComplexScalar m, ComplexScalar u, ComplexScalar v,
                                     const QuadratureSpec& spec = {}) {
    if (!(u.real() > 0.0)) throw DomainError("kobayashi_gamma requires Re(u) > 0");
    if (v.real() < 0.0) throw DomainError("kobayashi_gamma requires Re(v) >= 0");

    ComplexScalar u_eff = u;
    ComplexScalar m_eff = m;
    if (v == ComplexScalar(0.0, 0.0)) {
        if (!(u.real() - m.real() > 0.0))
            throw DomainError("kobayashi_gamma at v = 0 requires Re(u - m) > 0");
        u_eff = u - m;  // (t + 0)^{-m} merges into the power weight
        m_eff = {0.0, 0.0};
    }

    const double split = std::max(1.0, std::abs(v));
    const double sigma = u_eff.real() - 1.0;
    const ComplexScalar iphase{0.0, u_eff.imag()};
    const bool osc = u_eff.imag() != 0.0;

    auto pole_part = [&](double t) -> ComplexScalar {
        ComplexScalar val = std::exp(-t) * cpow(t, iphase);
        if (m_eff != ComplexScalar(0.0, 0.0)) val *= cpow(ComplexScalar(t, 0.0) + v, -m_eff);
        return val;
    };
    EvalReport head = quad::detail::weighted_core(pole_part, split, sigma, spec, osc);

    auto tail_fn = [&](double x) -> ComplexScalar {
        const double t = split + x;
        ComplexScalar val = cpow(t, u_eff - 1.0) * std::exp(-t);
        if (m_eff != ComplexScalar(0.0, 0.0)) val *= cpow(ComplexScalar(t, 0.0) + v, -m_eff);
        return val;
    };
    EvalReport tail = quad::integrate_semi_infinite(FunctionHandle(tail_fn), 0.5, spec);

    return head.value + tail.value;
}

}  // namespace tfc::specfun
