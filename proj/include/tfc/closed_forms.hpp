#pragma once

#include <cmath>

#include "tfc/specfun.hpp"
#include "tfc/types.hpp"

namespace tfc::closed {

/// Parameters of the Mittag-Leffler kernel (t-a)^{nu-1} E^{gammap}_{mu,nu}(omega (t-a)^mu).
struct MlKernelParams {
    ComplexScalar mu{1.0, 0.0};
    ComplexScalar nu{1.0, 0.0};
    ComplexScalar gammap{1.0, 0.0};
    ComplexScalar omega{0.0, 0.0};

    void validate() const {
        if (!(mu.real() > 0.0) || !(nu.real() > 0.0))
            throw DomainError("ML kernel requires Re(mu) > 0 and Re(nu) > 0");
    }
};

/// Parameters of the two-factor kernel t^{mu-1} (1 - acoef t)^{-lambda} (1 - bcoef t)^{-exponent2}.
/// The second exponent gets its own name; it is unrelated to the tempering rate.
struct AppellKernelParams {
    ComplexScalar mu{1.0, 0.0};
    ComplexScalar lambda{0.0, 0.0};
    ComplexScalar exponent2{0.0, 0.0};
    ComplexScalar acoef{0.0, 0.0};
    ComplexScalar bcoef{0.0, 0.0};

    void validate() const {
        if (!(mu.real() > 0.0)) throw DomainError("Appell kernel requires Re(mu) > 0");
    }
};

/// Tempered integral of the power kernel (u-a)^lambda, Re(lambda) > -1:
///   (t-a)^{lambda+alpha} Gamma(lambda+1)/Gamma(lambda+alpha+1)
///       1F1(alpha; lambda+alpha+1; -beta(t-a)).
inline ComplexScalar power_integral_closed(ComplexScalar lambda, const FracParams& p, double a,
                                           double t, const SeriesSpec& sspec = {}) {
    if (!(lambda.real() > -1.0)) throw DomainError("power kernel requires Re(lambda) > -1");
    p.require_integral_order();
    if (!(t > a)) throw DomainError("power_integral_closed requires t > a");
    const double dt = t - a;
    return cpow(dt, lambda + p.alpha) *
           specfun::gamma_ratio(lambda + 1.0, lambda + p.alpha + 1.0) *
           specfun::hyp1f1(p.alpha, lambda + p.alpha + 1.0, -p.beta * dt, sspec);
}

/// Tempered derivative of the power kernel:
///   (t-a)^{lambda-alpha} Gamma(lambda+1)/Gamma(lambda-alpha+1)
///       1F1(-alpha; lambda-alpha+1; -beta(t-a)).
inline ComplexScalar power_derivative_closed(ComplexScalar lambda, const FracParams& p, double a,
                                             double t, const SeriesSpec& sspec = {}) {
    if (!(lambda.real() > -1.0)) throw DomainError("power kernel requires Re(lambda) > -1");
    p.require_derivative_order();
    if (!(t > a)) throw DomainError("power_derivative_closed requires t > a");
    if (is_nonpositive_integer(lambda - p.alpha + 1.0))
        throw PoleError("power_derivative_closed: lambda - alpha + 1 at a gamma pole");
    if (p.alpha == ComplexScalar{0.0, 0.0}) return cpow(t - a, lambda);
    const double dt = t - a;
    return cpow(dt, lambda - p.alpha) *
           specfun::gamma_ratio(lambda + 1.0, lambda - p.alpha + 1.0) *
           specfun::hyp1f1(-p.alpha, lambda - p.alpha + 1.0, -p.beta * dt, sspec);
}

namespace detail {

/// Shared outer series of the Gauss/Appell closed forms:
///   t^{mu+alpha-1} Gamma(mu)/Gamma(mu+alpha)
///     sum_m [Gamma(alpha+m) Gamma(mu+alpha) / (Gamma(alpha) Gamma(mu+alpha+m))]
///           (-beta t)^m / m!  *  inner(m),
/// with the bracket tracked by its term recurrence.
template <class Inner>
ComplexScalar twisted_series(ComplexScalar mu, ComplexScalar alpha, ComplexScalar beta, double t,
                             const SeriesSpec& sspec, const Inner& inner) {
    const ComplexScalar prefactor =
        cpow(t, mu + alpha - 1.0) * specfun::gamma_ratio(mu, mu + alpha);
    ComplexScalar bracket{1.0, 0.0};
    ComplexScalar sum{0.0, 0.0};
    int small_streak = 0;
    for (int m = 0; m <= sspec.max_terms; ++m) {
        if (m > 0) {
            bracket *= (alpha + static_cast<double>(m - 1)) /
                       (mu + alpha + static_cast<double>(m - 1)) * (-beta * t) /
                       static_cast<double>(m);
        }
        const ComplexScalar term = bracket * inner(m);
        sum += term;
        if (m > 0 && std::abs(term) <= sspec.tail_tol * std::abs(sum)) {
            if (++small_streak >= 2) return prefactor * sum;
        } else {
            small_streak = 0;
        }
    }
    throw NonConvergentError("twisted closed-form series exceeded max_terms");
}

}  // namespace detail

/// Closed form for the tempered integral of t^{mu-1}(1-t)^{-lambda} on (0, 1),
/// a twisted convolution of 1F1 with the Gauss hypergeometric series.
/// `alpha_override` admits the derivative variant (alpha replaced by -alpha).
inline ComplexScalar beta_kernel_closed_at(ComplexScalar mu, ComplexScalar lambda,
                                           ComplexScalar alpha, ComplexScalar beta, double t,
                                           const SeriesSpec& sspec = {}) {
    if (!(mu.real() > 0.0)) throw DomainError("beta kernel requires Re(mu) > 0");
    if (!(t > 0.0 && t < 1.0)) throw DomainError("beta kernel closed form requires 0 < t < 1");
    SeriesSpec inner_spec = sspec;
    return detail::twisted_series(mu, alpha, beta, t, sspec, [&](int m) {
        return specfun::hyp2f1(mu, lambda, mu + alpha + static_cast<double>(m), {t, 0.0},
                               inner_spec);
    });
}

inline ComplexScalar beta_kernel_closed(ComplexScalar mu, ComplexScalar lambda,
                                        const FracParams& p, double t,
                                        const SeriesSpec& sspec = {}) {
    p.require_integral_order();
    return beta_kernel_closed_at(mu, lambda, p.alpha, p.beta, t, sspec);
}

/// Derivative counterpart of beta_kernel_closed: same series with alpha
/// replaced by -alpha.
inline ComplexScalar beta_kernel_derivative_closed(ComplexScalar mu, ComplexScalar lambda,
                                                   const FracParams& p, double t,
                                                   const SeriesSpec& sspec = {}) {
    p.require_derivative_order();
    return beta_kernel_closed_at(mu, lambda, -p.alpha, p.beta, t, sspec);
}

/// Closed form for the tempered integral of
/// t^{mu-1}(1-acoef t)^{-lambda}(1-bcoef t)^{-exponent2}: a twisted
/// convolution of 1F1 with the first Appell function.
inline ComplexScalar appell_kernel_closed(const AppellKernelParams& k, const FracParams& p,
                                          double t, const SeriesSpec& sspec = {}) {
    k.validate();
    p.require_integral_order();
    if (!(t > 0.0)) throw DomainError("appell kernel closed form requires t > 0");
    if (std::abs(k.acoef) * t >= 1.0 || std::abs(k.bcoef) * t >= 1.0)
        throw DomainError("appell kernel closed form requires |acoef t| < 1 and |bcoef t| < 1");
    SeriesSpec inner_spec = sspec;
    return detail::twisted_series(k.mu, p.alpha, p.beta, t, sspec, [&](int m) {
        return specfun::appell_f1(k.mu, k.lambda, k.exponent2,
                                  k.mu + p.alpha + static_cast<double>(m), k.acoef * t,
                                  k.bcoef * t, inner_spec);
    });
}

/// Tempered integral of the Mittag-Leffler kernel, m-form: a series over the
/// tempering index whose terms are Mittag-Leffler functions with shifted
/// second parameter nu + alpha + m.
inline ComplexScalar ml_kernel_closed_mform(const MlKernelParams& k, const FracParams& p,
                                            double a, double t, const SeriesSpec& sspec = {}) {
    k.validate();
    p.require_integral_order();
    if (!(t > a)) throw DomainError("ml kernel closed form requires t > a");
    const double dt = t - a;
    const ComplexScalar z = k.omega * cpow(dt, k.mu);

    ComplexScalar coef{1.0, 0.0};  // (-beta)^m Gamma(alpha+m) / (m! Gamma(alpha))
    ComplexScalar sum{0.0, 0.0};
    int small_streak = 0;
    for (int m = 0; m <= sspec.max_terms; ++m) {
        if (m > 0) coef *= -p.beta * (p.alpha + static_cast<double>(m - 1)) / static_cast<double>(m);
        const ComplexScalar nu_m = k.nu + p.alpha + static_cast<double>(m);
        const ComplexScalar term =
            coef * cpow(dt, nu_m - 1.0) * specfun::mittag_leffler3(k.mu, nu_m, k.gammap, z, sspec);
        sum += term;
        if (m > 0 && std::abs(term) <= sspec.tail_tol * std::abs(sum)) {
            if (++small_streak >= 2) return sum;
        } else {
            small_streak = 0;
        }
    }
    throw NonConvergentError("ml_kernel_closed_mform exceeded max_terms");
}

/// Same quantity, k-form: series over the Mittag-Leffler index whose terms
/// carry 1F1(alpha; mu k + nu + alpha; -beta (t-a)) factors.
inline ComplexScalar ml_kernel_closed_kform(const MlKernelParams& k, const FracParams& p,
                                            double a, double t, const SeriesSpec& sspec = {}) {
    k.validate();
    p.require_integral_order();
    if (!(t > a)) throw DomainError("ml kernel closed form requires t > a");
    const double dt = t - a;

    ComplexScalar sum{0.0, 0.0};
    int small_streak = 0;
    for (int kk = 0; kk <= sspec.max_terms; ++kk) {
        const ComplexScalar order = k.mu * static_cast<double>(kk) + k.nu + p.alpha;
        // Gamma(gammap+k) omega^k / (k! Gamma(gammap) Gamma(mu k + nu + alpha))
        ComplexScalar coef;
        if (kk == 0) {
            coef = specfun::reciprocal_gamma(order);
        } else {
            coef = std::exp(specfun::log_gamma(k.gammap + static_cast<double>(kk)) -
                            specfun::log_gamma(k.gammap) +
                            static_cast<double>(kk) * std::log(k.omega) -
                            specfun::log_gamma({static_cast<double>(kk) + 1.0, 0.0})) *
                   specfun::reciprocal_gamma(order);
        }
        const ComplexScalar term =
            coef * cpow(dt, order - 1.0) * specfun::hyp1f1(p.alpha, order, -p.beta * dt, sspec);
        sum += term;
        if (kk > 0 && std::abs(term) <= sspec.tail_tol * std::abs(sum)) {
            if (++small_streak >= 2) return sum;
        } else {
            small_streak = 0;
        }
        if (k.omega == ComplexScalar{0.0, 0.0}) return sum;  // single k = 0 term
    }
    throw NonConvergentError("ml_kernel_closed_kform exceeded max_terms");
}

/// Symmetric relative gap between the two series forms; the rearrangement
/// identity says this residual vanishes when all real parts are positive.
inline double ml_identity_residual(const MlKernelParams& k, const FracParams& p, double a,
                                   double t, const SeriesSpec& sspec = {}) {
    k.validate();
    if (!(p.alpha.real() > 0.0) || !(p.beta.real() > 0.0))
        throw DomainError("ml identity requires Re(alpha) > 0 and Re(beta) > 0");
    const ComplexScalar mform = ml_kernel_closed_mform(k, p, a, t, sspec);
    const ComplexScalar kform = ml_kernel_closed_kform(k, p, a, t, sspec);
    return std::abs(mform - kform) / (std::abs(mform) + std::abs(kform) + 1e-300);
}

}  // namespace tfc::closed
