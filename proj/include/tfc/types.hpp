#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <utility>

#include "tfc/errors.hpp"

namespace tfc {

using ComplexScalar = std::complex<double>;

inline bool is_finite(ComplexScalar z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// x^w for real x > 0 and complex w, principal branch.
inline ComplexScalar cpow(double x, ComplexScalar w) {
    if (w == ComplexScalar(0.0, 0.0)) return {1.0, 0.0};
    return std::exp(w * std::log(x));
}

inline ComplexScalar cpow(ComplexScalar z, ComplexScalar w) {
    if (w == ComplexScalar(0.0, 0.0)) return {1.0, 0.0};
    if (z == ComplexScalar(0.0, 0.0)) return {0.0, 0.0};
    return std::exp(w * std::log(z));
}

/// True when z sits on the non-positive real integers (gamma poles).
inline bool is_nonpositive_integer(ComplexScalar z, double tol = 1e-12) {
    if (std::abs(z.imag()) > tol) return false;
    double r = z.real();
    if (r > 0.5) return false;
    return std::abs(r - std::round(r)) <= tol;
}

struct Interval {
    double a = 0.0;
    double b = 1.0;

    Interval() = default;
    Interval(double a_, double b_) : a(a_), b(b_) {
        if (!(a < b)) throw DomainError("Interval requires a < b");
    }

    double length() const { return b - a; }
    bool contains(double t) const { return t >= a && t <= b; }
};

/// Declared smoothness of a function handle. `integrable` admits endpoint
/// singularities, `continuous(k)` means C^k, `smooth` means C^inf.
struct Regularity {
    enum class Kind { integrable, continuous_n, smooth };

    Kind kind = Kind::smooth;
    int order = 0;

    static Regularity integrable() { return {Kind::integrable, 0}; }
    static Regularity continuous(int k) { return {Kind::continuous_n, k}; }
    static Regularity smooth() { return {Kind::smooth, 0}; }

    bool at_least_continuous(int k) const {
        if (kind == Kind::smooth) return true;
        if (kind == Kind::continuous_n) return order >= k;
        return false;
    }
};

/// A real-argument, complex-valued function together with its domain and
/// declared regularity. The regularity claim describes the interior of the
/// domain; behaviour at the left endpoint is declared separately through
/// `left_exponent`: f(u) = (u - domain.a)^left_exponent * (bounded near a).
/// It is 0 for ordinary functions and lets the quadrature engine grade
/// panels when operator compositions produce singular integrands.
/// Evaluators must be re-entrant; handles are freely shareable across
/// threads.
struct FunctionHandle {
    std::function<ComplexScalar(double)> evaluator;
    Interval domain{std::numeric_limits<double>::lowest(), std::numeric_limits<double>::max()};
    Regularity regularity = Regularity::smooth();
    double left_exponent = 0.0;

    FunctionHandle() = default;

    template <class F,
              class = std::enable_if_t<std::is_invocable_v<F, double> &&
                                       !std::is_same_v<std::decay_t<F>, FunctionHandle>>>
    FunctionHandle(F f)  // NOLINT: implicit on purpose, lambdas are handles
        : evaluator([f = std::move(f)](double t) { return ComplexScalar(f(t)); }) {}

    template <class F>
    FunctionHandle(F f, Interval dom, Regularity reg = Regularity::smooth(),
                   double left_exp = 0.0)
        : evaluator([f = std::move(f)](double t) { return ComplexScalar(f(t)); }),
          domain(dom),
          regularity(reg),
          left_exponent(left_exp) {}

    ComplexScalar operator()(double t) const { return evaluator(t); }
};

/// Effort/tolerance budget for the quadrature engines.
struct QuadratureSpec {
    int nodes_per_panel = 32;
    int max_panels = 1024;
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    double semi_infinite_cutoff_growth = 2.0;

    void validate() const {
        const double floor_tol = 100.0 * std::numeric_limits<double>::epsilon();
        if (nodes_per_panel <= 0) throw DomainError("nodes_per_panel must be positive");
        if (max_panels <= 0) throw DomainError("max_panels must be positive");
        if (!(rel_tol >= floor_tol) || !(abs_tol >= floor_tol))
            throw DomainError("tolerances must be >= 100 * machine epsilon");
        if (!(semi_infinite_cutoff_growth > 1.0))
            throw DomainError("semi_infinite_cutoff_growth must exceed 1");
    }
};

/// Truncation budget for series summation.
struct SeriesSpec {
    int max_terms = 500;
    double tail_tol = 1e-12;

    void validate() const {
        if (max_terms < 16) throw DomainError("max_terms must be at least 16");
        if (!(tail_tol > 0.0)) throw DomainError("tail_tol must be positive");
    }
};

/// A computed value plus an error estimate and effort counters.
/// converged == true guarantees err_estimate <= max(abs_tol, rel_tol*|value|).
struct EvalReport {
    ComplexScalar value{0.0, 0.0};
    double err_estimate = 0.0;
    long long effort = 0;
    bool converged = true;
};

/// Order pair (alpha, beta) of the tempered operators. The step count n is
/// derived as floor(Re alpha) + 1, so Re(n - alpha) > 0 always holds.
struct FracParams {
    ComplexScalar alpha{0.0, 0.0};
    ComplexScalar beta{0.0, 0.0};

    FracParams() = default;
    FracParams(ComplexScalar a, ComplexScalar b) : alpha(a), beta(b) {}

    int n() const { return static_cast<int>(std::floor(alpha.real())) + 1; }

    void require_integral_order() const {
        if (!(alpha.real() > 0.0)) throw DomainError("integral order requires Re(alpha) > 0");
        if (beta.real() < 0.0) throw DomainError("tempering rate requires Re(beta) >= 0");
    }

    void require_derivative_order() const {
        if (alpha.real() < 0.0) throw DomainError("derivative order requires Re(alpha) >= 0");
        if (beta.real() < 0.0) throw DomainError("tempering rate requires Re(beta) >= 0");
    }
};

/// Proportional parametrisation (alpha, rho), 0 < rho <= 1. Equivalent
/// tempering rate is (1 - rho)/rho.
struct GpfParams {
    ComplexScalar alpha{0.0, 0.0};
    double rho = 1.0;

    GpfParams() = default;
    GpfParams(ComplexScalar a, double r) : alpha(a), rho(r) {
        if (!(rho > 0.0 && rho <= 1.0)) throw DomainError("rho must lie in (0, 1]");
    }

    double beta_equiv() const { return (1.0 - rho) / rho; }
    FracParams tempered() const { return FracParams(alpha, ComplexScalar(beta_equiv(), 0.0)); }
};

}  // namespace tfc
