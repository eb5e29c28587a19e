#pragma once

#include <cmath>
#include <vector>

#include "tfc/types.hpp"

namespace tfc::cheb {

/// Chebyshev interpolant on [a, b] built from samples at the interior
/// Chebyshev-Gauss nodes, evaluated by the Clenshaw recurrence. Used to cache
/// intermediate functions in repeated operator compositions.
class Interpolant {
  public:
    template <class F>
    static Interpolant build(const F& f, double a, double b, int n) {
        Interpolant out;
        out.a_ = a;
        out.b_ = b;
        out.coef_.assign(n, ComplexScalar{0.0, 0.0});
        const double pi = 3.14159265358979323846;
        std::vector<ComplexScalar> samples(n);
        for (int j = 0; j < n; ++j) {
            const double theta = pi * (j + 0.5) / n;
            const double x = 0.5 * (a + b) + 0.5 * (b - a) * std::cos(theta);
            samples[j] = f(x);
        }
        for (int k = 0; k < n; ++k) {
            ComplexScalar acc{0.0, 0.0};
            for (int j = 0; j < n; ++j) {
                acc += samples[j] * std::cos(k * pi * (j + 0.5) / n);
            }
            out.coef_[k] = acc * (2.0 / n);
        }
        out.coef_[0] *= 0.5;
        return out;
    }

    ComplexScalar operator()(double x) const {
        const double u = (2.0 * x - (a_ + b_)) / (b_ - a_);
        ComplexScalar b1{0.0, 0.0}, b2{0.0, 0.0};
        for (std::size_t k = coef_.size(); k-- > 1;) {
            ComplexScalar tmp = 2.0 * u * b1 - b2 + coef_[k];
            b2 = b1;
            b1 = tmp;
        }
        return u * b1 - b2 + coef_[0];
    }

    double lo() const { return a_; }
    double hi() const { return b_; }

  private:
    double a_ = 0.0, b_ = 1.0;
    std::vector<ComplexScalar> coef_;
};

}  // namespace tfc::cheb
