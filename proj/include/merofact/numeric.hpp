#pragma once

#include <cmath>
#include <functional>
#include <optional>

#include "merofact/errors.hpp"
#include "merofact/types.hpp"

// Small numeric substrate shared by the function modules: trig of pi*z with
// argument reduction (accurate near integers), integer snapping helpers, and
// an adaptive Gauss-Kronrod integrator for complex-valued integrands on a
// real interval.
namespace merofact::numeric {

inline constexpr double pi = 3.14159265358979323846264338327950288;
inline constexpr double euler_gamma = 0.57721566490153286060651209008240243;
inline constexpr double e_const = 2.71828182845904523536028747135266250;

// sin(pi*z), cos(pi*z) with the real part reduced modulo 2 before scaling by
// pi. Near integers the naive sin(pi*x) loses ~|x|*eps absolutely; the
// reduced form keeps full relative accuracy, which the pole-adjacent
// evaluations (reflection formula, Slavic cotangent) rely on.
inline Complex sin_pi(Complex z) {
    double r = std::remainder(z.real(), 2.0);
    return std::sin(Complex(pi * r, pi * z.imag()));
}

inline Complex cos_pi(Complex z) {
    double r = std::remainder(z.real(), 2.0);
    return std::cos(Complex(pi * r, pi * z.imag()));
}

inline Complex cot_pi(Complex z) { return cos_pi(z) / sin_pi(z); }

// Nearest integer to the real part, as a long long.
inline long long nearest_integer(double x) { return std::llround(x); }

// Distance from z to the nearest Gaussian-free integer point on the real axis.
inline double integer_distance(Complex z) {
    return std::abs(z - Complex(static_cast<double>(nearest_integer(z.real())), 0.0));
}

// True when z is within tol of the integer n (as a point on the real axis).
inline bool near_integer(Complex z, long long n, double tol) {
    return std::abs(z - Complex(static_cast<double>(n), 0.0)) <= tol;
}

inline bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// Adaptive Gauss-Kronrod (G7,K15) quadrature of a complex-valued function on
// [a, b]. Bisects the panel with the largest error estimate until the total
// estimate is below max(abs_tol, rel_tol*|integral|) or the panel budget is
// exhausted (QuadratureFailure).
Complex integrate(const std::function<Complex(double)>& f, double a, double b,
                  double abs_tol, double rel_tol, int max_panels);

// Compensated (Neumaier) accumulation for complex values.
class CompensatedSum {
public:
    void add(Complex v) {
        add_part(v.real(), re_, re_c_);
        add_part(v.imag(), im_, im_c_);
    }
    Complex value() const { return {re_ + re_c_, im_ + im_c_}; }

private:
    static void add_part(double v, double& s, double& c) {
        double t = s + v;
        if (std::abs(s) >= std::abs(v))
            c += (s - t) + v;
        else
            c += (v - t) + s;
        s = t;
    }
    double re_ = 0, re_c_ = 0, im_ = 0, im_c_ = 0;
};

}  // namespace merofact::numeric
