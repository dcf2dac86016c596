#include "merofact/meromorphic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "merofact/errors.hpp"
#include "merofact/numeric.hpp"

namespace merofact::meromorphic {

using numeric::pi;

PoleSet PoleSet::at(std::vector<Complex> points) {
    PoleSet p;
    p.points_ = std::move(points);
    return p;
}

PoleSet PoleSet::integers(std::function<bool(long long)> member) {
    PoleSet p;
    p.member_ = std::move(member);
    return p;
}

PoleSet PoleSet::with_point(Complex extra) const {
    PoleSet p = *this;
    p.points_.push_back(extra);
    return p;
}

std::vector<Complex> PoleSet::within(Complex center, double radius) const {
    std::vector<Complex> out;
    for (const Complex& p : points_)
        if (std::abs(p - center) <= radius) out.push_back(p);
    if (member_) {
        const long long lo = static_cast<long long>(std::ceil(center.real() - radius)) - 1;
        const long long hi = static_cast<long long>(std::floor(center.real() + radius)) + 1;
        for (long long n = lo; n <= hi; ++n) {
            const Complex p(static_cast<double>(n), 0.0);
            if (member_(n) && std::abs(p - center) <= radius) out.push_back(p);
        }
    }
    return out;
}

double PoleSet::distance(Complex z) const {
    double best = std::numeric_limits<double>::infinity();
    for (const Complex& p : points_) best = std::min(best, std::abs(p - z));
    if (member_) {
        // Poles lie on the real axis; scanning outward from the nearest
        // integer terminates once the horizontal gap alone exceeds `best`.
        const long long n0 = numeric::nearest_integer(z.real());
        for (long long off = 0;; ++off) {
            const double horizontal = std::max(0.0, static_cast<double>(off) - 1.0);
            if (horizontal > best) break;
            bool any_candidate = false;
            for (long long n : {n0 - off, n0 + off}) {
                if (off == 0 && n != n0) continue;
                any_candidate = true;
                if (member_(n))
                    best = std::min(best, std::abs(z - Complex(static_cast<double>(n), 0.0)));
            }
            if (!any_candidate || off > (1 << 20)) break;
        }
    }
    return best;
}

bool PoleSet::contains(Complex z, double tol) const { return distance(z) <= tol; }

namespace {

void validate_spec(const ContourSpec& spec) {
    if (spec.nodes < 16 || spec.nodes % 2 != 0)
        throw ContourError("contour nodes must be >= 16 and even");
}

// Resolve the working radius and enforce isolation: the circle about `a` may
// enclose no singularity of f other than a itself.
double resolve_radius(const FunctionHandle& f, Complex a, const ContourSpec& spec) {
    double radius = spec.radius;
    if (radius <= 0.0) {
        double nearest_other = std::numeric_limits<double>::infinity();
        for (const Complex& p : f.poles.within(a, 4.0))
            if (std::abs(p - a) > 1e-12) nearest_other = std::min(nearest_other, std::abs(p - a));
        radius = std::min(0.5, 0.5 * nearest_other);
    }
    if (!(radius > 0.0)) throw ContourError("contour radius must be positive");
    for (const Complex& p : f.poles.within(a, radius * (1.0 + 1e-9)))
        if (std::abs(p - a) > 1e-12)
            throw ContourError("radius " + std::to_string(radius) +
                               " encloses another singularity of " + f.name);
    return radius;
}

}  // namespace

Complex laurent_coeff(const FunctionHandle& f, Complex a, int k, ContourSpec spec) {
    validate_spec(spec);
    const double rho = resolve_radius(f, a, spec);
    const int n = spec.nodes;

    // c_k = rho^-k / (2 pi) * integral_0^2pi f(a + rho e^(i theta)) e^(-i k theta) dtheta,
    // trapezoid on the periodic integrand.
    numeric::CompensatedSum acc;
    for (int j = 0; j < n; ++j) {
        const double theta = 2.0 * pi * j / n;
        const Complex on_circle = a + std::polar(rho, theta);
        const Complex fz = f.evaluator(on_circle);
        if (!numeric::is_finite(fz))
            throw NonFinite(f.name + " returned a non-finite value on the contour at node " +
                            std::to_string(j));
        acc.add(fz * std::polar(1.0, -k * theta));
    }
    return acc.value() / static_cast<double>(n) * std::pow(rho, -k);
}

Complex pp_contour(const FunctionHandle& f, Complex a, ContourSpec spec) {
    return laurent_coeff(f, a, 0, spec);
}

Complex residue_contour(const FunctionHandle& f, Complex a, ContourSpec spec) {
    return laurent_coeff(f, a, -1, spec);
}

Complex pp_symmetric(const FunctionHandle& f, Complex a, const EvalConfig& cfg) {
    (void)cfg;
    // s(eps) = c0 + c2 eps^2 + c4 eps^4 + ... at a regular point or simple
    // pole; one Richardson step over the two smallest schedule points.
    static constexpr double kSchedule[4] = {1e-2, 5e-3, 2.5e-3, 1.25e-3};
    Complex s[4];
    for (int i = 0; i < 4; ++i) {
        const double eps = kSchedule[i];
        const Complex left = f.evaluator(a - eps);
        const Complex right = f.evaluator(a + eps);
        if (!numeric::is_finite(left) || !numeric::is_finite(right))
            throw NonFinite(f.name + " returned a non-finite value near " +
                            std::to_string(a.real()));
        s[i] = 0.5 * (left + right);
    }
    // A pole of order >= 2 makes |s| grow ~4x per halving of eps.
    if (std::abs(s[1]) > 2.0 * std::abs(s[0]) && std::abs(s[2]) > 2.0 * std::abs(s[1]) &&
        std::abs(s[3]) > 2.0 * std::abs(s[2]))
        throw DivergenceDetected("symmetric limit diverges at " + f.name +
                                 ": pole of order >= 2 (use the contour route)");
    return (4.0 * s[3] - s[2]) / 3.0;
}

Complex pp_product(const LaurentData& f1_taylor, const LaurentData& f2) {
    if (f1_taylor.min_order < 0)
        throw InsufficientCoefficients("pp_product: first factor must be a Taylor window");
    if (std::abs(f1_taylor.center - f2.center) > 1e-12)
        throw InsufficientCoefficients("pp_product: windows must share a center");

    const int m = f2.pole_order();
    if (f1_taylor.max_order() < m)
        throw InsufficientCoefficients("pp_product: first factor needs orders 0.." +
                                       std::to_string(m));
    if (!f2.has(0) || f2.min_order > -m)
        throw InsufficientCoefficients("pp_product: second factor needs orders -" +
                                       std::to_string(m) + "..0");
    if (m > 0 && std::abs(f2.coeffs.front()) == 0.0)
        throw InsufficientCoefficients("pp_product: leading Laurent coefficient must be nonzero");

    numeric::CompensatedSum acc;
    for (int k = 0; k <= m; ++k) acc.add(f1_taylor.coeff(k) * f2.coeff(-k));
    return acc.value();
}

}  // namespace merofact::meromorphic
