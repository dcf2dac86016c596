#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "merofact/types.hpp"

// The principal-part calculus. "Principal part at a point" here is the c0
// Laurent coefficient: the function value at a regular point, the finite part
// at a pole. Three independent extraction routes are provided (contour
// quadrature, symmetric limit, closed-form tables on registered handles) plus
// the product rule on explicit Laurent windows.
namespace merofact::meromorphic {

// A finite window of Laurent coefficients about `center`: orders
// min_order .. min_order+coeffs.size()-1.
struct LaurentData {
    Complex center{0.0, 0.0};
    int min_order = 0;
    std::vector<Complex> coeffs;

    int max_order() const { return min_order + static_cast<int>(coeffs.size()) - 1; }
    bool has(int order) const { return order >= min_order && order <= max_order(); }
    Complex coeff(int order) const {
        return has(order) ? coeffs[static_cast<std::size_t>(order - min_order)]
                          : Complex(0.0, 0.0);
    }
    // m >= 0; 0 for a Taylor window.
    int pole_order() const { return min_order < 0 ? -min_order : 0; }
};

// Describes where a handle's singularities live: an explicit list, a subset
// of the integers, or both. Queries are what the contour machinery needs:
// which singularities fall inside a disk, and how far the nearest one is.
class PoleSet {
public:
    PoleSet() = default;

    static PoleSet none() { return PoleSet(); }
    static PoleSet at(std::vector<Complex> points);
    // Poles at exactly the integers n with member(n) true.
    static PoleSet integers(std::function<bool(long long)> member);

    PoleSet with_point(Complex p) const;

    std::vector<Complex> within(Complex center, double radius) const;
    // +inf when the set is empty.
    double distance(Complex z) const;
    bool contains(Complex z, double tol) const;
    bool empty() const { return points_.empty() && !member_; }

private:
    std::vector<Complex> points_;
    std::function<bool(long long)> member_;
};

// A registered named meromorphic function: evaluator (defined off poles),
// pole set, and optional closed-form residue / principal-part suppliers
// keyed by the pole location.
struct FunctionHandle {
    std::string name;
    std::function<Complex(Complex)> evaluator;
    PoleSet poles;
    std::function<std::optional<Complex>(Complex)> closed_pp;   // may be empty
    std::function<std::optional<Complex>(Complex)> closed_res;  // may be empty

    Complex operator()(Complex z) const { return evaluator(z); }
};

// Circle discretization for the contour integrals. radius <= 0 selects the
// default: half the distance to the nearest other singularity, capped at 0.5.
struct ContourSpec {
    double radius = 0.0;
    int nodes = 256;
};

// c0 of the Laurent expansion of f about a: (1/2pi) * mean of f over the
// circle |z-a| = radius. Equals f(a) at regular points. Trapezoidal rule on
// the periodic integrand converges spectrally. ContourError if the circle is
// not isolating; NonFinite if the evaluator blows up at a node.
Complex pp_contour(const FunctionHandle& f, Complex a, ContourSpec spec = {});

// c_{-1} (the residue); 0 at regular points.
Complex residue_contour(const FunctionHandle& f, Complex a, ContourSpec spec = {});

// General coefficient c_k = (1/2pi i) contour-int f(z)/(z-a)^{k+1} dz.
Complex laurent_coeff(const FunctionHandle& f, Complex a, int k, ContourSpec spec = {});

// Symmetric-limit principal part lim (f(a-eps)+f(a+eps))/2, valid at regular
// points and SIMPLE poles only. Fixed schedule eps = 1e-2,5e-3,2.5e-3,1.25e-3
// with one Richardson step (the error is even in eps). DivergenceDetected
// when |s(eps)| grows as eps shrinks (pole of order >= 2).
Complex pp_symmetric(const FunctionHandle& f, Complex a, const EvalConfig& cfg = {});

// Theorem-1 product rule on Laurent windows sharing a center: for f1
// holomorphic (Taylor window) and f2 with pole order m,
//   p.p.(f1*f2) = sum_{k=0}^{m} t_k * c_{-k}
// where t_k are f1's Taylor coefficients and c_{-k} f2's coefficients (c_0
// for k = 0). InsufficientCoefficients when a window is too short.
Complex pp_product(const LaurentData& f1_taylor, const LaurentData& f2);

}  // namespace merofact::meromorphic
