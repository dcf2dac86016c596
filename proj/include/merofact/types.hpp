#pragma once

#include <complex>

namespace merofact {

using Complex = std::complex<double>;

// Shared evaluation knobs. All functions take a config by const reference and
// never mutate it; the defaults realize the library-wide precision budget.
struct EvalConfig {
    double rel_tol = 1e-12;        // series / quadrature relative tolerance
    int max_terms = 10000;         // series terms or quadrature panel cap
    double pole_guard_radius = 1e-8;  // refuse evaluation closer than this to a pole
};

}  // namespace merofact
