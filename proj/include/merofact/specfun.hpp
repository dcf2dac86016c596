#pragma once

#include "merofact/types.hpp"

// Scalar special-function kernel: complex Gamma, digamma, the trigamma-type
// sum H1(z) = sum 1/(n+z)^2, and the real exponential integral Ei. The
// production Gamma uses a fixed Lanczos rational approximation (coefficients
// documented in specfun.cpp); gamma_oracle re-derives Gamma from the
// series-plus-tail-integral continuation and serves as the independent check.
namespace merofact::specfun {

// Gamma(z). Reflection identity for Re z < 1/2. Relative error <= ~2e-14 for
// |z| <= 30 off the poles. Throws PoleProximity within pole_guard_radius of
// a non-positive integer.
Complex gamma(Complex z, const EvalConfig& cfg = {});

// Independent route: sum_{n>=0} (-1)^n/(n!(n+z)) + integral_1^inf e^-t t^(z-1) dt,
// valid for all non-pole z. Agrees with gamma() to ~1e-12; budgeted at 1e-9.
Complex gamma_oracle(Complex z, const EvalConfig& cfg = {});

// psi(z) = Gamma'(z)/Gamma(z). Recurrence shift + asymptotic series,
// reflection for Re z < 1/2.
Complex digamma(Complex z, const EvalConfig& cfg = {});

// H1(z) = sum_{n>=0} 1/(n+z)^2 = psi'(z). Direct summation with an
// asymptotic (Euler-Maclaurin) tail.
Complex trigamma_h1(Complex z, const EvalConfig& cfg = {});

// Ei(x) = euler_gamma + ln|x| + sum_{n>=1} x^n/(n! n). DomainError at x = 0.
double expint_ei(double x, const EvalConfig& cfg = {});

}  // namespace merofact::specfun
