#pragma once

#include "merofact/types.hpp"

// Kurepa's left-factorial function K, the alternating variant A, their series
// companions K1 = sum Gamma(z-n) and A1 = sum (-1)^n Gamma(z+1-n), the
// constants L1/L2, closed-form residue and principal-part tables, and
// quadrature oracles for the defining integrals.
//
// Branch convention: (-1)^z := exp(i pi z) throughout (principal branch).
// This makes A(z) complex for real non-integer z; the imaginary part
// -L2*sin(pi z) is branch-dependent and is reported as computed.
namespace merofact::kurepa {

enum class Variant { K, K1, A, A1 };
enum class Family { Gamma, K, K1, A, A1 };

// L1 = (euler_gamma + sum_{n>=1} 1/(n! n))/e = Ei(1)/e ~= 0.697174883.
double const_L1(const EvalConfig& cfg = {});

// L2 = 1 + e*euler_gamma - e*sum_{n>=1} (-1)^(n-1)/(n! n) = 1 + e*Ei(-1)
// ~= 0.403652638.
double const_L2(const EvalConfig& cfg = {});

// K (via the Slavic closed form K = L1 - (pi/e)cot(pi z) + K1(z)) or the
// series K1 directly. K returns the exact factorial sum at non-negative
// integers and 1 at the removable point z = -2. Poles: K at -1 and -n
// (n >= 3); K1 at every integer.
Complex kurepa(Complex z, Variant v, const EvalConfig& cfg = {});

// Quadrature of K(z) = integral_0^inf e^-t (t^z - 1)/(t - 1) dt, Re z > 0.
Complex kurepa_integral_oracle(Complex z, const EvalConfig& cfg = {});

// A (via the Slavic-type form A = -L2*(-1)^z + pi e/sin(pi z) + A1(z)) or the
// series A1 directly. A returns the exact alternating factorial sum at
// non-negative integers and 1 at the regular integer -1. Poles: A at -n
// (n >= 2); A1 at every integer.
Complex altkurepa(Complex z, Variant v, const EvalConfig& cfg = {});

// Quadrature of A(z) = integral_0^inf e^-t (t^(z+1) - (-1)^z t)/(t + 1) dt,
// Re z > 0, with (-1)^z = exp(i pi z).
Complex altkurepa_integral_oracle(Complex z, const EvalConfig& cfg = {});

// Closed-form principal parts. Index convention follows the source theorems:
// for Gamma, K, A the index n refers to the point z = -n (n >= 0 for Gamma
// poles, n >= 1 for K/A); for K1, A1 the index IS the integer point z = n.
// Regular integer points return the function value. IndexError outside the
// stated sets.
//
//   p.p. Gamma(-n) = (-1)^n psi(n+1)/n!
//   p.p. K(-n)     = -sum_{i=0}^{n-1} p.p. Gamma(-i)
//   p.p. K1(n)     = p.p. K(n) - L1            (any integer n)
//   p.p. A(-n)     = (-1)^(n+1) (1 - sum_{i=1}^{n-1} psi(i)/Gamma(i))
//   p.p. A1(n)     = (-1)^n L2 + p.p. A(n)     (any integer n)
Complex pp_closed(Family f, long long n);

// Closed-form residues at z = -n. Families Gamma (n >= 0), K (n = 1 or
// n >= 3), A (n >= 2). IndexError at non-poles, including K at -2 (the
// removable singularity).
//
//   res Gamma(-n) = (-1)^n/n!
//   res K(-1) = -1;  res K(-n) = sum_{k=2}^{n-1} (-1)^(k-1)/k!   (n >= 3)
//   res A(-n) = (-1)^n sum_{k=0}^{n-2} 1/k!                      (n >= 2)
Complex res_closed(Family f, long long n);

}  // namespace merofact::kurepa
