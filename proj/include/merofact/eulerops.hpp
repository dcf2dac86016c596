#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "merofact/types.hpp"

// The delta-operator calculus for Euler (equidimensional) linear ODEs
// sum a_k x^k y^(k) = 0: parse, rewrite as a polynomial in delta = x*D via
// falling factorials, extract characteristic roots with multiplicity, emit
// the x^r (ln x)^j solution basis (the exp/ln pullback of the constant-
// coefficient solutions), and verify bases numerically with closed-form
// derivatives. Solutions are represented for x > 0.
namespace merofact::eulerops {

// Exact rational with int64 numerator/denominator, normalized (den > 0,
// gcd = 1). Parsed coefficients stay rational until root finding so the
// delta-polynomial of an integer-coefficient equation is bit-exact.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d = 1);
    static Rational from_decimal(std::string_view digits);  // "3", "0.25", ...

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator-() const { return Rational(-num, den); }
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool is_zero() const { return num == 0; }
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const;
};

struct EulerEquation {
    int order = 0;
    std::vector<Complex> coeffs;     // a_0 .. a_n (coefficient of x^k y^(k))
    std::vector<Rational> exact;     // parallel to coeffs when all rational
    std::optional<std::pair<Rational, Rational>> shift;  // (alpha, beta) of (alpha x + beta)^k
};

enum class OperatorBasis { D, Delta };

struct OperatorPoly {
    OperatorBasis basis = OperatorBasis::Delta;
    std::vector<Complex> coeffs;     // p_0 .. p_n, ascending powers
    std::vector<Rational> exact;     // parallel when exact

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

struct RootEntry {
    Complex root;          // snapped/refined value
    int multiplicity = 1;
    Complex raw;           // pre-snap value retained for inspection
};

struct RootMultiset {
    std::vector<RootEntry> entries;
    int total_multiplicity() const;
};

// One solution term x^exponent (ln x)^log_power; in real form a conjugate
// pair is emitted as x^a cos(b ln x)(ln x)^j / x^a sin(b ln x)(ln x)^j with
// exponent = a+bi and the trig flag set.
struct BasisTerm {
    Complex exponent;
    int log_power = 0;
    enum class Kind { plain, cos, sin } kind = Kind::plain;
};

struct SolutionBasis {
    std::vector<BasisTerm> terms;
    bool real_form = false;
    std::string rendered;  // "c1*x + c2*x*ln(x) + c3*x^-2"
};

// Grammar (EBNF in docs/equation-grammar.md): a signed sum of terms
//   [coef '*'] [xpart '*'] y-part,  y-part = y | y'..''' | y^(k),
//   xpart = x | x^k | (a*x+b)^k  (shift form, used consistently),
// terminated by "= 0". Whitespace-insensitive. SyntaxError carries the
// position; NotEulerForm names the term whose x-power mismatches the
// derivative order.
EulerEquation parse_equation(std::string_view text);

// Inverse of parse_equation up to coefficient normalization:
// parse(render(eq)) has identical coefficients.
std::string render_equation(const EulerEquation& eq);

// Rewrite sum a_k x^k D^k as a polynomial in delta via
// x^k D^k = delta(delta-1)...(delta-k+1). A Legendre shift (alpha x + beta)
// is normalized by u = alpha x + beta first (coefficients pick up alpha^k).
// Exact when the equation is exact.
OperatorPoly to_delta(const EulerEquation& eq);

// Coefficients of delta(delta-1)...(delta-k+1), ascending: the signed
// Stirling numbers of the first kind. RangeError for k > 20.
std::vector<Complex> falling_factorial_expand(int k);

// All roots of the delta-basis polynomial with multiplicities. Companion
// matrix eigenvalues, then multiplicity-aware refinement: clusters are
// re-solved on the appropriate derivative and merged only when every lower
// derivative vanishes to evaluation noise; roots within 1e-9 of an integer
// are snapped (raw value kept). ConvergenceFailure if the eigensolver fails.
RootMultiset char_roots(const OperatorPoly& p, double tol = 1e-8);

// For each root r of multiplicity m emit x^r (ln x)^j, j = 0..m-1. With
// real_form, conjugate pairs a+-bi become cos/sin terms; RealFormUnavailable
// if an unpaired non-real root exists.
SolutionBasis solution_basis(const RootMultiset& roots, bool real_form = false);

// Max over terms and points of |sum a_k x^k t^(k)(x)| / max(1, |t(x)|), with
// t^(k) computed analytically. Points must be > 0 (and >= 1e-3 from 0).
double verify_basis(const EulerEquation& eq, const SolutionBasis& basis,
                    std::span<const double> points);

}  // namespace merofact::eulerops
