#include "merofact/kurepa.hpp"

#include <cmath>
#include <string>

#include "merofact/errors.hpp"
#include "merofact/numeric.hpp"
#include "merofact/specfun.hpp"

namespace merofact::kurepa {

using numeric::e_const;
using numeric::euler_gamma;
using numeric::pi;

namespace {

// K and A refuse evaluation closer than this to their poles; the symmetric-
// limit schedule (min eps 1.25e-3) stays outside on purpose.
constexpr double kNearPoleGuard = 1e-3;
// Arguments this close to a special integer point take the exact-value path.
constexpr double kIntegerSnap = 1e-12;

double factorial_d(long long n) {
    double f = 1.0;
    for (long long k = 2; k <= n; ++k) f *= static_cast<double>(k);
    return f;
}

// psi(n+1) = -gamma + H_n, exact-in-double harmonic accumulation.
double psi_at_positive_integer(long long n_plus_1) {
    double h = 0.0;
    for (long long k = 1; k < n_plus_1; ++k) h += 1.0 / static_cast<double>(k);
    return -euler_gamma + h;
}

// exp(i pi z) with the real part reduced, so the branch factor stays accurate
// for large |Re z|.
Complex exp_ipi(Complex z) {
    return numeric::cos_pi(z) + Complex(0.0, 1.0) * numeric::sin_pi(z);
}

bool is_k_pole(long long n) { return n == -1 || n <= -3; }
bool is_a_pole(long long n) { return n <= -2; }

// K1(z) = sum_{n>=0} Gamma(z-n) via the running product
// Gamma(z-n) = Gamma(z-n+1)/(z-n); stops after three consecutive terms below
// 1e-17 * |partial sum| (terms can pass through zero-crossings in sign
// pattern, a single small term is not proof of convergence).
Complex k1_series(Complex z, const EvalConfig& cfg) {
    Complex term = specfun::gamma(z, cfg);
    numeric::CompensatedSum sum;
    sum.add(term);
    int quiet = 0;
    for (int n = 1; n < cfg.max_terms; ++n) {
        term /= (z - static_cast<double>(n));
        sum.add(term);
        if (std::abs(term) < 1e-17 * std::abs(sum.value())) {
            if (++quiet >= 3) return sum.value();
        } else {
            quiet = 0;
        }
    }
    throw ConvergenceFailure("K1 series did not converge within max_terms");
}

// A1(z) = sum_{n>=0} (-1)^n Gamma(z+1-n), same running-product policy.
Complex a1_series(Complex z, const EvalConfig& cfg) {
    Complex term = specfun::gamma(z + 1.0, cfg);
    numeric::CompensatedSum sum;
    sum.add(term);
    int quiet = 0;
    for (int n = 1; n < cfg.max_terms; ++n) {
        term = -term / (z + 1.0 - static_cast<double>(n));
        sum.add(term);
        if (std::abs(term) < 1e-17 * std::abs(sum.value())) {
            if (++quiet >= 3) return sum.value();
        } else {
            quiet = 0;
        }
    }
    throw ConvergenceFailure("A1 series did not converge within max_terms");
}

double factorial_sum(long long n) {  // K(n) = 0! + 1! + ... + (n-1)!
    double s = 0.0;
    double f = 1.0;
    for (long long i = 0; i < n; ++i) {
        if (i > 0) f *= static_cast<double>(i);
        s += f;
    }
    return s;
}

double alternating_factorial_sum(long long n) {  // A(n) = n! - (n-1)! + ... -+ 1!
    double s = 0.0;
    double f = 1.0;
    for (long long i = 1; i <= n; ++i) {
        f *= static_cast<double>(i);
        s = f - s;
    }
    return s;
}

// p.p. Gamma at the point -n (n >= 0): the c0 Laurent coefficient
// (-1)^n psi(n+1)/n!.
double pp_gamma_at_pole(long long n) {
    const double v = psi_at_positive_integer(n + 1) / factorial_d(n);
    return (n % 2 == 0) ? v : -v;
}

// p.p. of K at an arbitrary integer point m: the exact sum at m >= 0, the
// closed pole/removable form below.
Complex pp_k_at_point(long long m) {
    if (m >= 0) return {factorial_sum(m), 0.0};
    const long long n = -m;
    numeric::CompensatedSum s;
    for (long long i = 0; i < n; ++i) s.add({pp_gamma_at_pole(i), 0.0});
    return -s.value();
}

// p.p. of A at an arbitrary integer point m.
Complex pp_a_at_point(long long m) {
    if (m >= 0) return {alternating_factorial_sum(m), 0.0};
    const long long n = -m;
    numeric::CompensatedSum s;
    for (long long i = 1; i < n; ++i)
        s.add({psi_at_positive_integer(i) / factorial_d(i - 1), 0.0});
    const Complex inner = 1.0 - s.value();
    return (n % 2 == 0) ? -inner : inner;
}

}  // namespace

double const_L1(const EvalConfig& cfg) {
    // (gamma + sum 1/(n! n))/e, truncated at term < 1e-16 * partial sum.
    double sum = 0.0;
    double inv_fact = 1.0;
    for (int n = 1; n < cfg.max_terms; ++n) {
        inv_fact /= n;
        const double term = inv_fact / n;
        sum += term;
        if (term < 1e-16 * sum) break;
    }
    return (euler_gamma + sum) / e_const;
}

double const_L2(const EvalConfig& cfg) {
    // 1 + e*gamma - e * sum (-1)^(n-1)/(n! n).
    double sum = 0.0;
    double inv_fact = 1.0;
    for (int n = 1; n < cfg.max_terms; ++n) {
        inv_fact /= n;
        const double term = ((n % 2 == 1) ? inv_fact : -inv_fact) / n;
        sum += term;
        if (std::abs(term) < 1e-16 * std::abs(sum)) break;
    }
    return 1.0 + e_const * euler_gamma - e_const * sum;
}

Complex kurepa(Complex z, Variant v, const EvalConfig& cfg) {
    if (v != Variant::K && v != Variant::K1)
        throw Unsupported("kurepa: variant must be K or K1");

    if (v == Variant::K1) {
        if (numeric::integer_distance(z) <= cfg.pole_guard_radius)
            throw PoleProximity("K1: argument within pole guard of an integer");
        return k1_series(z, cfg);
    }

    const long long m = numeric::nearest_integer(z.real());
    if (numeric::near_integer(z, m, kIntegerSnap)) {
        if (m >= 0) return {factorial_sum(m), 0.0};
        if (m == -2) return {1.0, 0.0};  // removable singularity
    }
    const double guard = std::max(kNearPoleGuard, cfg.pole_guard_radius);
    if (is_k_pole(m) && numeric::near_integer(z, m, guard))
        throw PoleProximity("K: argument within pole guard of " + std::to_string(m));

    // Slavic formula: K = L1 - (pi/e) cot(pi z) + K1(z).
    static const double l1 = const_L1(EvalConfig{});
    return l1 - (pi / e_const) * numeric::cot_pi(z) + k1_series(z, cfg);
}

Complex altkurepa(Complex z, Variant v, const EvalConfig& cfg) {
    if (v != Variant::A && v != Variant::A1)
        throw Unsupported("altkurepa: variant must be A or A1");

    if (v == Variant::A1) {
        if (numeric::integer_distance(z) <= cfg.pole_guard_radius)
            throw PoleProximity("A1: argument within pole guard of an integer");
        return a1_series(z, cfg);
    }

    const long long m = numeric::nearest_integer(z.real());
    if (numeric::near_integer(z, m, kIntegerSnap)) {
        if (m >= 0) return {alternating_factorial_sum(m), 0.0};
        if (m == -1) return {1.0, 0.0};  // regular: A(-1) = Gamma(1) - A(0)
    }
    const double guard = std::max(kNearPoleGuard, cfg.pole_guard_radius);
    if (is_a_pole(m) && numeric::near_integer(z, m, guard))
        throw PoleProximity("A: argument within pole guard of " + std::to_string(m));

    // Slavic-type formula: A = -L2 (-1)^z + pi e / sin(pi z) + A1(z).
    static const double l2 = const_L2(EvalConfig{});
    return -l2 * exp_ipi(z) + pi * e_const / numeric::sin_pi(z) + a1_series(z, cfg);
}

Complex kurepa_integral_oracle(Complex z, const EvalConfig& cfg) {
    if (z.real() <= 0.0)
        throw DomainError("kurepa_integral_oracle requires Re z > 0");

    // (t^z - 1)/(t - 1) has a removable singularity at t = 1; for
    // |t-1| < 1e-3 use the 4-term binomial expansion
    // sum_{k>=1} C(z,k) (t-1)^(k-1).
    const Complex b1 = z;
    const Complex b2 = z * (z - 1.0) / 2.0;
    const Complex b3 = b2 * (z - 2.0) / 3.0;
    const Complex b4 = b3 * (z - 3.0) / 4.0;
    auto quotient = [&](double t) -> Complex {
        const double u = t - 1.0;
        if (std::abs(u) < 1e-3) return b1 + u * (b2 + u * (b3 + u * b4));
        return (std::pow(t, z) - 1.0) / u;
    };
    auto integrand = [&](double t) { return std::exp(-t) * quotient(t); };

    const double split = std::max(10.0, 2.0 * std::abs(z) + 20.0);
    const double t_end = std::max(60.0, 4.0 * std::abs(z) + 60.0);
    const double abs_tol = 1e-12;
    Complex total = numeric::integrate(integrand, 0.0, 1.0, abs_tol, cfg.rel_tol, cfg.max_terms);
    total += numeric::integrate(integrand, 1.0, split, abs_tol, cfg.rel_tol, cfg.max_terms);
    total += numeric::integrate(integrand, split, t_end, abs_tol, cfg.rel_tol, cfg.max_terms);
    return total;
}

Complex altkurepa_integral_oracle(Complex z, const EvalConfig& cfg) {
    if (z.real() <= 0.0)
        throw DomainError("altkurepa_integral_oracle requires Re z > 0");

    const Complex branch = exp_ipi(z);  // (-1)^z
    auto integrand = [&](double t) {
        return std::exp(-t) * (std::pow(t, z + 1.0) - branch * t) / (t + 1.0);
    };
    const double split = std::max(10.0, 2.0 * std::abs(z) + 20.0);
    const double t_end = std::max(60.0, 4.0 * std::abs(z) + 60.0);
    const double abs_tol = 1e-12;
    Complex total = numeric::integrate(integrand, 0.0, 1.0, abs_tol, cfg.rel_tol, cfg.max_terms);
    total += numeric::integrate(integrand, 1.0, split, abs_tol, cfg.rel_tol, cfg.max_terms);
    total += numeric::integrate(integrand, split, t_end, abs_tol, cfg.rel_tol, cfg.max_terms);
    return total;
}

Complex pp_closed(Family f, long long n) {
    switch (f) {
        case Family::Gamma:
            // index n <-> point -n; regular integer points give the value
            if (n < 0) return specfun::gamma(Complex(static_cast<double>(-n), 0.0));
            return {pp_gamma_at_pole(n), 0.0};
        case Family::K:
            if (n < 1) throw IndexError("pp_closed(K, n) requires n >= 1 (point -n)");
            return pp_k_at_point(-n);
        case Family::A:
            if (n < 1) throw IndexError("pp_closed(A, n) requires n >= 1 (point -n)");
            return pp_a_at_point(-n);
        case Family::K1:
            return pp_k_at_point(n) - const_L1(EvalConfig{});
        case Family::A1: {
            const double sign = (n % 2 == 0) ? 1.0 : -1.0;
            return sign * const_L2(EvalConfig{}) + pp_a_at_point(n);
        }
    }
    throw IndexError("pp_closed: unknown family");
}

Complex res_closed(Family f, long long n) {
    switch (f) {
        case Family::Gamma: {
            if (n < 0) throw IndexError("res_closed(Gamma, n) requires n >= 0");
            const double v = 1.0 / factorial_d(n);
            return {(n % 2 == 0) ? v : -v, 0.0};
        }
        case Family::K: {
            if (n == 1) return {-1.0, 0.0};
            if (n < 3)
                throw IndexError("res_closed(K, n): -" + std::to_string(n) +
                                 " is not a pole of K");
            double s = 0.0;
            for (long long k = 2; k <= n - 1; ++k)
                s += ((k % 2 == 1) ? 1.0 : -1.0) / factorial_d(k);
            return {s, 0.0};
        }
        case Family::A: {
            if (n < 2)
                throw IndexError("res_closed(A, n): -" + std::to_string(n) +
                                 " is not a pole of A");
            double s = 0.0;
            for (long long k = 0; k <= n - 2; ++k) s += 1.0 / factorial_d(k);
            return {(n % 2 == 0) ? s : -s, 0.0};
        }
        default:
            throw IndexError("res_closed: closed residues exist for Gamma, K, A only");
    }
}

}  // namespace merofact::kurepa
