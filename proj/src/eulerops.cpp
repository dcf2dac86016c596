#include "merofact/eulerops.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "merofact/errors.hpp"
#include "merofact/numeric.hpp"

namespace merofact::eulerops {

namespace {

constexpr int kMaxFallingOrder = 20;

// Exact falling-factorial coefficients (signed Stirling numbers of the first
// kind), int64-exact through k = 20.
std::vector<long long> falling_factorial_exact(int k) {
    if (k < 0 || k > kMaxFallingOrder)
        throw RangeError("falling_factorial_expand: order must be in 0..20");
    std::vector<long long> c{1};
    for (int j = 0; j < k; ++j) {
        // multiply by (delta - j)
        std::vector<long long> next(c.size() + 1, 0);
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i + 1] += c[i];
            next[i] -= static_cast<long long>(j) * c[i];
        }
        c = std::move(next);
    }
    return c;
}

Complex poly_eval(const std::vector<Complex>& coeffs, Complex x) {
    Complex v{0.0, 0.0};
    for (std::size_t i = coeffs.size(); i-- > 0;) v = v * x + coeffs[i];
    return v;
}

// Magnitude scale of the Horner evaluation; |p(x)| below ~eps*scale is
// indistinguishable from zero.
double poly_eval_scale(const std::vector<Complex>& coeffs, Complex x) {
    double v = 0.0;
    const double ax = std::abs(x);
    for (std::size_t i = coeffs.size(); i-- > 0;) v = v * ax + std::abs(coeffs[i]);
    return v;
}

std::vector<Complex> poly_derivative(const std::vector<Complex>& coeffs) {
    if (coeffs.size() <= 1) return {Complex(0.0, 0.0)};
    std::vector<Complex> d(coeffs.size() - 1);
    for (std::size_t i = 1; i < coeffs.size(); ++i)
        d[i - 1] = static_cast<double>(i) * coeffs[i];
    return d;
}

Complex newton_polish(const std::vector<Complex>& p, const std::vector<Complex>& dp,
                      Complex x, int iters) {
    for (int i = 0; i < iters; ++i) {
        const Complex f = poly_eval(p, x);
        const Complex df = poly_eval(dp, x);
        if (std::abs(df) < 1e-300) break;
        const Complex step = f / df;
        x -= step;
        if (std::abs(step) < 1e-15 * (1.0 + std::abs(x))) break;
    }
    return x;
}

struct Cluster {
    std::vector<Complex> members;
    Complex mean() const {
        Complex s{0.0, 0.0};
        for (const Complex& m : members) s += m;
        return s / static_cast<double>(members.size());
    }
};

}  // namespace

int RootMultiset::total_multiplicity() const {
    int s = 0;
    for (const auto& e : entries) s += e.multiplicity;
    return s;
}

std::vector<Complex> falling_factorial_expand(int k) {
    const std::vector<long long> exact = falling_factorial_exact(k);
    std::vector<Complex> out;
    out.reserve(exact.size());
    for (long long v : exact) out.emplace_back(static_cast<double>(v), 0.0);
    return out;
}

OperatorPoly to_delta(const EulerEquation& eq) {
    if (eq.coeffs.size() != static_cast<std::size_t>(eq.order) + 1)
        throw DomainError("to_delta: coefficient count does not match the order");

    const bool exact = eq.exact.size() == eq.coeffs.size();
    OperatorPoly out;
    out.basis = OperatorBasis::Delta;
    out.coeffs.assign(eq.coeffs.size(), Complex(0.0, 0.0));
    if (exact) out.exact.assign(eq.exact.size(), Rational(0, 1));

    for (int k = 0; k <= eq.order; ++k) {
        const std::vector<long long> ff = falling_factorial_exact(k);
        if (exact) {
            // In the shift form u = alpha x + beta the k-th coefficient picks
            // up alpha^k: (alpha x + beta)^k y^(k) = u^k alpha^k (d/du)^k y.
            Rational a = eq.exact[static_cast<std::size_t>(k)];
            if (eq.shift)
                for (int j = 0; j < k; ++j) a = a * eq.shift->first;
            for (std::size_t i = 0; i < ff.size(); ++i)
                out.exact[i] = out.exact[i] + a * Rational(ff[i], 1);
        } else {
            Complex a = eq.coeffs[static_cast<std::size_t>(k)];
            if (eq.shift)
                for (int j = 0; j < k; ++j) a *= eq.shift->first.to_double();
            for (std::size_t i = 0; i < ff.size(); ++i)
                out.coeffs[i] += a * static_cast<double>(ff[i]);
        }
    }
    if (exact)
        for (std::size_t i = 0; i < out.exact.size(); ++i)
            out.coeffs[i] = Complex(out.exact[i].to_double(), 0.0);
    return out;
}

RootMultiset char_roots(const OperatorPoly& p, double tol) {
    if (p.basis != OperatorBasis::Delta)
        throw Unsupported("char_roots expects the delta-basis polynomial");
    const int n = p.degree();
    if (n < 1) throw DomainError("char_roots: degree must be >= 1");
    const Complex lead = p.coeffs.back();
    if (std::abs(lead) == 0.0) throw DomainError("char_roots: zero leading coefficient");

    // Companion-matrix eigenvalues of the monic polynomial.
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        if (i + 1 < n) companion(i + 1, i) = 1.0;
        companion(i, n - 1) = -p.coeffs[static_cast<std::size_t>(i)] / lead;
    }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw ConvergenceFailure("companion eigenvalue iteration failed");

    std::vector<Complex> raw(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) raw[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);

    const std::vector<Complex> dp = poly_derivative(p.coeffs);
    for (Complex& r : raw) r = newton_polish(p.coeffs, dp, r, 12);

    // Companion eigenvalues of an exact m-fold root scatter by ~eps^(1/m),
    // beyond the nominal merge tolerance; detect clusters generously and let
    // the derivative test decide whether the multiplicity is real.
    const double detect = std::max(tol, 1e-5);
    std::vector<bool> used(raw.size(), false);
    std::vector<Cluster> clusters;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (used[i]) continue;
        Cluster c;
        c.members.push_back(raw[i]);
        used[i] = true;
        bool grew = true;
        while (grew) {
            grew = false;
            for (std::size_t j = 0; j < raw.size(); ++j) {
                if (used[j]) continue;
                for (const Complex& m : c.members)
                    if (std::abs(raw[j] - m) <= detect) {
                        c.members.push_back(raw[j]);
                        used[j] = true;
                        grew = true;
                        break;
                    }
            }
        }
        clusters.push_back(std::move(c));
    }

    // Precompute derivative ladder p, p', p'', ...
    std::vector<std::vector<Complex>> ladder{p.coeffs};
    for (int i = 0; i < n; ++i) ladder.push_back(poly_derivative(ladder.back()));

    RootMultiset out;
    for (const Cluster& c : clusters) {
        const int m = static_cast<int>(c.members.size());
        bool merged = false;
        if (m >= 2) {
            // Hypothesis: an m-fold root = simple root of p^(m-1).
            Complex r = newton_polish(ladder[static_cast<std::size_t>(m - 1)],
                                      ladder[static_cast<std::size_t>(m)], c.mean(), 40);
            bool ok = true;
            for (int j = 0; j < m; ++j) {
                const auto& pj = ladder[static_cast<std::size_t>(j)];
                if (std::abs(poly_eval(pj, r)) > 1e-12 * poly_eval_scale(pj, r)) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                out.entries.push_back({r, m, r});
                merged = true;
            }
        }
        if (!merged) {
            if (m == 1) {
                out.entries.push_back({c.members[0], 1, c.members[0]});
            } else {
                for (const Complex& r : c.members) out.entries.push_back({r, 1, r});
            }
        }
    }

    // Snap near-integer roots; keep the raw value.
    for (RootEntry& e : out.entries) {
        const long long nearest = numeric::nearest_integer(e.root.real());
        if (std::abs(e.root - Complex(static_cast<double>(nearest), 0.0)) < 1e-9)
            e.root = Complex(static_cast<double>(nearest), 0.0);
    }

    std::sort(out.entries.begin(), out.entries.end(), [](const RootEntry& a, const RootEntry& b) {
        if (a.root.real() != b.root.real()) return a.root.real() > b.root.real();
        return a.root.imag() > b.root.imag();
    });

    if (out.total_multiplicity() != n)
        throw ConvergenceFailure("multiplicities do not sum to the degree");
    return out;
}

namespace {

bool is_real(Complex z, double tol = 1e-10) { return std::abs(z.imag()) <= tol; }

std::string format_real(double v) {
    const long long n = numeric::nearest_integer(v);
    if (std::abs(v - static_cast<double>(n)) < 1e-12) return std::to_string(n);
    std::ostringstream s;
    s.precision(12);
    s << v;
    return s.str();
}

std::string format_exponent(Complex r) {
    if (is_real(r)) return format_real(r.real());
    std::ostringstream s;
    s << "(" << format_real(r.real()) << (r.imag() < 0 ?"-" : "+") << format_real(std::abs(r.imag()))
      << "i)";
    return s.str();
}

// One rendered factor list for a basis term; empty result means the constant 1.
std::vector<std::string> term_factors(const BasisTerm& t) {
    std::vector<std::string> factors;
    const double a = t.exponent.real();
    const double b = t.exponent.imag();

    if (t.kind == BasisTerm::Kind::plain) {
        if (!(is_real(t.exponent) && std::abs(a) < 1e-300)) {
            if (is_real(t.exponent) && std::abs(a - 1.0) < 1e-300)
                factors.push_back("x");
            else
                factors.push_back("x^" + format_exponent(t.exponent));
        }
    } else {
        if (std::abs(a) > 1e-300) {
            factors.push_back(std::abs(a - 1.0) < 1e-300 ? "x" : "x^" + format_real(a));
        }
        const std::string angle =
            (std::abs(b - 1.0) < 1e-300) ? "ln(x)" : format_real(b) + "*ln(x)";
        factors.push_back((t.kind == BasisTerm::Kind::cos ? "cos(" : "sin(") + angle + ")");
    }
    if (t.log_power == 1)
        factors.push_back("ln(x)");
    else if (t.log_power >= 2)
        factors.push_back("ln(x)^" + std::to_string(t.log_power));
    return factors;
}

}  // namespace

SolutionBasis solution_basis(const RootMultiset& roots, bool real_form) {
    SolutionBasis basis;
    basis.real_form = real_form;

    if (!real_form) {
        for (const RootEntry& e : roots.entries)
            for (int j = 0; j < e.multiplicity; ++j)
                basis.terms.push_back({e.root, j, BasisTerm::Kind::plain});
    } else {
        std::vector<bool> used(roots.entries.size(), false);
        for (std::size_t i = 0; i < roots.entries.size(); ++i) {
            if (used[i]) continue;
            const RootEntry& e = roots.entries[i];
            used[i] = true;
            if (is_real(e.root)) {
                for (int j = 0; j < e.multiplicity; ++j)
                    basis.terms.push_back({Complex(e.root.real(), 0.0), j, BasisTerm::Kind::plain});
                continue;
            }
            // find the conjugate partner
            bool paired = false;
            for (std::size_t k = i + 1; k < roots.entries.size(); ++k) {
                if (used[k]) continue;
                const RootEntry& o = roots.entries[k];
                if (o.multiplicity == e.multiplicity &&
                    std::abs(o.root - std::conj(e.root)) <= 1e-8) {
                    used[k] = true;
                    paired = true;
                    const Complex canonical(e.root.real(), std::abs(e.root.imag()));
                    for (int j = 0; j < e.multiplicity; ++j) {
                        basis.terms.push_back({canonical, j, BasisTerm::Kind::cos});
                        basis.terms.push_back({canonical, j, BasisTerm::Kind::sin});
                    }
                    break;
                }
            }
            if (!paired)
                throw RealFormUnavailable("root " + format_exponent(e.root) +
                                          " has no conjugate partner");
        }
    }

    std::ostringstream out;
    for (std::size_t i = 0; i < basis.terms.size(); ++i) {
        if (i) out << " + ";
        out << "c" << (i + 1);
        for (const std::string& f : term_factors(basis.terms[i])) out << "*" << f;
    }
    basis.rendered = out.str();
    return basis;
}

double verify_basis(const EulerEquation& eq, const SolutionBasis& basis,
                    std::span<const double> points) {
    for (double x : points)
        if (!(x >= 1e-3))
            throw DomainError("verify_basis: points must be positive (>= 1e-3)");

    // When the equation carries a shift the basis lives in u = alpha x + beta
    // and we verify sum a_k alpha^k u^k y^(k)(u) = 0 at u = points.
    std::vector<Complex> coeffs = eq.coeffs;
    if (eq.shift) {
        double alpha_pow = 1.0;
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            coeffs[k] *= alpha_pow;
            alpha_pow *= eq.shift->first.to_double();
        }
    }
    bool real_coeffs = true;
    for (const Complex& c : coeffs)
        if (std::abs(c.imag()) > 1e-14) real_coeffs = false;

    double worst = 0.0;
    for (const BasisTerm& t : basis.terms) {
        for (double x : points) {
            const double lx = std::log(x);
            const Complex rho = t.exponent;
            const int jmax = t.log_power;

            // y^(k)(x) = x^(rho-k) * sum_j c_j (ln x)^j with
            // c'_j = (rho-k) c_j + (j+1) c_{j+1}; the x^k weight cancels the
            // shift so L[y] = x^rho * sum_k a_k * polyval(c^(k), ln x).
            std::vector<Complex> c(static_cast<std::size_t>(jmax) + 1, Complex(0.0, 0.0));
            c[static_cast<std::size_t>(jmax)] = 1.0;

            numeric::CompensatedSum acc;
            for (std::size_t k = 0; k < coeffs.size(); ++k) {
                Complex val{0.0, 0.0};
                for (std::size_t j = c.size(); j-- > 0;) val = val * lx + c[j];
                acc.add(coeffs[k] * val);
                std::vector<Complex> next(c.size());
                const Complex shift_exp = rho - static_cast<double>(k);
                for (std::size_t j = 0; j < c.size(); ++j) {
                    next[j] = shift_exp * c[j];
                    if (j + 1 < c.size()) next[j] += static_cast<double>(j + 1) * c[j + 1];
                }
                c = std::move(next);
            }

            const Complex xr = std::pow(Complex(x, 0.0), rho);
            const Complex full = xr * acc.value();
            double resid;
            if (t.kind == BasisTerm::Kind::plain || !real_coeffs)
                resid = std::abs(full);
            else
                resid = (t.kind == BasisTerm::Kind::cos) ? std::abs(full.real())
                                                         : std::abs(full.imag());
            const double tmag =
                std::abs(xr) * std::pow(std::abs(lx), static_cast<double>(jmax));
            worst = std::max(worst, resid / std::max(1.0, tmag));
        }
    }
    return worst;
}

}  // namespace merofact::eulerops
