#include "merofact/numeric.hpp"

#include <algorithm>
#include <queue>

namespace merofact::numeric {

namespace {

// Gauss-Kronrod 7-15 nodes/weights on [-1, 1].
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct PanelResult {
    Complex integral{0.0, 0.0};
    double err = 0.0;
};

PanelResult gk15(const std::function<Complex(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);

    Complex fv[15];
    for (int j = 0; j < 7; ++j) {
        fv[j] = f(c - h * kXgk[j]);
        fv[14 - j] = f(c + h * kXgk[j]);
    }
    fv[7] = f(c);

    Complex resk{0.0, 0.0};
    Complex resg{0.0, 0.0};
    for (int j = 0; j < 7; ++j) {
        resk += kWgk[j] * (fv[j] + fv[14 - j]);
        if (j % 2 == 1) resg += kWg[j / 2] * (fv[j] + fv[14 - j]);
    }
    resk += kWgk[7] * fv[7];
    resg += kWg[3] * fv[7];

    PanelResult r;
    r.integral = resk * h;
    r.err = std::abs((resk - resg) * h);
    return r;
}

struct Panel {
    double a, b;
    PanelResult res;
    bool operator<(const Panel& o) const { return res.err < o.res.err; }
};

}  // namespace

Complex integrate(const std::function<Complex(double)>& f, double a, double b,
                  double abs_tol, double rel_tol, int max_panels) {
    std::priority_queue<Panel> panels;
    Panel first{a, b, gk15(f, a, b)};
    if (!is_finite(first.res.integral))
        throw NonFinite("integrand returned a non-finite value on [" +
                        std::to_string(a) + ", " + std::to_string(b) + "]");
    panels.push(first);

    Complex total = first.res.integral;
    double total_err = first.res.err;
    int used = 1;

    while (total_err > std::max(abs_tol, rel_tol * std::abs(total))) {
        if (used >= max_panels)
            throw QuadratureFailure("adaptive quadrature did not reach tolerance within " +
                                    std::to_string(max_panels) + " panels");
        Panel worst = panels.top();
        panels.pop();
        total -= worst.res.integral;
        total_err -= worst.res.err;

        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b)
            throw QuadratureFailure("panel collapsed below machine resolution");
        Panel left{worst.a, mid, gk15(f, worst.a, mid)};
        Panel right{mid, worst.b, gk15(f, mid, worst.b)};
        if (!is_finite(left.res.integral) || !is_finite(right.res.integral))
            throw NonFinite("integrand returned a non-finite value during refinement");

        total += left.res.integral + right.res.integral;
        total_err += left.res.err + right.res.err;
        panels.push(left);
        panels.push(right);
        ++used;
    }
    return total;
}

}  // namespace merofact::numeric
