#include "merofact/registry.hpp"

#include <cmath>
#include <map>
#include <optional>

#include "merofact/dirichlet.hpp"
#include "merofact/errors.hpp"
#include "merofact/kurepa.hpp"
#include "merofact/numeric.hpp"
#include "merofact/specfun.hpp"

namespace merofact {

namespace {

using kurepa::Family;
using meromorphic::FunctionHandle;
using meromorphic::PoleSet;

// Suppliers key poles by location. On-axis integer points are recognized to
// 1e-9; nullopt means "no closed form here".
std::optional<long long> as_integer_point(Complex p) {
    const long long n = numeric::nearest_integer(p.real());
    if (numeric::near_integer(p, n, 1e-9)) return n;
    return std::nullopt;
}

constexpr double kInvE = 0.36787944117144232159552377016146087;

FunctionHandle make_gamma() {
    FunctionHandle h;
    h.name = "gamma";
    h.evaluator = [](Complex z) { return specfun::gamma(z); };
    h.poles = PoleSet::integers([](long long n) { return n <= 0; });
    h.closed_pp = [](Complex p) -> std::optional<Complex> {
        if (auto m = as_integer_point(p)) return kurepa::pp_closed(Family::Gamma, -*m);
        return std::nullopt;
    };
    h.closed_res = [](Complex p) -> std::optional<Complex> {
        if (auto m = as_integer_point(p); m && *m <= 0)
            return kurepa::res_closed(Family::Gamma, -*m);
        return std::nullopt;
    };
    return h;
}

FunctionHandle make_digamma() {
    FunctionHandle h;
    h.name = "digamma";
    h.evaluator = [](Complex z) { return specfun::digamma(z); };
    h.poles = PoleSet::integers([](long long n) { return n <= 0; });
    return h;
}

FunctionHandle make_h1() {
    FunctionHandle h;
    h.name = "H1";
    h.evaluator = [](Complex z) { return specfun::trigamma_h1(z); };
    h.poles = PoleSet::integers([](long long n) { return n <= 0; });  // double poles
    return h;
}

FunctionHandle make_k() {
    FunctionHandle h;
    h.name = "K";
    h.evaluator = [](Complex z) { return kurepa::kurepa(z, kurepa::Variant::K); };
    h.poles = PoleSet::integers([](long long n) { return n == -1 || n <= -3; });
    h.closed_pp = [](Complex p) -> std::optional<Complex> {
        if (auto m = as_integer_point(p)) {
            if (*m >= 0) return kurepa::kurepa(Complex(static_cast<double>(*m), 0.0),
                                               kurepa::Variant::K);
            if (*m == -2) return Complex(1.0, 0.0);
            return kurepa::pp_closed(Family::K, -*m);
        }
        return std::nullopt;
    };
    h.closed_res = [](Complex p) -> std::optional<Complex> {
        if (auto m = as_integer_point(p); m && (*m == -1 || *m <= -3))
            return kurepa::res_closed(Family::K, -*m);
        return std::nullopt;
    };
    return h;
}

FunctionHandle make_k1() {
    FunctionHandle h;
    h.name = "K1";
    h.evaluator = [](Complex z) { return kurepa::kurepa(z, kurepa::Variant::K1); };
    h.poles = PoleSet::integers([](long long) { return true; });
    h.closed_pp = [](Complex p) -> std::optional<Complex> {
        if (auto m = as_integer_point(p)) return kurepa::pp_closed(Family::K1, *m);
        return std::nullopt;
    };
    // res K1(m) = res K(m) + 1/e at every integer m: the tail of the Gamma
    // series contributes sum_{j>=0} (-1)^j/j!.
    h.closed_res = [](Complex p) -> std::optional<Complex> {
        if (auto m = as_integer_point(p)) {
            Complex res_k{0.0, 0.0};
            if (*m == -1 || *m <= -3) res_k = kurepa::res_closed(Family::K, -*m);
            return res_k + Complex(kInvE, 0.0);
        }
        return std::nullopt;
    };
    return h;
}

FunctionHandle make_a() {
    FunctionHandle h;
    h.name = "A";
    h.evaluator = [](Complex z) { return kurepa::altkurepa(z, kurepa::Variant::A); };
    h.poles = PoleSet::integers([](long long n) { return n <= -2; });
    h.closed_pp = [](Complex p) -> std::optional<Complex> {
        if (auto m = as_integer_point(p)) {
            if (*m >= -1)
                return kurepa::altkurepa(Complex(static_cast<double>(*m), 0.0),
                                         kurepa::Variant::A);
            return kurepa::pp_closed(Family::A, -*m);
        }
        return std::nullopt;
    };
    h.closed_res = [](Complex p) -> std::optional<Complex> {
        if (auto m = as_integer_point(p); m && *m <= -2)
            return kurepa::res_closed(Family::A, -*m);
        return std::nullopt;
    };
    return h;
}

FunctionHandle make_a1() {
    FunctionHandle h;
    h.name = "A1";
    h.evaluator = [](Complex z) { return kurepa::altkurepa(z, kurepa::Variant::A1); };
    h.poles = PoleSet::integers([](long long) { return true; });
    h.closed_pp = [](Complex p) -> std::optional<Complex> {
        if (auto m = as_integer_point(p)) return kurepa::pp_closed(Family::A1, *m);
        return std::nullopt;
    };
    // res A1(m) = res A(m) - (-1)^m e.
    h.closed_res = [](Complex p) -> std::optional<Complex> {
        if (auto m = as_integer_point(p)) {
            Complex res_a{0.0, 0.0};
            if (*m <= -2) res_a = kurepa::res_closed(Family::A, -*m);
            const double sign = (*m % 2 == 0) ? 1.0 : -1.0;
            return res_a - Complex(sign * numeric::e_const, 0.0);
        }
        return std::nullopt;
    };
    return h;
}

FunctionHandle make_zeta() {
    FunctionHandle h;
    h.name = "zeta";
    h.evaluator = [](Complex s) { return dirichlet::zeta(s); };
    h.poles = PoleSet::at({Complex(1.0, 0.0)});
    h.closed_pp = [](Complex p) -> std::optional<Complex> {
        if (std::abs(p - Complex(1.0, 0.0)) < 1e-9)
            return Complex(numeric::euler_gamma, 0.0);
        return std::nullopt;
    };
    h.closed_res = [](Complex p) -> std::optional<Complex> {
        if (std::abs(p - Complex(1.0, 0.0)) < 1e-9) return Complex(1.0, 0.0);
        return std::nullopt;
    };
    return h;
}

FunctionHandle make_eta() {
    FunctionHandle h;
    h.name = "eta";
    h.evaluator = [](Complex s) { return dirichlet::eta(s); };
    h.poles = PoleSet::none();
    return h;
}

FunctionHandle make_beta() {
    FunctionHandle h;
    h.name = "beta";
    h.evaluator = [](Complex s) { return dirichlet::beta_fn(s); };
    h.poles = PoleSet::none();
    return h;
}

const std::map<std::string, FunctionHandle>& registry() {
    static const std::map<std::string, FunctionHandle> table = [] {
        std::map<std::string, FunctionHandle> t;
        for (FunctionHandle h : {make_gamma(), make_digamma(), make_h1(), make_k(), make_k1(),
                                 make_a(), make_a1(), make_zeta(), make_eta(), make_beta()})
            t.emplace(h.name, std::move(h));
        return t;
    }();
    return table;
}

}  // namespace

const meromorphic::FunctionHandle& registry_get(const std::string& name) {
    const auto& t = registry();
    auto it = t.find(name);
    if (it == t.end()) throw UnknownFunction("no registered function named '" + name + "'");
    return it->second;
}

std::vector<std::string> registry_names() {
    std::vector<std::string> names;
    for (const auto& [name, _] : registry()) names.push_back(name);
    return names;
}

}  // namespace merofact
