// Parser and renderer for the Euler-equation text grammar (EBNF in
// docs/equation-grammar.md):
//
//   equation  = expr "=" "0"
//   expr      = [sign] term { sign term }
//   term      = factor { "*" factor }        (exactly one y-factor per term)
//   factor    = coefficient | xpart | ypart
//   coefficient = number ["/" number]
//   xpart     = "x" ["^" integer] | "(" linear ")" ["^" integer]
//   linear    = [number "*"] "x" sign number
//   ypart     = "y" { "'" } | "y" "^" "(" integer ")"
//
// Coefficients are kept as exact rationals; the shift form (a*x+b)^k must be
// used consistently across the equation when present.

#include <cctype>
#include <numeric>
#include <sstream>

#include "merofact/errors.hpp"
#include "merofact/eulerops.hpp"

namespace merofact::eulerops {

namespace {

long long checked_gcd(long long a, long long b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c, const char* what) {
        if (!accept(c)) throw SyntaxError(std::string("expected ") + what, pos);
    }
};

bool starts_number(char c) { return std::isdigit(static_cast<unsigned char>(c)) || c == '.'; }

// Unsigned decimal literal as an exact rational.
Rational parse_number(Cursor& cur) {
    cur.skip_ws();
    const std::size_t start = cur.pos;
    std::string digits;
    while (cur.pos < cur.text.size() &&
           (std::isdigit(static_cast<unsigned char>(cur.text[cur.pos])) || cur.text[cur.pos] == '.'))
        digits.push_back(cur.text[cur.pos++]);
    if (digits.empty() || digits == ".") throw SyntaxError("expected a number", start);
    return Rational::from_decimal(digits);
}

long long parse_integer(Cursor& cur) {
    bool neg = false;
    if (cur.accept('-')) neg = true;
    const Rational r = parse_number(cur);
    if (r.den != 1) throw SyntaxError("expected an integer exponent", cur.pos);
    return neg ? -r.num : r.num;
}

struct ParsedTerm {
    Rational coefficient{1, 1};
    long long x_power = 0;
    long long shift_power = 0;
    std::optional<std::pair<Rational, Rational>> shift;
    int deriv_order = 0;
    bool has_y = false;
    std::size_t begin = 0, end = 0;
};

// "(" [number "*"] "x" sign number ")" — the alpha*x+beta shift base.
std::pair<Rational, Rational> parse_linear(Cursor& cur) {
    Rational alpha{1, 1};
    bool neg_alpha = cur.accept('-');
    if (starts_number(cur.peek())) {
        alpha = parse_number(cur);
        if (cur.accept('/')) alpha = alpha * Rational(1, parse_number(cur).num);
        cur.expect('*', "'*' between the slope and x");
    }
    if (neg_alpha) alpha = -alpha;
    cur.expect('x', "'x' in the shift form");
    Rational beta{0, 1};
    if (cur.peek() == '+' || cur.peek() == '-') {
        const bool neg = cur.accept('-');
        if (!neg) cur.accept('+');
        beta = parse_number(cur);
        if (cur.accept('/')) beta = beta * Rational(1, parse_number(cur).num);
        if (neg) beta = -beta;
    }
    return {alpha, beta};
}

ParsedTerm parse_term(Cursor& cur) {
    ParsedTerm term;
    term.begin = cur.pos;
    bool expect_factor = true;
    while (expect_factor) {
        cur.skip_ws();
        const char c = cur.peek();
        if (starts_number(c)) {
            Rational v = parse_number(cur);
            if (cur.accept('/')) {
                const Rational den = parse_number(cur);
                if (den.num == 0) throw SyntaxError("division by zero in coefficient", cur.pos);
                if (den.den != 1) throw SyntaxError("rational denominator must be an integer", cur.pos);
                v = v * Rational(1, den.num);
            }
            term.coefficient = term.coefficient * v;
        } else if (c == 'x') {
            cur.accept('x');
            long long k = 1;
            if (cur.accept('^')) k = parse_integer(cur);
            if (k < 0) throw SyntaxError("negative powers of x are not Euler form", cur.pos);
            term.x_power += k;
        } else if (c == '(') {
            cur.accept('(');
            const auto linear = parse_linear(cur);
            cur.expect(')', "')'");
            long long k = 1;
            if (cur.accept('^')) k = parse_integer(cur);
            if (k < 0) throw SyntaxError("negative shift powers are not Euler form", cur.pos);
            if (term.shift && !(term.shift->first == linear.first && term.shift->second == linear.second))
                throw SyntaxError("conflicting shift bases within a term", cur.pos);
            term.shift = linear;
            term.shift_power += k;
        } else if (c == 'y') {
            if (term.has_y) throw SyntaxError("more than one y in a term", cur.pos);
            cur.accept('y');
            term.has_y = true;
            int order = 0;
            while (cur.pos < cur.text.size() && cur.text[cur.pos] == '\'') {
                ++order;
                ++cur.pos;
            }
            if (order == 0 && cur.accept('^')) {
                cur.expect('(', "'(' after y^");
                const long long k = parse_integer(cur);
                cur.expect(')', "')' closing the derivative order");
                if (k < 0) throw SyntaxError("derivative order must be >= 0", cur.pos);
                order = static_cast<int>(k);
            }
            term.deriv_order = order;
        } else {
            throw SyntaxError("unexpected character in term", cur.pos);
        }
        expect_factor = cur.accept('*');
    }
    term.end = cur.pos;
    if (!term.has_y) throw SyntaxError("term has no y factor", term.begin);
    return term;
}

std::string term_text(std::string_view text, const ParsedTerm& t) {
    std::string s(text.substr(t.begin, t.end - t.begin));
    // trim
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    return s;
}

}  // namespace

Rational::Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw DomainError("Rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (const long long g = checked_gcd(num, den); g > 1) {
        num /= g;
        den /= g;
    }
}

Rational Rational::from_decimal(std::string_view digits) {
    const auto dot = digits.find('.');
    long long num = 0;
    long long den = 1;
    for (char c : digits) {
        if (c == '.') continue;
        num = num * 10 + (c - '0');
    }
    if (dot != std::string_view::npos)
        for (std::size_t i = dot + 1; i < digits.size(); ++i) den *= 10;
    return Rational(num, den);
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(num * o.den + o.num * den, den * o.den);
}
Rational Rational::operator-(const Rational& o) const {
    return Rational(num * o.den - o.num * den, den * o.den);
}
Rational Rational::operator*(const Rational& o) const {
    // cross-reduce before multiplying to delay overflow
    const long long g1 = checked_gcd(num, o.den);
    const long long g2 = checked_gcd(o.num, den);
    return Rational((num / g1) * (o.num / g2), (den / g2) * (o.den / g1));
}

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

EulerEquation parse_equation(std::string_view text) {
    Cursor cur{text};
    std::vector<std::pair<Rational, ParsedTerm>> signed_terms;

    bool first = true;
    while (true) {
        cur.skip_ws();
        if (cur.peek() == '=') break;
        Rational sign{1, 1};
        if (cur.accept('-'))
            sign = Rational(-1, 1);
        else if (!cur.accept('+') && !first)
            throw SyntaxError("expected '+', '-' or '='", cur.pos);
        if (cur.eof()) throw SyntaxError("unexpected end of input", cur.pos);
        ParsedTerm t = parse_term(cur);
        signed_terms.emplace_back(sign, std::move(t));
        first = false;
    }
    cur.expect('=', "'='");
    cur.skip_ws();
    if (!cur.accept('0')) throw SyntaxError("equation must end with '= 0'", cur.pos);
    if (!cur.eof()) throw SyntaxError("trailing input after '= 0'", cur.pos);
    if (signed_terms.empty()) throw SyntaxError("empty equation", 0);

    // Establish the (optional) global shift and check each term's Euler form.
    std::optional<std::pair<Rational, Rational>> shift;
    for (const auto& [sign, t] : signed_terms)
        if (t.shift) {
            if (shift && !(shift->first == t.shift->first && shift->second == t.shift->second))
                throw NotEulerForm("inconsistent shift bases: term '" + term_text(text, t) + "'");
            shift = t.shift;
        }

    int order = 0;
    for (const auto& [sign, t] : signed_terms) {
        const long long structural = t.shift ? t.shift_power : t.x_power;
        const bool mixed = t.shift && t.x_power != 0;
        if (mixed || structural != t.deriv_order)
            throw NotEulerForm("term '" + term_text(text, t) +
                               "': power does not match the derivative order");
        order = std::max(order, t.deriv_order);
    }
    if (order < 1) throw NotEulerForm("equation has no derivative of order >= 1");

    EulerEquation eq;
    eq.order = order;
    eq.exact.assign(static_cast<std::size_t>(order) + 1, Rational(0, 1));
    for (const auto& [sign, t] : signed_terms) {
        auto& slot = eq.exact[static_cast<std::size_t>(t.deriv_order)];
        slot = slot + sign * t.coefficient;
    }
    if (eq.exact.back().is_zero())
        throw NotEulerForm("leading coefficient a_n sums to zero");
    eq.coeffs.reserve(eq.exact.size());
    for (const Rational& r : eq.exact) eq.coeffs.emplace_back(r.to_double(), 0.0);
    eq.shift = shift;
    return eq;
}

std::string render_equation(const EulerEquation& eq) {
    std::ostringstream out;
    bool any = false;
    for (int k = eq.order; k >= 0; --k) {
        const bool exact = !eq.exact.empty();
        const Rational r = exact ? eq.exact[static_cast<std::size_t>(k)] : Rational(0, 1);
        const Complex c = eq.coeffs[static_cast<std::size_t>(k)];
        if ((exact && r.is_zero()) || (!exact && std::abs(c) == 0.0)) continue;

        double sign_probe = exact ? static_cast<double>(r.num) : c.real();
        if (!any)
            out << (sign_probe < 0 ? "-" : "");
        else
            out << (sign_probe < 0 ? " - " : " + ");
        any = true;

        std::string mag;
        if (exact) {
            Rational abs_r = r.num < 0 ? -r : r;
            mag = abs_r.str();
        } else {
            std::ostringstream m;
            m.precision(17);
            m << std::abs(c.real());
            mag = m.str();
        }

        std::string xpart;
        if (k >= 1) {
            std::string base = "x";
            if (eq.shift) {
                if (eq.shift->second.is_zero()) {
                    base = "(" + eq.shift->first.str() + "*x)";
                } else {
                    std::string beta = eq.shift->second.str();
                    base = "(" + eq.shift->first.str() + "*x" + (beta[0] == '-' ? "" : "+") + beta + ")";
                }
            }
            xpart = (k == 1) ? base : base + "^" + std::to_string(k);
        }

        std::string ypart = "y";
        if (k >= 1 && k <= 3)
            ypart += std::string(static_cast<std::size_t>(k), '\'');
        else if (k > 3)
            ypart += "^(" + std::to_string(k) + ")";

        if (mag != "1" || k == 0) out << mag << "*";
        if (!xpart.empty()) out << xpart << "*";
        out << ypart;
    }
    out << " = 0";
    return out.str();
}

}  // namespace merofact::eulerops
