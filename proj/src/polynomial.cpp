#include "gfn/polynomial.hpp"

#include <cmath>

namespace gfn {

Rational evaluate(const SPoly& p, std::span<const Rational> values) {
    if (static_cast<int>(values.size()) != p.nvars())
        throw Error("evaluation point arity mismatch");
    Rational sum(0);
    for (const auto& [e, c] : p.terms()) {
        Rational term = c;
        for (int i = 0; i < p.nvars(); ++i)
            if (e[i] != 0)
                term *= pow_rational(values[i], e[i]);
        sum += term;
    }
    return sum;
}

namespace {

double pow_si(double base, int exponent) {
    if (exponent == 0)
        return 1.0;
    bool inv = exponent < 0;
    unsigned n = static_cast<unsigned>(inv ? -exponent : exponent);
    double r = 1.0, b = base;
    while (n) {
        if (n & 1u)
            r *= b;
        b *= b;
        n >>= 1;
    }
    return inv ? 1.0 / r : r;
}

struct KahanSum {
    double sum = 0.0;
    double carry = 0.0;
    void add(double x) {
        const double y = x - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

} // namespace

double evaluate(const SPoly& p, std::span<const double> values) {
    if (static_cast<int>(values.size()) != p.nvars())
        throw Error("evaluation point arity mismatch");
    KahanSum acc;
    for (const auto& [e, c] : p.terms()) {
        double term = to_double(c);
        for (int i = 0; i < p.nvars(); ++i)
            if (e[i] != 0)
                term *= pow_si(values[i], e[i]);
        acc.add(term);
    }
    return acc.sum;
}

Rational evaluate(const MPoly& p, std::span<const Rational> alpha, std::span<const Rational> s) {
    if (static_cast<int>(alpha.size()) != p.nvars())
        throw Error("evaluation point arity mismatch");
    Rational sum(0);
    for (const auto& [e, c] : p.terms()) {
        Rational term = evaluate(c, s);
        for (int i = 0; i < p.nvars(); ++i)
            if (e[i] != 0)
                term *= pow_rational(alpha[i], e[i]);
        sum += term;
    }
    return sum;
}

double evaluate(const MPoly& p, std::span<const double> alpha, std::span<const double> s) {
    if (static_cast<int>(alpha.size()) != p.nvars())
        throw Error("evaluation point arity mismatch");
    KahanSum acc;
    for (const auto& [e, c] : p.terms()) {
        double term = evaluate(c, s);
        for (int i = 0; i < p.nvars(); ++i)
            if (e[i] != 0)
                term *= pow_si(alpha[i], e[i]);
        acc.add(term);
    }
    return acc.sum;
}

MPoly specialize_s(const MPoly& p, std::span<const Rational> s) {
    MPoly out(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        SPoly ct = SPoly::constant(0, evaluate(c, s));
        out.add_term(e, ct);
    }
    return out;
}

MPoly alpha_shift(const MPoly& p, const Exponents& shift) {
    if (static_cast<int>(shift.size()) != p.nvars())
        throw Error("alpha_shift arity mismatch");
    MPoly out(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        Exponents t = e;
        for (std::size_t i = 0; i < t.size(); ++i)
            t[i] += shift[i];
        out.add_term(t, c);
    }
    return out;
}

MPoly mpoly_constant(int alpha_vars, int s_vars, const Rational& c) {
    return MPoly::constant(alpha_vars, SPoly::constant(s_vars, c));
}

MPoly alpha_variable(int alpha_vars, int s_vars, int index) {
    return MPoly::variable(alpha_vars, index, SPoly::constant(s_vars, Rational(1)));
}

MPoly s_symbol(int alpha_vars, int s_vars, int index) {
    return MPoly::constant(alpha_vars, SPoly::variable(s_vars, index, Rational(1)));
}

MPoly scale(const MPoly& p, const Rational& c) {
    return p.scaled(SPoly::constant(p.is_zero() ? 0 : p.terms().begin()->second.nvars(), c));
}

namespace {

std::string monomial_text(const Exponents& e, const std::function<std::string(int)>& name) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0)
            continue;
        if (!out.empty())
            out += '*';
        out += name(static_cast<int>(i));
        if (e[i] != 1)
            out += '^' + std::to_string(e[i]);
    }
    return out;
}

} // namespace

std::string to_string(const SPoly& p, const std::function<std::string(int)>& var_name) {
    if (p.is_zero())
        return "0";
    std::string out;
    for (const auto& [e, c] : p.terms()) {
        Rational a = c;
        if (out.empty()) {
            if (a < 0) {
                out += '-';
                a = -a;
            }
        } else {
            out += (a < 0) ? '-' : '+';
            if (a < 0)
                a = -a;
        }
        const std::string mono = monomial_text(e, var_name);
        if (mono.empty())
            out += to_string(a);
        else if (a == 1)
            out += mono;
        else
            out += to_string(a) + '*' + mono;
    }
    return out;
}

std::string to_string(const MPoly& p, const std::function<std::string(int)>& alpha_name,
                      const std::function<std::string(int)>& s_name) {
    if (p.is_zero())
        return "0";
    std::string out;
    for (const auto& [e, c] : p.terms()) {
        const std::string mono = monomial_text(e, alpha_name);
        std::string coef = to_string(c, s_name);
        const bool multi_term = c.term_count() > 1;
        if (!out.empty() && coef.front() != '-')
            out += '+';
        if (mono.empty()) {
            out += multi_term ? '(' + coef + ')' : coef;
        } else if (coef == "1") {
            out += mono;
        } else if (coef == "-1") {
            out += '-' + mono;
        } else if (multi_term) {
            out += '(' + coef + ")*" + mono;
        } else {
            out += coef + '*' + mono;
        }
    }
    return out;
}

std::string alpha_var_name(int index) {
    return "a" + std::to_string(index + 1);
}

} // namespace gfn
