#pragma once

#include "gfn/errors.hpp"
#include "gfn/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

namespace gfn {

/// Dense exponent vector, one slot per variable of the ring.
using Exponents = std::vector<int>;

/// Graded lexicographic order: lower total degree first; within a degree the
/// lexicographically larger vector comes first, so a1*a2 precedes a1*a3
/// precedes a2*a3. Fixes the canonical serialization order.
struct GradedLexLess {
    bool operator()(const Exponents& a, const Exponents& b) const {
        const int da = std::accumulate(a.begin(), a.end(), 0);
        const int db = std::accumulate(b.begin(), b.end(), 0);
        if (da != db)
            return da < db;
        return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
    }
};

inline bool coef_is_zero(const Rational& c) { return c == 0; }
inline Rational coef_negate(const Rational& c) { return -c; }
inline Rational divide_exact(const Rational& a, const Rational& b) {
    if (b == 0)
        throw Error("division by zero coefficient");
    return a / b;
}

/// Sparse multivariate polynomial in canonical form: no zero coefficients,
/// terms ordered by GradedLexLess. Coef is any exact commutative ring with
/// coef_is_zero / coef_negate / divide_exact; used as Polynomial<Rational>
/// for the s_{ij} tier and Polynomial<Polynomial<Rational>> for the alpha tier.
template <class Coef>
class Polynomial {
public:
    using TermMap = std::map<Exponents, Coef, GradedLexLess>;

    Polynomial() : nvars_(0) {}
    explicit Polynomial(int nvars) : nvars_(nvars) {}

    static Polynomial constant(int nvars, Coef value) {
        Polynomial p(nvars);
        if (!coef_is_zero(value))
            p.terms_.emplace(Exponents(nvars, 0), std::move(value));
        return p;
    }

    static Polynomial variable(int nvars, int index, Coef unit) {
        Polynomial p(nvars);
        Exponents e(nvars, 0);
        e.at(index) = 1;
        p.terms_.emplace(std::move(e), std::move(unit));
        return p;
    }

    static Polynomial monomial(int nvars, Exponents expo, Coef value) {
        Polynomial p(nvars);
        if (!coef_is_zero(value))
            p.terms_.emplace(std::move(expo), std::move(value));
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    bool operator==(const Polynomial& rhs) const {
        return nvars_ == rhs.nvars_ && terms_ == rhs.terms_;
    }

    void add_term(const Exponents& expo, const Coef& value) {
        if (coef_is_zero(value))
            return;
        auto [it, fresh] = terms_.try_emplace(expo, value);
        if (!fresh) {
            it->second = it->second + value;
            if (coef_is_zero(it->second))
                terms_.erase(it);
        }
    }

    Polynomial operator+(const Polynomial& rhs) const {
        check_arity(rhs);
        Polynomial out = *this;
        for (const auto& [e, c] : rhs.terms_)
            out.add_term(e, c);
        return out;
    }

    Polynomial operator-() const {
        Polynomial out(nvars_);
        for (const auto& [e, c] : terms_)
            out.terms_.emplace(e, coef_negate(c));
        return out;
    }

    Polynomial operator-(const Polynomial& rhs) const { return *this + (-rhs); }

    Polynomial operator*(const Polynomial& rhs) const {
        check_arity(rhs);
        Polynomial out(nvars_);
        for (const auto& [ea, ca] : terms_) {
            for (const auto& [eb, cb] : rhs.terms_) {
                Exponents e(nvars_);
                for (int i = 0; i < nvars_; ++i)
                    e[i] = ea[i] + eb[i];
                out.add_term(e, ca * cb);
            }
        }
        return out;
    }

    Polynomial scaled(const Coef& factor) const {
        Polynomial out(nvars_);
        if (coef_is_zero(factor))
            return out;
        for (const auto& [e, c] : terms_) {
            Coef v = c * factor;
            if (!coef_is_zero(v))
                out.terms_.emplace(e, std::move(v));
        }
        return out;
    }

    /// Formal partial derivative with respect to variable `var`.
    Polynomial derivative(int var) const {
        Polynomial out(nvars_);
        for (const auto& [e, c] : terms_) {
            if (e.at(var) == 0)
                continue;
            Exponents d = e;
            d[var] -= 1;
            out.add_term(d, c * e[var]);
        }
        return out;
    }

    /// Minimum total exponent over the selected variables. Requires p != 0.
    int low_degree(std::span<const int> vars) const {
        require_nonzero("low_degree");
        int best = -1;
        for (const auto& [e, c] : terms_) {
            int d = 0;
            for (int v : vars)
                d += e.at(v);
            if (best < 0 || d < best)
                best = d;
        }
        return best;
    }

    /// Maximum total exponent over the selected variables. Requires p != 0.
    int degree(std::span<const int> vars) const {
        require_nonzero("degree");
        int best = 0;
        for (const auto& [e, c] : terms_) {
            int d = 0;
            for (int v : vars)
                d += e.at(v);
            best = std::max(best, d);
        }
        return best;
    }

    int total_degree() const {
        require_nonzero("total_degree");
        // map order is graded: the last term carries the maximal degree
        const Exponents& e = terms_.rbegin()->first;
        return std::accumulate(e.begin(), e.end(), 0);
    }

    /// Degree k if every term has total degree k, otherwise nullopt.
    std::optional<int> homogeneous_degree() const {
        require_nonzero("homogeneous_degree");
        const auto sum = [](const Exponents& e) {
            return std::accumulate(e.begin(), e.end(), 0);
        };
        const int first = sum(terms_.begin()->first);
        const int last = sum(terms_.rbegin()->first);
        return first == last ? std::optional<int>(first) : std::nullopt;
    }

    const std::pair<const Exponents, Coef>& leading_term() const {
        require_nonzero("leading_term");
        return *terms_.rbegin();
    }

    void check_arity(const Polynomial& rhs) const {
        if (nvars_ != rhs.nvars_)
            throw Error("polynomial arity mismatch");
    }

    void require_nonzero(const char* op) const {
        if (terms_.empty())
            throw Error(std::string(op) + " undefined for the zero polynomial");
    }

private:
    int nvars_;
    TermMap terms_;
};

/// s_{ij}-tier polynomial: rational coefficients.
using SPoly = Polynomial<Rational>;
/// alpha-tier polynomial whose coefficients live in the s_{ij} tier.
using MPoly = Polynomial<SPoly>;

inline bool coef_is_zero(const SPoly& p) { return p.is_zero(); }
inline SPoly coef_negate(const SPoly& p) { return -p; }
inline SPoly operator*(const SPoly& p, int k) { return p.scaled(Rational(k)); }

/// Exact quotient a / b in the polynomial ring. Throws if b does not divide a.
template <class Coef>
Polynomial<Coef> divide_exact(const Polynomial<Coef>& a, const Polynomial<Coef>& b) {
    a.check_arity(b);
    if (b.is_zero())
        throw Error("polynomial division by zero");
    Polynomial<Coef> quotient(a.nvars());
    Polynomial<Coef> rem = a;
    const auto& [eb, cb] = b.leading_term();
    while (!rem.is_zero()) {
        const auto& [er, cr] = rem.leading_term();
        Exponents q(a.nvars());
        for (int i = 0; i < a.nvars(); ++i) {
            q[i] = er[i] - eb[i];
            if (q[i] < 0)
                throw Error("polynomial division is not exact");
        }
        Coef qc = divide_exact(cr, cb);
        auto t = Polynomial<Coef>::monomial(a.nvars(), std::move(q), std::move(qc));
        quotient = quotient + t;
        rem = rem - t * b;
    }
    return quotient;
}

/// Exact evaluation of an s-tier polynomial at rational arguments.
Rational evaluate(const SPoly& p, std::span<const Rational> values);

/// Floating evaluation with compensated (Kahan) summation over monomials.
double evaluate(const SPoly& p, std::span<const double> values);

/// Two-tier evaluation: alpha values for the outer ring, s values for the
/// coefficients. Exact and floating flavors.
Rational evaluate(const MPoly& p, std::span<const Rational> alpha, std::span<const Rational> s);
double evaluate(const MPoly& p, std::span<const double> alpha, std::span<const double> s);

/// MPoly with every s-coefficient specialized to a rational constant.
MPoly specialize_s(const MPoly& p, std::span<const Rational> s);

/// Multiplies p by the pure-alpha monomial with the given exponents.
MPoly alpha_shift(const MPoly& p, const Exponents& shift);

MPoly mpoly_constant(int alpha_vars, int s_vars, const Rational& c);
MPoly alpha_variable(int alpha_vars, int s_vars, int index);
/// The alpha-tier constant s_k (a degree-one s-tier coefficient).
MPoly s_symbol(int alpha_vars, int s_vars, int index);
MPoly scale(const MPoly& p, const Rational& c);

std::string to_string(const SPoly& p, const std::function<std::string(int)>& var_name);
std::string to_string(const MPoly& p, const std::function<std::string(int)>& alpha_name,
                      const std::function<std::string(int)>& s_name);

/// Default variable spellings: a1, a2, ... for edges.
std::string alpha_var_name(int index);

} // namespace gfn
