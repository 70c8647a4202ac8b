#include "gfn/integrand.hpp"

#include "gfn/errors.hpp"

#include <cmath>
#include <numeric>

namespace gfn {

double ParametricIntegrand::gamma_prefactor() const {
    double log_num = std::lgamma(to_double(gamma_numerator));
    double log_den = 0.0;
    for (const auto& q : gamma_denominators)
        log_den += std::lgamma(to_double(q));
    return std::exp(log_num - log_den);
}

std::vector<int> choose_n(const FeynmanGraph& g) {
    const Rational lam = g.lambda();
    std::vector<int> n(g.edge_count(), 0);
    for (int e = 0; e < g.edge_count(); ++e) {
        const Rational lv = lam * g.edge(e).weight;
        if (lv > 0)
            continue;
        n[e] = static_cast<int>(floor_long(-lv)) + 1;
    }
    return n;
}

void validate_n(const FeynmanGraph& g, const std::vector<int>& n) {
    if (static_cast<int>(n.size()) != g.edge_count())
        throw PreconditionError("derivative order list must cover every edge");
    const Rational lam = g.lambda();
    for (int e = 0; e < g.edge_count(); ++e) {
        if (n[e] < 0)
            throw PreconditionError("derivative order must be non-negative on edge '" +
                                    g.edge(e).name + "'");
        if (!(Rational(n[e]) + lam * g.edge(e).weight > 0))
            throw PreconditionError("n_e + lambda*nu_e must be positive on edge '" +
                                    g.edge(e).name + "'");
    }
}

namespace {

void require_convergent(const FeynmanGraph& g) {
    ConvergenceReport report = check_convergence(g);
    if (!report.convergent())
        throw DivergenceError("graph is " + to_string(report.verdict) +
                                  "; the parametric representation requires convergence",
                              std::move(report));
}

} // namespace

ParametricIntegrand build_dual_integrand(const FeynmanGraph& g) {
    return build_dual_integrand(g, choose_n(g));
}

ParametricIntegrand build_dual_integrand(const FeynmanGraph& g, std::vector<int> n) {
    validate_n(g, n);
    require_convergent(g);

    const int ev = g.edge_count();
    const int sv = g.s_symbol_count();
    const Rational m = superficial_degree(g);
    const Rational lam = g.lambda();

    ParametricIntegrand out;
    out.graph = g;
    out.representation = Representation::Dual;
    out.n = std::move(n);
    out.phi = phi_tilde(g);
    out.psi = dual_forest_polynomial(g, VertexPartition::singletons(g));
    out.numerator = mpoly_constant(ev, sv, Rational(1));

    // Apply the derivatives through the closed quotient recursion
    //   d_e(P / (phi^a psi^b)) =
    //     (d_e P * phi * psi - a P d_e phi * psi - b P phi * d_e psi)
    //     / (phi^{a+1} psi^{b+1}),
    // lifting both exponents by one per applied derivative.
    Rational a = m;
    Rational b = g.dimension() / 2 - m;
    int total = 0;
    for (int e = 0; e < ev; ++e) {
        for (int k = 0; k < out.n[e]; ++k) {
            MPoly dP = out.numerator.derivative(e);
            MPoly term = dP * out.phi * out.psi;
            term = term - scale(out.numerator * out.phi.derivative(e) * out.psi, a);
            term = term - scale(out.numerator * out.phi * out.psi.derivative(e), b);
            out.numerator = std::move(term);
            a += 1;
            b += 1;
            ++total;
        }
    }
    out.a_exponent = a;
    out.b_exponent = b;
    out.sign = (total % 2 == 0) ? 1 : -1;
    out.gamma_numerator = m;
    out.mu.reserve(ev);
    for (int e = 0; e < ev; ++e) {
        const Rational nv = Rational(out.n[e]) + lam * g.edge(e).weight;
        out.gamma_denominators.push_back(nv);
        out.mu.push_back(nv - 1);
    }
    return out;
}

ParametricIntegrand build_direct_integrand(const FeynmanGraph& g) {
    const Rational lam = g.lambda();
    for (const auto& e : g.edges())
        if (!(e.weight > 0))
            throw PreconditionError(
                "direct representation requires positive weights; edge '" + e.name +
                "' violates this (use the dual representation instead)");
    require_convergent(g);

    const int ev = g.edge_count();
    const int sv = g.s_symbol_count();
    const Rational m = superficial_degree(g);
    const int vint = g.internal_count();

    ParametricIntegrand out;
    out.graph = g;
    out.representation = Representation::Direct;
    out.n.assign(ev, 0);
    out.phi = cremona_transform(phi_tilde(g), ev, vint + 1);
    out.psi = cremona_transform(dual_forest_polynomial(g, VertexPartition::singletons(g)), ev, vint);
    out.numerator = mpoly_constant(ev, sv, Rational(1));
    out.a_exponent = m;
    out.b_exponent = g.dimension() / 2 - m;
    out.sign = 1;
    out.gamma_numerator = m;
    for (int e = 0; e < ev; ++e) {
        const Rational lv = lam * g.edge(e).weight;
        out.gamma_denominators.push_back(lv);
        out.mu.push_back(g.dimension() / 2 - lv - 1);
    }
    return out;
}

ChartedIntegrand::ChartedIntegrand(ParametricIntegrand integrand, int chart_edge)
    : integrand_(std::move(integrand)), chart_edge_(chart_edge) {
    if (chart_edge_ < 0 || chart_edge_ >= integrand_.graph.edge_count())
        throw PreconditionError("chart edge is not an edge of the graph");
    for (int e = 0; e < integrand_.graph.edge_count(); ++e)
        if (e != chart_edge_)
            free_edges_.push_back(e);
}

ChartedIntegrand fix_chart(ParametricIntegrand integrand, int chart_edge) {
    return ChartedIntegrand(std::move(integrand), chart_edge);
}

double ChartedIntegrand::alpha_value(std::span<const double> alpha,
                                     std::span<const double> s) const {
    const double num = integrand_.numerator.is_zero()
                           ? 0.0
                           : evaluate(integrand_.numerator, alpha, s);
    const double phi = evaluate(integrand_.phi, alpha, s);
    const double psi = evaluate(integrand_.psi, alpha, s);
    double weight = 1.0;
    for (std::size_t e = 0; e < alpha.size(); ++e) {
        const double mu = to_double(integrand_.mu[e]);
        if (mu != 0.0)
            weight *= std::pow(alpha[e], mu);
    }
    return integrand_.sign * num * weight /
           (std::pow(phi, to_double(integrand_.a_exponent)) *
            std::pow(psi, to_double(integrand_.b_exponent)));
}

double ChartedIntegrand::value(std::span<const double> t, std::span<const double> s) const {
    if (static_cast<int>(t.size()) != dimension())
        throw Error("cube point dimension mismatch");
    std::vector<double> alpha(integrand_.graph.edge_count(), 1.0);
    double jac = 1.0;
    for (int i = 0; i < dimension(); ++i) {
        const double one_m = 1.0 - t[i];
        alpha[free_edges_[i]] = t[i] / one_m;
        jac /= one_m * one_m;
    }
    return alpha_value(alpha, s) * jac;
}

double CompiledIntegrand::FlatPoly::eval(std::span<const double> alpha) const {
    double sum = 0.0;
    for (std::size_t m = 0; m < coef.size(); ++m) {
        double term = coef[m];
        for (int f = offsets[m]; f < offsets[m + 1]; ++f) {
            const auto& [e, k] = factors[f];
            double base = alpha[e];
            for (int i = 1; i < k; ++i)
                base *= alpha[e];
            term *= base;
        }
        sum += term;
    }
    return sum;
}

CompiledIntegrand::FlatPoly CompiledIntegrand::compile(const MPoly& p,
                                                       std::span<const double> s) const {
    FlatPoly flat;
    flat.offsets.push_back(0);
    for (const auto& [e, c] : p.terms()) {
        flat.coef.push_back(evaluate(c, s));
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0)
                flat.factors.emplace_back(static_cast<int>(i), e[i]);
        flat.offsets.push_back(static_cast<int>(flat.factors.size()));
    }
    return flat;
}

CompiledIntegrand::CompiledIntegrand(const ChartedIntegrand& charted, std::span<const double> s) {
    const ParametricIntegrand& in = charted.integrand();
    dim_ = charted.dimension();
    edges_ = in.graph.edge_count();
    chart_edge_ = charted.chart_edge();
    free_edges_ = charted.free_edges();
    a_exp_ = to_double(in.a_exponent);
    b_exp_ = to_double(in.b_exponent);
    sign_ = in.sign;
    mu_.resize(edges_);
    for (int e = 0; e < edges_; ++e) {
        mu_[e] = to_double(in.mu[e]);
        if (mu_[e] != 0.0)
            mu_nonzero_.push_back(e);
    }
    num_ = compile(in.numerator, s);
    phi_ = compile(in.phi, s);
    psi_ = compile(in.psi, s);
    numerator_is_one_ =
        num_.coef.size() == 1 && num_.coef[0] == 1.0 && num_.factors.empty();
}

double CompiledIntegrand::value(std::span<const double> t) const {
    double alpha_buf[64];
    if (edges_ > 64)
        throw Error("too many edges for the compiled evaluator");
    std::span<double> alpha(alpha_buf, edges_);
    alpha[chart_edge_] = 1.0;
    double jac = 1.0;
    for (int i = 0; i < dim_; ++i) {
        const double one_m = 1.0 - t[i];
        alpha[free_edges_[i]] = t[i] / one_m;
        jac /= one_m * one_m;
    }
    const double phi = phi_.eval(alpha);
    const double psi = psi_.eval(alpha);
    double value = sign_ * jac;
    if (!numerator_is_one_)
        value *= num_.eval(alpha);
    for (int e : mu_nonzero_)
        value *= std::pow(alpha[e], mu_[e]);
    value /= std::pow(phi, a_exp_);
    if (b_exp_ != 0.0)
        value /= std::pow(psi, b_exp_);
    return value;
}

} // namespace gfn
