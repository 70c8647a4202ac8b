#pragma once

#include "gfn/convergence.hpp"
#include "gfn/forest.hpp"
#include "gfn/graph.hpp"

#include <map>
#include <string>
#include <vector>

namespace gfn {

enum class Representation { Dual, Direct };

/// The symbolic integrand of the parametric representation after applying the
/// edge derivatives: sign * numerator / (phi^A psi^B) * prod_e alpha_e^mu_e,
/// together with the exact gamma-prefactor data. In the dual representation
/// phi/psi are the dual polynomials (phi-tilde, psi-tilde); in the direct one
/// their Cremona transforms.
struct ParametricIntegrand {
    FeynmanGraph graph;
    Representation representation = Representation::Dual;
    std::vector<int> n;          // chosen derivative orders per edge
    Rational a_exponent;         // on phi: M + sum n
    Rational b_exponent;         // on psi: d/2 - M + sum n
    std::vector<Rational> mu;    // per-edge monomial exponents
    int sign = 1;                // (-1)^{sum n}
    Rational gamma_numerator;    // Gamma(gamma_numerator) / prod_e Gamma(gamma_denominators[e])
    std::vector<Rational> gamma_denominators;
    MPoly numerator;
    MPoly phi;
    MPoly psi;

    /// Floating value of Gamma(M...)/prod Gamma(...); arguments are positive
    /// under the construction preconditions.
    double gamma_prefactor() const;
};

/// Default derivative orders: n_e = 0 when lambda*nu_e > 0, else the smallest
/// non-negative integer with n_e + lambda*nu_e > 0 (this reproduces
/// n_e = 1 - lambda*nu_e for integer lambda*nu_e <= 0).
std::vector<int> choose_n(const FeynmanGraph& g);

/// Validates a user override against n_e + lambda*nu_e > 0.
void validate_n(const FeynmanGraph& g, const std::vector<int>& n);

/// Dual representation integrand; refuses divergent graphs (DivergenceError).
ParametricIntegrand build_dual_integrand(const FeynmanGraph& g, std::vector<int> n);
ParametricIntegrand build_dual_integrand(const FeynmanGraph& g);

/// Direct representation (Cremona-transformed) integrand; requires all
/// weights positive.
ParametricIntegrand build_direct_integrand(const FeynmanGraph& g);

/// Integrand restricted to the affine chart alpha_{e0} = 1, with the
/// remaining edges mapped onto the open unit cube by alpha = t/(1-t).
/// Evaluation is a pure function of the cube point and the s values.
class ChartedIntegrand {
public:
    ChartedIntegrand(ParametricIntegrand integrand, int chart_edge);

    const ParametricIntegrand& integrand() const { return integrand_; }
    int chart_edge() const { return chart_edge_; }
    /// Cube dimension: E - 1.
    int dimension() const { return static_cast<int>(free_edges_.size()); }
    const std::vector<int>& free_edges() const { return free_edges_; }

    /// Full pointwise value on the cube: numerator/(phi^A psi^B) * monomial
    /// weights * sign * Jacobian. The gamma prefactor is not included.
    /// s holds one value per s symbol of the graph.
    double value(std::span<const double> t, std::span<const double> s) const;

    /// Pointwise value in alpha coordinates (no chart, no Jacobian); used by
    /// the projective homogeneity checks.
    double alpha_value(std::span<const double> alpha, std::span<const double> s) const;

private:
    ParametricIntegrand integrand_;
    int chart_edge_;
    std::vector<int> free_edges_;
};

/// Precompiled pointwise evaluator for a fixed s vector: polynomial terms are
/// flattened to double coefficients and sparse exponent lists. Safe for
/// concurrent calls.
class CompiledIntegrand {
public:
    CompiledIntegrand(const ChartedIntegrand& charted, std::span<const double> s);

    int dimension() const { return dim_; }
    double value(std::span<const double> t) const;

private:
    struct FlatPoly {
        std::vector<double> coef;
        std::vector<std::pair<int, int>> factors; // (edge, exponent), concatenated
        std::vector<int> offsets;                 // term -> first factor index
        double eval(std::span<const double> alpha) const;
    };

    FlatPoly compile(const MPoly& p, std::span<const double> s) const;

    int dim_ = 0;
    int edges_ = 0;
    int chart_edge_ = 0;
    std::vector<int> free_edges_;
    double a_exp_ = 0, b_exp_ = 0;
    double sign_ = 1;
    std::vector<double> mu_;
    std::vector<int> mu_nonzero_;
    FlatPoly num_, phi_, psi_;
    bool numerator_is_one_ = false;
};

ChartedIntegrand fix_chart(ParametricIntegrand integrand, int chart_edge);

} // namespace gfn
