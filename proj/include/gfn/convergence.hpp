#pragma once

#include "gfn/graph.hpp"
#include "gfn/rational.hpp"

#include <string>
#include <vector>

namespace gfn {

enum class Verdict { Convergent, UvDivergent, IrDivergent, Both };

std::string to_string(Verdict v);

/// One power-counting inequality. UV: lhs < rhs must hold; IR: lhs > rhs.
/// lhs is lambda*nu_g, rhs is (d/2)(V_g - 1) resp. (d/2)V_g^int; the margin
/// lhs - rhs is exact, and equality counts as failure (strict inequalities).
struct Condition {
    enum class Side { UV, IR };
    Side side;
    Subgraph subgraph;
    Rational lhs;
    Rational rhs;
    bool pass;

    Rational margin() const { return lhs - rhs; }
};

struct ConvergenceReport {
    Verdict verdict = Verdict::Convergent;
    std::vector<Condition> conditions;
    Rational superficial_degree;

    int count(Condition::Side side) const;
    bool convergent() const { return verdict == Verdict::Convergent; }
};

struct ConvergenceOptions {
    /// Restrict the UV scan to connected induced subgraphs. Off by default:
    /// soundness for mixed-sign weights is only guaranteed by the full scan.
    bool uv_connected_only = false;
};

ConvergenceReport check_convergence(const FeynmanGraph& g, const ConvergenceOptions& opts = {});

/// M_G = lambda*nu_G - (d/2) V_int, exactly.
Rational superficial_degree(const FeynmanGraph& g);

/// The window 0 < M_G < lambda * min_v sum_{w != v} nu_w over external v,
/// valid for graphs without edges between external vertices.
struct MBound {
    bool applicable = false;
    Rational upper;
    bool holds = false;
};

MBound m_bound_check(const FeynmanGraph& g);

/// Raised when an operation requires a convergent graph. CLI exit code 2.
class DivergenceError : public Error {
public:
    DivergenceError(std::string message, ConvergenceReport report)
        : Error(std::move(message)), report(std::move(report)) {}
    ConvergenceReport report;
};

} // namespace gfn
