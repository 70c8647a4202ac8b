#include "gfn/convergence.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace gfn {

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::Convergent: return "convergent";
    case Verdict::UvDivergent: return "uv-divergent";
    case Verdict::IrDivergent: return "ir-divergent";
    case Verdict::Both: return "uv-and-ir-divergent";
    }
    return "unknown";
}

int ConvergenceReport::count(Condition::Side side) const {
    return static_cast<int>(
        std::count_if(conditions.begin(), conditions.end(),
                      [side](const Condition& c) { return c.side == side; }));
}

namespace {

bool subgraph_connected(const FeynmanGraph& g, const Subgraph& s) {
    if (s.vertex_ids.empty())
        return true;
    std::map<int, int> pos;
    for (std::size_t i = 0; i < s.vertex_ids.size(); ++i)
        pos[s.vertex_ids[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> adj(s.vertex_ids.size());
    for (int e : s.edge_ids) {
        adj[pos.at(g.edge(e).u)].push_back(pos.at(g.edge(e).v));
        adj[pos.at(g.edge(e).v)].push_back(pos.at(g.edge(e).u));
    }
    std::vector<char> seen(s.vertex_ids.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

} // namespace

ConvergenceReport check_convergence(const FeynmanGraph& g, const ConvergenceOptions& opts) {
    ConvergenceReport report;
    report.superficial_degree = superficial_degree(g);
    const Rational lam = g.lambda();
    const Rational half_d = g.dimension() / 2;

    bool uv_ok = true, ir_ok = true;
    for (const Subgraph& s : enumerate_uv_subgraphs(g)) {
        if (opts.uv_connected_only && !subgraph_connected(g, s))
            continue;
        Condition c;
        c.side = Condition::Side::UV;
        c.lhs = lam * s.weight_sum(g);
        c.rhs = half_d * Rational(static_cast<long>(s.vertex_ids.size()) - 1);
        c.pass = c.lhs < c.rhs;
        c.subgraph = s;
        uv_ok = uv_ok && c.pass;
        report.conditions.push_back(std::move(c));
    }
    for (const Subgraph& s : enumerate_ir_subgraphs(g)) {
        Condition c;
        c.side = Condition::Side::IR;
        c.lhs = lam * s.weight_sum(g);
        c.rhs = half_d * Rational(static_cast<long>(s.g_internal(g).size()));
        c.pass = c.lhs > c.rhs;
        c.subgraph = s;
        ir_ok = ir_ok && c.pass;
        report.conditions.push_back(std::move(c));
    }
    if (uv_ok && ir_ok)
        report.verdict = Verdict::Convergent;
    else if (!uv_ok && !ir_ok)
        report.verdict = Verdict::Both;
    else
        report.verdict = uv_ok ? Verdict::IrDivergent : Verdict::UvDivergent;
    return report;
}

Rational superficial_degree(const FeynmanGraph& g) {
    return g.lambda() * g.total_weight() - (g.dimension() / 2) * Rational(g.internal_count());
}

MBound m_bound_check(const FeynmanGraph& g) {
    MBound out;
    for (const auto& e : g.edges())
        if (g.vertex(e.u).external && g.vertex(e.v).external)
            return out; // bound assumes no external-external edges
    if (g.external_count() == 0)
        return out;
    out.applicable = true;
    bool first = true;
    Rational best;
    for (int v : g.external_vertices()) {
        Rational sum(0);
        for (int w : g.external_vertices()) {
            if (w == v)
                continue;
            for (int e : g.incident_edges(w))
                sum += g.edge(e).weight;
        }
        if (first || sum < best) {
            best = sum;
            first = false;
        }
    }
    out.upper = g.lambda() * best;
    const Rational m = superficial_degree(g);
    out.holds = (m > 0) && (m < out.upper);
    return out;
}

} // namespace gfn
