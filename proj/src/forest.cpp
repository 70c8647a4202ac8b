#include "gfn/forest.hpp"

#include "gfn/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace gfn {

VertexPartition VertexPartition::singletons(const FeynmanGraph& g) {
    VertexPartition p;
    for (int v : g.external_vertices())
        p.blocks.push_back({v});
    return p;
}

VertexPartition VertexPartition::pair_rest(const FeynmanGraph& g, int i, int j) {
    VertexPartition p;
    p.blocks.push_back({std::min(i, j), std::max(i, j)});
    for (int v : g.external_vertices())
        if (v != i && v != j)
            p.blocks.push_back({v});
    return p;
}

VertexPartition VertexPartition::parse(const FeynmanGraph& g, const std::string& text) {
    VertexPartition p;
    std::stringstream blocks(text);
    std::string block;
    while (std::getline(blocks, block, ',')) {
        std::vector<std::string> labels;
        if (block.find(' ') != std::string::npos) {
            std::stringstream ss(block);
            std::string label;
            while (ss >> label)
                labels.push_back(label);
        } else {
            for (char c : block)
                labels.emplace_back(1, c);
        }
        if (labels.empty())
            throw ParseError("empty block in partition '" + text + "'");
        std::vector<int> ids;
        for (const auto& label : labels) {
            int v = g.find_vertex(label);
            if (v < 0)
                throw ParseError("unknown vertex '" + label + "' in partition '" + text + "'");
            ids.push_back(v);
        }
        std::sort(ids.begin(), ids.end());
        p.blocks.push_back(std::move(ids));
    }
    if (p.blocks.empty())
        throw ParseError("empty partition '" + text + "'");
    p.validate(g);
    return p;
}

void VertexPartition::validate(const FeynmanGraph& g) const {
    if (blocks.empty())
        throw Error("partition needs at least one block");
    std::vector<char> seen(g.vertex_count(), 0);
    for (const auto& b : blocks) {
        if (b.empty())
            throw Error("partition block is empty");
        for (int v : b) {
            if (v < 0 || v >= g.vertex_count())
                throw Error("partition vertex out of range");
            if (seen[v]++)
                throw Error("partition blocks are not disjoint");
        }
    }
}

std::string VertexPartition::describe(const FeynmanGraph& g) const {
    std::string out;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (b)
            out += ',';
        for (std::size_t i = 0; i < blocks[b].size(); ++i) {
            if (i)
                out += ' ';
            out += g.vertex(blocks[b][i]).label;
        }
    }
    return out;
}

namespace {

// Union-find over vertex ids with block tags: merging two components holding
// different blocks is rejected, as is any cycle.
struct Forest {
    std::vector<int> parent;
    std::vector<int> block; // -1 = none

    int find(int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }
};

void search(const FeynmanGraph& g, int next_edge, int components, int target_components,
            Forest state, std::vector<int>& chosen, std::vector<std::vector<int>>& out) {
    const int e_total = g.edge_count();
    // not enough edges left to shrink to the target component count
    if (components - (e_total - next_edge) > target_components)
        return;
    if (next_edge == e_total) {
        if (components == target_components)
            out.push_back(chosen);
        return;
    }
    // exclude next_edge
    search(g, next_edge + 1, components, target_components, state, chosen, out);
    // include next_edge when it neither cycles nor merges two blocks
    const auto& ed = g.edge(next_edge);
    Forest s = state;
    int ru = s.find(ed.u), rv = s.find(ed.v);
    if (ru == rv)
        return;
    if (s.block[ru] >= 0 && s.block[rv] >= 0 && s.block[ru] != s.block[rv])
        return;
    s.parent[ru] = rv;
    if (s.block[rv] < 0)
        s.block[rv] = s.block[ru];
    chosen.push_back(next_edge);
    search(g, next_edge + 1, components - 1, target_components, std::move(s), chosen, out);
    chosen.pop_back();
}

} // namespace

ForestFamily spanning_forests(const FeynmanGraph& g, const VertexPartition& p) {
    p.validate(g);
    ForestFamily family;
    family.partition = p;

    const int n = static_cast<int>(p.blocks.size());
    Forest init;
    init.parent.resize(g.vertex_count());
    std::iota(init.parent.begin(), init.parent.end(), 0);
    init.block.assign(g.vertex_count(), -1);
    for (int b = 0; b < n; ++b)
        for (int v : p.blocks[b])
            init.block[v] = b;
    // Invariant: a component never holds two block tags. Ending with exactly
    // n components therefore forces a bijection trees <-> blocks, with every
    // block connected inside its tree; no separate leaf check is needed.
    std::vector<int> chosen;
    search(g, 0, g.vertex_count(), n, init, chosen, family.forests);
    std::sort(family.forests.begin(), family.forests.end());
    return family;
}

MPoly dual_forest_polynomial(const FeynmanGraph& g, const VertexPartition& p) {
    const int ev = g.edge_count();
    const int sv = g.s_symbol_count();
    ForestFamily family = spanning_forests(g, p);
    MPoly out(ev);
    for (const auto& f : family.forests) {
        Exponents e(ev, 0);
        for (int id : f)
            e[id] = 1;
        out.add_term(e, SPoly::constant(sv, Rational(1)));
    }
    return out;
}

MPoly phi_tilde(const FeynmanGraph& g) {
    if (g.external_count() < 2)
        throw PreconditionError("phi-tilde needs at least two external vertices");
    const int ev = g.edge_count();
    const int sv = g.s_symbol_count();
    MPoly out(ev);
    const auto& ext = g.external_vertices();
    for (std::size_t i = 0; i < ext.size(); ++i) {
        for (std::size_t j = i + 1; j < ext.size(); ++j) {
            MPoly psi = dual_forest_polynomial(g, VertexPartition::pair_rest(g, ext[i], ext[j]));
            const int sym = g.s_symbol_index(ext[i], ext[j]);
            out = out + psi * s_symbol(ev, sv, sym);
        }
    }
    return out;
}

MPoly cremona_transform(const MPoly& p, int edge_count, int hom_degree) {
    if (p.is_zero())
        throw PreconditionError("cremona transform of the zero polynomial");
    if (p.nvars() != edge_count)
        throw Error("cremona transform: edge count mismatch");
    auto h = p.homogeneous_degree();
    if (!h || *h != hom_degree)
        throw PreconditionError("cremona transform requires a homogeneous polynomial of the stated degree");
    if (hom_degree > edge_count)
        throw PreconditionError("cremona transform: degree exceeds edge count");
    MPoly out(edge_count);
    for (const auto& [e, c] : p.terms()) {
        Exponents flipped(edge_count);
        for (int i = 0; i < edge_count; ++i) {
            if (e[i] > 1)
                throw PreconditionError("cremona transform requires a multilinear polynomial");
            flipped[i] = 1 - e[i];
        }
        out.add_term(flipped, c);
    }
    return out;
}

MPoly bareiss_determinant(std::vector<std::vector<MPoly>> m, int alpha_vars, int s_vars) {
    const int n = static_cast<int>(m.size());
    const MPoly one = mpoly_constant(alpha_vars, s_vars, Rational(1));
    if (n == 0)
        return one;
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != n)
            throw Error("determinant of a non-square matrix");
    int sign = 1;
    MPoly prev_pivot = one;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k].is_zero()) {
            int swap_row = -1;
            for (int r = k + 1; r < n; ++r)
                if (!m[r][k].is_zero()) {
                    swap_row = r;
                    break;
                }
            if (swap_row < 0)
                return MPoly(alpha_vars); // zero column -> zero determinant
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                MPoly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                // Sylvester's identity guarantees exact divisibility
                m[i][j] = divide_exact(num, prev_pivot);
            }
            m[i][k] = MPoly(alpha_vars);
        }
        prev_pivot = m[k][k];
    }
    MPoly det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

MPoly psi_via_determinant(const FeynmanGraph& g) {
    LaplaceMatrix lap = laplace_matrix(g);
    return bareiss_determinant(lap.internal_block(), g.edge_count(), g.s_symbol_count());
}

std::pair<MPoly, MPoly> laplacian_inverse_entry(const FeynmanGraph& g, int v, int w) {
    if (g.vertex(v).external || g.vertex(w).external)
        throw PreconditionError("laplacian_inverse_entry expects internal vertices");
    MPoly psi = dual_forest_polynomial(g, VertexPartition::singletons(g));
    if (psi.is_zero())
        throw PreconditionError("graph disconnects external components");
    VertexPartition p;
    if (v == w)
        p.blocks.push_back({v});
    else
        p.blocks.push_back({std::min(v, w), std::max(v, w)});
    for (int x : g.external_vertices())
        p.blocks.push_back({x});
    MPoly num = dual_forest_polynomial(g, p);
    return {std::move(num), std::move(psi)};
}

} // namespace gfn
