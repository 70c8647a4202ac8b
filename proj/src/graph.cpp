#include "gfn/graph.hpp"

#include "gfn/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace gfn {

FeynmanGraph FeynmanGraph::create(std::vector<Vertex> vertices, std::vector<Edge> edges,
                                  Rational dimension) {
    FeynmanGraph g;
    if (!(dimension > 2))
        throw ParseError("dimension must exceed 2, got " + to_string(dimension));
    std::set<std::string> labels;
    for (const auto& v : vertices) {
        if (v.label.empty())
            throw ParseError("empty vertex label");
        if (!labels.insert(v.label).second)
            throw ParseError("duplicate vertex label '" + v.label + "'");
    }
    std::set<std::string> names;
    for (const auto& e : edges) {
        if (!names.insert(e.name).second)
            throw ParseError("duplicate edge name '" + e.name + "'");
        if (e.u < 0 || e.u >= static_cast<int>(vertices.size()) || e.v < 0 ||
            e.v >= static_cast<int>(vertices.size()))
            throw ParseError("edge '" + e.name + "' references an unknown endpoint");
        if (e.u == e.v)
            throw ParseError("self-loop on edge '" + e.name + "'");
    }
    g.vertices_ = std::move(vertices);
    g.edges_ = std::move(edges);
    g.dimension_ = std::move(dimension);
    g.incident_.assign(g.vertices_.size(), {});
    for (int e = 0; e < g.edge_count(); ++e) {
        g.incident_[g.edges_[e].u].push_back(e);
        g.incident_[g.edges_[e].v].push_back(e);
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        (g.vertices_[v].external ? g.external_ : g.internal_).push_back(v);
    return g;
}

int FeynmanGraph::find_vertex(const std::string& label) const {
    for (int v = 0; v < vertex_count(); ++v)
        if (vertices_[v].label == label)
            return v;
    return -1;
}

int FeynmanGraph::find_edge(const std::string& name) const {
    for (int e = 0; e < edge_count(); ++e)
        if (edges_[e].name == name)
            return e;
    return -1;
}

Rational FeynmanGraph::total_weight() const {
    Rational sum(0);
    for (const auto& e : edges_)
        sum += e.weight;
    return sum;
}

bool FeynmanGraph::is_connected() const {
    if (vertices_.empty())
        return true;
    std::vector<char> seen(vertices_.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int e : incident_[v]) {
            int w = edges_[e].u == v ? edges_[e].v : edges_[e].u;
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

int FeynmanGraph::s_symbol_count() const {
    const int m = external_count();
    return m * (m - 1) / 2;
}

int FeynmanGraph::s_symbol_index(int a, int b) const {
    auto pos = [&](int v) {
        auto it = std::find(external_.begin(), external_.end(), v);
        if (it == external_.end())
            throw Error("vertex " + vertices_.at(v).label + " is not external");
        return static_cast<int>(it - external_.begin());
    };
    int i = pos(a), j = pos(b);
    if (i == j)
        throw Error("s symbol requires two distinct external vertices");
    if (i > j)
        std::swap(i, j);
    // pairs in lexicographic order: (0,1), (0,2), ..., (1,2), ...
    const int m = external_count();
    return i * m - i * (i + 1) / 2 + (j - i - 1);
}

std::pair<int, int> FeynmanGraph::s_symbol_pair(int index) const {
    const int m = external_count();
    for (int i = 0; i < m; ++i) {
        const int row = m - i - 1;
        if (index < row)
            return {external_[i], external_[i + 1 + index]};
        index -= row;
    }
    throw Error("s symbol index out of range");
}

std::string FeynmanGraph::s_symbol_name(int index) const {
    auto [a, b] = s_symbol_pair(index);
    return "s[" + vertices_[a].label + "," + vertices_[b].label + "]";
}

Rational Subgraph::weight_sum(const FeynmanGraph& g) const {
    Rational sum(0);
    for (int e : edge_ids)
        sum += g.edge(e).weight;
    return sum;
}

std::vector<int> Subgraph::g_internal(const FeynmanGraph& g) const {
    std::vector<int> out;
    for (int v : vertex_ids) {
        if (g.vertex(v).external)
            continue;
        const auto& inc = g.incident_edges(v);
        bool all_in = std::all_of(inc.begin(), inc.end(), [&](int e) {
            return std::binary_search(edge_ids.begin(), edge_ids.end(), e);
        });
        if (all_in)
            out.push_back(v);
    }
    return out;
}

std::string Subgraph::describe(const FeynmanGraph& g) const {
    std::ostringstream os;
    os << "vertices{";
    for (std::size_t i = 0; i < vertex_ids.size(); ++i)
        os << (i ? "," : "") << g.vertex(vertex_ids[i]).label;
    os << "} edges{";
    for (std::size_t i = 0; i < edge_ids.size(); ++i)
        os << (i ? "," : "") << g.edge(edge_ids[i]).name;
    os << "}";
    return os.str();
}

namespace {

Subgraph induced_on(const FeynmanGraph& g, std::vector<int> vertex_ids) {
    std::sort(vertex_ids.begin(), vertex_ids.end());
    Subgraph s;
    s.vertex_ids = std::move(vertex_ids);
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& ed = g.edge(e);
        if (std::binary_search(s.vertex_ids.begin(), s.vertex_ids.end(), ed.u) &&
            std::binary_search(s.vertex_ids.begin(), s.vertex_ids.end(), ed.v))
            s.edge_ids.push_back(e);
    }
    return s;
}

} // namespace

std::vector<Subgraph> enumerate_uv_subgraphs(const FeynmanGraph& g) {
    const auto& internal = g.internal_vertices();
    const int n = static_cast<int>(internal.size());
    if (n > 24)
        throw Error("too many internal vertices for exhaustive power counting");
    std::vector<Subgraph> out;
    // externals option: -1 = none, otherwise one external vertex
    std::vector<int> ext_options{-1};
    for (int v : g.external_vertices())
        ext_options.push_back(v);
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> base;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i))
                base.push_back(internal[i]);
        for (int ext : ext_options) {
            std::vector<int> vs = base;
            if (ext >= 0)
                vs.push_back(ext);
            if (vs.size() < 2)
                continue;
            out.push_back(induced_on(g, std::move(vs)));
        }
    }
    return out;
}

std::vector<Subgraph> enumerate_ir_subgraphs(const FeynmanGraph& g) {
    const auto& internal = g.internal_vertices();
    const int n = static_cast<int>(internal.size());
    if (n > 24)
        throw Error("too many internal vertices for exhaustive power counting");
    std::vector<Subgraph> out;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::set<int> edges, verts;
        for (int i = 0; i < n; ++i) {
            if (!(mask & (1u << i)))
                continue;
            verts.insert(internal[i]);
            for (int e : g.incident_edges(internal[i]))
                edges.insert(e);
        }
        Subgraph s;
        s.edge_ids.assign(edges.begin(), edges.end());
        for (int e : s.edge_ids) {
            verts.insert(g.edge(e).u);
            verts.insert(g.edge(e).v);
        }
        s.vertex_ids.assign(verts.begin(), verts.end());
        out.push_back(std::move(s));
    }
    return out;
}

LaplaceMatrix laplace_matrix(const FeynmanGraph& g) {
    const int n = g.vertex_count();
    const int ev = g.edge_count();
    const int sv = g.s_symbol_count();
    LaplaceMatrix m;
    m.entries.assign(n, std::vector<MPoly>(n, MPoly(ev)));
    for (int e = 0; e < ev; ++e) {
        const auto& ed = g.edge(e);
        const MPoly ae = alpha_variable(ev, sv, e);
        m.entries[ed.u][ed.u] = m.entries[ed.u][ed.u] + ae;
        m.entries[ed.v][ed.v] = m.entries[ed.v][ed.v] + ae;
        m.entries[ed.u][ed.v] = m.entries[ed.u][ed.v] - ae;
        m.entries[ed.v][ed.u] = m.entries[ed.v][ed.u] - ae;
    }
    m.internal = g.internal_vertices();
    m.external = g.external_vertices();
    return m;
}

std::vector<std::vector<MPoly>> LaplaceMatrix::internal_block() const {
    std::vector<std::vector<MPoly>> block;
    block.reserve(internal.size());
    for (int r : internal) {
        std::vector<MPoly> row;
        row.reserve(internal.size());
        for (int c : internal)
            row.push_back(entries[r][c]);
        block.push_back(std::move(row));
    }
    return block;
}

} // namespace gfn
