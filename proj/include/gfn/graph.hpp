#pragma once

#include "gfn/polynomial.hpp"
#include "gfn/rational.hpp"

#include <string>
#include <vector>

namespace gfn {

struct Vertex {
    std::string label;
    bool external = false;
};

struct Edge {
    std::string name;
    int u = -1;
    int v = -1;
    Rational weight = 1;
};

/// Weighted multigraph with distinguished external vertices and an exact
/// rational dimension d > 2. Immutable after construction; parallel edges are
/// kept distinct, self-loops are rejected.
class FeynmanGraph {
public:
    static FeynmanGraph create(std::vector<Vertex> vertices, std::vector<Edge> edges,
                               Rational dimension);

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const Vertex& vertex(int v) const { return vertices_.at(v); }
    const Edge& edge(int e) const { return edges_.at(e); }

    const Rational& dimension() const { return dimension_; }
    Rational lambda() const { return (dimension_ - 2) / 2; }

    const std::vector<int>& external_vertices() const { return external_; }
    const std::vector<int>& internal_vertices() const { return internal_; }
    int internal_count() const { return static_cast<int>(internal_.size()); }
    int external_count() const { return static_cast<int>(external_.size()); }

    const std::vector<int>& incident_edges(int v) const { return incident_.at(v); }

    /// Vertex id for a label; -1 when absent.
    int find_vertex(const std::string& label) const;
    /// Edge id for a name; -1 when absent.
    int find_edge(const std::string& name) const;

    Rational total_weight() const;
    bool is_connected() const;

    /// Number of s_{ij} symbols: one per unordered pair of external vertices.
    int s_symbol_count() const;
    /// Index of the symbol for the pair of external vertices {a, b}.
    int s_symbol_index(int a, int b) const;
    /// Symbol spelling, e.g. "s[0,1]" for the externals labeled 0 and 1.
    std::string s_symbol_name(int index) const;
    /// The two external vertex ids behind a symbol index.
    std::pair<int, int> s_symbol_pair(int index) const;

private:
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    Rational dimension_;
    std::vector<int> external_;
    std::vector<int> internal_;
    std::vector<std::vector<int>> incident_;
};

/// Subgraph named by an edge subset plus the vertex set it lives on (the
/// vertex set can exceed the edge endpoints: induced subgraphs keep their
/// isolated vertices). Derived quantities are recomputed on demand.
struct Subgraph {
    std::vector<int> edge_ids;   // sorted
    std::vector<int> vertex_ids; // sorted, superset of all endpoints

    Rational weight_sum(const FeynmanGraph& g) const;
    /// Internal vertices of g all of whose incident edges lie in the subset.
    std::vector<int> g_internal(const FeynmanGraph& g) const;
    std::string describe(const FeynmanGraph& g) const;
};

/// All induced subgraphs on S subset of V_int plus at most one external
/// vertex, |S| >= 2. Deterministic order. Singletons are excluded: the
/// power-counting inequality is about nontrivial subgraphs.
std::vector<Subgraph> enumerate_uv_subgraphs(const FeynmanGraph& g);

/// For each nonempty S subset of V_int, the subgraph star(S) of all edges
/// incident to S. Every admissible infrared subgraph is the star of its own
/// internal closure, so checking these is sound and complete.
std::vector<Subgraph> enumerate_ir_subgraphs(const FeynmanGraph& g);

/// Symmetric Laplace matrix over the alpha polynomial ring:
/// diagonal (v,v) = sum of alpha_e over edges at v, off-diagonal (u,v) =
/// -sum of alpha_e over edges {u,v}. Indexed by vertex id with the
/// internal/external index lists defining the block decomposition.
struct LaplaceMatrix {
    std::vector<std::vector<MPoly>> entries;
    std::vector<int> internal;
    std::vector<int> external;

    std::vector<std::vector<MPoly>> internal_block() const;
};

LaplaceMatrix laplace_matrix(const FeynmanGraph& g);

} // namespace gfn
