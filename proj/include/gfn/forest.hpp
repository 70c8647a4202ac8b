#pragma once

#include "gfn/graph.hpp"
#include "gfn/polynomial.hpp"

#include <string>
#include <vector>

namespace gfn {

/// Ordered list of pairwise disjoint vertex blocks. Blocks normally contain
/// external vertices only; blocks with internal members are allowed (they
/// appear in the Laplacian-inverse polynomials).
struct VertexPartition {
    std::vector<std::vector<int>> blocks;

    static VertexPartition singletons(const FeynmanGraph& g);
    /// The partition {i,j} | remaining external singletons.
    static VertexPartition pair_rest(const FeynmanGraph& g, int i, int j);
    /// Parses "01,z" or "0 1,z": blocks split on ',', labels within a block
    /// split on spaces, or on characters when no space is present.
    static VertexPartition parse(const FeynmanGraph& g, const std::string& text);

    void validate(const FeynmanGraph& g) const;
    std::string describe(const FeynmanGraph& g) const;
};

struct ForestFamily {
    VertexPartition partition;
    /// Each forest is a sorted list of edge ids; the list of forests is
    /// sorted lexicographically.
    std::vector<std::vector<int>> forests;
};

/// Exhaustive enumeration of spanning forests with one tree per block, tree i
/// containing block i and no tree meeting two blocks. Backtracking over edges
/// with union-find pruning.
ForestFamily spanning_forests(const FeynmanGraph& g, const VertexPartition& p);

/// Dual spanning forest polynomial: sum over forests of prod_{e in F} alpha_e.
MPoly dual_forest_polynomial(const FeynmanGraph& g, const VertexPartition& p);

/// Sum over external pairs i<j of s_{ij} times the two-block polynomial for
/// {i,j} | singletons.
MPoly phi_tilde(const FeynmanGraph& g);

/// (prod_e alpha_e) * p(1/alpha) for a multilinear homogeneous p of degree
/// hom_degree: flips every exponent vector m -> 1-m. Errors on
/// non-homogeneous or non-multilinear input.
MPoly cremona_transform(const MPoly& p, int edge_count, int hom_degree);

/// Determinant of the internal-internal Laplace block by fraction-free
/// Bareiss elimination; 1 for an empty block. Equals the singleton dual
/// forest polynomial by the matrix-tree theorem.
MPoly psi_via_determinant(const FeynmanGraph& g);

/// Fraction-free determinant of a square polynomial matrix (destructive).
MPoly bareiss_determinant(std::vector<std::vector<MPoly>> m, int alpha_vars, int s_vars);

/// Numerator and denominator of (L^ii)^{-1}_{v,w}: the dual forest polynomial
/// with block {v,w} joined to the external singletons, over Psi-tilde.
/// Errors when Psi-tilde vanishes.
std::pair<MPoly, MPoly> laplacian_inverse_entry(const FeynmanGraph& g, int v, int w);

} // namespace gfn
