#pragma once

#include "gfn/integrand.hpp"

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gfn {

/// External kinematics: either a complex z (three externals labeled 0, 1, z;
/// then s01 = 1, s0z = |z|^2, s1z = |1-z|^2) or explicit positive squared
/// distances per external pair.
struct ExternalData {
    static ExternalData from_z(std::complex<double> z);
    static ExternalData from_s(std::vector<double> s_values);

    std::optional<std::complex<double>> z;
    std::vector<double> s_values; // indexed like FeynmanGraph::s_symbol_index

    /// s vector matched against the graph; validates arity and positivity.
    std::vector<double> resolve(const FeynmanGraph& g) const;
};

enum class SamplerKind { Plain, LowDiscrepancy };

struct SamplerConfig {
    std::uint64_t samples = 1'000'000;
    std::uint64_t seed = 1;
    SamplerKind sampler = SamplerKind::Plain;
    int threads = 1; // shard-parallel; results are bit-identical to serial
};

struct Estimate {
    double value = 0.0;
    double stderr_ = 0.0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    std::string sampler;
    std::uint64_t rejected = 0; // non-finite pointwise values
    bool rejection_warning = false;

    bool consistent_with(const Estimate& other, double nsigma) const;
};

/// Monte Carlo value of a charted integrand times its gamma prefactor.
/// Deterministic: fixed (integrand, data, seed, samples, sampler) produces a
/// bit-identical estimate regardless of thread count.
Estimate evaluate_gf(const ChartedIntegrand& integrand, const ExternalData& x,
                     const SamplerConfig& cfg);

/// Convenience: dual representation with default n, chart on the first edge.
Estimate evaluate_gf(const FeynmanGraph& g, const ExternalData& x, const SamplerConfig& cfg);

/// Single-valued Bloch-Wigner dilogarithm D(z) = Im(Li2(z)) + arg(1-z)log|z|.
/// Exact zero on the real axis.
double bloch_wigner(std::complex<double> z);

/// Principal-branch complex dilogarithm (double precision).
std::complex<double> dilog(std::complex<double> z);

/// Direct Monte Carlo integration of the position-space definition with
/// importance sampling anchored at the external points. Desk-scale oracle:
/// requires V_int <= 2 and an even integer dimension <= 6.
Estimate xspace_oracle(const FeynmanGraph& g, const ExternalData& x, const SamplerConfig& cfg);

struct SymmetryReport {
    Estimate at_z;
    Estimate at_zbar;
    bool equal_within_3sigma = false;
    bool positive_beyond_3sigma = false;
};

/// Checks f(z) = f(conj z) within errors and strict positivity. The two
/// estimates use different seeds: the parametric integrand depends on z only
/// through |z| and |1-z|, so equal seeds would compare bit-equal runs.
SymmetryReport verify_g_symmetries(const FeynmanGraph& g, std::complex<double> z,
                                   const SamplerConfig& cfg);

} // namespace gfn
