#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tdrep {

/// Deterministic random stream (xoshiro256++ seeded through splitmix64).
/// The generator is pinned here rather than taken from <random> so that a
/// given seed produces the same sequence on every platform and toolchain;
/// distribution transforms below are likewise hand-rolled for the same
/// reason.
class RngStream {
public:
    explicit RngStream(uint64_t seed);

    static const char* algorithm() { return "xoshiro256++"; }
    uint64_t seed() const { return seed_; }

    uint64_t next_u64();

    /// Uniform in [0, 1) with 53 random bits.
    double next_double();

    /// Uniform integer in [0, n).
    uint64_t next_below(uint64_t n);

    /// Standard normal via Box-Muller (no cached spare; two uniforms per draw).
    double next_gaussian();

    /// Index sampled from unnormalized nonnegative weights.
    size_t next_discrete(const std::vector<double>& weights);

    /// Derive an independent stream for a labelled sub-task.
    RngStream split(uint64_t stream_id) const;

private:
    uint64_t seed_;
    uint64_t state_[4];
};

/// Gaussian vector normalized to exact Euclidean norm `radius`.
std::vector<double> sample_unit_sphere(RngStream& rng, int dim, double radius);

}  // namespace tdrep
