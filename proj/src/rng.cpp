#include "tdrep/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tdrep {

namespace {

uint64_t splitmix64(uint64_t& x) {
    x += 0x9e3779b97f4a7c15ULL;
    uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

RngStream::RngStream(uint64_t seed) : seed_(seed) {
    uint64_t sm = seed;
    for (auto& s : state_) s = splitmix64(sm);
}

uint64_t RngStream::next_u64() {
    uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

double RngStream::next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

uint64_t RngStream::next_below(uint64_t n) {
    if (n == 0) throw std::invalid_argument("next_below: n must be positive");
    // rejection to keep the draw exactly uniform
    uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t v;
    do {
        v = next_u64();
    } while (v >= limit);
    return v % n;
}

double RngStream::next_gaussian() {
    double u1;
    do {
        u1 = next_double();
    } while (u1 <= 0.0);
    double u2 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

size_t RngStream::next_discrete(const std::vector<double>& weights) {
    double total = 0.0;
    for (double w : weights) {
        if (w < 0.0) throw std::invalid_argument("next_discrete: negative weight");
        total += w;
    }
    if (total <= 0.0) throw std::invalid_argument("next_discrete: weights sum to zero");
    double u = next_double() * total;
    double acc = 0.0;
    for (size_t i = 0; i < weights.size(); ++i) {
        acc += weights[i];
        if (u < acc) return i;
    }
    return weights.size() - 1;
}

RngStream RngStream::split(uint64_t stream_id) const {
    uint64_t mix = seed_;
    uint64_t h = splitmix64(mix);
    mix = h ^ (0x9e3779b97f4a7c15ULL + stream_id);
    return RngStream(splitmix64(mix) ^ (stream_id * 0xda942042e4dd58b5ULL));
}

std::vector<double> sample_unit_sphere(RngStream& rng, int dim, double radius) {
    if (dim < 1) throw std::invalid_argument("sample_unit_sphere: dim must be >= 1");
    if (radius <= 0.0) throw std::invalid_argument("sample_unit_sphere: radius must be positive");
    std::vector<double> v(dim);
    double norm_sq = 0.0;
    do {
        norm_sq = 0.0;
        for (double& x : v) {
            x = rng.next_gaussian();
            norm_sq += x * x;
        }
    } while (norm_sq == 0.0);
    double factor = radius / std::sqrt(norm_sq);
    for (double& x : v) x *= factor;
    return v;
}

}  // namespace tdrep
