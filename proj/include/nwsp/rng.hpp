#pragma once

#include <cstdint>

#include "nwsp/graph.hpp"

namespace nwsp {

// Deterministic splitmix64 stream. Identical seed gives an identical stream on
// every platform; single-owner, not safe for concurrent mutation.
class Rng {
  public:
    explicit Rng(uint64_t seed = 0) : state_(seed) {}

    uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in (0, 1], built from a fixed 53-bit mantissa.
    double next_unit() {
        uint64_t bits = next_u64() >> 11;  // 53 bits
        return (static_cast<double>(bits) + 1.0) * 0x1p-53;
    }

    // Uniform in [0, k).
    uint64_t next_below(uint64_t k) { return k <= 1 ? 0 : next_u64() % k; }

    // Child stream for independent parallel work.
    Rng split() { return Rng(next_u64()); }

  private:
    uint64_t state_;
};

// Success probability min{1, num/den} held as an exact integer rational.
struct GeometricParam {
    Weight num = 1;
    Weight den = 1;

    double p() const {
        if (num >= den) return 1.0;
        return static_cast<double>(num) / static_cast<double>(den);
    }
};

// p = min{1, 80 * log2(n) / D}; log2(n) is evaluated once in double precision
// and folded into the numerator at fixed-point scale 2^16.
GeometricParam ball_radius_param(int global_n, Weight diameter, int p_numerator = 80);

// min(X, r_max) for X ~ Geo(p) via inverse transform on a 53-bit uniform;
// p = 1 returns exactly 1.
Weight sample_geometric(Rng& rng, const GeometricParam& p, Weight r_max);

}  // namespace nwsp
