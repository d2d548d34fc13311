#pragma once

#include <cmath>
#include <cstdint>

#include "ballbodies/geometry.hpp"

namespace bb {

// splitmix64 step; used both as a generator and as a seed mixer.
inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Counter-seeded substream: (seed, stream) fully determines the sequence,
// so per-trial and per-block streams are independent of execution order
// and of any parallel fan-out.
class Rng {
public:
    explicit Rng(uint64_t seed, uint64_t stream = 0) {
        uint64_t mix = seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1));
        s_[0] = splitmix64(mix);
        s_[1] = splitmix64(mix);
        s_[2] = splitmix64(mix);
        s_[3] = splitmix64(mix);
    }

    // xoshiro256++
    uint64_t next_u64() {
        const uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Uniform in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Box-Muller; consumes exactly two uniforms per call so the stream layout
    // does not depend on call history.
    double normal() {
        double u1 = uniform();
        double u2 = uniform();
        if (u1 <= 0.0) u1 = 0x1.0p-53;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
    }

    uint64_t below(uint64_t n) { return next_u64() % n; }

    Vec gaussian_vec(int dim) {
        Vec v(dim);
        for (int i = 0; i < dim; ++i) v[i] = normal();
        return v;
    }

    // Uniform direction on S^{dim-1}.
    Vec unit_vec(int dim) {
        for (;;) {
            Vec v = gaussian_vec(dim);
            const double n = norm(v);
            if (n > 1e-12) return v * (1.0 / n);
        }
    }

    // Uniform point in the ball of given radius about the origin.
    Vec in_ball(int dim, double radius) {
        Vec u = unit_vec(dim);
        const double t = std::pow(uniform(), 1.0 / dim);
        return u * (radius * t);
    }

private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    uint64_t s_[4];
};

}  // namespace bb
