// Deterministic PRNG. splitmix64 core; no libstdc++ distributions so the
// same seed yields the same stream on every platform and compiler.
#pragma once

#include <cmath>
#include <cstdint>

namespace masq {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1).
    double next_unit() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p) {
        if (p <= 0.0) return false;
        if (p >= 1.0) return true;
        return next_unit() < p;
    }

    // Standard normal via Box-Muller (one value per call; the twin is dropped
    // to keep the stream layout simple).
    double next_gaussian() {
        double u1 = next_unit(), u2 = next_unit();
        while (u1 <= 0.0) u1 = next_unit();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    }

    // Standard Cauchy via inverse CDF.
    double next_cauchy() {
        double u = next_unit();
        while (u <= 0.0 || u >= 1.0) u = next_unit();
        return std::tan(3.141592653589793 * (u - 0.5));
    }

    // Derives an independent stream (scenario fan-out, id lottery, ...).
    Rng fork(std::uint64_t salt) const {
        Rng r(state_ ^ (salt * 0xD6E8FEB86659FD93ull + 0xA5A5A5A5A5A5A5A5ull));
        r.next_u64();
        return r;
    }

private:
    std::uint64_t state_;
};

}  // namespace masq
