#pragma once

#include <cstdint>

namespace relay {

// Generator identifier advertised in output metadata.
inline constexpr const char* kPrngId = "splitmix64/1";

// Stateless splitmix64 step: advance by the Weyl constant and scramble.
constexpr std::uint64_t splitmix64_mix(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Deterministic 64-bit generator, identical on every platform. Distribution
// helpers avoid std::uniform_* on purpose: their outputs are
// implementation-defined, which would break byte-stable benchmarks.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53 random bits.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, n), n >= 1, via 128-bit fixed-point multiply.
    std::uint64_t next_below(std::uint64_t n) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next()) * n) >> 64);
    }

private:
    std::uint64_t state_;
};

// Folds (base, a, b) through the splitmix64 finalizer; used to derive
// independent per-trial seeds from (base_seed, n, trial).
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b) {
    std::uint64_t h = splitmix64_mix(base);
    h = splitmix64_mix(h ^ a);
    h = splitmix64_mix(h ^ b);
    return h;
}

} // namespace relay
