#ifndef LRSOS_RNG_HPP
#define LRSOS_RNG_HPP

#include <cstdint>
#include <random>

namespace lrsos {

/// Seeded standard-normal source. The Box-Muller transform is spelled out
/// here because std::normal_distribution is not reproducible across standard
/// library implementations, and experiment records are keyed by seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    /// Uniform draw in the half-open interval (0, 1].
    double uniform() {
        // 53 mantissa bits; +1 keeps the value strictly positive for log().
        return static_cast<double>((gen_() >> 11) + 1) * 0x1.0p-53;
    }

    double normal();

    std::uint64_t raw() { return gen_(); }

private:
    std::mt19937_64 gen_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

/// Declared sub-seed derivation used by the experiment harness: trial t and
/// stream j map to independent generators; stream 0 is reserved for the
/// target draw and stream j>=1 for the j-th k value.
std::uint64_t split_seed(std::uint64_t seed, std::uint64_t trial, std::uint64_t stream);

}  // namespace lrsos

#endif
