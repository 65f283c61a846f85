#include "lrsos/rng.hpp"

#include <cmath>

namespace lrsos {

double Rng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * M_PI * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
}

static std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t split_seed(std::uint64_t seed, std::uint64_t trial, std::uint64_t stream) {
    return splitmix64(splitmix64(seed ^ 0x5851f42d4c957f2dULL) + splitmix64(trial) * 3 + stream);
}

}  // namespace lrsos
