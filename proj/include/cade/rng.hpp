#ifndef CADE_RNG_HPP
#define CADE_RNG_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <string_view>
#include <vector>

namespace cade {

/// splitmix64 step, used to derive disjoint sub-seeds from a master seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// FNV-1a 64-bit hash. Used for sub-seed tags and file spec hashes.
inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

/// Seed for an independent stream identified by (master seed, purpose tag).
inline std::uint64_t derive_seed(std::uint64_t seed, std::string_view tag) {
    return splitmix64(seed ^ fnv1a64(tag));
}

/// Deterministic random stream. All distributions are implemented by hand on
/// top of mt19937_64 so that identical seeds give identical draws on every
/// standard library.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : seed_(seed), gen_(seed) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, n). n must be > 0. Rejection sampling, unbiased.
    std::uint64_t uniform_index(std::uint64_t n) {
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - (std::numeric_limits<std::uint64_t>::max() % n);
        std::uint64_t x;
        do {
            x = gen_();
        } while (x >= limit);
        return x % n;
    }

    /// Standard normal via Box-Muller (two uniform draws per call, no cache).
    double normal() {
        double u1;
        do {
            u1 = uniform();
        } while (u1 <= 0.0);
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    double normal(double mean, double stddev) { return mean + stddev * normal(); }

    /// Cauchy via inverse CDF.
    double cauchy(double location, double scale) {
        return location + scale * std::tan(M_PI * (uniform() - 0.5));
    }

    /// Beta(a, a) by Johnk's method; used for mixup coefficients.
    double beta_symmetric(double a) {
        for (;;) {
            const double u = uniform();
            const double v = uniform();
            const double x = std::pow(u, 1.0 / a);
            const double y = std::pow(v, 1.0 / a);
            if (x + y > 0.0 && x + y <= 1.0) return x / (x + y);
        }
    }

    /// Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(uniform_index(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::uint64_t seed_;
    std::mt19937_64 gen_;
};

} // namespace cade

#endif
