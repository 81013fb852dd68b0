#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

namespace threm {

/// Deterministic RNG used everywhere a seed is part of a reproducibility
/// contract. std::mt19937_64 is pinned by the standard; the derived draws
/// (uniform ints, Poisson) are hand-rolled here because the std distribution
/// objects are implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    /// Uniform on [0, n), unbiased via rejection.
    std::uint64_t below(std::uint64_t n) {
        if (n <= 1) return 0;
        std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
        std::uint64_t v;
        do {
            v = gen_();
        } while (v >= limit);
        return v % n;
    }

    /// Uniform on [0, 1) with 53-bit resolution.
    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    /// Poisson via Knuth's product method (means used here are small).
    std::uint64_t poisson(double mean) {
        if (mean <= 0.0) return 0;
        double limit = std::exp(-mean);
        double p = 1.0;
        std::uint64_t k = 0;
        do {
            ++k;
            p *= uniform01();
        } while (p > limit);
        return k - 1;
    }

    /// k distinct indices from [0, n), ascending (Floyd's algorithm, O(k)).
    std::vector<std::uint32_t> sample_indices(std::uint32_t n, std::uint32_t k) {
        std::vector<std::uint32_t> out;
        out.reserve(k);
        for (std::uint32_t j = n - k; j < n; ++j) {
            auto t = static_cast<std::uint32_t>(below(j + 1));
            bool dup = false;
            for (auto x : out)
                if (x == t) {
                    dup = true;
                    break;
                }
            out.push_back(dup ? j : t);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    std::mt19937_64 gen_;
};

/// splitmix64 finalizer; used to derive per-stratum seeds from (seed, index)
/// so sampling is identical regardless of thread count.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

}  // namespace threm
