#pragma once

#include <cstdint>
#include <cmath>
#include <vector>

namespace s2mam {

/// Counter-based random stream (splitmix64 finalizer over seed + counter).
///
/// Every draw is a pure function of (seed, counter), so streams are
/// reproducible bit-for-bit across platforms and independent streams can be
/// derived by hashing a parent seed with an index. No libc++/libstdc++
/// distribution objects are used anywhere on purpose: their outputs are not
/// portable.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Derive the seed of an independent child stream.
    static std::uint64_t derive(std::uint64_t base, std::uint64_t index) {
        return mix(base + 0x9E3779B97F4A7C15ULL * (index + 1));
    }

    std::uint64_t next() {
        counter_ += 1;
        return mix(seed_ + 0x9E3779B97F4A7C15ULL * counter_);
    }

    /// Uniform double in [0, 1).
    double uniform() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform();
    }

    /// Standard normal via Box-Muller (two uniforms per call, no cached spare).
    double normal() {
        const double u1 = 1.0 - uniform();  // (0, 1]
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    double normal(double mean, double sd) { return mean + sd * normal(); }

    bool bernoulli(double p) { return uniform() < p; }

    /// Unbiased integer in [0, n).
    std::uint64_t uniform_int(std::uint64_t n) {
        if (n <= 1) return 0;
        const std::uint64_t bound = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x = next();
        while (x >= bound) x = next();
        return x % n;
    }

    /// Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(uniform_int(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    /// k distinct indices drawn without replacement from [0, n).
    std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t k);

    std::uint64_t seed() const { return seed_; }
    std::uint64_t counter() const { return counter_; }

private:
    std::uint64_t seed_ = 0;
    std::uint64_t counter_ = 0;
};

inline std::vector<std::size_t> CounterRng::sample_without_replacement(std::size_t n, std::size_t k) {
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    if (k > n) k = n;
    // partial Fisher-Yates: first k slots are the sample
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(uniform_int(n - i));
        std::swap(idx[i], idx[j]);
    }
    idx.resize(k);
    return idx;
}

}  // namespace s2mam
