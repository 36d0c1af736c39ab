#pragma once

#include <cassert>
#include <cstdint>
#include <limits>
#include <random>
#include <string_view>
#include <utility>
#include <vector>

namespace committee_lab {

// splitmix64 finalizer, used to fold stream labels into generator seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// FNV-1a over the raw bytes; turns textual labels into stream labels.
constexpr std::uint64_t hash_label(std::string_view s) noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

// One deterministic random stream. mt19937_64 underneath; the distributions
// are implemented here rather than taken from <random> so that identical
// seeds give identical streams on every platform and standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // Uniform in [0, 1), 53 mantissa bits.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Unbiased uniform integer in [0, n); rejection sampling.
    std::uint64_t below(std::uint64_t n) {
        assert(n >= 1);
        if (n <= 1) return 0;
        const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
        const std::uint64_t limit = max - max % n;
        std::uint64_t v;
        do {
            v = next_u64();
        } while (v >= limit);
        return v % n;
    }

    int below_int(int n) { return static_cast<int>(below(static_cast<std::uint64_t>(n))); }

    // Box-Muller; consumes exactly two uniforms per call.
    double normal(double mean, double sigma);

    // Fisher-Yates, descending index order.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[below(i)]);
        }
    }

private:
    std::mt19937_64 gen_;
};

// Hierarchical stream key: a master seed plus a chain of labels. Identical
// (seed, labels) always yields the identical byte stream, and sibling
// streams never interact, so replications and rules can run in parallel.
class RngSeed {
public:
    explicit RngSeed(std::uint64_t seed) : state_(splitmix64(seed)) {}

    RngSeed with(std::uint64_t label) const {
        RngSeed child = *this;
        child.state_ = splitmix64(child.state_ ^ splitmix64(label));
        return child;
    }

    RngSeed with(int label) const { return with(static_cast<std::uint64_t>(label)); }

    RngSeed with(std::string_view label) const { return with(hash_label(label)); }

    Rng stream() const { return Rng(state_); }

private:
    std::uint64_t state_;
};

}  // namespace committee_lab
