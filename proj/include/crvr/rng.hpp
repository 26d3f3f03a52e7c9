#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace crvr {

// splitmix64 step, used to whiten seeds when deriving per-stage streams.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// FNV-1a over the stage tag.
inline std::uint64_t hash_tag(std::string_view tag) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : tag) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

// Deterministic random stream. mt19937_64 is specified bit-exactly by the
// standard; the extraction methods below avoid std::uniform_*_distribution,
// whose output is implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Independent stream for one pipeline stage, derived from the run seed.
    static Rng for_stage(std::uint64_t seed, std::string_view stage) {
        std::uint64_t s = seed ^ hash_tag(stage);
        return Rng(splitmix64(s));
    }

    std::uint64_t next_u64() { return engine_(); }

    // uniform in [0, 1)
    double next_double() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // uniform in [lo, hi)
    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    bool bernoulli(double p) { return next_double() < p; }

    // uniform integer in [0, n), n > 0
    std::uint64_t next_below(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(engine_()) * n) >> 64);
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[next_below(i)]);
    }

    // Recorded in output metadata so runs remain reproducible across builds.
    static constexpr std::string_view name() { return "mt19937_64/sm64"; }

private:
    std::mt19937_64 engine_;
};

}  // namespace crvr
