// Reproducible query generation. std::mt19937_64's output sequence is fixed
// by the standard; the mapping to doubles below is explicit so that streams
// match across standard libraries (std::uniform_real_distribution does not).

#ifndef COXETER_RANDOM_HPP
#define COXETER_RANDOM_HPP

#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>

namespace coxeter {

/// splitmix64 finalizer; combines a base seed with stream identifiers.
constexpr std::uint64_t mix_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> stream) noexcept {
    std::uint64_t h = seed;
    for (std::uint64_t v : stream) {
        h += 0x9e3779b97f4a7c15ULL + v;
        h = (h ^ (h >> 30)) * 0xbf58476d1ce4e5b9ULL;
        h = (h ^ (h >> 27)) * 0x94d049bb133111ebULL;
        h ^= h >> 31;
    }
    return h;
}

class QueryStream {
public:
    QueryStream(std::uint64_t seed, double range) : engine_(seed), range_(range) {}

    /// Uniform on [-range, range).
    double next() noexcept {
        const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
        return range_ * (2.0 * unit - 1.0);
    }

    void fill(std::span<double> out) noexcept {
        for (double& v : out) {
            v = next();
        }
    }

    /// Uniform integer in [lo, hi] (modulo reduction; the bias is irrelevant
    /// for test inputs).
    std::int64_t next_int(std::int64_t lo, std::int64_t hi) noexcept {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(engine_() % span);
    }

private:
    std::mt19937_64 engine_;
    double range_;
};

} // namespace coxeter

#endif // COXETER_RANDOM_HPP
