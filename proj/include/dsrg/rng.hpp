#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace dsrg {

/// Seeded random source with a platform-stable stream. std::mt19937_64's raw
/// output is specified by the standard, but the std distributions are not;
/// every draw here is hand-rolled on top of the raw stream so that identical
/// seeds give identical runs everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, n). Masked rejection sampling keeps the draw unbiased.
    std::uint64_t below(std::uint64_t n) {
        if (n <= 1) return 0;
        std::uint64_t mask = n - 1;
        mask |= mask >> 1;
        mask |= mask >> 2;
        mask |= mask >> 4;
        mask |= mask >> 8;
        mask |= mask >> 16;
        mask |= mask >> 32;
        for (;;) {
            const std::uint64_t x = engine_() & mask;
            if (x < n) return x;
        }
    }

    /// True with probability p. p >= 1 always fires; p <= 0 never does.
    bool chance(double p) {
        if (p >= 1.0) return true;
        if (p <= 0.0) return false;
        const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
        return u < p;
    }

    /// In-place Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[below(i)]);
        }
    }

    /// k distinct values from [0, n), in draw order.
    std::vector<std::size_t> sample(std::size_t n, std::size_t k) {
        std::vector<std::size_t> pool(n);
        for (std::size_t i = 0; i < n; ++i) pool[i] = i;
        std::vector<std::size_t> out;
        out.reserve(k);
        for (std::size_t i = 0; i < k && i < n; ++i) {
            const std::size_t j = i + static_cast<std::size_t>(below(n - i));
            std::swap(pool[i], pool[j]);
            out.push_back(pool[i]);
        }
        return out;
    }

private:
    std::mt19937_64 engine_;
};

/// splitmix64 step; used to derive independent worker seeds from one master
/// seed without overlapping streams in practice.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace dsrg
