// Deterministic splitmix64 generator; certification derives per-sample seeds from it.
#pragma once

#include <cstdint>

#include "phinmod/field.hpp"

namespace phinmod {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, n).
    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

    long range(long lo, long hi) {  // inclusive
        return lo + (long)below((std::uint64_t)(hi - lo + 1));
    }

    /// Small nonzero rational with numerator/denominator in [-4,4]x[1,3].
    Rat small_rational(bool allow_zero = true) {
        long num = range(-4, 4);
        if (!allow_zero)
            while (num == 0) num = range(-4, 4);
        long den = range(1, 3);
        Rat q(num, den);
        q.canonicalize();
        return q;
    }

    /// Derive an independent stream (fixed counter scheme for per-sample seeds).
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t counter) {
        Rng r(seed ^ (0x9e3779b97f4a7c15ULL * (counter + 1)));
        return r.next();
    }

private:
    std::uint64_t state_;
};

}  // namespace phinmod
