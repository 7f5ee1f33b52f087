#pragma once

#include "qkp/rational.hpp"
#include "qkp/xlaurent.hpp"

#include <cstdint>

namespace qkp {

/// Deterministic splitmix64 generator. Used instead of <random> so that a
/// seed reproduces byte-identical reports on every platform.
class Prng {
public:
    explicit Prng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [lo, hi] inclusive.
    long range(long lo, long hi) {
        if (hi < lo) throw std::invalid_argument("Prng: empty range");
        auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(next() % span);
    }

    /// Small nonzero rational with numerator in [-max_num, max_num] and
    /// denominator in [1, max_den].
    Rational rational(long max_num = 4, long max_den = 3) {
        long num = 0;
        while (num == 0) num = range(-max_num, max_num);
        return Rational(num, range(1, max_den));
    }

    /// Laurent polynomial with exponents in [emin, emax]; roughly half the
    /// slots are filled.
    XLaurent xlaurent(long emin, long emax) {
        XLaurent f;
        for (long e = emin; e <= emax; ++e)
            if (next() % 2 == 0) f.set(e, rational());
        if (f.is_zero()) f.set(range(emin, emax), rational());
        return f;
    }

private:
    std::uint64_t state_;
};

}  // namespace qkp
