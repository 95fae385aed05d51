#pragma once

#include <cstdint>

#include "ncx/matrix.hpp"

namespace testutil {

// splitmix64; self-contained so tests do not depend on library RNG choices
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    // inclusive range
    int in(int lo, int hi) { return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }
};

inline ncx::ExactMatrix random_matrix(Rng& rng, const ncx::CoefficientDomain& dom, std::size_t rows,
                                      std::size_t cols, int lo, int hi) {
    ncx::ExactMatrix m(dom, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m.set(i, j, ncx::Rat(rng.in(lo, hi)));
    return m;
}

} // namespace testutil
