#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "stbext/framework.hpp"

namespace stbext::gen {

struct GenSpec {
    std::size_t n = 0;
    double p = 0.0; // attack probability, in [0, 1]
    bool allow_self_loops = false;
    std::uint64_t seed = 0;
};

// Erdos-Renyi style random framework over arguments a0..a(n-1).
//
// Stream contract: a std::mt19937_64 seeded with `seed` is consumed once per
// candidate pair, pairs visited as (x, y) in row-major order and the diagonal
// skipped when self-loops are off. A draw r becomes u = (r >> 11) * 2^-53 and
// the pair is an attack iff u < p. The output is therefore identical on every
// platform.
Framework random_af(const GenSpec& spec);

enum class Family {
    Cycle,      // a0 -> a1 -> ... -> a(n-1) -> a0
    TwoCliques, // two disjoint symmetric cliques of sizes ceil(n/2), floor(n/2)
    Chain,      // a0 -> a1 -> ... -> a(n-1)
};

// "cycle", "two_cliques", "chain"; throws UnknownFamily otherwise.
Family parse_family(std::string_view name);

// Requires n >= 1.
Framework family(Family kind, std::size_t n);
Framework family(std::string_view name, std::size_t n);

} // namespace stbext::gen
