#pragma once

#include <cstddef>
#include <vector>

#include "stbext/arg_set.hpp"
#include "stbext/framework.hpp"

// Definition-level ground truth. Nothing here shares code with the search
// engines; tests compare the engines against it.
namespace stbext::oracle {

inline constexpr std::size_t kMaxBruteForceArgs = 25;

// S+ == A \ S.
bool is_stable(const Framework& f, const ArgSet& s);
bool is_stable(const Framework& f, const Extension& ext);

// Every stable extension, found by testing all 2^n subsets, returned in
// lexicographic order of their sorted member lists. Throws TooLarge above
// kMaxBruteForceArgs arguments.
std::vector<Extension> enumerate_bruteforce(const Framework& f);

} // namespace stbext::oracle
