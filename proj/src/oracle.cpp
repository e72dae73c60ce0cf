#include "stbext/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "stbext/errors.hpp"

namespace stbext::oracle {

bool is_stable(const Framework& f, const ArgSet& s) {
    return f.targets_of(s) == s.complement();
}

bool is_stable(const Framework& f, const Extension& ext) {
    for (ArgId a : ext.members)
        if (a >= f.size()) return false;
    return is_stable(f, ArgSet::from(f.size(), ext.members));
}

std::vector<Extension> enumerate_bruteforce(const Framework& f) {
    const std::size_t n = f.size();
    if (n > kMaxBruteForceArgs) throw TooLarge(n, kMaxBruteForceArgs);

    // Targets as bitmasks so each subset test is a handful of word operations.
    std::vector<std::uint32_t> out_mask(n, 0);
    for (const auto& [x, y] : f.attack_list()) out_mask[x] |= std::uint32_t{1} << y;
    const std::uint32_t all = (std::uint32_t{1} << n) - 1;

    std::vector<Extension> result;
    for (std::uint32_t s = 0;; ++s) {
        std::uint32_t attacked = 0;
        for (std::uint32_t rest = s; rest; rest &= rest - 1)
            attacked |= out_mask[static_cast<std::size_t>(std::countr_zero(rest))];
        if (attacked == (all & ~s)) {
            Extension e;
            for (std::size_t i = 0; i < n; ++i)
                if (s >> i & 1u) e.members.push_back(static_cast<ArgId>(i));
            result.push_back(std::move(e));
        }
        if (s == all) break;
    }
    std::sort(result.begin(), result.end());
    return result;
}

} // namespace stbext::oracle
