#pragma once

#include <cstdint>
#include <initializer_list>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "stbext/arg_set.hpp"
#include "stbext/framework.hpp"
#include "stbext/generators.hpp"

namespace stbext::testing {

// The six-argument framework of the worked examples, a..f.
extern const std::vector<std::pair<std::string, std::string>> kH1Attacks;
Framework h1();
Framework h1_with(const std::vector<std::pair<std::string, std::string>>& attacks);
std::string h1_apx();
std::string h1_tgf();

ArgSet set_of(const Framework& f, std::initializer_list<std::string_view> names);
Extension ext_of(const Framework& f, std::initializer_list<std::string_view> names);

// Extensions as a set of member lists, for order-insensitive comparison.
std::set<std::vector<ArgId>> as_set(const std::vector<Extension>& exts);

// Ground truth written straight from the definition, independent of the
// library oracle: S is stable iff no member is attacked by S and every
// non-member is. Sets are bitmasks, so n <= 20.
class Reference {
public:
    explicit Reference(const Framework& f);

    bool stable(std::uint32_t s) const;
    std::vector<std::uint32_t> extensions() const;
    // Stable T with base <= T <= base | pool.
    std::vector<std::uint32_t> completions(std::uint32_t base, std::uint32_t pool) const;
    std::set<std::vector<ArgId>> extension_set() const;

    static std::uint32_t mask(const ArgSet& s);

private:
    std::size_t n_;
    std::vector<std::uint32_t> attackers_;
};

// The random instance grid shared by the property tests: n in [1,12],
// p in {0.1,0.2,0.3,0.5}, self-loops off/on, `per_cell` seeds per cell.
std::vector<gen::GenSpec> random_grid(std::size_t per_cell, std::uint64_t salt = 0);

} // namespace stbext::testing
