#include "stbext/generators.hpp"

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "stbext/errors.hpp"

namespace stbext::gen {

namespace {

std::vector<std::string> default_names(std::size_t n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 0; i < n; ++i) names.push_back("a" + std::to_string(i));
    return names;
}

void add_clique(std::vector<Attack>& attacks, ArgId first, ArgId last) {
    for (ArgId x = first; x < last; ++x)
        for (ArgId y = first; y < last; ++y)
            if (x != y) attacks.push_back({x, y});
}

} // namespace

Framework random_af(const GenSpec& spec) {
    if (!(spec.p >= 0.0 && spec.p <= 1.0)) throw std::invalid_argument("attack probability must lie in [0, 1]");

    std::mt19937_64 rng(spec.seed);
    std::vector<Attack> attacks;
    for (ArgId x = 0; x < spec.n; ++x) {
        for (ArgId y = 0; y < spec.n; ++y) {
            if (x == y && !spec.allow_self_loops) continue;
            const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (u < spec.p) attacks.push_back({x, y});
        }
    }
    return Framework::from_indices(default_names(spec.n), std::move(attacks));
}

Family parse_family(std::string_view name) {
    if (name == "cycle") return Family::Cycle;
    if (name == "two_cliques") return Family::TwoCliques;
    if (name == "chain") return Family::Chain;
    throw UnknownFamily(std::string(name));
}

Framework family(Family kind, std::size_t n) {
    if (n == 0) throw std::invalid_argument("family size must be at least 1");
    const auto m = static_cast<ArgId>(n);
    std::vector<Attack> attacks;
    switch (kind) {
    case Family::Cycle:
        for (ArgId x = 0; x < m; ++x) attacks.push_back({x, (x + 1) % m});
        break;
    case Family::Chain:
        for (ArgId x = 0; x + 1 < m; ++x) attacks.push_back({x, x + 1});
        break;
    case Family::TwoCliques: {
        const ArgId split = (m + 1) / 2;
        add_clique(attacks, 0, split);
        add_clique(attacks, split, m);
        break;
    }
    }
    return Framework::from_indices(default_names(n), std::move(attacks));
}

Framework family(std::string_view name, std::size_t n) {
    return family(parse_family(name), n);
}

} // namespace stbext::gen
