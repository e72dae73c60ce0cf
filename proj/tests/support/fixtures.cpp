#include "fixtures.hpp"

#include <stdexcept>

#include "stbext/io.hpp"

namespace stbext::testing {

const std::vector<std::pair<std::string, std::string>> kH1Attacks = {
    {"a", "b"}, {"b", "c"}, {"b", "d"}, {"d", "b"}, {"d", "e"},
    {"d", "f"}, {"e", "a"}, {"e", "c"}, {"e", "f"}, {"f", "a"},
};

Framework h1_with(const std::vector<std::pair<std::string, std::string>>& attacks) {
    return Framework::build({"a", "b", "c", "d", "e", "f"}, attacks);
}

Framework h1() { return h1_with(kH1Attacks); }

std::string h1_apx() {
    std::string text = "% H1\narg(a). arg(b). arg(c).\narg(d). arg(e). arg(f).\n";
    for (const auto& [x, y] : kH1Attacks) text += "att(" + x + "," + y + ").\n";
    return text;
}

std::string h1_tgf() {
    std::string text = "a\nb\nc\nd\ne\nf\n#\n";
    for (const auto& [x, y] : kH1Attacks) text += x + " " + y + "\n";
    return text;
}

ArgSet set_of(const Framework& f, std::initializer_list<std::string_view> names) {
    ArgSet s(f.size());
    for (auto n : names) {
        auto id = f.find(n);
        if (!id) throw std::invalid_argument("no argument " + std::string(n));
        s.insert(*id);
    }
    return s;
}

Extension ext_of(const Framework& f, std::initializer_list<std::string_view> names) {
    return Extension{set_of(f, names).members()};
}

std::set<std::vector<ArgId>> as_set(const std::vector<Extension>& exts) {
    std::set<std::vector<ArgId>> out;
    for (const auto& e : exts) out.insert(e.members);
    return out;
}

Reference::Reference(const Framework& f) : n_(f.size()), attackers_(f.size(), 0) {
    if (n_ > 20) throw std::invalid_argument("reference oracle limited to 20 arguments");
    for (const auto& a : f.attack_list()) attackers_[a.target] |= 1u << a.attacker;
}

bool Reference::stable(std::uint32_t s) const {
    for (std::size_t x = 0; x < n_; ++x) {
        const bool member = (s >> x) & 1u;
        const bool attacked = (attackers_[x] & s) != 0;
        if (member == attacked) return false;
    }
    return true;
}

std::vector<std::uint32_t> Reference::extensions() const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t s = 0; s < (1u << n_); ++s)
        if (stable(s)) out.push_back(s);
    return out;
}

std::vector<std::uint32_t> Reference::completions(std::uint32_t base, std::uint32_t pool) const {
    std::vector<std::uint32_t> out;
    pool &= ~base;
    // Walk every submask of pool, including pool itself and 0.
    std::uint32_t sub = pool;
    for (;;) {
        if (stable(base | sub)) out.push_back(base | sub);
        if (sub == 0) break;
        sub = (sub - 1) & pool;
    }
    return out;
}

std::set<std::vector<ArgId>> Reference::extension_set() const {
    std::set<std::vector<ArgId>> out;
    for (auto s : extensions()) {
        std::vector<ArgId> members;
        for (std::size_t x = 0; x < n_; ++x)
            if ((s >> x) & 1u) members.push_back(static_cast<ArgId>(x));
        out.insert(members);
    }
    return out;
}

std::uint32_t Reference::mask(const ArgSet& s) {
    std::uint32_t m = 0;
    s.for_each([&](ArgId x) { m |= 1u << x; });
    return m;
}

std::vector<gen::GenSpec> random_grid(std::size_t per_cell, std::uint64_t salt) {
    std::vector<gen::GenSpec> specs;
    const double ps[] = {0.1, 0.2, 0.3, 0.5};
    std::uint64_t cell = 0;
    for (std::size_t n = 1; n <= 12; ++n)
        for (double p : ps)
            for (bool loops : {false, true}) {
                for (std::size_t k = 0; k < per_cell; ++k)
                    specs.push_back({n, p, loops, salt + cell * 1000 + k});
                ++cell;
            }
    return specs;
}

} // namespace stbext::testing
