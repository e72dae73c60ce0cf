#include "stbext/framework.hpp"

#include <algorithm>

#include "stbext/errors.hpp"

namespace stbext {

Framework Framework::build(const std::vector<std::string>& names,
                           const std::vector<std::pair<std::string, std::string>>& attacks,
                           std::vector<std::string>* warnings) {
    std::vector<std::string> unique;
    std::unordered_map<std::string, ArgId> index;
    unique.reserve(names.size());
    for (const auto& n : names) {
        if (index.contains(n)) {
            if (warnings) warnings->push_back("duplicate argument '" + n + "' ignored");
            continue;
        }
        index.emplace(n, static_cast<ArgId>(unique.size()));
        unique.push_back(n);
    }

    std::vector<Attack> resolved;
    resolved.reserve(attacks.size());
    for (const auto& [from, to] : attacks) {
        auto a = index.find(from);
        if (a == index.end()) throw UnknownArgument(from);
        auto b = index.find(to);
        if (b == index.end()) throw UnknownArgument(to);
        resolved.push_back({a->second, b->second});
    }
    return from_indices(std::move(unique), std::move(resolved));
}

Framework Framework::from_indices(std::vector<std::string> names, std::vector<Attack> attacks) {
    Framework f;
    const std::size_t n = names.size();
    f.names_ = std::move(names);
    f.index_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) f.index_.emplace(f.names_[i], static_cast<ArgId>(i));

    for (const auto& [x, y] : attacks)
        if (x >= n || y >= n) throw std::out_of_range("attack endpoint outside argument range");

    std::sort(attacks.begin(), attacks.end());
    attacks.erase(std::unique(attacks.begin(), attacks.end()), attacks.end());
    f.attacks_ = std::move(attacks);

    f.succ_.assign(n, {});
    f.pred_.assign(n, {});
    f.self_loop_.assign(n, 0);
    for (const auto& [x, y] : f.attacks_) {
        f.succ_[x].push_back(y);
        f.pred_[y].push_back(x);
        if (x == y) f.self_loop_[x] = 1;
    }
    // succ_ is already sorted because attacks_ is; pred_ is filled in attacker
    // order per target, which is sorted too.
    return f;
}

std::optional<ArgId> Framework::find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

bool Framework::attacks(ArgId from, ArgId to) const noexcept {
    const auto& s = succ_[from];
    return std::binary_search(s.begin(), s.end(), to);
}

ArgSet Framework::targets_of(const ArgSet& set) const {
    ArgSet out(size());
    set.for_each([&](ArgId x) {
        for (ArgId y : succ_[x]) out.insert(y);
    });
    return out;
}

ArgSet Framework::attackers_of(const ArgSet& set) const {
    ArgSet out(size());
    set.for_each([&](ArgId x) {
        for (ArgId y : pred_[x]) out.insert(y);
    });
    return out;
}

std::vector<std::string> Framework::names_of(std::span<const ArgId> args) const {
    std::vector<std::string> out;
    out.reserve(args.size());
    for (ArgId a : args) out.push_back(names_[a]);
    return out;
}

InitialPartition initial_partition(const Framework& f) {
    InitialPartition p{ArgSet(f.size()), ArgSet(f.size())};
    for (ArgId x = 0; x < f.size(); ++x) {
        if (f.self_attacking(x))
            p.tabu.insert(x);
        else
            p.choice.insert(x);
    }
    return p;
}

} // namespace stbext
