#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "stbext/arg_set.hpp"

namespace stbext {

struct Attack {
    ArgId attacker;
    ArgId target;
    friend auto operator<=>(const Attack&, const Attack&) = default;
};

// An abstract argumentation framework (A, R). Immutable after construction;
// safe to share read-only between concurrent searches.
//
// Indices follow declaration order. targets(x) is {x}+ and attackers(x) is
// {x}-, both sorted and duplicate-free.
class Framework {
public:
    Framework() = default;

    // Builds from external names. Duplicate names and duplicate attacks are
    // dropped; each dropped duplicate name appends a message to `warnings`
    // when given. Throws UnknownArgument for an undeclared attack endpoint.
    static Framework build(const std::vector<std::string>& names,
                           const std::vector<std::pair<std::string, std::string>>& attacks,
                           std::vector<std::string>* warnings = nullptr);

    // Builds from already-resolved indices. Names must be distinct.
    static Framework from_indices(std::vector<std::string> names, std::vector<Attack> attacks);

    std::size_t size() const noexcept { return names_.size(); }
    bool empty() const noexcept { return names_.empty(); }

    const std::string& name(ArgId a) const { return names_[a]; }
    const std::vector<std::string>& names() const noexcept { return names_; }
    std::optional<ArgId> find(std::string_view name) const;

    std::span<const ArgId> targets(ArgId a) const noexcept { return succ_[a]; }
    std::span<const ArgId> attackers(ArgId a) const noexcept { return pred_[a]; }
    bool self_attacking(ArgId a) const noexcept { return self_loop_[a] != 0; }
    bool attacks(ArgId from, ArgId to) const noexcept;

    // Sorted by (attacker, target).
    const std::vector<Attack>& attack_list() const noexcept { return attacks_; }

    // T+ and T- for a whole set.
    ArgSet targets_of(const ArgSet& set) const;
    ArgSet attackers_of(const ArgSet& set) const;

    // Argument names for a list of indices.
    std::vector<std::string> names_of(std::span<const ArgId> args) const;

    friend bool operator==(const Framework& a, const Framework& b) {
        return a.names_ == b.names_ && a.attacks_ == b.attacks_;
    }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, ArgId> index_;
    std::vector<Attack> attacks_;
    std::vector<std::vector<ArgId>> succ_;
    std::vector<std::vector<ArgId>> pred_;
    std::vector<char> self_loop_;
};

// Starting point of both engines: every non-self-attacking argument is still
// eligible, every self-attacking one is excluded up front.
struct InitialPartition {
    ArgSet choice;
    ArgSet tabu;
};
InitialPartition initial_partition(const Framework& f);

// One stable extension, members sorted by index.
struct Extension {
    std::vector<ArgId> members;
    friend auto operator<=>(const Extension&, const Extension&) = default;
};

} // namespace stbext
