#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>

#include "stbext/framework.hpp"

namespace stbext {

// Result of a propagation step. Ok after a full propagation means a fixpoint
// was reached; DeadEnd means the current branch has no stable completion.
enum class Status { Ok, DeadEnd };

// How the branching argument is chosen among the undecided ones. Ties always
// go to the lowest index.
enum class PickOrder {
    Lex,    // lowest index
    MaxOut, // most targets
    MaxIn,  // most attackers
};

std::optional<PickOrder> parse_pick_order(std::string_view name);
std::string_view to_string(PickOrder order);

// Picks among the arguments for which `eligible(x)` holds.
template <class Eligible>
std::optional<ArgId> pick_argument(const Framework& f, PickOrder order, Eligible&& eligible) {
    std::optional<ArgId> best;
    std::size_t best_score = 0;
    for (ArgId x = 0; x < f.size(); ++x) {
        if (!eligible(x)) continue;
        if (order == PickOrder::Lex) return x;
        std::size_t score = order == PickOrder::MaxOut ? f.targets(x).size() : f.attackers(x).size();
        if (!best || score > best_score) {
            best = x;
            best_score = score;
        }
    }
    return best;
}

struct SearchStats {
    std::uint64_t branches = 0;     // branch points explored
    std::uint64_t propagations = 0; // arguments accepted by propagation or branching
    std::uint64_t dead_ends = 0;
    std::uint64_t solutions = 0;
};

// Receives each extension as it is found. Returning false stops the search.
using ExtensionSink = std::function<bool(const Extension&)>;

} // namespace stbext
