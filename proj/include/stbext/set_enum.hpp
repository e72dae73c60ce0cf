#pragma once

#include <cstddef>
#include <optional>

#include "stbext/arg_set.hpp"
#include "stbext/framework.hpp"
#include "stbext/search.hpp"

// Set-based backtracking enumeration of stable extensions. This is the
// readable reference engine: every recursive call works on its own copy of
// the state.
namespace stbext::set_enum {

// Search state. `accepted` is the extension under construction and
// `defeated` the arguments it attacks. `choice` holds arguments that may still
// join; `tabu` holds arguments kept out of the extension that still need an
// attacker from it.
struct SetState {
    ArgSet accepted;
    ArgSet defeated;
    ArgSet choice;
    ArgSet tabu;

    static SetState initial(const Framework& f);
    friend bool operator==(const SetState&, const SetState&) = default;
};

// Some tabu argument can no longer be attacked: all of its attackers are
// defeated or tabu themselves.
bool dead_end(const SetState& state, const Framework& f);

// Choice arguments all of whose attackers are defeated or tabu. Each of them
// belongs to every stable completion of the state.
ArgSet find_alpha(const SetState& state, const Framework& f);

// A choice argument that is the only remaining choice attacker of some tabu
// argument. Witnesses are scanned in index order, so the result belongs to
// the lowest-indexed tabu argument that has exactly one choice attacker.
std::optional<ArgId> find_beta(const SetState& state, const Framework& f);

// Moves `delta` (a conflict-free subset of choice) into the extension and
// updates the other three sets accordingly.
SetState apply_join(const SetState& state, const Framework& f, const ArgSet& delta);

// Excludes x (a choice argument) from the extension.
SetState apply_exclude(const SetState& state, ArgId x);

// No choice and no tabu arguments left: `accepted` is stable.
bool is_solution(const SetState& state);

// Hooks into a running search; every method defaults to a no-op.
class Observer {
public:
    virtual ~Observer() = default;
    // After every join and every branch step.
    virtual void on_state(const SetState&) {}
    // `arg` was forced in by alpha/beta propagation; `state` is the state the
    // decision was made in.
    virtual void on_forced(const SetState&, ArgId) {}
    virtual void on_dead_end(const SetState&) {}
};

// Runs alpha/beta propagation to a fixpoint, modifying `state` in place.
Status propagate(SetState& state, const Framework& f, Observer* observer = nullptr,
                 SearchStats* stats = nullptr);

struct Options {
    PickOrder order = PickOrder::Lex;
    Observer* observer = nullptr;
    SearchStats* stats = nullptr;
};

// Delivers every stable extension of f to `sink` exactly once and returns
// how many were delivered.
std::size_t enumerate(const Framework& f, const ExtensionSink& sink, const Options& options = {});

} // namespace stbext::set_enum
