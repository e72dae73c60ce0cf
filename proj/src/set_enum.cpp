#include "stbext/set_enum.hpp"

namespace stbext::set_enum {

namespace {

bool attackers_within(const Framework& f, ArgId x, const ArgSet& allowed) {
    for (ArgId y : f.attackers(x))
        if (!allowed.contains(y)) return false;
    return true;
}

class Search {
public:
    Search(const Framework& f, const ExtensionSink& sink, const Options& options)
        : f_(f), sink_(sink), options_(options) {}

    std::size_t run() {
        SetState root = SetState::initial(f_);
        notify_state(root);
        visit(std::move(root));
        return delivered_;
    }

private:
    void visit(SetState state) {
        if (stopped_) return;
        if (propagate(state, f_, options_.observer, options_.stats) == Status::DeadEnd) return;

        if (state.choice.empty()) {
            if (state.tabu.empty()) report(state);
            return;
        }

        const ArgId x = *pick_argument(f_, options_.order, [&](ArgId a) { return state.choice.contains(a); });
        if (options_.stats) {
            ++options_.stats->branches;
            ++options_.stats->propagations;
        }

        SetState with = apply_join(state, f_, ArgSet(f_.size(), {x}));
        notify_state(with);
        visit(std::move(with));
        if (stopped_) return;

        SetState without = apply_exclude(state, x);
        notify_state(without);
        visit(std::move(without));
    }

    void report(const SetState& state) {
        if (options_.stats) ++options_.stats->solutions;
        ++delivered_;
        if (!sink_(Extension{state.accepted.members()})) stopped_ = true;
    }

    void notify_state(const SetState& s) {
        if (options_.observer) options_.observer->on_state(s);
    }

    const Framework& f_;
    const ExtensionSink& sink_;
    Options options_;
    std::size_t delivered_ = 0;
    bool stopped_ = false;
};

} // namespace

SetState SetState::initial(const Framework& f) {
    auto [choice, tabu] = initial_partition(f);
    return SetState{ArgSet(f.size()), ArgSet(f.size()), std::move(choice), std::move(tabu)};
}

bool dead_end(const SetState& state, const Framework& f) {
    const ArgSet closed = state.defeated | state.tabu;
    bool found = false;
    state.tabu.for_each([&](ArgId x) {
        if (!found && attackers_within(f, x, closed)) found = true;
    });
    return found;
}

ArgSet find_alpha(const SetState& state, const Framework& f) {
    const ArgSet closed = state.defeated | state.tabu;
    ArgSet alpha(f.size());
    state.choice.for_each([&](ArgId x) {
        if (attackers_within(f, x, closed)) alpha.insert(x);
    });
    return alpha;
}

std::optional<ArgId> find_beta(const SetState& state, const Framework& f) {
    std::optional<ArgId> beta;
    state.tabu.for_each([&](ArgId x) {
        if (beta) return;
        std::optional<ArgId> only;
        std::size_t count = 0;
        for (ArgId y : f.attackers(x)) {
            if (state.choice.contains(y)) {
                only = y;
                if (++count > 1) break;
            }
        }
        if (count == 1) beta = only;
    });
    return beta;
}

SetState apply_join(const SetState& state, const Framework& f, const ArgSet& delta) {
    const ArgSet delta_out = f.targets_of(delta);
    const ArgSet delta_in = f.attackers_of(delta);
    SetState next;
    next.accepted = state.accepted | delta;
    next.defeated = state.defeated | delta_out;
    next.choice = state.choice - (delta | delta_out | delta_in);
    next.tabu = (state.tabu | delta_in) - next.defeated;
    return next;
}

SetState apply_exclude(const SetState& state, ArgId x) {
    SetState next = state;
    next.choice.erase(x);
    next.tabu.insert(x);
    return next;
}

bool is_solution(const SetState& state) {
    return state.choice.empty() && state.tabu.empty();
}

Status propagate(SetState& state, const Framework& f, Observer* observer, SearchStats* stats) {
    for (;;) {
        if (dead_end(state, f)) {
            if (observer) observer->on_dead_end(state);
            if (stats) ++stats->dead_ends;
            return Status::DeadEnd;
        }

        const ArgSet alpha = find_alpha(state, f);
        if (!alpha.empty()) {
            if (observer) alpha.for_each([&](ArgId x) { observer->on_forced(state, x); });
            if (stats) stats->propagations += alpha.size();
            state = apply_join(state, f, alpha);
            if (observer) observer->on_state(state);
        }

        const auto beta = find_beta(state, f);
        if (beta) {
            if (observer) observer->on_forced(state, *beta);
            if (stats) ++stats->propagations;
            state = apply_join(state, f, ArgSet(f.size(), {*beta}));
            if (observer) observer->on_state(state);
        }

        if (alpha.empty() && !beta) return Status::Ok;
    }
}

std::size_t enumerate(const Framework& f, const ExtensionSink& sink, const Options& options) {
    return Search(f, sink, options).run();
}

} // namespace stbext::set_enum
