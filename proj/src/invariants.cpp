#include "stbext/invariants.hpp"

#include "stbext/errors.hpp"

namespace stbext::invariants {

using label_enum::Label;
using label_enum::LabelState;
using set_enum::SetState;

namespace {

std::string describe(const Framework& f, const ArgSet& s) {
    std::string out = "{";
    bool first = true;
    s.for_each([&](ArgId a) {
        if (!first) out += ',';
        out += f.name(a);
        first = false;
    });
    return out + "}";
}

ArgSet with_label(const LabelState& state, Label l) {
    ArgSet s(state.labels().size());
    for (ArgId x = 0; x < state.labels().size(); ++x)
        if (state.label(x) == l) s.insert(x);
    return s;
}

std::uint32_t blank_attackers(const Framework& f, const LabelState& state, ArgId x) {
    std::uint32_t c = 0;
    for (ArgId y : f.attackers(x))
        if (state.label(y) == Label::Blank) ++c;
    return c;
}

} // namespace

std::optional<std::string> check_set_state(const Framework& f, const SetState& state) {
    const ArgSet plus = f.targets_of(state.accepted);
    const ArgSet minus = f.attackers_of(state.accepted);

    if (state.accepted.intersects(plus))
        return "accepted set " + describe(f, state.accepted) + " is not conflict-free";
    if (state.defeated != plus)
        return "defeated set " + describe(f, state.defeated) + " differs from targets of accepted " +
               describe(f, plus);
    if (!state.choice.is_subset_of((state.accepted | plus | minus).complement()))
        return "choice " + describe(f, state.choice) + " meets accepted, its targets or its attackers";
    if (state.tabu != (state.accepted | plus | state.choice).complement())
        return "tabu " + describe(f, state.tabu) + " is not the complement of accepted, defeated and choice";
    return std::nullopt;
}

std::optional<std::string> check_labelling(const Framework& f, const LabelState& state) {
    SetState view{with_label(state, Label::In), with_label(state, Label::Out), with_label(state, Label::Blank),
                  with_label(state, Label::MustOut)};
    if (auto v = check_set_state(f, view)) return "labelling: " + *v;
    return std::nullopt;
}

std::optional<std::string> check_counters(const Framework& f, const LabelState& state) {
    for (ArgId x = 0; x < f.size(); ++x) {
        const Label l = state.label(x);
        if (l != Label::Blank && l != Label::MustOut) continue;
        const std::uint32_t expected = blank_attackers(f, state, x);
        if (state.counter(x) != expected)
            return "counter of '" + f.name(x) + "' is " + std::to_string(state.counter(x)) + ", expected " +
                   std::to_string(expected);
    }
    return std::nullopt;
}

std::optional<std::string> check_counter_tests(const Framework& f, const LabelState& state) {
    const ArgSet defeated = with_label(state, Label::Out);
    const ArgSet choice = with_label(state, Label::Blank);
    const ArgSet tabu = with_label(state, Label::MustOut);
    const ArgSet closed = defeated | tabu;

    for (ArgId x = 0; x < f.size(); ++x) {
        bool all_closed = true;
        std::size_t choice_attackers = 0;
        for (ArgId y : f.attackers(x)) {
            if (!closed.contains(y)) all_closed = false;
            if (choice.contains(y)) ++choice_attackers;
        }
        const Label l = state.label(x);
        const std::uint32_t c = state.counter(x);

        const bool dead_sets = tabu.contains(x) && all_closed;
        const bool dead_counter = l == Label::MustOut && c == 0;
        if (dead_sets != dead_counter) return "dead-end counter test disagrees for '" + f.name(x) + "'";

        const bool alpha_sets = choice.contains(x) && all_closed;
        const bool alpha_counter = l == Label::Blank && c == 0;
        if (alpha_sets != alpha_counter) return "alpha counter test disagrees for '" + f.name(x) + "'";

        const bool beta_sets = tabu.contains(x) && choice_attackers == 1;
        const bool beta_counter = l == Label::MustOut && c == 1;
        if (beta_sets != beta_counter) return "beta counter test disagrees for '" + f.name(x) + "'";
    }
    return std::nullopt;
}

std::optional<std::string> check_label_state(const Framework& f, const LabelState& state) {
    if (auto v = check_labelling(f, state)) return v;
    if (auto v = check_counters(f, state)) return v;
    return check_counter_tests(f, state);
}

void SetChecker::on_state(const SetState& s) {
    ++checks_;
    if (auto v = check_set_state(f_, s)) throw InvariantViolation("set engine: " + *v);
}

void LabelChecker::on_boundary(const label_enum::Boundary& b, const LabelState& s) {
    if (b.dead_end) return;
    ++checks_;
    if (auto v = check_label_state(f_, s))
        throw InvariantViolation("label engine, state " + std::to_string(b.state_id) + " (" +
                                 std::string(label_enum::to_string(b.kind)) + "): " + *v);
}

} // namespace stbext::invariants
