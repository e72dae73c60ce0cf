#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "stbext/framework.hpp"
#include "stbext/label_enum.hpp"
#include "stbext/set_enum.hpp"

// Executable forms of the state invariants both engines maintain. Each check
// recomputes everything from the framework and returns a description of the
// first violation found, or nothing.
namespace stbext::invariants {

// accepted is conflict-free and defeated is exactly its target set; choice
// avoids accepted, its targets and its attackers; tabu is everything not in
// accepted, defeated or choice.
std::optional<std::string> check_set_state(const Framework& f, const set_enum::SetState& state);

// Reads the labelling as sets (in, out, blank, must_out) and checks that
// out is the target set of in and that those sets satisfy check_set_state.
std::optional<std::string> check_labelling(const Framework& f, const label_enum::LabelState& state);

// For every blank or must_out argument the counter equals its number of
// blank attackers.
std::optional<std::string> check_counters(const Framework& f, const label_enum::LabelState& state);

// The counter tests agree with the set-level tests they replace:
//   must_out, counter 0  <=> tabu with all attackers defeated or tabu
//   blank, counter 0     <=> choice with all attackers defeated or tabu
//   must_out, counter 1  <=> tabu with exactly one choice attacker
std::optional<std::string> check_counter_tests(const Framework& f, const label_enum::LabelState& state);

// All three label checks.
std::optional<std::string> check_label_state(const Framework& f, const label_enum::LabelState& state);

// Runs check_set_state at every state the set engine reports and throws
// InvariantViolation on the first failure.
class SetChecker : public set_enum::Observer {
public:
    explicit SetChecker(const Framework& f) : f_(f) {}
    void on_state(const set_enum::SetState& s) override;
    std::uint64_t checks() const noexcept { return checks_; }

private:
    const Framework& f_;
    std::uint64_t checks_ = 0;
};

// Runs check_label_state at every completed boundary of the label engine
// (dead-end boundaries are skipped, their labelling is mid-update) and throws
// InvariantViolation on the first failure.
class LabelChecker : public label_enum::Observer {
public:
    explicit LabelChecker(const Framework& f) : f_(f) {}
    void on_boundary(const label_enum::Boundary& b, const label_enum::LabelState& s) override;
    std::uint64_t checks() const noexcept { return checks_; }

private:
    const Framework& f_;
    std::uint64_t checks_ = 0;
};

} // namespace stbext::invariants
