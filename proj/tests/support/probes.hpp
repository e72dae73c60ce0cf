#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "stbext/label_enum.hpp"
#include "stbext/set_enum.hpp"

namespace stbext::testing {

// Every forced argument must lie in all stable completions of the state it
// was forced in, and a dead end must have none. Completions are searched
// exhaustively with the reference oracle.
class SetSoundnessProbe : public set_enum::Observer {
public:
    explicit SetSoundnessProbe(const Framework& f) : ref_(f) {}
    void on_forced(const set_enum::SetState& s, ArgId x) override;
    void on_dead_end(const set_enum::SetState& s) override;

    std::uint64_t checks = 0;
    std::vector<std::string> failures;

private:
    Reference ref_;
};

class LabelSoundnessProbe : public label_enum::Observer {
public:
    explicit LabelSoundnessProbe(const Framework& f) : ref_(f) {}
    void on_forced(const label_enum::LabelState& s, ArgId x) override;
    void on_dead_end(const label_enum::LabelState& s) override;

    std::uint64_t checks = 0;
    std::vector<std::string> failures;

private:
    std::vector<std::uint32_t> completions(const label_enum::LabelState& s) const;
    Reference ref_;
};

// Snapshots the state at every checkpoint and compares on the matching
// rollback.
class RollbackProbe : public label_enum::Observer {
public:
    void on_checkpoint(const label_enum::LabelState& s) override { stack_.push_back(s.snapshot()); }
    void on_rollback(const label_enum::LabelState& s) override;

    std::uint64_t pairs = 0;
    std::uint64_t diffs = 0;

private:
    std::vector<label_enum::Snapshot> stack_;
};

} // namespace stbext::testing
