#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "stbext/arg_set.hpp"
#include "stbext/framework.hpp"
#include "stbext/search.hpp"

// Labelling-based enumeration of stable extensions with attacker counters and
// trail-based backtracking.
//
// Labels mirror the set engine: in = accepted, out = defeated,
// blank = choice, must_out = tabu. For every blank or must_out argument the
// counter holds its number of blank attackers, so the pruning tests of the set
// engine become O(1) checks on counter updates. Counters of in/out arguments
// are not maintained and may be stale.
namespace stbext::label_enum {

enum class Label : std::uint8_t { Blank, In, Out, MustOut };
std::string_view to_string(Label label);

// The point in the search that produced a boundary notification.
enum class BoundaryKind : std::uint8_t {
    Init,        // initial labelling
    AssignIn,    // an argument was popped from the worklist and accepted
    Branch,      // an argument was chosen and queued as the include branch
    MarkMustOut, // the branching argument was excluded after its include branch
};
std::string_view to_string(BoundaryKind kind);

struct Boundary {
    std::uint64_t state_id = 0;
    BoundaryKind kind = BoundaryKind::Init;
    // The step stopped early because the branch cannot be completed; the
    // labelling is then only partially updated.
    bool dead_end = false;
};

// Labels, counters and worklist at one instant.
struct Snapshot {
    std::vector<Label> labels;
    std::vector<std::uint32_t> counters;
    std::vector<ArgId> worklist; // ascending
    friend bool operator==(const Snapshot&, const Snapshot&) = default;
};

class LabelState;

class Observer {
public:
    virtual ~Observer() = default;
    virtual void on_boundary(const Boundary&, const LabelState&) {}
    // `arg` was queued because every stable completion must contain it.
    virtual void on_forced(const LabelState&, ArgId) {}
    virtual void on_dead_end(const LabelState&) {}
    virtual void on_checkpoint(const LabelState&) {}
    virtual void on_rollback(const LabelState&) {}
};

class LabelState {
public:
    // Self-attacking arguments start must_out, all others blank; each counter
    // is the number of non-self-attacking attackers; the worklist holds the
    // blank arguments with a zero counter.
    explicit LabelState(const Framework& f, Observer* observer = nullptr, SearchStats* stats = nullptr);

    const Framework& framework() const noexcept { return *f_; }

    Label label(ArgId a) const noexcept { return labels_[a]; }
    std::uint32_t counter(ArgId a) const noexcept { return counters_[a]; }
    std::span<const Label> labels() const noexcept { return labels_; }
    std::span<const std::uint32_t> counters() const noexcept { return counters_; }
    const ArgSet& worklist() const noexcept { return worklist_; }

    std::size_t blank_count() const noexcept { return blank_count_; }
    std::size_t must_out_count() const noexcept { return must_out_count_; }

    // No blank and no must_out argument left; the in-labelled arguments then
    // form a stable extension.
    bool is_solution() const noexcept { return blank_count_ == 0 && must_out_count_ == 0; }
    Extension accepted() const;
    Snapshot snapshot() const;

    // Id of the most recently entered state. States are entered by assign_in
    // and mark_must_out; the initial labelling is state 1.
    std::uint64_t state_id() const noexcept { return state_id_; }

    // Queues a blank argument without treating it as forced.
    void enqueue(ArgId x);

    // Accepts a blank argument q: its must_out targets become out, each blank
    // neighbour becomes out (if q attacks it) or must_out, and the counters
    // of that neighbour's targets are decremented with their triggers.
    Status assign_in(ArgId q);

    // Pops the worklist in ascending order until it is empty or a dead end is
    // hit. A popped argument already in is skipped; one labelled out or
    // must_out is a dead end.
    Status drain();

    // Excludes a blank argument x and decrements its targets' counters.
    Status mark_must_out(ArgId x);

    void checkpoint();
    // Restores labels, counters and worklist to the matching checkpoint.
    // Throws UnbalancedRollback without one.
    void rollback();
    std::size_t checkpoint_depth() const noexcept { return checkpoints_.size(); }
    std::size_t trail_size() const noexcept { return trail_.size(); }

    // Reports a Branch boundary for the current state.
    void announce_branch();

private:
    struct TrailEntry {
        enum class Kind : std::uint8_t { Label, Counter, Enqueue, Dequeue };
        Kind kind;
        ArgId arg;
        std::uint32_t old;
    };

    void relabel(ArgId x, Label to);
    void push(ArgId x);
    void pop(ArgId x);
    void force(ArgId x);
    // Decrements x's counter and applies the three counter triggers; false
    // on dead end.
    bool decrement(ArgId x);
    Status fail(BoundaryKind kind);
    void count(Label l, int delta) noexcept;

    const Framework* f_;
    Observer* observer_;
    SearchStats* stats_;
    std::vector<Label> labels_;
    std::vector<std::uint32_t> counters_;
    ArgSet worklist_;
    std::size_t blank_count_ = 0;
    std::size_t must_out_count_ = 0;
    std::vector<TrailEntry> trail_;
    std::vector<std::size_t> checkpoints_;
    std::uint64_t state_id_ = 1;
    std::uint64_t next_state_id_ = 2;
};

// One recorded boundary, with a full snapshot of the state.
struct TraceEvent {
    std::uint64_t state_id = 0;
    BoundaryKind kind = BoundaryKind::Init;
    bool dead_end = false;
    Snapshot snapshot;
};

TraceEvent make_trace_event(const Boundary& boundary, const LabelState& state);

// Collects every boundary as a TraceEvent.
class TraceRecorder : public Observer {
public:
    void on_boundary(const Boundary& b, const LabelState& s) override { events.push_back(make_trace_event(b, s)); }
    std::vector<TraceEvent> events;
};

// Forwards every notification to a list of observers, in order.
class ObserverList : public Observer {
public:
    void add(Observer* o) {
        if (o) observers_.push_back(o);
    }
    bool empty() const noexcept { return observers_.empty(); }

    void on_boundary(const Boundary& b, const LabelState& s) override {
        for (auto* o : observers_) o->on_boundary(b, s);
    }
    void on_forced(const LabelState& s, ArgId a) override {
        for (auto* o : observers_) o->on_forced(s, a);
    }
    void on_dead_end(const LabelState& s) override {
        for (auto* o : observers_) o->on_dead_end(s);
    }
    void on_checkpoint(const LabelState& s) override {
        for (auto* o : observers_) o->on_checkpoint(s);
    }
    void on_rollback(const LabelState& s) override {
        for (auto* o : observers_) o->on_rollback(s);
    }

private:
    std::vector<Observer*> observers_;
};

struct Options {
    PickOrder order = PickOrder::Lex;
    Observer* observer = nullptr;
    SearchStats* stats = nullptr;
};

// Delivers every stable extension of f to `sink` exactly once and returns
// how many were delivered.
std::size_t enumerate(const Framework& f, const ExtensionSink& sink, const Options& options = {});

} // namespace stbext::label_enum
