#include "stbext/label_enum.hpp"

#include <cassert>
#include <stdexcept>

#include "stbext/errors.hpp"

namespace stbext::label_enum {

std::string_view to_string(Label label) {
    switch (label) {
    case Label::Blank: return "blank";
    case Label::In: return "in";
    case Label::Out: return "out";
    case Label::MustOut: return "must_out";
    }
    return "?";
}

std::string_view to_string(BoundaryKind kind) {
    switch (kind) {
    case BoundaryKind::Init: return "init";
    case BoundaryKind::AssignIn: return "assign_in";
    case BoundaryKind::Branch: return "branch";
    case BoundaryKind::MarkMustOut: return "mark_must_out";
    }
    return "?";
}

LabelState::LabelState(const Framework& f, Observer* observer, SearchStats* stats)
    : f_(&f), observer_(observer), stats_(stats), labels_(f.size(), Label::Blank), counters_(f.size(), 0),
      worklist_(f.size()) {
    for (ArgId x = 0; x < f.size(); ++x) {
        if (f.self_attacking(x)) {
            labels_[x] = Label::MustOut;
            ++must_out_count_;
        } else {
            ++blank_count_;
        }
        for (ArgId y : f.attackers(x))
            if (!f.self_attacking(y)) ++counters_[x];
    }
    for (ArgId x = 0; x < f.size(); ++x)
        if (labels_[x] == Label::Blank && counters_[x] == 0) worklist_.insert(x);

    if (observer_) {
        observer_->on_boundary({state_id_, BoundaryKind::Init, false}, *this);
        worklist_.for_each([&](ArgId x) { observer_->on_forced(*this, x); });
    }
}

Extension LabelState::accepted() const {
    Extension e;
    for (ArgId x = 0; x < labels_.size(); ++x)
        if (labels_[x] == Label::In) e.members.push_back(x);
    return e;
}

Snapshot LabelState::snapshot() const {
    return Snapshot{labels_, counters_, worklist_.members()};
}

void LabelState::count(Label l, int delta) noexcept {
    if (l == Label::Blank)
        blank_count_ += static_cast<std::size_t>(delta);
    else if (l == Label::MustOut)
        must_out_count_ += static_cast<std::size_t>(delta);
}

void LabelState::relabel(ArgId x, Label to) {
    trail_.push_back({TrailEntry::Kind::Label, x, static_cast<std::uint32_t>(labels_[x])});
    count(labels_[x], -1);
    count(to, +1);
    labels_[x] = to;
}

void LabelState::push(ArgId x) {
    if (labels_[x] != Label::Blank)
        throw InvariantViolation("worklist entry '" + f_->name(x) + "' is not blank");
    if (worklist_.contains(x)) return;
    worklist_.insert(x);
    trail_.push_back({TrailEntry::Kind::Enqueue, x, 0});
}

void LabelState::pop(ArgId x) {
    if (!worklist_.contains(x)) return;
    worklist_.erase(x);
    trail_.push_back({TrailEntry::Kind::Dequeue, x, 0});
}

void LabelState::force(ArgId x) {
    if (observer_) observer_->on_forced(*this, x);
    push(x);
}

void LabelState::enqueue(ArgId x) {
    push(x);
}

bool LabelState::decrement(ArgId x) {
    assert(counters_[x] > 0);
    trail_.push_back({TrailEntry::Kind::Counter, x, counters_[x]});
    const std::uint32_t left = --counters_[x];
    switch (labels_[x]) {
    case Label::MustOut:
        // No attacker can join any more, so x can never be attacked.
        if (left == 0) return false;
        if (left == 1) {
            for (ArgId y : f_->attackers(x))
                if (labels_[y] == Label::Blank) force(y);
        }
        break;
    case Label::Blank:
        if (left == 0) force(x);
        break;
    default:
        break;
    }
    return true;
}

Status LabelState::fail(BoundaryKind kind) {
    if (stats_) ++stats_->dead_ends;
    if (observer_) {
        observer_->on_boundary({state_id_, kind, true}, *this);
        observer_->on_dead_end(*this);
    }
    return Status::DeadEnd;
}

Status LabelState::assign_in(ArgId q) {
    if (labels_[q] != Label::Blank) throw std::logic_error("assign_in: argument is not blank");
    state_id_ = next_state_id_++;
    if (stats_) ++stats_->propagations;

    pop(q);
    relabel(q, Label::In);
    const auto targets = f_->targets(q);
    const auto attackers = f_->attackers(q);
    for (ArgId z : targets)
        if (labels_[z] == Label::MustOut) relabel(z, Label::Out);

    // Blank neighbours in ascending index order; an argument both attacking
    // and attacked by q is visited once, as a target.
    std::size_t i = 0, j = 0;
    while (i < targets.size() || j < attackers.size()) {
        ArgId z;
        bool is_target;
        if (j == attackers.size() || (i < targets.size() && targets[i] <= attackers[j])) {
            z = targets[i];
            is_target = true;
            if (j < attackers.size() && attackers[j] == z) ++j;
            ++i;
        } else {
            z = attackers[j++];
            is_target = false;
        }
        if (labels_[z] != Label::Blank) continue;
        relabel(z, is_target ? Label::Out : Label::MustOut);
        for (ArgId x : f_->targets(z))
            if (!decrement(x)) return fail(BoundaryKind::AssignIn);
    }

    if (observer_) observer_->on_boundary({state_id_, BoundaryKind::AssignIn, false}, *this);
    return Status::Ok;
}

Status LabelState::drain() {
    while (auto next = worklist_.first()) {
        const ArgId q = *next;
        switch (labels_[q]) {
        case Label::In:
            pop(q);
            break;
        case Label::Out:
        case Label::MustOut:
            // q belongs to every stable completion but has been excluded.
            if (stats_) ++stats_->dead_ends;
            if (observer_) observer_->on_dead_end(*this);
            return Status::DeadEnd;
        case Label::Blank:
            if (assign_in(q) == Status::DeadEnd) return Status::DeadEnd;
            break;
        }
    }
    return Status::Ok;
}

Status LabelState::mark_must_out(ArgId x) {
    if (labels_[x] != Label::Blank) throw std::logic_error("mark_must_out: argument is not blank");
    state_id_ = next_state_id_++;
    relabel(x, Label::MustOut);
    for (ArgId z : f_->targets(x))
        if (!decrement(z)) return fail(BoundaryKind::MarkMustOut);
    if (observer_) observer_->on_boundary({state_id_, BoundaryKind::MarkMustOut, false}, *this);
    return Status::Ok;
}

void LabelState::announce_branch() {
    if (observer_) observer_->on_boundary({state_id_, BoundaryKind::Branch, false}, *this);
}

void LabelState::checkpoint() {
    checkpoints_.push_back(trail_.size());
    if (observer_) observer_->on_checkpoint(*this);
}

void LabelState::rollback() {
    if (checkpoints_.empty()) throw UnbalancedRollback();
    const std::size_t mark = checkpoints_.back();
    checkpoints_.pop_back();
    while (trail_.size() > mark) {
        const TrailEntry e = trail_.back();
        trail_.pop_back();
        switch (e.kind) {
        case TrailEntry::Kind::Label: {
            const auto old = static_cast<Label>(e.old);
            count(labels_[e.arg], -1);
            count(old, +1);
            labels_[e.arg] = old;
            break;
        }
        case TrailEntry::Kind::Counter:
            counters_[e.arg] = e.old;
            break;
        case TrailEntry::Kind::Enqueue:
            worklist_.erase(e.arg);
            break;
        case TrailEntry::Kind::Dequeue:
            worklist_.insert(e.arg);
            break;
        }
    }
    if (observer_) observer_->on_rollback(*this);
}

TraceEvent make_trace_event(const Boundary& boundary, const LabelState& state) {
    return TraceEvent{boundary.state_id, boundary.kind, boundary.dead_end, state.snapshot()};
}

namespace {

class Search {
public:
    Search(const Framework& f, const ExtensionSink& sink, const Options& options)
        : f_(f), sink_(sink), options_(options), state_(f, options.observer, options.stats) {}

    std::size_t run() {
        state_.checkpoint();
        visit();
        state_.rollback();
        return delivered_;
    }

private:
    void visit() {
        if (stopped_) return;
        if (state_.drain() == Status::DeadEnd) return;

        if (state_.blank_count() == 0) {
            if (state_.must_out_count() == 0) report();
            return;
        }

        const ArgId x =
            *pick_argument(f_, options_.order, [&](ArgId a) { return state_.label(a) == Label::Blank; });
        if (options_.stats) ++options_.stats->branches;

        // The worklist is empty after a successful drain, so the include
        // branch starts from exactly {x}.
        state_.checkpoint();
        state_.enqueue(x);
        state_.announce_branch();
        visit();
        state_.rollback();
        if (stopped_) return;

        if (state_.mark_must_out(x) == Status::DeadEnd) return;
        visit();
    }

    void report() {
        if (options_.stats) ++options_.stats->solutions;
        ++delivered_;
        if (!sink_(state_.accepted())) stopped_ = true;
    }

    const Framework& f_;
    const ExtensionSink& sink_;
    Options options_;
    LabelState state_;
    std::size_t delivered_ = 0;
    bool stopped_ = false;
};

} // namespace

std::size_t enumerate(const Framework& f, const ExtensionSink& sink, const Options& options) {
    return Search(f, sink, options).run();
}

} // namespace stbext::label_enum
