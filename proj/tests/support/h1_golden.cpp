#include "h1_golden.hpp"

#include "fixtures.hpp"

namespace stbext::testing {

namespace {

using label_enum::BoundaryKind;
using label_enum::Label;

constexpr Label B = Label::Blank;
constexpr Label I = Label::In;
constexpr Label O = Label::Out;
constexpr Label M = Label::MustOut;

enum : ArgId { a, b, c, d, e, f_ };

class SetLog : public set_enum::Observer {
public:
    void on_state(const set_enum::SetState& s) override { states.push_back(s); }
    std::vector<set_enum::SetState> states;
};

} // namespace

std::vector<set_enum::SetState> h1_set_walk(const Framework& f) {
    auto st = [&](std::initializer_list<std::string_view> s, std::initializer_list<std::string_view> sp,
                  std::initializer_list<std::string_view> ch, std::initializer_list<std::string_view> tb) {
        return set_enum::SetState{set_of(f, s), set_of(f, sp), set_of(f, ch), set_of(f, tb)};
    };
    return {
        st({}, {}, {"a", "b", "c", "d", "e", "f"}, {}),
        st({"a"}, {"b"}, {"c", "d"}, {"e", "f"}),
        st({"a", "c", "d"}, {"b", "e", "f"}, {}, {}),
        st({}, {}, {"b", "c", "d", "e", "f"}, {"a"}),
        st({"b"}, {"c", "d"}, {"e", "f"}, {"a"}),
        st({"b", "e"}, {"a", "c", "d", "f"}, {}, {}),
        st({}, {}, {"c", "d", "e", "f"}, {"a", "b"}),
        st({"d"}, {"b", "e", "f"}, {"c"}, {"a"}),
    };
}

std::vector<LabelledState> h1_labelled_states() {
    return {
        {"start", 0, BoundaryKind::Init, {{B, B, B, B, B, B}, {2, 2, 2, 1, 1, 2}, {}}},
        {"branch on a", 1, BoundaryKind::Branch, {{B, B, B, B, B, B}, {2, 2, 2, 1, 1, 2}, {a}}},
        {"accept a", 2, BoundaryKind::AssignIn, {{I, O, B, B, M, M}, {0, 2, 0, 0, 1, 1}, {c, d}}},
        {"accept c and d", 4, BoundaryKind::AssignIn, {{I, O, I, I, O, O}, {0, 2, 0, 0, 1, 1}, {}}},
        {"exclude a", 5, BoundaryKind::MarkMustOut, {{M, B, B, B, B, B}, {2, 1, 2, 1, 1, 2}, {}}},
        {"branch on b", 6, BoundaryKind::Branch, {{M, B, B, B, B, B}, {2, 1, 2, 1, 1, 2}, {b}}},
        {"accept b", 7, BoundaryKind::AssignIn, {{M, I, O, O, B, B}, {2, 0, 2, 1, 0, 1}, {e}}},
        {"accept e", 8, BoundaryKind::AssignIn, {{O, I, O, O, I, O}, {1, 0, 2, 1, 0, 1}, {}}},
        {"exclude b", 9, BoundaryKind::MarkMustOut, {{M, M, B, B, B, B}, {2, 1, 1, 0, 1, 2}, {d}}},
        {"accept d, dead end", 10, BoundaryKind::AssignIn, {{M, O, B, I, O, O}, {0, 1, 0, 0, 1, 1}, {c, f_}}},
    };
}

bool h1_set_walk_matches(const Framework& f) {
    SetLog log;
    set_enum::enumerate(f, [](const Extension&) { return true; }, {PickOrder::Lex, &log});
    return log.states == h1_set_walk(f);
}

bool h1_label_walk_matches(const Framework& f) {
    label_enum::TraceRecorder rec;
    label_enum::enumerate(f, [](const Extension&) { return true; }, {PickOrder::Lex, &rec});
    for (const auto& want : h1_labelled_states()) {
        if (want.event >= rec.events.size()) return false;
        const auto& got = rec.events[want.event];
        if (got.kind != want.kind || !(got.snapshot == want.snapshot)) return false;
    }
    return true;
}

} // namespace stbext::testing
