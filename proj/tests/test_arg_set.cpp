#include <catch_amalgamated.hpp>

#include "stbext/arg_set.hpp"

using stbext::ArgSet;

TEST_CASE("basic membership across word boundaries") {
    ArgSet s(130, {0, 63, 64, 129});
    CHECK(s.size() == 4);
    CHECK(s.contains(63));
    CHECK(s.contains(64));
    CHECK_FALSE(s.contains(65));
    CHECK(s.first() == 0u);
    s.erase(0);
    CHECK(s.first() == 63u);
    CHECK(s.members() == std::vector<stbext::ArgId>{63, 64, 129});
}

TEST_CASE("complement stays inside the universe") {
    ArgSet s(70, {1, 69});
    const ArgSet c = s.complement();
    CHECK(c.size() == 68);
    CHECK_FALSE(c.contains(1));
    CHECK((s | c) == ArgSet::full(70));
    CHECK((s & c).empty());
}

TEST_CASE("set algebra") {
    ArgSet a(10, {1, 2, 3});
    ArgSet b(10, {3, 4});
    CHECK((a - b) == ArgSet(10, {1, 2}));
    CHECK((a & b) == ArgSet(10, {3}));
    CHECK(a.intersects(b));
    CHECK(ArgSet(10, {1, 2}).is_subset_of(a));
    CHECK_FALSE(b.is_subset_of(a));
    CHECK(ArgSet(0).empty());
    CHECK_FALSE(ArgSet(0).first());
}
