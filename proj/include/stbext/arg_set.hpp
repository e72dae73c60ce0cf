#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

namespace stbext {

// Dense argument index in [0, n).
using ArgId = std::uint32_t;

// Fixed-universe bitset over argument indices. All binary operations require
// both operands to share the same universe size.
class ArgSet {
public:
    ArgSet() = default;
    explicit ArgSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}
    ArgSet(std::size_t universe, std::initializer_list<ArgId> members) : ArgSet(universe) {
        for (ArgId a : members) insert(a);
    }

    static ArgSet full(std::size_t universe) {
        ArgSet s(universe);
        for (auto& w : s.words_) w = ~std::uint64_t{0};
        s.trim();
        return s;
    }

    template <class Range>
    static ArgSet from(std::size_t universe, const Range& members) {
        ArgSet s(universe);
        for (ArgId a : members) s.insert(a);
        return s;
    }

    std::size_t universe() const noexcept { return universe_; }

    bool contains(ArgId a) const noexcept {
        assert(a < universe_);
        return (words_[a >> 6] >> (a & 63)) & 1u;
    }
    void insert(ArgId a) noexcept {
        assert(a < universe_);
        words_[a >> 6] |= std::uint64_t{1} << (a & 63);
    }
    void erase(ArgId a) noexcept {
        assert(a < universe_);
        words_[a >> 6] &= ~(std::uint64_t{1} << (a & 63));
    }
    void clear() noexcept {
        for (auto& w : words_) w = 0;
    }

    std::size_t size() const noexcept {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool empty() const noexcept {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    // Lowest member, if any.
    std::optional<ArgId> first() const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return static_cast<ArgId>(i * 64 + std::countr_zero(words_[i]));
        return std::nullopt;
    }

    bool is_subset_of(const ArgSet& o) const noexcept {
        assert(universe_ == o.universe_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }
    bool intersects(const ArgSet& o) const noexcept {
        assert(universe_ == o.universe_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    ArgSet& operator|=(const ArgSet& o) noexcept {
        assert(universe_ == o.universe_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    ArgSet& operator&=(const ArgSet& o) noexcept {
        assert(universe_ == o.universe_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    // Set difference.
    ArgSet& operator-=(const ArgSet& o) noexcept {
        assert(universe_ == o.universe_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    friend ArgSet operator|(ArgSet a, const ArgSet& b) { return a |= b; }
    friend ArgSet operator&(ArgSet a, const ArgSet& b) { return a &= b; }
    friend ArgSet operator-(ArgSet a, const ArgSet& b) { return a -= b; }

    ArgSet complement() const {
        ArgSet s(universe_);
        for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] = ~words_[i];
        s.trim();
        return s;
    }

    friend bool operator==(const ArgSet&, const ArgSet&) = default;

    // Visits members in increasing index order.
    template <class F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                f(static_cast<ArgId>(i * 64 + std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<ArgId> members() const {
        std::vector<ArgId> out;
        out.reserve(size());
        for_each([&](ArgId a) { out.push_back(a); });
        return out;
    }

private:
    void trim() noexcept {
        if (universe_ % 64 != 0 && !words_.empty())
            words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
    }

    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace stbext
