#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qcomb/errors.hpp"
#include "qcomb/laurent.hpp"

namespace qcomb {

namespace detail {

// Open-addressing map from packed frontier states to big integers. Keys are
// at most 60 bits (15 nibbles), so the all-ones word is a safe empty slot.
class StateMap {
  public:
    static constexpr std::uint64_t kEmpty = ~std::uint64_t(0);

    explicit StateMap(std::size_t initial_pow2 = 10)
        : keys_(std::size_t(1) << initial_pow2, kEmpty), vals_(std::size_t(1) << initial_pow2) {}

    std::size_t size() const { return count_; }

    void clear() {
        std::fill(keys_.begin(), keys_.end(), kEmpty);
        for (auto& v : vals_) v = 0;
        count_ = 0;
    }

    void add(std::uint64_t key, const Int& delta) {
        std::size_t mask = keys_.size() - 1;
        std::size_t i = hash(key) & mask;
        while (true) {
            if (keys_[i] == key) {
                vals_[i] += delta;
                return;
            }
            if (keys_[i] == kEmpty) {
                keys_[i] = key;
                vals_[i] = delta;
                ++count_;
                if (count_ * 10 >= keys_.size() * 7) grow();
                return;
            }
            i = (i + 1) & mask;
        }
    }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t i = 0; i < keys_.size(); ++i)
            if (keys_[i] != kEmpty) fn(keys_[i], vals_[i]);
    }

  private:
    static std::uint64_t hash(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ull;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
        return x ^ (x >> 31);
    }

    void grow() {
        std::vector<std::uint64_t> old_keys(keys_.size() * 2, kEmpty);
        std::vector<Int> old_vals(vals_.size() * 2);
        old_keys.swap(keys_);
        old_vals.swap(vals_);
        count_ = 0;
        for (std::size_t i = 0; i < old_keys.size(); ++i)
            if (old_keys[i] != kEmpty) add(old_keys[i], old_vals[i]);
    }

    std::vector<std::uint64_t> keys_;
    std::vector<Int> vals_;
    std::size_t count_ = 0;
};

}  // namespace detail

struct DegreeDpOptions {
    std::size_t max_states = std::size_t(1) << 26;
};

// deg C_n = 2^{-n} * sum over identity-connectivity path configurations of
// 2^{#bend vertices}, computed by a frontier dynamic program instead of
// enumeration. The sweep runs bottom row to top row, left to right inside a
// row, so path p enters the frontier exactly when row p is processed. The
// frontier state is the labels on the n vertical cut edges plus the one
// horizontal edge, packed in nibbles. Feasibility pruning: with identity
// connectivity a path p exits at column p, and since paths only move right
// and up, any state placing p to the right of column p is dead.
inline Int lattice_degree_dp(int n, const DegreeDpOptions& opts = {}) {
    if (n < 1 || n > 14) throw index_out_of_range("degree dp grade " + std::to_string(n));
    const int hslot = n;  // nibble index of the horizontal edge
    auto get = [](std::uint64_t s, int slot) -> int { return int((s >> (4 * slot)) & 0xf); };
    auto put = [](std::uint64_t s, int slot, int label) -> std::uint64_t {
        return (s & ~(std::uint64_t(0xf) << (4 * slot))) | (std::uint64_t(label) << (4 * slot));
    };

    detail::StateMap cur, next;
    cur.add(0, Int(1));

    for (int row = n; row >= 1; --row) {
        // path `row` enters from the left boundary of this row
        next.clear();
        cur.for_each([&](std::uint64_t s, const Int& v) { next.add(put(s, hslot, row), v); });
        std::swap(cur, next);

        for (int col = 1; col <= n; ++col) {
            next.clear();
            cur.for_each([&](std::uint64_t s, const Int& v) {
                int h = get(s, hslot);
                int b = get(s, col - 1);
                auto emit = [&](int h_out, int v_out, bool bend) {
                    if (h_out != 0 && h_out <= col) return;  // must turn up right of col
                    if (v_out != 0 && v_out < col) return;   // exit column is v_out itself
                    std::uint64_t ns = put(put(s, col - 1, v_out), hslot, h_out);
                    next.add(ns, bend ? Int(v << 1) : v);
                };
                if (h == 0 && b == 0) {
                    emit(0, 0, false);
                } else if (h != 0 && b == 0) {
                    emit(h, 0, false);
                    emit(0, h, true);
                } else if (h == 0 && b != 0) {
                    emit(0, b, false);
                    emit(b, 0, true);
                } else {
                    emit(h, b, false);
                    emit(b, h, true);
                }
            });
            if (next.size() > opts.max_states)
                throw resource_budget_exceeded(std::to_string(next.size()) + " frontier states");
            std::swap(cur, next);
        }

        // right boundary: the horizontal edge must be empty
        next.clear();
        cur.for_each([&](std::uint64_t s, const Int& v) {
            if (get(s, hslot) == 0) next.add(s, v);
        });
        std::swap(cur, next);
    }

    std::uint64_t target = 0;
    for (int c = 1; c <= n; ++c) target = put(target, c - 1, c);
    Int total = 0;
    cur.for_each([&](std::uint64_t s, const Int& v) {
        if (s == target) total = v;
    });
    Int power = Int(1) << n;
    if (total % power != 0)
        throw verification_failure("bend-weight sum not divisible by 2^n");
    return total / power;
}

}  // namespace qcomb
