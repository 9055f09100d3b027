#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "qcomb/errors.hpp"

namespace qcomb {

// Permutation of {1..n} in one-line notation.
class Permutation {
  public:
    Permutation() = default;

    explicit Permutation(std::vector<int> one_line) : img_(std::move(one_line)) {
        std::vector<char> seen(img_.size() + 1, 0);
        for (int v : img_) {
            if (v < 1 || v > int(img_.size()) || seen[v])
                throw malformed_permutation(str());
            seen[v] = 1;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> v(n);
        std::iota(v.begin(), v.end(), 1);
        return Permutation(std::move(v));
    }

    // elementary transposition s_i embedded in S_n
    static Permutation transposition(int i, int n) {
        Permutation p = identity(n);
        if (i < 1 || i + 1 > n) throw index_out_of_range("s_" + std::to_string(i));
        std::swap(p.img_[i - 1], p.img_[i]);
        return p;
    }

    int size() const { return int(img_.size()); }
    int operator()(int i) const { return img_[i - 1]; }
    const std::vector<int>& one_line() const { return img_; }

    Permutation inverse() const {
        std::vector<int> inv(img_.size());
        for (int i = 1; i <= size(); ++i) inv[img_[i - 1] - 1] = i;
        return Permutation(std::move(inv));
    }

    // (a*b)(i) = a(b(i))
    Permutation operator*(const Permutation& b) const {
        std::vector<int> v(img_.size());
        for (int i = 1; i <= size(); ++i) v[i - 1] = img_[b(i) - 1];
        return Permutation(std::move(v));
    }

    // w * s_i : swap positions i, i+1
    Permutation swap_positions(int i) const {
        Permutation p = *this;
        std::swap(p.img_[i - 1], p.img_[i]);
        return p;
    }

    // s_i * w : swap values i, i+1
    Permutation swap_values(int i) const {
        Permutation p = *this;
        for (auto& v : p.img_) {
            if (v == i)
                v = i + 1;
            else if (v == i + 1)
                v = i;
        }
        return p;
    }

    int length() const {
        int inv = 0;
        for (int i = 0; i < size(); ++i)
            for (int j = i + 1; j < size(); ++j)
                if (img_[i] > img_[j]) ++inv;
        return inv;
    }

    bool is_identity() const {
        for (int i = 1; i <= size(); ++i)
            if (img_[i - 1] != i) return false;
        return true;
    }

    // positions i with w(i) > w(i+1)
    std::vector<int> descents() const {
        std::vector<int> d;
        for (int i = 1; i < size(); ++i)
            if (img_[i - 1] > img_[i]) d.push_back(i);
        return d;
    }

    bool right_longer(int i) const { return img_[i - 1] < img_[i]; }  // |w s_i| > |w|
    bool left_longer(int i) const {                                   // |s_i w| > |w|
        for (int v : img_) {
            if (v == i) return true;
            if (v == i + 1) return false;
        }
        throw index_out_of_range("left_longer(" + std::to_string(i) + ")");
    }

    // Canonical reduced word: repeatedly strip the smallest descent on the
    // right. Multiplying s_{i_1} ... s_{i_k} back together recovers w.
    std::vector<int> reduced_word() const {
        std::vector<int> word;
        Permutation w = *this;
        while (true) {
            auto d = w.descents();
            if (d.empty()) break;
            word.push_back(d[0]);
            w = w.swap_positions(d[0]);
        }
        std::reverse(word.begin(), word.end());
        return word;
    }

    bool operator==(const Permutation& o) const { return img_ == o.img_; }
    bool operator!=(const Permutation& o) const { return img_ != o.img_; }
    bool operator<(const Permutation& o) const { return img_ < o.img_; }

    std::string str() const {
        bool wide = size() > 9;
        std::string s;
        for (int i = 0; i < size(); ++i) {
            if (wide && i) s += ",";
            s += std::to_string(img_[i]);
        }
        return s;
    }

  private:
    std::vector<int> img_;
};

inline Permutation longest_element(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = n - i;
    return Permutation(std::move(v));
}

inline std::vector<Permutation> all_permutations(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

// Minimal-length representatives of S_n / (S_{b1} x ... x S_{bm}): the
// permutations increasing within each block preimage. Deterministic
// lexicographic order.
inline std::vector<Permutation> coset_min_reps(const std::vector<int>& blocks) {
    int n = 0;
    for (int b : blocks) {
        if (b < 1) throw empty_block("block sizes must be positive");
        n += b;
    }
    std::vector<Permutation> out;
    std::vector<int> cur;
    std::vector<char> used(n + 1, 0);
    // choose increasing value sequences per block, depth-first over blocks
    std::vector<std::vector<int>> chosen(blocks.size());
    auto rec = [&](auto&& self, size_t bi) -> void {
        if (bi == blocks.size()) {
            std::vector<int> img;
            for (const auto& blk : chosen) img.insert(img.end(), blk.begin(), blk.end());
            out.emplace_back(std::move(img));
            return;
        }
        // enumerate increasing tuples of size blocks[bi] from unused values
        std::vector<int> avail;
        for (int v = 1; v <= n; ++v)
            if (!used[v]) avail.push_back(v);
        int k = blocks[bi];
        std::vector<int> idx(k);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            chosen[bi].clear();
            for (int i : idx) chosen[bi].push_back(avail[i]);
            for (int v : chosen[bi]) used[v] = 1;
            self(self, bi + 1);
            for (int v : chosen[bi]) used[v] = 0;
            // next combination
            int pos = k - 1;
            while (pos >= 0 && idx[pos] == int(avail.size()) - k + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (int j = pos + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace qcomb
