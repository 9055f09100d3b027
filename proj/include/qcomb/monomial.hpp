#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qcomb/errors.hpp"
#include "qcomb/vars.hpp"

namespace qcomb {

// Laurent monomial: sparse exponent vector, sorted by VarId, no zero entries.
class Monomial {
  public:
    using Entry = std::pair<VarId, std::int32_t>;

    Monomial() = default;

    static Monomial var(VarId v, std::int32_t e = 1) {
        Monomial m;
        if (e != 0) m.exps_.emplace_back(v, e);
        return m;
    }

    const std::vector<Entry>& exps() const { return exps_; }
    bool is_one() const { return exps_.empty(); }

    std::int32_t exp(VarId v) const {
        for (const auto& [w, e] : exps_)
            if (w == v) return e;
        return 0;
    }

    std::int64_t total_degree() const {
        std::int64_t d = 0;
        for (const auto& [w, e] : exps_) d += e;
        return d;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r;
        r.exps_.reserve(exps_.size() + o.exps_.size());
        auto a = exps_.begin(), b = o.exps_.begin();
        while (a != exps_.end() && b != o.exps_.end()) {
            if (a->first < b->first) {
                r.exps_.push_back(*a++);
            } else if (a->first > b->first) {
                r.exps_.push_back(*b++);
            } else {
                std::int32_t e = a->second + b->second;
                if (e != 0) r.exps_.emplace_back(a->first, e);
                ++a;
                ++b;
            }
        }
        r.exps_.insert(r.exps_.end(), a, exps_.end());
        r.exps_.insert(r.exps_.end(), b, o.exps_.end());
        return r;
    }

    Monomial inverse() const { return pow(-1); }

    Monomial pow(std::int32_t k) const {
        Monomial r;
        if (k == 0) return r;
        r.exps_ = exps_;
        for (auto& [w, e] : r.exps_) e *= k;
        return r;
    }

    // Exponent-wise quotient; requires divisibility in the polynomial sense
    // (every exponent of o at most the matching exponent here) when `strict`.
    Monomial divide(const Monomial& o) const { return *this * o.inverse(); }

    bool divides(const Monomial& o) const {
        // this | o with non-negative exponent differences
        for (const auto& [w, e] : exps_)
            if (e > o.exp(w)) return false;
        return true;
    }

    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    // Graded order: total degree first, ties broken by the first variable (in
    // registry order q, t, q1, q2, u, v, x1, ..., yN) whose exponents differ,
    // the larger exponent winning. This is the canonical order for term maps,
    // serialization, and exact division.
    static int compare(const Monomial& a, const Monomial& b) {
        std::int64_t da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db ? -1 : 1;
        auto i = a.exps_.begin();
        auto j = b.exps_.begin();
        while (i != a.exps_.end() || j != b.exps_.end()) {
            VarId va = i != a.exps_.end() ? i->first : kVarCount;
            VarId vb = j != b.exps_.end() ? j->first : kVarCount;
            std::int32_t ea = 0, eb = 0;
            if (va <= vb) ea = i->second;
            if (vb <= va) eb = j->second;
            if (ea != eb) return ea < eb ? -1 : 1;
            if (va <= vb) ++i;
            if (vb <= va) ++j;
        }
        return 0;
    }

    bool operator<(const Monomial& o) const { return compare(*this, o) < 0; }
    bool operator>(const Monomial& o) const { return compare(*this, o) > 0; }

    std::size_t hash() const {
        std::uint64_t h = 0xcbf29ce484222325ull;
        for (const auto& [v, e] : exps_) {
            h ^= (std::uint64_t(v) << 32) ^ std::uint64_t(std::uint32_t(e));
            h *= 0x100000001b3ull;
        }
        return std::size_t(h);
    }

    std::string str() const {
        if (exps_.empty()) return "1";
        std::string s;
        for (const auto& [w, e] : exps_) {
            if (!s.empty()) s += " ";
            s += var_name(w);
            if (e != 1) s += "^" + std::to_string(e);
        }
        return s;
    }

  private:
    std::vector<Entry> exps_;
};

}  // namespace qcomb
