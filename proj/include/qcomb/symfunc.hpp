#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qcomb/fraction.hpp"

namespace qcomb {

// Integer partition, parts weakly decreasing and positive.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    Partition(std::initializer_list<int> p) : parts(p) { canonicalize(); }
    explicit Partition(std::vector<int> p) : parts(std::move(p)) { canonicalize(); }

    void canonicalize() {
        std::sort(parts.begin(), parts.end(), std::greater<int>());
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
        for (int p : parts)
            if (p < 0) throw qcomb_error("negative partition part");
    }

    int weight() const {
        int w = 0;
        for (int p : parts) w += p;
        return w;
    }
    int length() const { return int(parts.size()); }

    // concatenation (multiset union), the p-basis product rule
    Partition operator+(const Partition& o) const {
        std::vector<int> v = parts;
        v.insert(v.end(), o.parts.begin(), o.parts.end());
        return Partition(std::move(v));
    }

    bool operator==(const Partition& o) const { return parts == o.parts; }
    bool operator!=(const Partition& o) const { return parts != o.parts; }
    bool operator<(const Partition& o) const {
        if (weight() != o.weight()) return weight() < o.weight();
        return parts < o.parts;
    }

    std::string str() const {
        std::string s = "[";
        for (size_t i = 0; i < parts.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts[i]);
        }
        return s + "]";
    }
};

inline std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rem, int maxpart) -> void {
        if (rem == 0) {
            out.emplace_back(std::vector<int>(cur));
            return;
        }
        for (int p = std::min(rem, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    std::sort(out.begin(), out.end());
    return out;
}

// Symmetric function in the power-sum basis with coefficients in the
// rational-function field of q and t.
class SymFunc {
  public:
    SymFunc() = default;

    static SymFunc zero() { return SymFunc(); }
    static SymFunc one() { return power_sum(Partition{}); }

    static SymFunc power_sum(const Partition& lam) {
        SymFunc f;
        f.coef_[lam] = Fraction::one();
        return f;
    }
    static SymFunc power_sum(int r) { return power_sum(Partition{r}); }

    const std::map<Partition, Fraction>& coeffs() const { return coef_; }
    bool is_zero() const { return coef_.empty(); }

    Fraction coeff(const Partition& lam) const {
        auto it = coef_.find(lam);
        return it == coef_.end() ? Fraction::zero() : it->second;
    }

    SymFunc operator+(const SymFunc& o) const {
        SymFunc r = *this;
        for (const auto& [lam, c] : o.coef_) {
            auto it = r.coef_.find(lam);
            if (it == r.coef_.end()) {
                r.coef_[lam] = c;
            } else {
                it->second += c;
                if (it->second.is_zero()) r.coef_.erase(it);
            }
        }
        return r;
    }

    SymFunc operator-(const SymFunc& o) const { return *this + o * Fraction(Rat(-1)); }

    SymFunc operator*(const SymFunc& o) const {
        SymFunc r;
        for (const auto& [la, ca] : coef_)
            for (const auto& [lb, cb] : o.coef_) {
                Partition lam = la + lb;
                auto it = r.coef_.find(lam);
                Fraction prod = ca * cb;
                if (it == r.coef_.end()) {
                    if (!prod.is_zero()) r.coef_[lam] = prod;
                } else {
                    it->second += prod;
                    if (it->second.is_zero()) r.coef_.erase(it);
                }
            }
        return r;
    }

    SymFunc operator*(const Fraction& c) const {
        SymFunc r;
        if (c.is_zero()) return r;
        for (const auto& [lam, a] : coef_) r.coef_[lam] = a * c;
        return r;
    }

    SymFunc& operator+=(const SymFunc& o) { return *this = *this + o; }
    SymFunc& operator*=(const SymFunc& o) { return *this = *this * o; }

    bool operator==(const SymFunc& o) const {
        if (coef_.size() != o.coef_.size()) return false;
        auto it = o.coef_.begin();
        for (const auto& [lam, c] : coef_) {
            if (!(lam == it->first) || c != it->second) return false;
            ++it;
        }
        return true;
    }
    bool operator!=(const SymFunc& o) const { return !(*this == o); }

    // Apply a diagonal map p_r -> factor(r) p_r multiplicatively over parts.
    SymFunc rescale_parts(const std::function<Fraction(int)>& factor) const {
        SymFunc r;
        for (const auto& [lam, c] : coef_) {
            Fraction f = c;
            for (int p : lam.parts) f *= factor(p);
            if (!f.is_zero()) r.coef_[lam] = f;
        }
        return r;
    }

    std::string str() const {
        if (coef_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [lam, c] : coef_) {
            if (!first) s += " + ";
            first = false;
            s += "(" + c.str() + ") p" + lam.str();
        }
        return s;
    }

  private:
    std::map<Partition, Fraction> coef_;
};

// Elementary symmetric function e_n in the power-sum basis via the Newton
// recurrence n e_n = sum_{k=1}^{n} (-1)^{k-1} e_{n-k} p_k.
inline SymFunc elementary(int n) {
    static std::vector<SymFunc> cache{SymFunc::one()};
    while (int(cache.size()) <= n) {
        int m = int(cache.size());
        SymFunc s;
        for (int k = 1; k <= m; ++k) {
            Fraction c(Rat(k % 2 == 1 ? 1 : -1, m));
            s += cache[m - k] * SymFunc::power_sum(k) * c;
        }
        cache.push_back(s);
    }
    return cache[n];
}

// Complete homogeneous h_n: n h_n = sum_k h_{n-k} p_k.
inline SymFunc complete(int n) {
    static std::vector<SymFunc> cache{SymFunc::one()};
    while (int(cache.size()) <= n) {
        int m = int(cache.size());
        SymFunc s;
        for (int k = 1; k <= m; ++k) s += cache[m - k] * SymFunc::power_sum(k) * Fraction(Rat(1, m));
        cache.push_back(s);
    }
    return cache[n];
}

// The automorphism p_r -> ((1-u)^r / (1-u^r)) p_r for a monomial u in q, t
// (inverse applies the reciprocal factor). u = 1 is degenerate.
inline SymFunc sigma_transform(const Monomial& u, const SymFunc& f, bool inverse = false) {
    if (u.is_one()) throw degenerate_plethysm_parameter("u = 1");
    return f.rescale_parts([&](int r) {
        LaurentPoly one = LaurentPoly::one();
        LaurentPoly num = (one - LaurentPoly::term(u, Rat(1))).pow(r);
        LaurentPoly den = one - LaurentPoly::term(u.pow(r), Rat(1));
        Fraction fac(num, den);
        return inverse ? fac.inverse() : fac;
    });
}

// p_r -> (-1)^{r-1} p_r, the classical involution exchanging e_n and h_n.
inline SymFunc omega_involution(const SymFunc& f) {
    return f.rescale_parts([](int r) { return Fraction(Rat(r % 2 == 1 ? 1 : -1)); });
}

// The three plethystic images of e_n attached to the parameters q^-1, q t^-1
// and t: image 1 is e_n itself, image 2 twists by sigma_{q^-1} sigma^{-1}_{q t^-1},
// image 3 by sigma_{q^-1} sigma_t^{-1}.
inline SymFunc elementary_image(int n, int k) {
    SymFunc e = elementary(n);
    Monomial q_inv = Monomial::var(kVarQ, -1);
    switch (k) {
        case 1:
            return e;
        case 2:
            return sigma_transform(q_inv,
                                   sigma_transform(Monomial::var(kVarQ) * Monomial::var(kVarT, -1),
                                                   e, true));
        case 3:
            return sigma_transform(q_inv, sigma_transform(Monomial::var(kVarT), e, true));
        default:
            throw index_out_of_range("elementary_image k = " + std::to_string(k));
    }
}

}  // namespace qcomb
