#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qcomb/errors.hpp"
#include "qcomb/monomial.hpp"

namespace qcomb {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Rat rat_pow(const Rat& base, std::int64_t e) {
    if (e == 0) return Rat(1);
    if (base == 0) {
        if (e < 0) throw zero_substitution_into_negative_power("0^" + std::to_string(e));
        return Rat(0);
    }
    Rat b = e > 0 ? base : Rat(1) / base;
    std::uint64_t k = e > 0 ? std::uint64_t(e) : std::uint64_t(-e);
    Rat r(1);
    while (k) {
        if (k & 1) r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

// Substitution target: a rational scalar times a Laurent monomial. Covers
// plain evaluation (empty monomial), variable renaming, and geometric
// specializations such as x2 -> t*x1.
struct ScaledMonomial {
    Rat coef = Rat(1);
    Monomial mono;

    static ScaledMonomial value(const Rat& c) { return {c, Monomial{}}; }
    static ScaledMonomial of(const Rat& c, const Monomial& m) { return {c, m}; }
};

using Assignment = std::map<VarId, ScaledMonomial>;

// Sparse exact multivariate Laurent polynomial over the rationals. Terms are
// kept sorted in descending canonical monomial order with no zero
// coefficients, so operator== is term-wise equality.
class LaurentPoly {
  public:
    struct Term {
        Monomial mono;
        Rat coef;
    };

    LaurentPoly() = default;

    static LaurentPoly zero() { return LaurentPoly(); }

    static LaurentPoly constant(const Rat& c) {
        LaurentPoly p;
        if (c != 0) p.terms_.push_back({Monomial{}, c});
        return p;
    }

    static LaurentPoly one() { return constant(Rat(1)); }

    static LaurentPoly term(const Monomial& m, const Rat& c) {
        LaurentPoly p;
        if (c != 0) p.terms_.push_back({m, c});
        return p;
    }

    static LaurentPoly var(VarId v, std::int32_t e = 1) {
        return term(Monomial::var(v, e), Rat(1));
    }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coef == 1;
    }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
    }
    bool is_monomial() const { return terms_.size() == 1; }
    size_t size() const { return terms_.size(); }

    const Term& leading() const {
        if (terms_.empty()) throw qcomb_error("leading term of zero polynomial");
        return terms_.front();
    }

    Rat coef(const Monomial& m) const {
        // binary search in descending order
        int lo = 0, hi = int(terms_.size()) - 1;
        while (lo <= hi) {
            int mid = (lo + hi) / 2;
            int c = Monomial::compare(terms_[mid].mono, m);
            if (c == 0) return terms_[mid].coef;
            if (c > 0)
                lo = mid + 1;
            else
                hi = mid - 1;
        }
        return Rat(0);
    }

    LaurentPoly operator-() const {
        LaurentPoly r = *this;
        for (auto& t : r.terms_) t.coef = -t.coef;
        return r;
    }

    LaurentPoly operator+(const LaurentPoly& o) const { return merged(o, false); }
    LaurentPoly operator-(const LaurentPoly& o) const { return merged(o, true); }

    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }

    LaurentPoly operator*(const LaurentPoly& o) const {
        if (is_zero() || o.is_zero()) return zero();
        if (o.is_monomial()) return scaled(o.terms_[0].mono, o.terms_[0].coef);
        if (is_monomial()) return o.scaled(terms_[0].mono, terms_[0].coef);
        struct MonoHash {
            std::size_t operator()(const Monomial& m) const { return m.hash(); }
        };
        std::unordered_map<Monomial, Rat, MonoHash> acc;
        acc.reserve(terms_.size() * o.terms_.size() / 2 + 8);
        for (const auto& a : terms_)
            for (const auto& b : o.terms_) {
                Monomial m = a.mono * b.mono;
                auto [it, fresh] = acc.emplace(std::move(m), Rat(0));
                it->second += a.coef * b.coef;
            }
        LaurentPoly p;
        p.terms_.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (c != 0) p.terms_.push_back({m, std::move(c)});
        std::sort(p.terms_.begin(), p.terms_.end(),
                  [](const Term& x, const Term& y) { return Monomial::compare(x.mono, y.mono) > 0; });
        return p;
    }

    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly operator*(const Rat& c) const {
        if (c == 0) return zero();
        LaurentPoly r = *this;
        for (auto& t : r.terms_) t.coef *= c;
        return r;
    }

    friend LaurentPoly operator*(const Rat& c, const LaurentPoly& p) { return p * c; }

    // Multiply by c * m (exact, no term merging needed).
    LaurentPoly scaled(const Monomial& m, const Rat& c) const {
        if (c == 0) return zero();
        LaurentPoly r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coef * c});
        return r;
    }

    LaurentPoly pow(int k) const {
        if (k < 0) {
            if (!is_monomial()) throw qcomb_error("negative power of non-monomial");
            return term(terms_[0].mono.pow(k), rat_pow(terms_[0].coef, k));
        }
        LaurentPoly r = one(), b = *this;
        while (k) {
            if (k & 1) r *= b;
            if (k >>= 1) b *= b;
        }
        return r;
    }

    bool operator==(const LaurentPoly& o) const {
        if (terms_.size() != o.terms_.size()) return false;
        for (size_t i = 0; i < terms_.size(); ++i)
            if (terms_[i].coef != o.terms_[i].coef || terms_[i].mono != o.terms_[i].mono)
                return false;
        return true;
    }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    // Exponent-wise minimum over all terms, per variable that occurs; a term
    // not containing the variable counts as exponent 0. Used to clear
    // negative exponents before division and for Fraction normalization.
    Monomial exponent_floor() const {
        std::map<VarId, std::int32_t> lo;
        for (const auto& t : terms_)
            for (const auto& [v, e] : t.mono.exps()) lo.emplace(v, e);
        for (auto& [v, m] : lo)
            for (const auto& t : terms_) {
                std::int32_t e = t.mono.exp(v);
                if (e < m) m = e;
            }
        Monomial g;
        for (auto& [v, e] : lo)
            if (e != 0) g = g * Monomial::var(v, e);
        return g;
    }

    // Exact division; throws non_exact_division when a nonzero remainder
    // appears under the canonical graded order. Laurent inputs are shifted to
    // clear negative exponents first, divided, then shifted back.
    LaurentPoly div_exact(const LaurentPoly& b) const {
        if (b.is_zero()) throw non_exact_division("division by zero polynomial");
        if (is_zero()) return zero();
        if (b.is_monomial())
            return scaled(b.terms_[0].mono.inverse(), Rat(1) / b.terms_[0].coef);
        Monomial sa = exponent_floor();
        Monomial sb = b.exponent_floor();
        LaurentPoly rb = b.scaled(sb.inverse(), Rat(1));
        // long division in the graded order; the remainder lives in an
        // ordered map so each elimination step costs |divisor| inserts
        std::map<Monomial, Rat> quot, rem;
        for (const auto& t : terms_) rem[t.mono.divide(sa)] = t.coef;
        const Term& lb = rb.leading();
        while (!rem.empty()) {
            auto lead = std::prev(rem.end());
            if (lead->second == 0) {
                rem.erase(lead);
                continue;
            }
            if (!lb.mono.divides(lead->first))
                throw non_exact_division("remainder with leading term " + lead->first.str());
            Monomial qm = lead->first.divide(lb.mono);
            Rat qc = lead->second / lb.coef;
            quot[qm] += qc;
            for (const auto& t : rb.terms()) {
                auto [it, fresh] = rem.emplace(qm * t.mono, Rat(0));
                it->second -= qc * t.coef;
                if (it->second == 0) rem.erase(it);
            }
        }
        LaurentPoly q = from_map(quot);
        return q.scaled(sa * sb.inverse(), Rat(1));
    }

    bool divisible_by(const LaurentPoly& b) const {
        try {
            (void)div_exact(b);
            return true;
        } catch (const non_exact_division&) {
            return false;
        }
    }

    // Exact partial evaluation; substituted variables may map to a rational
    // scalar times a monomial in the remaining variables.
    LaurentPoly substitute(const Assignment& a) const {
        std::map<Monomial, Rat> acc;
        for (const auto& t : terms_) {
            Rat c = t.coef;
            Monomial m;
            bool dead = false;
            for (const auto& [v, e] : t.mono.exps()) {
                auto it = a.find(v);
                if (it == a.end()) {
                    m = m * Monomial::var(v, e);
                    continue;
                }
                const ScaledMonomial& s = it->second;
                if (s.coef == 0) {
                    if (e < 0)
                        throw zero_substitution_into_negative_power(var_name(v) + "^" +
                                                                    std::to_string(e));
                    dead = true;
                    break;
                }
                c *= rat_pow(s.coef, e);
                m = m * s.mono.pow(e);
            }
            if (dead) continue;
            acc[m] += c;
        }
        return from_map(acc);
    }

    Rat evaluate(const Assignment& a) const {
        LaurentPoly p = substitute(a);
        if (p.is_zero()) return Rat(0);
        if (!p.is_constant()) throw qcomb_error("evaluation left free variables: " + p.str());
        return p.terms_[0].coef;
    }

    // Minimum / maximum exponent of one variable across all terms (0 when the
    // variable does not occur).
    std::int32_t min_exp(VarId v) const {
        std::int32_t lo = 0;
        bool any = false;
        for (const auto& t : terms_) {
            std::int32_t e = t.mono.exp(v);
            if (!any || e < lo) lo = e;
            any = true;
        }
        return any ? lo : 0;
    }
    std::int32_t max_exp(VarId v) const {
        std::int32_t hi = 0;
        bool any = false;
        for (const auto& t : terms_) {
            std::int32_t e = t.mono.exp(v);
            if (!any || e > hi) hi = e;
            any = true;
        }
        return any ? hi : 0;
    }

    // Canonical text form: terms in descending canonical monomial order,
    // coefficients as num or num/den, e.g. "2 * q^2 x1 - 1/3 * x2^-1 + 5".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (size_t i = 0; i < terms_.size(); ++i) {
            const Term& t = terms_[i];
            bool neg = t.coef < 0;
            Rat a = neg ? Rat(-t.coef) : t.coef;
            if (i == 0)
                s += neg ? "-" : "";
            else
                s += neg ? " - " : " + ";
            std::string cs = a.str();
            if (t.mono.is_one())
                s += cs;
            else if (a == 1)
                s += t.mono.str();
            else
                s += cs + " * " + t.mono.str();
        }
        return s;
    }

    static LaurentPoly from_map(const std::map<Monomial, Rat>& acc) {
        LaurentPoly p;
        p.terms_.reserve(acc.size());
        for (auto it = acc.rbegin(); it != acc.rend(); ++it)
            if (it->second != 0) p.terms_.push_back({it->first, it->second});
        return p;
    }

  private:
    LaurentPoly merged(const LaurentPoly& o, bool subtract) const {
        LaurentPoly r;
        r.terms_.reserve(terms_.size() + o.terms_.size());
        auto a = terms_.begin();
        auto b = o.terms_.begin();
        while (a != terms_.end() && b != o.terms_.end()) {
            int c = Monomial::compare(a->mono, b->mono);
            if (c > 0) {
                r.terms_.push_back(*a++);
            } else if (c < 0) {
                r.terms_.push_back({b->mono, subtract ? -b->coef : b->coef});
                ++b;
            } else {
                Rat s = subtract ? Rat(a->coef - b->coef) : Rat(a->coef + b->coef);
                if (s != 0) r.terms_.push_back({a->mono, std::move(s)});
                ++a;
                ++b;
            }
        }
        for (; a != terms_.end(); ++a) r.terms_.push_back(*a);
        for (; b != o.terms_.end(); ++b)
            r.terms_.push_back({b->mono, subtract ? -b->coef : b->coef});
        return r;
    }

    std::vector<Term> terms_;
};

// Convenience builders used all over the higher modules.
inline LaurentPoly L(const Rat& c) { return LaurentPoly::constant(c); }
inline LaurentPoly Lv(VarId v, std::int32_t e = 1) { return LaurentPoly::var(v, e); }
inline LaurentPoly Lx(int i, std::int32_t e = 1) { return LaurentPoly::var(var_x(i), e); }
inline LaurentPoly Ly(int j, std::int32_t e = 1) { return LaurentPoly::var(var_y(j), e); }

}  // namespace qcomb
