#pragma once

#include <deque>
#include <map>
#include <mutex>
#include <vector>

#include "qcomb/degree.hpp"
#include "qcomb/shuffle.hpp"

namespace qcomb {

namespace detail {

// ordered Vandermonde over x_1..x_n skipping index i
inline LaurentPoly diff_product_without(int n, int skip) {
    LaurentPoly r = LaurentPoly::one();
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) {
            if (a == skip || b == skip) continue;
            r *= Lx(a) - Lx(b);
        }
    return r;
}

inline LaurentPoly full_diff_product(int n) {
    LaurentPoly r = LaurentPoly::one();
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) r *= Lx(a) - Lx(b);
    return r;
}

inline LaurentPoly esum(int n) {
    LaurentPoly s = LaurentPoly::zero();
    for (int i = 1; i <= n; ++i) s += Lx(i);
    return s;
}

}  // namespace detail

// K-polynomial of the commuting scheme in q1, q2, x1..xn, computed from the
// geometric recurrence
//   (x_1+...+x_n) K_n = sum_i x_i K_{n-1}[^x_i]
//       prod_{j != i} (1-q1 x_j/x_i)(1-q2 x_j/x_i)(1-q1 q2 x_i/x_j)/(1-x_j/x_i).
// Terms are cleared to the common Vandermonde denominator; both divisions
// (by the Vandermonde, then by e_1) must be exact.
inline const LaurentPoly& kpoly(int n, int max_grade = 4) {
    if (n > max_grade) throw grade_too_large("kpoly grade " + std::to_string(n));
    static std::deque<LaurentPoly> cache{LaurentPoly::one(), LaurentPoly::one()};
    static std::mutex lock;
    std::lock_guard<std::mutex> guard(lock);
    while (int(cache.size()) <= n) {
        int m = int(cache.size());
        const LaurentPoly q1 = Lv(kVarQ1), q2 = Lv(kVarQ2);
        LaurentPoly acc = LaurentPoly::zero();
        for (int i = 1; i <= m; ++i) {
            std::vector<int> others;
            for (int j = 1; j <= m; ++j)
                if (j != i) others.push_back(j);
            LaurentPoly term = Lx(i) * detail::remap_x(cache[m - 1], others);
            Monomial shift;
            for (int j : others) {
                term *= (Lx(i) - q1 * Lx(j)) * (Lx(i) - q2 * Lx(j)) *
                        (Lx(j) - q1 * q2 * Lx(i));
                shift = shift * Monomial::var(var_x(i), -2) * Monomial::var(var_x(j), -1);
            }
            term = term.scaled(shift * Monomial::var(var_x(i), m - 1), Rat(1));
            // common denominator: kernel denominators (x_i - x_j)/x_i supply
            // the ordered Vandermonde up to the sign of the skipped index
            term *= detail::diff_product_without(m, i);
            if ((i - 1) % 2 == 1) term = -term;
            acc += term;
        }
        LaurentPoly cleared = acc.div_exact(detail::full_diff_product(m));
        cache.push_back(cleared.div_exact(detail::esum(m)));
    }
    return cache[n];
}

enum class ConvertDirection { QtToQ12, Q12ToQt };

// Exact monomial substitution between the two parameter alphabets:
// q = q1^{-1}, t = (q1 q2)^{-1}.
inline LaurentPoly var_convert(const LaurentPoly& p, ConvertDirection dir) {
    Assignment sub;
    if (dir == ConvertDirection::QtToQ12) {
        if (p.min_exp(kVarQ1) != 0 || p.max_exp(kVarQ1) != 0 || p.min_exp(kVarQ2) != 0 ||
            p.max_exp(kVarQ2) != 0)
            throw mixed_alphabets("input already contains q1/q2");
        sub[kVarQ] = ScaledMonomial::of(Rat(1), Monomial::var(kVarQ1, -1));
        sub[kVarT] = ScaledMonomial::of(Rat(1), Monomial::var(kVarQ1, -1) * Monomial::var(kVarQ2, -1));
    } else {
        if (p.min_exp(kVarQ) != 0 || p.max_exp(kVarQ) != 0 || p.min_exp(kVarT) != 0 ||
            p.max_exp(kVarT) != 0)
            throw mixed_alphabets("input already contains q/t");
        sub[kVarQ1] = ScaledMonomial::of(Rat(1), Monomial::var(kVarQ, -1));
        sub[kVarQ2] = ScaledMonomial::of(Rat(1), Monomial::var(kVarQ) * Monomial::var(kVarT, -1));
    }
    return p.substitute(sub);
}

// Cross-check route for the K-polynomial: (q1 q2)^{n(n-1)/2} f(1_n) under
// the parameter identification.
inline LaurentPoly kpoly_from_partition_fn(int n, int workers = 1) {
    LaurentPoly f = partition_fn_center(center_unit(n), workers);
    LaurentPoly converted = var_convert(f, ConvertDirection::QtToQ12);
    int e = n * (n - 1) / 2;
    return converted.scaled(Monomial::var(kVarQ1, e) * Monomial::var(kVarQ2, e), Rat(1));
}

// The recurrence satisfied by f(1_n) in the q, t alphabet; the returned
// value is the exact quotient by e_1 (used to cross-check enumeration).
// The kernel is prod_{j != i} (x_i - q^-1 x_j)(x_i - q t^-1 x_j)(x_i - t x_j)
// / (x_i x_j (x_j - x_i)), all three numerator factors in the same ratio.
inline LaurentPoly identity_partition_fn_recurrence(int n) {
    static std::deque<LaurentPoly> cache{LaurentPoly::one()};
    static std::mutex lock;
    std::lock_guard<std::mutex> guard(lock);
    while (int(cache.size()) <= n) {
        int m = int(cache.size());
        const LaurentPoly qiv = Lv(kVarQ, -1);
        const LaurentPoly qti = Lv(kVarQ) * Lv(kVarT, -1);
        const LaurentPoly t = Lv(kVarT);
        LaurentPoly acc = LaurentPoly::zero();
        for (int i = 1; i <= m; ++i) {
            std::vector<int> others;
            for (int j = 1; j <= m; ++j)
                if (j != i) others.push_back(j);
            LaurentPoly term = Lx(i) * detail::remap_x(cache[m - 1], others);
            Monomial shift;
            for (int j : others) {
                term *= (Lx(i) - qiv * Lx(j)) * (Lx(i) - qti * Lx(j)) * (Lx(i) - t * Lx(j));
                shift = shift * Monomial::var(var_x(i), -1) * Monomial::var(var_x(j), -1);
            }
            term = term.scaled(shift, Rat(1));
            term *= detail::diff_product_without(m, i);
            if ((m - i) % 2 == 1) term = -term;
            acc += term;
        }
        LaurentPoly cleared = acc.div_exact(detail::full_diff_product(m));
        cache.push_back(cleared.div_exact(detail::esum(m)));
    }
    return cache[n];
}

enum class MdegMethod { Lattice, Symmetrize };

// Multidegree of the commuting scheme: additive weights over identity
// configurations divided by (q1+q2)^n, or the symmetrized product formula;
// both are division-free up to one exact division.
inline LaurentPoly mdeg(int n, MdegMethod method, int workers = 1) {
    const LaurentPoly q1 = Lv(kVarQ1), q2 = Lv(kVarQ2);
    if (method == MdegMethod::Lattice) {
        LaurentPoly sum = LaurentPoly::zero();
        for_each_config(n, Permutation::identity(n), [&](const PathConfig& c) {
            sum += config_weight(c, WeightScheme::WT_H);
        });
        return sum.div_exact((q1 + q2).pow(n));
    }
    auto perms = all_permutations(n);
    auto partials = parallel_map<LaurentPoly>(
        perms.size(),
        [&](size_t widx) {
            const Permutation& w = perms[widx];
            LaurentPoly term = LaurentPoly::one();
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) {
                    LaurentPoly d = Lx(w(i)) - Lx(w(j));
                    term *= (q1 + q2 + d) * (q1 - d) * (q2 - d);
                }
            return w.length() % 2 == 1 ? -term : term;
        },
        workers);
    LaurentPoly acc = LaurentPoly::zero();
    for (const auto& p : partials) acc += p;
    LaurentPoly denom = LaurentPoly::one();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) denom *= Lx(j) - Lx(i);
    Rat fact(1);
    for (int i = 2; i <= n; ++i) fact *= i;
    return acc.div_exact(denom) * (Rat(1) / fact);
}

// Lowest-degree limit: substitute q_i -> 1-q_i, x_i -> 1-x_i with negative
// powers expanded as truncated series, and keep the lowest homogeneous part.
inline LaurentPoly grr_lowest_part(const LaurentPoly& k, int order) {
    auto truncate = [&](const LaurentPoly& p) {
        std::map<Monomial, Rat> kept;
        for (const auto& t : p.terms())
            if (t.mono.total_degree() <= order) kept[t.mono] = t.coef;
        return LaurentPoly::from_map(kept);
    };
    // (1 - v)^e truncated, e possibly negative
    auto one_minus_pow = [&](VarId v, int e) {
        LaurentPoly base = LaurentPoly::one() - Lv(v);
        if (e >= 0) return truncate(base.pow(e));
        LaurentPoly s = LaurentPoly::zero();
        Rat binom(1);
        int a = -e;
        for (int kk = 0; kk <= order; ++kk) {
            s += LaurentPoly::term(Monomial::var(v, kk), binom);
            binom = binom * (a + kk) / (kk + 1);
        }
        return s;
    };
    LaurentPoly total = LaurentPoly::zero();
    for (const auto& t : k.terms()) {
        LaurentPoly prod = LaurentPoly::constant(t.coef);
        for (const auto& [v, e] : t.mono.exps()) prod = truncate(prod * one_minus_pow(v, e));
        total += prod;
    }
    if (total.is_zero()) return total;
    std::int64_t lowest = total.terms().back().mono.total_degree();
    for (const auto& t : total.terms()) lowest = std::min(lowest, t.mono.total_degree());
    std::map<Monomial, Rat> kept;
    for (const auto& t : total.terms())
        if (t.mono.total_degree() == lowest) kept[t.mono] = t.coef;
    return LaurentPoly::from_map(kept);
}

// Multidegree from the K-polynomial: the lowest GRR part must land exactly
// in degree n(n-1), the codimension.
inline LaurentPoly grr_limit(const LaurentPoly& k, int n) {
    LaurentPoly low = grr_lowest_part(k, n * (n - 1) + 2);
    if (!low.is_zero() && low.leading().mono.total_degree() != std::int64_t(n) * (n - 1))
        throw degree_mismatch("lowest GRR degree " +
                              std::to_string(low.leading().mono.total_degree()) +
                              ", expected " + std::to_string(n * (n - 1)));
    return low;
}

// Ordinary degree of the commuting scheme (the multidegree at q1 = q2 = 1
// and equal x), via the frontier dynamic program.
inline Int commuting_scheme_degree(int n, const DegreeDpOptions& opts = {}) {
    if (n > 14) throw grade_too_large("degree budget is n <= 14");
    return lattice_degree_dp(n, opts);
}

struct SymmetryReport {
    bool swap_q1_q2 = false;
    bool inversion = false;
};

// K_n(q1,q2) = K_n(q2,q1) and K_n(q1,q2) = (q1 q2^2)^{n(n-1)/2} K_n(q1, (q1 q2)^{-1}).
inline SymmetryReport symmetry_check(int n) {
    const LaurentPoly& k = kpoly(n);
    SymmetryReport rep;
    Assignment swap_q{{kVarQ1, ScaledMonomial::of(Rat(1), Monomial::var(kVarQ2))},
                      {kVarQ2, ScaledMonomial::of(Rat(1), Monomial::var(kVarQ1))}};
    rep.swap_q1_q2 = k.substitute(swap_q) == k;
    Assignment inv{{kVarQ2, ScaledMonomial::of(Rat(1), Monomial::var(kVarQ1, -1) *
                                                           Monomial::var(kVarQ2, -1))}};
    int e = n * (n - 1) / 2;
    LaurentPoly rhs = k.substitute(inv).scaled(
        Monomial::var(kVarQ1, e) * Monomial::var(kVarQ2, 2 * e), Rat(1));
    rep.inversion = rhs == k;
    return rep;
}

// Bidegree check helper: the constant term (in the auxiliary variables) of
// (1/n!) prod_{i<j} (u_i-u_j)(q1-u_i+u_j)(q2-u_i+u_j)(q1+q2+u_i-u_j)/(u_i u_j).
inline LaurentPoly bidegree_constant_term(int n) {
    const LaurentPoly q1 = Lv(kVarQ1), q2 = Lv(kVarQ2);
    LaurentPoly prod = LaurentPoly::one();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            LaurentPoly d = Lx(i) - Lx(j);
            prod *= d * (q1 - d) * (q2 - d) * (q1 + q2 + d);
        }
    // coefficient of prod_i x_i^{n-1}
    std::map<Monomial, Rat> kept;
    for (const auto& t : prod.terms()) {
        bool match = true;
        for (int i = 1; i <= n && match; ++i)
            if (t.mono.exp(var_x(i)) != n - 1) match = false;
        if (!match) continue;
        Monomial rest;
        for (const auto& [v, e] : t.mono.exps())
            if (!is_x_var(v)) rest = rest * Monomial::var(v, e);
        kept[rest] += t.coef;
    }
    Rat fact(1);
    for (int i = 2; i <= n; ++i) fact *= i;
    return LaurentPoly::from_map(kept) * (Rat(1) / fact);
}

}  // namespace qcomb
