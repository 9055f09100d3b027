#pragma once

#include <deque>
#include <map>
#include <mutex>
#include <random>
#include <vector>

#include "qcomb/lattice.hpp"
#include "qcomb/linalg.hpp"
#include "qcomb/symfunc.hpp"

namespace qcomb {

// The three multiplicative parameters, expressed in q and t. They multiply
// to 1, so each is a Laurent monomial.
inline Monomial qk_monomial(int k) {
    switch (k) {
        case 1: return Monomial::var(kVarQ, -1);
        case 2: return Monomial::var(kVarQ) * Monomial::var(kVarT, -1);
        case 3: return Monomial::var(kVarT);
    }
    throw index_out_of_range("parameter index " + std::to_string(k));
}

// Element of the commutative shuffle algebra in rational form: the value is
// num / prod_{i<j} (x_i - x_j)^2 in the variables x_1 .. x_grade. The
// numerator is symmetric and satisfies the wheel conditions; both are
// checkable, not maintained implicitly.
struct ShuffleElem {
    int grade = 0;
    LaurentPoly num = LaurentPoly::one();

    bool operator==(const ShuffleElem& o) const { return grade == o.grade && num == o.num; }
    bool operator!=(const ShuffleElem& o) const { return !(*this == o); }
};

namespace detail {

// Rename x_1..x_k into x_{tgt[0]}, x_{tgt[1]}, ... (simultaneous).
inline LaurentPoly remap_x(const LaurentPoly& p, const std::vector<int>& tgt) {
    Assignment a;
    for (size_t i = 0; i < tgt.size(); ++i)
        if (int(i) + 1 != tgt[i])
            a[var_x(int(i) + 1)] = ScaledMonomial::of(Rat(1), Monomial::var(var_x(tgt[i])));
    return a.empty() ? p : p.substitute(a);
}

// (y - q1 x)(y - q2 x)(y - q3 x)
inline LaurentPoly omega_numerator(const LaurentPoly& y, const LaurentPoly& x) {
    LaurentPoly r = LaurentPoly::one();
    for (int k = 1; k <= 3; ++k)
        r *= y - LaurentPoly::term(qk_monomial(k), Rat(1)) * x;
    return r;
}

// prod_{a<b in vars} (x_a - x_b), ordered by index
inline LaurentPoly ordered_diff_product(const std::vector<int>& vars) {
    LaurentPoly r = LaurentPoly::one();
    for (size_t a = 0; a < vars.size(); ++a)
        for (size_t b = a + 1; b < vars.size(); ++b) r *= Lx(vars[a]) - Lx(vars[b]);
    return r;
}

inline void combinations(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 1);
    if (k == 0) {
        fn(idx);
        return;
    }
    while (true) {
        fn(idx);
        int pos = k - 1;
        while (pos >= 0 && idx[pos] == n - k + pos + 1) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int j = pos + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace detail

// Shuffle product. The symmetrization collapses to a sum over the
// C(k+l, k) splittings (I, J) of the variable set; the k! l! normalization
// cancels against the stabilizer. Each splitting contributes
//   num_a(x_I) num_b(x_J) prod_{i in I, j in J} (x_j-q1 x_i)(x_j-q2 x_i)(x_j-q3 x_i)/(x_j-x_i),
// and after clearing the global Vandermonde the division must come out
// exact; a surviving denominator would mean the inputs were not in the
// algebra.
inline ShuffleElem shuffle_mul(const ShuffleElem& a, const ShuffleElem& b) {
    int k = a.grade, l = b.grade, n = k + l;
    if (k == 0) return ShuffleElem{l, b.num * a.num};
    if (l == 0) return ShuffleElem{k, a.num * b.num};
    LaurentPoly acc = LaurentPoly::zero();
    detail::combinations(n, k, [&](const std::vector<int>& I) {
        std::vector<int> J;
        std::vector<char> in_I(n + 1, 0);
        for (int i : I) in_I[i] = 1;
        for (int j = 1; j <= n; ++j)
            if (!in_I[j]) J.push_back(j);
        LaurentPoly term = detail::remap_x(a.num, I) * detail::remap_x(b.num, J);
        term *= detail::ordered_diff_product(I) * detail::ordered_diff_product(J);
        long flips = 0;
        for (int i : I)
            for (int j : J) {
                term *= detail::omega_numerator(Lx(j), Lx(i));
                if (i < j) ++flips;
            }
        if (flips % 2 == 1) term = -term;
        acc += term;
    });
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 1);
    try {
        return ShuffleElem{n, acc.div_exact(detail::ordered_diff_product(all))};
    } catch (const non_exact_division& e) {
        throw denominator_survives(e.what());
    }
}

// The same product on the Laurent-polynomial side of the isomorphism, where
// an element of grade n is a plain symmetric Laurent polynomial and the
// cross factor is (1-q1 z)(1-q2 z)(1-q3 z) / (-z(1-z)) at z = x_i / x_j.
inline LaurentPoly laurent_shuffle_mul(const LaurentPoly& p, int k, const LaurentPoly& q, int l) {
    int n = k + l;
    if (k == 0) return p * q;
    if (l == 0) return p * q;
    LaurentPoly acc = LaurentPoly::zero();
    detail::combinations(n, k, [&](const std::vector<int>& I) {
        std::vector<int> J;
        std::vector<char> in_I(n + 1, 0);
        for (int i : I) in_I[i] = 1;
        for (int j = 1; j <= n; ++j)
            if (!in_I[j]) J.push_back(j);
        LaurentPoly term = detail::remap_x(p, I) * detail::remap_x(q, J);
        term *= detail::ordered_diff_product(I) * detail::ordered_diff_product(J);
        Monomial shift;
        long flips = 0;
        for (int i : I)
            for (int j : J) {
                term *= detail::omega_numerator(Lx(j), Lx(i));
                shift = shift * Monomial::var(var_x(i), -1) * Monomial::var(var_x(j), -1);
                if (j < i) ++flips;
            }
        term = term.scaled(shift, flips % 2 == 1 ? Rat(-1) : Rat(1));
        acc += term;
    });
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 1);
    try {
        return acc.div_exact(detail::ordered_diff_product(all));
    } catch (const non_exact_division& e) {
        throw denominator_survives(e.what());
    }
}

// Conversion between the two presentations: multiplying by
// prod_{i != j} (1 - x_i/x_j) turns the rational form into the Laurent form,
// and that product is (-1)^{n(n-1)/2} prod_i x_i^{-(n-1)} times the squared
// Vandermonde, so both directions are monomial rescalings of the numerator.
inline LaurentPoly to_laurent_form(const ShuffleElem& e) {
    Monomial shift;
    for (int i = 1; i <= e.grade; ++i) shift = shift * Monomial::var(var_x(i), -(e.grade - 1));
    Rat sign = (e.grade * (e.grade - 1) / 2) % 2 == 1 ? -1 : 1;
    return e.num.scaled(shift, sign);
}

inline ShuffleElem from_laurent_form(const LaurentPoly& q, int grade) {
    Monomial shift;
    for (int i = 1; i <= grade; ++i) shift = shift * Monomial::var(var_x(i), grade - 1);
    Rat sign = (grade * (grade - 1) / 2) % 2 == 1 ? -1 : 1;
    return ShuffleElem{grade, q.scaled(shift, sign)};
}

inline bool is_symmetric_in_x(const LaurentPoly& p, int n) {
    for (int i = 1; i < n; ++i) {
        Assignment swap_x{{var_x(i), ScaledMonomial::of(Rat(1), Monomial::var(var_x(i + 1)))},
                          {var_x(i + 1), ScaledMonomial::of(Rat(1), Monomial::var(var_x(i)))}};
        if (p.substitute(swap_x) != p) return false;
    }
    return true;
}

// Wheel condition on the numerator: vanishing under
// (x_1, x_2, x_3) -> (x, q1 x, q1 q2 x) and (x, q2 x, q1 q2 x). Symmetry
// justifies testing slots 1..3 only; grades below 3 are vacuous.
inline bool wheel_check(const ShuffleElem& e) {
    if (e.grade < 3) return true;
    const Monomial q1 = qk_monomial(1), q2 = qk_monomial(2);
    const Monomial q12 = q1 * q2;
    for (const Monomial& second : {q1, q2}) {
        Assignment sub{
            {var_x(2), ScaledMonomial::of(Rat(1), second * Monomial::var(var_x(1)))},
            {var_x(3), ScaledMonomial::of(Rat(1), q12 * Monomial::var(var_x(1)))}};
        if (!e.num.substitute(sub).is_zero()) return false;
    }
    return true;
}

// Factorized generators: eps_n(q_k) has numerator
// prod_{i<j} (x_i - q_k x_j)(x_i - q_k^{-1} x_j).
inline ShuffleElem epsilon_atom(int n, int k) {
    ShuffleElem e{n, LaurentPoly::one()};
    const LaurentPoly qk = LaurentPoly::term(qk_monomial(k), Rat(1));
    const LaurentPoly qk_inv = LaurentPoly::term(qk_monomial(k).inverse(), Rat(1));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            e.num *= (Lx(i) - qk * Lx(j)) * (Lx(i) - qk_inv * Lx(j));
    return e;
}

// eps_lambda(q_k) as the iterated binary shuffle product of the atoms.
// Memoized: the basis elements are rebuilt constantly by the expansion and
// verification layers. std::map nodes keep references stable.
inline const ShuffleElem& epsilon_partition(const Partition& lam, int k) {
    static std::map<std::pair<std::vector<int>, int>, ShuffleElem> cache;
    static std::mutex lock;
    std::lock_guard<std::mutex> guard(lock);
    auto key = std::make_pair(lam.parts, k);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    ShuffleElem acc{0, LaurentPoly::one()};
    for (int part : lam.parts) acc = shuffle_mul(acc, epsilon_atom(part, k));
    return cache.emplace(std::move(key), std::move(acc)).first->second;
}

// Closed one-sum form of eps_lambda over multi-block coset representatives;
// cross-check for the iterated product (small part counts only).
inline ShuffleElem epsilon_partition_closed(const Partition& lam, int k) {
    int n = lam.weight(), m = lam.length();
    if (m == 0) return ShuffleElem{0, LaurentPoly::one()};
    std::vector<ShuffleElem> atoms;
    for (int part : lam.parts) atoms.push_back(epsilon_atom(part, k));

    LaurentPoly acc = LaurentPoly::zero();
    // ordered set partitions of {1..n} into blocks of sizes lam_1, ..., lam_m
    std::vector<std::vector<int>> blocks(m);
    std::vector<char> used(n + 1, 0);
    auto rec = [&](auto&& self, int bi) -> void {
        if (bi == m) {
            LaurentPoly term = LaurentPoly::one();
            long flips = 0;
            for (int a = 0; a < m; ++a) {
                term *= detail::remap_x(atoms[a].num, blocks[a]);
                term *= detail::ordered_diff_product(blocks[a]);
            }
            for (int a = 0; a < m; ++a)
                for (int b = a + 1; b < m; ++b)
                    for (int i : blocks[a])
                        for (int j : blocks[b]) {
                            term *= detail::omega_numerator(Lx(j), Lx(i));
                            if (i < j) ++flips;
                        }
            if (flips % 2 == 1) term = -term;
            acc += term;
            return;
        }
        // choose the block as an increasing tuple of unused indices
        std::vector<int> avail;
        for (int v = 1; v <= n; ++v)
            if (!used[v]) avail.push_back(v);
        int sz = lam.parts[bi];
        std::vector<int> idx(sz);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            blocks[bi].clear();
            for (int i : idx) blocks[bi].push_back(avail[i]);
            for (int v : blocks[bi]) used[v] = 1;
            self(self, bi + 1);
            for (int v : blocks[bi]) used[v] = 0;
            int pos = sz - 1;
            while (pos >= 0 && idx[pos] == int(avail.size()) - sz + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (int j = pos + 1; j < sz; ++j) idx[j] = idx[j - 1] + 1;
        }
    };
    rec(rec, 0);
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 1);
    try {
        return ShuffleElem{n, acc.div_exact(detail::ordered_diff_product(all))};
    } catch (const non_exact_division& e) {
        throw denominator_survives(e.what());
    }
}

// One x_n -> 0 limit: the numerator must stay finite in x_n; the removed
// Vandermonde factors contribute prod_{i<n} x_i^{-2}.
inline ShuffleElem limit_zero_once(const ShuffleElem& e) {
    if (e.grade == 0) throw limit_diverges("grade 0 has no variable to send to zero");
    if (e.num.min_exp(var_x(e.grade)) < 0)
        throw limit_diverges("numerator has poles at x_" + std::to_string(e.grade) + " = 0");
    Assignment kill{{var_x(e.grade), ScaledMonomial::value(Rat(0))}};
    LaurentPoly num = e.num.substitute(kill);
    Monomial shift;
    for (int i = 1; i < e.grade; ++i) shift = shift * Monomial::var(var_x(i), -2);
    return ShuffleElem{e.grade - 1, num.scaled(shift, Rat(1))};
}

inline ShuffleElem limit_zero(const ShuffleElem& e, int r) {
    ShuffleElem cur = e;
    for (int i = 0; i < r; ++i) cur = limit_zero_once(cur);
    return cur;
}

// P(x, q_k x, ..., q_k^{n-1} x) as a fraction in x (= x_1), q, t.
inline Fraction specialize_geometric(const ShuffleElem& e, int k) {
    Assignment sub;
    Monomial qk = qk_monomial(k);
    for (int i = 2; i <= e.grade; ++i)
        sub[var_x(i)] = ScaledMonomial::of(Rat(1), qk.pow(i - 1) * Monomial::var(var_x(1)));
    LaurentPoly num = e.num.substitute(sub);
    LaurentPoly den = LaurentPoly::one();
    for (int i = 1; i <= e.grade; ++i)
        for (int j = i + 1; j <= e.grade; ++j) {
            LaurentPoly diff = LaurentPoly::term(qk.pow(i - 1), Rat(1)) -
                               LaurentPoly::term(qk.pow(j - 1), Rat(1));
            den *= diff * diff;
        }
    den *= Lv(var_x(1)).pow(e.grade * (e.grade - 1));
    return Fraction(num, den);
}

// Evaluate at rational points x_i = pts[i-1] (q, t stay symbolic).
inline Fraction eval_at_points(const ShuffleElem& e, const std::vector<Rat>& pts) {
    if (int(pts.size()) != e.grade) throw qcomb_error("point count != grade");
    Assignment sub;
    for (int i = 1; i <= e.grade; ++i) sub[var_x(i)] = ScaledMonomial::value(pts[i - 1]);
    LaurentPoly num = e.num.substitute(sub);
    Rat den(1);
    for (int i = 0; i < e.grade; ++i)
        for (int j = i + 1; j < e.grade; ++j) {
            Rat d = pts[i] - pts[j];
            den *= d * d;
        }
    return Fraction(num, LaurentPoly::constant(den));
}

// Expansion in the eps_lambda(t) basis by exact interpolation: evaluate the
// element and all basis elements at p(n) rational points (q, t symbolic) and
// solve. Points are drawn deterministically from the seed; a singular matrix
// triggers fresh points, up to five attempts. The expansion is verified by
// re-evaluation at an extra point.
inline std::map<Partition, Fraction> expand_in_epsilon_basis(const ShuffleElem& e,
                                                             int max_grade = 4,
                                                             std::uint64_t seed = 12345) {
    int n = e.grade;
    if (n > max_grade) throw grade_too_large("epsilon expansion at grade " + std::to_string(n));
    auto lams = partitions_of(n);
    if (n == 0) {
        std::map<Partition, Fraction> out;
        out[Partition{}] = Fraction(e.num.is_zero() ? Rat(0) : e.num.leading().coef);
        return out;
    }
    std::vector<ShuffleElem> basis;
    for (const auto& lam : lams) basis.push_back(epsilon_partition(lam, 3));

    // Small distinct primes keep the evaluated coefficients short, which
    // matters in the exact solve; each row takes a different window into the
    // prime table, shuffled by the seed.
    static const int kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    const int table = int(sizeof(kPrimes) / sizeof(kPrimes[0]));
    std::mt19937_64 rng(seed);
    std::vector<int> offsets(table - n);
    std::iota(offsets.begin(), offsets.end(), 0);
    auto window_point = [&](int offset) {
        std::vector<Rat> pts(n);
        for (int i = 0; i < n; ++i) pts[i] = kPrimes[offset + i];
        return pts;
    };

    // All entries of one row share the squared-Vandermonde denominator of
    // that row's point, so the system clears to polynomials in q, t and a
    // fraction-free Cramer solve keeps the degree growth linear.
    auto eval_num = [&](const ShuffleElem& el, const std::vector<Rat>& pts) {
        Assignment sub;
        for (int i = 1; i <= el.grade; ++i) sub[var_x(i)] = ScaledMonomial::value(pts[i - 1]);
        return el.num.substitute(sub);
    };
    for (int attempt = 0; attempt < 5; ++attempt) {
        std::shuffle(offsets.begin(), offsets.end(), rng);
        if (offsets.size() < lams.size() + 1)
            throw singular_evaluation_matrix("prime table too small for this grade");
        PolyMatrix A(lams.size(), std::vector<LaurentPoly>(lams.size()));
        std::vector<LaurentPoly> b(lams.size());
        for (size_t r = 0; r < lams.size(); ++r) {
            auto pts = window_point(offsets[r]);
            for (size_t c = 0; c < lams.size(); ++c) A[r][c] = eval_num(basis[c], pts);
            b[r] = eval_num(e, pts);
        }
        FracVector x;
        try {
            x = solve_poly_cramer(std::move(A), std::move(b));
        } catch (const singular_system&) {
            continue;
        }
        // verify at a fresh point
        auto fresh = window_point(offsets[lams.size()]);
        Fraction lhs = eval_at_points(e, fresh);
        Fraction rhs = Fraction::zero();
        for (size_t c = 0; c < lams.size(); ++c) rhs += x[c] * eval_at_points(basis[c], fresh);
        if (!(lhs == rhs)) throw verification_failure("epsilon expansion failed re-evaluation");
        std::map<Partition, Fraction> out;
        for (size_t c = 0; c < lams.size(); ++c)
            if (!x[c].is_zero()) out[lams[c]] = x[c];
        return out;
    }
    throw singular_evaluation_matrix("5 attempts exhausted");
}

// The ring isomorphism to symmetric functions: eps_lambda(t) maps to the
// product of third plethystic images of the elementary functions.
inline SymFunc upsilon_map(const ShuffleElem& e, int max_grade = 4, std::uint64_t seed = 12345) {
    auto coords = expand_in_epsilon_basis(e, max_grade, seed);
    SymFunc out;
    for (const auto& [lam, c] : coords) {
        SymFunc prod = SymFunc::one();
        for (int part : lam.parts) prod *= elementary_image(part, 3);
        out += prod * c;
    }
    return out;
}

// kappa_n, defined by kappa_0 = 1 and (x_1 + ... + x_n) kappa_n =
// kappa_{n-1} * x_1; the exact division by e_1 is part of the contract.
// Cached in a deque so references stay valid as higher grades are built.
inline const ShuffleElem& kappa_elem(int n) {
    static std::deque<ShuffleElem> cache{ShuffleElem{0, LaurentPoly::one()}};
    static std::mutex lock;
    std::lock_guard<std::mutex> guard(lock);
    while (int(cache.size()) <= n) {
        int m = int(cache.size());
        ShuffleElem x1{1, Lx(1)};
        ShuffleElem prod = shuffle_mul(cache[m - 1], x1);
        LaurentPoly e1 = LaurentPoly::zero();
        for (int i = 1; i <= m; ++i) e1 += Lx(i);
        cache.push_back(ShuffleElem{m, prod.num.div_exact(e1)});
    }
    return cache[n];
}

}  // namespace qcomb
