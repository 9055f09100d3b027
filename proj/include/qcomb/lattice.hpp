#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "qcomb/hecke.hpp"
#include "qcomb/parallel.hpp"

namespace qcomb {

// A vertex of the n x n grid. Edge labels name the path occupying the edge
// (0 = empty). Paths enter a vertex from the left or bottom edge and leave
// through the right or top edge, so each admissible vertex is one of nine
// patterns; where two paths meet, the classification refines by which of the
// two carries the lower label.
enum class VertexKind : std::uint8_t {
    Empty,
    BendLT,            // left -> top, alone
    BendBR,            // bottom -> right, alone
    BendBothLTLower,   // both bends, left->top path has the lower label
    BendBothBRLower,   // both bends, bottom->right path has the lower label
    ThroughH,          // left -> right, alone
    ThroughV,          // bottom -> top, alone
    CrossHLower,       // both straight, horizontal path lower
    CrossVLower,       // both straight, vertical path lower
};

struct VertexState {
    int left = 0, bottom = 0, right = 0, top = 0;
};

inline VertexKind classify_vertex(const VertexState& v) {
    const bool L = v.left, B = v.bottom, R = v.right, T = v.top;
    if (!L && !B && !R && !T) return VertexKind::Empty;
    if (L && T && !B && !R && v.left == v.top) return VertexKind::BendLT;
    if (B && R && !L && !T && v.bottom == v.right) return VertexKind::BendBR;
    if (L && T && B && R && v.left == v.top && v.bottom == v.right && v.left != v.bottom)
        return v.left < v.bottom ? VertexKind::BendBothLTLower : VertexKind::BendBothBRLower;
    if (L && R && !B && !T && v.left == v.right) return VertexKind::ThroughH;
    if (B && T && !L && !R && v.bottom == v.top) return VertexKind::ThroughV;
    if (L && R && B && T && v.left == v.right && v.bottom == v.top && v.left != v.bottom)
        return v.left < v.bottom ? VertexKind::CrossHLower : VertexKind::CrossVLower;
    throw inadmissible_vertex("edges L=" + std::to_string(v.left) + " B=" +
                              std::to_string(v.bottom) + " R=" + std::to_string(v.right) +
                              " T=" + std::to_string(v.top));
}

inline bool vertex_is_bend(VertexKind k) {
    return k == VertexKind::BendLT || k == VertexKind::BendBR ||
           k == VertexKind::BendBothLTLower || k == VertexKind::BendBothBRLower;
}

inline const char* vertex_kind_name(VertexKind k) {
    switch (k) {
        case VertexKind::Empty: return "empty";
        case VertexKind::BendLT: return "bend_lt";
        case VertexKind::BendBR: return "bend_br";
        case VertexKind::BendBothLTLower: return "bend_both_lt_lower";
        case VertexKind::BendBothBRLower: return "bend_both_br_lower";
        case VertexKind::ThroughH: return "through_h";
        case VertexKind::ThroughV: return "through_v";
        case VertexKind::CrossHLower: return "cross_h_lower";
        case VertexKind::CrossVLower: return "cross_v_lower";
    }
    return "?";
}

// One coloured lattice-path configuration. Row 1 is the top row; path i
// enters at the left edge of row i and exits at the top of column
// conn^{-1}(i).
struct PathConfig {
    int n = 0;
    Permutation conn;
    std::vector<std::vector<VertexState>> cell;  // [row-1][col-1]

    const VertexState& at(int i, int j) const { return cell[i - 1][j - 1]; }

    int bend_count() const {
        int b = 0;
        for (const auto& row : cell)
            for (const auto& v : row)
                if (vertex_is_bend(classify_vertex(v))) ++b;
        return b;
    }
};

inline nlohmann::json config_to_json(const PathConfig& cfg) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : cfg.cell) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& v : row)
            r.push_back({{"kind", vertex_kind_name(classify_vertex(v))},
                         {"left", v.left},
                         {"bottom", v.bottom},
                         {"right", v.right},
                         {"top", v.top}});
        rows.push_back(r);
    }
    return {{"n", cfg.n}, {"conn", cfg.conn.one_line()}, {"grid", rows}};
}

enum class WeightScheme { WT, WT_GENERAL, WT_K, WT_H };

// Boltzmann weight of one vertex at grid position (i, j), per scheme. The
// multiplicative schemes are the matrix entries of the R-matrix with
// spectral parameter u = x_i / y_j (generic) or its specialization
// y_j = q x_j; the K and H schemes are their commuting-scheme rearrangements
// in the variables q1, q2.
inline LaurentPoly vertex_weight(VertexKind k, int i, int j, WeightScheme s) {
    const LaurentPoly one = LaurentPoly::one();
    const LaurentPoly t = Lv(kVarT);
    if (s == WeightScheme::WT || s == WeightScheme::WT_GENERAL) {
        LaurentPoly u = s == WeightScheme::WT ? Lv(kVarQ, -1) * Lx(i) * Lx(j, -1)
                                              : Lx(i) * Ly(j, -1);
        switch (k) {
            case VertexKind::Empty: return one - t * u;
            case VertexKind::BendLT:
            case VertexKind::BendBothLTLower: return one - t;
            case VertexKind::BendBR:
            case VertexKind::BendBothBRLower: return u * (one - t);
            case VertexKind::ThroughH:
            case VertexKind::CrossHLower: return t * (one - u);
            case VertexKind::ThroughV:
            case VertexKind::CrossVLower: return one - u;
        }
    } else if (s == WeightScheme::WT_K) {
        const LaurentPoly q1 = Lv(kVarQ1), q2 = Lv(kVarQ2);
        const LaurentPoly kernel = one - q1 * Lx(i) * Lx(j, -1);
        switch (k) {
            case VertexKind::Empty: return Lx(i) * Lx(j, -1) - q2;
            case VertexKind::BendLT:
            case VertexKind::BendBR:
            case VertexKind::BendBothLTLower: return one - q1 * q2;
            case VertexKind::BendBothBRLower: return q1 * (one - q1 * q2);
            case VertexKind::ThroughH:
            case VertexKind::CrossHLower: return kernel;
            case VertexKind::CrossVLower: return q1 * q2 * kernel;
            case VertexKind::ThroughV: return q2 * kernel;
        }
    } else {
        const LaurentPoly q1 = Lv(kVarQ1), q2 = Lv(kVarQ2);
        switch (k) {
            case VertexKind::Empty: return q2 - Lx(i) + Lx(j);
            case VertexKind::BendLT:
            case VertexKind::BendBR:
            case VertexKind::BendBothLTLower:
            case VertexKind::BendBothBRLower: return q1 + q2;
            default: return q1 + Lx(i) - Lx(j);
        }
    }
    throw inadmissible_vertex("unknown kind");
}

inline LaurentPoly config_weight(const PathConfig& cfg, WeightScheme s) {
    LaurentPoly w = LaurentPoly::one();
    for (int i = 1; i <= cfg.n; ++i)
        for (int j = 1; j <= cfg.n; ++j)
            w *= vertex_weight(classify_vertex(cfg.at(i, j)), i, j, s);
    return w;
}

// Enumerate all configurations with connectivity v, sweeping cells from the
// bottom row to the top row, left to right within a row. The depth-first
// branch order is fixed, so the output order is deterministic. Pruning: a
// path p can never sit to the right of its exit column v^{-1}(p).
inline void for_each_config(int n, const Permutation& v,
                            const std::function<void(const PathConfig&)>& emit) {
    if (v.size() != n) throw grade_mismatch("connectivity size");
    std::vector<int> exit_col(n + 1);
    for (int p = 1; p <= n; ++p) exit_col[p] = v.inverse()(p);

    PathConfig cfg;
    cfg.n = n;
    cfg.conn = v;
    cfg.cell.assign(n, std::vector<VertexState>(n));

    std::vector<int> vert(n + 1, 0);  // vert[j]: label on the vertical cut edge of column j

    // process rows i = n .. 1; within a row cells j = 1 .. n
    auto rec = [&](auto&& self, int i, int j, int h) -> void {
        if (j > n) {
            if (h != 0) return;  // right boundary must be empty
            if (i == 1) {
                bool ok = true;
                for (int c = 1; c <= n; ++c)
                    if (vert[c] != v(c)) {
                        ok = false;
                        break;
                    }
                if (ok) emit(cfg);
                return;
            }
            self(self, i - 1, 1, i - 1);  // path i-1 enters the next row
            return;
        }
        int b = vert[j];
        auto place = [&](int h_out, int v_out) {
            if (h_out != 0 && exit_col[h_out] <= j) return;   // must still turn up right of j
            if (v_out != 0 && exit_col[v_out] < j) return;    // may exit at j at the earliest
            cfg.cell[i - 1][j - 1] = VertexState{h, b, h_out, v_out};
            vert[j] = v_out;
            self(self, i, j + 1, h_out);
            vert[j] = b;
        };
        if (h == 0 && b == 0) {
            place(0, 0);
        } else if (h != 0 && b == 0) {
            place(h, 0);  // straight through
            place(0, h);  // bend up
        } else if (h == 0 && b != 0) {
            place(0, b);  // straight up
            place(b, 0);  // bend right
        } else {
            place(h, b);  // crossing
            place(b, h);  // double bend
        }
    };
    rec(rec, n, 1, n);
}

inline std::vector<PathConfig> enumerate_configs(int n, const Permutation& v) {
    std::vector<PathConfig> out;
    for_each_config(n, v, [&](const PathConfig& c) { out.push_back(c); });
    return out;
}

// F_v: the weighted sum over configurations of connectivity v.
inline LaurentPoly partition_fn_F(int n, const Permutation& v, WeightScheme s) {
    LaurentPoly sum = LaurentPoly::zero();
    for_each_config(n, v, [&](const PathConfig& c) { sum += config_weight(c, s); });
    return sum;
}

// The overall constant (q/t)^{n(n-1)/2} (1-t)^{-n}.
inline Fraction alpha_constant(int n) {
    int e = n * (n - 1) / 2;
    LaurentPoly num = LaurentPoly::term(Monomial::var(kVarQ, e) * Monomial::var(kVarT, -e), Rat(1));
    LaurentPoly den = (LaurentPoly::one() - Lv(kVarT)).pow(n);
    return Fraction(num, den);
}

// Partition function of a central element: alpha_n * sum_v c_v F_v, with
// y_j = q x_j weights. The (1-t)^{-n} in alpha_n cancels against the n
// forced bends; the division is performed exactly and failure to clear it
// would throw.
inline LaurentPoly partition_fn_center(const CenterElement& c, int workers = 1) {
    int n = c.grade();
    std::vector<std::pair<Permutation, Fraction>> terms(c.elem().coeffs().begin(),
                                                        c.elem().coeffs().end());
    auto partials = parallel_map<LaurentPoly>(
        terms.size(),
        [&](size_t k) {
            return partition_fn_F(n, terms[k].first, WeightScheme::WT);
        },
        workers);
    Fraction sum = Fraction::zero();
    for (size_t k = 0; k < terms.size(); ++k) sum += terms[k].second * Fraction(partials[k]);
    Fraction result = alpha_constant(n) * sum;
    return result.to_poly_exact();
}

// Closed product form of F for the reversing permutation: the unique
// configuration stacks bends on the antidiagonal, straight crossings above
// and empty vertices below.
inline LaurentPoly reversal_closed_form(int n) {
    LaurentPoly f = (LaurentPoly::one() - Lv(kVarT)).pow(n) *
                    LaurentPoly::term(Monomial::var(kVarT, n * (n - 1) / 2), Rat(1));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i + j < n + 1) f *= LaurentPoly::one() - Lx(i) * Ly(j, -1);
            if (i + j > n + 1) f *= LaurentPoly::one() - Lv(kVarT) * Lx(i) * Ly(j, -1);
        }
    return f;
}

enum class ExchangeRoute { YRelations, XRelations };

// Solve the exchange relations downward from the closed form at the longest
// element, producing every F_v at generic y. Both displayed relation
// families invert; which one is used is selectable and cross-checked in the
// tests.
inline std::map<Permutation, LaurentPoly> exchange_f_table(
    int n, ExchangeRoute route = ExchangeRoute::YRelations) {
    std::map<Permutation, LaurentPoly> table;
    const LaurentPoly one = LaurentPoly::one();
    const LaurentPoly t = Lv(kVarT);
    table[longest_element(n)] = reversal_closed_form(n);

    auto perms = all_permutations(n);
    std::sort(perms.begin(), perms.end(), [](const Permutation& a, const Permutation& b) {
        int la = a.length(), lb = b.length();
        if (la != lb) return la > lb;
        return a < b;
    });
    for (const auto& u : perms) {
        if (table.count(u)) continue;
        if (route == ExchangeRoute::YRelations) {
            // find j with u s_j > u; v = u s_j is longer and already known
            int j = 0;
            for (int cand = 1; cand < n; ++cand)
                if (u.right_longer(cand)) {
                    j = cand;
                    break;
                }
            Permutation v = u.swap_positions(j);
            const LaurentPoly& Fv = table.at(v);
            Assignment swap_y{{var_y(j), ScaledMonomial::of(Rat(1), Monomial::var(var_y(j + 1)))},
                              {var_y(j + 1), ScaledMonomial::of(Rat(1), Monomial::var(var_y(j)))}};
            LaurentPoly ratio = Ly(j) * Ly(j + 1, -1);
            LaurentPoly lhs = (one - t * ratio) * Fv.substitute(swap_y);
            LaurentPoly num = (lhs - (one - t) * ratio * Fv) * Ly(j + 1);
            table[u] = num.div_exact(t * (Ly(j + 1) - Ly(j)));
        } else {
            int i = 0;
            for (int cand = 1; cand < n; ++cand)
                if (u.left_longer(cand)) {
                    i = cand;
                    break;
                }
            Permutation v = u.swap_values(i);
            const LaurentPoly& Fv = table.at(v);
            Assignment swap_x{{var_x(i), ScaledMonomial::of(Rat(1), Monomial::var(var_x(i + 1)))},
                              {var_x(i + 1), ScaledMonomial::of(Rat(1), Monomial::var(var_x(i)))}};
            LaurentPoly ratio = Lx(i + 1) * Lx(i, -1);
            LaurentPoly lhs = (one - t * ratio) * Fv.substitute(swap_x);
            LaurentPoly num = (lhs - (one - t) * ratio * Fv) * Lx(i);
            table[u] = num.div_exact(t * (Lx(i) - Lx(i + 1)));
        }
    }
    return table;
}

// Degree-bound membership: every monomial x^{i_1} ... x^{i_n} must satisfy
// |i_{j_1} + ... + i_{j_r}| <= r(n-r) for every r-subset; by sorting it is
// enough to bound the r largest and r smallest exponent sums.
inline bool satisfies_degree_bounds(const LaurentPoly& p, int n) {
    for (const auto& term : p.terms()) {
        std::vector<std::int64_t> e(n, 0);
        for (const auto& [v, ex] : term.mono.exps()) {
            if (!is_x_var(v)) continue;
            int idx = x_index(v);
            if (idx > n) return false;  // foreign x variable
            e[idx - 1] = ex;
        }
        std::sort(e.begin(), e.end());
        std::int64_t lo = 0, hi = 0;
        for (int r = 1; r <= n; ++r) {
            lo += e[r - 1];
            hi += e[n - r];
            std::int64_t bound = std::int64_t(r) * (n - r);
            if (hi > bound || lo < -bound) return false;
        }
    }
    return true;
}

// Matrix entries of the R-matrix in the path representation: amplitude of
// (top, right) -> (left, bottom) with empty ranked above every path label.
// Used to rederive the hard-coded weight tables; a mismatch throws.
inline std::map<VertexKind, LaurentPoly> weight_table_from_rmatrix(int n, int i, int j,
                                                                   WeightScheme s) {
    if (s != WeightScheme::WT && s != WeightScheme::WT_GENERAL)
        throw table_mismatch("R-matrix derivation applies to the multiplicative schemes");
    LaurentPoly u = s == WeightScheme::WT ? Lv(kVarQ, -1) * Lx(i) * Lx(j, -1)
                                          : Lx(i) * Ly(j, -1);
    const LaurentPoly one = LaurentPoly::one();
    const LaurentPoly t = Lv(kVarT);
    auto rank = [&](int label) { return label == 0 ? n + 1 : label; };

    std::map<VertexKind, LaurentPoly> table;
    auto record = [&](const VertexState& vs, const LaurentPoly& amp) {
        if (amp.is_zero()) return;
        VertexKind k = classify_vertex(vs);
        auto it = table.find(k);
        if (it == table.end())
            table[k] = amp;
        else if (it->second != amp)
            throw table_mismatch(std::string("conflicting amplitudes for ") +
                                 vertex_kind_name(k));
    };
    for (int a = 0; a <= n; ++a)
        for (int b = 0; b <= n; ++b) {
            if (a != 0 && a == b) continue;  // a path may use an edge only once
            int ra = rank(a), rb = rank(b);
            // diagonal part: (left,bottom) = (top,right)
            LaurentPoly diag = one - t;
            if (ra > rb) diag = u * (one - t);
            // swap part: (left,bottom) = (right,top)
            LaurentPoly swap = one - u;
            if (ra == rb)
                swap = one - t * u;  // identical labels: only the empty vertex
            else if (ra > rb)
                swap = t * (one - u);
            if (ra != rb) record(VertexState{a, b, b, a}, diag);
            record(VertexState{b, a, b, a}, swap);
        }
    for (const auto& [k, amp] : table) {
        LaurentPoly expect = vertex_weight(k, i, j, s);
        if (amp != expect)
            throw table_mismatch(std::string(vertex_kind_name(k)) + ": derived " + amp.str() +
                                 " vs table " + expect.str());
    }
    return table;
}

}  // namespace qcomb
