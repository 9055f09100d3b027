#pragma once

#include <map>
#include <string>
#include <vector>

#include "qcomb/fraction.hpp"
#include "qcomb/linalg.hpp"
#include "qcomb/permutation.hpp"
#include "qcomb/symfunc.hpp"

namespace qcomb {

// Element of the Hecke algebra of grade n in the standard basis (T_w),
// with coefficients in the rational-function field. Relations:
//   T_i T_{i+1} T_i = T_{i+1} T_i T_{i+1},  T_i^2 = (t-1) T_i + t,
//   T_i T_j = T_j T_i for |i-j| >= 2.
class HeckeElement {
  public:
    explicit HeckeElement(int grade) : grade_(grade) {}

    static HeckeElement zero(int n) { return HeckeElement(n); }

    static HeckeElement unit(int n) {
        HeckeElement e(n);
        e.coef_[Permutation::identity(n)] = Fraction::one();
        return e;
    }

    static HeckeElement basis(const Permutation& w) {
        HeckeElement e(w.size());
        e.coef_[w] = Fraction::one();
        return e;
    }

    static HeckeElement generator(int i, int n) {
        return basis(Permutation::transposition(i, n));
    }

    int grade() const { return grade_; }
    const std::map<Permutation, Fraction>& coeffs() const { return coef_; }
    bool is_zero() const { return coef_.empty(); }

    Fraction coeff(const Permutation& w) const {
        auto it = coef_.find(w);
        return it == coef_.end() ? Fraction::zero() : it->second;
    }

    void set_coeff(const Permutation& w, const Fraction& c) {
        if (w.size() != grade_) throw grade_mismatch("set_coeff");
        if (c.is_zero())
            coef_.erase(w);
        else
            coef_[w] = c;
    }

    HeckeElement operator+(const HeckeElement& o) const {
        require_same_grade(o);
        HeckeElement r = *this;
        for (const auto& [w, c] : o.coef_) r.add_term(w, c);
        return r;
    }
    HeckeElement operator-(const HeckeElement& o) const {
        return *this + o * Fraction(Rat(-1));
    }
    HeckeElement operator*(const Fraction& c) const {
        HeckeElement r(grade_);
        if (c.is_zero()) return r;
        for (const auto& [w, a] : coef_) r.coef_[w] = a * c;
        return r;
    }
    HeckeElement& operator+=(const HeckeElement& o) { return *this = *this + o; }

    // Left action of the generator T_i in the standard basis:
    //   T_i T_w = T_{s_i w}                     if |s_i w| > |w|
    //   T_i T_w = (t-1) T_w + t T_{s_i w}       otherwise
    HeckeElement left_gen(int i) const {
        HeckeElement r(grade_);
        Fraction t(Lv(kVarT)), tm1(Lv(kVarT) - LaurentPoly::one());
        for (const auto& [w, c] : coef_) {
            Permutation sw = w.swap_values(i);
            if (w.left_longer(i)) {
                r.add_term(sw, c);
            } else {
                r.add_term(w, tm1 * c);
                r.add_term(sw, t * c);
            }
        }
        return r;
    }

    // Right action: T_w T_i, mirrored cases with |w s_i|.
    HeckeElement right_gen(int i) const {
        HeckeElement r(grade_);
        Fraction t(Lv(kVarT)), tm1(Lv(kVarT) - LaurentPoly::one());
        for (const auto& [w, c] : coef_) {
            Permutation ws = w.swap_positions(i);
            if (w.right_longer(i)) {
                r.add_term(ws, c);
            } else {
                r.add_term(w, tm1 * c);
                r.add_term(ws, t * c);
            }
        }
        return r;
    }

    // T_w * this, via a reduced word of w applied right-to-left.
    HeckeElement left_mul_basis(const Permutation& w) const {
        HeckeElement r = *this;
        auto word = w.reduced_word();
        for (auto it = word.rbegin(); it != word.rend(); ++it) r = r.left_gen(*it);
        return r;
    }

    // this * T_w.
    HeckeElement right_mul_basis(const Permutation& w) const {
        HeckeElement r = *this;
        for (int i : w.reduced_word()) r = r.right_gen(i);
        return r;
    }

    HeckeElement operator*(const HeckeElement& o) const {
        require_same_grade(o);
        HeckeElement r(grade_);
        for (const auto& [w, c] : coef_) {
            HeckeElement part = o.left_mul_basis(w) * c;
            r += part;
        }
        return r;
    }

    bool commutes_with_generators() const {
        for (int i = 1; i < grade_; ++i) {
            HeckeElement gi = generator(i, grade_);
            if (!(gi * *this == *this * gi)) return false;
        }
        return true;
    }

    bool operator==(const HeckeElement& o) const {
        return grade_ == o.grade_ && coef_ == o.coef_;
    }
    bool operator!=(const HeckeElement& o) const { return !(*this == o); }

    // Text form: coefficient-tagged standard basis, keys in lexicographic
    // one-line order, e.g. "(1) T[12] + (t^-1 + 1) T[21]".
    std::string str() const {
        if (coef_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [w, c] : coef_) {
            if (!first) s += " + ";
            first = false;
            s += "(" + c.str() + ") T[" + w.str() + "]";
        }
        return s;
    }

  private:
    void require_same_grade(const HeckeElement& o) const {
        if (grade_ != o.grade_)
            throw grade_mismatch("H_" + std::to_string(grade_) + " vs H_" +
                                 std::to_string(o.grade_));
    }

    void add_term(const Permutation& w, const Fraction& c) {
        auto it = coef_.find(w);
        if (it == coef_.end()) {
            if (!c.is_zero()) coef_[w] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) coef_.erase(it);
        }
    }

    int grade_;
    std::map<Permutation, Fraction> coef_;
};

// a (x) b embedded in H_{k+l}: T_u (x) T_v -> T_{u x v} with v shifted by k.
inline HeckeElement tensor_embed(const HeckeElement& a, const HeckeElement& b) {
    int k = a.grade(), l = b.grade();
    HeckeElement r(k + l);
    for (const auto& [u, cu] : a.coeffs())
        for (const auto& [v, cv] : b.coeffs()) {
            std::vector<int> img(k + l);
            for (int i = 1; i <= k; ++i) img[i - 1] = u(i);
            for (int j = 1; j <= l; ++j) img[k + j - 1] = k + v(j);
            r.set_coeff(Permutation(std::move(img)), cu * cv);
        }
    return r;
}

// Embed an element of H_m into H_n acting on strands offset+1 .. offset+m.
inline HeckeElement embed_at(const HeckeElement& a, int n, int offset) {
    if (offset < 0 || offset + a.grade() > n) throw index_out_of_range("embed_at");
    HeckeElement r(n);
    for (const auto& [u, c] : a.coeffs()) {
        std::vector<int> img(n);
        for (int i = 1; i <= n; ++i) img[i - 1] = i;
        for (int i = 1; i <= a.grade(); ++i) img[offset + i - 1] = offset + u(i);
        r.set_coeff(Permutation(std::move(img)), c);
    }
    return r;
}

// Central element: checked to commute with every generator on construction,
// and to carry the coefficient symmetry c_v = c_{v^{-1}}.
class CenterElement {
  public:
    explicit CenterElement(HeckeElement e) : elem_(std::move(e)) {
        if (!elem_.commutes_with_generators())
            throw not_central("element does not commute with the generators");
        for (const auto& [w, c] : elem_.coeffs())
            if (c != elem_.coeff(w.inverse()))
                throw not_central("coefficient asymmetry at " + w.str());
    }

    const HeckeElement& elem() const { return elem_; }
    int grade() const { return elem_.grade(); }
    Fraction coeff(const Permutation& w) const { return elem_.coeff(w); }
    std::string str() const { return elem_.str(); }

    bool operator==(const CenterElement& o) const { return elem_ == o.elem_; }

  private:
    HeckeElement elem_;
};

enum class SymmetrizerKind { Complete, Anti };

// S_n = sum_w T_w  or  A_n = sum_w (-t)^{-|w|} T_w.
inline CenterElement symmetrizer(int n, SymmetrizerKind kind) {
    HeckeElement e(n);
    for (const auto& w : all_permutations(n)) {
        if (kind == SymmetrizerKind::Complete) {
            e.set_coeff(w, Fraction::one());
        } else {
            int l = w.length();
            Rat sign = l % 2 == 0 ? 1 : -1;
            e.set_coeff(w, Fraction(LaurentPoly::term(Monomial::var(kVarT, -l), sign)));
        }
    }
    return CenterElement(std::move(e));
}

// Shuffle product on the tower of centers:
//   a * b = sum over minimal coset representatives w of S_{k+l}/(S_k x S_l)
//           of t^{-|w|} T_w (a (x) b) T_{w^{-1}}.
// The result is checked central (a failed check signals an implementation
// bug, not bad input).
inline CenterElement center_shuffle(const CenterElement& a, const CenterElement& b) {
    int k = a.grade(), l = b.grade();
    if (k == 0) return CenterElement(b.elem() * a.coeff(Permutation::identity(0)));
    if (l == 0) return CenterElement(a.elem() * b.coeff(Permutation::identity(0)));
    HeckeElement ab = tensor_embed(a.elem(), b.elem());
    HeckeElement sum(k + l);
    for (const auto& w : coset_min_reps({k, l})) {
        HeckeElement term = ab.left_mul_basis(w).right_mul_basis(w.inverse());
        sum += term * Fraction(LaurentPoly::term(Monomial::var(kVarT, -w.length()), Rat(1)));
    }
    try {
        return CenterElement(std::move(sum));
    } catch (const not_central& e) {
        throw centrality_violation(e.what());
    }
}

inline CenterElement center_unit(int n) {
    return CenterElement(HeckeElement::unit(n));
}

// Jucys--Murphy element J_{j,n} = sum_{i<j} t^{i-j+1} T_i ... T_{j-1} ... T_i.
// The word i, i+1, ..., j-1, j-2, ..., i is reduced for the transposition
// (i j), so each summand is the basis element of that transposition.
inline HeckeElement jucys_murphy(int j, int n) {
    if (j < 2 || j > n) throw index_out_of_range("jucys_murphy j = " + std::to_string(j));
    HeckeElement r(n);
    for (int i = 1; i <= j - 1; ++i) {
        std::vector<int> img(n);
        for (int a = 1; a <= n; ++a) img[a - 1] = a;
        std::swap(img[i - 1], img[j - 1]);
        r += HeckeElement::basis(Permutation(std::move(img))) *
             Fraction(LaurentPoly::term(Monomial::var(kVarT, i - j + 1), Rat(1)));
    }
    return r;
}

// [n]_{t^{-1}} = 1 + t^{-1} + ... + t^{-(n-1)}.
inline LaurentPoly t_integer_inv(int n) {
    LaurentPoly s = LaurentPoly::zero();
    for (int i = 0; i < n; ++i) s += Lv(kVarT, -i);
    return s;
}

inline LaurentPoly t_integer(int n) {
    LaurentPoly s = LaurentPoly::zero();
    for (int i = 0; i < n; ++i) s += Lv(kVarT, i);
    return s;
}

inline LaurentPoly t_factorial(int n, bool inverse_powers) {
    LaurentPoly f = LaurentPoly::one();
    for (int i = 1; i <= n; ++i) f *= inverse_powers ? t_integer_inv(i) : t_integer(i);
    return f;
}

// Central image of the power sum p_r: [r]_{t^{-1}} * prod_{j=2}^r J_{j,r}.
inline CenterElement power_sum_central(int r) {
    if (r < 1) throw index_out_of_range("power_sum_central r = " + std::to_string(r));
    HeckeElement prod = HeckeElement::unit(r);
    for (int j = 2; j <= r; ++j) prod = prod * jucys_murphy(j, r);
    return CenterElement(prod * Fraction(t_integer_inv(r)));
}

// Central image of p_lambda under the shuffle product of the tower.
inline CenterElement power_sum_central(const Partition& lam) {
    if (lam.length() == 0) return center_unit(0);
    CenterElement acc = power_sum_central(lam.parts[0]);
    for (int i = 1; i < lam.length(); ++i)
        acc = center_shuffle(acc, power_sum_central(lam.parts[i]));
    return acc;
}

// A_{lam_1} * A_{lam_2} * ... under the shuffle product of the tower.
inline CenterElement antisymmetrizer_product(const Partition& lam) {
    if (lam.length() == 0) return center_unit(0);
    CenterElement acc = symmetrizer(lam.parts[0], SymmetrizerKind::Anti);
    for (int i = 1; i < lam.length(); ++i)
        acc = center_shuffle(acc, symmetrizer(lam.parts[i], SymmetrizerKind::Anti));
    return acc;
}

// Inverse of the power-sum embedding: expand a central element of grade n in
// the basis {p_lambda-images} and return sum a_lambda p_lambda. Exact linear
// solve over the coefficient field; the default grade bound keeps the
// |S_n| x p(n) system small.
inline SymFunc frobenius_map(const CenterElement& c, int max_grade = 5) {
    int n = c.grade();
    if (n > max_grade) throw grade_too_large("frobenius grade " + std::to_string(n));
    if (n == 0) return SymFunc::one() * c.coeff(Permutation::identity(0));
    auto lams = partitions_of(n);
    std::vector<CenterElement> basis;
    basis.reserve(lams.size());
    for (const auto& lam : lams) basis.push_back(power_sum_central(lam));
    auto perms = all_permutations(n);
    FracMatrix A(perms.size(), FracVector(lams.size()));
    FracVector b(perms.size());
    for (size_t r = 0; r < perms.size(); ++r) {
        for (size_t k = 0; k < lams.size(); ++k) A[r][k] = basis[k].coeff(perms[r]);
        b[r] = c.coeff(perms[r]);
    }
    FracVector x = solve_linear(std::move(A), std::move(b));
    SymFunc out;
    for (size_t k = 0; k < lams.size(); ++k)
        out += SymFunc::power_sum(lams[k]) * x[k];
    return out;
}

// R-matrix (1-t) + (1-u) T_i embedded in grade n; the spectral parameter u
// may be any Laurent polynomial (a monomial like x_i/y_j, or a formal
// variable).
inline HeckeElement r_matrix(int i, const LaurentPoly& u, int n) {
    if (i < 1 || i >= n) throw index_out_of_range("r_matrix index " + std::to_string(i));
    HeckeElement r = HeckeElement::unit(n) * Fraction(LaurentPoly::one() - Lv(kVarT));
    r += HeckeElement::generator(i, n) * Fraction(LaurentPoly::one() - u);
    return r;
}

// Formal transfer lattice: the product over the n x n grid of R-matrices with
// parameters x_i / y_j, an element of H_{2n}. Column blocks are applied right
// to left; inside a column the row index runs bottom to top, the R-matrix at
// cell (i, j) acting on strands (i+j-1, i+j).
inline HeckeElement formal_lattice_element(int n) {
    HeckeElement z = HeckeElement::unit(2 * n);
    for (int j = n; j >= 1; --j)
        for (int i = 1; i <= n; ++i) {
            LaurentPoly u = Lx(i) * Ly(j, -1);
            z = r_matrix(i + j - 1, u, 2 * n) * z;
        }
    return z;
}

}  // namespace qcomb
