#pragma once

#include <string>
#include <utility>

#include "qcomb/laurent.hpp"

namespace qcomb {

// Quotient of Laurent polynomials. No reduced form is maintained (no
// multivariate gcd anywhere); equality is cross-multiplication. The light
// normalization keeps the denominator monic with exponent floor zero, which
// is enough to make equal fractions often compare fast and to fold monomial
// denominators into the numerator.
class Fraction {
  public:
    Fraction() : num_(LaurentPoly::zero()), den_(LaurentPoly::one()) {}
    Fraction(const Rat& c) : num_(LaurentPoly::constant(c)), den_(LaurentPoly::one()) {}
    Fraction(int c) : Fraction(Rat(c)) {}
    Fraction(LaurentPoly p) : num_(std::move(p)), den_(LaurentPoly::one()) {}
    Fraction(LaurentPoly n, LaurentPoly d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_.is_zero()) throw qcomb_error("fraction with zero denominator");
        normalize();
    }

    static Fraction zero() { return Fraction(); }
    static Fraction one() { return Fraction(Rat(1)); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_poly() const { return den_.is_one(); }

    const LaurentPoly& as_poly() const {
        if (!is_poly())
            throw qcomb_error("fraction is not a Laurent polynomial: den = " + den_.str());
        return num_;
    }

    // Force-clear the denominator by exact division (used where an identity
    // guarantees polynomiality).
    LaurentPoly to_poly_exact() const {
        if (is_poly()) return num_;
        return num_.div_exact(den_);
    }

    Fraction operator-() const {
        Fraction r = *this;
        r.num_ = -r.num_;
        return r;
    }

    Fraction operator+(const Fraction& o) const {
        if (den_ == o.den_) return Fraction(num_ + o.num_, den_);
        return Fraction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    Fraction operator-(const Fraction& o) const {
        if (den_ == o.den_) return Fraction(num_ - o.num_, den_);
        return Fraction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    Fraction operator*(const Fraction& o) const {
        return Fraction(num_ * o.num_, den_ * o.den_);
    }
    Fraction operator/(const Fraction& o) const {
        if (o.num_.is_zero()) throw qcomb_error("division by zero fraction");
        return Fraction(num_ * o.den_, den_ * o.num_);
    }

    Fraction& operator+=(const Fraction& o) { return *this = *this + o; }
    Fraction& operator-=(const Fraction& o) { return *this = *this - o; }
    Fraction& operator*=(const Fraction& o) { return *this = *this * o; }
    Fraction& operator/=(const Fraction& o) { return *this = *this / o; }

    Fraction inverse() const {
        if (num_.is_zero()) throw qcomb_error("inverse of zero fraction");
        return Fraction(den_, num_);
    }

    bool operator==(const Fraction& o) const {
        if (num_ == o.num_ && den_ == o.den_) return true;
        return num_ * o.den_ == o.num_ * den_;
    }
    bool operator!=(const Fraction& o) const { return !(*this == o); }

    Fraction substitute(const Assignment& a) const {
        LaurentPoly d = den_.substitute(a);
        if (d.is_zero()) throw qcomb_error("substitution sent denominator to zero");
        return Fraction(num_.substitute(a), d);
    }

    std::string str() const {
        if (is_poly()) return num_.str();
        return "(" + num_.str() + ") / (" + den_.str() + ")";
    }

  private:
    void normalize() {
        if (num_.is_zero()) {
            den_ = LaurentPoly::one();
            return;
        }
        // shift both by the denominator's exponent floor, the same monomial
        // on both sides keeps the value
        Monomial g = den_.exponent_floor();
        if (!g.is_one()) {
            Monomial gi = g.inverse();
            num_ = num_.scaled(gi, Rat(1));
            den_ = den_.scaled(gi, Rat(1));
        }
        Rat lc = den_.leading().coef;
        if (lc != 1) {
            Rat inv = Rat(1) / lc;
            num_ = num_ * inv;
            den_ = den_ * inv;
        }
        if (den_.is_monomial()) {
            // den is now a pure monomial power product; fold it into num
            num_ = num_.scaled(den_.leading().mono.inverse(), Rat(1));
            den_ = LaurentPoly::one();
        } else if (num_ == den_) {
            num_ = LaurentPoly::one();
            den_ = LaurentPoly::one();
        }
    }

    LaurentPoly num_, den_;
};

// Exact partial evaluation packaged as a fraction. Substitution targets are
// scalars times monomials, so the denominator is always trivial; the
// fraction return type keeps the contract uniform with the other
// field-valued operations.
inline Fraction poly_substitute(const LaurentPoly& p, const Assignment& a) {
    return Fraction(p.substitute(a));
}

}  // namespace qcomb
