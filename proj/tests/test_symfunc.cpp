#include <gtest/gtest.h>

#include "qcomb/io.hpp"
#include "qcomb/symfunc.hpp"

using namespace qcomb;

namespace {

Fraction F(const std::string& s) { return Fraction(parse_poly(s)); }
SymFunc p(std::initializer_list<int> parts) { return SymFunc::power_sum(Partition(parts)); }

const Monomial kT = Monomial::var(kVarT);
const Monomial kQ = Monomial::var(kVarQ);
const Monomial kQinv = Monomial::var(kVarQ, -1);
const Monomial kQTinv = Monomial::var(kVarQ) * Monomial::var(kVarT, -1);

}  // namespace

TEST(SymFunc, PowerSumProducts) {
    EXPECT_EQ(p({1}) * p({1}), p({1, 1}));
    EXPECT_EQ(p({2}) * p({1}), p({2, 1}));
    EXPECT_EQ((p({1}) + p({2})) * p({1}), p({1, 1}) + p({2, 1}));
}

TEST(SymFunc, ElementaryAndComplete) {
    EXPECT_EQ(elementary(2), p({1, 1}) * F("1/2") - p({2}) * F("1/2"));
    EXPECT_EQ(complete(2), p({1, 1}) * F("1/2") + p({2}) * F("1/2"));
    EXPECT_EQ(elementary(1), p({1}));
    EXPECT_EQ(complete(1), p({1}));
    EXPECT_EQ(elementary(0), SymFunc::one());
    // classical: e3 = (p1^3 - 3 p2 p1 + 2 p3)/6
    EXPECT_EQ(elementary(3),
              p({1, 1, 1}) * F("1/6") - p({2, 1}) * F("1/2") + p({3}) * F("1/3"));
}

TEST(SymFunc, SigmaTransformBasics) {
    // sigma_t(p2) = ((1-t)/(1+t)) p2
    SymFunc s = sigma_transform(kT, p({2}));
    EXPECT_EQ(s, p({2}) * Fraction(parse_poly("1 - t"), parse_poly("1 + t")));
    // omega involution keeps odd power sums
    EXPECT_EQ(omega_involution(p({3})), p({3}));
    EXPECT_EQ(omega_involution(p({2})), p({2}) * F("-1"));
    EXPECT_THROW(sigma_transform(Monomial(), p({1})), degenerate_plethysm_parameter);
}

TEST(SymFunc, SigmaInverseRoundTrip) {
    for (const Monomial& u : {kT, kQ, kQTinv}) {
        for (int n = 1; n <= 6; ++n)
            for (const auto& lam : partitions_of(n)) {
                SymFunc f = SymFunc::power_sum(lam);
                EXPECT_EQ(sigma_transform(u, sigma_transform(u, f), true), f);
            }
    }
}

TEST(SymFunc, SigmaReciprocalViaOmega) {
    // sigma_{u^-1} = omega . sigma_u on p_lambda, lambda |- n <= 6
    for (const Monomial& u : {kT, kQ}) {
        Monomial uinv = u.inverse();
        for (int n = 1; n <= 6; ++n)
            for (const auto& lam : partitions_of(n)) {
                SymFunc f = SymFunc::power_sum(lam);
                EXPECT_EQ(sigma_transform(uinv, f), omega_involution(sigma_transform(u, f)));
            }
    }
}

TEST(SymFunc, OmegaExchangesElementaryComplete) {
    for (int n = 0; n <= 6; ++n) {
        EXPECT_EQ(omega_involution(elementary(n)), complete(n));
        EXPECT_EQ(omega_involution(complete(n)), elementary(n));
    }
}

TEST(SymFunc, GeneratingFunctionForElementary) {
    // E(z) = exp(-sum_j ((-1)^j / j) p_j z^j): the degree-n slice is e_n.
    // Work in the graded algebra, truncating above degree 6.
    const int N = 6;
    std::vector<SymFunc> arg(N + 1);  // coefficient of z^j
    for (int j = 1; j <= N; ++j)
        arg[j] = p({j}) * Fraction(Rat(j % 2 == 0 ? -1 : 1, j));
    std::vector<SymFunc> total(N + 1);
    total[0] = SymFunc::one();
    std::vector<SymFunc> power(N + 1);  // arg^m / m!, accumulated
    power[0] = SymFunc::one();
    Rat factorial(1);
    for (int m = 1; m <= N; ++m) {
        std::vector<SymFunc> next(N + 1);
        for (int d = 0; d <= N; ++d)
            for (int j = 1; j + d <= N; ++j) next[d + j] += power[d] * arg[j];
        power = next;
        factorial *= m;
        for (int d = 0; d <= N; ++d) total[d] += power[d] * Fraction(Rat(1) / factorial);
    }
    for (int n = 1; n <= N; ++n) EXPECT_EQ(total[n], elementary(n));
}

TEST(SymFunc, ElementaryImages) {
    for (int k = 1; k <= 3; ++k) {
        EXPECT_EQ(elementary_image(1, k), p({1}));
        EXPECT_EQ(elementary_image(0, k), SymFunc::one());
    }
    // the composed factor on p2 inside e2^(3):
    // sigma_{q^-1} sigma_t^{-1}(p_r) = (-1)^{r-1} ((1-q)^r (1-t^r))/((1-q^r)(1-t)^r) p_r
    SymFunc img = sigma_transform(kQinv, sigma_transform(kT, p({2}), true));
    LaurentPoly one = LaurentPoly::one();
    Fraction expect((one - Lv(kVarQ)).pow(2) * (one - Lv(kVarT, 2)) * Rat(-1),
                    (one - Lv(kVarQ, 2)) * (one - Lv(kVarT)).pow(2));
    EXPECT_EQ(img, p({2}) * expect);
    SymFunc e2 = elementary(2);
    SymFunc e23 = elementary_image(2, 3);
    EXPECT_EQ(e23, p({1, 1}) * F("1/2") - p({2}) * (expect * F("1/2")));
}
