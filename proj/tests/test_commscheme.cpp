#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "qcomb/commscheme.hpp"
#include "qcomb/io.hpp"

using namespace qcomb;

namespace {

LaurentPoly P(const std::string& s) { return parse_poly(s); }

// The explicit degree-two K-polynomial.
LaurentPoly paper_k2() {
    return P("1 + q1^2 q2 - q1 q2 x1 x2^-1 - q1 q2 - q1 q2 x1^-1 x2 + q1 q2^2");
}

// The 22 coefficients of K_3 at x_i = 1, indexed (q2 exponent, q1 exponent).
const std::vector<std::tuple<int, int, int>> kK3Table = {
    {0, 0, 1},  {1, 1, -8},  {1, 2, 1},   {1, 3, 1},  {2, 1, 1},  {2, 2, 29},
    {2, 3, -16}, {2, 4, 1},  {3, 1, 1},   {3, 2, -16}, {3, 3, -27}, {3, 4, 29},
    {3, 5, -8}, {3, 6, 1},  {4, 2, 1},   {4, 3, 29},  {4, 4, -16}, {4, 5, 1},
    {5, 3, -8}, {5, 4, 1},  {5, 5, 1},   {6, 3, 1},
};

LaurentPoly k3_at_unit_x() {
    Assignment sub;
    for (int i = 1; i <= 3; ++i) sub[var_x(i)] = ScaledMonomial::value(Rat(1));
    return kpoly(3).substitute(sub);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST(CommScheme, KPolyBaseAndDegreeTwo) {
    EXPECT_EQ(kpoly(0), LaurentPoly::one());
    EXPECT_EQ(kpoly(1), LaurentPoly::one());
    EXPECT_EQ(kpoly(2), paper_k2());
    EXPECT_THROW(kpoly(7, 4), grade_too_large);
}

TEST(CommScheme, KThreeCoefficientTable) {
    LaurentPoly k3 = k3_at_unit_x();
    size_t total_terms = 0;
    for (const auto& [e2, e1, c] : kK3Table) {
        Monomial m = Monomial::var(kVarQ1, e1) * Monomial::var(kVarQ2, e2);
        EXPECT_EQ(k3.coef(m), Rat(c)) << "q1^" << e1 << " q2^" << e2;
        ++total_terms;
    }
    EXPECT_EQ(k3.size(), total_terms);  // no terms beyond the table
}

TEST(CommScheme, KPolyStructuralInvariants) {
    for (int n = 2; n <= 3; ++n) {
        const LaurentPoly& k = kpoly(n);
        // integer coefficients
        for (const auto& t : k.terms()) EXPECT_EQ(denominator(t.coef), 1);
        // symmetric in the x variables
        EXPECT_TRUE(is_symmetric_in_x(k, n));
        // symmetric under q1 <-> q2 and the inversion symmetry
        SymmetryReport rep = symmetry_check(n);
        EXPECT_TRUE(rep.swap_q1_q2);
        EXPECT_TRUE(rep.inversion);
    }
}

TEST(CommScheme, KPolyMatchesPartitionFunction) {
    // (q1 q2)^{n(n-1)/2} f(1_n) under the identification, n <= 3
    for (int n = 1; n <= 3; ++n)
        EXPECT_EQ(kpoly_from_partition_fn(n), kpoly(n)) << "n = " << n;
}

TEST(CommScheme, TwoRecurrencesAgree) {
    // the q,t recurrence for f(1_n) equals the enumerated partition function
    // and, converted, the q1,q2 recurrence
    for (int n = 1; n <= 3; ++n) {
        LaurentPoly f = identity_partition_fn_recurrence(n);
        EXPECT_EQ(f, partition_fn_center(center_unit(n))) << "n = " << n;
        LaurentPoly converted = var_convert(f, ConvertDirection::QtToQ12);
        int e = n * (n - 1) / 2;
        EXPECT_EQ(converted.scaled(Monomial::var(kVarQ1, e) * Monomial::var(kVarQ2, e), Rat(1)),
                  kpoly(n))
            << "n = " << n;
    }
}

TEST(CommScheme, KappaCarriesKPolynomial) {
    // kappa_n = t^{n(n-1)/2} K_n / V_n under the identification, n <= 3
    for (int n = 1; n <= 3; ++n) {
        LaurentPoly expected = var_convert(kpoly(n), ConvertDirection::Q12ToQt)
                                   .scaled(Monomial::var(kVarT, n * (n - 1) / 2), Rat(1));
        EXPECT_EQ(to_laurent_form(kappa_elem(n)), expected) << "n = " << n;
    }
}

TEST(CommScheme, VarConvertRoundTrip) {
    std::mt19937_64 rng(5150);
    std::uniform_int_distribution<int> expd(-3, 3), coefd(-9, 9);
    for (int it = 0; it < 20; ++it) {
        std::map<Monomial, Rat> acc;
        for (int k = 0; k < 6; ++k) {
            Monomial m = Monomial::var(kVarQ, expd(rng)) * Monomial::var(kVarT, expd(rng)) *
                         Monomial::var(var_x(1), expd(rng));
            acc[m] += coefd(rng);
        }
        LaurentPoly p = LaurentPoly::from_map(acc);
        EXPECT_EQ(var_convert(var_convert(p, ConvertDirection::QtToQ12),
                              ConvertDirection::Q12ToQt),
                  p);
    }
    EXPECT_THROW(var_convert(Lv(kVarQ1), ConvertDirection::QtToQ12), mixed_alphabets);
    EXPECT_THROW(var_convert(Lv(kVarT), ConvertDirection::Q12ToQt), mixed_alphabets);
}

TEST(CommScheme, GrrLimitBasics) {
    // the lowest part of 1 - (1-q1)(1-q2) is q1 + q2
    EXPECT_EQ(grr_lowest_part(LaurentPoly::one() - Lv(kVarQ1) * Lv(kVarQ2), 4),
              Lv(kVarQ1) + Lv(kVarQ2));
    // grr(1) has degree 0 (the n = 1 case)
    EXPECT_EQ(grr_limit(LaurentPoly::one(), 1), LaurentPoly::one());
    // wrong target degree is reported
    EXPECT_THROW(grr_limit(LaurentPoly::one(), 2), degree_mismatch);
}

TEST(CommScheme, MultidegreeByBothMethods) {
    EXPECT_EQ(mdeg(1, MdegMethod::Lattice), LaurentPoly::one());
    for (int n = 1; n <= 3; ++n)
        EXPECT_EQ(mdeg(n, MdegMethod::Lattice), mdeg(n, MdegMethod::Symmetrize))
            << "n = " << n;
}

TEST(CommScheme, GrrOfKPolyIsMultidegree) {
    for (int n = 1; n <= 3; ++n)
        EXPECT_EQ(grr_limit(kpoly(n), n), mdeg(n, MdegMethod::Lattice)) << "n = " << n;
}

TEST(CommScheme, MultidegreeHomogeneity) {
    for (int n = 1; n <= 4; ++n) {
        LaurentPoly d = mdeg(n, MdegMethod::Lattice);
        for (const auto& t : d.terms())
            EXPECT_EQ(t.mono.total_degree(), n * (n - 1)) << "n = " << n;
    }
}

TEST(CommScheme, BidegreeConstantTerm) {
    for (int n = 1; n <= 3; ++n) {
        Assignment xzero;
        for (int i = 1; i <= n; ++i) xzero[var_x(i)] = ScaledMonomial::value(Rat(0));
        LaurentPoly bid = mdeg(n, MdegMethod::Lattice).substitute(xzero);
        EXPECT_EQ(bidegree_constant_term(n), bid) << "n = " << n;
    }
}

TEST(CommScheme, DegreeMatchesMultidegreeSpecialization) {
    for (int n = 1; n <= 4; ++n) {
        Assignment sub{{kVarQ1, ScaledMonomial::value(Rat(1))},
                       {kVarQ2, ScaledMonomial::value(Rat(1))}};
        for (int i = 1; i <= n; ++i) sub[var_x(i)] = ScaledMonomial::value(Rat(0));
        LaurentPoly spec = mdeg(n, MdegMethod::Lattice).substitute(sub);
        ASSERT_TRUE(spec.is_constant());
        Rat val = spec.is_zero() ? Rat(0) : spec.leading().coef;
        EXPECT_EQ(Rat(commuting_scheme_degree(n)), val) << "n = " << n;
    }
}

TEST(CommScheme, GoldenFiles) {
    std::string dir = QCOMB_GOLDEN_DIR;
    // K2: full polynomial, canonical JSON
    auto k2_json = nlohmann::json::parse(slurp(dir + "/K2.json"));
    EXPECT_EQ(poly_from_json(k2_json), kpoly(2));
    EXPECT_EQ(poly_to_json(kpoly(2)).dump(2) + "\n", slurp(dir + "/K2.json"));

    auto k3_json = nlohmann::json::parse(slurp(dir + "/K3_x1.json"));
    EXPECT_EQ(poly_from_json(k3_json), k3_at_unit_x());
    EXPECT_EQ(poly_to_json(k3_at_unit_x()).dump(2) + "\n", slurp(dir + "/K3_x1.json"));

    // degree table n -> deg C_n
    std::istringstream deg(slurp(dir + "/degC.txt"));
    int n;
    std::string value;
    int rows = 0;
    while (deg >> n >> value) {
        EXPECT_EQ(commuting_scheme_degree(n), Int(value)) << "n = " << n;
        ++rows;
    }
    EXPECT_EQ(rows, 12);
}
