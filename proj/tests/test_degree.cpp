#include <gtest/gtest.h>

#include <set>
#include <tuple>
#include <vector>

#include "qcomb/degree.hpp"
#include "qcomb/lattice.hpp"

using namespace qcomb;

namespace {

// Definitional oracle, independent of both the frontier DP and the lattice
// enumerator: place each path separately as a monotone staircase from the
// left edge of row p to the top edge of column p, filter edge-disjoint
// families, and add 2^{#vertices where some path turns} / 2^n.
struct OraclePath {
    std::set<std::tuple<char, int, int>> edges;  // ('H',i,j): left edge of cell; ('V',i,j): top edge
    std::set<std::pair<int, int>> bend_vertices;
};

void gen_paths(int n, int i, int j, bool from_left, int exit_col, OraclePath cur,
               std::vector<OraclePath>& out) {
    // exit top
    {
        OraclePath next = cur;
        next.edges.insert({'V', i, j});
        if (from_left) next.bend_vertices.insert({i, j});
        if (i == 1) {
            if (j == exit_col) out.push_back(next);
        } else {
            gen_paths(n, i - 1, j, false, exit_col, next, out);
        }
    }
    // exit right
    if (j < n && j < exit_col) {
        OraclePath next = cur;
        next.edges.insert({'H', i, j + 1});
        if (!from_left) next.bend_vertices.insert({i, j});
        gen_paths(n, i, j + 1, true, exit_col, next, out);
    }
}

Int degree_oracle_paths(int n) {
    std::vector<std::vector<OraclePath>> choices(n + 1);
    for (int p = 1; p <= n; ++p) {
        OraclePath start;
        start.edges.insert({'H', p, 1});
        gen_paths(n, p, 1, true, p, start, choices[p]);
    }
    Int total = 0;
    std::vector<size_t> pick(n + 1, 0);
    while (true) {
        // test the current family for edge-disjointness
        std::set<std::tuple<char, int, int>> all;
        std::set<std::pair<int, int>> bends;
        bool ok = true;
        size_t edge_count = 0;
        for (int p = 1; p <= n && ok; ++p) {
            const OraclePath& path = choices[p][pick[p]];
            for (const auto& e : path.edges) all.insert(e);
            edge_count += path.edges.size();
            if (all.size() != edge_count) ok = false;
            for (const auto& b : path.bend_vertices) bends.insert(b);
        }
        if (ok) total += Int(1) << bends.size();
        // advance the odometer
        int p = 1;
        while (p <= n && ++pick[p] == choices[p].size()) pick[p++] = 0;
        if (p > n) break;
    }
    Int power = Int(1) << n;
    EXPECT_EQ(total % power, 0);
    return total / power;
}

// Second oracle, through the configuration enumerator (still no DP): sum of
// 2^{bends - n} over identity-connectivity configurations.
Int degree_oracle_enumeration(int n) {
    Int total = 0;
    for_each_config(n, Permutation::identity(n),
                    [&](const PathConfig& c) { total += Int(1) << c.bend_count(); });
    Int power = Int(1) << n;
    EXPECT_EQ(total % power, 0);
    return total / power;
}

}  // namespace

TEST(Degree, OraclesAgreeWithEachOther) {
    for (int n = 1; n <= 5; ++n)
        EXPECT_EQ(degree_oracle_paths(n), degree_oracle_enumeration(n)) << "n = " << n;
}

TEST(Degree, SmallValuesPinned) {
    // frozen from the definitional oracle
    EXPECT_EQ(degree_oracle_paths(1), 1);
    EXPECT_EQ(degree_oracle_paths(2), 3);
    EXPECT_EQ(degree_oracle_paths(3), 31);
    EXPECT_EQ(degree_oracle_paths(4), 1145);
}

TEST(Degree, DpMatchesBruteForce) {
    for (int n = 1; n <= 6; ++n)
        EXPECT_EQ(lattice_degree_dp(n), degree_oracle_enumeration(n)) << "n = " << n;
}

TEST(Degree, DpPinnedValueAtTwelve) {
    EXPECT_EQ(lattice_degree_dp(12),
              Int("1862632561783036151478238040096092649"));
}

TEST(Degree, BudgetCap) {
    DegreeDpOptions opts;
    opts.max_states = 4;
    EXPECT_THROW(lattice_degree_dp(6, opts), resource_budget_exceeded);
}
