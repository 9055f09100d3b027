// Acceptance suite: runs every acceptance criterion at its stated bound and
// prints one PASS/FAIL line per criterion. Exit status is the number of
// failed criteria.

#include <cstdio>
#include <string>
#include <vector>

#include "qcomb/checks.hpp"

using namespace qcomb;
using namespace qcomb::checks;

namespace {

struct Criterion {
    std::string id;
    std::string description;
    std::vector<CheckResult> results;
    double budget_seconds = 0.0;  // 0 = no stated budget
};

}  // namespace

int main() {
    CheckOptions base;
    base.max_n = 3;
    base.seed = 20250809;
    base.workers = default_workers();

    std::vector<Criterion> criteria;
    auto add = [&](const std::string& id, const std::string& desc,
                   std::vector<CheckResult> rs, double budget = 0.0) {
        criteria.push_back({id, desc, std::move(rs), budget});
    };

    CheckOptions o3 = base;           // bounds n <= 3
    CheckOptions o4 = base;
    o4.max_n = 4;                      // bounds n <= 4 (or 5 via certificate)

    add("01", "K_2 equals the explicit degree-two K-polynomial", {check_k2(o3)}, 1.0);
    add("02", "K_3 at x = 1 reproduces the 22-entry coefficient table",
        {check_k3_table(o3)}, 60.0);
    add("03", "deg C_12 = 1862632561783036151478238040096092649",
        {check_degree_twelve(o3)}, 60.0);
    add("04", "frontier DP equals brute-force enumeration for n = 1..6",
        {check_degree_brute_force(o3)});
    add("05", "commuting square on the full antisymmetrizer basis, n <= 3",
        {check_commuting_square(o3)});
    add("06", "identity partition function carries kappa_n (n <= 3 exact, n = 4 evaluated)",
        {check_identity_is_kappa(o4)});
    add("07", "identity recurrence divisible by e_1 with the enumerated quotient, n <= 4",
        {check_identity_recurrence(o4)});
    add("08", "Yang-Baxter and unitarity hold symbolically",
        {check_yang_baxter(o3)});
    add("09", "closed forms: factorized f(A_n) n <= 4; point-split n <= 3 "
              "(q^{-n(n-1)/2} normalization); reversal n <= 3; "
              "geometric epsilon values n <= 3",
        {check_factorized_antisymmetrizer(o3), check_point_split_specialization(o3),
         check_reversal_closed_form(o3), check_epsilon_specializations(o3)});
    add("10", "wheel conditions and degree bounds for 1_n, A_lambda, S_n, n <= 4",
        {check_wheel_and_degree_bounds(o3), check_zero_specialization(o3)});
    add("11", "Wronski relations and the three kappa characterizations, n <= 4",
        {check_wronski(o4), check_kappa_characterizations(o4)});
    add("12", "multidegree: both methods n <= 4; GRR limit n <= 3; homogeneity n <= 5",
        {check_mdeg_methods(o4), check_grr(o4), check_mdeg_homogeneity(o4),
         check_bidegree(o4)});
    add("13", "S_3 symmetry of kappa_n (n <= 4) and both K_n symmetries (n <= 3)",
        {check_symmetries(o3)});
    add("14", "exchange recursion from the reversal closed form matches enumeration, n <= 3",
        {check_exchange(o3)});

    int failed = 0;
    for (const auto& c : criteria) {
        bool pass = true;
        double total = 0.0;
        std::string detail;
        for (const auto& r : c.results) {
            total += r.seconds;
            if (!r.pass) {
                pass = false;
                if (!detail.empty()) detail += "; ";
                detail += r.name + ": " + r.detail;
            }
        }
        if (pass && c.budget_seconds > 0 && total > c.budget_seconds) {
            pass = false;
            detail = "runtime budget exceeded";
        }
        std::printf("%s criterion-%s (%.2fs): %s%s%s\n", pass ? "PASS" : "FAIL",
                    c.id.c_str(), total, c.description.c_str(), detail.empty() ? "" : " -- ",
                    detail.c_str());
        std::fflush(stdout);
        if (!pass) ++failed;
    }
    std::printf("%d/%zu criteria passed\n", int(criteria.size()) - failed, criteria.size());
    return failed;
}
