// Command-line front end: compute commuting-scheme invariants, partition
// functions and shuffle-algebra elements, dump lattice configurations, and
// run the verification suites.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qcomb/checks.hpp"
#include "qcomb/commscheme.hpp"
#include "qcomb/io.hpp"

using namespace qcomb;

namespace {

struct OutputOptions {
    std::string format = "text";
    std::string output;
};

void emit(const std::string& text, const OutputOptions& out) {
    if (out.output.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream f(out.output);
        f << text << "\n";
    }
}

void emit_poly(const LaurentPoly& p, const OutputOptions& out) {
    emit(out.format == "json" ? poly_to_json(p).dump(2) : p.str(), out);
}

Partition parse_partition(const std::string& s) {
    std::vector<int> parts;
    std::string cur;
    for (char ch : s) {
        if (ch == ',') {
            parts.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) parts.push_back(std::stoi(cur));
    return Partition(parts);
}

Permutation parse_permutation(const std::string& s) {
    std::vector<int> img;
    if (s.find(',') != std::string::npos) {
        std::string cur;
        for (char ch : s) {
            if (ch == ',') {
                img.push_back(std::stoi(cur));
                cur.clear();
            } else {
                cur += ch;
            }
        }
        if (!cur.empty()) img.push_back(std::stoi(cur));
    } else {
        for (char ch : s) img.push_back(ch - '0');
    }
    return Permutation(img);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact engine for Hecke centers, coloured lattice paths, "
                 "shuffle algebras and commuting-scheme invariants"};
    app.require_subcommand(1);
    app.fallthrough();  // global options may follow the subcommand

    OutputOptions out;
    int workers = default_workers();
    std::uint64_t seed = 12345;
    app.add_option("--format", out.format, "output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--output", out.output, "write output to a file");
    app.add_option("--workers", workers, "worker thread count");
    app.add_option("--seed", seed, "seed for randomized evaluation points");

    // kpoly
    auto* kp = app.add_subcommand("kpoly", "K-polynomial of the commuting scheme");
    int kp_n = 2;
    bool kp_x1 = false;
    kp->add_option("--n", kp_n, "grade")->required();
    kp->add_flag("--x1", kp_x1, "specialize all x_i to 1");

    // mdeg
    auto* md = app.add_subcommand("mdeg", "multidegree of the commuting scheme");
    int md_n = 2;
    std::string md_method = "lattice";
    md->add_option("--n", md_n, "grade")->required();
    md->add_option("--method", md_method, "computation route")
        ->check(CLI::IsMember({"lattice", "symmetrize"}));

    // degree
    auto* dg = app.add_subcommand("degree", "degree of the commuting scheme");
    int dg_n = 12;
    std::size_t dg_max_states = std::size_t(1) << 26;
    dg->add_option("--n", dg_n, "grade")->required();
    dg->add_option("--max-states", dg_max_states, "frontier state budget");

    // pf
    auto* pf = app.add_subcommand("pf", "partition function of a central element");
    int pf_n = 0;
    std::string pf_center = "unit";
    std::string pf_lambda;
    pf->add_option("--n", pf_n, "grade (defaults to |lambda|)");
    pf->add_option("--center", pf_center, "central element")
        ->check(CLI::IsMember({"unit", "sym", "anti"}));
    pf->add_option("--lambda", pf_lambda,
                   "comma list: anti-symmetrizer product A_l1 * A_l2 * ...");

    // epsilon
    auto* ep = app.add_subcommand("epsilon", "shuffle-algebra basis element (numerator form)");
    std::string ep_lambda = "1";
    int ep_k = 3;
    ep->add_option("--lambda", ep_lambda, "partition, comma list")->required();
    ep->add_option("--k", ep_k, "parameter index 1..3")->check(CLI::Range(1, 3));

    // kappa
    auto* ka = app.add_subcommand("kappa", "the distinguished shuffle element (numerator form)");
    int ka_n = 2;
    ka->add_option("--n", ka_n, "grade")->required();

    // configs
    auto* cf = app.add_subcommand("configs", "enumerate lattice-path configurations");
    int cf_n = 2;
    std::string cf_conn;
    std::string cf_dump;
    cf->add_option("--n", cf_n, "grid size")->required();
    cf->add_option("--conn", cf_conn, "connectivity permutation (one-line, e.g. 231 or 2,3,1)");
    cf->add_option("--dump-configs", cf_dump, "write the JSON configuration list to a file");

    // verify
    auto* vf = app.add_subcommand("verify", "run verification suites");
    std::string vf_suite;
    bool vf_all = false;
    int vf_max_n = 3;
    vf->add_option("--suite", vf_suite, "suite name");
    vf->add_flag("--all", vf_all, "run every suite");
    vf->add_option("--max-n", vf_max_n, "grade bound for the suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*kp) {
            LaurentPoly k = kpoly(kp_n, std::max(kp_n, 4));
            if (kp_x1) {
                Assignment sub;
                for (int i = 1; i <= kp_n; ++i) sub[var_x(i)] = ScaledMonomial::value(Rat(1));
                k = k.substitute(sub);
            }
            emit_poly(k, out);
        } else if (*md) {
            emit_poly(mdeg(md_n,
                           md_method == "lattice" ? MdegMethod::Lattice
                                                  : MdegMethod::Symmetrize,
                           workers),
                      out);
        } else if (*dg) {
            DegreeDpOptions opts;
            opts.max_states = dg_max_states;
            emit(commuting_scheme_degree(dg_n, opts).str(), out);
        } else if (*pf) {
            CenterElement c = center_unit(0);
            if (!pf_lambda.empty()) {
                Partition lam = parse_partition(pf_lambda);
                c = antisymmetrizer_product(lam);
            } else {
                if (pf_n <= 0) throw qcomb_error("pf needs --n or --lambda");
                if (pf_center == "unit")
                    c = center_unit(pf_n);
                else
                    c = symmetrizer(pf_n, pf_center == "sym" ? SymmetrizerKind::Complete
                                                             : SymmetrizerKind::Anti);
            }
            emit_poly(partition_fn_center(c, workers), out);
        } else if (*ep) {
            Partition lam = parse_partition(ep_lambda);
            emit_poly(epsilon_partition(lam, ep_k).num, out);
        } else if (*ka) {
            emit_poly(kappa_elem(ka_n).num, out);
        } else if (*cf) {
            Permutation conn =
                cf_conn.empty() ? Permutation::identity(cf_n) : parse_permutation(cf_conn);
            nlohmann::json arr = nlohmann::json::array();
            for_each_config(cf_n, conn,
                            [&](const PathConfig& c) { arr.push_back(config_to_json(c)); });
            if (!cf_dump.empty()) {
                std::ofstream f(cf_dump);
                f << arr.dump(2) << "\n";
                std::cout << arr.size() << " configurations written to " << cf_dump << "\n";
            } else {
                emit(arr.dump(2), out);
            }
        } else if (*vf) {
            checks::CheckOptions opts;
            opts.max_n = vf_max_n;
            opts.seed = seed;
            opts.workers = workers;
            bool any_fail = false;
            bool matched = false;
            for (const auto& [name, suite] : checks::suite_registry()) {
                if (!vf_all && name != vf_suite) continue;
                matched = true;
                for (const auto& r : suite(opts)) {
                    std::cout << (r.pass ? "PASS " : "FAIL ") << name << "/" << r.name;
                    std::printf(" (%.2fs)", r.seconds);
                    if (!r.pass) std::cout << " -- " << r.detail;
                    std::cout << "\n";
                    any_fail |= !r.pass;
                }
            }
            if (!matched) {
                std::cerr << "unknown suite '" << vf_suite << "'; available:";
                for (const auto& [name, suite] : checks::suite_registry())
                    std::cerr << " " << name;
                std::cerr << "\n";
                return 2;
            }
            return any_fail ? 1 : 0;
        }
    } catch (const qcomb_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
