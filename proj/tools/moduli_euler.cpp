// moduli-euler: exact computations around the topological-gravity partition
// function and the orbifold Euler characteristics chi(Mbar_{g,n}).
//
// Subcommands: zpart, free-energy, npoint, chi, verify.  All output is
// deterministic (map-ordered) and all arithmetic exact; any equality failure
// exits nonzero.  MODULI_EULER_THREADS caps the thread fan-out of the chi
// backends.

#include "tg/euler_char.hpp"
#include "tg/fat_recursion.hpp"
#include "tg/gravity1d.hpp"
#include "tg/kp_npoint.hpp"
#include "tg/symfunc.hpp"
#include "tg/thin_recursion.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace {

using namespace tg;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << text;
}

NPointSeries npoint_by_backend(const std::string& backend, int n, long L) {
    if (backend == "affine") return np_restrict(connected_npoint(n, (int)L), L);
    if (backend == "thin") return np_restrict(thin_total(n, L), L);
    if (backend == "fat") {
        int gmax = 0;
        while (fat_min_order(gmax + 1, n) <= L) ++gmax;
        return np_restrict(fat_total(n, L, gmax), L);
    }
    throw CLI::ValidationError("--backend", "unknown backend: " + backend);
}

// golden-table comparison: every entry inside the requested window must match
// the shipped table, and every computed entry present there must agree.
int compare_gold(const ChiTable& t, int gmax, int nmax, const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "cannot open golden table: " << path << "\n";
        return 1;
    }
    std::map<std::pair<int, int>, std::string> gold;
    std::string line;
    std::getline(in, line); // header
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string g, n, v;
        std::getline(ls, g, ',');
        std::getline(ls, n, ',');
        std::getline(ls, v);
        gold.emplace(std::make_pair(std::stoi(g), std::stoi(n)), v);
    }
    int bad = 0;
    for (const auto& [gn, v] : gold) {
        if (gn.first > gmax || gn.second > nmax) continue;
        auto it = t.values.find(gn);
        if (it == t.values.end()) {
            std::cerr << "missing (" << gn.first << "," << gn.second << ")\n";
            ++bad;
        } else if (to_string(it->second) != v) {
            std::cerr << "mismatch (" << gn.first << "," << gn.second
                      << "): computed " << to_string(it->second) << ", table "
                      << v << "\n";
            ++bad;
        }
    }
    std::cout << "gold: " << (bad ? "MISMATCH" : "ok") << " ("
              << gold.size() << " table entries checked)\n";
    return bad ? 1 : 0;
}

int run_suite(const std::string& suite) {
    int failures = 0;
    auto report = [&](const std::string& name, const std::string& msg) {
        bool ok = msg.empty();
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << "\n";
        if (!ok) {
            std::cout << msg << (msg.back() == '\n' ? "" : "\n");
            ++failures;
        }
    };
    bool all = suite == "all";
    const long D = 12;

    if (all || suite == "virasoro") {
        GradedPoly Z = partition_function(D);
        for (auto family : {VirasoroFamily::Original, VirasoroFamily::Reformulated})
            for (int m = -1; m <= 5; ++m) {
                VirasoroOp op{m, family};
                GradedPoly r = poly_truncate(apply_virasoro(op, Z),
                                             virasoro_exact_window(op, D));
                std::ostringstream name;
                name << "virasoro "
                     << (family == VirasoroFamily::Original ? "original"
                                                            : "reformulated")
                     << " m=" << m << " annihilates Z (D=" << D << ")";
                report(name.str(), r.is_zero() ? "" : poly_dump(r));
            }
    }
    if (all || suite == "flow")
        for (int n = 0; n <= 5; ++n)
            report("flow equation n=" + std::to_string(n) + " (D=12)",
                   flow_check(n, D));
    if (all || suite == "polymer")
        report("polymer equation (D=12)", polymer_check(D));
    if (all || suite == "cutjoin")
        report("cut-and-join exp(M)(1) = Z (D=12)",
               cut_and_join_Z(D) == partition_function(D)
                   ? ""
                   : "cut-and-join series differs from Z");
    if (all || suite == "bosonic")
        report("bosonic representation (p-weight 12)", verify_bosonic_Z((int)D));
    if (all || suite == "ks")
        report("Kac-Schwarz operators (n <= 20, 40 coefficients)",
               ks_verify(20, 40));
    if (all || suite == "crosscheck") {
        report("thin recursion vs affine cycle sum (2g+n <= 8, order <= 14)",
               thin_total_check(14, 8));
        report("fat recursion vs affine cycle sum (2g+n <= 6, order <= 14)",
               fat_total_check(14, 6));
    }
    return failures ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact topological-gravity series and moduli-space Euler "
                 "characteristics"};
    app.require_subcommand(1);

    long degree = 12;
    int n = 1, gmax = 8, nmax = 6;
    long order = 14;
    std::string backend = "affine", cross_check, format, out_path, suite;
    bool gold = false, markdown = false;

    auto* zpart = app.add_subcommand("zpart", "partition function Z to degree D");
    zpart->add_option("--degree", degree, "truncation degree (deg t_a = a+1)")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    zpart->add_option("--out", out_path, "output file (default stdout)");

    auto* fe = app.add_subcommand("free-energy", "free energy log Z to degree D");
    fe->add_option("--degree", degree, "truncation degree (deg t_a = a+1)")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    fe->add_option("--out", out_path, "output file (default stdout)");

    auto* np = app.add_subcommand(
        "npoint", "connected n-point function on a total z-order window");
    np->add_option("--n", n, "number of points")
        ->required()
        ->check(CLI::PositiveNumber);
    np->add_option("--order", order, "total z-order window L")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    np->add_option("--backend", backend, "affine | thin | fat")
        ->check(CLI::IsMember({"affine", "thin", "fat"}))
        ->capture_default_str();
    np->add_option("--cross-check", cross_check,
                   "second backend; exits nonzero on any difference")
        ->check(CLI::IsMember({"affine", "thin", "fat"}));
    np->add_option("--out", out_path, "output file (default stdout)");

    auto* chi = app.add_subcommand(
        "chi", "orbifold Euler characteristics chi(Mbar_{g,n})");
    chi->add_option("--gmax", gmax, "max genus")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    chi->add_option("--nmax", nmax, "max marked points")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    chi->add_option("--backend", backend, "affine | thin | fat")
        ->check(CLI::IsMember({"affine", "thin", "fat"}))
        ->capture_default_str();
    chi->add_option("--format", format, "csv | json (default csv)")
        ->check(CLI::IsMember({"csv", "json"}));
    chi->add_flag("--markdown", markdown, "render a markdown grid instead");
    chi->add_flag("--gold", gold,
                  "compare against the shipped golden table and exit nonzero "
                  "on any mismatch");
    chi->add_option("--out", out_path, "output file (default stdout)");

    auto* verify = app.add_subcommand("verify", "run an invariant suite");
    verify
        ->add_option("suite", suite,
                     "virasoro | flow | polymer | cutjoin | bosonic | ks | "
                     "crosscheck | all")
        ->required()
        ->check(CLI::IsMember({"virasoro", "flow", "polymer", "cutjoin",
                               "bosonic", "ks", "crosscheck", "all"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (zpart->parsed()) {
            emit(poly_dump(partition_function(degree)), out_path);
        } else if (fe->parsed()) {
            emit(poly_dump(free_energy(degree)), out_path);
        } else if (np->parsed()) {
            NPointSeries s = npoint_by_backend(backend, n, order);
            if (!cross_check.empty()) {
                NPointSeries s2 = npoint_by_backend(cross_check, n, order);
                if (!(s == s2)) {
                    std::cerr << "backend disagreement: " << backend << " vs "
                              << cross_check << "\n";
                    return 1;
                }
            }
            emit(np_to_json(s), out_path);
        } else if (chi->parsed()) {
            SpecializationParams p{gmax, nmax};
            ChiTable t = chi_table(p, chi_backend_from_string(backend));
            if (markdown)
                emit(chi_table_markdown(t), out_path);
            else if (format == "json")
                emit(chi_table_json(t), out_path);
            else
                emit(chi_table_csv(t), out_path);
            if (gold)
                return compare_gold(t, gmax, nmax,
                                    std::string(TG_DATA_DIR) + "/chi_table.csv");
        } else if (verify->parsed()) {
            return run_suite(suite);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
