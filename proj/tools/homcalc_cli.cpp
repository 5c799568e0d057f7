/**
 * Command-line front end: expression parsing, subcommand dispatch,
 * JSON/table rendering, and the batch verification suites.
 *
 * Exit codes: 0 success / all checks pass, 1 verification mismatch,
 * 2 usage or parse errors.
 */

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <homcalc/homcalc.hpp>

using json = nlohmann::ordered_json;
using namespace homcalc;

namespace {

json group_json(const FGAbelianGroup& g)
{
    json torsion = json::array();
    for (const Int& d : g.invariantFactors()) {
        if (d <= Int(std::numeric_limits<long long>::max()))
            torsion.push_back(static_cast<long long>(d));
        else
            torsion.push_back(d.str());
    }
    return json{{"rank", g.rank()}, {"torsion", torsion}};
}

json graded_json(const GradedGroup& h)
{
    json rows = json::array();
    for (int j = 0; j <= h.topDegree(); ++j)
        rows.push_back(json{{"degree", j},
                            {"rank", h.at(j).rank()},
                            {"torsion", group_json(h.at(j))["torsion"]}});
    return rows;
}

const char* certainty_str(Certainty c)
{
    switch (c) {
    case Certainty::Yes:
        return "yes";
    case Certainty::No:
        return "no";
    case Certainty::AssertedByPaper:
        return "asserted-by-paper";
    }
    return "?";
}

json attrs_json(const SpaceAttrs& a)
{
    return json{{"dim", a.dim},
                {"closed", a.closed},
                {"orientable", a.orientable},
                {"connected", a.connected},
                {"simply_connected", certainty_str(a.simply_connected)}};
}

void print_graded_table(const GradedGroup& h)
{
    for (int j = 0; j <= h.topDegree(); ++j)
        std::cout << "H_" << j << " = " << h.at(j).toString() << "\n";
}

void emit(const json& out, const std::string& format, const std::string& out_file)
{
    if (!out_file.empty()) {
        std::ofstream f(out_file);
        f << out.dump(2) << "\n";
    }
    if (format == "json")
        std::cout << out.dump(2) << "\n";
}

GradedGroup parse_graded_list(const std::string& text)
{
    GradedGroup h;
    std::stringstream ss(text);
    std::string item;
    int degree = 0;
    while (std::getline(ss, item, ';'))
        h.set(degree++, FGAbelianGroup::parse(item));
    if (degree == 0)
        throw ValidationError("empty group list");
    return h;
}

std::vector<SpaceExpr> thm5_family()
{
    std::vector<SpaceExpr> ys;
    for (int p = 2; p <= 9; ++p)
        ys.push_back(SpaceExpr::lens(p, 1));
    for (int p = 2; p <= 5; ++p)
        for (int q = p; q <= 5; ++q)
            ys.push_back(SpaceExpr::connSum({SpaceExpr::lens(p, 1), SpaceExpr::lens(q, 1)}));
    ys.push_back(SpaceExpr::sphere(3));
    return ys;
}

int run_homology(const std::string& expr_text, const std::string& format,
                 const std::string& out_file)
{
    SpaceExpr e = parse_space(expr_text);
    GradedGroup h = homology(e);
    json out{{"input", expr_text},
             {"attrs", attrs_json(e.attrs())},
             {"homology", graded_json(h)}};
    if (format == "table") {
        std::cout << e.toString() << "  (dim " << e.attrs().dim << ")\n";
        print_graded_table(h);
    }
    emit(out, format, out_file);
    return 0;
}

int run_oracle(const std::string& term, const std::string& format, const std::string& out_file)
{
    ChainComplex c = parse_oracle_term(term);
    GradedGroup h = homology(c);
    json out{{"input", term}, {"homology", graded_json(h)}};
    if (format == "table")
        print_graded_table(h);
    emit(out, format, out_file);
    return 0;
}

/**
 * Run both computation paths for one surgery instance and compare per
 * degree: the closed-form rule against the Mayer-Vietoris solve.
 */
int run_verify_thm5(const std::string& y_text, const std::string& base_text,
                    bool show_relative, const std::string& format,
                    const std::string& out_file)
{
    SpaceExpr y = parse_space(y_text);
    SpaceExpr base = parse_space(base_text);
    if (base.kind() != SpaceExpr::Kind::Sphere && base.kind() != SpaceExpr::Kind::Disc)
        throw ValidationError("base must be a sphere or a disc");
    bool sphere_base = base.kind() == SpaceExpr::Kind::Sphere;
    int n = base.attrs().dim;
    int c = n - y.attrs().dim;

    GradedGroup formula = homology(SpaceExpr::yzRemove(base, y));
    LesWindow w = build_boundary_E(y, c);
    SolveResult solved = solve_les_window(w);
    GradedGroup via_solver = solve_remove(sphere_base, n, solved.groups, punctured_homology(y));

    bool all_ok = true;
    json rows = json::array();
    if (format == "table")
        std::cout << "degree  formula          solver           agree\n";
    for (int j = 0; j <= n; ++j) {
        bool ok = formula.at(j) == via_solver.at(j);
        all_ok = all_ok && ok;
        rows.push_back(json{{"degree", j},
                            {"formula", formula.at(j).toString()},
                            {"solver", via_solver.at(j).toString()},
                            {"agree", ok}});
        if (format == "table") {
            std::ostringstream f, s;
            f << formula.at(j).toString();
            s << via_solver.at(j).toString();
            std::cout << "  " << j << "     " << f.str() << std::string(17 - std::min<size_t>(16, f.str().size()), ' ')
                      << s.str() << std::string(17 - std::min<size_t>(16, s.str().size()), ' ')
                      << (ok ? "yes" : "NO") << "\n";
        }
    }
    json out{{"input", y_text},
             {"base", base_text},
             {"boundary_E", graded_json(solved.groups)},
             {"agreement", rows},
             {"checks", json{{"all_degrees_agree", all_ok}}}};
    if (show_relative) {
        GradedGroup rel = boundary_E_relative_reading(y, c);
        out["relative_reading"] = graded_json(rel);
        if (format == "table") {
            std::cout << "boundary_E (solver):          " << solved.groups.toString() << "\n";
            std::cout << "boundary_E (relative reading): " << rel.toString() << "\n";
            for (int j = 0; j <= n - 1; ++j)
                if (rel.at(j) != solved.groups.at(j))
                    std::cout << "  relative reading differs at degree " << j << ": "
                              << rel.at(j).toString() << " vs "
                              << solved.groups.at(j).toString() << "\n";
        }
    }
    emit(out, format, out_file);
    if (format == "table")
        std::cout << (all_ok ? "PASS" : "FAIL") << "\n";
    return all_ok ? 0 : 1;
}

int run_realize(const std::string& torsion_csv, std::size_t h2rank, std::size_t r1,
                std::size_t r2, bool paper_mode, const std::string& format,
                const std::string& out_file)
{
    std::vector<Int> factors;
    if (!torsion_csv.empty()) {
        std::stringstream ss(torsion_csv);
        std::string item;
        while (std::getline(ss, item, ','))
            factors.push_back(Int(item));
    }
    RealizationTarget t{FGAbelianGroup(h2rank, factors), r1, r2};
    Recipe r = plan(t, paper_mode ? PlanMode::Paper : PlanMode::Default);
    VerifyReport rep = verify(r, t);

    json pieces = json::array();
    for (const SpaceExpr& p : r.pieces)
        pieces.push_back(p.toString());
    json out{{"input", json{{"G", t.G.toString()}, {"r1", r1}, {"r2", r2},
                            {"mode", paper_mode ? "paper" : "default"}}},
             {"recipe", json{{"pieces", pieces}, {"assembled", r.assembled.toString()}}},
             {"homology", graded_json(rep.computed)},
             {"checks", json{{"pass", rep.pass},
                             {"simply_connected", rep.simply_connected_ok},
                             {"nishioka", nishioka_check(rep.computed, 5)}}}};
    if (format == "table") {
        std::cout << "target: H_2 = " << t.G.toString() << ", H_3 = Z^" << r1
                  << ", H_4 = Z^" << r2 << "\n";
        std::cout << "recipe: " << r.assembled.toString() << "\n";
        print_graded_table(rep.computed);
        std::cout << (rep.pass ? "PASS" : "FAIL") << "\n";
    }
    emit(out, format, out_file);
    return rep.pass ? 0 : 1;
}

int run_check_nishioka(const std::string& groups_text, int dim, const std::string& format,
                       const std::string& out_file)
{
    GradedGroup h = parse_graded_list(groups_text);
    bool ok = nishioka_check(h, dim);
    json out{{"input", groups_text},
             {"dim", dim},
             {"checks", json{{"free_in_top_interior_degrees", ok}}}};
    if (format == "table")
        std::cout << (ok ? "pass" : "fail") << "\n";
    emit(out, format, out_file);
    return ok ? 0 : 1;
}

int run_check_sgm(const std::string& groups_text, const std::string& format,
                  const std::string& out_file)
{
    GradedGroup h = parse_graded_list(groups_text);
    bool ok = sgm_candidate_check(h);
    json out{{"input", groups_text}, {"checks", json{{"possible", ok}}}};
    if (format == "table")
        std::cout << (ok ? "possible" : "impossible") << "\n";
    emit(out, format, out_file);
    return ok ? 0 : 1;
}

int run_lift(const std::string& expr_text, int m, const std::string& format,
             const std::string& out_file)
{
    SpaceExpr w = parse_space(expr_text);
    SpecialGenericDescriptor d = lift(w, m);
    json out{{"input", expr_text},
             {"m", d.m},
             {"n", d.n},
             {"predicted", graded_json(d.predicted)},
             {"singular_set", json{{"dim", d.singular_set_dim},
                                   {"embedded", d.singular_set_embedded}}},
             {"bundle_flags",
              json{{"trivial_disc_bundle_near_boundary", d.trivial_disc_bundle_near_boundary},
                   {"trivial_sphere_bundle_over_interior",
                    d.trivial_sphere_bundle_over_interior}}},
             {"embeddable_assumed", d.embeddable_assumed}};
    if (format == "table") {
        std::cout << "predicted homology of an " << m << "-manifold over " << w.toString()
                  << " (degrees 0.." << (m - d.n) << "):\n";
        print_graded_table(d.predicted);
    }
    emit(out, format, out_file);
    return 0;
}

struct SuiteResult {
    std::string name;
    int passed = 0;
    int total = 0;
};

int run_verify_suite(unsigned long long seed, long iters, const std::string& format,
                     const std::string& out_file)
{
    std::vector<SuiteResult> suites;

    {  // Realization round trip on random targets, both modes.
        SuiteResult s{"realize-round-trip", 0, 0};
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> nfac(0, 4), fac(2, 16), rk(0, 5);
        for (long iter = 0; iter < iters; ++iter) {
            std::vector<Int> factors;
            Int cur(1);
            int n = nfac(rng);
            for (int i = 0; i < n; ++i) {
                cur *= fac(rng);
                factors.push_back(cur);
            }
            RealizationTarget t{FGAbelianGroup(static_cast<std::size_t>(rk(rng)), factors),
                                static_cast<std::size_t>(rk(rng)),
                                static_cast<std::size_t>(rk(rng))};
            for (PlanMode mode : {PlanMode::Default, PlanMode::Paper}) {
                ++s.total;
                if (verify(plan(t, mode), t).pass)
                    ++s.passed;
            }
        }
        suites.push_back(s);
    }
    {  // Dual-path agreement over the surgery family.
        SuiteResult s{"surgery-dual-path", 0, 0};
        for (const SpaceExpr& y : thm5_family()) {
            GradedGroup de = solve_les_window(build_boundary_E(y, 2)).groups;
            GradedGroup e = punctured_homology(y);
            for (bool sphere_base : {false, true}) {
                ++s.total;
                SpaceExpr base = sphere_base ? SpaceExpr::sphere(5) : SpaceExpr::disc(5);
                if (solve_remove(sphere_base, 5, de, e) ==
                    homology(SpaceExpr::yzRemove(base, y)))
                    ++s.passed;
            }
        }
        suites.push_back(s);
    }
    {  // Chain-level versus group-level homology.
        SuiteResult s{"chain-oracle", 0, 0};
        for (int p = 2; p <= 9; ++p) {
            ++s.total;
            if (homology(build(CellModel::lens(p, 1))) ==
                homology(SpaceExpr::lens(p, 1)))
                ++s.passed;
        }
        std::mt19937_64 rng(seed + 1);
        std::uniform_int_distribution<int> pd(2, 23);
        for (long iter = 0; iter < iters; ++iter) {
            int p1 = pd(rng), p2 = pd(rng);
            ++s.total;
            ChainComplex c = connected_sum_complex(build(CellModel::lens(p1, 1)),
                                                   build(CellModel::lens(p2, 1)), 3);
            if (homology(c) ==
                homology(SpaceExpr::connSum({SpaceExpr::lens(p1, 1), SpaceExpr::lens(p2, 1)})))
                ++s.passed;
        }
        suites.push_back(s);
    }
    {  // Smith decomposition invariants on random matrices.
        SuiteResult s{"smith-invariants", 0, 0};
        std::mt19937_64 rng(seed + 2);
        std::uniform_int_distribution<std::size_t> dim(1, 6);
        std::uniform_int_distribution<long> entry(-20, 20);
        for (long iter = 0; iter < 2 * iters; ++iter) {
            IntegerMatrix a(dim(rng), dim(rng));
            for (std::size_t i = 0; i < a.rows(); ++i)
                for (std::size_t j = 0; j < a.cols(); ++j)
                    a(i, j) = entry(rng);
            SmithDecomposition d = smith_normal_form(a);
            bool ok = (d.U * a * d.V == d.D) && abs_int(d.U.det()) == 1 &&
                      abs_int(d.V.det()) == 1;
            std::vector<Int> diag = d.diagonal();
            for (std::size_t i = 0; i + 1 < diag.size(); ++i)
                ok = ok && diag[i + 1] % diag[i] == 0;
            ++s.total;
            if (ok)
                ++s.passed;
        }
        suites.push_back(s);
    }
    {  // Duality of the solved boundary pieces.
        SuiteResult s{"boundary-duality", 0, 0};
        for (const SpaceExpr& y : thm5_family()) {
            GradedGroup h = solve_les_window(build_boundary_E(y, 2)).groups;
            int n = 5;
            bool ok = true;
            for (int j = 0; j <= n - 1; ++j)
                ok = ok && h.at(j).rank() == h.at(n - 1 - j).rank() &&
                     torsion(h.at(j)) == torsion(h.at(n - 2 - j));
            ++s.total;
            if (ok)
                ++s.passed;
        }
        suites.push_back(s);
    }

    bool all_ok = true;
    json rows = json::array();
    for (const SuiteResult& s : suites) {
        all_ok = all_ok && s.passed == s.total;
        bool vacuous = s.total == 0;
        if (vacuous)
            std::cerr << "warning: " << s.name << ": empty target set, vacuous pass\n";
        rows.push_back(json{{"suite", s.name}, {"passed", s.passed}, {"total", s.total},
                            {"vacuous", vacuous}});
        if (format == "table")
            std::cout << s.name << ": " << s.passed << "/" << s.total
                      << (s.passed == s.total ? " pass" : " FAIL") << "\n";
    }
    json out{{"seed", seed}, {"suites", rows}, {"checks", json{{"all_pass", all_ok}}}};
    emit(out, format, out_file);
    if (format == "table")
        std::cout << (all_ok ? "PASS" : "FAIL") << "\n";
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact integral homology calculator for a surgery calculus on "
                 "compact manifolds, with a homology realization planner"};
    app.require_subcommand(1);
    std::string format = "table";
    std::string out_file;
    app.add_option("--format", format, "Output format: table or json")
        ->check(CLI::IsMember({"table", "json"}));
    app.add_option("--out", out_file, "Write the JSON result to a file");

    std::string expr_text, term_text, y_text, base_text = "D5", groups_text, torsion_csv;
    bool show_relative = false, paper_mode = false;
    std::size_t h2rank = 0, r1 = 0, r2 = 0;
    int dim = 5, m = 6;
    unsigned long long seed = 0;

    auto* hom = app.add_subcommand("homology", "Homology of a manifold expression");
    hom->add_option("expr", expr_text, "Manifold expression")->required();

    auto* oracle = app.add_subcommand("oracle", "Chain-complex homology of a cell model term");
    oracle->add_option("term", term_text, "Model term, e.g. tensor(lens(3,1),sphere(1))")
        ->required();

    auto* verify_cmd = app.add_subcommand("verify", "Verification suites");
    verify_cmd->require_subcommand(1);
    auto* thm5 = verify_cmd->add_subcommand(
        "thm5", "Compare the surgery formula against the Mayer-Vietoris solver");
    thm5->add_option("--y", y_text, "Closed oriented submanifold expression")->required();
    thm5->add_option("--base", base_text, "Base manifold: D5 or S5");
    thm5->add_flag("--show-relative-reading", show_relative,
                   "Also print the literal relative-group splitting");
    auto* suite = verify_cmd->add_subcommand("suite", "Run all batch property suites");
    suite->add_option("--seed", seed, "Seed for the randomized suites");
    long suite_iters = 50;
    suite->add_option("--iters", suite_iters, "Case count for the randomized suites")
        ->check(CLI::NonNegativeNumber);

    auto* realize_cmd =
        app.add_subcommand("realize", "Plan a 5-manifold with prescribed homology");
    realize_cmd->add_option("--torsion", torsion_csv,
                            "Comma-separated invariant factors of H_2 torsion");
    realize_cmd->add_option("--free-h2", h2rank, "Free rank of H_2");
    realize_cmd->add_option("--h3", r1, "Rank of H_3");
    realize_cmd->add_option("--h4", r2, "Rank of H_4");
    realize_cmd->add_flag("--paper-mode", paper_mode, "Mirror the text construction");

    auto* check = app.add_subcommand("check", "Homological checks on given groups");
    check->require_subcommand(1);
    auto* nishioka = check->add_subcommand(
        "nishioka", "Freeness in degrees dim-2 and dim-1 (semicolon-separated groups)");
    nishioka->add_option("--groups", groups_text, "e.g. \"Z;0;Z/3+Z;Z;Z^2\"")->required();
    nishioka->add_option("--dim", dim, "Manifold dimension");
    auto* sgm = check->add_subcommand(
        "sgm", "Necessary condition for the admissible closed 5-manifold forms");
    sgm->add_option("--groups", groups_text, "Homology in degrees 0..5")->required();

    auto* lift_cmd = app.add_subcommand(
        "lift", "Predicted homology of a closed manifold mapping onto the expression");
    lift_cmd->add_option("--m", m, "Total dimension")->required();
    lift_cmd->add_option("expr", expr_text, "Compact manifold expression with boundary")
        ->required();

    // let --format/--out appear after the subcommand name
    for (CLI::App* sub : {hom, oracle, verify_cmd, thm5, suite, realize_cmd, check,
                          nishioka, sgm, lift_cmd})
        sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (hom->parsed())
            return run_homology(expr_text, format, out_file);
        if (oracle->parsed())
            return run_oracle(term_text, format, out_file);
        if (thm5->parsed())
            return run_verify_thm5(y_text, base_text, show_relative, format, out_file);
        if (suite->parsed())
            return run_verify_suite(seed, suite_iters, format, out_file);
        if (realize_cmd->parsed())
            return run_realize(torsion_csv, h2rank, r1, r2, paper_mode, format, out_file);
        if (nishioka->parsed())
            return run_check_nishioka(groups_text, dim, format, out_file);
        if (sgm->parsed())
            return run_check_sgm(groups_text, format, out_file);
        if (lift_cmd->parsed())
            return run_lift(expr_text, m, format, out_file);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
