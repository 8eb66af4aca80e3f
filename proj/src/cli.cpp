#include "fktree/cli.hpp"

#include <CLI11.hpp>

#include "fktree/enumerate.hpp"
#include "fktree/extremal.hpp"
#include "fktree/io.hpp"
#include "fktree/rearrange.hpp"
#include "fktree/spectral.hpp"

namespace fktree {

namespace {

void emit(const std::string& payload, const std::string& out_path, std::ostream& out) {
    if (out_path.empty())
        out << payload;
    else
        write_file(out_path, payload);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Dirichlet eigenvalues and extremal trees with boundary"};
    app.require_subcommand(1);
    app.fallthrough();  // let --out appear after the subcommand

    std::string out_path;
    app.add_option("--out", out_path, "write output to a file instead of stdout")
        ->capture_default_str();

    // construct
    auto* construct = app.add_subcommand("construct", "build an extremal tree");
    construct->require_subcommand(1);
    std::string pi_text;
    int opt_n = 0, opt_k = 0, opt_d = 0;
    std::string relaxed_kind;

    auto* c_slo = construct->add_subcommand("slo-star", "SLO*-tree of a degree sequence");
    c_slo->add_option("--pi", pi_text, "degree sequence, boundary 1s included")->required();
    auto* c_comet = construct->add_subcommand("comet", "minimizer of T(n,k)");
    c_comet->add_option("--n", opt_n)->required();
    c_comet->add_option("--k", opt_k)->required();
    auto* c_td = construct->add_subcommand("td-min", "minimizer of T_d(n,k)");
    c_td->add_option("--n", opt_n)->required();
    c_td->add_option("--k", opt_k)->required();
    c_td->add_option("--d", opt_d)->required();
    auto* c_relaxed = construct->add_subcommand("relaxed", "minimizer of a relaxed class");
    c_relaxed->add_option("--kind", relaxed_kind, "one of i, ii, iii, iv")->required();
    c_relaxed->add_option("--n", opt_n);
    c_relaxed->add_option("--k", opt_k);
    c_relaxed->add_option("--d", opt_d);

    // solve
    auto* solve = app.add_subcommand("solve", "first Dirichlet eigenpair of a tree");
    std::string input_path;
    double tol = 1e-12;
    solve->add_option("--input", input_path, "tree file")->required();
    solve->add_option("--tol", tol, "residual tolerance");

    // normalize
    auto* normalize = app.add_subcommand("normalize", "rearrange a tree into its SLO*-tree");
    std::string norm_input, target_pi_text, out_tree_path;
    normalize->add_option("--input", norm_input, "tree file")->required();
    normalize->add_option("--target-pi", target_pi_text,
                          "majorized target degree sequence (default: the tree's own)");
    normalize->add_option("--out-tree", out_tree_path, "also write the final tree file here");

    // verify
    auto* verify = app.add_subcommand("verify", "exhaustively check a theorem at small scale");
    std::string theorem;
    int max_n = 9;
    verify->add_option("--theorem", theorem,
                       "thm1, thm2, thm3, cor-semiregular, relaxed-i..iv, compare-seq")
        ->required();
    verify->add_option("--max-n", max_n, "largest vertex count in the sweep");

    // compare
    auto* compare = app.add_subcommand("compare", "majorization verdict for two sequences");
    std::string pi_a_text, pi_b_text;
    compare->add_option("--pi-a", pi_a_text)->required();
    compare->add_option("--pi-b", pi_b_text)->required();

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "census of a degree-sequence class");
    std::string enum_pi_text, format = "json";
    int cap = kDefaultEnumerationCap;
    enumerate->add_option("--pi", enum_pi_text, "degree sequence")->required();
    enumerate->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    enumerate->add_option("--cap", cap, "enumeration vertex cap");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (construct->parsed()) {
            if (c_slo->parsed()) {
                SloStarTree star = build_slo_star_tree(DegreeSequence::parse(pi_text));
                emit(format_tree(star.tree, &star.ordering), out_path, out);
            } else if (c_comet->parsed()) {
                emit(format_tree(build_comet(opt_n, opt_k)), out_path, out);
            } else if (c_td->parsed()) {
                emit(format_tree(build_Td_minimizer(opt_n, opt_k, opt_d)), out_path, out);
            } else {
                ClassSpec spec;
                if (relaxed_kind == "i")
                    spec = ClassSpec::tn_any(opt_n);
                else if (relaxed_kind == "ii")
                    spec = ClassSpec::tdn_any(opt_n, opt_d);
                else if (relaxed_kind == "iii")
                    spec = ClassSpec::tany_k(opt_k);
                else if (relaxed_kind == "iv")
                    spec = ClassSpec::tdany_k(opt_k, opt_d);
                else
                    throw std::invalid_argument("--kind must be one of i, ii, iii, iv");
                emit(format_tree(build_relaxed_minimizer(spec)), out_path, out);
            }
        } else if (solve->parsed()) {
            TreeWithBoundary t = parse_tree(read_file(input_path));
            emit(eigenpair_to_json(first_eigenpair(t, tol)) + "\n", out_path, out);
        } else if (normalize->parsed()) {
            TreeWithBoundary t = parse_tree(read_file(norm_input));
            NormalizeResult result =
                target_pi_text.empty()
                    ? normalize_to_slo_star(t)
                    : majorize_normalize(t, DegreeSequence::parse(target_pi_text));
            emit(trace_to_json(result.trace) + "\n", out_path, out);
            if (!out_tree_path.empty())
                write_file(out_tree_path, format_tree(result.tree, &result.ordering));
        } else if (verify->parsed()) {
            VerifyReport report = verify_theorem(theorem, max_n);
            emit(report_to_json(report) + "\n", out_path, out);
            return report.all_pass ? 0 : 2;
        } else if (compare->parsed()) {
            DegreeSequence a = DegreeSequence::parse(pi_a_text);
            DegreeSequence b = DegreeSequence::parse(pi_b_text);
            SequenceComparison cmp = compare_sequences(a, b);
            double la = first_eigenpair(build_slo_star_tree(a).tree).lambda;
            double lb = first_eigenpair(build_slo_star_tree(b).tree).lambda;
            emit(comparison_to_json(a, b, cmp, la, lb) + "\n", out_path, out);
        } else if (enumerate->parsed()) {
            ClassCensus census =
                brute_force_minimizer(ClassSpec::tpi(DegreeSequence::parse(enum_pi_text)),
                                      kCoMinimalTol, cap);
            emit(format == "csv" ? census_to_csv(census) : census_to_json(census) + "\n",
                 out_path, out);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace fktree
