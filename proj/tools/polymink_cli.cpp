// Command-line front end: generators, sums, diameters, summand queries,
// zonotope detection, fan comparisons, verification suites, and the cdd/JSON
// file formats. '-' means stdin/stdout.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "polymink/generators.hpp"
#include "polymink/graph.hpp"
#include "polymink/io.hpp"
#include "polymink/minkowski.hpp"
#include "polymink/polytope.hpp"
#include "polymink/verify.hpp"

namespace {

using namespace polymink;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << text;
}

ExactPolytope load(const std::string& path) { return parse_polytope_file(read_input(path)); }

FileFormat parse_format(const std::string& name) {
    if (name == "ext") return FileFormat::CddExt;
    if (name == "ine") return FileFormat::CddIne;
    if (name == "json") return FileFormat::Json;
    throw CLI::ValidationError("--format", "must be ext, ine, or json");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact polytope toolkit: Minkowski sums, diameters, decomposability"};
    app.require_subcommand(1);

    std::string out_path = "-";
    std::string format_name = "ext";

    // ---- gen ----------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "generate a polytope family member");
    std::string kind;
    gen->add_option("kind", kind, "cube|simplex|polygon|prop21|prop22|xi|pi|theta|xitilde|random")
        ->required();
    long g_d = 3, g_k = 5, g_l = 4, g_m = 2, g_n = 8, g_bound = 10;
    unsigned long long g_seed = 1;
    gen->add_option("-d,--dim", g_d, "dimension");
    gen->add_option("-k", g_k, "family parameter k / diameter");
    gen->add_option("-l", g_l, "family parameter l (even)");
    gen->add_option("-m", g_m, "family parameter m");
    gen->add_option("-n", g_n, "point / vertex count");
    gen->add_option("--bound", g_bound, "coordinate bound for random");
    gen->add_option("--seed", g_seed, "random seed");
    gen->add_option("-o,--out", out_path, "output file ('-' = stdout)");
    gen->add_option("--format", format_name, "ext|ine|json");

    // ---- sum ----------------------------------------------------------
    auto* sum_cmd = app.add_subcommand("sum", "Minkowski sum of two polytopes");
    std::string in_a, in_b;
    bool with_decomposition = false;
    sum_cmd->add_option("A", in_a)->required();
    sum_cmd->add_option("B", in_b)->required();
    sum_cmd->add_flag("--decomposition", with_decomposition,
                      "also print the vertex decomposition map");
    sum_cmd->add_option("-o,--out", out_path);
    sum_cmd->add_option("--format", format_name, "ext|ine|json");

    // ---- diameter / graph --------------------------------------------
    auto* diam_cmd = app.add_subcommand("diameter", "graph diameter of a polytope");
    std::string in_p;
    diam_cmd->add_option("P", in_p)->required();
    auto* graph_cmd = app.add_subcommand("graph", "vertex-edge graph of a polytope");
    graph_cmd->add_option("P", in_p)->required();

    // ---- summand / is-zonotope / erode / fans -------------------------
    auto* summand_cmd = app.add_subcommand("summand", "summand and homothety queries");
    summand_cmd->add_option("P", in_a)->required();
    summand_cmd->add_option("Q", in_b)->required();
    auto* zono_cmd = app.add_subcommand("is-zonotope", "zonotope detection with generators");
    zono_cmd->add_option("P", in_p)->required();
    auto* erode_cmd = app.add_subcommand("erode", "Minkowski difference P minus Q");
    erode_cmd->add_option("P", in_a)->required();
    erode_cmd->add_option("Q", in_b)->required();
    erode_cmd->add_option("-o,--out", out_path);
    erode_cmd->add_option("--format", format_name, "ext|ine|json");
    auto* fans_cmd = app.add_subcommand("fans", "normal fan comparison");
    std::string fans_mode;
    fans_cmd->add_option("mode", fans_mode, "equal|refines")->required();
    fans_cmd->add_option("P", in_a)->required();
    fans_cmd->add_option("Q", in_b)->required();

    // ---- verify -------------------------------------------------------
    auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
    std::string suite;
    verify_cmd->add_option("suite", suite, "bounds|lemmas|decomp|thm41|thm42|all")->required();
    unsigned long long v_seed = 7;
    long v_trials = 20, v_m = 2;
    std::vector<long> v_k;
    std::string report_format = "json";
    verify_cmd->add_option("--seed", v_seed);
    verify_cmd->add_option("--trials", v_trials);
    verify_cmd->add_option("--report", report_format, "json|csv");
    verify_cmd->add_option("--k", v_k, "family parameters for thm41/thm42");
    verify_cmd->add_option("--m", v_m, "parameter m for thm42");
    verify_cmd->add_option("--p", in_a, "polytope file for bounds/lemmas");
    verify_cmd->add_option("--q", in_b, "second polytope file for bounds/lemmas");
    verify_cmd->add_option("-o,--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) {
            FileFormat fmt = parse_format(format_name);
            auto emit = [&](const ExactPolytope& p) {
                write_output(out_path, emit_polytope_file(p, fmt));
            };
            if (kind == "cube") emit(cube(static_cast<std::size_t>(g_d)));
            else if (kind == "simplex") emit(simplex(static_cast<std::size_t>(g_d)));
            else if (kind == "polygon") emit(rational_polygon(static_cast<std::size_t>(g_n)));
            else if (kind == "prop21")
                emit(prop21(static_cast<std::size_t>(g_d), static_cast<std::size_t>(g_k)));
            else if (kind == "prop22") {
                auto [P, Q] = prop22(static_cast<std::size_t>(g_d),
                                     static_cast<std::size_t>(g_k));
                if (out_path == "-") {
                    std::cout << emit_polytope_file(P, fmt) << emit_polytope_file(Q, fmt);
                } else {
                    write_output(out_path, emit_polytope_file(P, fmt));
                    write_output(out_path + ".q", emit_polytope_file(Q, fmt));
                }
            } else if (kind == "xi") {
                XiParams params;
                params.k = g_k;
                params.l = g_l;
                emit(xi(params).first);
            } else if (kind == "pi") {
                PiParams params;
                params.m = g_m;
                params.direction = {1, 0};
                emit(pi_polygon(params));
            } else if (kind == "theta") {
                emit(theta(g_k, g_l).poly);
            } else if (kind == "xitilde") {
                emit(xi_tilde(g_k, g_l, g_m).poly);
            } else if (kind == "random") {
                emit(random_polytope(static_cast<std::size_t>(g_d),
                                     static_cast<std::size_t>(g_n), g_bound, g_seed));
            } else {
                std::cerr << "unknown family: " << kind << "\n";
                return 2;
            }
            return 0;
        }
        if (sum_cmd->parsed()) {
            auto s = minkowski_sum(load(in_a), load(in_b));
            write_output(out_path, emit_polytope_file(s.sum, parse_format(format_name)));
            if (with_decomposition) {
                std::ostringstream os;
                for (std::size_t w = 0; w < s.sum.f0(); ++w)
                    os << w << " -> (" << s.decomposition[w].first << ", "
                       << s.decomposition[w].second << ")\n";
                if (out_path == "-") std::cout << os.str();
                else write_output(out_path + ".map", os.str());
            }
            return 0;
        }
        if (diam_cmd->parsed()) {
            auto p = load(in_p);
            auto d = diameter(build_graph(p));
            std::cout << "diameter " << d.value << " witness (" << d.witness.first << ", "
                      << d.witness.second << ")\n";
            return 0;
        }
        if (graph_cmd->parsed()) {
            auto p = load(in_p);
            auto es = edges(p);
            std::cout << "vertices " << p.f0() << "\nedges " << es.size() << "\n";
            for (const auto& [u, v] : es) std::cout << u << " " << v << "\n";
            return 0;
        }
        if (summand_cmd->parsed()) {
            auto p = load(in_a), q = load(in_b);
            std::cout << "is_summand " << (is_summand(p, q) ? "true" : "false") << "\n";
            std::cout << "has_homothetic_summand "
                      << (has_homothetic_summand(p, q) ? "true" : "false") << "\n";
            auto bracket = max_summand_scale(p, q, Rational(1, 1024));
            std::cout << "scale_bracket [" << bracket.alpha_lo.str() << ", "
                      << bracket.alpha_hi.str() << "]"
                      << (bracket.certified ? "" : " (uncertified)") << "\n";
            return 0;
        }
        if (zono_cmd->parsed()) {
            auto z = is_zonotope(load(in_p));
            std::cout << (z.zonotope ? "zonotope" : "not a zonotope") << "\n";
            for (const auto& [dir, len] : z.generators) {
                std::cout << "generator";
                for (const auto& x : dir) std::cout << " " << x.str();
                std::cout << " scale " << len.str() << "\n";
            }
            return 0;
        }
        if (erode_cmd->parsed()) {
            auto r = erosion(load(in_a), load(in_b));
            write_output(out_path, emit_polytope_file(r, parse_format(format_name)));
            return 0;
        }
        if (fans_cmd->parsed()) {
            auto p = load(in_a), q = load(in_b);
            bool result;
            if (fans_mode == "equal") result = fans_equal(p, q);
            else if (fans_mode == "refines") result = fan_refines(p, q);
            else {
                std::cerr << "fans mode must be equal or refines\n";
                return 2;
            }
            std::cout << (result ? "true" : "false") << "\n";
            return 0;
        }
        if (verify_cmd->parsed()) {
            VerificationReport report;
            if (suite == "bounds" || suite == "lemmas") {
                ExactPolytope p, q;
                if (!in_a.empty() && !in_b.empty()) {
                    p = load(in_a);
                    q = load(in_b);
                } else {
                    p = random_polytope(3, 7, 10, v_seed);
                    q = random_polytope(3, 6, 10, v_seed + 1);
                }
                report = suite == "bounds" ? check_diameter_bounds(p, q)
                                           : check_structure_lemmas(p, q);
            } else if (suite == "decomp") {
                report = check_decomposability(static_cast<std::size_t>(std::max(v_trials, 1L)),
                                               v_seed);
            } else if (suite == "thm41") {
                report = ratio_tables(RatioKind::Thm41, v_k.empty() ? std::vector<long>{3, 4, 5}
                                                                    : v_k);
            } else if (suite == "thm42") {
                report = ratio_tables(RatioKind::Thm42,
                                      v_k.empty() ? std::vector<long>{5} : v_k, v_m);
            } else if (suite == "all") {
                report = run_suite(v_seed, static_cast<std::size_t>(std::max(v_trials, 0L)));
            } else {
                std::cerr << "unknown suite: " << suite << "\n";
                return 2;
            }
            write_output(out_path,
                         report_format == "csv" ? report.to_csv() : report.to_json());
            return report.all_pass() ? 0 : 1;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
