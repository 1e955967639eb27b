// Command-line surface for the graph-minor workbench: minor testing,
// coloring, connectivity, cockades, generation, and the verification runs.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gmw/canonical.hpp"
#include "gmw/coloring.hpp"
#include "gmw/graph6.hpp"
#include "gmw/named.hpp"
#include "gmw/verify.hpp"

namespace {

using namespace gmw;

// Inline graph6, or @path to read the first non-comment line of a file.
Graph read_graph_arg(const std::string& arg) {
    std::string text = arg;
    if (!arg.empty() && arg[0] == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) throw std::runtime_error("cannot open graph file: " + arg.substr(1));
        std::string line;
        text.clear();
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '>' || line[0] == '#') continue;
            text = line;
            break;
        }
        if (text.empty()) throw std::runtime_error("no graph6 line in file: " + arg.substr(1));
    }
    return from_graph6(text);
}

std::string read_text_arg(const std::string& arg) {
    if (!arg.empty() && arg[0] == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) throw std::runtime_error("cannot open file: " + arg.substr(1));
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    return arg;
}

std::uint64_t parse_vertex_list(const std::string& arg, const Graph& g) {
    std::uint64_t mask = 0;
    std::stringstream ss(arg);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        int v = std::stoi(tok);
        if (v < 0 || v >= g.order()) throw std::runtime_error("vertex out of range: " + tok);
        mask |= (1ull << v);
    }
    return mask;
}

void print_model(const BranchModel& m) {
    for (size_t i = 0; i < m.branch_sets.size(); ++i) {
        std::cout << i << ':';
        for_each_bit(m.branch_sets[i], [&](int v) { std::cout << ' ' << v; });
        std::cout << '\n';
    }
}

int default_jobs() {
    if (const char* env = std::getenv("GMW_JOBS")) {
        int j = std::atoi(env);
        if (j > 0) return j;
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph-minor workbench"};
    app.require_subcommand(1);

    std::string arg_g, arg_h, arg_u1, arg_u2, arg_plan, arg_cursor;
    int arg_n = 0, arg_d = 0, arg_t = 7, arg_k = 0;
    int arg_jobs = default_jobs();

    auto* c_minor = app.add_subcommand("minor", "branch-set model of H in G, or 'none'");
    c_minor->add_option("G", arg_g)->required();
    c_minor->add_option("H", arg_h)->required();

    auto* c_k9eq = app.add_subcommand("k9eq", "K9^= minor test with certificate");
    c_k9eq->add_option("G", arg_g)->required();

    auto* c_chrom = app.add_subcommand("chromatic", "exact chromatic number");
    c_chrom->add_option("G", arg_g)->required();

    auto* c_alpha = app.add_subcommand("alpha", "independence number with witness");
    c_alpha->add_option("G", arg_g)->required();

    auto* c_conn = app.add_subcommand("connectivity", "vertex connectivity with separator");
    c_conn->add_option("G", arg_g)->required();

    auto* c_cockade = app.add_subcommand("cockade", "cockade build/check/color");
    c_cockade->require_subcommand(1);
    auto* cc_build = c_cockade->add_subcommand("build", "build graph from plan, print graph6");
    cc_build->add_option("PLAN", arg_plan)->required();
    auto* cc_check = c_cockade->add_subcommand("check", "recognize a cockade, print its plan");
    cc_check->add_option("G", arg_g)->required();
    auto* cc_color = c_cockade->add_subcommand("color", "8-coloring of a cockade plan");
    cc_color->add_option("PLAN", arg_plan)->required();

    auto* c_gen = app.add_subcommand("gen", "isomorph-free generation, one graph6 per line");
    c_gen->add_option("N", arg_n)->required();
    c_gen->add_option("MINDEG", arg_d)->required();
    c_gen->add_option("--cursor", arg_cursor, "cursor file for restartable runs");

    auto* c_verify = app.add_subcommand("verify-lemma", "deletion-lemma scan over (N, delta>=D)");
    c_verify->add_option("N", arg_n)->required();
    c_verify->add_option("D", arg_d)->required();
    c_verify->add_option("T", arg_t)->required();
    c_verify->add_option("--resume", arg_cursor, "checkpoint file (created/updated/resumed)");
    c_verify->add_option("--jobs", arg_jobs, "worker threads");

    auto* c_extremal = app.add_subcommand("extremal", "edge-bound dichotomy check");
    c_extremal->add_option("G", arg_g)->required();

    auto* c_twok7 = app.add_subcommand("two-k7", "K9^= model from two K7 subgraphs");
    c_twok7->add_option("G", arg_g)->required();
    c_twok7->add_option("U1", arg_u1, "comma-separated vertex list")->required();
    c_twok7->add_option("U2", arg_u2, "comma-separated vertex list")->required();

    auto* c_profile = app.add_subcommand("profile", "contraction-criticality profile");
    c_profile->add_option("G", arg_g)->required();
    c_profile->add_option("K", arg_k)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream dump;
        int code = app.exit(e, dump, dump);
        if (code == 0) {
            std::cout << dump.str();  // --help
            return 0;
        }
        std::cerr << dump.str();
        return 2;
    }

    try {
        if (*c_minor) {
            Graph g = read_graph_arg(arg_g), h = read_graph_arg(arg_h);
            if (auto m = has_minor(g, h))
                print_model(*m);
            else
                std::cout << "none\n";
            return 0;
        }
        if (*c_k9eq) {
            Graph g = read_graph_arg(arg_g);
            if (auto m = has_k9eq_minor(g)) {
                std::cout << "variant: " << (m->first == 0 ? "disjoint-edges" : "shared-end") << '\n';
                print_model(m->second);
            } else {
                std::cout << "none\n";
            }
            return 0;
        }
        if (*c_chrom) {
            auto [chi, coloring] = chromatic_number(read_graph_arg(arg_g));
            std::cout << chi << '\n';
            std::cout << "colors:";
            for (int c : coloring.colors) std::cout << ' ' << c;
            std::cout << '\n';
            return 0;
        }
        if (*c_alpha) {
            auto [alpha, witness] = independence_number(read_graph_arg(arg_g));
            std::cout << alpha << '\n';
            std::cout << "witness:";
            for_each_bit(witness, [&](int v) { std::cout << ' ' << v; });
            std::cout << '\n';
            return 0;
        }
        if (*c_conn) {
            auto res = vertex_connectivity(read_graph_arg(arg_g));
            std::cout << res.connectivity << '\n';
            if (!res.separator.empty()) {
                std::cout << "separator:";
                for (int v : res.separator) std::cout << ' ' << v;
                std::cout << '\n';
            }
            return 0;
        }
        if (*cc_build) {
            std::cout << to_graph6(build_cockade(plan_from_text(read_text_arg(arg_plan)))) << '\n';
            return 0;
        }
        if (*cc_check) {
            Graph g = read_graph_arg(arg_g);
            if (auto plan = recognize_cockade(g))
                std::cout << plan_to_text(*plan);
            else
                std::cout << "none\n";
            return 0;
        }
        if (*cc_color) {
            auto plan = plan_from_text(read_text_arg(arg_plan));
            Coloring col = cockade_coloring(plan);
            std::cout << col.palette_size << '\n';
            std::cout << "colors:";
            for (int c : col.colors) std::cout << ' ' << c;
            std::cout << '\n';
            return 0;
        }
        if (*c_gen) {
            GenParams params{arg_n, arg_d};
            long skip_units = 0;
            if (!arg_cursor.empty()) {
                std::ifstream in(arg_cursor);
                if (in) {
                    std::string tag;
                    int cn, cd;
                    long done;
                    if (in >> tag >> cn >> cd >> done && tag == "gmw-gen-cursor") {
                        if (cn != arg_n || cd != arg_d)
                            throw std::runtime_error("cursor parameters do not match");
                        skip_units = done;
                    } else {
                        throw std::runtime_error("malformed cursor file");
                    }
                }
            }
            auto units = generation_units(params, default_split_level(arg_n));
            for (size_t i = static_cast<size_t>(skip_units); i < units.size(); ++i) {
                expand_unit(params, units[i], [&](const Graph& g) {
                    std::cout << to_graph6(g) << '\n';
                    return true;
                });
                if (!arg_cursor.empty()) {
                    std::ofstream out(arg_cursor, std::ios::trunc);
                    out << "gmw-gen-cursor " << arg_n << ' ' << arg_d << ' ' << (i + 1) << '\n';
                }
            }
            return 0;
        }
        if (*c_verify) {
            VerifyOptions opts;
            opts.jobs = arg_jobs;
            opts.checkpoint_path = arg_cursor;
            opts.log = [](const std::string& line) { std::cerr << line << '\n'; };
            VerificationReport rep = verify_deletion_lemma(arg_n, arg_d, arg_t, opts);
            std::cout << report_to_text(rep);
            return rep.counterexamples.empty() ? 0 : 1;
        }
        if (*c_extremal) {
            Graph g = read_graph_arg(arg_g);
            ExtremalVerdict v = scan_extremal(g);
            switch (v.kind) {
                case ExtremalVerdict::Kind::HypothesisNotMet:
                    std::cout << "hypothesis-not-met\n";
                    return 0;
                case ExtremalVerdict::Kind::MinorBranch:
                    std::cout << "minor-branch variant="
                              << (v.variant == 0 ? "disjoint-edges" : "shared-end") << '\n';
                    print_model(*v.model);
                    return 0;
                case ExtremalVerdict::Kind::CockadeBranch:
                    std::cout << "cockade-branch\n" << plan_to_text(*v.plan);
                    return 0;
                case ExtremalVerdict::Kind::DichotomyViolated:
                    std::cout << "dichotomy-violated\n";
                    return 1;
            }
        }
        if (*c_twok7) {
            Graph g = read_graph_arg(arg_g);
            try {
                TwoK7Result res =
                    two_k7_to_k9eq(g, parse_vertex_list(arg_u1, g), parse_vertex_list(arg_u2, g));
                std::cout << "variant: " << (res.variant == 0 ? "disjoint-edges" : "shared-end") << '\n';
                print_model(res.model);
                return 0;
            } catch (const std::invalid_argument& e) {
                std::cerr << "precondition failed: " << e.what() << '\n';
                return 1;
            }
        }
        if (*c_profile) {
            Graph g = read_graph_arg(arg_g);
            ProofProfile p = criticality_profile(g, arg_k);
            std::cout << "n=" << p.order << " e=" << p.edges << " delta=" << p.min_degree
                      << " extremal-bound=" << p.extremal_bound
                      << " meets-extremal=" << (p.meets_extremal ? "yes" : "no")
                      << " forced-min-degree-count=" << p.forced_min_degree_count << '\n';
            for (const auto& rec : p.per_vertex) {
                std::cout << "vertex " << rec.vertex << ": d=" << rec.degree
                          << " alpha(N)=" << rec.alpha_neighborhood << " bound=" << rec.alpha_bound
                          << (rec.degree_ok ? "" : " DEGREE-VIOLATION")
                          << (rec.alpha_ok ? "" : " ALPHA-VIOLATION") << '\n';
            }
            std::cout << (p.any_violation ? "not-k-contraction-critical\n" : "no-violations\n");
            return 0;
        }
    } catch (const Graph6Error& e) {
        std::cerr << "graph6 error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
