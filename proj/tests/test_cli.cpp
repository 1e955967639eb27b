#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "gmw/graph6.hpp"
#include "gmw/named.hpp"

using namespace gmw;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

std::string binary() {
    const char* p = std::getenv("GMW_BIN");
    REQUIRE_MESSAGE(p != nullptr, "GMW_BIN must point at the gmw binary");
    return p;
}

RunResult run(const std::string& args) {
    std::string cmd = binary() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string shellquote(const std::string& s) { return "'" + s + "'"; }

std::string stable_part(const std::string& text) {
    std::istringstream in(text);
    std::ostringstream out;
    std::string line;
    while (std::getline(in, line))
        if (line.empty() || line[0] != '#') out << line << '\n';
    return out.str();
}

}  // namespace

TEST_CASE("chromatic on K6 prints 6") {
    RunResult r = run("chromatic " + shellquote(to_graph6(complete_graph(6))));
    CHECK(r.exit_code == 0);
    CHECK(r.out.substr(0, 2) == "6\n");
}

TEST_CASE("minor K9 inside K8 is none, exit 0") {
    RunResult r = run("minor " + shellquote(to_graph6(complete_graph(8))) + " " +
                      shellquote(to_graph6(complete_graph(9))));
    CHECK(r.exit_code == 0);
    CHECK(r.out == "none\n");
}

TEST_CASE("verify-lemma 8 7 7 exits 0 with a lemma-holds report") {
    RunResult r = run("verify-lemma 8 7 7");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("graphs-scanned: 1") != std::string::npos);
    CHECK(r.out.find("counterexamples: 0") != std::string::npos);
    CHECK(r.out.find("verdict: lemma-holds") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run("no-such-subcommand").exit_code == 2);
    CHECK(run("chromatic 'not graph6!'").exit_code == 2);
    CHECK(run("chromatic").exit_code == 2);
}

TEST_CASE("negative extremal-style verdict exits 1") {
    // A refuted verify-lemma run: the (8, >=6) universe contains K8 minus a
    // perfect matching, which loses its K7^= minor under every deletion.
    RunResult r = run("verify-lemma 8 6 7");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("verdict: refuted") != std::string::npos);
}

TEST_CASE("graph arguments load from @file") {
    const char* path = "cli_graph_input.g6";
    {
        std::ofstream out(path);
        out << "# comment\n" << to_graph6(cycle_graph(5)) << "\n";
    }
    RunResult r = run(std::string("alpha @") + path);
    CHECK(r.exit_code == 0);
    CHECK(r.out.substr(0, 2) == "2\n");
    std::remove(path);
}

TEST_CASE("cockade pipeline round-trips through its own readers") {
    const char* plan_path = "cli_plan.txt";
    {
        std::ofstream out(plan_path);
        out << "pieces: K8 K22222\n";
        out << "glue: 1 0 2 4 6 8 -> 0 1 2 3 4\n";
    }
    RunResult built = run(std::string("cockade build @") + plan_path);
    CHECK(built.exit_code == 0);
    std::string g6 = built.out.substr(0, built.out.find('\n'));
    Graph g = from_graph6(g6);
    CHECK(g.order() == 13);
    CHECK(g.edge_count() == 58);

    RunResult check = run("cockade check " + shellquote(g6));
    CHECK(check.exit_code == 0);
    CHECK(check.out.find("pieces:") != std::string::npos);

    RunResult color = run(std::string("cockade color @") + plan_path);
    CHECK(color.exit_code == 0);
    std::remove(plan_path);
}

TEST_CASE("gen output parses and matches known counts") {
    RunResult r = run("gen 6 0");
    CHECK(r.exit_code == 0);
    std::istringstream in(r.out);
    std::string line;
    long count = 0;
    while (std::getline(in, line)) {
        Graph g = from_graph6(line);
        CHECK(g.order() == 6);
        ++count;
    }
    CHECK(count == 156);
}

TEST_CASE("gen cursor resumes where it left off") {
    const char* cur = "cli_gen_cursor.txt";
    std::remove(cur);
    RunResult full = run(std::string("gen 6 0 --cursor ") + cur);
    CHECK(full.exit_code == 0);
    {
        // A completed cursor yields no further output.
        RunResult again = run(std::string("gen 6 0 --cursor ") + cur);
        CHECK(again.exit_code == 0);
        CHECK(again.out.empty());
    }
    {
        // Rewind to unit 1: output must be exactly the suffix after unit 0's
        // contribution, i.e. full output minus a prefix.
        std::ofstream out(cur, std::ios::trunc);
        out << "gmw-gen-cursor 6 0 1\n";
    }
    RunResult tail = run(std::string("gen 6 0 --cursor ") + cur);
    CHECK(tail.exit_code == 0);
    CHECK(tail.out.size() < full.out.size());
    CHECK(full.out.compare(full.out.size() - tail.out.size(), tail.out.size(), tail.out) == 0);
    // Mismatched parameters refuse to resume.
    CHECK(run(std::string("gen 7 0 --cursor ") + cur).exit_code == 2);
    std::remove(cur);
}

TEST_CASE("verify-lemma --jobs does not change the report") {
    RunResult one = run("verify-lemma 9 7 7 --jobs 1");
    RunResult two = run("verify-lemma 9 7 7 --jobs 2");
    CHECK(one.exit_code == 0);
    CHECK(two.exit_code == 0);
    CHECK(stable_part(one.out) == stable_part(two.out));
}

TEST_CASE("two-k7 and profile subcommands") {
    RunResult r = run("two-k7 " + shellquote(to_graph6(complete_graph(9))) + " 0,1,2,3,4,5,6 0,1,2,3,4,5,7");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("variant:") != std::string::npos);

    RunResult bad = run("two-k7 " + shellquote(to_graph6(cycle_graph(9))) + " 0,1,2,3,4,5,6 0,1,2,3,4,5,7");
    CHECK(bad.exit_code == 1);

    RunResult prof = run("profile " + shellquote(to_graph6(cycle_graph(5))) + " 3");
    CHECK(prof.exit_code == 0);
    CHECK(prof.out.find("ALPHA-VIOLATION") != std::string::npos);
    CHECK(prof.out.find("not-k-contraction-critical") != std::string::npos);
}

TEST_CASE("extremal subcommand verdicts") {
    CHECK(run("extremal " + shellquote(to_graph6(complete_graph(9)))).out.find("minor-branch") == 0);
    CHECK(run("extremal " + shellquote(to_graph6(complete_graph(8)))).out.find("cockade-branch") == 0);
    RunResult low = run("extremal " + shellquote(to_graph6(petersen_graph())));
    CHECK(low.exit_code == 0);
    CHECK(low.out == "hypothesis-not-met\n");
}
