#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gmw/cockade.hpp"
#include "gmw/connectivity.hpp"
#include "gmw/generate.hpp"
#include "gmw/minor.hpp"

namespace gmw {

// ---- deletion-lemma replay -------------------------------------------------

struct VerifyOptions {
    int jobs = 1;
    // Checkpoint file: loaded when present (parameters must match), rewritten
    // as each contiguous prefix of generation units completes.
    std::string checkpoint_path;
    // Optional progress lines (informational only).
    std::function<void(const std::string&)> log;
};

struct VerificationReport {
    int n = 0, min_degree = 0, t = 0;
    long total_units = 0;
    long units_done = 0;
    long graphs_scanned = 0;
    long certificates_validated = 0;
    std::vector<std::string> counterexamples;  // graph6, in scan order
    double wall_seconds = 0.0;

    bool complete() const { return units_done == total_units; }
    bool lemma_holds() const { return complete() && counterexamples.empty(); }
};

// Scan every graph with |G| = n and min degree >= d; for each, search for a
// vertex y whose deletion leaves a K_t^= minor (each y tried exhaustively, so
// a reported counterexample really has no such vertex). Every found model is
// validated with check_model before being counted.
VerificationReport verify_deletion_lemma(int n, int d, int t, const VerifyOptions& opts = {});

// Deterministic text rendering; informational lines are '#'-prefixed and the
// rest is stable across resumptions and job counts.
std::string report_to_text(const VerificationReport& r);

// Per-graph verdict used by the desk-scale cross-checks: the chosen deletion
// vertex and variant, or nullopt when no vertex works.
std::optional<std::pair<int, int>> deletion_vertex(const Graph& g, int t);

// ---- extremal dichotomy ----------------------------------------------------

struct ExtremalVerdict {
    enum class Kind { HypothesisNotMet, MinorBranch, CockadeBranch, DichotomyViolated };
    Kind kind = Kind::HypothesisNotMet;
    int variant = -1;                    // minor branch: which K9^= member
    std::optional<BranchModel> model;    // minor branch certificate
    std::optional<CockadePlan> plan;     // cockade branch certificate
};

// If e(G) >= 6|G| - 20, establish the dichotomy branch with its certificate.
ExtremalVerdict scan_extremal(const Graph& g);

// ---- two-K7 construction ---------------------------------------------------

struct TwoK7Result {
    int variant = -1;
    BranchModel model;
    PathSystem paths;
};

// Constructive K9^= model from two distinct K7 subgraphs in a 7-connected
// host: either a 7-path fan from an outside vertex (|U1 ∩ U2| = 6) or seven
// disjoint U1-U2 paths, five contracted to vertices and two to edges.
// Throws std::invalid_argument naming the failing precondition.
TwoK7Result two_k7_to_k9eq(const Graph& g, std::uint64_t u1, std::uint64_t u2);

// ---- Kempe-chain linkage search -------------------------------------------

struct LinkageRequest {
    Graph graph;
    int hub = -1;                                // x
    std::uint64_t independent_set = 0;           // S ⊆ N(x), independent
    std::vector<std::pair<int, int>> missing;    // nonedges inside N(x) \ S
};

// One path per missing pair with all internal vertices outside N[x]; paths
// are pairwise internally disjoint and share at most declared endpoints.
// Absence (nullopt) means search exhaustion, not a refutation.
std::optional<PathSystem> find_linkage(const LinkageRequest& req);

}  // namespace gmw
