#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gmw/graph.hpp"

namespace gmw {

// Certified witness that H is a minor of G: one branch set per H-vertex.
struct BranchModel {
    std::vector<std::uint64_t> branch_sets;  // indexed by H-vertex
};

// Exact minor containment test with certificate. Deterministic for fixed
// inputs; absence is a normal outcome.
std::optional<BranchModel> has_minor(const Graph& g, const Graph& h);

// Certificate soundness check, independent of the search path: branch sets
// nonempty, pairwise disjoint, connected, and every H-edge realized.
bool check_model(const Graph& g, const Graph& h, const BranchModel& m);

// K9^= family entry point. Variant 0 removes two disjoint edges from K9,
// variant 1 two edges sharing an end (the kt_doubleminus order).
std::optional<std::pair<int, BranchModel>> has_k9eq_minor(const Graph& g);
std::optional<std::pair<int, BranchModel>> has_kteq_minor(const Graph& g, int t);

// Independent exhaustive oracle: enumerates unordered partitions of vertex
// subsets into connected blocks, then searches for a block assignment
// realizing H. Guarded to |G| <= 9, |H| <= 7.
bool brute_minor_oracle(const Graph& g, const Graph& h);

}  // namespace gmw
