#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gmw/graph.hpp"

namespace gmw {

enum class DisjointnessMode {
    FullyDisjoint,
    DisjointExceptCommonEnd,      // fan from a hub: paths share only the hub
    DisjointExceptSharedEndpoints // linkage paths: shared declared endpoints only
};

struct PathSystem {
    std::vector<std::vector<int>> paths;  // vertex sequences
    DisjointnessMode mode = DisjointnessMode::FullyDisjoint;
};

// Check the PathSystem invariants against a host graph: consecutive vertices
// adjacent, and pairwise intersections as allowed by the mode. For the fan
// mode, `hub` is the shared end.
bool validate_path_system(const Graph& g, const PathSystem& ps, int hub = -1);

struct ConnectivityResult {
    int connectivity = 0;
    // A minimum separator when the graph is not complete; empty otherwise.
    std::vector<int> separator;
};

// Minimum number of vertices whose deletion disconnects G or reduces it to a
// single vertex. Unit-capacity max-flow over the vertex-split digraph, over
// all nonadjacent terminal pairs.
ConnectivityResult vertex_connectivity(const Graph& g);

struct DisjointPathsResult {
    std::optional<PathSystem> paths;
    std::vector<int> separator;  // < k vertices separating A from B on failure
};

// k pairwise vertex-disjoint A-B paths, or a Menger separator certifying
// impossibility. A vertex of A∩B may serve as a single-vertex path; those are
// emitted first. With DisjointExceptCommonEnd, A must be a single hub vertex
// and paths may share exactly that hub.
DisjointPathsResult disjoint_paths(const Graph& g, std::uint64_t a, std::uint64_t b, int k,
                                   DisjointnessMode mode = DisjointnessMode::FullyDisjoint);

}  // namespace gmw
