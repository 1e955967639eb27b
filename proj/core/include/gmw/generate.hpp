#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gmw/graph.hpp"

namespace gmw {

// Isomorph-free exhaustive generation of graphs with a given order and
// minimum degree, via canonical augmentation (one vertex added per level,
// children accepted only from their canonical parent).
//
// Dense targets (min_degree > (n-1)/2) are generated in the complement
// domain: graphs with max degree <= n-1-min_degree are enumerated and
// complemented on output.

struct GenParams {
    int n = 0;
    int min_degree = 0;
};

// Stream every isomorphism-class representative. The callback returns false
// to stop early.
void generate(const GenParams& params, const std::function<bool(const Graph&)>& sink);

// Count only.
long generate_count(const GenParams& params);

// Isomorphism classes with max degree <= max_deg on n vertices (the raw
// augmentation enumerator; used directly by the dual-generation check).
void enumerate_max_degree(int n, int max_deg, const std::function<bool(const Graph&)>& sink);

// Parallel/resumable decomposition: the augmentation tree is cut at an
// internal level; each root graph spans an independent subtree whose output
// is isomorph-free by construction.
struct GenUnit {
    Graph root;         // graph at the split level (in the working domain)
    long index = 0;     // position in the fixed unit order
};

// Split level used for (n): all units at level max(1, n-3).
int default_split_level(int n);

std::vector<GenUnit> generation_units(const GenParams& params, int split_level);

// Expand one unit to full order, streaming final graphs (already complemented
// back when working in the complement domain).
void expand_unit(const GenParams& params, const GenUnit& unit,
                 const std::function<bool(const Graph&)>& sink);

}  // namespace gmw
