#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gmw/coloring.hpp"
#include "gmw/graph.hpp"

namespace gmw {

enum class PieceKind { K8, K22222 };

// Standard labeling of a piece: K8 is complete on 0..7; K22222 has parts
// {2i, 2i+1} for i = 0..4 (every vertex misses exactly its partner).
Graph piece_graph(PieceKind kind);

struct Gluing {
    int piece = 0;                   // index of the piece being attached (>= 1)
    std::array<int, 5> piece_clique{};  // local vertex ids, a 5-clique of the piece
    std::array<int, 5> host_clique{};   // build-graph vertex ids, identified pairwise
};

// Build tree for a (K8, K22222, 5)-cockade: pieces glued one at a time onto a
// 5-clique of the graph built so far. Piece 0 is the root; piece i >= 1 has
// exactly one gluing.
struct CockadePlan {
    std::vector<PieceKind> pieces;
    std::vector<Gluing> gluings;  // gluings[i-1] attaches piece i
};

// Successive identification per the plan. Fresh vertices of piece i are
// numbered in ascending local order after the existing build vertices.
// Throws if a gluing target is not a clique or the plan is malformed.
Graph build_cockade(const CockadePlan& plan);

// Decision procedure: recursive 5-clique-separator splitting with base cases
// isomorphic to K8 or K22222. The returned plan rebuilds a graph isomorphic
// to G.
std::optional<CockadePlan> recognize_cockade(const Graph& g);

// Proper coloring of build_cockade(plan) with at most 8 colors, built piece
// by piece with palette permutations agreeing on each shared 5-clique.
Coloring cockade_coloring(const CockadePlan& plan);

// Line-oriented plan serialization:
//   pieces: K8 K22222 K8
//   glue: 1 0 1 2 3 4 -> 0 1 2 3 4
// One glue line per piece after the first; local clique ids left of "->",
// host build ids right.
std::string plan_to_text(const CockadePlan& plan);
CockadePlan plan_from_text(const std::string& text);

}  // namespace gmw
