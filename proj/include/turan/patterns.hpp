#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

// A cycle as its vertex sequence (cyclically closed, no repeats);
// consecutive entries, and the last/first pair, are adjacent in the host.
struct CycleWitness {
    std::vector<int> vertices;
    int length() const { return static_cast<int>(vertices.size()); }
};

// Two vertex-disjoint cycles plus one edge between them; bridge.first lies
// on cycle1, bridge.second on cycle2.
struct LinkedPairWitness {
    CycleWitness cycle1;
    CycleWitness cycle2;
    std::pair<int, int> bridge{-1, -1};
};

// The forbidden configurations handled by is_free:
//   linked(k, l)   — vertex-disjoint C_k and C_l joined by at least one edge
//   union(k, l)    — vertex-disjoint C_k and C_l (no edge required)
//   t_cycles(t)    — t pairwise vertex-disjoint cycles of arbitrary lengths
//   theta4         — a 4-cycle with a chord (K4 minus an edge)
struct PatternSpec {
    enum class Kind { linked, cycle_union, t_cycles, theta4 };
    Kind kind = Kind::linked;
    int k = 0;
    int l = 0;
    int t = 0;

    static PatternSpec linked(int k, int l);
    static PatternSpec cycle_union(int k, int l);
    static PatternSpec disjoint_cycles(int t);
    static PatternSpec theta();

    // "linked(3,4)", "union(3,3)", "t_cycles(3)", "theta4"
    std::string name() const;
};

// All k-cycles of g, each exactly once up to rotation and reflection
// (listed from their smallest vertex, second entry smaller than the last),
// in lexicographic order. k outside [3, n] yields an empty list.
std::vector<CycleWitness> find_cycles(const Graph& g, int k);

// First witness, in the deterministic search order, of vertex-disjoint
// C_k and C_l with an edge between them; the relation is symmetric in
// (k, l), so one orientation is checked.
std::optional<LinkedPairWitness> find_linked_pair(const Graph& g, int k, int l);

// Same without requiring the connecting edge.
std::optional<std::pair<CycleWitness, CycleWitness>> find_disjoint_union(
    const Graph& g, int k, int l);

// A maximum packing of vertex-disjoint cycles (any lengths).
struct CyclePacking {
    int count = 0;
    std::vector<CycleWitness> cycles;
};

// Exact maximum cycle packing by memoized search over vertex masks.
// Throws std::invalid_argument when n > 12.
CyclePacking max_disjoint_cycles(const Graph& g);

// True iff some edge has two common neighbors (equivalently, g contains a
// 4-cycle with a chord).
bool contains_theta4(const Graph& g);

// True iff g contains no copy of the pattern. Allocation-free on the
// negative-evidence path, so safe inside tight search loops. t_cycles
// inherits the n <= 12 bound of max_disjoint_cycles.
bool is_free(const Graph& g, const PatternSpec& pattern);

}  // namespace turan
