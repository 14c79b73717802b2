#pragma once

#include <string_view>

#include "turan/graph.hpp"
#include "turan/patterns.hpp"

namespace turan {

// The pattern families with closed-form extremal edge counts.
enum class FormulaPattern { c3c3, c3c4, two_c3, c3_union_c4, t_cycles };

// The detector pattern for each family (t used only for t_cycles, t >= 3).
PatternSpec pattern_of(FormulaPattern p, int t = 3);

// Closed-form maximum edge counts (n >= 3):
//   c3c3, two_c3     3n-6 (n<=5), 11 (n=6), ceil(5n/2)-5 (n>=7)
//   c3c4             3n-6 (n<=6), 14 (n=7), floor(5n/2)-4 (n>=8)
//   c3_union_c4      3n-6 (n<=6), 14 (n=7), floor(5n/2)-5 (n>=8)
//   t_cycles         3n-6
// Two published candidates disagree for c3_union_c4 at n >= 8:
// turan_formula carries floor(5n/2)-5 and turan_formula_alternate carries
// floor(5n/2)-4; the exhaustive verifier adjudicates between them. The two
// functions agree on every other family.
int turan_formula(int n, FormulaPattern p);
int turan_formula_alternate(int n, FormulaPattern p);

struct ExtremalSpec {
    FormulaPattern pattern;
    int n = 0;
    int expected_edges = 0;
};
ExtremalSpec extremal_spec(FormulaPattern p, int n);

// 2K1 joined to C_{n-2}; 3n-6 edges, planar, and no three disjoint cycles.
// Requires n >= 5.
Graph double_wheel(int n);

// The linked(3,3)-free family for n >= 7: path 0..n-3, apex u = n-2
// adjacent to the whole path, apex v = n-1 adjacent to u and to a maximum
// independent set of the path containing both ends. ceil(5n/2)-5 edges.
Graph c3c3_extremal(int n);

// The linked(3,4)-free family for n >= 8. Even n = 2t+6: hub 0, rim path
// 1..5, then t adjacent pairs, every vertex joined to the hub, and vertex 3
// joined to everything else last. Odd n adds one vertex adjacent to 0 and 3
// only. floor(5n/2)-4 edges.
Graph c3c4_extremal(int n);

// Exact extremal witnesses below each family's general-formula threshold
// (3..6 for the C3-C3 families, 3..7 for the C3-C4 families). Throws
// std::invalid_argument outside the range or for t_cycles.
Graph small_extremal(int n, FormulaPattern p);

// The witness family emitted by the CLI for any n >= 3: small_extremal
// below threshold, the general construction above it (double_wheel or
// complete graphs for t_cycles). For c3_union_c4 the emitted graph has
// turan_formula_alternate(n) edges.
Graph extremal_graph(FormulaPattern p, int n);

// Fixtures and catalog entries: "fan<k>", "wheel<k>" (k rim vertices),
// "theta4", "prism", "bowtie", "paw", "octahedron", and the reconstructed
// special blocks "b1_c33", "b2_c33", "b3_c33", "b1_c34", "b2_c34",
// "b3_c34", "b4_c34". Throws std::invalid_argument on unknown names.
Graph named_graph(std::string_view name);

}  // namespace turan
