#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "turan/constructions.hpp"
#include "turan/embedding.hpp"
#include "turan/graph.hpp"
#include "turan/patterns.hpp"

using namespace turan;

namespace {

Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

bool planar(const Graph& g) { return planarity_embed(g).has_value(); }

}  // namespace

TEST_CASE("pattern_of names the detector for each family") {
    CHECK(pattern_of(FormulaPattern::c3c3).name() == "linked(3,3)");
    CHECK(pattern_of(FormulaPattern::c3c4).name() == "linked(3,4)");
    CHECK(pattern_of(FormulaPattern::two_c3).name() == "union(3,3)");
    CHECK(pattern_of(FormulaPattern::c3_union_c4).name() == "union(3,4)");
    CHECK(pattern_of(FormulaPattern::t_cycles, 3).name() == "t_cycles(3)");
    CHECK(pattern_of(FormulaPattern::t_cycles, 5).name() == "t_cycles(5)");
}

TEST_CASE("turan_formula pins the published values") {
    const std::vector<int> c33{3, 6, 9, 11, 13, 15};   // n = 3..8
    const std::vector<int> c34{3, 6, 9, 12, 14, 16};
    for (int n = 3; n <= 8; ++n) {
        CHECK(turan_formula(n, FormulaPattern::c3c3) == c33[n - 3]);
        CHECK(turan_formula(n, FormulaPattern::two_c3) == c33[n - 3]);
        CHECK(turan_formula(n, FormulaPattern::c3c4) == c34[n - 3]);
        CHECK(turan_formula(n, FormulaPattern::t_cycles) == 3 * n - 6);
    }
    // Ceiling vs floor on odd n.
    CHECK(turan_formula(9, FormulaPattern::c3c3) == 18);   // ceil(45/2) - 5
    CHECK(turan_formula(9, FormulaPattern::c3c4) == 18);   // floor(45/2) - 4
    CHECK(turan_formula(100, FormulaPattern::c3c3) == 245);
    CHECK(turan_formula(100, FormulaPattern::c3c4) == 246);
    CHECK(turan_formula(101, FormulaPattern::c3c3) == 248);
    CHECK(turan_formula(101, FormulaPattern::c3c4) == 248);
}

TEST_CASE("the two c3_union_c4 candidates differ exactly from n = 8 on") {
    for (int n = 3; n <= 40; ++n) {
        for (FormulaPattern p : {FormulaPattern::c3c3, FormulaPattern::c3c4,
                                 FormulaPattern::two_c3, FormulaPattern::t_cycles})
            CHECK(turan_formula(n, p) == turan_formula_alternate(n, p));
        int lo = turan_formula(n, FormulaPattern::c3_union_c4);
        int hi = turan_formula_alternate(n, FormulaPattern::c3_union_c4);
        if (n <= 7) {
            CHECK(lo == hi);
            CHECK(lo == turan_formula(n, FormulaPattern::c3c4));
        } else {
            CHECK(hi == lo + 1);
            CHECK(hi == turan_formula(n, FormulaPattern::c3c4));
        }
    }
    ExtremalSpec spec = extremal_spec(FormulaPattern::c3c3, 10);
    CHECK(spec.pattern == FormulaPattern::c3c3);
    CHECK(spec.n == 10);
    CHECK(spec.expected_edges == 20);
}

TEST_CASE("double_wheel is a maximal planar graph without three disjoint cycles") {
    CHECK(are_isomorphic(double_wheel(5), named_graph("b1_c33")));
    for (int n : {5, 6, 8, 10, 12}) {
        Graph g = double_wheel(n);
        CHECK(g.vertex_count() == n);
        CHECK(g.edge_count() == 3 * n - 6);
        CHECK(planar(g));
        if (n <= 12) CHECK(max_disjoint_cycles(g).count <= 2);
        CHECK(is_free(g, PatternSpec::disjoint_cycles(3)));
    }
    CHECK_THROWS_AS(double_wheel(4), std::invalid_argument);
}

TEST_CASE("c3c3_extremal hits the formula and avoids both pair patterns") {
    for (int n = 7; n <= 40; ++n) {
        Graph g = c3c3_extremal(n);
        CHECK(g.vertex_count() == n);
        CHECK(g.edge_count() == turan_formula(n, FormulaPattern::c3c3));
        CHECK(planar(g));
        CHECK(is_free(g, PatternSpec::linked(3, 3)));
        // Every triangle shares the path apex, so even the unlinked pair
        // cannot appear.
        CHECK(is_free(g, PatternSpec::cycle_union(3, 3)));
    }
    CHECK_THROWS_AS(c3c3_extremal(6), std::invalid_argument);
}

TEST_CASE("c3c4_extremal hits the formula and avoids both pair patterns") {
    for (int n = 8; n <= 40; ++n) {
        Graph g = c3c4_extremal(n);
        CHECK(g.vertex_count() == n);
        CHECK(g.edge_count() == turan_formula(n, FormulaPattern::c3c4));
        CHECK(planar(g));
        CHECK(is_free(g, PatternSpec::linked(3, 4)));
        CHECK(is_free(g, PatternSpec::cycle_union(3, 4)));
    }
    // Even instances split as e = 5t + 11 with n = 2t + 6.
    for (int t = 1; t <= 6; ++t)
        CHECK(c3c4_extremal(2 * t + 6).edge_count() == 5 * t + 11);
    CHECK_THROWS_AS(c3c4_extremal(7), std::invalid_argument);
}

TEST_CASE("small extremal witnesses below the general-formula thresholds") {
    for (int n = 3; n <= 6; ++n) {
        for (FormulaPattern p : {FormulaPattern::c3c3, FormulaPattern::two_c3}) {
            Graph g = small_extremal(n, p);
            CHECK(g.vertex_count() == n);
            CHECK(g.edge_count() == turan_formula(n, p));
            CHECK(planar(g));
            CHECK(is_free(g, pattern_of(p)));
        }
    }
    for (int n = 3; n <= 7; ++n) {
        for (FormulaPattern p : {FormulaPattern::c3c4, FormulaPattern::c3_union_c4}) {
            Graph g = small_extremal(n, p);
            CHECK(g.vertex_count() == n);
            CHECK(g.edge_count() == turan_formula(n, p));
            CHECK(planar(g));
            CHECK(is_free(g, pattern_of(p)));
        }
    }
    // Known witnesses at the corners.
    CHECK(are_isomorphic(small_extremal(4, FormulaPattern::c3c3), complete(4)));
    CHECK(are_isomorphic(small_extremal(5, FormulaPattern::c3c4),
                         named_graph("b1_c33")));
    CHECK(are_isomorphic(small_extremal(6, FormulaPattern::c3c3),
                         named_graph("b2_c33")));
    CHECK(are_isomorphic(small_extremal(7, FormulaPattern::c3c4),
                         named_graph("b4_c34")));

    CHECK_THROWS_AS(small_extremal(7, FormulaPattern::c3c3), std::invalid_argument);
    CHECK_THROWS_AS(small_extremal(8, FormulaPattern::c3c4), std::invalid_argument);
    CHECK_THROWS_AS(small_extremal(4, FormulaPattern::t_cycles), std::invalid_argument);
}

TEST_CASE("extremal_graph serves every n from 3 up") {
    for (int n = 3; n <= 30; ++n) {
        for (FormulaPattern p : {FormulaPattern::c3c3, FormulaPattern::c3c4,
                                 FormulaPattern::two_c3}) {
            Graph g = extremal_graph(p, n);
            CHECK(g.vertex_count() == n);
            CHECK(g.edge_count() == turan_formula(n, p));
            CHECK(planar(g));
            CHECK(is_free(g, pattern_of(p)));
        }
        // The union family rides the alternate (larger) candidate.
        Graph u = extremal_graph(FormulaPattern::c3_union_c4, n);
        CHECK(u.edge_count() == turan_formula_alternate(n, FormulaPattern::c3_union_c4));
        CHECK(planar(u));
        CHECK(is_free(u, PatternSpec::cycle_union(3, 4)));

        Graph t = extremal_graph(FormulaPattern::t_cycles, n);
        CHECK(t.edge_count() == 3 * n - 6);
        CHECK(planar(t));
        if (n <= 12) CHECK(is_free(t, PatternSpec::disjoint_cycles(3)));
    }
    CHECK_THROWS_AS(extremal_graph(FormulaPattern::c3c3, 2), std::invalid_argument);
}

TEST_CASE("named_graph fixtures have their defining shapes") {
    CHECK(named_graph("theta4").vertex_count() == 4);
    CHECK(named_graph("theta4").edge_count() == 5);
    CHECK(contains_theta4(named_graph("theta4")));

    CHECK(named_graph("prism").edge_count() == 9);
    CHECK(!is_free(named_graph("prism"), PatternSpec::linked(3, 3)));

    CHECK(named_graph("bowtie").edge_count() == 6);
    CHECK(is_free(named_graph("bowtie"), PatternSpec::linked(3, 3)));

    CHECK(named_graph("paw").vertex_count() == 4);
    CHECK(named_graph("paw").edge_count() == 4);

    CHECK(named_graph("octahedron").edge_count() == 12);
    for (int v = 0; v < 6; ++v) CHECK(named_graph("octahedron").degree(v) == 4);

    CHECK(are_isomorphic(named_graph("fan3"), join(Graph(1), [] {
        Graph p(3);
        p.add_edge(0, 1);
        p.add_edge(1, 2);
        return p;
    }())));
    CHECK(named_graph("fan4").vertex_count() == 5);
    CHECK(named_graph("fan4").edge_count() == 7);
    CHECK(named_graph("wheel4").edge_count() == 8);
    CHECK(named_graph("wheel5").vertex_count() == 6);
    CHECK(named_graph("wheel5").edge_count() == 10);

    CHECK(named_graph("b1_c33").edge_count() == 9);
    CHECK(are_isomorphic(named_graph("b1_c33"), [] {
        Graph g = complete(5);
        g.remove_edge(0, 1);
        return g;
    }()));
    CHECK(named_graph("b2_c33").edge_count() == 11);
    CHECK(named_graph("b2_c34").edge_count() == 12);
    CHECK(named_graph("b4_c34").edge_count() == 14);

    CHECK_THROWS_AS(named_graph("flower"), std::invalid_argument);
    CHECK_THROWS_AS(named_graph("fan"), std::invalid_argument);
    CHECK_THROWS_AS(named_graph("wheel99x"), std::invalid_argument);
}
