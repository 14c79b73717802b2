#include "turan/constructions.hpp"

#include <charconv>
#include <stdexcept>
#include <string>

namespace turan {

namespace {

Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph cycle(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph k5_minus_e() {
    Graph g = complete(5);
    g.remove_edge(0, 1);
    return g;
}

// Hub 0, rim 1..4 in a cycle, chord 1-3, and a sixth vertex joined to 1
// and 3. The unique 11-edge witness at n = 6 for the C3-C3 families.
Graph b2_c33() {
    Graph g(6);
    for (int i = 1; i <= 4; ++i) g.add_edge(0, i);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(3, 4);
    g.add_edge(4, 1);
    g.add_edge(1, 3);
    g.add_edge(5, 1);
    g.add_edge(5, 3);
    return g;
}

// Stacked 6-vertex triangulation: wheel on rim 1..5 plus chords 1-3, 1-4.
Graph b2_c34() {
    Graph g(6);
    for (int i = 1; i <= 5; ++i) {
        g.add_edge(0, i);
        g.add_edge(i, i % 5 + 1);
    }
    g.add_edge(1, 3);
    g.add_edge(1, 4);
    return g;
}

Graph octahedron() {
    Graph g(6);
    for (int i = 1; i <= 4; ++i) {
        g.add_edge(0, i);
        g.add_edge(5, i);
        g.add_edge(i, i % 4 + 1);
    }
    return g;
}

// Hub 0, rim path 1..6, chords 1-5, 2-5, 3-5; 14 edges, one 4-face.
Graph b4_c34() {
    Graph g(7);
    for (int i = 1; i <= 6; ++i) g.add_edge(0, i);
    for (int i = 1; i <= 5; ++i) g.add_edge(i, i + 1);
    g.add_edge(1, 5);
    g.add_edge(2, 5);
    g.add_edge(3, 5);
    return g;
}

Graph fan(int k) {
    if (k < 2) throw std::invalid_argument("fan needs at least 2 rim vertices");
    Graph g(k + 1);
    for (int i = 1; i <= k; ++i) g.add_edge(0, i);
    for (int i = 1; i < k; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph wheel(int k) {
    if (k < 3) throw std::invalid_argument("wheel needs at least 3 rim vertices");
    Graph g(k + 1);
    for (int i = 1; i <= k; ++i) {
        g.add_edge(0, i);
        g.add_edge(i, i % k + 1);
    }
    return g;
}

Graph prism() {
    Graph g(6);
    for (int i = 0; i < 3; ++i) {
        g.add_edge(i, (i + 1) % 3);
        g.add_edge(3 + i, 3 + (i + 1) % 3);
        g.add_edge(i, 3 + i);
    }
    return g;
}

Graph bowtie() {
    Graph g(5);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 0);
    g.add_edge(2, 3);
    g.add_edge(3, 4);
    g.add_edge(4, 2);
    return g;
}

Graph paw() {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 0);
    g.add_edge(2, 3);
    return g;
}

Graph theta4() {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(3, 0);
    g.add_edge(1, 3);
    return g;
}

int formula(int n, FormulaPattern p, bool alternate) {
    if (n < 3) throw std::invalid_argument("turan_formula: n must be >= 3");
    switch (p) {
        case FormulaPattern::c3c3:
        case FormulaPattern::two_c3:
            if (n <= 5) return 3 * n - 6;
            if (n == 6) return 11;
            return (5 * n + 1) / 2 - 5;
        case FormulaPattern::c3c4:
            if (n <= 6) return 3 * n - 6;
            if (n == 7) return 14;
            return 5 * n / 2 - 4;
        case FormulaPattern::c3_union_c4:
            if (n <= 6) return 3 * n - 6;
            if (n == 7) return 14;
            return 5 * n / 2 - (alternate ? 4 : 5);
        case FormulaPattern::t_cycles:
            return 3 * n - 6;
    }
    throw std::invalid_argument("turan_formula: unknown pattern");
}

}  // namespace

PatternSpec pattern_of(FormulaPattern p, int t) {
    switch (p) {
        case FormulaPattern::c3c3: return PatternSpec::linked(3, 3);
        case FormulaPattern::c3c4: return PatternSpec::linked(3, 4);
        case FormulaPattern::two_c3: return PatternSpec::cycle_union(3, 3);
        case FormulaPattern::c3_union_c4: return PatternSpec::cycle_union(3, 4);
        case FormulaPattern::t_cycles: return PatternSpec::disjoint_cycles(t);
    }
    throw std::invalid_argument("pattern_of: unknown pattern");
}

int turan_formula(int n, FormulaPattern p) { return formula(n, p, false); }

int turan_formula_alternate(int n, FormulaPattern p) { return formula(n, p, true); }

ExtremalSpec extremal_spec(FormulaPattern p, int n) {
    return ExtremalSpec{p, n, turan_formula(n, p)};
}

Graph double_wheel(int n) {
    if (n < 5) throw std::invalid_argument("double_wheel: n must be >= 5");
    return join(Graph(2), cycle(n - 2));
}

Graph c3c3_extremal(int n) {
    if (n < 7) throw std::invalid_argument("c3c3_extremal: n must be >= 7");
    int k = n - 2;  // path vertices 0..k-1
    Graph g = path(k);
    g.add_vertex();  // u = k
    g.add_vertex();  // v = k + 1
    for (int i = 0; i < k; ++i) g.add_edge(k, i);
    g.add_edge(k, k + 1);
    // Maximum independent set of the path containing both endpoints:
    // odd k takes every other vertex; even k swaps the tail to reach the end.
    if (k % 2 == 1) {
        for (int i = 0; i < k; i += 2) g.add_edge(k + 1, i);
    } else {
        for (int i = 0; i <= k - 4; i += 2) g.add_edge(k + 1, i);
        g.add_edge(k + 1, k - 1);
    }
    return g;
}

Graph c3c4_extremal(int n) {
    if (n < 8) throw std::invalid_argument("c3c4_extremal: n must be >= 8");
    int even = n - n % 2;
    int t = (even - 6) / 2;
    Graph g(even);
    for (int i = 1; i < even; ++i) g.add_edge(0, i);
    for (int i = 1; i <= 4; ++i) g.add_edge(i, i + 1);
    for (int j = 0; j < t; ++j) g.add_edge(6 + 2 * j, 7 + 2 * j);
    for (int i = 1; i < even; ++i)
        if (i != 3 && !g.has_edge(3, i)) g.add_edge(3, i);
    if (n % 2 == 1) {
        int w = g.add_vertex();
        g.add_edge(w, 0);
        g.add_edge(w, 3);
    }
    return g;
}

Graph small_extremal(int n, FormulaPattern p) {
    bool c4_family =
        p == FormulaPattern::c3c4 || p == FormulaPattern::c3_union_c4;
    if (p == FormulaPattern::t_cycles || n < 3 || n > (c4_family ? 7 : 6))
        throw std::invalid_argument("small_extremal: out of range");
    if (n <= 4) return complete(n);
    if (n == 5) return k5_minus_e();
    if (n == 6) return c4_family ? octahedron() : b2_c33();
    return b4_c34();
}

Graph extremal_graph(FormulaPattern p, int n) {
    if (n < 3) throw std::invalid_argument("extremal_graph: n must be >= 3");
    switch (p) {
        case FormulaPattern::c3c3:
        case FormulaPattern::two_c3:
            return n <= 6 ? small_extremal(n, p) : c3c3_extremal(n);
        case FormulaPattern::c3c4:
        case FormulaPattern::c3_union_c4:
            return n <= 7 ? small_extremal(n, p) : c3c4_extremal(n);
        case FormulaPattern::t_cycles:
            return n <= 4 ? complete(n) : double_wheel(n);
    }
    throw std::invalid_argument("extremal_graph: unknown pattern");
}

Graph named_graph(std::string_view name) {
    auto indexed = [&](std::string_view prefix, int& k) {
        if (name.size() <= prefix.size() || name.substr(0, prefix.size()) != prefix)
            return false;
        auto digits = name.substr(prefix.size());
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
        return ec == std::errc() && ptr == digits.data() + digits.size();
    };
    int k = 0;
    if (indexed("fan", k)) return fan(k);
    if (indexed("wheel", k)) return wheel(k);
    if (name == "theta4") return theta4();
    if (name == "prism") return prism();
    if (name == "bowtie") return bowtie();
    if (name == "paw") return paw();
    if (name == "octahedron") return octahedron();
    if (name == "b1_c33" || name == "b1_c34") return k5_minus_e();
    if (name == "b2_c33") return b2_c33();
    if (name == "b3_c33") return complete(4);
    if (name == "b2_c34") return b2_c34();
    if (name == "b3_c34") return octahedron();
    if (name == "b4_c34") return b4_c34();
    throw std::invalid_argument("named_graph: unknown name '" + std::string(name) + "'");
}

}  // namespace turan
