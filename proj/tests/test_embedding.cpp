#include "doctest.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "turan/embedding.hpp"
#include "turan/graph.hpp"

using namespace turan;

namespace {

Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph cycle(int n) {
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

Graph petersen() {
    Graph g(10);
    for (int v = 0; v < 5; ++v) {
        g.add_edge(v, (v + 1) % 5);          // outer 5-cycle
        g.add_edge(5 + v, 5 + (v + 2) % 5);  // inner pentagram
        g.add_edge(v, 5 + v);                // spokes
    }
    return g;
}

Graph from_mask(int n, unsigned mask) {
    Graph g(n);
    int bit = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bit)
            if (mask >> bit & 1) g.add_edge(u, v);
    return g;
}

// Adjacency-preserving injection of `pat` into `host` by backtracking.
bool contains_subgraph(const Graph& host, const Graph& pat) {
    int np = pat.vertex_count(), nh = host.vertex_count();
    if (np > nh || pat.edge_count() > host.edge_count()) return false;
    std::vector<int> img(np, -1);
    std::vector<bool> used(nh, false);
    auto rec = [&](auto&& self, int d) -> bool {
        if (d == np) return true;
        for (int h = 0; h < nh; ++h) {
            if (used[h] || host.degree(h) < pat.degree(d)) continue;
            bool ok = true;
            for (int p = 0; p < d && ok; ++p)
                if (pat.has_edge(d, p) && !host.has_edge(h, img[p])) ok = false;
            if (!ok) continue;
            img[d] = h;
            used[h] = true;
            if (self(self, d + 1)) return true;
            used[h] = false;
        }
        return false;
    };
    return rec(rec, 0);
}

// Exact planarity for n <= 6: the only Kuratowski subdivisions that fit are
// K5, K5 with one edge subdivided, and K3,3.
bool planar_by_kuratowski6(const Graph& g) {
    REQUIRE(g.vertex_count() <= 6);
    static const Graph k5 = complete(5);
    static const Graph k33 = complete_bipartite(3, 3);
    static const Graph k5sub = [] {
        Graph h = complete(5);
        h.remove_edge(0, 1);
        int w = h.add_vertex();
        h.add_edge(0, w);
        h.add_edge(1, w);
        return h;
    }();
    return !contains_subgraph(g, k5) && !contains_subgraph(g, k33) &&
           !contains_subgraph(g, k5sub);
}

// Independent face-orbit counter: darts (u, v) with successor (v, w), w the
// predecessor of u around v.
int count_face_orbits(const RotationSystem& rs) {
    std::set<std::pair<int, int>> seen;
    int orbits = 0;
    for (int v = 0; v < rs.size(); ++v)
        for (int u : rs.order[v]) {
            if (seen.count({v, u})) continue;
            ++orbits;
            int cu = v, cv = u;
            while (!seen.count({cu, cv})) {
                seen.insert({cu, cv});
                const auto& ord = rs.order[cv];
                int i = static_cast<int>(std::find(ord.begin(), ord.end(), cu) -
                                         ord.begin());
                int w = ord[(i + ord.size() - 1) % ord.size()];
                cu = cv;
                cv = w;
            }
        }
    return orbits;
}

// Planarity of a rotation system checked per component with its own Euler
// count (edgeless components must contribute nothing).
bool oracle_planar_rotation(const Graph& g, const RotationSystem& rs) {
    std::vector<int> comp = component_ids(g);
    int nc = g.vertex_count() ? 1 + *std::max_element(comp.begin(), comp.end()) : 0;
    std::vector<int> cn(nc, 0), ce(nc, 0), cf(nc, 0);
    for (int v = 0; v < g.vertex_count(); ++v) cn[comp[v]] += 1;
    for (auto [u, v] : g.edges()) ce[comp[u]] += 1;

    // Orbit counting again, but attributing each orbit to its component.
    std::set<std::pair<int, int>> seen;
    for (int v = 0; v < rs.size(); ++v)
        for (int u : rs.order[v]) {
            if (seen.count({v, u})) continue;
            cf[comp[v]] += 1;
            int cu = v, cv = u;
            while (!seen.count({cu, cv})) {
                seen.insert({cu, cv});
                const auto& ord = rs.order[cv];
                int i = static_cast<int>(std::find(ord.begin(), ord.end(), cu) -
                                         ord.begin());
                int w = ord[(i + ord.size() - 1) % ord.size()];
                cu = cv;
                cv = w;
            }
        }
    for (int c = 0; c < nc; ++c) {
        if (ce[c] == 0 && cf[c] != 0) return false;
        if (ce[c] > 0 && cn[c] - ce[c] + cf[c] != 2) return false;
    }
    return true;
}

// Serialization of a rotation system up to per-vertex cyclic shifts; the
// reflection reverses every rotation.
std::string rotation_key(const RotationSystem& rs, bool reflected) {
    std::string key;
    for (const auto& ord0 : rs.order) {
        std::vector<int> ord = ord0;
        if (reflected) std::reverse(ord.begin(), ord.end());
        if (!ord.empty()) {
            auto mn = std::min_element(ord.begin(), ord.end());
            std::rotate(ord.begin(), mn, ord.end());
        }
        for (int w : ord) key += std::to_string(w) + ",";
        key += ";";
    }
    return key;
}

// Count planar embeddings up to global reflection by brute force over all
// rotation systems (first neighbor pinned per vertex).
int oracle_embedding_count(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::vector<int>> nbrs(n);
    for (int v = 0; v < n; ++v)
        for (int w : g.neighbors(v)) nbrs[v].push_back(w);

    std::set<std::string> classes;
    RotationSystem rs;
    rs.order.resize(n);
    auto rec = [&](auto&& self, int v) -> void {
        if (v == n) {
            if (oracle_planar_rotation(g, rs))
                classes.insert(std::min(rotation_key(rs, false),
                                        rotation_key(rs, true)));
            return;
        }
        if (nbrs[v].size() <= 2) {
            rs.order[v] = nbrs[v];
            self(self, v + 1);
            return;
        }
        std::vector<int> rest(nbrs[v].begin() + 1, nbrs[v].end());
        std::sort(rest.begin(), rest.end());
        do {
            rs.order[v].assign(1, nbrs[v][0]);
            rs.order[v].insert(rs.order[v].end(), rest.begin(), rest.end());
            self(self, v + 1);
        } while (std::next_permutation(rest.begin(), rest.end()));
    };
    rec(rec, 0);
    return static_cast<int>(classes.size());
}

std::vector<int> sorted_face_sizes(const std::vector<Face>& faces) {
    std::vector<int> sizes;
    for (const auto& f : faces) sizes.push_back(f.size());
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

}  // namespace

TEST_CASE("planarity_embed accepts small planar graphs with valid rotations") {
    for (const Graph& g : {complete(4), cycle(5), path(6), complete_bipartite(2, 3),
                           Graph(0), Graph(3)}) {
        auto rs = planarity_embed(g);
        REQUIRE(rs.has_value());
        CHECK(euler_per_component(g, *rs));
        // The trace must cover each edge exactly twice; face_stats enforces it.
        auto faces = trace_faces(*rs);
        CHECK_NOTHROW(face_stats(faces, g));
    }
}

TEST_CASE("planarity_embed rejects the classical obstructions") {
    CHECK(!planarity_embed(complete(5)).has_value());
    CHECK(!planarity_embed(complete_bipartite(3, 3)).has_value());
    CHECK(!planarity_embed(petersen()).has_value());
    CHECK(!planarity_embed(complete(6)).has_value());

    // K5 with one subdivided edge: still nonplanar, now sparse enough to
    // pass the edge-count prefilter.
    Graph k5s = complete(5);
    k5s.remove_edge(0, 1);
    int w = k5s.add_vertex();
    k5s.add_edge(0, w);
    k5s.add_edge(1, w);
    CHECK(!planarity_embed(k5s).has_value());

    // A nonplanar component hides among planar ones.
    Graph mix(9);
    for (int u = 0; u < 3; ++u)
        for (int v = 3; v < 6; ++v) mix.add_edge(u, v);
    mix.add_edge(6, 7);
    mix.add_edge(7, 8);
    mix.add_edge(6, 8);
    CHECK(!planarity_embed(mix).has_value());
}

TEST_CASE("planarity_embed matches a Kuratowski oracle on every 6-vertex graph") {
    int planar_count = 0;
    for (unsigned mask = 0; mask < (1u << 15); ++mask) {
        Graph g = from_mask(6, mask);
        bool want = planar_by_kuratowski6(g);
        auto rs = planarity_embed(g);
        REQUIRE(rs.has_value() == want);
        if (rs) {
            REQUIRE(euler_per_component(g, *rs));
            ++planar_count;
        }
    }
    CHECK(planar_count == 32071);  // labeled planar graphs on 6 vertices
}

TEST_CASE("planarity_embed is deterministic") {
    Graph g = from_mask(6, 0x5b6d);
    auto a = planarity_embed(g);
    auto b = planarity_embed(g);
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    CHECK(a->order == b->order);
}

TEST_CASE("face sizes count darts, so isthmuses count twice") {
    // A single edge has one face of size 2.
    auto pg2 = PlaneGraph::embed(path(2));
    CHECK(sorted_face_sizes(pg2.faces) == std::vector<int>{2});

    // A tree with e edges has one face of size 2e.
    auto star = PlaneGraph::embed(complete_bipartite(1, 4));
    CHECK(sorted_face_sizes(star.faces) == std::vector<int>{8});

    // Triangle with a pendant edge: inner 3-face and a 5-walk outside.
    Graph paw = cycle(3);
    int t = paw.add_vertex();
    paw.add_edge(2, t);
    auto pgp = PlaneGraph::embed(paw);
    CHECK(sorted_face_sizes(pgp.faces) == std::vector<int>{3, 5});

    auto pk4 = PlaneGraph::embed(complete(4));
    CHECK(sorted_face_sizes(pk4.faces) == std::vector<int>{3, 3, 3, 3});

    auto pc4 = PlaneGraph::embed(cycle(4));
    CHECK(sorted_face_sizes(pc4.faces) == std::vector<int>{4, 4});
}

TEST_CASE("face_stats tallies the edge-side identities") {
    auto pg = PlaneGraph::embed(complete(4));
    FaceStats fs = face_stats(pg.faces, pg.g);
    CHECK(fs.faces == 4);
    CHECK(fs.f(3) == 4);
    CHECK(fs.f(4) == 0);
    CHECK(fs.e(3) == 6);
    CHECK(fs.e(3, 3) == 6);

    Graph paw = cycle(3);
    int t = paw.add_vertex();
    paw.add_edge(2, t);
    FaceStats fp = face_stats(PlaneGraph::embed(paw).faces, paw);
    CHECK(fp.f(3) == 1);
    CHECK(fp.f(5) == 1);
    CHECK(fp.e(3) == 3);
    CHECK(fp.e(5) == 4);      // the isthmus has both sides on the 5-face
    CHECK(fp.e(3, 5) == 3);
    CHECK(fp.e(5, 5) == 1);

    // i*f(i) = e(i) + e(i,i) over every plane graph we can enumerate cheaply.
    for (unsigned mask = 0; mask < (1u << 10); ++mask) {
        Graph g = from_mask(5, mask);
        auto rs = planarity_embed(g);
        if (!rs) continue;
        FaceStats fs5 = face_stats(trace_faces(*rs), g);
        int twice_edges = 0;
        for (auto [i, cnt] : fs5.f_count) {
            CHECK(i * cnt == fs5.e(i) + fs5.e(i, i));
            twice_edges += i * cnt;
        }
        CHECK(twice_edges == 2 * g.edge_count());
    }
}

TEST_CASE("face_stats rejects traces that do not match the graph") {
    auto pg = PlaneGraph::embed(complete(4));
    auto faces = pg.faces;
    faces.pop_back();
    CHECK_THROWS_AS(face_stats(faces, pg.g), std::logic_error);
    CHECK_THROWS_AS(face_stats(pg.faces, cycle(4)), std::logic_error);
}

TEST_CASE("component ids follow discovery order from smallest vertices") {
    Graph g(6);
    g.add_edge(4, 5);
    g.add_edge(1, 2);
    auto comp = component_ids(g);
    CHECK(comp == std::vector<int>{0, 1, 1, 2, 3, 3});
}

TEST_CASE("euler_per_component checks each component separately") {
    // Two triangles: three orbits would satisfy the global count n-e+f=2
    // only summed wrongly; per component each needs exactly two orbits.
    Graph tt(6);
    for (auto [u, v] : {std::pair{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}})
        tt.add_edge(u, v);
    auto rs = planarity_embed(tt);
    REQUIRE(rs.has_value());
    CHECK(euler_per_component(tt, *rs));
    CHECK(static_cast<int>(trace_faces(*rs).size()) == 4);

    // An isolated vertex contributes no orbit.
    Graph ti = cycle(3);
    ti.add_vertex();
    auto rs2 = planarity_embed(ti);
    REQUIRE(rs2.has_value());
    CHECK(euler_per_component(ti, *rs2));
    CHECK(static_cast<int>(trace_faces(*rs2).size()) == 2);
}

TEST_CASE("enumerate_embeddings matches brute force over rotation systems") {
    Graph paw = cycle(3);
    {
        int t = paw.add_vertex();
        paw.add_edge(2, t);
    }
    Graph bowtie(5);
    for (auto [u, v] : {std::pair{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}})
        bowtie.add_edge(u, v);
    Graph two_triangles(6);
    for (auto [u, v] : {std::pair{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}})
        two_triangles.add_edge(u, v);
    Graph k5e = complete(5);
    k5e.remove_edge(0, 1);
    Graph k4_pendant = complete(4);
    {
        int t = k4_pendant.add_vertex();
        k4_pendant.add_edge(0, t);
    }
    Graph octa = join(Graph(2), cycle(4));

    const Graph cases[] = {path(2),   path(4),  cycle(3), paw,
                           complete(4), cycle(4), cycle(5), bowtie,
                           complete_bipartite(2, 3), two_triangles, k5e,
                           k4_pendant, join(Graph(1), cycle(5)), octa};
    for (const Graph& g : cases) {
        int want = oracle_embedding_count(g);
        int got = 0;
        bool finished = enumerate_embeddings(g, [&](const RotationSystem& rs) {
            CHECK(oracle_planar_rotation(g, rs));
            ++got;
            return true;
        });
        CHECK(finished);
        CHECK(got == want);
    }

    // 3-connected planar graphs embed uniquely up to reflection.
    CHECK(oracle_embedding_count(complete(4)) == 1);
    CHECK(oracle_embedding_count(join(Graph(1), cycle(5))) == 1);
    CHECK(oracle_embedding_count(octa) == 1);
}

TEST_CASE("enumerate_embeddings respects the early-stop protocol") {
    int seen = 0;
    bool finished = enumerate_embeddings(complete(4), [&](const RotationSystem&) {
        ++seen;
        return false;
    });
    CHECK(!finished);
    CHECK(seen == 1);

    // Nonplanar input yields nothing but still finishes.
    CHECK(enumerate_embeddings(complete(5), [&](const RotationSystem&) {
        CHECK(false);
        return true;
    }));

    CHECK_THROWS_AS(enumerate_embeddings(Graph(8), [](const RotationSystem&) {
        return true;
    }), std::invalid_argument);
}

TEST_CASE("PlaneGraph corners name the face of each outgoing dart") {
    // Hand-built K4: vertex 3 inside the triangle 0-1-2.
    Graph k4 = complete(4);
    RotationSystem rs;
    rs.order = {{1, 3, 2}, {2, 3, 0}, {0, 3, 1}, {0, 1, 2}};
    PlaneGraph pg = PlaneGraph::build(k4, rs);
    REQUIRE(static_cast<int>(pg.faces.size()) == 4);

    // corner_face[v][i] must be the face whose walk contains dart
    // (v, order[v][i]); check the advertised identity exhaustively.
    auto face_of_dart = [&](int u, int v) {
        for (int fi = 0; fi < static_cast<int>(pg.faces.size()); ++fi) {
            const auto& w = pg.faces[fi].walk;
            int k = static_cast<int>(w.size());
            for (int t = 0; t < k; ++t) {
                int a = w[t], b = w[(t + 1) % k];
                // walk holds dart tails; consecutive tails identify the dart
                if (a == u && b == v) return fi;
            }
        }
        return -1;
    };
    for (int v = 0; v < 4; ++v)
        for (int i = 0; i < 3; ++i)
            CHECK(pg.corner_face[v][i] == face_of_dart(v, pg.rs.order[v][i]));

    // Every face of this embedding is a triangle.
    CHECK(sorted_face_sizes(pg.faces) == std::vector<int>{3, 3, 3, 3});

    // Asymmetric rotations are rejected while tracing.
    RotationSystem bad;
    bad.order = {{1, 3, 2}, {2, 3, 0}, {0, 3, 1}, {0, 1}};
    CHECK_THROWS_AS(PlaneGraph::build(k4, bad), std::invalid_argument);

    CHECK_THROWS_AS(PlaneGraph::embed(complete(5)), std::invalid_argument);
}
