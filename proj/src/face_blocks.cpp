#include "turan/face_blocks.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "turan/constructions.hpp"
#include "turan/patterns.hpp"

namespace turan {

namespace {

bool triangular(const PlaneGraph& pg, int face_id) {
    return pg.faces[face_id].size() == 3;
}

void require_no_linked_triangles(const Graph& g) {
    if (!is_free(g, PatternSpec::linked(3, 3)))
        throw std::invalid_argument(
            "host contains two disjoint triangles joined by an edge");
}

// Do all 3-faces at u belong to the hub star? Both lists are sorted.
bool star_contained(const PlaneGraph& pg, int u, const std::vector<int>& hub_star) {
    auto star = three_face_star(pg, u);
    return std::includes(hub_star.begin(), hub_star.end(), star.begin(), star.end());
}

}  // namespace

VertexSet RvStructure::vertices() const {
    VertexSet vs;
    vs.add(hub);
    for (const auto& part : rim)
        for (int w : part) vs.add(w);
    return vs;
}

std::vector<int> three_face_star(const PlaneGraph& pg, int v) {
    if (v < 0 || v >= pg.g.vertex_count())
        throw std::invalid_argument("vertex out of range");
    std::vector<int> out;
    for (int f : pg.corner_face[v])
        if (triangular(pg, f)) out.push_back(f);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> three_face_counts(const PlaneGraph& pg) {
    std::vector<int> counts(pg.g.vertex_count(), 0);
    for (int v = 0; v < pg.g.vertex_count(); ++v)
        for (int f : pg.corner_face[v])
            if (triangular(pg, f)) ++counts[v];
    return counts;
}

RvStructure rv_partition(const PlaneGraph& pg, int v) {
    RvStructure s;
    s.hub = v;
    s.three_faces = three_face_star(pg, v);
    if (s.three_faces.empty())
        throw std::invalid_argument("vertex lies on no 3-face");

    const auto& order = pg.rs.order[v];
    int d = static_cast<int>(order.size());
    std::vector<char> tri(d);
    for (int t = 0; t < d; ++t) tri[t] = triangular(pg, pg.corner_face[v][t]);

    if (std::find(tri.begin(), tri.end(), char{0}) == tri.end()) {
        s.wheel = true;
        s.part_sizes = {d};
        int at = static_cast<int>(
            std::min_element(order.begin(), order.end()) - order.begin());
        std::vector<int> cyc(d);
        for (int i = 0; i < d; ++i) cyc[i] = order[(at + i) % d];
        s.rim.push_back(std::move(cyc));
        return s;
    }

    struct Run {
        int start, len;
    };
    std::vector<Run> runs;
    for (int t = 0; t < d; ++t)
        if (tri[t] && !tri[(t + d - 1) % d]) {
            int len = 1;
            while (tri[(t + len) % d]) ++len;
            runs.push_back({t, len});
        }
    std::stable_sort(runs.begin(), runs.end(),
                     [](const Run& a, const Run& b) { return a.len > b.len; });
    for (const Run& r : runs) {
        s.part_sizes.push_back(r.len);
        std::vector<int> part(r.len + 1);
        for (int i = 0; i <= r.len; ++i) part[i] = order[(r.start + i) % d];
        s.rim.push_back(std::move(part));
    }
    return s;
}

std::vector<Block> block_decomposition(const PlaneGraph& pg) {
    int n = pg.g.vertex_count();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const Face& f : pg.faces)
        if (f.size() == 3) {
            parent[find(f.walk[1])] = find(f.walk[0]);
            parent[find(f.walk[2])] = find(f.walk[0]);
        }

    std::vector<Block> blocks;
    std::vector<int> slot(n, -1);
    for (int v = 0; v < n; ++v) {
        int r = find(v);
        if (slot[r] == -1) {
            slot[r] = static_cast<int>(blocks.size());
            blocks.emplace_back();
        }
        blocks[slot[r]].vertices.add(v);
    }
    for (int f = 0; f < static_cast<int>(pg.faces.size()); ++f)
        if (pg.faces[f].size() == 3)
            blocks[slot[find(pg.faces[f].walk[0])]].face_ids.push_back(f);
    for (Block& b : blocks) b.is_singleton = b.vertices.count() == 1;
    return blocks;
}

std::vector<BlockReport> block_report(const PlaneGraph& pg) {
    auto counts = three_face_counts(pg);
    int f3 = 0;
    for (const Face& f : pg.faces) f3 += f.size() == 3;
    if (std::accumulate(counts.begin(), counts.end(), 0) != 3 * f3)
        throw std::logic_error("3-face incidence total drifted from 3 f_3");

    static const std::vector<std::pair<std::string, Graph>> catalog = [] {
        std::vector<std::pair<std::string, Graph>> c;
        for (const char* name :
             {"b1_c33", "b2_c33", "b3_c33", "b2_c34", "b3_c34", "b4_c34"})
            c.emplace_back(name, named_graph(name));
        return c;
    }();

    std::vector<BlockReport> reports;
    for (Block& b : block_decomposition(pg)) {
        BlockReport r;
        r.sum = 0;
        for (int v : b.vertices) r.sum += counts[v];
        int cnt = b.vertices.count();
        r.bound = 3 * cnt;
        r.excess = r.sum - r.bound;
        r.classification = r.excess <= -3  ? BlockReport::Class::strict_good
                           : r.excess <= 0 ? BlockReport::Class::good
                                           : BlockReport::Class::bad;
        if (r.excess > -3 && cnt >= 4 && cnt <= 7) {
            Graph sub = induced_subgraph(pg.g, b.vertices);
            for (const auto& [name, fixture] : catalog)
                if (fixture.vertex_count() == sub.vertex_count() &&
                    fixture.edge_count() == sub.edge_count() &&
                    are_isomorphic(fixture, sub)) {
                    r.catalog_match = name;
                    break;
                }
        }
        r.block = std::move(b);
        reports.push_back(std::move(r));
    }
    return reports;
}

Lemma41Report lemma41_check(const PlaneGraph& pg) {
    Lemma41Report r;
    r.n = pg.g.vertex_count();
    if (r.n < 3) throw std::invalid_argument("lemma41_check: n must be >= 3");
    for (const Face& f : pg.faces) ++(f.size() == 3 ? r.f3 : r.m);
    r.bound = 2 * r.n - 2 * r.m - 4;
    r.pass = r.f3 <= r.bound && r.f3 != 2 * r.n - 5;
    return r;
}

PartitionLemmaReport partition_lemma_check(const PlaneGraph& pg, int v) {
    require_no_linked_triangles(pg.g);
    RvStructure s = rv_partition(pg, v);

    PartitionLemmaReport r;
    r.hub = v;
    int l = s.part_count();
    int k1 = s.part_sizes[0];
    int k2 = l >= 2 ? s.part_sizes[1] : 0;
    if ((l == 1 && k1 <= 4) || (l == 2 && k1 <= 3 && k1 + k2 <= 5) ||
        (l == 3 && k1 <= 2)) {
        r.vacuous = true;
        r.pass = true;
        return r;
    }
    for (int u : s.vertices())
        if (u != v && !star_contained(pg, u, s.three_faces)) r.failing.push_back(u);
    r.pass = r.failing.empty();
    return r;
}

RvLemmaReport rv_lemma_check(const PlaneGraph& pg, int v) {
    require_no_linked_triangles(pg.g);
    RvStructure s = rv_partition(pg, v);

    RvLemmaReport r;
    r.hub = v;
    VertexSet star = s.vertices();
    for (int u : star)
        if (u != v && !star_contained(pg, u, s.three_faces)) r.vacuous = true;

    for (const Block& b : block_decomposition(pg))
        if (b.vertices.contains(v)) r.block_match = b.vertices == star;
    auto counts = three_face_counts(pg);
    for (int u : star) r.sum += counts[u];
    r.bound = 3 * star.count() - 3;
    r.pass = r.vacuous || (r.block_match && r.sum <= r.bound);
    return r;
}

}  // namespace turan
