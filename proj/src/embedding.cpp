#include "turan/embedding.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace turan {

std::vector<int> component_ids(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    int next = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        comp[s] = next;
        std::vector<int> queue{s};
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            for (int w : g.neighbors(v))
                if (comp[w] == -1) {
                    comp[w] = next;
                    queue.push_back(w);
                }
        }
        ++next;
    }
    return comp;
}

namespace {

// Dart-level face tracing. Dart (u, i) points from u to order[u][i]; its
// successor rotates backwards around the head, per the rule in the header.
struct DartTrace {
    std::vector<Face> faces;
    std::vector<int> dart_face;  // flat dart index -> face index
    std::vector<int> off;        // off[v]: first flat dart index of v
};

DartTrace trace_darts(const RotationSystem& rs) {
    int n = rs.size();
    DartTrace t;
    t.off.resize(n + 1, 0);
    for (int v = 0; v < n; ++v)
        t.off[v + 1] = t.off[v] + static_cast<int>(rs.order[v].size());
    int darts = t.off[n];
    t.dart_face.assign(darts, -1);
    auto pos_of = [&rs](int v, int u) {
        const auto& ord = rs.order[v];
        for (int i = 0; i < static_cast<int>(ord.size()); ++i)
            if (ord[i] == u) return i;
        throw std::invalid_argument("rotation system inconsistent");
    };
    for (int v = 0; v < n; ++v) {
        for (int i = 0; i < static_cast<int>(rs.order[v].size()); ++i) {
            if (t.dart_face[t.off[v] + i] != -1) continue;
            int fid = static_cast<int>(t.faces.size());
            Face face;
            int cu = v, ci = i;
            do {
                t.dart_face[t.off[cu] + ci] = fid;
                face.walk.push_back(cu);
                int head = rs.order[cu][ci];
                int p = pos_of(head, cu);
                int d = static_cast<int>(rs.order[head].size());
                cu = head;
                ci = (p + d - 1) % d;
            } while (!(cu == v && ci == i));
            t.faces.push_back(std::move(face));
        }
    }
    return t;
}

}  // namespace

std::vector<Face> trace_faces(const RotationSystem& rs) {
    return trace_darts(rs).faces;
}

FaceStats face_stats(const std::vector<Face>& faces, const Graph& g) {
    FaceStats s;
    s.faces = static_cast<int>(faces.size());
    std::map<std::pair<int, int>, std::vector<int>> sides;
    for (const Face& f : faces) {
        s.f_count[f.size()] += 1;
        int k = f.size();
        for (int i = 0; i < k; ++i) {
            int u = f.walk[i], v = f.walk[(i + 1) % k];
            sides[{std::min(u, v), std::max(u, v)}].push_back(k);
        }
    }
    if (static_cast<int>(sides.size()) != g.edge_count())
        throw std::logic_error("face trace does not cover the edge set");
    for (auto& [e, sz] : sides) {
        if (sz.size() != 2)
            throw std::logic_error("edge not on exactly two face sides");
        int i = std::min(sz[0], sz[1]), j = std::max(sz[0], sz[1]);
        s.edge_pair[{i, j}] += 1;
        s.edge_on[i] += 1;
        if (j != i) s.edge_on[j] += 1;
    }
    return s;
}

bool euler_per_component(const Graph& g, const RotationSystem& rs) {
    int n = g.vertex_count();
    if (rs.size() != n) return false;
    std::vector<int> comp = component_ids(g);
    int nc = n == 0 ? 0 : 1 + *std::max_element(comp.begin(), comp.end());
    std::vector<int> cn(nc, 0), ce(nc, 0), cf(nc, 0);
    for (int v = 0; v < n; ++v) cn[comp[v]] += 1;
    for (auto [u, v] : g.edges()) ce[comp[u]] += 1;
    for (const Face& f : trace_faces(rs)) cf[comp[f.walk[0]]] += 1;
    for (int c = 0; c < nc; ++c) {
        if (ce[c] == 0) {
            if (cf[c] != 0) return false;
        } else if (cn[c] - ce[c] + cf[c] != 2) {
            return false;
        }
    }
    return true;
}

namespace {

// --- biconnected components (Hopcroft–Tarjan, iterative) ---

std::vector<std::vector<std::pair<int, int>>> biconnected_components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::vector<std::pair<int, int>>> blocks;
    std::vector<int> num(n, -1), low(n, 0), parent(n, -1);
    std::vector<std::pair<int, int>> estack;
    int counter = 0;
    struct Frame { int v; int last_nbr; };
    for (int s = 0; s < n; ++s) {
        if (num[s] != -1) continue;
        num[s] = counter++;
        low[s] = num[s];
        std::vector<Frame> st{{s, -1}};
        while (!st.empty()) {
            Frame& fr = st.back();
            int v = fr.v;
            int w = fr.last_nbr == -1 ? g.neighbors(v).first()
                                      : g.neighbors(v).next_after(fr.last_nbr);
            if (w == -1) {
                st.pop_back();
                if (!st.empty()) {
                    int u = st.back().v;
                    low[u] = std::min(low[u], low[v]);
                    if (low[v] >= num[u]) {
                        std::vector<std::pair<int, int>> blk;
                        while (!estack.empty()) {
                            auto e = estack.back();
                            estack.pop_back();
                            blk.push_back(e);
                            if (e == std::make_pair(u, v)) break;
                        }
                        blocks.push_back(std::move(blk));
                    }
                }
                continue;
            }
            fr.last_nbr = w;
            if (num[w] == -1) {
                estack.emplace_back(v, w);
                parent[w] = v;
                num[w] = counter++;
                low[w] = num[w];
                st.push_back({w, -1});
            } else if (w != parent[v] && num[w] < num[v]) {
                estack.emplace_back(v, w);
                low[v] = std::min(low[v], num[w]);
            }
        }
    }
    return blocks;
}

// --- Demoucron face insertion on one biconnected block ---

struct BlockEmbedder {
    const Graph& g;
    std::vector<std::pair<int, int>> edges;  // the block's edges
    VertexSet verts;
    std::vector<int> vert_list;
    std::vector<VertexSet> badj;  // block adjacency, indexed by global id

    std::vector<std::vector<int>> faces;
    std::vector<VertexSet> face_mask;
    VertexSet emb_verts;
    std::vector<VertexSet> emb_adj;
    int emb_edges = 0;

    explicit BlockEmbedder(const Graph& graph,
                           std::vector<std::pair<int, int>> blk)
        : g(graph), edges(std::move(blk)) {
        std::sort(edges.begin(), edges.end());
        badj.resize(g.vertex_count());
        emb_adj.resize(g.vertex_count());
        for (auto& [u, v] : edges) {
            if (u > v) std::swap(u, v);
            verts.add(u);
            verts.add(v);
            badj[u].add(v);
            badj[v].add(u);
        }
        for (int v : verts) vert_list.push_back(v);
    }

    // Any cycle in the block: DFS until the first back edge.
    std::vector<int> initial_cycle() const {
        int s = vert_list.front();
        std::vector<int> parent(g.vertex_count(), -2);
        std::vector<int> order;
        parent[s] = -1;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : badj[v]) {
                if (parent[w] == -2) {
                    parent[w] = v;
                    stack.push_back(w);
                } else if (w != parent[v] && parent[v] != -2) {
                    // Back or cross edge in DFS-ish order; build cycle via
                    // parent chains: walk both v and w up to their meeting.
                    std::vector<int> pv, pw;
                    for (int x = v; x != -1; x = parent[x]) pv.push_back(x);
                    for (int x = w; x != -1; x = parent[x]) pw.push_back(x);
                    // find deepest common ancestor
                    std::vector<char> onv(g.vertex_count(), 0);
                    for (int x : pv) onv[x] = 1;
                    int meet = -1;
                    for (int x : pw)
                        if (onv[x]) { meet = x; break; }
                    std::vector<int> cyc;
                    for (int x = v; x != meet; x = parent[x]) cyc.push_back(x);
                    cyc.push_back(meet);
                    std::vector<int> tail;
                    for (int x = w; x != meet; x = parent[x]) tail.push_back(x);
                    std::reverse(tail.begin(), tail.end());
                    for (int x : tail) cyc.push_back(x);
                    if (cyc.size() >= 3) return cyc;
                }
            }
        }
        throw std::logic_error("biconnected block without a cycle");
    }

    void add_embedded_edge(int u, int v) {
        emb_adj[u].add(v);
        emb_adj[v].add(u);
        ++emb_edges;
    }

    void push_face(std::vector<int> f) {
        VertexSet m;
        for (int v : f) m.add(v);
        faces.push_back(std::move(f));
        face_mask.push_back(m);
    }

    struct Fragment {
        std::vector<int> attach;
        VertexSet attach_mask;
        bool is_chord = false;
        std::pair<int, int> chord{-1, -1};
        VertexSet interior;
        std::vector<int> admissible;
    };

    std::vector<Fragment> fragments() const {
        std::vector<Fragment> out;
        for (auto [u, v] : edges) {
            if (emb_verts.contains(u) && emb_verts.contains(v) &&
                !emb_adj[u].contains(v)) {
                Fragment fr;
                fr.is_chord = true;
                fr.chord = {u, v};
                fr.attach = {u, v};
                fr.attach_mask.add(u);
                fr.attach_mask.add(v);
                out.push_back(std::move(fr));
            }
        }
        VertexSet pending = verts - emb_verts;
        VertexSet seen;
        for (int s : pending) {
            if (seen.contains(s)) continue;
            Fragment fr;
            std::vector<int> queue{s};
            seen.add(s);
            fr.interior.add(s);
            while (!queue.empty()) {
                int v = queue.back();
                queue.pop_back();
                for (int w : badj[v]) {
                    if (emb_verts.contains(w)) {
                        fr.attach_mask.add(w);
                    } else if (!seen.contains(w)) {
                        seen.add(w);
                        fr.interior.add(w);
                        queue.push_back(w);
                    }
                }
            }
            for (int a : fr.attach_mask) fr.attach.push_back(a);
            out.push_back(std::move(fr));
        }
        for (Fragment& fr : out) {
            if (fr.attach.size() < 2)
                throw std::logic_error("fragment with fewer than two attachments");
            for (int f = 0; f < static_cast<int>(faces.size()); ++f)
                if (fr.attach_mask.subset_of(face_mask[f]))
                    fr.admissible.push_back(f);
        }
        return out;
    }

    // Path across the fragment connecting two distinct attachment vertices;
    // interior vertices (if any) come from the fragment.
    std::vector<int> fragment_path(const Fragment& fr) const {
        if (fr.is_chord) return {fr.chord.first, fr.chord.second};
        int a = fr.attach.front();
        std::vector<int> pred(g.vertex_count(), -2);
        std::vector<int> queue;
        for (int w : badj[a])
            if (fr.interior.contains(w) && pred[w] == -2) {
                pred[w] = a;
                queue.push_back(w);
            }
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            for (int w : badj[v]) {
                if (fr.interior.contains(w)) {
                    if (pred[w] == -2) {
                        pred[w] = v;
                        queue.push_back(w);
                    }
                } else if (w != a && fr.attach_mask.contains(w)) {
                    std::vector<int> path{w};
                    for (int x = v; x != a; x = pred[x]) path.push_back(x);
                    path.push_back(a);
                    std::reverse(path.begin(), path.end());
                    return path;
                }
            }
        }
        throw std::logic_error("fragment path not found");
    }

    void embed_path(int face_idx, const std::vector<int>& path) {
        const std::vector<int> F = faces[face_idx];
        int a = path.front(), b = path.back();
        int k = static_cast<int>(F.size());
        int i = -1, j = -1;
        for (int t = 0; t < k; ++t) {
            if (F[t] == a) i = t;
            if (F[t] == b) j = t;
        }
        if (i < 0 || j < 0 || i == j)
            throw std::logic_error("attachments not on the chosen face");
        std::vector<int> A, B;
        for (int t = i;; t = (t + 1) % k) {
            A.push_back(F[t]);
            if (t == j) break;
        }
        for (int t = static_cast<int>(path.size()) - 2; t >= 1; --t)
            A.push_back(path[t]);
        for (int t = j;; t = (t + 1) % k) {
            B.push_back(F[t]);
            if (t == i) break;
        }
        for (int t = 1; t <= static_cast<int>(path.size()) - 2; ++t)
            B.push_back(path[t]);
        VertexSet am;
        for (int v : A) am.add(v);
        faces[face_idx] = std::move(A);
        face_mask[face_idx] = am;
        push_face(std::move(B));
        for (std::size_t t = 0; t + 1 < path.size(); ++t)
            add_embedded_edge(path[t], path[t + 1]);
        for (int v : path) emb_verts.add(v);
    }

    bool run() {
        std::vector<int> cyc = initial_cycle();
        push_face(cyc);
        std::vector<int> rev(cyc.rbegin(), cyc.rend());
        push_face(rev);
        for (std::size_t t = 0; t < cyc.size(); ++t) {
            add_embedded_edge(cyc[t], cyc[(t + 1) % cyc.size()]);
            emb_verts.add(cyc[t]);
        }
        while (emb_edges < static_cast<int>(edges.size())) {
            std::vector<Fragment> frs = fragments();
            if (frs.empty())
                throw std::logic_error("edges left but no fragments");
            int pick = 0;
            for (int t = 0; t < static_cast<int>(frs.size()); ++t) {
                if (frs[t].admissible.empty()) return false;  // non-planar
                if (frs[t].admissible.size() == 1) { pick = t; break; }
            }
            embed_path(frs[pick].admissible.front(), fragment_path(frs[pick]));
        }
        return true;
    }

    // Rotation cycle of each block vertex, recovered from the face darts:
    // consecutive darts (u,v),(v,w) of a face mean u follows w around v.
    std::vector<std::pair<int, std::vector<int>>> rotations() const {
        std::vector<std::pair<int, std::vector<int>>> out;
        std::map<int, std::map<int, int>> nxt;  // nxt[v][w] = u
        for (const auto& F : faces) {
            int k = static_cast<int>(F.size());
            for (int t = 0; t < k; ++t) {
                int u = F[t], v = F[(t + 1) % k], w = F[(t + 2) % k];
                nxt[v][w] = u;
            }
        }
        for (int v : vert_list) {
            const auto& m = nxt.at(v);
            int start = badj[v].first();
            std::vector<int> cyc{start};
            for (int w = m.at(start); w != start; w = m.at(w)) {
                cyc.push_back(w);
                if (static_cast<int>(cyc.size()) > badj[v].count())
                    throw std::logic_error("rotation at vertex does not close");
            }
            if (static_cast<int>(cyc.size()) != badj[v].count())
                throw std::logic_error("rotation misses neighbors");
            out.emplace_back(v, std::move(cyc));
        }
        return out;
    }
};

}  // namespace

std::optional<RotationSystem> planarity_embed(const Graph& g) {
    int n = g.vertex_count();
    RotationSystem rs;
    rs.order.resize(n);
    // Cheap per-component edge-count rejection.
    std::vector<int> comp = component_ids(g);
    int nc = n == 0 ? 0 : 1 + *std::max_element(comp.begin(), comp.end());
    std::vector<int> cn(nc, 0), ce(nc, 0);
    for (int v = 0; v < n; ++v) cn[comp[v]] += 1;
    for (auto [u, v] : g.edges()) ce[comp[u]] += 1;
    for (int c = 0; c < nc; ++c)
        if (cn[c] >= 3 && ce[c] > 3 * cn[c] - 6) return std::nullopt;

    for (auto& blk : biconnected_components(g)) {
        if (blk.size() == 1) {
            auto [u, v] = blk.front();
            rs.order[u].push_back(v);
            rs.order[v].push_back(u);
            continue;
        }
        BlockEmbedder be(g, blk);
        if (!be.run()) return std::nullopt;
        for (auto& [v, cyc] : be.rotations())
            rs.order[v].insert(rs.order[v].end(), cyc.begin(), cyc.end());
    }
    if (!euler_per_component(g, rs))
        throw std::logic_error("planarity_embed produced a non-planar rotation");
    return rs;
}

namespace {

// Canonical flattening for reflection comparison: each rotation cycled to
// start at its smallest neighbor, vertices separated by -1.
std::vector<int> reflect_key(const RotationSystem& rs, bool reflected) {
    std::vector<int> key;
    for (const auto& ord : rs.order) {
        std::vector<int> c = ord;
        if (reflected) std::reverse(c.begin(), c.end());
        if (!c.empty()) {
            auto mn = std::min_element(c.begin(), c.end());
            std::rotate(c.begin(), mn, c.end());
        }
        key.insert(key.end(), c.begin(), c.end());
        key.push_back(-1);
    }
    return key;
}

struct EmbedEnum {
    const Graph* g = nullptr;
    int n = 0;
    std::vector<int> comp, cn, ce;
    RotationSystem rs;
    const std::function<bool(const RotationSystem&)>* fn = nullptr;
    bool stopped = false;

    bool euler_ok() const {
        // Lean orbit count over at most 42 darts.
        std::array<int, 64> off{};
        for (int v = 0; v < n; ++v)
            off[v + 1] = off[v] + static_cast<int>(rs.order[v].size());
        std::array<char, 64> seen{};
        std::vector<int> cf(cn.size(), 0);
        for (int v = 0; v < n; ++v) {
            for (int i = 0; i < static_cast<int>(rs.order[v].size()); ++i) {
                if (seen[off[v] + i]) continue;
                cf[comp[v]] += 1;
                int cu = v, ci = i;
                do {
                    seen[off[cu] + ci] = 1;
                    int head = rs.order[cu][ci];
                    const auto& ord = rs.order[head];
                    int d = static_cast<int>(ord.size());
                    int p = 0;
                    while (ord[p] != cu) ++p;
                    cu = head;
                    ci = (p + d - 1) % d;
                } while (!(cu == v && ci == i));
            }
        }
        for (std::size_t c = 0; c < cn.size(); ++c) {
            if (ce[c] == 0) continue;
            if (cn[c] - ce[c] + cf[c] != 2) return false;
        }
        return true;
    }

    void rec(int v) {
        if (stopped) return;
        if (v == n) {
            if (!euler_ok()) return;
            if (reflect_key(rs, false) > reflect_key(rs, true)) return;
            if (!(*fn)(rs)) stopped = true;
            return;
        }
        std::vector<int> nbrs;
        for (int w : g->neighbors(v)) nbrs.push_back(w);
        if (nbrs.size() <= 2) {
            rs.order[v] = nbrs;
            rec(v + 1);
            return;
        }
        // First neighbor pinned; lexicographic permutations of the rest
        // enumerate each cyclic order exactly once.
        std::vector<int> rest(nbrs.begin() + 1, nbrs.end());
        do {
            rs.order[v].clear();
            rs.order[v].push_back(nbrs.front());
            rs.order[v].insert(rs.order[v].end(), rest.begin(), rest.end());
            rec(v + 1);
            if (stopped) return;
        } while (std::next_permutation(rest.begin(), rest.end()));
    }
};

}  // namespace

bool enumerate_embeddings(const Graph& g,
                          const std::function<bool(const RotationSystem&)>& fn) {
    int n = g.vertex_count();
    if (n > 7)
        throw std::invalid_argument("enumerate_embeddings supports n <= 7");
    if (!planarity_embed(g)) return true;  // nothing to yield
    EmbedEnum en;
    en.g = &g;
    en.n = n;
    en.comp = component_ids(g);
    int nc = n == 0 ? 0 : 1 + *std::max_element(en.comp.begin(), en.comp.end());
    en.cn.assign(nc, 0);
    en.ce.assign(nc, 0);
    for (int v = 0; v < n; ++v) en.cn[en.comp[v]] += 1;
    for (auto [u, v] : g.edges()) en.ce[en.comp[u]] += 1;
    en.rs.order.resize(n);
    en.fn = &fn;
    en.rec(0);
    return !en.stopped;
}

PlaneGraph PlaneGraph::build(Graph g, RotationSystem rs) {
    PlaneGraph pg;
    pg.g = std::move(g);
    pg.rs = std::move(rs);
    DartTrace t = trace_darts(pg.rs);
    pg.faces = std::move(t.faces);
    int n = pg.g.vertex_count();
    pg.corner_face.resize(n);
    for (int v = 0; v < n; ++v) {
        int d = static_cast<int>(pg.rs.order[v].size());
        pg.corner_face[v].resize(d);
        for (int i = 0; i < d; ++i)
            pg.corner_face[v][i] = t.dart_face[t.off[v] + i];
    }
    return pg;
}

PlaneGraph PlaneGraph::embed(Graph g) {
    auto rs = planarity_embed(g);
    if (!rs) throw std::invalid_argument("graph is not planar");
    return build(std::move(g), std::move(*rs));
}

}  // namespace turan
