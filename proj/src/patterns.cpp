#include "turan/patterns.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <unordered_map>

namespace turan {

PatternSpec PatternSpec::linked(int k, int l) {
    if (k < 3 || l < 3) throw std::invalid_argument("cycle length must be >= 3");
    return {Kind::linked, k, l, 0};
}

PatternSpec PatternSpec::cycle_union(int k, int l) {
    if (k < 3 || l < 3) throw std::invalid_argument("cycle length must be >= 3");
    return {Kind::cycle_union, k, l, 0};
}

PatternSpec PatternSpec::disjoint_cycles(int t) {
    if (t < 1) throw std::invalid_argument("cycle count must be >= 1");
    return {Kind::t_cycles, 0, 0, t};
}

PatternSpec PatternSpec::theta() { return {Kind::theta4, 0, 0, 0}; }

std::string PatternSpec::name() const {
    switch (kind) {
        case Kind::linked:
            return "linked(" + std::to_string(k) + "," + std::to_string(l) + ")";
        case Kind::cycle_union:
            return "union(" + std::to_string(k) + "," + std::to_string(l) + ")";
        case Kind::t_cycles:
            return "t_cycles(" + std::to_string(t) + ")";
        case Kind::theta4:
            return "theta4";
    }
    return "";
}

namespace {

// Visit every k-cycle exactly once: paths start at the cycle's smallest
// vertex s, extend through vertices > s, and close back to s with the
// orientation pinned by path[1] < path[k-1]. fn(path) returning false
// aborts the walk; returns false when aborted.
template <class F>
bool extend_path(const Graph& g, int s, int k, std::vector<int>& path,
                 VertexSet& used, F&& fn) {
    int v = path.back();
    if (static_cast<int>(path.size()) == k) {
        if (g.has_edge(v, s) && path[1] < v) return fn(path);
        return true;
    }
    for (int w : g.neighbors(v)) {
        if (w <= s || used.contains(w)) continue;
        used.add(w);
        path.push_back(w);
        bool go = extend_path(g, s, k, path, used, fn);
        path.pop_back();
        used.remove(w);
        if (!go) return false;
    }
    return true;
}

template <class F>
bool walk_cycles(const Graph& g, int k, F&& fn) {
    int n = g.vertex_count();
    if (k < 3 || k > n) return true;
    thread_local std::vector<int> path;
    path.clear();
    path.reserve(k);
    VertexSet used;
    for (int s = 0; s + k <= n; ++s) {
        path.assign(1, s);
        used.clear();
        used.add(s);
        if (!extend_path(g, s, k, path, used, fn)) return false;
    }
    return true;
}

VertexSet mask_of(const std::vector<int>& vs) {
    VertexSet m;
    for (int v : vs) m.add(v);
    return m;
}

// Smallest bridge (a, b) with a on m1, b on m2; (-1, -1) if none.
std::pair<int, int> find_bridge(const Graph& g, const VertexSet& m1,
                                const VertexSet& m2) {
    for (int a : m1) {
        VertexSet hits = g.neighbors(a) & m2;
        if (!hits.empty()) return {a, hits.first()};
    }
    return {-1, -1};
}

// Shared core of the pair detectors. Scans (k-cycle, l-cycle) pairs in a
// deterministic order and stops at the first disjoint pair that also has a
// bridge when need_bridge is set. Stores only masks unless out != nullptr.
struct PairHit {
    std::vector<int> c1, c2;
    std::pair<int, int> bridge{-1, -1};
};

bool scan_cycle_pairs(const Graph& g, int k, int l, bool need_bridge,
                      PairHit* out) {
    if (g.vertex_count() < k + l) return false;
    thread_local std::vector<VertexSet> masks;
    thread_local std::vector<int> flat;
    masks.clear();
    flat.clear();
    bool keep_flat = out != nullptr;
    auto store = [&](const std::vector<int>& path) {
        masks.push_back(mask_of(path));
        if (keep_flat) flat.insert(flat.end(), path.begin(), path.end());
    };
    auto check = [&](const VertexSet& m2, const std::vector<int>& path) {
        for (int i = 0; i < static_cast<int>(masks.size()); ++i) {
            if (masks[i].intersects(m2)) continue;
            std::pair<int, int> br{-1, -1};
            if (need_bridge) {
                br = find_bridge(g, masks[i], m2);
                if (br.first == -1) continue;
            }
            if (out) {
                out->c1.assign(flat.begin() + i * k, flat.begin() + (i + 1) * k);
                out->c2 = path;
                out->bridge = br;
            }
            return false;  // stop walking
        }
        return true;
    };
    bool found;
    if (k == l) {
        found = !walk_cycles(g, k, [&](const std::vector<int>& path) {
            VertexSet m2 = mask_of(path);
            if (!check(m2, path)) return false;
            store(path);
            return true;
        });
    } else {
        walk_cycles(g, k, [&](const std::vector<int>& path) {
            store(path);
            return true;
        });
        if (masks.empty()) return false;
        found = !walk_cycles(g, l, [&](const std::vector<int>& path) {
            return check(mask_of(path), path);
        });
    }
    return found;
}

}  // namespace

std::vector<CycleWitness> find_cycles(const Graph& g, int k) {
    std::vector<CycleWitness> out;
    walk_cycles(g, k, [&](const std::vector<int>& path) {
        out.push_back({path});
        return true;
    });
    return out;
}

std::optional<LinkedPairWitness> find_linked_pair(const Graph& g, int k, int l) {
    PairHit hit;
    if (!scan_cycle_pairs(g, k, l, true, &hit)) return std::nullopt;
    LinkedPairWitness w;
    w.cycle1.vertices = std::move(hit.c1);
    w.cycle2.vertices = std::move(hit.c2);
    w.bridge = hit.bridge;
    return w;
}

std::optional<std::pair<CycleWitness, CycleWitness>> find_disjoint_union(
    const Graph& g, int k, int l) {
    PairHit hit;
    if (!scan_cycle_pairs(g, k, l, false, &hit)) return std::nullopt;
    return std::make_pair(CycleWitness{std::move(hit.c1)},
                          CycleWitness{std::move(hit.c2)});
}

namespace {

// Exact cycle packing over <= 12 vertices. rec(mask) = maximum number of
// disjoint cycles inside mask; branches on the lowest vertex of mask being
// skipped or covered by some cycle through it.
struct Packer {
    int n = 0;
    std::array<std::uint32_t, 12> adj{};
    // mask -> {best, cycle chosen through the lowest vertex; empty = skip}
    std::unordered_map<std::uint32_t, std::pair<int, std::vector<int>>> memo;

    int rec(std::uint32_t mask) {
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second.first;
        if (std::popcount(mask) < 3) {
            memo.emplace(mask, std::make_pair(0, std::vector<int>{}));
            return 0;
        }
        int v = std::countr_zero(mask);
        int best = rec(mask & ~(1u << v));
        std::vector<int> best_cycle;
        std::vector<int> path{v};
        std::uint32_t used = 1u << v;
        std::function<void()> dfs = [&]() {
            int cur = path.back();
            if (path.size() >= 3 && (adj[cur] >> v & 1u) && path[1] < cur) {
                int cand = 1 + rec(mask & ~used);
                if (cand > best) {
                    best = cand;
                    best_cycle = path;
                }
            }
            std::uint32_t cands = adj[cur] & mask & ~used;
            while (cands) {
                int w = std::countr_zero(cands);
                cands &= cands - 1;
                used |= 1u << w;
                path.push_back(w);
                dfs();
                path.pop_back();
                used &= ~(1u << w);
            }
        };
        dfs();
        memo.emplace(mask, std::make_pair(best, std::move(best_cycle)));
        return best;
    }
};

}  // namespace

CyclePacking max_disjoint_cycles(const Graph& g) {
    int n = g.vertex_count();
    if (n > 12)
        throw std::invalid_argument("max_disjoint_cycles supports n <= 12");
    Packer p;
    p.n = n;
    for (int v = 0; v < n; ++v)
        for (int w : g.neighbors(v)) p.adj[v] |= 1u << w;
    std::uint32_t full = n == 0 ? 0u : (n == 32 ? ~0u : (1u << n) - 1u);
    CyclePacking out;
    out.count = p.rec(full);
    std::uint32_t mask = full;
    while (std::popcount(mask) >= 3) {
        const auto& [cnt, cyc] = p.memo.at(mask);
        if (cnt == 0) break;
        if (cyc.empty()) {
            mask &= ~(1u << std::countr_zero(mask));
        } else {
            out.cycles.push_back({cyc});
            for (int v : cyc) mask &= ~(1u << v);
        }
    }
    return out;
}

bool contains_theta4(const Graph& g) {
    for (auto [u, v] : g.edges()) {
        VertexSet common = g.neighbors(u) & g.neighbors(v);
        if (common.count() >= 2) return true;
    }
    return false;
}

bool is_free(const Graph& g, const PatternSpec& pattern) {
    switch (pattern.kind) {
        case PatternSpec::Kind::linked:
            return !scan_cycle_pairs(g, pattern.k, pattern.l, true, nullptr);
        case PatternSpec::Kind::cycle_union:
            return !scan_cycle_pairs(g, pattern.k, pattern.l, false, nullptr);
        case PatternSpec::Kind::t_cycles:
            return max_disjoint_cycles(g).count < pattern.t;
        case PatternSpec::Kind::theta4:
            return !contains_theta4(g);
    }
    throw std::logic_error("unreachable");
}

}  // namespace turan
