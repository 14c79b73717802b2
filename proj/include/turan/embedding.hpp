#pragma once

#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

// Combinatorial embedding: order[v] lists the neighbors of v in clockwise
// order. Faces are the orbits of the dart successor rule
//   succ((u, v)) = (v, w)   where w immediately precedes u in order[v],
// so every dart lies on exactly one face boundary and an isthmus counts
// twice toward the size of its face.
struct RotationSystem {
    std::vector<std::vector<int>> order;
    int size() const { return static_cast<int>(order.size()); }
};

// One face boundary walk; walk holds the dart tails in order, so the face
// size equals walk.size() (darts, not distinct vertices).
struct Face {
    std::vector<int> walk;
    int size() const { return static_cast<int>(walk.size()); }
};

// Face-size statistics of an embedded graph.
//   f(i)    — number of faces of size i
//   e(i)    — edges with at least one side on a size-i face
//   e(i,j)  — edges whose two sides lie on a size-i and a size-j face
//             (i <= j; the two sides of an isthmus belong to one face)
// These satisfy i*f(i) = e(i) + e(i,i) and sum_i i*f(i) = 2e.
struct FaceStats {
    std::map<int, int> f_count;
    std::map<int, int> edge_on;
    std::map<std::pair<int, int>, int> edge_pair;
    int faces = 0;

    int f(int i) const {
        auto it = f_count.find(i);
        return it == f_count.end() ? 0 : it->second;
    }
    int e(int i) const {
        auto it = edge_on.find(i);
        return it == edge_on.end() ? 0 : it->second;
    }
    int e(int i, int j) const {
        auto it = edge_pair.find({std::min(i, j), std::max(i, j)});
        return it == edge_pair.end() ? 0 : it->second;
    }
};

// Planarity test with witness: returns a rotation system whose face orbits
// satisfy Euler's formula on every component, or nullopt if no planar
// embedding exists. Deterministic for a given input.
std::optional<RotationSystem> planarity_embed(const Graph& g);

// All face orbits of a rotation system, in a deterministic order. Each
// component contributes its own orbit set; an edgeless vertex contributes
// no orbits at all, so a graph with c edged components and no isolated
// vertices has sum over components of (e_c - n_c + 2) faces when planar.
std::vector<Face> trace_faces(const RotationSystem& rs);

// Tally the statistics above; throws std::logic_error if the faces do not
// cover each edge of g exactly twice (i.e. they are not a full trace).
FaceStats face_stats(const std::vector<Face>& faces, const Graph& g);

// Connected-component index per vertex (0-based, in order of discovery
// from the smallest vertex of each component).
std::vector<int> component_ids(const Graph& g);

// True when the face orbits of rs satisfy n_c - e_c + f_c = 2 on every
// component with at least one edge (edgeless components must contribute
// zero orbits). This is the planarity criterion for rotation systems.
bool euler_per_component(const Graph& g, const RotationSystem& rs);

// Enumerate every planar rotation system of g exactly once up to a global
// reflection, calling fn for each; fn returning false stops early. Returns
// false if stopped early, true otherwise. Requires n <= 7.
bool enumerate_embeddings(const Graph& g,
                          const std::function<bool(const RotationSystem&)>& fn);

// A graph together with a fixed embedding and its face structure.
// corner_face[v][i] is the face occupying the corner of v between
// neighbors order[v][i] and order[v][(i+1) % deg(v)]; equivalently, the
// face whose boundary contains the dart (v, order[v][i]).
struct PlaneGraph {
    Graph g;
    RotationSystem rs;
    std::vector<Face> faces;
    std::vector<std::vector<int>> corner_face;

    static PlaneGraph build(Graph g, RotationSystem rs);
    // Embeds via planarity_embed; throws std::invalid_argument when g is
    // not planar.
    static PlaneGraph embed(Graph g);
};

}  // namespace turan
