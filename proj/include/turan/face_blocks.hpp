#pragma once

#include <optional>
#include <string>
#include <vector>

#include "turan/embedding.hpp"
#include "turan/graph.hpp"

namespace turan {

// The closed star of 3-faces at a hub vertex, read off the rotation.
// Either the triangular faces close a full cycle around the hub (wheel) or
// they fall into maximal runs of consecutive corners (fans). Parts are
// listed largest first (ties keep rotation order from position 0 of the
// hub's rotation); part i spans part_sizes[i] faces and its rim holds
// part_sizes[i] + 1 consecutive neighbors in clockwise order. For a wheel
// the single rim is the closed neighbor cycle (part_sizes[0] vertices),
// listed clockwise from the smallest neighbor id. A lone triangle yields
// the degenerate Wheel(2).
struct RvStructure {
    int hub = -1;
    std::vector<int> three_faces;           // face ids of the 3-faces at hub
    bool wheel = false;
    std::vector<int> part_sizes;            // k_1 >= k_2 >= ... >= k_l >= 1
    std::vector<std::vector<int>> rim;      // per-part rim vertices, clockwise

    int part_count() const { return static_cast<int>(part_sizes.size()); }
    VertexSet vertices() const;             // hub plus all rim vertices
};

// Maximal set of vertices connected by paths whose every edge lies on a
// 3-face. Vertices on no 3-face are singletons; the blocks partition V.
struct Block {
    VertexSet vertices;
    std::vector<int> face_ids;              // 3-faces with all corners in the block
    bool is_singleton = false;
};

struct BlockReport {
    enum class Class { strict_good, good, bad };  // <= -3, <= 0, > 0

    Block block;
    int sum = 0;             // sum over block vertices of |3-faces at v|
    int bound = 0;           // 3 |B|
    int excess = 0;          // sum - bound
    Class classification = Class::strict_good;
    // Set when the induced subgraph matches a special-block fixture from
    // named_graph ("b1_c33", "b2_c33", "b3_c33", "b2_c34", "b3_c34",
    // "b4_c34"); tried only when excess > -3 and 4 <= |B| <= 7. K5 minus an
    // edge always reports as "b1_c33" (the c34 catalog's first entry is the
    // same graph).
    std::optional<std::string> catalog_match;
};

struct Lemma41Report {
    int n = 0;
    int m = 0;      // faces of size != 3
    int f3 = 0;
    int bound = 0;  // 2n - 2m - 4
    bool pass = false;
};

struct PartitionLemmaReport {
    int hub = -1;
    bool vacuous = false;      // the size conditions hold, nothing to assert
    std::vector<int> failing;  // star vertices u whose 3-faces leave the hub star
    bool pass = false;
};

struct RvLemmaReport {
    int hub = -1;
    bool vacuous = false;     // star containment precondition failed
    bool block_match = false; // star vertex set equals its 3-face block
    int sum = 0;              // sum of |3-faces at u| over star vertices
    int bound = 0;            // 3 |star| - 3
    bool pass = false;
};

// Face ids of the triangular faces incident with v, ascending.
std::vector<int> three_face_star(const PlaneGraph& pg, int v);

// |three_face_star(v)| for every vertex; the total equals 3 f_3.
std::vector<int> three_face_counts(const PlaneGraph& pg);

// Throws std::invalid_argument when v lies on no 3-face.
RvStructure rv_partition(const PlaneGraph& pg, int v);

// Connected components of the spanning subgraph keeping only edges on at
// least one 3-face, plus singletons; ordered by smallest vertex.
std::vector<Block> block_decomposition(const PlaneGraph& pg);

// Per-block sums and classifications, same order as block_decomposition.
// Cross-checks the global identity sum_v |3-faces at v| = 3 f_3 and throws
// std::logic_error if it ever fails.
std::vector<BlockReport> block_report(const PlaneGraph& pg);

// For any embedding with n >= 3 (else throws std::invalid_argument):
// f_3 <= 2n - 2m - 4 where m counts non-3-faces, and f_3 != 2n - 5.
Lemma41Report lemma41_check(const PlaneGraph& pg);

// Both lemma checks below require a host with no two vertex-disjoint
// triangles joined by an edge and throw std::invalid_argument otherwise
// (also when v lies on no 3-face).
//
// partition_lemma_check: unless the hub's partition satisfies one of
//   l = 1 and k_1 <= 4;  l = 2, k_1 <= 3 and k_1 + k_2 <= 5;  l = 3 and
//   k_1 <= 2
// (wheels count as l = 1), every star vertex u must have all its 3-faces
// among the hub's. Containment failures are listed in `failing`.
PartitionLemmaReport partition_lemma_check(const PlaneGraph& pg, int v);

// rv_lemma_check: when the star containment above holds at v, the star's
// vertex set must be exactly its 3-face block and the star sum must stay
// within 3 |star| - 3.
RvLemmaReport rv_lemma_check(const PlaneGraph& pg, int v);

}  // namespace turan
