#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "turan/embedding.hpp"
#include "turan/graph.hpp"
#include "turan/patterns.hpp"

namespace turan {

// Outcome of an exhaustive max-edge search. When exact, value is the
// maximum edge count of a pattern-free planar graph on n vertices and
// witness attains it; when the budget ran out first, value is only an
// upper bound (every level above it was exhausted), lower is the best
// feasible count found (0 if none), and witness is meaningful only if
// lower > 0.
struct SearchResult {
    int n = 0;
    PatternSpec pattern;
    bool exact = true;
    int value = 0;
    int lower = 0;
    Graph witness;
    std::uint64_t graphs_examined = 0;
    std::int64_t elapsed_ms = 0;
    std::string strategy;
};

// Exhaustive ex_P(n, pattern) for 3 <= n <= 9. Sweeps the edge count
// downward from 3n-6; each level enumerates all labeled edge subsets in
// colexicographic order, pattern-testing before planarity. The first
// feasible level is exact and its colex-first survivor is the witness.
// The rank space is chunked across `jobs` threads (0 = hardware
// concurrency; the TURAN_JOBS environment variable is not consulted here —
// that is CLI plumbing). A zero budget means unlimited. Completed runs are
// fully deterministic, including graphs_examined, which counts the
// subsets a sequential sweep would test; if the budget expires after a
// witness surfaced at the deciding level the value is still exact but the
// reported witness may not be the colex-first one.
SearchResult exact_ex_p(int n, const PatternSpec& pattern,
                        std::chrono::milliseconds budget = {}, int jobs = 0);

enum class EmbeddingMode { one, all };

// Every isomorphism class of pattern-free planar graph on n vertices
// (pass std::nullopt to keep all planar classes), each presented by its
// first labeled representative in mask order, with one embedding
// (planarity_embed) or all embeddings up to reflection. fn returning
// false stops the walk; the return mirrors enumerate_embeddings. Requires
// n <= 7, and n <= 6 in all-embeddings mode.
bool enumerate_free_planar(
    int n, const std::optional<PatternSpec>& pattern, EmbeddingMode mode,
    const std::function<bool(const Graph&, const RotationSystem&)>& fn);

enum class LemmaId { global_f3, lemma41, partition, rv, face_block_c33, face_block_c34 };

std::string lemma_name(LemmaId id);
std::optional<LemmaId> lemma_from_name(std::string_view name);

struct HarnessViolation {
    std::string graph6;
    int embedding_index = 0;
    int subject = -1;  // vertex or block index; -1 when the whole graph fails
    std::string detail;
};

// One sweep of a structural check over small plane graphs: all embeddings
// up to n = 6, a single embedding at n = 7. The face-block sweeps restrict
// the corpus to hosts free of the relevant pattern and also record one
// reconstruction flag per isomorphism class of positive-excess block
// observed, so the special-block catalog can be audited.
struct HarnessReport {
    LemmaId lemma = LemmaId::global_f3;
    int n_min = 3;
    int n_max = 0;
    std::uint64_t embeddings_examined = 0;
    std::vector<HarnessViolation> violations;
    std::vector<std::string> reconstruction_flags;
};

// Runs the face_blocks check named by `lemma` over the corpus above.
// Violation conditions:
//   global_f3       sum_v |3-faces at v| differs from 3 f_3
//   lemma41         f_3 > 2n - 2m - 4, or f_3 = 2n - 5
//   partition       triggered hubs with a star vertex whose 3-faces escape
//   rv              star = block or the star sum bound fails at some hub
//   face_block_c33  positive excess outside {5,6}-vertex blocks, or > +3
//   face_block_c34  positive excess outside 5..7-vertex blocks, or > +6,
//                   or a bad block whose outside neighbors lie on a 3-face
//                   or send more than one edge into it
// partition/rv/face-block sweeps filter the corpus to pattern-free hosts
// (no linked triangle pair; for c34 no linked triangle/C4 pair).
// Requires 3 <= n_max <= 7.
HarnessReport lemma_harness(LemmaId lemma, int n_max);

}  // namespace turan
