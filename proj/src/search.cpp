#include "turan/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "turan/face_blocks.hpp"

namespace turan {

namespace {

using Clock = std::chrono::steady_clock;

// Pascal's triangle up to C(36, k); every entry fits comfortably in 64 bits.
constexpr int kMaxPairs = 36;

std::uint64_t binomial(int n, int k) {
    static const auto table = [] {
        std::array<std::array<std::uint64_t, kMaxPairs + 1>, kMaxPairs + 1> t{};
        for (int i = 0; i <= kMaxPairs; ++i) {
            t[i][0] = 1;
            for (int j = 1; j <= i; ++j)
                t[i][j] = t[i - 1][j - 1] + (j <= i - 1 ? t[i - 1][j] : 0);
        }
        return t;
    }();
    if (k < 0 || k > n) return 0;
    return table[n][k];
}

std::vector<std::pair<int, int>> vertex_pairs(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    return pairs;
}

// Subsets {a_0 < ... < a_{e-1}} of [0, M) in colexicographic order; the
// rank of a subset is sum_i C(a_i, i+1).
void colex_unrank(std::uint64_t rank, int e, std::vector<int>& out) {
    out.resize(e);
    for (int i = e - 1; i >= 0; --i) {
        int c = i;
        while (binomial(c + 1, i + 1) <= rank) ++c;
        out[i] = c;
        rank -= binomial(c, i + 1);
    }
}

void colex_next(std::vector<int>& a, int M) {
    int e = static_cast<int>(a.size());
    for (int i = 0; i < e; ++i) {
        int ceiling = i + 1 < e ? a[i + 1] : M;
        if (a[i] + 1 < ceiling) {
            ++a[i];
            for (int j = 0; j < i; ++j) a[j] = j;
            return;
        }
    }
}

Graph build_from_subset(int n, const std::vector<std::pair<int, int>>& pairs,
                        const std::vector<int>& subset) {
    Graph g(n);
    for (int idx : subset) g.add_edge(pairs[idx].first, pairs[idx].second);
    return g;
}

struct LevelOutcome {
    bool feasible = false;
    std::uint64_t first_rank = 0;
    std::vector<int> subset;
    bool aborted = false;
};

// Exhaust one edge level: test every e-subset of the pair list in colex
// order, in rank-space chunks claimed by a pool of workers. The recorded
// hit is the smallest-rank survivor, which matches a sequential sweep.
LevelOutcome run_level(int n, const std::vector<std::pair<int, int>>& pairs,
                       int e, const PatternSpec& pattern, int jobs,
                       std::optional<Clock::time_point> deadline,
                       std::atomic<std::uint64_t>& tested) {
    const int M = static_cast<int>(pairs.size());
    const std::uint64_t total = binomial(M, e);
    const std::uint64_t chunks =
        std::max<std::uint64_t>(1, std::min<std::uint64_t>(total, std::uint64_t{8} * jobs));

    std::atomic<std::uint64_t> next_chunk{0};
    std::atomic<std::uint64_t> best_rank{~std::uint64_t{0}};
    std::atomic<bool> aborted{false};
    std::mutex hit_mutex;
    std::vector<int> hit_subset;

    auto worker = [&] {
        std::vector<int> subset;
        std::uint64_t local_tested = 0;
        for (;;) {
            std::uint64_t c = next_chunk.fetch_add(1);
            if (c >= chunks || aborted.load()) break;
            std::uint64_t lo = total * c / chunks;
            std::uint64_t hi = total * (c + 1) / chunks;
            if (lo >= best_rank.load()) break;  // later chunks only grow ranks
            colex_unrank(lo, e, subset);
            for (std::uint64_t r = lo; r < hi; ++r, colex_next(subset, M)) {
                if (r >= best_rank.load()) break;
                if ((++local_tested & 0x3fff) == 0 && deadline &&
                    Clock::now() >= *deadline) {
                    aborted.store(true);
                    break;
                }
                Graph g = build_from_subset(n, pairs, subset);
                if (!is_free(g, pattern) || !planarity_embed(g)) continue;
                std::uint64_t prev = best_rank.load();
                while (r < prev && !best_rank.compare_exchange_weak(prev, r)) {
                }
                if (r < prev || r == best_rank.load()) {
                    std::lock_guard<std::mutex> lock(hit_mutex);
                    if (r == best_rank.load()) hit_subset = subset;
                }
                break;
            }
            if (aborted.load()) break;
        }
        tested.fetch_add(local_tested);
    };

    std::vector<std::thread> pool;
    for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    LevelOutcome out;
    out.aborted = aborted.load();
    if (best_rank.load() != ~std::uint64_t{0}) {
        out.feasible = true;
        out.first_rank = best_rank.load();
        out.subset = hit_subset;
    }
    return out;
}

}  // namespace

SearchResult exact_ex_p(int n, const PatternSpec& pattern,
                        std::chrono::milliseconds budget, int jobs) {
    if (n < 3 || n > 9)
        throw std::invalid_argument("exact_ex_p: n must be in 3..9");
    if (jobs <= 0) jobs = std::max(1u, std::thread::hardware_concurrency());

    auto started = Clock::now();
    std::optional<Clock::time_point> deadline;
    if (budget.count() > 0) deadline = started + budget;

    auto pairs = vertex_pairs(n);
    const int M = static_cast<int>(pairs.size());

    SearchResult res;
    res.n = n;
    res.pattern = pattern;
    res.strategy = "colex-subset-sweep/jobs=" + std::to_string(jobs);

    std::atomic<std::uint64_t> tested{0};
    std::uint64_t sequential_examined = 0;
    for (int e = std::min(3 * n - 6, M); e >= 0; --e) {
        LevelOutcome level = run_level(n, pairs, e, pattern, jobs, deadline, tested);
        if (level.feasible) {
            res.exact = true;
            res.value = res.lower = e;
            res.witness = build_from_subset(n, pairs, level.subset);
            if (!is_free(res.witness, pattern) || !planarity_embed(res.witness))
                throw std::logic_error("search witness failed re-validation");
            if (level.aborted) {
                res.graphs_examined = tested.load();
                res.strategy += "/budget-truncated-witness";
            } else {
                res.graphs_examined = sequential_examined + level.first_rank + 1;
            }
            break;
        }
        if (level.aborted) {
            res.exact = false;
            res.value = e;  // levels above e are exhausted; e itself is not
            res.lower = 0;
            res.graphs_examined = tested.load();
            res.strategy += "/budget-exhausted";
            break;
        }
        sequential_examined += binomial(M, e);
    }
    res.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         Clock::now() - started)
                         .count();
    return res;
}

bool enumerate_free_planar(
    int n, const std::optional<PatternSpec>& pattern, EmbeddingMode mode,
    const std::function<bool(const Graph&, const RotationSystem&)>& fn) {
    if (n < 3 || n > 7)
        throw std::invalid_argument("enumerate_free_planar: n must be in 3..7");
    if (mode == EmbeddingMode::all && n > 6)
        throw std::invalid_argument(
            "enumerate_free_planar: all-embeddings mode needs n <= 6");

    auto pairs = vertex_pairs(n);
    const int M = static_cast<int>(pairs.size());
    const int max_edges = 3 * n - 6;
    std::unordered_set<std::string> seen;

    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << M); ++mask) {
        if (std::popcount(mask) > max_edges) continue;
        Graph g(n);
        for (int i = 0; i < M; ++i)
            if (mask >> i & 1) g.add_edge(pairs[i].first, pairs[i].second);
        if (pattern && !is_free(g, *pattern)) continue;
        auto rs = planarity_embed(g);
        if (!rs) continue;
        auto canon = canonical_form(g);
        if (!seen.emplace(canon.begin(), canon.end()).second) continue;
        if (mode == EmbeddingMode::one) {
            if (!fn(g, *rs)) return false;
        } else {
            if (!enumerate_embeddings(
                    g, [&](const RotationSystem& r) { return fn(g, r); }))
                return false;
        }
    }
    return true;
}

std::string lemma_name(LemmaId id) {
    switch (id) {
        case LemmaId::global_f3: return "global_f3";
        case LemmaId::lemma41: return "lemma41";
        case LemmaId::partition: return "partition";
        case LemmaId::rv: return "rv";
        case LemmaId::face_block_c33: return "face_block_c33";
        case LemmaId::face_block_c34: return "face_block_c34";
    }
    return "unknown";
}

std::optional<LemmaId> lemma_from_name(std::string_view name) {
    for (LemmaId id :
         {LemmaId::global_f3, LemmaId::lemma41, LemmaId::partition, LemmaId::rv,
          LemmaId::face_block_c33, LemmaId::face_block_c34})
        if (name == lemma_name(id)) return id;
    return std::nullopt;
}

namespace {

// One reconstruction flag per isomorphism class of positive-excess block.
struct FlagBook {
    std::set<std::string> keys;
    std::vector<std::string>* flags = nullptr;

    void note(const PlaneGraph& pg, const BlockReport& rep,
              const std::string& host_g6, int embedding_index) {
        Graph sub = induced_subgraph(pg.g, rep.block.vertices);
        auto canon = canonical_form(sub);
        std::string key(canon.begin(), canon.end());
        key += ':' + std::to_string(rep.excess);
        if (!keys.insert(key).second) return;
        std::string text = "bad block |B|=" +
                           std::to_string(rep.block.vertices.count()) +
                           " excess=+" + std::to_string(rep.excess) +
                           " subgraph=" + graph6_encode(sub) + " catalog=" +
                           (rep.catalog_match ? *rep.catalog_match : "unmatched") +
                           " first_host=" + host_g6 + " embedding=" +
                           std::to_string(embedding_index);
        flags->push_back(text);
    }
};

}  // namespace

HarnessReport lemma_harness(LemmaId lemma, int n_max) {
    if (n_max < 3 || n_max > 7)
        throw std::invalid_argument("lemma_harness: n_max must be in 3..7");

    HarnessReport report;
    report.lemma = lemma;
    report.n_max = n_max;

    std::optional<PatternSpec> filter;
    if (lemma == LemmaId::partition || lemma == LemmaId::rv ||
        lemma == LemmaId::face_block_c33)
        filter = PatternSpec::linked(3, 3);
    else if (lemma == LemmaId::face_block_c34)
        filter = PatternSpec::linked(3, 4);

    FlagBook flags;
    flags.flags = &report.reconstruction_flags;
    std::string host_g6;
    int embedding_index = -1;

    auto violation = [&](int subject, std::string detail) {
        report.violations.push_back(
            {host_g6, embedding_index, subject, std::move(detail)});
    };

    auto examine = [&](const Graph& g, const RotationSystem& rs) {
        std::string g6 = graph6_encode(g);
        embedding_index = g6 == host_g6 ? embedding_index + 1 : 0;
        host_g6 = std::move(g6);
        ++report.embeddings_examined;

        PlaneGraph pg = PlaneGraph::build(g, rs);
        int n = g.vertex_count();
        switch (lemma) {
            case LemmaId::global_f3: {
                auto counts = three_face_counts(pg);
                int f3 = 0;
                for (const Face& f : pg.faces) f3 += f.size() == 3;
                int sum = 0;
                for (int c : counts) sum += c;
                if (sum != 3 * f3)
                    violation(-1, "sum=" + std::to_string(sum) +
                                      " f3=" + std::to_string(f3));
                break;
            }
            case LemmaId::lemma41: {
                auto r = lemma41_check(pg);
                if (!r.pass)
                    violation(-1, "f3=" + std::to_string(r.f3) + " m=" +
                                      std::to_string(r.m) + " bound=" +
                                      std::to_string(r.bound) + " 2n-5=" +
                                      std::to_string(2 * r.n - 5));
                break;
            }
            case LemmaId::partition: {
                auto counts = three_face_counts(pg);
                for (int v = 0; v < n; ++v) {
                    if (counts[v] == 0) continue;
                    auto r = partition_lemma_check(pg, v);
                    if (r.pass) continue;
                    std::string who;
                    for (int u : r.failing) who += " " + std::to_string(u);
                    violation(v, "escaping star vertices:" + who);
                }
                break;
            }
            case LemmaId::rv: {
                auto counts = three_face_counts(pg);
                for (int v = 0; v < n; ++v) {
                    if (counts[v] == 0) continue;
                    auto r = rv_lemma_check(pg, v);
                    if (!r.pass)
                        violation(v, "block_match=" +
                                         std::string(r.block_match ? "yes" : "no") +
                                         " sum=" + std::to_string(r.sum) +
                                         " bound=" + std::to_string(r.bound));
                }
                break;
            }
            case LemmaId::face_block_c33:
            case LemmaId::face_block_c34: {
                bool c34 = lemma == LemmaId::face_block_c34;
                auto reports = block_report(pg);
                auto counts = three_face_counts(pg);
                for (int i = 0; i < static_cast<int>(reports.size()); ++i) {
                    const BlockReport& rep = reports[i];
                    if (rep.excess <= 0) continue;
                    int cnt = rep.block.vertices.count();
                    bool in_regime = c34 ? cnt >= 5 && cnt <= 7 && rep.excess <= 6
                                         : (cnt == 5 || cnt == 6) && rep.excess <= 3;
                    if (!in_regime)
                        violation(i, "|B|=" + std::to_string(cnt) +
                                         " excess=+" + std::to_string(rep.excess));
                    flags.note(pg, rep, host_g6, embedding_index);
                    if (!c34) continue;
                    // Bad-block isolation: an outside neighbor of a bad block
                    // lies on no 3-face and sends exactly one edge into it.
                    for (int u = 0; u < n; ++u) {
                        if (rep.block.vertices.contains(u)) continue;
                        int into = (pg.g.neighbors(u) & rep.block.vertices).count();
                        if (into == 0) continue;
                        if (counts[u] != 0 || into != 1)
                            violation(u, "bad-block neighbor with |R|=" +
                                             std::to_string(counts[u]) +
                                             " edges_into=" + std::to_string(into));
                    }
                }
                break;
            }
        }
        return true;
    };

    for (int n = 3; n <= n_max; ++n) {
        host_g6.clear();
        embedding_index = -1;
        enumerate_free_planar(
            n, filter, n <= 6 ? EmbeddingMode::all : EmbeddingMode::one, examine);
    }
    return report;
}

}  // namespace turan
