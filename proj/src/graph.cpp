#include "turan/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace turan {

Graph::Graph(int n) : n_(n) {
    if (n < 0 || n > VertexSet::max_vertices)
        throw std::invalid_argument("vertex count out of range: " + std::to_string(n));
    adj_.resize(n);
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw std::invalid_argument("vertex out of range");
    if (u == v) throw std::invalid_argument("loops not allowed");
    if (adj_[u].contains(v)) throw std::invalid_argument("duplicate edge");
    adj_[u].add(v);
    adj_[v].add(u);
    ++m_;
}

int Graph::add_vertex() {
    if (n_ == VertexSet::max_vertices)
        throw std::invalid_argument("vertex count out of range: " + std::to_string(n_ + 1));
    adj_.emplace_back();
    return n_++;
}

void Graph::remove_edge(int u, int v) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_ || !adj_[u].contains(v))
        throw std::invalid_argument("no such edge");
    adj_[u].remove(v);
    adj_[v].remove(u);
    --m_;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v = adj_[u].next_after(u); v != -1; v = adj_[u].next_after(v))
            out.emplace_back(u, v);
    return out;
}

namespace {

// One whitespace-separated token line with comments stripped.
bool next_content_line(std::string_view text, std::size_t& pos, int& line_no,
                       std::string& out) {
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + (eol < text.size() ? 1 : 0);
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        std::size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string_view::npos) continue;
        std::size_t b = line.find_last_not_of(" \t\r");
        out.assign(line.substr(a, b - a + 1));
        return true;
    }
    return false;
}

int parse_int(const std::string& tok, int line_no, const char* what) {
    int value = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || p != tok.data() + tok.size())
        throw std::runtime_error("line " + std::to_string(line_no) + ": bad " +
                                 what + " '" + tok + "'");
    return value;
}

std::pair<std::string, std::string> split2(const std::string& line, int line_no) {
    std::istringstream ss(line);
    std::string a, b, extra;
    if (!(ss >> a >> b) || (ss >> extra))
        throw std::runtime_error("line " + std::to_string(line_no) +
                                 ": expected two integers, got '" + line + "'");
    return {a, b};
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    std::size_t pos = 0;
    int line_no = 0;
    std::string line;
    if (!next_content_line(text, pos, line_no, line))
        throw std::runtime_error("empty input: missing 'n m' header");
    auto [ns, ms] = split2(line, line_no);
    int n = parse_int(ns, line_no, "vertex count");
    int m = parse_int(ms, line_no, "edge count");
    if (n < 0 || n > VertexSet::max_vertices)
        throw std::runtime_error("line " + std::to_string(line_no) +
                                 ": vertex count out of range");
    if (m < 0)
        throw std::runtime_error("line " + std::to_string(line_no) +
                                 ": negative edge count");
    Graph g(n);
    for (int i = 0; i < m; ++i) {
        if (!next_content_line(text, pos, line_no, line))
            throw std::runtime_error("unexpected end of input: read " +
                                     std::to_string(i) + " of " +
                                     std::to_string(m) + " edges");
        auto [us, vs] = split2(line, line_no);
        int u = parse_int(us, line_no, "vertex");
        int v = parse_int(vs, line_no, "vertex");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::runtime_error("line " + std::to_string(line_no) +
                                     ": vertex out of range: " + line);
        if (u == v)
            throw std::runtime_error("line " + std::to_string(line_no) +
                                     ": loop at vertex " + std::to_string(u));
        if (g.has_edge(u, v))
            throw std::runtime_error("line " + std::to_string(line_no) +
                                     ": duplicate edge " + line);
        g.add_edge(u, v);
    }
    if (next_content_line(text, pos, line_no, line))
        throw std::runtime_error("line " + std::to_string(line_no) +
                                 ": trailing content after " +
                                 std::to_string(m) + " edges");
    return g;
}

std::string to_edge_list(const Graph& g) {
    std::string out = std::to_string(g.vertex_count()) + " " +
                      std::to_string(g.edge_count()) + "\n";
    for (auto [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

std::string graph6_encode(const Graph& g) {
    int n = g.vertex_count();
    if (n > 62)
        throw std::invalid_argument("graph6 short form supports n <= 62");
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int acc = 0, nbits = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0)
        out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

Graph graph6_decode(std::string_view s) {
    if (s.empty()) throw std::runtime_error("graph6: empty string");
    for (char c : s)
        if (c < 63 || c > 126)
            throw std::runtime_error("graph6: byte out of range");
    int n = s[0] - 63;
    if (n > 62) throw std::runtime_error("graph6: long form not supported");
    std::size_t need = (static_cast<std::size_t>(n) * (n - 1) / 2 + 5) / 6;
    if (s.size() != 1 + need)
        throw std::runtime_error("graph6: expected " + std::to_string(1 + need) +
                                 " bytes for n=" + std::to_string(n) + ", got " +
                                 std::to_string(s.size()));
    Graph g(n);
    std::size_t idx = 0;  // bit index into the data section
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++idx) {
            int byte = s[1 + idx / 6] - 63;
            if ((byte >> (5 - idx % 6)) & 1) g.add_edge(u, v);
        }
    // Padding bits must be zero.
    for (std::size_t pad = idx; pad < need * 6; ++pad) {
        int byte = s[1 + pad / 6] - 63;
        if ((byte >> (5 - pad % 6)) & 1)
            throw std::runtime_error("graph6: nonzero padding bits");
    }
    return g;
}

Graph join(const Graph& a, const Graph& b) {
    int na = a.vertex_count(), nb = b.vertex_count();
    Graph g(na + nb);
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    for (auto [u, v] : b.edges()) g.add_edge(na + u, na + v);
    for (int u = 0; u < na; ++u)
        for (int v = 0; v < nb; ++v) g.add_edge(u, na + v);
    return g;
}

Graph induced_subgraph(const Graph& g, const VertexSet& vs) {
    std::vector<int> id(g.vertex_count(), -1);
    int k = 0;
    for (int v : vs) id[v] = k++;
    Graph h(k);
    for (int v : vs)
        for (int w : g.neighbors(v) & vs)
            if (v < w) h.add_edge(id[v], id[w]);
    return h;
}

namespace {

// Branch-and-bound minimum adjacency-row string. At depth d the candidate's
// row holds its adjacency bits to the prefix, earlier positions more
// significant; rows are compared depth-by-depth against the incumbent.
struct CanonState {
    const Graph* g = nullptr;
    int n = 0;
    std::array<int, 12> perm{};
    std::array<std::uint16_t, 12> rows{};
    std::array<std::uint16_t, 12> best{};
    bool have_best = false;
    std::array<int, 12> twin_class{};

    bool prefix_equals_best(int depth) const {
        if (!have_best) return false;
        for (int j = 0; j < depth; ++j)
            if (rows[j] != best[j]) return false;
        return true;
    }

    void dfs(int depth, std::uint32_t chosen) {
        if (depth == n) {
            if (!have_best ||
                std::lexicographical_compare(rows.begin(), rows.begin() + n,
                                             best.begin(), best.begin() + n)) {
                best = rows;
                have_best = true;
            }
            return;
        }
        struct Cand { std::uint16_t row; int v; };
        std::array<Cand, 12> cands;
        int nc = 0;
        for (int v = 0; v < n; ++v) {
            if (chosen & (1u << v)) continue;
            std::uint16_t row = 0;
            for (int j = 0; j < depth; ++j)
                row = static_cast<std::uint16_t>(
                    (row << 1) | (g->has_edge(v, perm[j]) ? 1 : 0));
            cands[nc++] = {row, v};
        }
        std::sort(cands.begin(), cands.begin() + nc,
                  [](const Cand& a, const Cand& b) {
                      return a.row != b.row ? a.row < b.row : a.v < b.v;
                  });
        std::uint32_t tried_twins = 0;
        for (int i = 0; i < nc; ++i) {
            // Recompute each iteration: deeper calls may replace the incumbent.
            if (prefix_equals_best(depth) && cands[i].row > best[depth])
                break;  // sorted ascending, nothing better follows
            // Swapping global twins is an automorphism: one per row suffices.
            int tc = twin_class[cands[i].v];
            if (i > 0 && cands[i - 1].row == cands[i].row) {
                if (tried_twins & (1u << tc)) continue;
            } else {
                tried_twins = 0;
            }
            tried_twins |= 1u << tc;
            perm[depth] = cands[i].v;
            rows[depth] = cands[i].row;
            dfs(depth + 1, chosen | (1u << cands[i].v));
        }
    }
};

}  // namespace

std::vector<std::uint8_t> canonical_form(const Graph& g) {
    int n = g.vertex_count();
    if (n > 12)
        throw std::invalid_argument("canonical_form supports n <= 12");
    CanonState st;
    st.g = &g;
    st.n = n;
    // True-twin classes: identical neighborhoods ignoring the pair itself.
    for (int v = 0; v < n; ++v) st.twin_class[v] = v;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            VertexSet a = g.neighbors(u), b = g.neighbors(v);
            a.remove(v); b.remove(u);
            if (a == b && st.twin_class[v] == v)
                st.twin_class[v] = st.twin_class[u];
        }
    if (n > 0) st.dfs(0, 0);
    std::vector<std::uint8_t> out;
    out.reserve(1 + 2 * (n > 0 ? n - 1 : 0));
    out.push_back(static_cast<std::uint8_t>(n));
    for (int d = 1; d < n; ++d) {
        out.push_back(static_cast<std::uint8_t>(st.best[d] >> 8));
        out.push_back(static_cast<std::uint8_t>(st.best[d] & 0xff));
    }
    return out;
}

bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
        return false;
    int n = a.vertex_count();
    std::vector<int> da(n), db(n);
    for (int v = 0; v < n; ++v) {
        da[v] = a.degree(v);
        db[v] = b.degree(v);
    }
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    return canonical_form(a) == canonical_form(b);
}

}  // namespace turan
