#pragma once

#include "lpa/report.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace lpa {

using VertexIdx = std::uint32_t;
using EdgeIdx = std::uint32_t;

namespace detail {

struct GraphData {
    std::vector<std::string> vertex_ids; // sorted lexicographically
    std::vector<std::string> edge_ids;   // sorted lexicographically
    std::vector<VertexIdx> edge_source;
    std::vector<VertexIdx> edge_range;
    std::vector<std::vector<EdgeIdx>> out; // per vertex, ascending edge index
    std::map<std::string, VertexIdx, std::less<>> vertex_index;
    std::map<std::string, EdgeIdx, std::less<>> edge_index;
};

inline bool valid_identifier(std::string_view s) {
    if (s.empty()) return false;
    if (!(std::isalpha(static_cast<unsigned char>(s[0])))) return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return true;
}

struct Statement {
    std::string body;
    std::size_t line;
};

/// Splits the line-based file formats: statements end at newlines or ';',
/// `#` comments run to end of line, blanks are dropped.
inline std::vector<Statement> split_statements(std::string_view text) {
    std::vector<Statement> stmts;
    std::size_t line = 1;
    std::string cur;
    std::size_t cur_line = 1;
    bool in_comment = false;
    auto flush = [&] {
        auto b = cur.find_first_not_of(" \t\r");
        auto e = cur.find_last_not_of(" \t\r");
        if (b != std::string::npos) stmts.push_back({cur.substr(b, e - b + 1), cur_line});
        cur.clear();
    };
    for (char c : text) {
        if (c == '\n') {
            flush();
            in_comment = false;
            ++line;
            cur_line = line;
        } else if (in_comment) {
            continue;
        } else if (c == '#') {
            in_comment = true;
        } else if (c == ';') {
            flush();
            cur_line = line;
        } else {
            if (cur.empty()) cur_line = line;
            cur += c;
        }
    }
    flush();
    return stmts;
}

inline std::string trim_copy(const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    if (b == std::string::npos) return std::string();
    return s.substr(b, e - b + 1);
}

} // namespace detail

/// Finite directed graph E = (E0, E1, r, s). Immutable after construction;
/// the handle is cheap to copy and safe to share across threads. Vertices and
/// edges are addressed by index; indices follow the lexicographic order of
/// the ids, so index order is id order.
class Graph {
public:
    std::size_t vertex_count() const { return data_->vertex_ids.size(); }
    std::size_t edge_count() const { return data_->edge_ids.size(); }

    const std::string& vertex_id(VertexIdx v) const { return data_->vertex_ids[v]; }
    const std::string& edge_id(EdgeIdx e) const { return data_->edge_ids[e]; }

    VertexIdx edge_source(EdgeIdx e) const { return data_->edge_source[e]; }
    VertexIdx edge_range(EdgeIdx e) const { return data_->edge_range[e]; }

    const std::vector<EdgeIdx>& out_edges(VertexIdx v) const { return data_->out[v]; }
    bool is_sink(VertexIdx v) const { return data_->out[v].empty(); }

    std::vector<VertexIdx> sinks() const {
        std::vector<VertexIdx> s;
        for (VertexIdx v = 0; v < vertex_count(); ++v)
            if (is_sink(v)) s.push_back(v);
        return s;
    }

    std::optional<VertexIdx> find_vertex(std::string_view id) const {
        auto it = data_->vertex_index.find(id);
        if (it == data_->vertex_index.end()) return std::nullopt;
        return it->second;
    }
    std::optional<EdgeIdx> find_edge(std::string_view id) const {
        auto it = data_->edge_index.find(id);
        if (it == data_->edge_index.end()) return std::nullopt;
        return it->second;
    }

    VertexIdx vertex(std::string_view id) const {
        auto v = find_vertex(id);
        if (!v) throw std::invalid_argument("unknown vertex '" + std::string(id) + "'");
        return *v;
    }
    EdgeIdx edge(std::string_view id) const {
        auto e = find_edge(id);
        if (!e) throw std::invalid_argument("unknown edge '" + std::string(id) + "'");
        return *e;
    }

    /// Same underlying graph: pointer identity or structural equality. Used
    /// to reject mixing values from different graphs.
    bool same(const Graph& o) const {
        if (data_ == o.data_) return true;
        return data_->vertex_ids == o.data_->vertex_ids && data_->edge_ids == o.data_->edge_ids &&
               data_->edge_source == o.data_->edge_source && data_->edge_range == o.data_->edge_range;
    }

    static Graph from_parts(std::vector<std::string> vertex_ids,
                            std::vector<std::pair<std::string, std::pair<std::string, std::string>>> edges);

private:
    explicit Graph(std::shared_ptr<const detail::GraphData> d) : data_(std::move(d)) {}
    std::shared_ptr<const detail::GraphData> data_;
};

inline Graph Graph::from_parts(std::vector<std::string> vertex_ids,
                               std::vector<std::pair<std::string, std::pair<std::string, std::string>>> edges) {
    auto data = std::make_shared<detail::GraphData>();
    if (vertex_ids.empty()) throw std::invalid_argument("graph has no vertices");
    std::sort(vertex_ids.begin(), vertex_ids.end());
    data->vertex_ids = std::move(vertex_ids);
    for (VertexIdx i = 0; i < data->vertex_ids.size(); ++i)
        data->vertex_index.emplace(data->vertex_ids[i], i);

    std::sort(edges.begin(), edges.end());
    data->out.resize(data->vertex_ids.size());
    for (EdgeIdx i = 0; i < edges.size(); ++i) {
        const auto& [id, ends] = edges[i];
        auto s = data->vertex_index.find(ends.first);
        auto r = data->vertex_index.find(ends.second);
        if (s == data->vertex_index.end())
            throw std::invalid_argument("edge '" + id + "': unknown source vertex '" + ends.first + "'");
        if (r == data->vertex_index.end())
            throw std::invalid_argument("edge '" + id + "': unknown range vertex '" + ends.second + "'");
        data->edge_ids.push_back(id);
        data->edge_index.emplace(id, i);
        data->edge_source.push_back(s->second);
        data->edge_range.push_back(r->second);
        data->out[s->second].push_back(i);
    }
    return Graph(std::move(data));
}

/// Finite path: an anchor vertex plus a (possibly empty) composable edge
/// sequence. A length-0 path is the vertex itself. The type is index-based
/// and does not hold a graph; operations that need incidence take one.
class Path {
public:
    explicit Path(VertexIdx anchor) : source_(anchor) {}
    Path(VertexIdx source, std::vector<EdgeIdx> edges) : source_(source), edges_(std::move(edges)) {}

    std::size_t length() const { return edges_.size(); }
    VertexIdx source() const { return source_; }
    VertexIdx range(const Graph& g) const { return edges_.empty() ? source_ : g.edge_range(edges_.back()); }
    const std::vector<EdgeIdx>& edges() const { return edges_; }

    Path extended([[maybe_unused]] const Graph& g, EdgeIdx e) const {
        assert(g.edge_source(e) == range(g));
        Path p = *this;
        p.edges_.push_back(e);
        return p;
    }

    bool operator==(const Path& o) const { return source_ == o.source_ && edges_ == o.edges_; }
    bool operator!=(const Path& o) const { return !(*this == o); }
    // (length, edge sequence, source): length-0 paths sort before longer
    // ones, so vertex cylinders come first in any keyed container.
    bool operator<(const Path& o) const {
        if (edges_.size() != o.edges_.size()) return edges_.size() < o.edges_.size();
        if (edges_ != o.edges_) return edges_ < o.edges_;
        return source_ < o.source_;
    }

private:
    VertexIdx source_;
    std::vector<EdgeIdx> edges_;
};

inline bool is_valid_path(const Graph& g, const Path& p) {
    if (p.source() >= g.vertex_count()) return false;
    VertexIdx at = p.source();
    for (EdgeIdx e : p.edges()) {
        if (e >= g.edge_count() || g.edge_source(e) != at) return false;
        at = g.edge_range(e);
    }
    return true;
}

/// `a` is an initial subpath of `b` (length-0 `a`: same source).
inline bool is_prefix(const Path& a, const Path& b) {
    if (a.source() != b.source()) return false;
    if (a.length() > b.length()) return false;
    return std::equal(a.edges().begin(), a.edges().end(), b.edges().begin());
}

/// `p` with the initial subpath `prefix` removed; requires is_prefix.
inline Path strip_prefix(const Graph& g, const Path& p, const Path& prefix) {
    std::vector<EdgeIdx> rest(p.edges().begin() + static_cast<std::ptrdiff_t>(prefix.length()), p.edges().end());
    return Path(prefix.range(g), std::move(rest));
}

inline Path concat(const Graph& g, const Path& a, const Path& b) {
    if (a.range(g) != b.source()) throw std::invalid_argument("concat: paths not composable");
    std::vector<EdgeIdx> edges = a.edges();
    edges.insert(edges.end(), b.edges().begin(), b.edges().end());
    return Path(a.source(), std::move(edges));
}

inline std::string path_to_string(const Graph& g, const Path& p) {
    if (p.length() == 0) return g.vertex_id(p.source());
    std::string s;
    for (std::size_t i = 0; i < p.length(); ++i) {
        if (i) s += ' ';
        s += g.edge_id(p.edges()[i]);
    }
    return s;
}

/// Parses "v" or "e1 e2 ..." (whitespace-separated edge ids) into a path.
inline Path parse_path(const Graph& g, std::string_view text) {
    std::istringstream in{std::string(text)};
    std::vector<std::string> tokens;
    for (std::string t; in >> t;) tokens.push_back(t);
    if (tokens.empty()) throw ParseError("empty path", 1);
    if (tokens.size() == 1) {
        if (auto v = g.find_vertex(tokens[0])) return Path(*v);
    }
    std::vector<EdgeIdx> edges;
    for (const auto& t : tokens) edges.push_back(g.edge(t));
    const VertexIdx source = g.edge_source(edges[0]);
    Path p(source, std::move(edges));
    if (!is_valid_path(g, p)) throw std::invalid_argument("path not composable: '" + std::string(text) + "'");
    return p;
}

/// All paths of length 0..max_len, length-major, lexicographic within a
/// length (vertices sorted by id; extensions by edge id). Equals the full
/// finite-path set W when the graph is acyclic and max_len is large enough.
inline std::vector<Path> enumerate_paths(const Graph& g, std::size_t max_len) {
    std::vector<Path> all;
    std::vector<Path> frontier;
    for (VertexIdx v = 0; v < g.vertex_count(); ++v) frontier.emplace_back(v);
    all = frontier;
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<Path> next;
        for (const Path& p : frontier)
            for (EdgeIdx e : g.out_edges(p.range(g))) next.push_back(p.extended(g, e));
        if (next.empty()) break;
        all.insert(all.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return all;
}

/// All simple closed cycles, each as its edge sequence. A cycle is reported
/// once, rooted at its minimal vertex. Intended for desk-scale graphs.
inline std::vector<std::vector<EdgeIdx>> simple_cycles(const Graph& g) {
    std::vector<std::vector<EdgeIdx>> cycles;
    std::vector<EdgeIdx> stack;
    std::vector<bool> on_path(g.vertex_count(), false);

    auto dfs = [&](auto&& self, VertexIdx root, VertexIdx at) -> void {
        for (EdgeIdx e : g.out_edges(at)) {
            const VertexIdx w = g.edge_range(e);
            if (w == root) {
                stack.push_back(e);
                cycles.push_back(stack);
                stack.pop_back();
            } else if (w > root && !on_path[w]) {
                stack.push_back(e);
                on_path[w] = true;
                self(self, root, w);
                on_path[w] = false;
                stack.pop_back();
            }
        }
    };
    for (VertexIdx root = 0; root < g.vertex_count(); ++root) dfs(dfs, root, root);
    return cycles;
}

/// Condition (L): every simple closed cycle has an exit, i.e. some vertex on
/// the cycle emits an edge not on that cycle. Vacuously true when acyclic.
inline bool condition_L(const Graph& g) {
    for (const auto& cycle : simple_cycles(g)) {
        std::set<EdgeIdx> cycle_edges(cycle.begin(), cycle.end());
        bool has_exit = false;
        for (EdgeIdx e : cycle) {
            for (EdgeIdx out : g.out_edges(g.edge_source(e)))
                if (!cycle_edges.count(out)) {
                    has_exit = true;
                    break;
                }
            if (has_exit) break;
        }
        if (!has_exit) return false;
    }
    return true;
}

/// Parses the graph file format: statements separated by newlines or ';',
/// `#` starts a comment, blank statements ignored.
///   vertex <id>
///   edge <id>: <src> -> <dst>
/// Identifiers match [A-Za-z][A-Za-z0-9_]*; vertex and edge names share one
/// namespace. Vertex/edge order in the result is lexicographic by id.
inline Graph load_graph(std::string_view text) {
    const auto stmts = detail::split_statements(text);

    std::vector<std::string> vertices;
    std::vector<std::pair<std::string, std::pair<std::string, std::string>>> edges;
    std::map<std::string, std::size_t> declared; // name -> line, both namespaces
    std::vector<std::pair<std::size_t, std::size_t>> edge_lines; // index in `edges` -> line

    auto trim = detail::trim_copy;
    auto declare = [&](const std::string& name, std::size_t line) {
        auto [it, fresh] = declared.emplace(name, line);
        if (!fresh)
            throw ParseError("line " + std::to_string(line) + ": duplicate id '" + name +
                                 "' (first declared at line " + std::to_string(it->second) + ")",
                             line);
    };

    for (const auto& [body, line] : stmts) {
        std::istringstream in(body);
        std::string kw;
        in >> kw;
        std::string rest;
        std::getline(in, rest);
        rest = trim(rest);
        if (kw == "vertex") {
            if (!detail::valid_identifier(rest))
                throw ParseError("line " + std::to_string(line) + ": bad vertex id '" + rest + "'", line);
            declare(rest, line);
            vertices.push_back(rest);
        } else if (kw == "edge") {
            auto colon = rest.find(':');
            if (colon == std::string::npos)
                throw ParseError("line " + std::to_string(line) + ": expected 'edge <id>: <src> -> <dst>'", line);
            std::string id = trim(rest.substr(0, colon));
            std::string ends = rest.substr(colon + 1);
            auto arrow = ends.find("->");
            if (arrow == std::string::npos)
                throw ParseError("line " + std::to_string(line) + ": expected '-> <dst>' in edge declaration", line);
            std::string src = trim(ends.substr(0, arrow));
            std::string dst = trim(ends.substr(arrow + 2));
            for (const std::string* part : {&id, &src, &dst})
                if (!detail::valid_identifier(*part))
                    throw ParseError("line " + std::to_string(line) + ": bad identifier '" + *part + "'", line);
            declare(id, line);
            edges.push_back({id, {src, dst}});
            edge_lines.push_back({edges.size() - 1, line});
        } else {
            throw ParseError("line " + std::to_string(line) + ": unknown statement '" + kw + "'", line);
        }
    }

    if (vertices.empty()) throw ParseError("graph has no vertices", stmts.empty() ? 1 : stmts.back().line);

    std::set<std::string> vertex_set(vertices.begin(), vertices.end());
    for (const auto& [idx, line] : edge_lines) {
        const auto& [id, ends] = edges[idx];
        for (const std::string* v : {&ends.first, &ends.second})
            if (!vertex_set.count(*v))
                throw ParseError("line " + std::to_string(line) + ": edge '" + id +
                                     "' refers to undeclared vertex '" + *v + "'",
                                 line);
    }
    return Graph::from_parts(std::move(vertices), std::move(edges));
}

/// Inverse of load_graph; reloading the result yields the same graph.
inline std::string graph_to_string(const Graph& g) {
    std::string out;
    for (VertexIdx v = 0; v < g.vertex_count(); ++v) out += "vertex " + g.vertex_id(v) + "\n";
    for (EdgeIdx e = 0; e < g.edge_count(); ++e)
        out += "edge " + g.edge_id(e) + ": " + g.vertex_id(g.edge_source(e)) + " -> " +
               g.vertex_id(g.edge_range(e)) + "\n";
    return out;
}

} // namespace lpa
