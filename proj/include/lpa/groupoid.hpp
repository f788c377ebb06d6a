#pragma once

#include "lpa/graph.hpp"

#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace lpa {

/// One symbol of a groupoid word: an edge e or its ghost e*. Extended
/// incidence follows s(e*) = r(e), r(e*) = s(e).
struct Letter {
    EdgeIdx edge;
    bool ghost;

    bool operator==(const Letter& o) const { return edge == o.edge && ghost == o.ghost; }
    bool operator!=(const Letter& o) const { return !(*this == o); }
    bool operator<(const Letter& o) const { return std::tie(edge, ghost) < std::tie(o.edge, o.ghost); }
};

inline VertexIdx letter_source(const Graph& g, Letter l) {
    return l.ghost ? g.edge_range(l.edge) : g.edge_source(l.edge);
}
inline VertexIdx letter_range(const Graph& g, Letter l) {
    return l.ghost ? g.edge_source(l.edge) : g.edge_range(l.edge);
}

/// Element of the free path groupoid G: an irreducible composable word over
/// edges and ghost edges, or an identity anchored at a vertex (the empty
/// word). Immutable; construct through identity(), single() or reduce().
class GroupoidElement {
public:
    static GroupoidElement identity(const Graph& g, VertexIdx v) {
        return GroupoidElement(g, v, {});
    }

    static GroupoidElement single(const Graph& g, Letter l) {
        return GroupoidElement(g, letter_source(g, l), {l});
    }

    /// Cancels adjacent e e* / e* e pairs until no reduction applies. The raw
    /// sequence must be composable; the anchor is required only when the
    /// sequence is empty (it names the identity's vertex) and must agree with
    /// the first letter otherwise.
    static GroupoidElement reduce(const Graph& g, const std::vector<Letter>& letters,
                                  std::optional<VertexIdx> anchor = std::nullopt) {
        if (letters.empty()) {
            if (!anchor) throw std::invalid_argument("reduce: empty sequence needs an anchor vertex");
            return identity(g, *anchor);
        }
        if (anchor && *anchor != letter_source(g, letters.front()))
            throw std::invalid_argument("reduce: anchor does not match the first letter's source");
        for (std::size_t i = 0; i + 1 < letters.size(); ++i)
            if (letter_range(g, letters[i]) != letter_source(g, letters[i + 1]))
                throw std::invalid_argument("reduce: letters " + std::to_string(i) + "," +
                                            std::to_string(i + 1) + " not composable");
        std::vector<Letter> out;
        for (Letter l : letters) {
            if (!out.empty() && out.back().edge == l.edge && out.back().ghost != l.ghost)
                out.pop_back();
            else
                out.push_back(l);
        }
        return GroupoidElement(g, letter_source(g, letters.front()), std::move(out));
    }

    bool is_identity() const { return word_.empty(); }
    std::size_t length() const { return word_.size(); }
    const std::vector<Letter>& word() const { return word_; }
    const Graph& graph() const { return graph_; }

    /// s(g) -- the vertex whose identity satisfies s(g)·g = g.
    VertexIdx source() const { return source_; }
    /// r(g) -- the vertex whose identity satisfies g·r(g) = g.
    VertexIdx range() const { return word_.empty() ? source_ : letter_range(graph_, word_.back()); }

    GroupoidElement inverse() const {
        std::vector<Letter> rev(word_.rbegin(), word_.rend());
        for (Letter& l : rev) l.ghost = !l.ghost;
        return GroupoidElement(graph_, range(), std::move(rev));
    }

    bool operator==(const GroupoidElement& o) const {
        return word_ == o.word_ && source_ == o.source_;
    }
    bool operator!=(const GroupoidElement& o) const { return !(*this == o); }
    // (length, letters, source); identities order by vertex.
    bool operator<(const GroupoidElement& o) const {
        if (word_.size() != o.word_.size()) return word_.size() < o.word_.size();
        if (word_ != o.word_) return word_ < o.word_;
        return source_ < o.source_;
    }

private:
    GroupoidElement(Graph g, VertexIdx source, std::vector<Letter> word)
        : graph_(std::move(g)), source_(source), word_(std::move(word)) {}

    Graph graph_;
    VertexIdx source_; // = s(first letter) for words; the anchor for identities
    std::vector<Letter> word_;
};

/// Partial product g·h = irr(gh), defined iff r(g) = s(h). The nullopt
/// outcome is "not composable" (Def. of the skew product maps it to 0),
/// not an error.
inline std::optional<GroupoidElement> mul(const GroupoidElement& a, const GroupoidElement& b) {
    if (a.range() != b.source()) return std::nullopt;
    std::vector<Letter> letters = a.word();
    letters.insert(letters.end(), b.word().begin(), b.word().end());
    return GroupoidElement::reduce(a.graph(), letters, a.source());
}

inline std::string word_to_string(const Graph& g, const GroupoidElement& e) {
    if (e.is_identity()) return g.vertex_id(e.source());
    std::string s;
    for (std::size_t i = 0; i < e.word().size(); ++i) {
        if (i) s += ' ';
        s += g.edge_id(e.word()[i].edge);
        if (e.word()[i].ghost) s += '*';
    }
    return s;
}

/// Parses the groupoid word syntax: whitespace-separated tokens, each a
/// vertex id (an identity), an edge id, or an edge id followed by '*'.
/// Tokens are folded with the partial product, so the word is also reduced.
inline GroupoidElement parse_word(const Graph& g, std::string_view text) {
    std::istringstream in{std::string(text)};
    std::vector<std::string> tokens;
    for (std::string t; in >> t;) tokens.push_back(t);
    if (tokens.empty()) throw ParseError("empty groupoid word", 1);

    std::optional<GroupoidElement> acc;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        std::string t = tokens[i];
        bool ghost = false;
        if (t.size() > 1 && t.back() == '*') {
            ghost = true;
            t.pop_back();
        }
        GroupoidElement piece = [&] {
            if (auto e = g.find_edge(t)) return GroupoidElement::single(g, Letter{*e, ghost});
            if (auto v = g.find_vertex(t)) {
                if (ghost) throw ParseError("ghost marker on a vertex '" + t + "'", i + 1);
                return GroupoidElement::identity(g, *v);
            }
            throw ParseError("unknown identifier '" + t + "' in groupoid word", i + 1);
        }();
        if (!acc) {
            acc = piece;
        } else {
            auto prod = mul(*acc, piece);
            if (!prod)
                throw std::invalid_argument("groupoid word not composable at token '" + tokens[i] + "'");
            acc = *prod;
        }
    }
    return *acc;
}

/// The shape of a groupoid element with nonempty cylinder: a vertex identity,
/// a path a, an inverse path a^{-1}, or a pair a·b^{-1} with r(a)=r(b) and
/// distinct last edges. Exactly the elements of S = {g : X_g nonempty}.
class SForm {
public:
    enum class Kind { IdVertex, DirPath, InvPath, PathPair };

    static SForm id_vertex(VertexIdx v) { return SForm(Kind::IdVertex, Path(v), Path(v)); }

    static SForm dir_path(const Graph& g, Path a) {
        require_path(g, a, "SForm path");
        return SForm(Kind::DirPath, a, Path(a.range(g)));
    }

    static SForm inv_path(const Graph& g, Path a) {
        require_path(g, a, "SForm inverse path");
        return SForm(Kind::InvPath, a, Path(a.range(g)));
    }

    /// Normalizing constructor for a·b^{-1}: length-0 b gives a path,
    /// length-0 a an inverse path, both length-0 the vertex identity.
    static SForm path_pair(const Graph& g, Path a, Path b) {
        if (a.range(g) != b.range(g)) throw std::invalid_argument("SForm pair: r(a) != r(b)");
        if (b.length() == 0) return a.length() == 0 ? id_vertex(a.source()) : dir_path(g, a);
        if (a.length() == 0) return inv_path(g, b);
        if (a.edges().back() == b.edges().back())
            throw std::invalid_argument("SForm pair: word a b* is reducible (equal last edges)");
        return SForm(Kind::PathPair, a, b);
    }

    Kind kind() const { return kind_; }
    /// Direct part: the path for DirPath/InvPath, a of the pair, the vertex
    /// as a length-0 path for IdVertex.
    const Path& a() const { return a_; }
    /// Second path of a pair (unspecified meaning otherwise).
    const Path& b() const { return b_; }

    VertexIdx source(const Graph& g) const {
        switch (kind_) {
        case Kind::IdVertex: return a_.source();
        case Kind::DirPath: return a_.source();
        case Kind::InvPath: return a_.range(g);
        case Kind::PathPair: return a_.source();
        }
        return a_.source();
    }
    VertexIdx range(const Graph& g) const {
        switch (kind_) {
        case Kind::IdVertex: return a_.source();
        case Kind::DirPath: return a_.range(g);
        case Kind::InvPath: return a_.source();
        case Kind::PathPair: return b_.source();
        }
        return a_.source();
    }

    SForm inverse() const {
        switch (kind_) {
        case Kind::IdVertex: return *this;
        case Kind::DirPath: return SForm(Kind::InvPath, a_, b_);
        case Kind::InvPath: return SForm(Kind::DirPath, a_, b_);
        case Kind::PathPair: return SForm(Kind::PathPair, b_, a_);
        }
        return *this;
    }

    bool operator==(const SForm& o) const { return kind_ == o.kind_ && a_ == o.a_ && b_ == o.b_; }
    bool operator!=(const SForm& o) const { return !(*this == o); }
    bool operator<(const SForm& o) const {
        if (kind_ != o.kind_) return kind_ < o.kind_;
        if (a_ != o.a_) return a_ < o.a_;
        return b_ < o.b_;
    }

private:
    SForm(Kind k, Path a, Path b) : kind_(k), a_(std::move(a)), b_(std::move(b)) {}
    static void require_path(const Graph& g, const Path& p, const char* what) {
        if (p.length() == 0 || !is_valid_path(g, p))
            throw std::invalid_argument(std::string(what) + ": need a valid path of length >= 1");
    }

    Kind kind_;
    Path a_;
    Path b_; // PathPair only; mirrors a_ otherwise
};

inline GroupoidElement to_element(const Graph& g, const SForm& s) {
    std::vector<Letter> letters;
    if (s.kind() == SForm::Kind::DirPath || s.kind() == SForm::Kind::PathPair)
        for (EdgeIdx e : s.a().edges()) letters.push_back(Letter{e, false});
    if (s.kind() == SForm::Kind::InvPath)
        for (auto it = s.a().edges().rbegin(); it != s.a().edges().rend(); ++it)
            letters.push_back(Letter{*it, true});
    if (s.kind() == SForm::Kind::PathPair)
        for (auto it = s.b().edges().rbegin(); it != s.b().edges().rend(); ++it)
            letters.push_back(Letter{*it, true});
    if (letters.empty()) return GroupoidElement::identity(g, s.a().source());
    return GroupoidElement::reduce(g, letters);
}

/// Matches an irreducible element against the nonempty-cylinder shapes.
/// Returns nullopt for every other pattern (e.g. a ghost letter followed by
/// an edge letter anywhere in the word): those have X_g empty.
inline std::optional<SForm> classify_S(const GroupoidElement& e) {
    const Graph& g = e.graph();
    if (e.is_identity()) return SForm::id_vertex(e.source());
    std::size_t first_ghost = 0;
    while (first_ghost < e.length() && !e.word()[first_ghost].ghost) ++first_ghost;
    for (std::size_t i = first_ghost; i < e.length(); ++i)
        if (!e.word()[i].ghost) return std::nullopt;

    std::vector<EdgeIdx> a_edges, b_edges;
    for (std::size_t i = 0; i < first_ghost; ++i) a_edges.push_back(e.word()[i].edge);
    for (std::size_t i = e.length(); i > first_ghost; --i) b_edges.push_back(e.word()[i - 1].edge);
    if (b_edges.empty()) return SForm::dir_path(g, Path(e.source(), std::move(a_edges)));
    const VertexIdx b_source = g.edge_source(b_edges.front());
    Path b(b_source, std::move(b_edges));
    if (a_edges.empty()) return SForm::inv_path(g, b);
    return SForm::path_pair(g, Path(e.source(), std::move(a_edges)), b);
}

inline std::string sform_to_string(const Graph& g, const SForm& s) {
    return word_to_string(g, to_element(g, s));
}

/// All of S with both underlying path lengths <= max_len, sorted by the
/// element order (length, letters, vertex). Complete when the graph is
/// acyclic and max_len covers the longest path.
inline std::vector<SForm> enumerate_S(const Graph& g, std::size_t max_len) {
    std::vector<SForm> out;
    const auto paths = enumerate_paths(g, max_len);
    for (VertexIdx v = 0; v < g.vertex_count(); ++v) out.push_back(SForm::id_vertex(v));
    std::vector<std::vector<Path>> ending_at(g.vertex_count());
    for (const Path& p : paths) {
        if (p.length() == 0) continue;
        out.push_back(SForm::dir_path(g, p));
        out.push_back(SForm::inv_path(g, p));
        ending_at[p.range(g)].push_back(p);
    }
    for (VertexIdx v = 0; v < g.vertex_count(); ++v)
        for (const Path& a : ending_at[v])
            for (const Path& b : ending_at[v])
                if (a.edges().back() != b.edges().back()) out.push_back(SForm::path_pair(g, a, b));

    std::sort(out.begin(), out.end(), [&](const SForm& x, const SForm& y) {
        return to_element(g, x) < to_element(g, y);
    });
    return out;
}

} // namespace lpa
