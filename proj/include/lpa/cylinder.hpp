#pragma once

#include "lpa/groupoid.hpp"
#include "lpa/scalar.hpp"

#include <cassert>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lpa {

// A cylinder generator is a finite path prefix p, standing for
// X_p = { xi in X : xi starts with p }. Length-0 p at v is the vertex
// cylinder X_v = { xi : s(xi) = v }. In a finite graph every such set is
// nonempty: any path extends to a sink or to an infinite path.

namespace detail {

/// X_a ∩ X_b for generator cylinders: the longer one if one prefixes the
/// other, empty otherwise.
inline std::optional<Path> intersect_cylinders(const Path& a, const Path& b) {
    if (is_prefix(a, b)) return b;
    if (is_prefix(b, a)) return a;
    return std::nullopt;
}

/// The prefix the cylinder X_s sits over: a for paths and pairs a·b^{-1},
/// the range vertex for inverse paths, the vertex itself for identities.
inline Path sform_cylinder(const Graph& g, const SForm& s) {
    switch (s.kind()) {
    case SForm::Kind::IdVertex: return s.a();
    case SForm::Kind::DirPath: return s.a();
    case SForm::Kind::InvPath: return Path(s.a().range(g));
    case SForm::Kind::PathPair: return s.a();
    }
    return s.a();
}

/// Domain prefix of theta_s (= the cylinder of s^{-1}).
inline Path sform_domain_prefix(const Graph& g, const SForm& s) {
    return sform_cylinder(g, s.inverse());
}

/// theta_s restricted to one generator cylinder: the image of X_k ∩ X_{s^-1}
/// as a cylinder, nullopt when that intersection is empty. theta_s replaces
/// the domain prefix by the target prefix and keeps the tail.
inline std::optional<Path> theta_on_cylinder(const Graph& g, const SForm& s, const Path& key) {
    const Path src = sform_domain_prefix(g, s);
    const Path dst = sform_cylinder(g, s);
    auto cut = intersect_cylinders(src, key);
    if (!cut) return std::nullopt;
    return concat(g, dst, strip_prefix(g, *cut, src));
}

} // namespace detail

/// Element of D(X): a finite exact-scalar combination of characteristic
/// functions of cylinder sets, stored as a key -> coefficient map with zero
/// coefficients absent. The stored keys need not be canonical; canonicalize()
/// computes the unique normal form and eq() decides pointwise equality.
template <ScalarField K>
class CylFunction {
public:
    explicit CylFunction(Graph g) : graph_(std::move(g)) {}

    static CylFunction zero(const Graph& g) { return CylFunction(g); }

    const Graph& graph() const { return graph_; }
    const std::map<Path, K>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); } // structural; semantic zero via eq()

    K coefficient(const Path& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? K(0) : it->second;
    }

    void add_term(const Path& key, const K& c) {
        assert(is_valid_path(graph_, key));
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(key, c);
        if (!fresh) {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    bool operator==(const CylFunction& o) const { return terms_ == o.terms_; }
    bool operator!=(const CylFunction& o) const { return !(*this == o); }

private:
    Graph graph_;
    std::map<Path, K> terms_;
};

template <ScalarField K>
CylFunction<K> add(const CylFunction<K>& f, const CylFunction<K>& g) {
    if (!f.graph().same(g.graph())) throw std::invalid_argument("CylFunction add: graph mismatch");
    CylFunction<K> out = f;
    for (const auto& [k, c] : g.terms()) out.add_term(k, c);
    return out;
}

template <ScalarField K>
CylFunction<K> scale(const K& c, const CylFunction<K>& f) {
    CylFunction<K> out(f.graph());
    if (c.is_zero()) return out;
    for (const auto& [k, v] : f.terms()) out.add_term(k, c * v);
    return out;
}

template <ScalarField K>
CylFunction<K> sub(const CylFunction<K>& f, const CylFunction<K>& g) {
    return add(f, scale(K(-1), g));
}

/// 1_s: the characteristic function of X_s for s in S.
template <ScalarField K>
CylFunction<K> one(const Graph& g, const SForm& s) {
    CylFunction<K> out(g);
    out.add_term(detail::sform_cylinder(g, s), K(1));
    return out;
}

/// Pointwise product. On generators X_a ∩ X_b follows the prefix rule.
template <ScalarField K>
CylFunction<K> mul(const CylFunction<K>& f, const CylFunction<K>& g) {
    if (!f.graph().same(g.graph())) throw std::invalid_argument("CylFunction mul: graph mismatch");
    CylFunction<K> out(f.graph());
    for (const auto& [ka, ca] : f.terms())
        for (const auto& [kb, cb] : g.terms())
            if (auto k = detail::intersect_cylinders(ka, kb)) out.add_term(*k, ca * cb);
    return out;
}

namespace detail {

/// The depth-N sink-aware cells refining X_k: extensions of k of length N,
/// plus shorter extensions that end at a sink (which cannot extend further).
/// These cells partition X_k, and every cylinder of depth <= N is a disjoint
/// union of such cells.
inline void refine_to_depth(const Graph& g, const Path& key, std::size_t depth,
                            const std::function<void(const Path&)>& emit) {
    if (key.length() >= depth || g.is_sink(key.range(g))) {
        emit(key);
        return;
    }
    for (EdgeIdx e : g.out_edges(key.range(g))) refine_to_depth(g, key.extended(g, e), depth, emit);
}

} // namespace detail

/// Unique normal form: expand all keys to the common sink-aware partition at
/// the maximal key depth, sum coefficients, then re-merge every complete
/// out-edge family with equal coefficients bottom-up until fixpoint. Two
/// functions are pointwise equal on X iff their canonical forms coincide.
template <ScalarField K>
CylFunction<K> canonicalize(const CylFunction<K>& f) {
    const Graph& g = f.graph();
    if (f.terms().empty()) return f;
    std::size_t depth = 0;
    for (const auto& [k, c] : f.terms()) depth = std::max(depth, k.length());

    CylFunction<K> out(g);
    for (const auto& [k, c] : f.terms())
        detail::refine_to_depth(g, k, depth, [&](const Path& cell) { out.add_term(cell, c); });

    // merge: whenever all of { p·e : e out of r(p) } carry one coefficient,
    // replace the family by p. Deepest level first; merged keys take part in
    // the next level up.
    std::map<Path, K> terms = out.terms();
    for (std::size_t len = depth; len >= 1; --len) {
        std::map<Path, K> parents;
        for (const auto& [k, c] : terms) {
            if (k.length() != len) continue;
            Path parent(k.source(),
                        std::vector<EdgeIdx>(k.edges().begin(), k.edges().end() - 1));
            if (!parents.count(parent)) parents.emplace(parent, c);
        }
        for (const auto& [parent, sample] : parents) {
            const auto& fam = g.out_edges(parent.range(g));
            bool complete = true;
            for (EdgeIdx e : fam) {
                auto it = terms.find(parent.extended(g, e));
                if (it == terms.end() || !(it->second == sample)) {
                    complete = false;
                    break;
                }
            }
            if (!complete) continue;
            for (EdgeIdx e : fam) terms.erase(parent.extended(g, e));
            auto [it, fresh] = terms.emplace(parent, sample);
            if (!fresh) {
                it->second = it->second + sample;
                if (it->second.is_zero()) terms.erase(it);
            }
        }
    }

    CylFunction<K> result(g);
    for (const auto& [k, c] : terms) result.add_term(k, c);
    return result;
}

/// Pointwise equality as functions on X.
template <ScalarField K>
bool eq(const CylFunction<K>& f, const CylFunction<K>& g) {
    if (!f.graph().same(g.graph())) throw std::invalid_argument("CylFunction eq: graph mismatch");
    if (f == g) return true; // structural equality is sufficient
    return canonicalize(f) == canonicalize(g);
}

/// alpha_s : D_{s^{-1}} -> D_s, f |-> f ∘ theta_{s^{-1}}. Implemented as the
/// prefix rewrite: project onto X_{s^{-1}} (which must not change f), then
/// replace the domain prefix of every key by the target prefix.
template <ScalarField K>
CylFunction<K> alpha(const SForm& s, const CylFunction<K>& f) {
    const Graph& g = f.graph();
    const CylFunction<K> projected = mul(one<K>(g, s.inverse()), f);
    if (!(projected == f) && !eq(projected, f))
        throw std::invalid_argument("alpha: function is not supported in X_{s^-1}");
    const Path src = detail::sform_domain_prefix(g, s);
    const Path dst = detail::sform_cylinder(g, s);
    CylFunction<K> out(g);
    for (const auto& [k, c] : projected.terms())
        out.add_term(concat(g, dst, strip_prefix(g, k, src)), c);
    return out;
}

/// A point of X at finite resolution: either an exact finite element (a path
/// ending at a sink, possibly a bare sink vertex) or the truncation of the
/// infinite continuations of a path at a non-sink.
class BoundaryPoint {
public:
    static BoundaryPoint sink_path(const Graph& g, Path p) {
        if (!is_valid_path(g, p) || !g.is_sink(p.range(g)))
            throw std::invalid_argument("BoundaryPoint: sink path must end at a sink");
        return BoundaryPoint(std::move(p), false);
    }
    static BoundaryPoint truncation(const Graph& g, Path p) {
        if (!is_valid_path(g, p) || g.is_sink(p.range(g)))
            throw std::invalid_argument("BoundaryPoint: truncation must end at a non-sink");
        return BoundaryPoint(std::move(p), true);
    }

    const Path& path() const { return path_; }
    bool is_truncation() const { return truncation_; }

    bool operator==(const BoundaryPoint& o) const {
        return truncation_ == o.truncation_ && path_ == o.path_;
    }
    bool operator<(const BoundaryPoint& o) const {
        if (truncation_ != o.truncation_) return truncation_ < o.truncation_;
        return path_ < o.path_;
    }

private:
    BoundaryPoint(Path p, bool t) : path_(std::move(p)), truncation_(t) {}
    Path path_;
    bool truncation_;
};

/// Every point of X at resolution `depth`: all sink paths of length <= depth
/// plus one truncation per length-`depth` path at a non-sink. These represent
/// the cells every cylinder function of key depth <= depth is constant on.
inline std::vector<BoundaryPoint> boundary_points(const Graph& g, std::size_t depth) {
    std::vector<BoundaryPoint> pts;
    for (const Path& p : enumerate_paths(g, depth)) {
        if (g.is_sink(p.range(g)))
            pts.push_back(BoundaryPoint::sink_path(g, p));
        else if (p.length() == depth)
            pts.push_back(BoundaryPoint::truncation(g, p));
    }
    return pts;
}

/// Value of f at the point (or on the truncation cell) p. A truncation must
/// be at least as deep as every key so the value is well defined.
template <ScalarField K>
K evaluate(const CylFunction<K>& f, const BoundaryPoint& p) {
    if (p.is_truncation())
        for (const auto& [k, c] : f.terms())
            if (k.length() > p.path().length())
                throw std::invalid_argument("evaluate: truncation shallower than a key");
    K total(0);
    for (const auto& [k, c] : f.terms())
        if (is_prefix(k, p.path())) total = total + c;
    return total;
}

/// theta_s acting on one generator cylinder; injectable so tests can corrupt
/// it and watch the axiom checker produce a witness.
using GeneratorAction =
    std::function<std::optional<Path>(const Graph&, const SForm&, const Path&)>;

inline std::optional<Path> default_generator_action(const Graph& g, const SForm& s, const Path& key) {
    return detail::theta_on_cylinder(g, s, key);
}

/// Checks the partial groupoid action axioms on all of S up to `depth`:
///   (i)   theta at a vertex identity fixes every cylinder at that vertex;
///   (ii)  theta_h^{-1}(X_{g^-1} ∩ X_h) ⊆ X_{(gh)^-1} for admissible (g,h);
///   (iii) theta_g ∘ theta_h = theta_{gh} on that set.
/// All checks run at the level of generator cylinders.
inline CheckReport check_partial_action_axioms(const Graph& g, std::size_t depth,
                                               const GeneratorAction& act = default_generator_action) {
    CheckReport rep;
    const auto S = enumerate_S(g, depth);

    for (VertexIdx v = 0; v < g.vertex_count(); ++v) {
        const SForm id = SForm::id_vertex(v);
        for (const Path& k : enumerate_paths(g, depth)) {
            if (k.source() != v) continue;
            ++rep.checks;
            auto img = act(g, id, k);
            if (!img || *img != k)
                rep.fail("axiom (i): theta_" + g.vertex_id(v) + " moved cylinder [" +
                         path_to_string(g, k) + "]");
        }
    }

    std::vector<GroupoidElement> elements;
    elements.reserve(S.size());
    for (const SForm& s : S) elements.push_back(to_element(g, s));

    for (std::size_t i = 0; i < S.size(); ++i) {
        const SForm& s = S[i];
        const auto& gel = elements[i];
        for (std::size_t j = 0; j < S.size(); ++j) {
            const SForm& t = S[j];
            const auto& hel = elements[j];
            if (gel.range() != hel.source()) continue;
            ++rep.checks;
            const auto product = mul(gel, hel);
            const auto s_gh = classify_S(*product);

            const auto a = detail::intersect_cylinders(detail::sform_cylinder(g, s.inverse()),
                                                       detail::sform_cylinder(g, t));
            // (ii)
            std::optional<Path> b;
            if (a) b = act(g, t.inverse(), *a);
            if (b) {
                if (!s_gh) {
                    rep.fail("axiom (ii): nonempty preimage [" + path_to_string(g, *b) +
                             "] but " + word_to_string(g, *product) + " has empty cylinder (g=" +
                             sform_to_string(g, s) + ", h=" + sform_to_string(g, t) + ")");
                } else {
                    const Path target = detail::sform_cylinder(g, s_gh->inverse());
                    if (!is_prefix(target, *b))
                        rep.fail("axiom (ii): theta_h^-1(X_{g^-1} ∩ X_h) = [" +
                                 path_to_string(g, *b) + "] not inside [" +
                                 path_to_string(g, target) + "] (g=" + sform_to_string(g, s) +
                                 ", h=" + sform_to_string(g, t) + ")");
                }
            }

            // (iii) on the domain cell and its immediate refinements
            if (!b) continue;
            std::vector<Path> cells{*b};
            for (EdgeIdx e : g.out_edges(b->range(g))) cells.push_back(b->extended(g, e));
            for (const Path& cell : cells) {
                ++rep.checks;
                auto via_h = act(g, t, cell);
                std::optional<Path> lhs;
                if (via_h) lhs = act(g, s, *via_h);
                std::optional<Path> rhs;
                if (s_gh) rhs = act(g, *s_gh, cell);
                if (lhs != rhs)
                    rep.fail("axiom (iii): theta_g(theta_h([" + path_to_string(g, cell) +
                             "])) != theta_{gh} (g=" + sform_to_string(g, s) + ", h=" +
                             sform_to_string(g, t) + ")");
            }
        }
    }
    return rep;
}

template <ScalarField K>
std::string to_string(const CylFunction<K>& f) {
    if (f.terms().empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : f.terms()) {
        if (!first) out += " + ";
        first = false;
        out += c.str() + "*1_[" + path_to_string(f.graph(), k) + "]";
    }
    return out;
}

} // namespace lpa
