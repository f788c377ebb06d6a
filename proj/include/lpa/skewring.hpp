#pragma once

#include "lpa/cylinder.hpp"

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace lpa {

/// Element of D(X) ⋊ G: a finite formal sum over degrees in S, the entry at
/// s being a coefficient in D_s = 1_s·D(X). Coefficients are stored in
/// canonical form with zero entries absent, so structural equality decides
/// ring equality componentwise.
template <ScalarField K>
class RingElement {
public:
    static RingElement zero(const Graph& g) { return RingElement(g); }

    const Graph& graph() const { return graph_; }
    const std::map<SForm, CylFunction<K>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Adds f at degree s; canonicalizes and drops the entry if it cancels.
    void accumulate(const SForm& s, const CylFunction<K>& f) {
        auto it = terms_.find(s);
        CylFunction<K> next = canonicalize(it == terms_.end() ? f : add(it->second, f));
        if (it != terms_.end()) terms_.erase(it);
        if (!next.is_zero()) terms_.emplace(s, std::move(next));
    }

    bool operator==(const RingElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const RingElement& o) const { return !(*this == o); }

    /// Single-degree element with the support invariant checked:
    /// the coefficient must satisfy a = 1_s·a.
    static RingElement component(const Graph& g, const SForm& s, const CylFunction<K>& f) {
        if (!eq(f, mul(one<K>(g, s), f)))
            throw std::invalid_argument("RingElement: coefficient not supported in X_s");
        RingElement out(g);
        out.accumulate(s, f);
        return out;
    }

    /// Bypasses the degree-support invariant. Exists for verification
    /// tooling (mutated products in tests); regular code never needs it.
    static RingElement unchecked(const Graph& g, std::map<SForm, CylFunction<K>> raw) {
        RingElement out(g);
        for (const auto& [s, f] : raw) out.accumulate(s, f);
        return out;
    }

private:
    explicit RingElement(Graph g) : graph_(std::move(g)) {}
    Graph graph_;
    std::map<SForm, CylFunction<K>> terms_;
};

/// phi(v) = 1_v δ_v
template <ScalarField K>
RingElement<K> gen_vertex(const Graph& g, VertexIdx v) {
    if (v >= g.vertex_count()) throw std::invalid_argument("gen_vertex: no such vertex");
    const SForm s = SForm::id_vertex(v);
    return RingElement<K>::component(g, s, one<K>(g, s));
}

/// phi(e) = 1_e δ_e
template <ScalarField K>
RingElement<K> gen_edge(const Graph& g, EdgeIdx e) {
    if (e >= g.edge_count()) throw std::invalid_argument("gen_edge: no such edge");
    const SForm s = SForm::dir_path(g, Path(g.edge_source(e), {e}));
    return RingElement<K>::component(g, s, one<K>(g, s));
}

/// phi(e*) = 1_{e^-1} δ_{e^-1}
template <ScalarField K>
RingElement<K> gen_ghost(const Graph& g, EdgeIdx e) {
    if (e >= g.edge_count()) throw std::invalid_argument("gen_ghost: no such edge");
    const SForm s = SForm::inv_path(g, Path(g.edge_source(e), {e}));
    return RingElement<K>::component(g, s, one<K>(g, s));
}

template <ScalarField K>
RingElement<K> gen_vertex(const Graph& g, std::string_view id) {
    return gen_vertex<K>(g, g.vertex(id));
}
template <ScalarField K>
RingElement<K> gen_edge(const Graph& g, std::string_view id) {
    return gen_edge<K>(g, g.edge(id));
}
template <ScalarField K>
RingElement<K> gen_ghost(const Graph& g, std::string_view id) {
    return gen_ghost<K>(g, g.edge(id));
}

template <ScalarField K>
RingElement<K> add(const RingElement<K>& x, const RingElement<K>& y) {
    if (!x.graph().same(y.graph())) throw std::invalid_argument("RingElement add: graph mismatch");
    RingElement<K> out = x;
    for (const auto& [s, f] : y.terms()) out.accumulate(s, f);
    return out;
}

template <ScalarField K>
RingElement<K> scalar_mul(const K& c, const RingElement<K>& x) {
    RingElement<K> out = RingElement<K>::zero(x.graph());
    if (c.is_zero()) return out;
    for (const auto& [s, f] : x.terms()) out.accumulate(s, scale(c, f));
    return out;
}

template <ScalarField K>
RingElement<K> sub(const RingElement<K>& x, const RingElement<K>& y) {
    return add(x, scalar_mul(K(-1), y));
}

/// The twisted product: a_g δ_g · b_h δ_h = alpha_g(alpha_{g^-1}(a_g)·b_h) δ_{gh}
/// for composable degrees, 0 otherwise. When irr(gh) falls outside S the
/// computed coefficient is necessarily the zero function; that is asserted,
/// not assumed.
template <ScalarField K>
RingElement<K> mul(const RingElement<K>& x, const RingElement<K>& y) {
    if (!x.graph().same(y.graph())) throw std::invalid_argument("RingElement mul: graph mismatch");
    const Graph& g = x.graph();
    RingElement<K> out = RingElement<K>::zero(g);
    for (const auto& [gs, ag] : x.terms()) {
        const auto gel = to_element(g, gs);
        for (const auto& [hs, bh] : y.terms()) {
            const auto hel = to_element(g, hs);
            if (gel.range() != hel.source()) continue;
            const auto prod = mul(gel, hel);
            const CylFunction<K> coeff = alpha(gs, mul(alpha(gs.inverse(), ag), bh));
            if (auto s = classify_S(*prod)) {
                out.accumulate(*s, coeff);
            } else if (!eq(coeff, CylFunction<K>::zero(g))) {
                throw std::logic_error("skew product: nonzero coefficient at degree outside S");
            }
        }
    }
    return out;
}

/// Componentwise equality (coefficients are stored canonical).
template <ScalarField K>
bool eq(const RingElement<K>& x, const RingElement<K>& y) {
    if (!x.graph().same(y.graph())) throw std::invalid_argument("RingElement eq: graph mismatch");
    return x == y;
}

template <ScalarField K>
std::set<SForm> degrees(const RingElement<K>& x) {
    std::set<SForm> out;
    for (const auto& [s, f] : x.terms()) out.insert(s);
    return out;
}

/// Homogeneous part at degree s (zero if absent).
template <ScalarField K>
RingElement<K> component(const RingElement<K>& x, const SForm& s) {
    auto it = x.terms().find(s);
    if (it == x.terms().end()) return RingElement<K>::zero(x.graph());
    return RingElement<K>::component(x.graph(), s, it->second);
}

/// Degree-ordered rendering: `<coeff> δ_[<degree word>]` terms joined by " + ".
template <ScalarField K>
std::string to_string(const RingElement<K>& x) {
    if (x.is_zero()) return "0";
    const Graph& g = x.graph();
    std::string out;
    bool first = true;
    for (const auto& [s, f] : x.terms()) {
        if (!first) out += " + ";
        first = false;
        const bool wrap = f.terms().size() > 1;
        out += (wrap ? "(" : "") + to_string(f) + (wrap ? ")" : "");
        out += " δ_[" + sform_to_string(g, s) + "]";
    }
    return out;
}

template <ScalarField K>
using RingProduct = std::function<RingElement<K>(const RingElement<K>&, const RingElement<K>&)>;

/// Verifies the five defining relations on the generator family
/// { 1_vδ_v, 1_eδ_e, 1_{e^-1}δ_{e^-1} }, quantified over all vertices, edges
/// and edge pairs, with the CK relation at every non-sink vertex. The product
/// is injectable so tests can corrupt it and watch a witness appear.
template <ScalarField K>
CheckReport verify_relations(const Graph& g, const RingProduct<K>& product = [](const auto& a, const auto& b) {
    return mul(a, b);
}) {
    CheckReport rep;
    const auto zero = RingElement<K>::zero(g);

    auto expect = [&](const RingElement<K>& got, const RingElement<K>& want, const std::string& what) {
        ++rep.checks;
        if (!(got == want)) rep.fail(what + ": got " + to_string(got) + ", expected " + to_string(want));
    };

    // (i) vv = v, vw = 0
    for (VertexIdx v = 0; v < g.vertex_count(); ++v) {
        const auto pv = gen_vertex<K>(g, v);
        for (VertexIdx w = 0; w < g.vertex_count(); ++w) {
            const auto pw = gen_vertex<K>(g, w);
            expect(product(pv, pw), v == w ? pv : zero,
                   "(i) " + g.vertex_id(v) + "·" + g.vertex_id(w));
        }
    }
    // (ii) s(e)e = e r(e) = e ; (iii) r(e)e* = e* s(e) = e*
    for (EdgeIdx e = 0; e < g.edge_count(); ++e) {
        const auto pe = gen_edge<K>(g, e);
        const auto pg = gen_ghost<K>(g, e);
        const auto ps = gen_vertex<K>(g, g.edge_source(e));
        const auto pr = gen_vertex<K>(g, g.edge_range(e));
        expect(product(ps, pe), pe, "(ii) s(e)·e for " + g.edge_id(e));
        expect(product(pe, pr), pe, "(ii) e·r(e) for " + g.edge_id(e));
        expect(product(pr, pg), pg, "(iii) r(e)·e* for " + g.edge_id(e));
        expect(product(pg, ps), pg, "(iii) e*·s(e) for " + g.edge_id(e));
    }
    // (iv) e*f = δ_{e,f} r(e)
    for (EdgeIdx e = 0; e < g.edge_count(); ++e) {
        const auto pg = gen_ghost<K>(g, e);
        for (EdgeIdx f = 0; f < g.edge_count(); ++f) {
            const auto pf = gen_edge<K>(g, f);
            expect(product(pg, pf), e == f ? gen_vertex<K>(g, g.edge_range(e)) : zero,
                   "(iv) " + g.edge_id(e) + "*·" + g.edge_id(f));
        }
    }
    // (v) v = Σ_{s(e)=v} e e* at every non-sink (= regular) vertex
    for (VertexIdx v = 0; v < g.vertex_count(); ++v) {
        if (g.is_sink(v)) continue;
        RingElement<K> sum = zero;
        for (EdgeIdx e : g.out_edges(v)) sum = add(sum, product(gen_edge<K>(g, e), gen_ghost<K>(g, e)));
        expect(sum, gen_vertex<K>(g, v), "(v) CK at " + g.vertex_id(v));
    }
    return rep;
}

} // namespace lpa
