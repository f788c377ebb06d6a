#pragma once

#include "lpa/skewring.hpp"

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

namespace lpa {

// Surface syntax for ring elements:
//   expr   := '-'? term (('+'|'-') term)* | '0'
//   term   := scalar? factor+
//   factor := IDENT '*'? | '(' expr ')'
//   scalar := INT ('/' INT)?
// Juxtaposition multiplies and binds tighter than +/-; '*' is the postfix
// ghost marker. The literal 0 denotes the zero element.

struct ExprNode {
    enum class Kind { Sum, ScalarMul, Product, Gen, Zero };

    Kind kind = Kind::Zero;
    std::size_t pos = 0;             // 1-based column in the source text
    std::vector<ExprNode> children;  // Sum, Product; single child for ScalarMul
    std::string num = "1";           // ScalarMul: digits only
    std::string den = "1";
    bool negate = false;             // ScalarMul sign
    std::string ident;               // Gen
    bool ghost = false;              // Gen

    static ExprNode make(Kind k, std::size_t at) {
        ExprNode n;
        n.kind = k;
        n.pos = at;
        return n;
    }
};

namespace detail {

struct ExprToken {
    enum class Kind { Int, Ident, Plus, Minus, Slash, Star, LParen, RParen, End };
    Kind kind;
    std::string text;
    std::size_t pos;
};

inline std::vector<ExprToken> tokenize_expr(std::string_view text) {
    std::vector<ExprToken> out;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            ++i;
            continue;
        }
        const std::size_t pos = i + 1;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string t;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) t += text[i++];
            out.push_back({ExprToken::Kind::Int, t, pos});
        } else if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string t;
            while (i < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
                t += text[i++];
            out.push_back({ExprToken::Kind::Ident, t, pos});
        } else {
            ExprToken::Kind k;
            switch (c) {
            case '+': k = ExprToken::Kind::Plus; break;
            case '-': k = ExprToken::Kind::Minus; break;
            case '/': k = ExprToken::Kind::Slash; break;
            case '*': k = ExprToken::Kind::Star; break;
            case '(': k = ExprToken::Kind::LParen; break;
            case ')': k = ExprToken::Kind::RParen; break;
            default:
                throw ParseError("column " + std::to_string(pos) + ": unexpected character '" +
                                     std::string(1, c) + "'",
                                 pos);
            }
            out.push_back({k, std::string(1, c), pos});
            ++i;
        }
    }
    out.push_back({ExprToken::Kind::End, "", text.size() + 1});
    return out;
}

class ExprParser {
public:
    explicit ExprParser(std::string_view text) : toks_(tokenize_expr(text)) {}

    ExprNode parse() {
        // whole-expression zero literal
        if (at().kind == ExprToken::Kind::Int && at().text == "0" &&
            toks_[i_ + 1].kind == ExprToken::Kind::End) {
            return ExprNode::make(ExprNode::Kind::Zero, at().pos);
        }
        ExprNode e = expression();
        if (at().kind != ExprToken::Kind::End)
            throw ParseError("column " + std::to_string(at().pos) + ": unexpected '" + at().text + "'",
                             at().pos);
        return e;
    }

private:
    const ExprToken& at() const { return toks_[i_]; }
    const ExprToken& take() { return toks_[i_++]; }

    ExprNode expression() {
        ExprNode sum = ExprNode::make(ExprNode::Kind::Sum, at().pos);
        bool neg = false;
        if (at().kind == ExprToken::Kind::Minus) {
            take();
            neg = true;
        }
        sum.children.push_back(signed_term(neg));
        while (at().kind == ExprToken::Kind::Plus || at().kind == ExprToken::Kind::Minus) {
            const bool minus = take().kind == ExprToken::Kind::Minus;
            sum.children.push_back(signed_term(minus));
        }
        if (sum.children.size() == 1) return std::move(sum.children.front());
        return sum;
    }

    ExprNode signed_term(bool negate) {
        ExprNode t = term();
        if (!negate) return t;
        if (t.kind == ExprNode::Kind::ScalarMul) {
            t.negate = !t.negate;
            return t;
        }
        ExprNode neg = ExprNode::make(ExprNode::Kind::ScalarMul, t.pos);
        neg.negate = true;
        neg.children.push_back(std::move(t));
        return neg;
    }

    ExprNode term() {
        const std::size_t pos = at().pos;
        bool has_scalar = false;
        std::string num = "1", den = "1";
        if (at().kind == ExprToken::Kind::Int) {
            has_scalar = true;
            num = take().text;
            if (at().kind == ExprToken::Kind::Slash) {
                take();
                if (at().kind != ExprToken::Kind::Int)
                    throw ParseError("column " + std::to_string(at().pos) +
                                         ": expected an integer denominator",
                                     at().pos);
                den = take().text;
            }
        }
        ExprNode prod = ExprNode::make(ExprNode::Kind::Product, pos);
        while (true) {
            if (at().kind == ExprToken::Kind::Ident) {
                ExprNode gen = ExprNode::make(ExprNode::Kind::Gen, at().pos);
                gen.ident = take().text;
                if (at().kind == ExprToken::Kind::Star) {
                    take();
                    gen.ghost = true;
                }
                prod.children.push_back(std::move(gen));
            } else if (at().kind == ExprToken::Kind::LParen) {
                take();
                prod.children.push_back(expression());
                if (at().kind != ExprToken::Kind::RParen)
                    throw ParseError("column " + std::to_string(at().pos) + ": expected ')'", at().pos);
                take();
            } else {
                break;
            }
        }
        if (prod.children.empty())
            throw ParseError("column " + std::to_string(at().pos) +
                                 ": expected a generator or '(' " +
                                 (has_scalar ? "after the scalar" : "here"),
                             at().pos);
        ExprNode body = prod.children.size() == 1 ? std::move(prod.children.front()) : std::move(prod);
        if (!has_scalar) return body;
        ExprNode sm = ExprNode::make(ExprNode::Kind::ScalarMul, pos);
        sm.num = num;
        sm.den = den;
        sm.children.push_back(std::move(body));
        return sm;
    }

    std::vector<ExprToken> toks_;
    std::size_t i_ = 0;
};

} // namespace detail

inline ExprNode parse_expr(std::string_view text) { return detail::ExprParser(text).parse(); }

/// Interprets an AST over a graph: vertices to 1_vδ_v, edges to 1_eδ_e,
/// ghosts to 1_{e^-1}δ_{e^-1}; sums, products and scalars fold through the
/// ring operations. Identifier resolution happens here, so a ghost marker on
/// a vertex and unknown names are reported with their source position.
template <ScalarField K>
RingElement<K> eval_expression(const Graph& g, const ExprNode& ast) {
    switch (ast.kind) {
    case ExprNode::Kind::Zero: return RingElement<K>::zero(g);
    case ExprNode::Kind::Gen: {
        if (auto e = g.find_edge(ast.ident))
            return ast.ghost ? gen_ghost<K>(g, *e) : gen_edge<K>(g, *e);
        if (auto v = g.find_vertex(ast.ident)) {
            if (ast.ghost)
                throw ParseError("column " + std::to_string(ast.pos) + ": ghost marker on a vertex '" +
                                     ast.ident + "'",
                                 ast.pos);
            return gen_vertex<K>(g, *v);
        }
        throw ParseError("column " + std::to_string(ast.pos) + ": unknown identifier '" + ast.ident +
                             "'",
                         ast.pos);
    }
    case ExprNode::Kind::Product: {
        RingElement<K> acc = eval_expression<K>(g, ast.children.front());
        for (std::size_t i = 1; i < ast.children.size(); ++i)
            acc = mul(acc, eval_expression<K>(g, ast.children[i]));
        return acc;
    }
    case ExprNode::Kind::Sum: {
        RingElement<K> acc = eval_expression<K>(g, ast.children.front());
        for (std::size_t i = 1; i < ast.children.size(); ++i)
            acc = add(acc, eval_expression<K>(g, ast.children[i]));
        return acc;
    }
    case ExprNode::Kind::ScalarMul: {
        K c = K::from_fraction(ast.num, ast.den);
        if (ast.negate) c = -c;
        return scalar_mul(c, eval_expression<K>(g, ast.children.front()));
    }
    }
    throw std::logic_error("eval_expression: bad node");
}

namespace detail {

/// Word of generators whose product is 1_p δ_s, for a key p extending the
/// cylinder prefix of s: the edges of p, then the ghosts of (p minus that
/// prefix) reversed, then the ghosts of the domain prefix reversed.
inline std::string monomial_word(const Graph& g, const SForm& s, const Path& p) {
    const Path head = sform_cylinder(g, s);
    const Path tail = strip_prefix(g, p, head);
    std::vector<std::string> tokens;
    if (p.length() == 0)
        tokens.push_back(g.vertex_id(p.source()));
    else
        for (EdgeIdx e : p.edges()) tokens.push_back(g.edge_id(e));
    for (auto it = tail.edges().rbegin(); it != tail.edges().rend(); ++it)
        tokens.push_back(g.edge_id(*it) + "*");
    const Path dom = sform_domain_prefix(g, s);
    for (auto it = dom.edges().rbegin(); it != dom.edges().rend(); ++it)
        tokens.push_back(g.edge_id(*it) + "*");
    std::string out;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i) out += ' ';
        out += tokens[i];
    }
    return out;
}

} // namespace detail

/// Renders x in the expression grammar, so the output re-parses to an
/// eq-equal element. Deterministic for canonical inputs.
template <ScalarField K>
std::string to_expression_string(const RingElement<K>& x) {
    if (x.is_zero()) return "0";
    const Graph& g = x.graph();
    std::string out;
    bool first = true;
    for (const auto& [s, f] : x.terms()) {
        // re-expand so every key extends the cylinder prefix of s
        const CylFunction<K> anchored = mul(one<K>(g, s), f);
        for (const auto& [p, c] : anchored.terms()) {
            std::string mag = c.str();
            bool neg = false;
            if (!mag.empty() && mag[0] == '-') {
                neg = true;
                mag.erase(0, 1);
            }
            if (first) {
                if (neg) out += "- ";
            } else {
                out += neg ? " - " : " + ";
            }
            first = false;
            if (mag != "1") out += mag + " ";
            out += detail::monomial_word(g, s, p);
        }
    }
    return out;
}

} // namespace lpa
