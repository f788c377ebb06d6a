// Command-line front end: graph/hom file loading, expression parsing,
// normalization and equality, relation and axiom suites, condition (L),
// groupoid products, and the graded-isomorphism pipeline.
//
// Exit codes: 0 = success/true/pass, 1 = false/fail, 2 = usage or input error.

#include "lpa/expr.hpp"
#include "lpa/iso.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

lpa::Graph load_graph_file(const std::string& path) { return lpa::load_graph(read_file(path)); }

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

enum class Field { Rationals, Prime };

Field parse_field(const std::string& spec) {
    if (spec == "q") return Field::Rationals;
    if (spec.rfind("fp:", 0) == 0) {
        std::uint64_t p = 0;
        try {
            p = std::stoull(spec.substr(3));
        } catch (...) {
            throw UsageError("bad field spec '" + spec + "'");
        }
        if (!is_prime(p)) throw UsageError("field modulus " + std::to_string(p) + " is not prime");
        lpa::Fp::set_modulus(p);
        return Field::Prime;
    }
    throw UsageError("bad field spec '" + spec + "' (expected 'q' or 'fp:<prime>')");
}

template <class F>
int with_field(const std::string& spec, F&& run) {
    if (parse_field(spec) == Field::Rationals) return run(std::type_identity<lpa::Rational>{});
    return run(std::type_identity<lpa::Fp>{});
}

json report_json(const lpa::CheckReport& rep) {
    return json{{"pass", rep.passed},
                {"checks", rep.checks},
                {"failures", rep.failures},
                {"notes", rep.notes}};
}

void print_report(const std::string& label, const lpa::CheckReport& rep) {
    std::cout << label << ": " << (rep.passed ? "PASS" : "FAIL") << " (" << rep.checks
              << " checks)\n";
    for (const auto& f : rep.failures) std::cout << "  witness: " << f << "\n";
    for (const auto& n : rep.notes) std::cout << "  note: " << n << "\n";
}

// --- subcommand bodies ------------------------------------------------------

struct CommonArgs {
    std::string field = "q";
    bool as_json = false;
};

int cmd_normalize(const std::string& graph_file, const std::string& expr_text, const CommonArgs& common,
                  bool expr_form) {
    const lpa::Graph g = load_graph_file(graph_file);
    const auto ast = lpa::parse_expr(expr_text);
    return with_field(common.field, [&](auto tag) {
        using K = typename decltype(tag)::type;
        const auto x = lpa::eval_expression<K>(g, ast);
        if (common.as_json) {
            std::cout << json{{"command", "normalize"},
                              {"element", lpa::to_string(x)},
                              {"expr", lpa::to_expression_string(x)}}
                             .dump()
                      << "\n";
        } else if (expr_form) {
            std::cout << lpa::to_expression_string(x) << "\n";
        } else {
            std::cout << lpa::to_string(x) << "\n";
        }
        return 0;
    });
}

int cmd_eq(const std::string& graph_file, const std::string& lhs, const std::string& rhs,
           const CommonArgs& common) {
    const lpa::Graph g = load_graph_file(graph_file);
    const auto last = lpa::parse_expr(lhs);
    const auto rast = lpa::parse_expr(rhs);
    return with_field(common.field, [&](auto tag) {
        using K = typename decltype(tag)::type;
        const bool equal = lpa::eq(lpa::eval_expression<K>(g, last), lpa::eval_expression<K>(g, rast));
        if (common.as_json)
            std::cout << json{{"command", "eq"}, {"equal", equal}}.dump() << "\n";
        else
            std::cout << (equal ? "equal" : "not equal") << "\n";
        return equal ? 0 : 1;
    });
}

int cmd_relations(const std::string& graph_file, const CommonArgs& common) {
    const lpa::Graph g = load_graph_file(graph_file);
    return with_field(common.field, [&](auto tag) {
        using K = typename decltype(tag)::type;
        const auto rep = lpa::verify_relations<K>(g);
        if (common.as_json)
            std::cout << json{{"command", "relations"}, {"report", report_json(rep)}}.dump() << "\n";
        else
            print_report("relations (i)-(v)", rep);
        return rep.passed ? 0 : 1;
    });
}

int cmd_axioms(const std::string& graph_file, std::size_t depth, const CommonArgs& common) {
    const lpa::Graph g = load_graph_file(graph_file);
    const auto rep = lpa::check_partial_action_axioms(g, depth);
    if (common.as_json)
        std::cout << json{{"command", "axioms"}, {"depth", depth}, {"report", report_json(rep)}}.dump()
                  << "\n";
    else
        print_report("partial action axioms (i)-(iii) at depth " + std::to_string(depth), rep);
    return rep.passed ? 0 : 1;
}

int cmd_condition_l(const std::string& graph_file, const CommonArgs& common) {
    const lpa::Graph g = load_graph_file(graph_file);
    const bool ok = lpa::condition_L(g);
    if (common.as_json)
        std::cout << json{{"command", "condition-l"}, {"condition_L", ok}}.dump() << "\n";
    else
        std::cout << "condition (L): " << (ok ? "true" : "false") << "\n";
    return ok ? 0 : 1;
}

int cmd_groupoid_mul(const std::string& graph_file, const std::string& w1, const std::string& w2,
                     const CommonArgs& common) {
    const lpa::Graph g = load_graph_file(graph_file);
    const auto a = lpa::parse_word(g, w1);
    const auto b = lpa::parse_word(g, w2);
    const auto prod = lpa::mul(a, b);
    if (common.as_json) {
        json j{{"command", "groupoid-mul"}, {"composable", static_cast<bool>(prod)}};
        if (prod) j["product"] = lpa::word_to_string(g, *prod);
        std::cout << j.dump() << "\n";
    } else {
        std::cout << (prod ? lpa::word_to_string(g, *prod) : std::string("not composable")) << "\n";
    }
    return prod ? 0 : 1;
}

void print_vertex_map(const lpa::LoadedHom& loaded) {
    const auto& h = loaded.hom;
    for (lpa::VertexIdx v = 0; v < h.source().vertex_count(); ++v) {
        const std::string line = h.source().vertex_id(v) + " -> " +
                                 h.target().vertex_id(h.vertex_image(v));
        const bool inferred = std::find(loaded.inferred.begin(), loaded.inferred.end(), line) !=
                              loaded.inferred.end();
        std::cout << "h(" << h.source().vertex_id(v) << ") = "
                  << h.target().vertex_id(h.vertex_image(v)) << (inferred ? " (inferred)" : "")
                  << "\n";
    }
}

int cmd_hom_check(const std::string& g1_file, const std::string& g2_file, const std::string& hom_file,
                  std::size_t bound, const CommonArgs& common) {
    const lpa::Graph g1 = load_graph_file(g1_file);
    const lpa::Graph g2 = load_graph_file(g2_file);
    const auto loaded = lpa::load_hom(g1, g2, read_file(hom_file));
    const auto exact = lpa::check_word_hypotheses(loaded.hom);
    const auto bounded = lpa::check_hypotheses_bounded(loaded.hom, bound);
    if (common.as_json) {
        std::cout << json{{"command", "hom-check"},
                          {"inferred", loaded.inferred},
                          {"exact", report_json(exact)},
                          {"bounded", report_json(bounded)},
                          {"bound", bound}}
                         .dump()
                  << "\n";
    } else {
        print_vertex_map(loaded);
        print_report("edge-level criterion (injective on W_1 and h(W_1) = W_2)", exact);
        print_report("bounded enumeration up to " + std::to_string(bound), bounded);
    }
    return exact.passed && bounded.passed ? 0 : 1;
}

template <class K>
int run_iso(const lpa::LoadedHom& loaded, std::size_t bound, bool unchecked, const CommonArgs& common) {
    const auto& h = loaded.hom;
    const lpa::Graph& src = h.source();

    const auto hyp = lpa::check_word_hypotheses(h);
    if (!unchecked && !hyp.passed) {
        if (common.as_json) {
            std::cout << json{{"command", "iso"},
                              {"mode", "strict"},
                              {"hypotheses", report_json(hyp)},
                              {"pass", false}}
                             .dump()
                      << "\n";
        } else {
            print_vertex_map(loaded);
            print_report("word hypotheses (injective on W_1, h(W_1) = W_2)", hyp);
            std::cout << "strict mode: hypotheses fail; rerun with --unchecked for a candidate build\n";
        }
        return 1;
    }

    std::optional<lpa::GradedIsoWitness<K>> built;
    try {
        built = lpa::build_graded_iso<K>(h, unchecked);
    } catch (const std::invalid_argument& e) {
        if (common.as_json) {
            std::cout << json{{"command", "iso"}, {"pass", false}, {"build_error", e.what()}}.dump()
                      << "\n";
        } else {
            print_vertex_map(loaded);
            std::cout << "candidate build failed: " << e.what() << "\n";
        }
        return 1;
    }
    const auto& w = *built;
    const auto edge_gen = lpa::check_edge_generator_preservation(w, bound);
    const auto converse = lpa::check_graded_iso_converse(w, bound);
    const bool pass = w.verification.passed && edge_gen.details.passed;

    if (common.as_json) {
        json images = json::object();
        for (lpa::VertexIdx v = 0; v < src.vertex_count(); ++v)
            images[src.vertex_id(v)] = lpa::to_string(w.vertex_images[v]);
        for (lpa::EdgeIdx e = 0; e < src.edge_count(); ++e) {
            images[src.edge_id(e)] = lpa::to_string(w.edge_images[e]);
            images[src.edge_id(e) + "*"] = lpa::to_string(w.ghost_images[e]);
        }
        std::cout << json{{"command", "iso"},
                          {"mode", unchecked ? "unchecked" : "strict"},
                          {"inferred", loaded.inferred},
                          {"hypotheses", report_json(hyp)},
                          {"images", images},
                          {"verification", report_json(w.verification)},
                          {"edge_generators",
                           {{"preserved", edge_gen.hypothesis_holds},
                            {"words_preserved", edge_gen.words_preserved},
                            {"report", report_json(edge_gen.details)}}},
                          {"converse", report_json(converse)},
                          {"pass", pass}}
                         .dump()
                  << "\n";
        return pass ? 0 : 1;
    }

    print_vertex_map(loaded);
    print_report("word hypotheses (injective on W_1, h(W_1) = W_2)", hyp);
    std::cout << "mode: " << (unchecked ? "unchecked (candidate build)" : "strict") << "\n";
    for (lpa::VertexIdx v = 0; v < src.vertex_count(); ++v)
        std::cout << "phi(" << src.vertex_id(v) << ") = " << lpa::to_string(w.vertex_images[v]) << "\n";
    for (lpa::EdgeIdx e = 0; e < src.edge_count(); ++e) {
        std::cout << "phi(" << src.edge_id(e) << ") = " << lpa::to_string(w.edge_images[e]) << "\n";
        std::cout << "phi(" << src.edge_id(e) << "*) = " << lpa::to_string(w.ghost_images[e]) << "\n";
    }
    print_report("image family verification", w.verification);
    std::cout << "edge-generator hypothesis: "
              << (edge_gen.hypothesis_holds ? "holds" : "fails") << "\n";
    std::cout << "h(W_1) = W_2 up to bound " << bound << ": "
              << (edge_gen.words_preserved ? "yes" : "no") << "\n";
    for (const auto& n : edge_gen.details.notes) std::cout << "  note: " << n << "\n";
    for (const auto& f : edge_gen.details.failures) std::cout << "  witness: " << f << "\n";
    print_report("converse conclusions (h injective on W_1, h(S_1) = S_2) up to bound " + std::to_string(bound), converse);
    std::cout << "overall: " << (pass ? "PASS" : "FAIL") << "\n";
    return pass ? 0 : 1;
}

int cmd_iso(const std::string& g1_file, const std::string& g2_file, const std::string& hom_file,
            std::size_t bound, bool unchecked, const CommonArgs& common) {
    const lpa::Graph g1 = load_graph_file(g1_file);
    const lpa::Graph g2 = load_graph_file(g2_file);
    const auto loaded = lpa::load_hom(g1, g2, read_file(hom_file));
    return with_field(common.field, [&](auto tag) {
        using K = typename decltype(tag)::type;
        return run_iso<K>(loaded, bound, unchecked, common);
    });
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Leavitt path algebra of a finite graph as a partial skew groupoid ring: "
                 "exact normal forms, decidable equality, and graded-isomorphism checking"};
    app.require_subcommand(1);

    std::string graph_file, graph2_file, hom_file, expr1, expr2, word1, word2;
    CommonArgs common;
    bool expr_form = false, unchecked = false;
    std::size_t depth = 4, bound = 6;

    auto add_field = [&](CLI::App* sub) {
        sub->add_option("--field", common.field, "coefficient field: q or fp:<prime>")
            ->default_val("q");
    };
    auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", common.as_json, "machine-readable output"); };

    auto* normalize = app.add_subcommand("normalize", "canonical form of an expression");
    normalize->add_option("graph", graph_file)->required();
    normalize->add_option("expression", expr1)->required();
    normalize->add_flag("--expr", expr_form, "print in the re-parsable expression syntax");
    add_field(normalize);
    add_json(normalize);

    auto* eqc = app.add_subcommand("eq", "decide equality of two expressions");
    eqc->add_option("graph", graph_file)->required();
    eqc->add_option("lhs", expr1)->required();
    eqc->add_option("rhs", expr2)->required();
    add_field(eqc);
    add_json(eqc);

    auto* relations = app.add_subcommand("relations", "verify the defining relations (i)-(v)");
    relations->add_option("graph", graph_file)->required();
    add_field(relations);
    add_json(relations);

    auto* axioms = app.add_subcommand("axioms", "verify the partial action axioms");
    axioms->add_option("graph", graph_file)->required();
    axioms->add_option("--depth", depth, "enumeration depth")->default_val(4);
    add_json(axioms);

    auto* condl = app.add_subcommand("condition-l", "does every cycle have an exit?");
    condl->add_option("graph", graph_file)->required();
    add_json(condl);

    auto* gmul = app.add_subcommand("groupoid-mul", "partial product of two groupoid words");
    gmul->add_option("graph", graph_file)->required();
    gmul->add_option("word1", word1)->required();
    gmul->add_option("word2", word2)->required();
    add_json(gmul);

    auto* homcheck = app.add_subcommand("hom-check", "check the word hypotheses for a hom file");
    homcheck->add_option("graph1", graph_file)->required();
    homcheck->add_option("graph2", graph2_file)->required();
    homcheck->add_option("hom", hom_file)->required();
    homcheck->add_option("--bound", bound, "enumeration bound")->default_val(6);
    add_json(homcheck);

    auto* iso = app.add_subcommand("iso", "build and verify a graded isomorphism candidate");
    iso->add_option("graph1", graph_file)->required();
    iso->add_option("graph2", graph2_file)->required();
    iso->add_option("hom", hom_file)->required();
    iso->add_option("--bound", bound, "enumeration bound")->default_val(6);
    iso->add_flag("--unchecked", unchecked, "build a candidate even when the hypotheses fail");
    add_field(iso);
    add_json(iso);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (normalize->parsed()) return cmd_normalize(graph_file, expr1, common, expr_form);
        if (eqc->parsed()) return cmd_eq(graph_file, expr1, expr2, common);
        if (relations->parsed()) return cmd_relations(graph_file, common);
        if (axioms->parsed()) return cmd_axioms(graph_file, depth, common);
        if (condl->parsed()) return cmd_condition_l(graph_file, common);
        if (gmul->parsed()) return cmd_groupoid_mul(graph_file, word1, word2, common);
        if (homcheck->parsed()) return cmd_hom_check(graph_file, graph2_file, hom_file, bound, common);
        if (iso->parsed()) return cmd_iso(graph_file, graph2_file, hom_file, bound, unchecked, common);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const lpa::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
