// Acceptance suite: one PASS/FAIL line per criterion, exit code = number of
// failed criteria. The last criterion spawns the CLI binary; pass its path
// and the fixtures directory as argv[1] / argv[2] (ctest does).

#include "lpa/expr.hpp"
#include "lpa/iso.hpp"

#include "support/fixtures.hpp"
#include "support/oracle.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace lpa;
using Q = Rational;
using Clock = std::chrono::steady_clock;

namespace {

struct Criterion {
    int id;
    std::string label;
    bool pass = true;
    std::vector<std::string> details;

    void fail(const std::string& why) {
        pass = false;
        if (details.size() < 8) details.push_back(why);
    }
    void require(bool ok, const std::string& why) {
        if (!ok) fail(why);
    }
};

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// The all-pairs depth-4 suites are quadratic in |S|; the random corpus keeps
// |S at depth 4| below this cap (graphs still have <= 6 vertices, <= 10
// edges, cycles included).
constexpr std::size_t kMaxS4 = 1000;

std::vector<Graph> random_corpus(std::size_t count) {
    oracle::Rng rng(0x5ee0);
    std::vector<Graph> graphs;
    while (graphs.size() < count) {
        Graph g = oracle::random_graph(rng, 6, 10, /*acyclic=*/false, /*min_edges=*/3);
        if (enumerate_S(g, 4).size() <= kMaxS4) graphs.push_back(std::move(g));
    }
    return graphs;
}

// ---- criterion bodies ------------------------------------------------------

void criterion_relations(Criterion& c, const std::vector<Graph>& corpus) {
    for (const Graph& g : corpus) {
        const auto t0 = Clock::now();
        const auto rep = verify_relations<Q>(g);
        const double dt = seconds_since(t0);
        c.require(rep.passed, "relations fail: " + (rep.failures.empty() ? "?" : rep.failures[0]));
        c.require(dt < 2.0, "relation suite took " + std::to_string(dt) + "s on a corpus graph");
    }
}

void criterion_axioms(Criterion& c, const std::vector<Graph>& corpus) {
    for (const Graph& g : corpus) {
        const auto rep = check_partial_action_axioms(g, 4);
        c.require(rep.passed,
                  "axioms fail: " + (rep.failures.empty() ? "?" : rep.failures[0]));
    }
    // corrupted theta must fail with a witness
    const GeneratorAction corrupted = [](const Graph& g, const SForm& s, const Path& key) {
        auto honest = default_generator_action(g, s, key);
        if (s.kind() != SForm::Kind::PathPair) return honest;
        return detail::intersect_cylinders(detail::sform_domain_prefix(g, s), key);
    };
    // graphs with pair-shaped degrees, so the corruption actually bites
    for (const Graph& g : {fixtures::e2_graph(), fixtures::zigzag_graph()}) {
        const auto rep = check_partial_action_axioms(g, 3, corrupted);
        c.require(!rep.passed && !rep.failures.empty(), "corrupted theta was not caught");
    }
}

void criterion_restriction_identity(Criterion& c, const std::vector<Graph>& corpus) {
    for (const Graph& g : corpus) {
        const auto S = enumerate_S(g, 4);
        std::vector<GroupoidElement> elements;
        std::vector<CylFunction<Q>> ones, inv_ones;
        for (const SForm& s : S) {
            elements.push_back(to_element(g, s));
            ones.push_back(one<Q>(g, s));
            inv_ones.push_back(one<Q>(g, s.inverse()));
        }
        for (std::size_t i = 0; i < S.size(); ++i)
            for (std::size_t j = 0; j < S.size(); ++j) {
                const auto lhs = alpha(S[i], mul(inv_ones[i], ones[j]));
                CylFunction<Q> rhs = CylFunction<Q>::zero(g);
                const auto prod = mul(elements[i], elements[j]);
                if (prod)
                    if (auto pq = classify_S(*prod)) rhs = mul(ones[i], one<Q>(g, *pq));
                if (!eq(lhs, rhs)) {
                    c.fail("identity fails at p=" + sform_to_string(g, S[i]) + ", q=" +
                           sform_to_string(g, S[j]));
                    return;
                }
            }
    }
}

void criterion_ring_axioms(Criterion& c, const std::vector<Graph>& fixture_graphs) {
    oracle::Rng rng(0xab5);
    for (const Graph& g : fixture_graphs) {
        for (int it = 0; it < 200; ++it) {
            const auto x = oracle::random_ring<Q>(g, rng);
            const auto y = oracle::random_ring<Q>(g, rng);
            const auto z = oracle::random_ring<Q>(g, rng);
            if (!eq(mul(mul(x, y), z), mul(x, mul(y, z)))) {
                c.fail("associativity fails");
                return;
            }
            if (!eq(mul(add(x, y), z), add(mul(x, z), mul(y, z))) ||
                !eq(mul(x, add(y, z)), add(mul(x, y), mul(x, z)))) {
                c.fail("distributivity fails");
                return;
            }
        }
    }
}

void criterion_oracle_equivalence(Criterion& c, const std::vector<Graph>& acyclic) {
    oracle::Rng rng(0x0eac1e);
    for (const Graph& g : acyclic) {
        const auto space = oracle::path_space(g);
        // 500 random expressions; successive pairs are compared both ways
        std::vector<RingElement<Q>> xs;
        for (int i = 0; i < 500; ++i) xs.push_back(oracle::random_ring<Q>(g, rng));
        for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
            const bool canonical = eq(xs[i], xs[i + 1]);
            const bool pointwise = oracle::ring_eq(xs[i], xs[i + 1], space);
            if (canonical != pointwise) {
                c.fail("ring equality disagrees with the pointwise oracle");
                return;
            }
        }
        // equal-by-construction pairs exercise the positive branch
        for (int i = 0; i < 50; ++i) {
            const auto x = oracle::random_ring<Q>(g, rng);
            const auto y = oracle::random_ring<Q>(g, rng);
            const auto z = oracle::random_ring<Q>(g, rng);
            const auto lhs = mul(x, add(y, z));
            const auto rhs = add(mul(x, y), mul(x, z));
            if (!eq(lhs, rhs) || !oracle::ring_eq(lhs, rhs, space)) {
                c.fail("constructed-equal pair not recognized");
                return;
            }
        }
        // CylFunction level: canonical equality == pointwise equality, and
        // canonicalize preserves every value
        for (int i = 0; i < 250; ++i) {
            const auto f = oracle::random_cyl<Q>(g, rng);
            const auto h = oracle::random_cyl<Q>(g, rng);
            if (eq(f, h) != oracle::cyl_eq(f, h, space)) {
                c.fail("cylinder equality disagrees with the pointwise oracle");
                return;
            }
            const auto cf = canonicalize(f);
            for (const Path& xi : space)
                if (!(oracle::value_at(cf, xi) == oracle::value_at(f, xi))) {
                    c.fail("canonicalize changed a pointwise value");
                    return;
                }
        }
    }
}

void criterion_worked_example(Criterion& c) {
    const Graph e1g = fixtures::e1_graph();
    const Graph e2g = fixtures::e2_graph();
    const auto loaded = load_hom(e1g, e2g, fixtures::path_to_vee_hom_text());
    const auto& h = loaded.hom;

    auto img = [&](const char* v) { return e2g.vertex_id(h.vertex_image(e1g.vertex(v))); };
    c.require(img("v1") == "w3", "h(v1) != w3");
    c.require(img("v2") == "w1", "h(v2) != w1");
    c.require(img("v3") == "w2", "h(v3) != w2");

    const auto w = build_graded_iso<Q>(h, /*unchecked=*/true);
    c.require(w.verification.passed, "image family verification failed");
    c.require(to_string(w.edge_images[e1g.edge("e1")]) == "1*1_[w3] δ_[f1*]",
              "phi(e1) is not 1_{f1^-1} delta_{f1^-1}");

    const auto cor = check_edge_generator_preservation(w, 2);
    c.require(!cor.hypothesis_holds, "edge-generator hypothesis unexpectedly holds");
    c.require(!cor.words_preserved, "h(W_1) = W_2 unexpectedly");
    bool f1_witness = false;
    for (const auto& n : cor.details.notes)
        if (n.find("f1 not hit") != std::string::npos) f1_witness = true;
    c.require(f1_witness, "missing the 'f1 not hit' witness");

    const auto conv = check_graded_iso_converse(w, 2);
    c.require(conv.passed, "converse conclusions failed: " +
                               (conv.failures.empty() ? "?" : conv.failures[0]));
    c.require(enumerate_S(e1g, 2).size() == 9 && enumerate_S(e2g, 2).size() == 9,
              "|S_1| or |S_2| is not 9");
    std::set<SForm> image_S;
    for (const SForm& s : enumerate_S(e1g, 2)) {
        const auto is = classify_S(extend(h, to_element(e1g, s)));
        if (!is) {
            c.fail("an S_1 image left S_2");
            return;
        }
        image_S.insert(*is);
    }
    const auto S2 = enumerate_S(e2g, 2);
    c.require(image_S == std::set<SForm>(S2.begin(), S2.end()), "h(S_1) != S_2");
}

void criterion_strict_build(Criterion& c) {
    const auto loaded = load_hom(fixtures::e1_graph(), fixtures::e1_relabeled_graph(),
                                 fixtures::relabel_hom_text());
    const auto hyp = check_word_hypotheses(loaded.hom);
    c.require(hyp.passed, "hypotheses fail on a relabeling");

    const auto w = build_graded_iso<Q>(loaded.hom, /*unchecked=*/false);
    c.require(w.verification.passed, "strict build did not verify");

    // 100 random homogeneous products stay homogeneous of the mapped degree
    oracle::Rng rng(0x47ad);
    const Graph& src = loaded.hom.source();
    const auto gens = oracle::irreducible_words(src, 1);
    auto phi_of = [&](const GroupoidElement& gen) -> RingElement<Q> {
        if (gen.is_identity()) return w.vertex_images[gen.source()];
        const Letter l = gen.word()[0];
        return l.ghost ? w.ghost_images[l.edge] : w.edge_images[l.edge];
    };
    for (int it = 0; it < 100; ++it) {
        const auto& a = gens[oracle::pick(rng, gens.size())];
        const auto& b = gens[oracle::pick(rng, gens.size())];
        const auto p = mul(phi_of(a), phi_of(b));
        const auto gprod = mul(extend(loaded.hom, a), extend(loaded.hom, b));
        if (!gprod) {
            if (!p.is_zero()) c.fail("nonzero product at non-composable degrees");
            continue;
        }
        const auto s = classify_S(*gprod);
        if (p.is_zero()) continue;
        if (!s || degrees(p) != std::set<SForm>{*s}) {
            c.fail("product of homogeneous generators is not homogeneous at the mapped degree");
            return;
        }
    }
}

void criterion_condition_L(Criterion& c, const std::vector<Graph>& acyclic) {
    auto timed = [&](const Graph& g, bool expected, const char* what) {
        const auto t0 = Clock::now();
        const bool got = condition_L(g);
        const double dt = seconds_since(t0);
        c.require(got == expected, std::string("condition (L) wrong on ") + what);
        c.require(dt < 0.1, std::string("condition (L) took too long on ") + what);
    };
    for (const Graph& g : acyclic) timed(g, true, "an acyclic graph");
    timed(fixtures::loop_graph(), false, "the bare loop");
    timed(fixtures::loop_exit_graph(), true, "the loop with exit");
}

void criterion_cross_validation(Criterion& c, const std::vector<Graph>& corpus) {
    oracle::Rng rng(0xc0de);
    std::vector<Graph> pool{fixtures::e1_graph(), fixtures::e2_graph(), fixtures::loop_exit_graph(),
                            fixtures::zigzag_graph()};
    for (const Graph& g : corpus)
        if (g.edge_count() > 0 && pool.size() < 10) pool.push_back(g);

    int built = 0, attempts = 0;
    while (built < 50 && attempts < 2000) {
        ++attempts;
        const Graph& g1 = pool[oracle::pick(rng, pool.size())];
        const Graph& g2 = pool[oracle::pick(rng, pool.size())];
        const auto h = oracle::random_hom(g1, g2, rng);
        if (!h) continue;
        ++built;
        const bool exact = check_word_hypotheses(*h).passed;
        const bool bounded = check_hypotheses_bounded(*h, 6).passed;
        if (exact != bounded)
            c.fail(std::string("disagreement: exact ") + (exact ? "pass" : "fail") + ", bounded " +
                   (bounded ? "pass" : "fail"));
    }
    c.require(built == 50, "only built " + std::to_string(built) + " random homs");
}

std::string run_command(const std::string& cmd) {
    std::string out;
    FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
    if (!pipe) return "<popen failed>";
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    pclose(pipe);
    return out;
}

void criterion_determinism(Criterion& c, const std::string& cli, const std::string& fixtures) {
    if (cli.empty()) {
        c.fail("CLI binary path not supplied (pass it as argv[1])");
    } else {
        const std::vector<std::string> commands = {
            cli + " normalize " + fixtures + "/e1.graph \"(2/3 e1 e1* + v2) e2* + v3 - v3\"",
            cli + " relations " + fixtures + "/e2.graph",
            cli + " axioms --depth 3 " + fixtures + "/loop_exit.graph",
            cli + " iso --unchecked --bound 2 " + fixtures + "/e1.graph " + fixtures + "/e2.graph " +
                fixtures + "/path_to_vee.hom",
            cli + " iso --json " + fixtures + "/e1.graph " + fixtures + "/e1_relabeled.graph " +
                fixtures + "/relabel.hom",
            cli + " hom-check " + fixtures + "/e1.graph " + fixtures + "/e2.graph " + fixtures +
                "/path_to_vee.hom",
        };
        for (const auto& cmd : commands) {
            const std::string a = run_command(cmd);
            const std::string b = run_command(cmd);
            c.require(!a.empty() && a == b, "CLI output differs between runs: " + cmd);
        }
    }

    // parse/print round-trip: re-parsing the rendering yields an equal element
    oracle::Rng rng(0x2a11);
    const std::vector<Graph> graphs{fixtures::e1_graph(), fixtures::e2_graph(),
                                    fixtures::loop_exit_graph(), fixtures::zigzag_graph()};
    for (int it = 0; it < 200; ++it) {
        const Graph& g = graphs[it % graphs.size()];
        const auto x = oracle::random_ring<Q>(g, rng);
        const std::string text = to_expression_string(x);
        const auto back = eval_expression<Q>(g, parse_expr(text));
        if (!eq(back, x) || to_expression_string(back) != text) {
            c.fail("round-trip unstable for: " + text);
            return;
        }
    }
}

} // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";
    const std::string fixtures_dir = argc > 2 ? argv[2] : "";

    const std::vector<Graph> named{fixtures::e1_graph(), fixtures::e2_graph(),
                                   fixtures::loop_exit_graph()};
    std::vector<Graph> corpus = named;
    for (Graph& g : random_corpus(25)) corpus.push_back(std::move(g));

    std::vector<Graph> fixture_graphs{fixtures::e1_graph(), fixtures::e2_graph(),
                                      fixtures::loop_exit_graph(), fixtures::zigzag_graph()};

    oracle::Rng acyc_rng(0xacac);
    std::vector<Graph> acyclic{fixtures::e1_graph(), fixtures::e2_graph(), fixtures::zigzag_graph()};
    while (acyclic.size() < 5)
        acyclic.push_back(oracle::random_graph(acyc_rng, 6, 10, /*acyclic=*/true));

    std::vector<Criterion> criteria;
    auto run = [&](int id, const std::string& label, const std::function<void(Criterion&)>& body) {
        Criterion c{id, label, true, {}};
        const auto t0 = Clock::now();
        body(c);
        const double dt = seconds_since(t0);
        std::ostringstream line;
        line << (c.pass ? "PASS" : "FAIL") << "  [" << id << "] " << label << "  ("
             << static_cast<int>(dt * 1000) << " ms)";
        std::cout << line.str() << "\n";
        for (const auto& d : c.details) std::cout << "      " << d << "\n";
        criteria.push_back(std::move(c));
    };

    run(1, "relation suite (i)-(v), exact, < 2 s per graph, 28-graph corpus",
        [&](Criterion& c) { criterion_relations(c, corpus); });
    run(2, "partial-action axioms at depth 4 + corrupted-theta mutation",
        [&](Criterion& c) { criterion_axioms(c, corpus); });
    run(3, "restriction identity alpha_p(1_{p^-1} 1_q) = 1_p 1_{pq} for all p,q in S up to 4",
        [&](Criterion& c) { criterion_restriction_identity(c, corpus); });
    run(4, "skew-ring associativity and distributivity, 200 random triples per fixture",
        [&](Criterion& c) { criterion_ring_axioms(c, fixture_graphs); });
    run(5, "canonical equality == pointwise oracle on acyclic fixtures, 500 expressions each",
        [&](Criterion& c) { criterion_oracle_equivalence(c, acyclic); });
    run(6, "worked isomorphism example end-to-end", [&](Criterion& c) { criterion_worked_example(c); });
    run(7, "strict build on a relabeled copy + 100 graded products",
        [&](Criterion& c) { criterion_strict_build(c); });
    run(8, "condition (L) on acyclic / bare loop / loop with exit, < 100 ms each",
        [&](Criterion& c) { criterion_condition_L(c, acyclic); });
    run(9, "edge-level criterion vs bounded oracle on 50 random homs",
        [&](Criterion& c) { criterion_cross_validation(c, corpus); });
    run(10, "CLI determinism + 200 parse/print round-trips",
        [&](Criterion& c) { criterion_determinism(c, cli, fixtures_dir); });

    int failed = 0;
    for (const auto& c : criteria)
        if (!c.pass) ++failed;
    std::cout << (failed == 0 ? "acceptance: all criteria passed"
                              : "acceptance: " + std::to_string(failed) + " criteria FAILED")
              << "\n";
    return failed;
}
