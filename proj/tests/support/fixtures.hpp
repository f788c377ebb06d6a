#pragma once

#include "lpa/graph.hpp"

namespace fixtures {

// v1 --e1--> v2 --e2--> v3
inline lpa::Graph e1_graph() {
    return lpa::load_graph("vertex v1; vertex v2; vertex v3; edge e1: v1 -> v2; edge e2: v2 -> v3");
}

// w1 --f1--> w3 <--f2-- w2
inline lpa::Graph e2_graph() {
    return lpa::load_graph("vertex w1; vertex w2; vertex w3; edge f1: w1 -> w3; edge f2: w2 -> w3");
}

// single vertex with a loop, no exit
inline lpa::Graph loop_graph() { return lpa::load_graph("vertex u; edge c: u -> u"); }

// loop with an exit edge
inline lpa::Graph loop_exit_graph() {
    return lpa::load_graph("vertex u; vertex w; edge c: u -> u; edge d: u -> w");
}

// q1 --e1--> q2 --e2--> q3 <--e3-- q4 --e4--> q5
inline lpa::Graph zigzag_graph() {
    return lpa::load_graph("vertex q1; vertex q2; vertex q3; vertex q4; vertex q5;"
                           "edge e1: q1 -> q2; edge e2: q2 -> q3; edge e3: q4 -> q3; edge e4: q4 -> q5");
}

// relabeled copy of e1_graph: a1 --b1--> a2 --b2--> a3
inline lpa::Graph e1_relabeled_graph() {
    return lpa::load_graph("vertex a1; vertex a2; vertex a3; edge b1: a1 -> a2; edge b2: a2 -> a3");
}

inline const char* path_to_vee_hom_text() {
    return "map e1 -> f1*\n"
           "map e2 -> f1 f2*\n";
}

inline const char* relabel_hom_text() {
    return "map e1 -> b1\n"
           "map e2 -> b2\n";
}

} // namespace fixtures
