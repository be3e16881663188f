#pragma once

// In-code builders for the bundled corpus categories.  The .cat fixtures in
// data/ describe the same categories; catfile tests cross-check the two.

#include <set>

#include "catbench/fincat.hpp"

namespace corpus {

using catbench::CategoryBuilder;
using catbench::FiniteCategory;

inline FiniteCategory one_object() {
    CategoryBuilder b;
    b.add_object("star", "id_star");
    b.add_morph("id_star", "star", "star");
    return b.build();
}

inline FiniteCategory walking_arrow() {
    CategoryBuilder b;
    b.add_object("A", "id_A");
    b.add_object("B", "id_B");
    b.add_morph("id_A", "A", "A");
    b.add_morph("id_B", "B", "B");
    b.add_morph("f", "A", "B");
    return b.build();
}

inline FiniteCategory three_chain() {
    CategoryBuilder b;
    b.add_object("a", "id_a");
    b.add_object("b", "id_b");
    b.add_object("c", "id_c");
    b.add_morph("id_a", "a", "a");
    b.add_morph("id_b", "b", "b");
    b.add_morph("id_c", "c", "c");
    b.add_morph("ab", "a", "b");
    b.add_morph("bc", "b", "c");
    b.add_morph("ac", "a", "c");
    b.set_comp("bc", "ab", "ac");
    return b.build();
}

// Meet-semilattice with top: the diamond bot < x, y < top.
inline FiniteCategory semilattice() {
    CategoryBuilder b;
    b.add_object("bot", "id_bot");
    b.add_object("x", "id_x");
    b.add_object("y", "id_y");
    b.add_object("top", "id_top");
    b.add_morph("id_bot", "bot", "bot");
    b.add_morph("id_x", "x", "x");
    b.add_morph("id_y", "y", "y");
    b.add_morph("id_top", "top", "top");
    b.add_morph("bot_x", "bot", "x");
    b.add_morph("bot_y", "bot", "y");
    b.add_morph("bot_top", "bot", "top");
    b.add_morph("x_top", "x", "top");
    b.add_morph("y_top", "y", "top");
    b.set_comp("x_top", "bot_x", "bot_top");
    b.set_comp("y_top", "bot_y", "bot_top");
    return b.build();
}

// Interval groupoid: two objects, mutually inverse arrows.
inline FiniteCategory interval() {
    CategoryBuilder b;
    b.add_object("a", "id_a");
    b.add_object("b", "id_b");
    b.add_morph("id_a", "a", "a");
    b.add_morph("id_b", "b", "b");
    b.add_morph("f", "a", "b");
    b.add_morph("g", "b", "a");
    b.set_comp("g", "f", "id_a");
    b.set_comp("f", "g", "id_b");
    return b.build();
}

// Z/2 as a one-object groupoid: the smallest category with a nonidentity
// parallel pair.  No terminal object (hom(star, star) has two elements), so
// only fibrewise structure applies; a finite clan is always thin.
inline FiniteCategory cyclic2() {
    CategoryBuilder b;
    b.add_object("star", "id_star");
    b.add_morph("id_star", "star", "star");
    b.add_morph("sigma", "star", "star");
    b.set_comp("sigma", "sigma", "id_star");
    return b.build();
}

// Fork: u, v : X -> A merged by f : A -> G.  The cospan (f, f) has no
// pullback, so A has no product with itself over the terminal G.
inline FiniteCategory fork() {
    CategoryBuilder b;
    b.add_object("X", "id_X");
    b.add_object("A", "id_A");
    b.add_object("G", "id_G");
    b.add_morph("id_X", "X", "X");
    b.add_morph("id_A", "A", "A");
    b.add_morph("id_G", "G", "G");
    b.add_morph("u", "X", "A");
    b.add_morph("v", "X", "A");
    b.add_morph("f", "A", "G");
    b.add_morph("w", "X", "G");
    b.set_comp("f", "u", "w");
    b.set_comp("f", "v", "w");
    return b.build();
}

inline std::set<int> all_morphs(const FiniteCategory& c) {
    std::set<int> s;
    for (int m = 0; m < c.n_mor(); ++m) s.insert(m);
    return s;
}

inline std::set<int> isos(const FiniteCategory& c) {
    std::set<int> s;
    for (int m = 0; m < c.n_mor(); ++m)
        if (catbench::is_isomorphism(c, m)) s.insert(m);
    return s;
}

}  // namespace corpus
