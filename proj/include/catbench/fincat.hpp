#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "catbench/report.hpp"

namespace catbench {

// ===== FINITE CATEGORIES =====
//
// A finite category given by explicit tables.  Objects and morphisms are
// identified by opaque string ids; internally everything is an index.  The
// composition table is partial: comp(g, f) is defined exactly when
// cod(f) = dom(g).  Nothing here assumes the tables are coherent; that is
// what validate() reports on.

struct Morph {
    std::string id;
    int dom = -1;
    int cod = -1;

    bool operator==(const Morph&) const = default;
};

class FiniteCategory {
public:
    std::vector<std::string> objects;
    std::vector<Morph> morphs;
    std::vector<int> identity;  // object index -> morphism index
    std::vector<int> comp;      // comp[g * n + f] = h, or -1

    bool operator==(const FiniteCategory&) const = default;

    int n_obj() const { return static_cast<int>(objects.size()); }
    int n_mor() const { return static_cast<int>(morphs.size()); }

    int dom(int m) const { return morphs[static_cast<size_t>(m)].dom; }
    int cod(int m) const { return morphs[static_cast<size_t>(m)].cod; }
    const std::string& obj_id(int o) const { return objects[static_cast<size_t>(o)]; }
    const std::string& mor_id(int m) const { return morphs[static_cast<size_t>(m)].id; }

    bool composable(int g, int f) const { return cod(f) == dom(g); }

    // g after f; requires a defined table entry.
    int compose(int g, int f) const {
        int h = comp[static_cast<size_t>(g) * morphs.size() + static_cast<size_t>(f)];
        if (h < 0)
            throw CatError("composition undefined: " + mor_id(g) + " . " + mor_id(f));
        return h;
    }

    int raw_comp(int g, int f) const {
        return comp[static_cast<size_t>(g) * morphs.size() + static_cast<size_t>(f)];
    }

    int id_of(int o) const { return identity[static_cast<size_t>(o)]; }

    std::vector<int> hom(int x, int y) const {
        std::vector<int> out;
        for (int m = 0; m < n_mor(); ++m)
            if (dom(m) == x && cod(m) == y) out.push_back(m);
        return out;
    }

    std::vector<int> into(int y) const {
        std::vector<int> out;
        for (int m = 0; m < n_mor(); ++m)
            if (cod(m) == y) out.push_back(m);
        return out;
    }

    int object_index(const std::string& id) const {
        for (int o = 0; o < n_obj(); ++o)
            if (objects[static_cast<size_t>(o)] == id) return o;
        return -1;
    }

    int morph_index(const std::string& id) const {
        for (int m = 0; m < n_mor(); ++m)
            if (morphs[static_cast<size_t>(m)].id == id) return m;
        return -1;
    }

    // True when the ids of a sort lexicographically before b's.  All
    // canonical choices in the workbench reduce to this ordering, which is
    // what makes repeated runs byte-identical.
    bool obj_less(int a, int b) const { return obj_id(a) < obj_id(b); }
    bool mor_less(int a, int b) const { return mor_id(a) < mor_id(b); }
};

// Builder used by parsers and tests; fills the composition table with -1
// and auto-completes identity compositions unless overridden.
class CategoryBuilder {
public:
    int add_object(const std::string& id, const std::string& id_morph_id);
    void add_morph(const std::string& id, const std::string& dom, const std::string& cod);
    // Records g . f = h; ids must already be declared.
    void set_comp(const std::string& g, const std::string& f, const std::string& h);
    // Finishes the category: resolves identity morphisms, auto-fills
    // identity compositions not explicitly set.
    FiniteCategory build();

private:
    FiniteCategory c_;
    std::vector<std::pair<std::string, std::string>> pending_obj_;  // (obj, id morph)
    std::vector<std::array<std::string, 3>> pending_comp_;
};

// A chosen pullback square for the cospan f : X -> Z <- Y : g.
//
//        apex --proj_right--> Y
//          |                  |
//     proj_left               g
//          v                  v
//          X -------f-------> Z
struct PullbackWitness {
    int apex = -1;
    int proj_left = -1;
    int proj_right = -1;
    int f = -1;
    int g = -1;

    bool operator==(const PullbackWitness&) const = default;
};

// Scans every table entry; violations are data, not exceptions.
Report validate_category(const FiniteCategory& c);

// Smallest-id object with singleton hom from every object, if any.
std::optional<int> terminal_object(const FiniteCategory& c);

// Canonical pullback of the cospan (f, g): enumerates all commuting squares,
// keeps the universal ones, returns the one with lexicographically smallest
// (apex id, proj_left id, proj_right id).
std::optional<PullbackWitness> pullback(const FiniteCategory& c, int f, int g);

// Verifies a given square is a pullback (commutes + universal).
bool is_pullback(const FiniteCategory& c, const PullbackWitness& w);

// Two-sided inverse with smallest id, if one exists.
std::optional<int> is_isomorphism(const FiniteCategory& c, int m);

// Unique mediating morphism v : V -> w.apex with proj_left . v = u_left and
// proj_right . v = u_right; nullopt when absent or not unique.
std::optional<int> mediate(const FiniteCategory& c, const PullbackWitness& w,
                           int u_left, int u_right);

// Indices ordered by id; every canonical search scans in this order.
std::vector<int> sorted_objects(const FiniteCategory& c);
std::vector<int> sorted_morphs(const FiniteCategory& c);

}  // namespace catbench
