#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "catbench/dispcat.hpp"
#include "catbench/report.hpp"

namespace catbench {

// ===== PATH STRUCTURE =====
//
// A path category is a clan (fibrations replete, closed under identity,
// composition and pullback, every map to the terminal a fibration) extended
// with a class of equivalences.  The fibration class lives in the display
// slot of the embedded DispCat; a PathCat value is just data until
// check_path_axioms has been run on it.

// Factorization of the diagonal of A := dom(r): an equivalence r : A -> P
// and maps s, t : P -> A with s.r = t.r = 1 whose pairing into the canonical
// A x_base A is a fibration.
struct PathObjectWitness {
    int P = -1;
    int r = -1;
    int s = -1;
    int t = -1;

    bool operator==(const PathObjectWitness&) const = default;
};

struct HomotopyWitness {
    int f = -1;
    int g = -1;
    int h = -1;            // s.h = f and t.h = g
    PathObjectWitness po;  // the path object h maps into
};

// Chosen path objects: keyed (true, object) for a path object over the
// terminal, (false, fibration) for a fibrewise one.
using PathTable = std::map<std::pair<bool, int>, PathObjectWitness>;

struct PathCat {
    DispCat clan;  // clan.display holds the fibration class
    MapClass eq;
    PathTable path_table;

    const FiniteCategory& cat() const { return clan.cat; }
    const MapClass& fib() const { return clan.display; }
};

MapClass iso_class(const FiniteCategory& c);
MapClass intersect_classes(const MapClass& a, const MapClass& b);

// The unique map from obj into the terminal object; throws without one.
int unique_to_terminal(const FiniteCategory& c, int obj);

Report check_two_out_of_six(const FiniteCategory& c, const MapClass& eq);

// Clan laws for the class in the display slot: display axioms, root,
// closure under composition.
Report check_clan(const DispCat& clan);

// Path-object search for the fibration proj, against the canonical pullback
// dom(proj) x_base dom(proj).  The (s,t)-pairing must land in pairing_class
// and r in eq.  Candidates scan in id order, so the first hit is canonical.
bool valid_path_object(const FiniteCategory& c, const MapClass& pairing_class,
                       const MapClass& eq, int proj, const PathObjectWitness& w);
std::optional<PathObjectWitness> find_path_object(const FiniteCategory& c,
                                                  const MapClass& pairing_class,
                                                  const MapClass& eq, int proj);
std::vector<PathObjectWitness> all_path_objects(const FiniteCategory& c,
                                                const MapClass& pairing_class,
                                                const MapClass& eq, int proj);

// Equivalence class grown from the isomorphisms by alternating path-object
// search and homotopy-equivalence computation until stable; the fallback for
// inputs that carry no equivalence class of their own.
MapClass bootstrap_equivalences(const FiniteCategory& c, const MapClass& fib);

Report check_path_axioms(const PathCat& p);

// Table entry if one is provided (fibration key first, object key when the
// base is the terminal), else canonical search.  Throws on an invalid entry.
std::optional<PathObjectWitness> path_object_for(const PathCat& p, int proj);

// Fibrewise homotopy f ~ g over cod(proj); throws without a path object.
std::optional<HomotopyWitness> homotopic(const PathCat& p, int f, int g, int proj);
// Homotopy over the terminal object.
std::optional<HomotopyWitness> homotopic(const PathCat& p, int f, int g);

MapClass homotopy_equivalences(const PathCat& p);

// eq == homotopy_equivalences.  Without a root the equivalence class is
// unconstrained; the check records that instead of comparing.
Report check_saturation(const PathCat& p);

// Display-map path category laws shared by every variant: axioms 1-4 on the
// fibration closure plus a path display map for every display map.  The
// equivalent-axioms matrix uses this as its precondition guard.
Report check_dmpc_core(const DispCat& d, const MapClass& eq);

// Full display-map path category check: the core plus a path fibration for
// every fibration.
Report check_dmpc_axioms(const DispCat& d, const MapClass& eq);

}  // namespace catbench
