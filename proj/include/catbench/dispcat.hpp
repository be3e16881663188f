#pragma once

#include <map>
#include <optional>
#include <set>

#include "catbench/fincat.hpp"

namespace catbench {

// ===== DISPLAY MAP CATEGORIES =====

struct MapClass {
    std::set<int> members;

    bool contains(int m) const { return members.count(m) > 0; }
    bool operator==(const MapClass&) const = default;
};

using ReindexTable = std::map<std::pair<int, int>, PullbackWitness>;

struct DispCat {
    FiniteCategory cat;
    MapClass display;
    std::optional<MapClass> strict_display;
    std::optional<ReindexTable> reindex_table;  // keyed by (strict proj, sigma)

    bool structured() const { return strict_display && reindex_table; }
};

// A type over a context is its display map p : Γ.A -> Γ.
struct TypeOver {
    int proj = -1;

    bool operator==(const TypeOver&) const = default;
    bool operator<(const TypeOver& o) const { return proj < o.proj; }
};

inline int ctx_of(const FiniteCategory& c, TypeOver a) { return c.cod(a.proj); }
inline int total_of(const FiniteCategory& c, TypeOver a) { return c.dom(a.proj); }

// A term is a section against a base morphism: proj . sec = base.  Ordinary
// terms have base = identity of the context.
struct TermOf {
    TypeOver type;
    int sec = -1;
    int base = -1;

    bool operator==(const TermOf&) const = default;
};

// Smallest class containing cls and closed under isomorphism in the arrow
// category, computed by fixpoint over all iso squares f' . i = j . f.
MapClass repletion(const FiniteCategory& c, const MapClass& cls);

// Identities, display maps, and all their finite composites.
MapClass fibration_closure(const FiniteCategory& c, const MapClass& display);

// Repleteness, pullback closure along arbitrary maps, and (when structured)
// totality and validity of the chosen reindexing table.
Report check_display_axioms(const DispCat& d);

struct Reindexed {
    TypeOver type;            // A[sigma], over dom(sigma)
    PullbackWitness square;   // f = sigma, g = proj of A; proj_right is sigma^up
};

// Chosen pullback when the table covers (A, sigma), canonical otherwise.
std::optional<Reindexed> try_reindex(const DispCat& d, TypeOver a, int sigma);
Reindexed reindex(const DispCat& d, TypeOver a, int sigma);

// a[sigma]: unique section of the reindexed type whose top composite is
// a . sigma.  Defined for ordinary terms.
TermOf subst_term(const DispCat& d, const Reindexed& rx, const TermOf& a, int sigma);

// Terminal object exists and every map into it is a fibration.
Report check_root(const DispCat& d);

// Split laws for the chosen table: A[1] = A and A[sigma . tau] = A[sigma][tau]
// on the nose, including the weakening composites.
Report check_split(const DispCat& d);

// All types over a context / ordinary terms of a type, id-sorted.
std::vector<TypeOver> types_over(const DispCat& d, int ctx);
std::vector<TermOf> terms_of(const FiniteCategory& c, TypeOver a);

// Canonical chosen table over a strict class: one pullback per (strict, sigma).
ReindexTable canonical_reindex_table(const FiniteCategory& c, const MapClass& strict);

}  // namespace catbench
