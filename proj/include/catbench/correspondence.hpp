#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "catbench/dispcat.hpp"
#include "catbench/pathcat.hpp"
#include "catbench/typeformers.hpp"

namespace catbench {

// ===== FUNCTORS =====

// Total maps on indices; laws are checked, not assumed.
struct Functor {
    std::vector<int> obj_map;
    std::vector<int> mor_map;

    bool operator==(const Functor&) const = default;
};

Functor identity_functor(const FiniteCategory& c);

// Endpoint compatibility, identities, and composition, checked exactly.
Report check_functor(const Functor& F, const FiniteCategory& src,
                     const FiniteCategory& dst);

// ===== TRANSLATIONS =====

// A path category rephrased with its fibrations as display maps, carrying
// the structures that make the display-map side self-contained.
struct DispTranslation {
    DispCat disp;
    std::map<int, IdStructure> id_types;       // per display map
    std::map<int, int> units;                  // context -> identity display
    std::map<std::pair<int, int>, int> sigmas; // (outer, inner) -> composite
};

DispTranslation path_to_dispcat(const PathCat& p);

// Display side back to a path category: fibrations are the display maps and
// the equivalences are the homotopy equivalences.  The bare overload grows
// the equivalence class from the isomorphisms; the translated overload seeds
// the path-object table from the carried identity structures first.
PathCat dispcat_to_path(const DispCat& d);
PathCat dispcat_to_path(const DispTranslation& t);

// Both directions composed, compared componentwise against the input.
Report roundtrip_check(const PathCat& p);

// ===== 1-CELLS =====

Report check_1cell(const Functor& F, const PathCat& src, const PathCat& dst);
Report check_1cell(const Functor& F, const DispCat& src, const DispCat& dst);

// ===== LEFT ADJOINT SPLITTING =====

// A split type is a re-indexing arrow paired with a strict type over its
// target; re-indexing is precomposition, so the split laws hold literally.
struct SplitType {
    int sigma = -1;  // Gamma -> Delta
    int base = -1;   // strict display map over Delta

    bool operator==(const SplitType&) const = default;
    bool operator<(const SplitType& o) const {
        return sigma != o.sigma ? sigma < o.sigma : base < o.base;
    }
};

struct SplitDispCat {
    DispCat disp;  // display class = repletion of the comprehensions
    std::vector<SplitType> types;
    std::map<SplitType, PullbackWitness> chosen;  // comprehension squares

    // The display map a split type denotes.  Throws on an unknown pair.
    int comprehension(SplitType t) const;
};

SplitType split_reindex(const FiniteCategory& c, SplitType t, int tau);

// Identity and composition laws of the splitting, plus Cartesianness of the
// connecting comprehension squares.
Report check_split(const SplitDispCat& s);

struct SplitResult {
    SplitDispCat split;
    Functor unit;         // identity on the base; a type A becomes (1, A)
    Report verification;  // new types against the old display class
};

SplitResult left_adjoint_split(const DispCat& d);

// ===== COHERENCE =====

// The repletion of the comprehension class is itself a clan: roots factor
// through strict composites, compositions and pullbacks stay inside, and
// identities are present.  Witness factorizations are emitted per instance.
Report verify_coherence_closure(const SplitDispCat& s);

// Strict stability equations for the type formers on the split result,
// reported instance by instance.  A single splitting pass stabilizes the
// unit through the terminal; the sigma and identity choices may still move
// under re-indexing, and this check records exactly where.
Report check_strict_stability(const SplitDispCat& s);

}  // namespace catbench
