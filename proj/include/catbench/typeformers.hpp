#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "catbench/pathcat.hpp"

namespace catbench {

// ===== SEMANTIC TYPE FORMERS =====
//
// Identity types as path objects with eliminator tables, unit and sigma
// structure read off the display class, dependent exponents checked at the
// hom-set level.  Everything is materialized exhaustively: a finite category
// has finitely many instances of each rule, so the universally quantified
// laws become tables that can be checked entry by entry.

// One eliminator instance: a point of the type, a motive over the based
// identity space, and a seed term at reflexivity.
struct ElimKey {
    TermOf a;    // ordinary term of the underlying type
    TypeOver C;  // motive over the based identity space of a
    TermOf d;    // term of C at (a, refl a)

    bool operator<(const ElimKey& o) const {
        if (a.sec != o.a.sec) return a.sec < o.a.sec;
        if (C.proj != o.C.proj) return C.proj < o.C.proj;
        return d.sec < o.d.sec;
    }
};

struct ElimEntry {
    Reindexed based;       // identity space based at a, over the type's total
    int arefl = -1;        // (a, refl a) into the based space
    Reindexed inst;        // C pulled back along arefl
    TermOf ind;            // eliminator: a section of C
    TermOf ind_at;         // ind substituted along arefl
    HomotopyWitness beta;  // ind_at propositionally equal to d
};

// A full identity structure for one type: formation pullback, the identity
// type displayed over it, introduction, and the exhaustive eliminator table.
struct IdStructure {
    TypeOver A;
    PullbackWitness formation;  // total(A) squared over the context
    TypeOver id_type;           // displayed over the formation apex
    int diag = -1;              // identity pairing into the apex
    Reindexed refl_square;      // id_type pulled back along diag
    TermOf refl;                // section of refl_square.type
    int refl_total = -1;        // weakened refl, lands in total(id_type)
    std::map<ElimKey, ElimEntry> elim_table;
};

// Unbased variant: the motive lives directly over the identity space and the
// eliminator is seeded at the diagonal.
struct UnbasedKey {
    TypeOver C;  // motive over total(id_type)
    TermOf d;    // term of C at (diag, refl)

    bool operator<(const UnbasedKey& o) const {
        if (C.proj != o.C.proj) return C.proj < o.C.proj;
        return d.sec < o.d.sec;
    }
};

struct UnbasedIdStructure {
    TypeOver A;
    PullbackWitness formation;
    TypeOver id_type;
    int diag = -1;
    Reindexed refl_square;
    TermOf refl;
    int refl_total = -1;  // equals the seed point (diag, refl)
    std::map<UnbasedKey, ElimEntry> elim_table;
};

// Dependent exponent candidate: the exponent object with its evaluation map.
struct PiStructure {
    TypeOver A;            // over the base context
    TypeOver B;            // over total(A)
    TypeOver pi;           // over the base context
    PullbackWitness prod;  // total(pi) times total(A) over the context
    int app = -1;          // prod.apex -> total(B) over total(A)
};

// Per-instance verdict of the re-indexing check, with the two comparison
// arrows between the substituted and the re-indexed identity space when the
// construction goes through.
struct StabilityVerdict {
    int type_proj = -1;
    int sigma = -1;
    bool stable = false;
    int to_reindexed = -1;   // from the substituted identity space
    int to_substituted = -1; // from the re-indexed identity space
    std::string failure;     // nonempty exactly when stable is false
};

struct StabilityReport {
    std::vector<StabilityVerdict> verdicts;

    bool all_stable() const;
    Report to_report(const FiniteCategory& c) const;
};

// Source of identity structures, one per type.  May throw CatError when the
// category cannot supply one for the requested type.
using IdProvider = std::function<IdStructure(TypeOver)>;

enum class IdFlavor { axiomatic, intensional, extensional };

// Turns a fibrewise path object of A's display into an identity structure:
// formation is the endpoint pairing, introduction the unique section lifting
// the reflexivity map, and every eliminator entry is produced by lifting the
// seed across the equivalence (a, refl a), with the computation witness
// transported back to the instantiated motive.
IdStructure derive_id_from_path_object(const PathCat& p, TypeOver A,
                                       const PathObjectWitness& w);

// Memoized provider deriving structures from the canonical path objects.
IdProvider id_provider(const PathCat& p);

// Checks every structural invariant; intensional additionally demands that
// each computation witness is reflexivity on the nose, extensional that the
// eliminator returns substituted sections unchanged.
Report check_id_structure(const DispCat& d, const IdStructure& s, IdFlavor flavor);

// Collapses a based structure for the weakened type A^ over total(A) into an
// unbased structure for A: entries are the based entries at the diagonal.
// A one-level table spans the empty telescope; a parameter telescope is
// accepted only when its display map is invertible.
UnbasedIdStructure based_to_parametrized_unbased(
    const DispCat& d, TypeOver A, const IdStructure& based,
    std::optional<TypeOver> omega = std::nullopt);

// For every type and substitution: re-index the identity space, extend it to
// a full structure by search, and build both comparison arrows through the
// eliminators on each side.
StabilityReport check_weak_stability_id(const DispCat& d, const IdProvider& provider);

// Unit iff all identities are display maps, sigma iff display maps compose;
// when both hold the structures are materialized and the strict laws checked
// literally.
Report check_ext_unit_sigma(const DispCat& d);

// Unit iff some display map into each context is an equivalence, sigma iff
// each composable display pair is connected to a display map by an
// equivalence; eliminators are then built by lifting.
Report check_axiomatic_unit_sigma(const DispCat& d, const MapClass& eq);

// Essential surjectivity and fullness of the candidate's evaluation map on
// fibrewise homotopy classes, per substitution.  Classes are compared at one
// level: homotopies between homotopies are not tracked.
Report check_pi_homotopy_exponent(const PathCat& p, TypeOver A, TypeOver B,
                                  const PiStructure& cand);

// Finite products plus a dependent exponent, with an on-the-nose hom-set
// bijection per substitution, for every display map over a display map or
// product projection.  The exponent object need not be display.
Report check_LF(const DispCat& d);

// Witness listings in the shared report shape.
Report id_structure_report(const FiniteCategory& c, const IdStructure& s);
Report pi_structure_report(const FiniteCategory& c, const PiStructure& s);

}  // namespace catbench
