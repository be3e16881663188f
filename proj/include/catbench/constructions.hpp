#pragma once

#include <vector>

#include "catbench/pathcat.hpp"

namespace catbench {

// ===== CONSTRUCTIVE OPERATIONS =====
//
// The existence proofs behind the axiom checks, run forwards: mapping path
// spaces, lifts against equivalences, transport, and the synthesis of a path
// object for the total space of a fibration from path data one level down.
// Every operation verifies its own postconditions and throws CatError when
// they fail, which signals that the input was not the path category it
// claimed to be.

// f = p_f . w_f with w_f an equivalence and p_f a fibration.
struct Factorization {
    int f = -1;    // B -> A
    int Lf = -1;   // mapping path space B x_{f,s} PA
    int w_f = -1;  // B -> Lf, the equivalence (1, r.f)
    int p_f = -1;  // Lf -> A, the fibration t.pi1
};

// Outer commuting square p.f = sigma.w with w an equivalence and p a
// fibration; a solution fills the diagonal.
struct LiftProblem {
    int w = -1;      // B -> Delta
    int f = -1;      // B -> A
    int p = -1;      // A -> Gamma
    int sigma = -1;  // Delta -> Gamma
};

struct LiftSolution {
    int l = -1;                   // Delta -> A with p.l = sigma, canonical
    HomotopyWitness upper;        // l.w ~ f over Gamma
    std::vector<int> candidates;  // every solution, id-sorted
};

// tau moves a point of A along a path in the base: p.tau = t.pi1, and doing
// nothing along a trivial path is homotopic to doing nothing at all.
struct TransportWitness {
    int p = -1;           // A -> Gamma
    PathObjectWitness PG; // path object of Gamma the construction ran against
    PullbackWitness Lp;   // A x_{p,s} PGamma
    int tau = -1;         // Lp.apex -> A
    HomotopyWitness unit; // tau.(1, r.p) ~ 1 over Gamma
};

// Factor f through its mapping path space, using the path object that
// path_object_for picks for cod(f) over the terminal.  Throws when the
// pullback is missing or a postcondition fails.
Factorization factorize(const PathCat& p, int f);

// All diagonal fillers, canonical first; verifies the Lifting theorem's
// uniqueness clause over the full candidate set.  Throws "no lift found"
// when the search is empty.
LiftSolution lift(const PathCat& p, const LiftProblem& prob);

// Transport for the fibration against the given path object of its base,
// built as the canonical lift against the mapping path space factorization.
TransportWitness transport(const PathCat& p, int fibration,
                           const PathObjectWitness& PG);

// One step of the path-object tower: given a fibration d : B -> A, a path
// object PA for A over the terminal and a fibrewise path object PAB for d,
// produce a path object for B over the terminal.  When A is the terminal,
// PAB already is one.
PathObjectWitness synthesize_path_fibration(const PathCat& p, int fibration,
                                            const PathObjectWitness& PA,
                                            const PathObjectWitness& PAB);

// Category of fibrations into obj and commuting triangles, with fibration
// and equivalence classes copied from p; path objects are recomputed.
PathCat slice_fib(const PathCat& p, int obj);

// Decides path objects, path fibrations, factorization, transport, and
// lifting independently on rooted display-map data and reports the
// five-vector; a non-constant vector fails the report.
Report check_equivalent_axioms(const DispCat& d, const MapClass& eq);

}  // namespace catbench
