#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "catbench/report.hpp"

// A minimal type theory with equality formation and introduction only: two
// base points r, r' : R, a path rho between them with its primitive inverse,
// and a point s : S(r) in a fibre over one end.  Terms and types are kept in
// canonical form; the only computation is the inverse table on proofs.
// Eliminator motives use the fixed telescope x : A, x' : A, chi : Eq(A, x, x').

namespace catbench {

enum class TermKind { variable, generator, refl, inverse };

struct ModelTerm {
    TermKind kind = TermKind::variable;
    std::string name;                       // variable or generator spelling
    std::shared_ptr<const ModelTerm> body;  // refl / inverse argument

    bool operator==(const ModelTerm& o) const;
};

// Generators: r, r', rho, rho^-1, s.  Anything else is rejected.
ModelTerm var(const std::string& name);
ModelTerm gen(const std::string& name);
ModelTerm refl(const ModelTerm& t);

// Applies the inverse table: refl(b) stays, rho and rho^-1 swap, a wrapped
// inverse unwraps; variables keep a formal wrapper.  Points are rejected.
ModelTerm inv(const ModelTerm& t);

enum class TypeKind { base, fibre, equality };

struct ModelType {
    TypeKind kind = TypeKind::base;
    std::shared_ptr<const ModelType> carrier;  // equality only
    std::optional<ModelTerm> left, right;      // fibre: left; equality: both

    bool operator==(const ModelType& o) const;
};

ModelType type_R();
ModelType type_S(const ModelTerm& point);
ModelType type_Eq(const ModelType& carrier, const ModelTerm& a, const ModelTerm& b);

std::string to_string(const ModelTerm& t);
std::string to_string(const ModelType& T);

using Context = std::vector<std::pair<std::string, ModelType>>;

// Synthesized type of a canonical term; throws on unbound variables and on
// inverses of non-proofs.
ModelType type_of(const ModelTerm& t, const Context& ctx);

bool well_formed(const ModelType& T, const Context& ctx);

struct Judgment {
    Context context;
    ModelTerm subject;
    ModelType type;
};

bool derivable(const Judgment& j);

// Capture-free by construction: the model has no binders inside terms.
ModelTerm subst(const ModelTerm& t, const std::map<std::string, ModelTerm>& sub);
ModelType subst_type(const ModelType& T, const std::map<std::string, ModelTerm>& sub);

bool mentions(const ModelType& T, const std::string& name);

// Eq-nesting: how many equality layers the type wraps.  The closed-term
// grammar only deepens through refl, so enumeration saturates at nesting + 2.
int eq_nesting(const ModelType& T);
int saturation_depth(const ModelType& T);

struct Enumeration {
    std::vector<ModelTerm> terms;  // sorted by printed form
    int depth = 0;
    bool saturating = false;       // depth reached saturation_depth(T)
};

Enumeration enumerate_closed_terms(const ModelType& T, int depth);

// Unbased path induction by case analysis on the motive: a motive ignoring
// x', chi substitutes the seed; an equality motive returns refl of the
// substituted endpoint, the proof itself, or its inverse.  Throws
// "no admissible case" when the classification misses, which would refute
// the admissibility claim.
ModelTerm admissible_ind(const ModelType& C, const ModelTerm& d,
                         const ModelTerm& alpha);

// S(r') stays empty at a saturating depth while s and rho are derivable, so
// no closed term transports s across rho.
Report check_transport_underivable();

// Exhaustiveness of the eliminator case analysis over every motive, seed,
// and closed proof enumerable at the given depth; coverage is reported, not
// extrapolated.
Report check_elimination_coverage(int depth);

}  // namespace catbench
