#include "catbench/syntaxmodel.hpp"

#include <algorithm>
#include <set>

namespace catbench {

namespace {

const char* kGenerators[] = {"r", "r'", "rho", "rho^-1", "s"};

bool is_generator(const std::string& n) {
    for (const char* g : kGenerators)
        if (n == g) return true;
    return false;
}

std::shared_ptr<const ModelTerm> box(ModelTerm t) {
    return std::make_shared<const ModelTerm>(std::move(t));
}

std::shared_ptr<const ModelType> box(ModelType t) {
    return std::make_shared<const ModelType>(std::move(t));
}

}  // namespace

bool ModelTerm::operator==(const ModelTerm& o) const {
    if (kind != o.kind || name != o.name) return false;
    if (!body != !o.body) return false;
    return !body || *body == *o.body;
}

bool ModelType::operator==(const ModelType& o) const {
    if (kind != o.kind || left != o.left || right != o.right) return false;
    if (!carrier != !o.carrier) return false;
    return !carrier || *carrier == *o.carrier;
}

ModelTerm var(const std::string& name) {
    if (name.empty() || is_generator(name))
        throw CatError("not a variable name: " + name);
    ModelTerm t;
    t.kind = TermKind::variable;
    t.name = name;
    return t;
}

ModelTerm gen(const std::string& name) {
    if (!is_generator(name)) throw CatError("unknown generator: " + name);
    ModelTerm t;
    t.kind = TermKind::generator;
    t.name = name;
    return t;
}

ModelTerm refl(const ModelTerm& t) {
    ModelTerm out;
    out.kind = TermKind::refl;
    out.body = box(t);
    return out;
}

ModelTerm inv(const ModelTerm& t) {
    switch (t.kind) {
        case TermKind::refl:
            return t;
        case TermKind::inverse:
            return *t.body;
        case TermKind::generator:
            if (t.name == "rho") return gen("rho^-1");
            if (t.name == "rho^-1") return gen("rho");
            throw CatError("inverse needs an equality proof: " + t.name);
        case TermKind::variable: {
            ModelTerm out;
            out.kind = TermKind::inverse;
            out.body = box(t);
            return out;
        }
    }
    throw CatError("inverse needs an equality proof");
}

ModelType type_R() {
    ModelType t;
    t.kind = TypeKind::base;
    return t;
}

ModelType type_S(const ModelTerm& point) {
    ModelType t;
    t.kind = TypeKind::fibre;
    t.left = point;
    return t;
}

ModelType type_Eq(const ModelType& carrier, const ModelTerm& a, const ModelTerm& b) {
    ModelType t;
    t.kind = TypeKind::equality;
    t.carrier = box(carrier);
    t.left = a;
    t.right = b;
    return t;
}

std::string to_string(const ModelTerm& t) {
    switch (t.kind) {
        case TermKind::variable:
        case TermKind::generator:
            return t.name;
        case TermKind::refl:
            return "refl(" + to_string(*t.body) + ")";
        case TermKind::inverse:
            return "inv(" + to_string(*t.body) + ")";
    }
    return "?";
}

std::string to_string(const ModelType& T) {
    switch (T.kind) {
        case TypeKind::base:
            return "R";
        case TypeKind::fibre:
            return "S(" + to_string(*T.left) + ")";
        case TypeKind::equality:
            return "Eq(" + to_string(*T.carrier) + ", " + to_string(*T.left) +
                   ", " + to_string(*T.right) + ")";
    }
    return "?";
}

ModelType type_of(const ModelTerm& t, const Context& ctx) {
    switch (t.kind) {
        case TermKind::variable:
            for (const auto& [n, T] : ctx)
                if (n == t.name) return T;
            throw CatError("unbound variable: " + t.name);
        case TermKind::generator:
            if (t.name == "r" || t.name == "r'") return type_R();
            if (t.name == "rho") return type_Eq(type_R(), gen("r"), gen("r'"));
            if (t.name == "rho^-1") return type_Eq(type_R(), gen("r'"), gen("r"));
            return type_S(gen("r"));  // s
        case TermKind::refl: {
            ModelType T = type_of(*t.body, ctx);
            return type_Eq(T, *t.body, *t.body);
        }
        case TermKind::inverse: {
            ModelType T = type_of(*t.body, ctx);
            if (T.kind != TypeKind::equality)
                throw CatError("inverse needs an equality proof: " +
                               to_string(*t.body));
            return type_Eq(*T.carrier, *T.right, *T.left);
        }
    }
    throw CatError("malformed term");
}

bool well_formed(const ModelType& T, const Context& ctx) {
    try {
        switch (T.kind) {
            case TypeKind::base:
                return true;
            case TypeKind::fibre:
                return type_of(*T.left, ctx) == type_R();
            case TypeKind::equality:
                return well_formed(*T.carrier, ctx) &&
                       type_of(*T.left, ctx) == *T.carrier &&
                       type_of(*T.right, ctx) == *T.carrier;
        }
    } catch (const CatError&) {
        return false;
    }
    return false;
}

bool derivable(const Judgment& j) {
    Context seen;
    for (const auto& [n, T] : j.context) {
        if (!well_formed(T, seen)) return false;
        seen.push_back({n, T});
    }
    if (!well_formed(j.type, seen)) return false;
    try {
        return type_of(j.subject, seen) == j.type;
    } catch (const CatError&) {
        return false;
    }
}

ModelTerm subst(const ModelTerm& t, const std::map<std::string, ModelTerm>& sub) {
    switch (t.kind) {
        case TermKind::variable: {
            auto it = sub.find(t.name);
            return it == sub.end() ? t : it->second;
        }
        case TermKind::generator:
            return t;
        case TermKind::refl:
            return refl(subst(*t.body, sub));
        case TermKind::inverse:
            // Rebuilding through inv() replays the table on whatever the
            // substitution uncovered.
            return inv(subst(*t.body, sub));
    }
    return t;
}

ModelType subst_type(const ModelType& T, const std::map<std::string, ModelTerm>& sub) {
    switch (T.kind) {
        case TypeKind::base:
            return T;
        case TypeKind::fibre:
            return type_S(subst(*T.left, sub));
        case TypeKind::equality:
            return type_Eq(subst_type(*T.carrier, sub), subst(*T.left, sub),
                           subst(*T.right, sub));
    }
    return T;
}

namespace {

bool term_mentions(const ModelTerm& t, const std::string& name) {
    if (t.kind == TermKind::variable) return t.name == name;
    return t.body && term_mentions(*t.body, name);
}

}  // namespace

bool mentions(const ModelType& T, const std::string& name) {
    switch (T.kind) {
        case TypeKind::base:
            return false;
        case TypeKind::fibre:
            return term_mentions(*T.left, name);
        case TypeKind::equality:
            return mentions(*T.carrier, name) || term_mentions(*T.left, name) ||
                   term_mentions(*T.right, name);
    }
    return false;
}

int eq_nesting(const ModelType& T) {
    return T.kind == TypeKind::equality ? 1 + eq_nesting(*T.carrier) : 0;
}

int saturation_depth(const ModelType& T) { return eq_nesting(T) + 2; }

namespace {

// All closed canonical terms to the given depth: the five generators and
// their refl towers.  Inverses normalize away on closed proofs.
std::vector<ModelTerm> closed_pool(int depth) {
    std::vector<ModelTerm> pool;
    std::vector<ModelTerm> layer;
    for (const char* g : kGenerators) layer.push_back(gen(g));
    for (int d = 1; d <= depth; ++d) {
        pool.insert(pool.end(), layer.begin(), layer.end());
        std::vector<ModelTerm> next;
        for (const ModelTerm& t : layer) next.push_back(refl(t));
        layer = std::move(next);
    }
    return pool;
}

void sort_terms(std::vector<ModelTerm>& v) {
    std::sort(v.begin(), v.end(), [](const ModelTerm& a, const ModelTerm& b) {
        return to_string(a) < to_string(b);
    });
}

}  // namespace

Enumeration enumerate_closed_terms(const ModelType& T, int depth) {
    if (!well_formed(T, {}))
        throw CatError("type is not closed and well-formed: " + to_string(T));
    Enumeration out;
    out.depth = depth;
    out.saturating = depth >= saturation_depth(T);
    for (const ModelTerm& t : closed_pool(depth))
        if (type_of(t, {}) == T) out.terms.push_back(t);
    sort_terms(out.terms);
    return out;
}

ModelTerm admissible_ind(const ModelType& C, const ModelTerm& d,
                         const ModelTerm& alpha) {
    ModelType at = type_of(alpha, {});
    if (at.kind != TypeKind::equality)
        throw CatError("eliminator needs an equality proof: " + to_string(alpha));
    const ModelType& A = *at.carrier;
    const ModelTerm& a = *at.left;
    const ModelTerm& a2 = *at.right;

    Context tele = {{"x", A}, {"x'", A}, {"chi", type_Eq(A, var("x"), var("x'"))}};
    if (!well_formed(C, tele))
        throw CatError("motive is not a type over the eliminator telescope");
    ModelType at_refl =
        subst_type(C, {{"x'", var("x")}, {"chi", refl(var("x"))}});
    ModelType dt = type_of(d, {{"x", A}});
    if (!(dt == at_refl))
        throw CatError("seed does not match the motive at reflexivity");

    if (!mentions(C, "x'") && !mentions(C, "chi"))
        return subst(d, {{"x", a}});
    if (C.kind == TypeKind::equality) {
        const ModelTerm& t1 = *C.left;
        const ModelTerm& t2 = *C.right;
        if (t1 == t2)
            return refl(subst(t1, {{"x", a}, {"x'", a2}, {"chi", alpha}}));
        if (t1 == var("x") && t2 == var("x'")) return alpha;
        if (t1 == var("x'") && t2 == var("x")) return inv(alpha);
    }
    throw CatError("no admissible case");
}

Report check_transport_underivable() {
    Report r("transport");
    ModelType target = type_S(gen("r'"));
    int depth = saturation_depth(target) + 2;
    Enumeration en = enumerate_closed_terms(target, depth);
    r.witness("enumeration saturating at depth", {std::to_string(depth)});
    if (en.terms.empty())
        r.witness("underivable", {to_string(target)});
    else
        for (const ModelTerm& t : en.terms)
            r.fail("transport term found", {to_string(t)});

    Judgment source{{}, gen("s"), type_S(gen("r"))};
    if (derivable(source))
        r.witness("source fibre inhabited", {"s"});
    else
        r.fail("source fibre lost its generator", {"s"});
    Judgment path{{}, gen("rho"), type_Eq(type_R(), gen("r"), gen("r'"))};
    if (derivable(path))
        r.witness("path between the fibres", {"rho"});
    else
        r.fail("path generator lost", {"rho"});

    // Contrast, not a derivation: a primitive based eliminator would accept
    // the seed s over r and the proof rho, producing a term of the target.
    r.witness("based induction would inhabit it", {"ind_s(rho)"});
    return r;
}

namespace {

std::vector<ModelTerm> open_pool(const Context& ctx, int depth) {
    std::vector<ModelTerm> layer;
    for (const auto& [n, T] : ctx) layer.push_back(var(n));
    for (const char* g : kGenerators) layer.push_back(gen(g));
    std::vector<ModelTerm> pool;
    for (int d = 1; d <= depth; ++d) {
        pool.insert(pool.end(), layer.begin(), layer.end());
        std::vector<ModelTerm> next;
        for (const ModelTerm& t : layer) next.push_back(refl(t));
        layer = std::move(next);
    }
    return pool;
}

std::vector<ModelType> types_over(const Context& ctx, int depth) {
    std::vector<ModelType> out = {type_R()};
    if (depth <= 1) return out;
    std::vector<ModelType> inner = types_over(ctx, depth - 1);
    std::vector<ModelTerm> terms = open_pool(ctx, depth - 1);
    for (const ModelTerm& t : terms)
        if (type_of(t, ctx) == type_R()) out.push_back(type_S(t));
    for (const ModelType& T : inner) {
        std::vector<ModelTerm> of_T;
        for (const ModelTerm& t : terms)
            if (type_of(t, ctx) == T) of_T.push_back(t);
        for (const ModelTerm& u : of_T)
            for (const ModelTerm& v : of_T) out.push_back(type_Eq(T, u, v));
    }
    return out;
}

}  // namespace

Report check_elimination_coverage(int depth) {
    Report r("elimination coverage");
    r.witness("contexts enumerated to depth", {std::to_string(depth)});

    std::vector<ModelTerm> closed = closed_pool(depth);
    int motives = 0, instances = 0, beta = 0;
    for (const ModelType& A : types_over({}, depth)) {
        if (!well_formed(A, {})) continue;
        Context tele = {{"x", A}, {"x'", A}, {"chi", type_Eq(A, var("x"), var("x'"))}};

        std::vector<ModelTerm> alphas;
        for (const ModelTerm& t : closed) {
            ModelType T = type_of(t, {});
            if (T.kind == TypeKind::equality && *T.carrier == A)
                alphas.push_back(t);
        }
        if (alphas.empty()) continue;

        int local_motives = 0, local_instances = 0;
        for (const ModelType& C : types_over(tele, depth)) {
            if (!well_formed(C, tele)) continue;
            ++motives;
            ++local_motives;
            ModelType at_refl =
                subst_type(C, {{"x'", var("x")}, {"chi", refl(var("x"))}});
            std::vector<ModelTerm> seeds;
            for (const ModelTerm& t : open_pool({{"x", A}}, depth)) {
                try {
                    if (type_of(t, {{"x", A}}) == at_refl) seeds.push_back(t);
                } catch (const CatError&) {
                }
            }
            if (seeds.empty() && C.kind == TypeKind::fibre &&
                (mentions(C, "x'") || mentions(C, "chi"))) {
                r.witness("no seed for a fibre motive", {to_string(C)});
                continue;
            }
            for (const ModelTerm& d : seeds)
                for (const ModelTerm& alpha : alphas) {
                    ++instances;
                    ++local_instances;
                    ModelTerm res = var("unset");
                    try {
                        res = admissible_ind(C, d, alpha);
                    } catch (const CatError& e) {
                        r.fail(e.what(),
                               {to_string(C), to_string(d), to_string(alpha)});
                        continue;
                    }
                    ModelType at = type_of(alpha, {});
                    ModelType want = subst_type(
                        C, {{"x", *at.left}, {"x'", *at.right}, {"chi", alpha}});
                    bool typed = false;
                    try {
                        typed = type_of(res, {}) == want;
                    } catch (const CatError&) {
                    }
                    if (!typed)
                        r.fail("eliminator result does not typecheck",
                               {to_string(C), to_string(d), to_string(alpha)});
                    if (alpha.kind == TermKind::refl) {
                        if (res == subst(d, {{"x", *alpha.body}}))
                            ++beta;
                        else
                            r.fail("computation rule broken",
                                   {to_string(C), to_string(d), to_string(alpha)});
                    }
                }
        }
        r.witness("cases covered", {to_string(A), std::to_string(local_motives),
                                    std::to_string(local_instances)});
    }
    r.witness("computation rule holds definitionally", {std::to_string(beta)});
    if (r.pass)
        r.witness("case analysis exhaustive",
                  {std::to_string(motives), std::to_string(instances)});
    return r;
}

}  // namespace catbench
