#include "catbench/typeformers.hpp"

#include <algorithm>
#include <memory>
#include <set>

#include "catbench/constructions.hpp"

namespace catbench {

namespace {

int need(const FiniteCategory& c, const PullbackWitness& w, int ul, int ur,
         const std::string& what) {
    auto m = mediate(c, w, ul, ur);
    if (!m) throw CatError("no mediating map for the " + what);
    return *m;
}

std::vector<int> id_sorted(const FiniteCategory& c, std::vector<int> ms) {
    std::sort(ms.begin(), ms.end(), [&](int a, int b) { return c.mor_less(a, b); });
    return ms;
}

std::vector<int> sorted_display(const DispCat& d) {
    return id_sorted(d.cat, {d.display.members.begin(), d.display.members.end()});
}

// Reads the carrier path object back off a structure: the endpoint legs are
// the formation projections after the displayed inclusion.
PathObjectWitness po_of(const FiniteCategory& c, const IdStructure& s) {
    return {total_of(c, s.id_type), s.refl_total,
            c.compose(s.formation.proj_left, s.id_type.proj),
            c.compose(s.formation.proj_right, s.id_type.proj)};
}

// Weakening of an ordinary term to a point of the squared type: the pairing
// whose components are the identity and the term after the projection.
int weaken_point(const FiniteCategory& c, const PullbackWitness& formation,
                 TypeOver A, int a_sec) {
    return need(c, formation, c.id_of(total_of(c, A)), c.compose(a_sec, A.proj),
                "weakened point");
}

// Transports a computation witness to the instantiated motive.  The carrier
// is the instantiated fibre square glued onto the motive's path object; the
// witness, the reflexivity map, and both endpoints all factor through it by
// mediation, and the result must itself be a path object.
HomotopyWitness instantiate_beta(const PathCat& p, const Reindexed& inst,
                                 const HomotopyWitness& upper, int at, int seed) {
    const FiniteCategory& c = p.cat();
    int Cproj = inst.square.g;
    auto CxC = pullback(c, Cproj, Cproj);
    if (!CxC) throw CatError("fibre product pullback missing for " + c.mor_id(Cproj));
    int pairC = need(c, *CxC, upper.po.s, upper.po.t, "endpoint pairing");
    auto ii = pullback(c, inst.type.proj, inst.type.proj);
    if (!ii)
        throw CatError("fibre product pullback missing for " +
                       c.mor_id(inst.type.proj));
    int up2 = need(c, *CxC, c.compose(inst.square.proj_right, ii->proj_left),
                   c.compose(inst.square.proj_right, ii->proj_right),
                   "squared instantiation");
    auto Q = pullback(c, up2, pairC);
    if (!Q) throw CatError("instantiated path carrier pullback missing");
    int one = c.id_of(total_of(c, inst.type));
    int diag2 = need(c, *ii, one, one, "diagonal");
    int r2 = need(c, *Q, diag2, c.compose(upper.po.r, inst.square.proj_right),
                  "instantiated reflexivity");
    PathObjectWitness po{Q->apex, r2, c.compose(ii->proj_left, Q->proj_left),
                         c.compose(ii->proj_right, Q->proj_left)};
    if (!valid_path_object(c, p.fib(), p.eq, inst.type.proj, po))
        throw CatError("instantiated path object fails its invariants");
    int pair_fg = need(c, *ii, at, seed, "computation endpoints");
    int h = need(c, *Q, pair_fg, upper.h, "computation witness");
    return {at, seed, h, po};
}

}  // namespace

IdStructure derive_id_from_path_object(const PathCat& p, TypeOver A,
                                       const PathObjectWitness& w) {
    const FiniteCategory& c = p.cat();
    if (!p.fib().contains(A.proj))
        throw CatError("identity types need a fibration: " + c.mor_id(A.proj));
    if (!valid_path_object(c, p.fib(), p.eq, A.proj, w))
        throw CatError("given fibrewise path object for " + c.mor_id(A.proj) +
                       " is invalid");
    DispCat dv{c, p.fib(), std::nullopt, std::nullopt};

    IdStructure s;
    s.A = A;
    auto fw = pullback(c, A.proj, A.proj);
    if (!fw) throw CatError("fibre product pullback missing for " + c.mor_id(A.proj));
    s.formation = *fw;
    s.id_type = TypeOver{need(c, s.formation, w.s, w.t, "endpoint pairing")};
    int one = c.id_of(total_of(c, A));
    s.diag = need(c, s.formation, one, one, "diagonal");
    s.refl_square = reindex(dv, s.id_type, s.diag);
    s.refl = TermOf{s.refl_square.type,
                    need(c, s.refl_square.square, one, w.r, "reflexivity section"),
                    one};
    s.refl_total = w.r;

    // The eliminator table is exhaustive: one entry per point, motive, and
    // seed.  The section is the canonical diagonal filler against the
    // reflexivity point, which is an equivalence because it sections the
    // pulled-back trivial fibration.
    for (const TermOf& a : terms_of(c, A)) {
        int a_up = weaken_point(c, s.formation, A, a.sec);
        Reindexed based = reindex(dv, s.id_type, a_up);
        int arefl =
            need(c, based.square, a.sec, c.compose(w.r, a.sec), "reflexivity point");
        int btot = total_of(c, based.type);
        for (const TypeOver& C : types_over(dv, btot)) {
            Reindexed inst = reindex(dv, C, arefl);
            for (const TermOf& d : terms_of(c, inst.type)) {
                int dprime = c.compose(inst.square.proj_right, d.sec);
                LiftSolution sol = lift(p, {arefl, dprime, C.proj, c.id_of(btot)});
                ElimEntry e;
                e.based = based;
                e.arefl = arefl;
                e.inst = inst;
                e.ind = TermOf{C, sol.l, c.id_of(btot)};
                e.ind_at = subst_term(dv, inst, e.ind, arefl);
                e.beta = instantiate_beta(p, inst, sol.upper, e.ind_at.sec, d.sec);
                s.elim_table.emplace(ElimKey{a, C, d}, std::move(e));
            }
        }
    }
    return s;
}

IdProvider id_provider(const PathCat& p) {
    auto memo = std::make_shared<std::map<int, IdStructure>>();
    return [p, memo](TypeOver A) -> IdStructure {
        auto it = memo->find(A.proj);
        if (it != memo->end()) return it->second;
        const FiniteCategory& c = p.cat();
        auto w = path_object_for(p, A.proj);
        if (!w)
            throw CatError("no path object for " + c.obj_id(c.dom(A.proj)) +
                           " over " + c.obj_id(c.cod(A.proj)));
        IdStructure s = derive_id_from_path_object(p, A, *w);
        memo->emplace(A.proj, s);
        return s;
    };
}

Report check_id_structure(const DispCat& d, const IdStructure& s, IdFlavor flavor) {
    const FiniteCategory& c = d.cat;
    Report r("id-structure");

    Report fo("formation");
    if (!d.display.contains(s.A.proj))
        fo.fail("type is not a display map", {c.mor_id(s.A.proj)});
    if (s.formation.f != s.A.proj || s.formation.g != s.A.proj ||
        !is_pullback(c, s.formation))
        fo.fail("formation is not a pullback of the display along itself", {});
    if (s.id_type.proj < 0 || !d.display.contains(s.id_type.proj) ||
        c.cod(s.id_type.proj) != s.formation.apex)
        fo.fail("id-type is not a display map over the formation",
                {s.id_type.proj >= 0 ? c.mor_id(s.id_type.proj)
                                     : std::string("undefined")});
    if (fo.pass) fo.witness("identity type", {c.mor_id(s.id_type.proj)});
    r.child(fo);
    if (!r.pass) return r;

    int tot = total_of(c, s.A);
    int one = c.id_of(tot);

    Report in("introduction");
    if (s.diag < 0 || s.refl.sec < 0 || s.refl_total < 0) {
        in.fail("introduction data incomplete", {});
        r.child(in);
        return r;
    }
    if (c.raw_comp(s.formation.proj_left, s.diag) != one ||
        c.raw_comp(s.formation.proj_right, s.diag) != one)
        in.fail("diagonal is not the identity pairing", {c.mor_id(s.diag)});
    if (s.refl_square.square.f != s.diag ||
        s.refl_square.square.g != s.id_type.proj ||
        s.refl_square.type.proj != s.refl_square.square.proj_left ||
        !is_pullback(c, s.refl_square.square))
        in.fail("refl square does not reindex the id-type along the diagonal", {});
    if (s.refl.type.proj != s.refl_square.type.proj ||
        c.raw_comp(s.refl_square.type.proj, s.refl.sec) != one)
        in.fail("refl is not a section", {c.mor_id(s.refl.sec)});
    int got = c.raw_comp(s.refl_square.square.proj_right, s.refl.sec);
    if (got != s.refl_total)
        in.fail("refl equation broken",
                {got >= 0 ? c.mor_id(got) : std::string("undefined"),
                 c.mor_id(s.refl_total)});
    if (c.raw_comp(s.id_type.proj, s.refl_total) != s.diag)
        in.fail("introduction does not sit over the diagonal",
                {c.mor_id(s.refl_total)});
    if (in.pass) in.witness("reflexivity", {c.mor_id(s.refl_total)});
    r.child(in);

    Report el("elimination");
    for (const auto& [k, e] : s.elim_table) {
        std::vector<std::string> ids{c.mor_id(k.a.sec), c.mor_id(k.C.proj),
                                     c.mor_id(k.d.sec)};
        if (e.arefl < 0 || e.ind.sec < 0 || e.ind_at.sec < 0) {
            el.fail("entry squares do not commute", ids);
            continue;
        }
        int wk = c.raw_comp(k.a.sec, s.A.proj);
        std::optional<int> a_up =
            wk >= 0 ? mediate(c, s.formation, one, wk) : std::nullopt;
        int ctx = c.cod(e.inst.type.proj);
        bool squares =
            a_up && e.based.square.f == *a_up &&
            e.based.square.g == s.id_type.proj &&
            e.based.type.proj == e.based.square.proj_left &&
            is_pullback(c, e.based.square) &&
            c.raw_comp(e.based.type.proj, e.arefl) == k.a.sec &&
            c.raw_comp(s.refl_total, k.a.sec) >= 0 &&
            c.raw_comp(e.based.square.proj_right, e.arefl) ==
                c.raw_comp(s.refl_total, k.a.sec) &&
            e.inst.square.f == e.arefl && e.inst.square.g == k.C.proj &&
            e.inst.type.proj == e.inst.square.proj_left &&
            is_pullback(c, e.inst.square) &&
            k.d.type.proj == e.inst.type.proj &&
            c.raw_comp(e.inst.type.proj, k.d.sec) == c.id_of(ctx);
        if (!squares) {
            el.fail("entry squares do not commute", ids);
            continue;
        }
        if (e.ind.type.proj != k.C.proj ||
            c.raw_comp(k.C.proj, e.ind.sec) != c.id_of(c.cod(k.C.proj)))
            el.fail("ind is not a section", ids);
        if (e.ind_at.type.proj != e.inst.type.proj ||
            c.raw_comp(e.inst.square.proj_right, e.ind_at.sec) !=
                c.raw_comp(e.ind.sec, e.arefl) ||
            c.raw_comp(e.inst.type.proj, e.ind_at.sec) != c.id_of(ctx))
            el.fail("instantiated eliminator does not restrict ind", ids);
    }
    // Completeness: re-enumerate every reachable instance and demand an entry.
    for (const TermOf& a : terms_of(c, s.A)) {
        int wk = c.raw_comp(a.sec, s.A.proj);
        std::optional<int> a_up =
            wk >= 0 ? mediate(c, s.formation, one, wk) : std::nullopt;
        if (!a_up) {
            el.fail("eliminator table is incomplete", {c.mor_id(a.sec)});
            continue;
        }
        auto based = try_reindex(d, s.id_type, *a_up);
        if (!based) {
            el.fail("eliminator table is incomplete", {c.mor_id(a.sec)});
            continue;
        }
        auto arefl = mediate(c, based->square, a.sec,
                             c.raw_comp(s.refl_total, a.sec) >= 0
                                 ? c.compose(s.refl_total, a.sec)
                                 : -1);
        if (!arefl) {
            el.fail("eliminator table is incomplete", {c.mor_id(a.sec)});
            continue;
        }
        for (const TypeOver& C : types_over(d, total_of(c, based->type))) {
            auto inst = try_reindex(d, C, *arefl);
            if (!inst) continue;
            for (const TermOf& dt : terms_of(c, inst->type))
                if (!s.elim_table.count(ElimKey{a, C, dt}))
                    el.fail("eliminator table is incomplete",
                            {c.mor_id(a.sec), c.mor_id(C.proj), c.mor_id(dt.sec)});
        }
    }
    if (el.pass)
        el.witness("eliminator table complete",
                   {std::to_string(s.elim_table.size())});
    r.child(el);

    Report co("computation");
    for (const auto& [k, e] : s.elim_table) {
        std::vector<std::string> ids{c.mor_id(k.a.sec), c.mor_id(k.C.proj),
                                     c.mor_id(k.d.sec)};
        if (e.beta.h < 0 || e.beta.po.r < 0) {
            co.fail("beta endpoints mismatch", ids);
            continue;
        }
        if (e.beta.f != e.ind_at.sec || e.beta.g != k.d.sec ||
            c.raw_comp(e.beta.po.s, e.beta.h) != e.beta.f ||
            c.raw_comp(e.beta.po.t, e.beta.h) != e.beta.g)
            co.fail("beta endpoints mismatch", ids);
        int x = total_of(c, e.inst.type);
        if (c.raw_comp(e.beta.po.s, e.beta.po.r) != c.id_of(x) ||
            c.raw_comp(e.beta.po.t, e.beta.po.r) != c.id_of(x))
            co.fail("beta carrier is not reflexive", {c.mor_id(e.beta.po.r)});
        auto ipb = pullback(c, e.inst.type.proj, e.inst.type.proj);
        std::optional<int> pairing =
            ipb ? mediate(c, *ipb, e.beta.po.s, e.beta.po.t) : std::nullopt;
        if (!pairing)
            co.fail("beta carrier pairing is not a display map", ids);
        else if (!d.display.contains(*pairing))
            co.fail("beta carrier pairing is not a display map",
                    {c.mor_id(*pairing)});
        if (flavor != IdFlavor::axiomatic) {
            if (e.ind_at.sec != k.d.sec ||
                e.beta.h != c.raw_comp(e.beta.po.r, k.d.sec))
                co.fail("beta witness is not refl", ids);
        }
    }
    if (co.pass)
        co.witness("computation witnesses verified",
                   {std::to_string(s.elim_table.size())});
    r.child(co);

    if (flavor == IdFlavor::extensional) {
        Report un("uniqueness");
        std::set<std::pair<int, int>> seen;
        for (const auto& [k, e] : s.elim_table) {
            if (!seen.insert({k.a.sec, k.C.proj}).second) continue;
            for (const TermOf& ct : terms_of(c, k.C)) {
                std::vector<std::string> ids{c.mor_id(k.a.sec), c.mor_id(k.C.proj),
                                             c.mor_id(ct.sec)};
                try {
                    TermOf dk = subst_term(d, e.inst, ct, e.arefl);
                    auto it = s.elim_table.find(ElimKey{k.a, k.C, dk});
                    if (it == s.elim_table.end()) continue;
                    if (it->second.ind.sec != ct.sec) un.fail("eta rule broken", ids);
                } catch (const CatError&) {
                    un.fail("eta rule broken", ids);
                }
            }
        }
        if (un.pass) un.witness("eliminators unique");
        r.child(un);
    }
    return r;
}

UnbasedIdStructure based_to_parametrized_unbased(const DispCat& d, TypeOver A,
                                                 const IdStructure& based,
                                                 std::optional<TypeOver> omega) {
    const FiniteCategory& c = d.cat;
    if (omega) {
        if (c.cod(omega->proj) != ctx_of(c, A))
            throw CatError("telescope is not over the type's context");
        // An invertible telescope transports away; anything larger would need
        // based entries living over it, which the table shape cannot carry.
        if (!is_isomorphism(c, omega->proj))
            throw CatError(
                "parametrized elimination needs based entries over the telescope");
    }
    Reindexed wk = reindex(d, A, A.proj);
    if (!(based.A == wk.type))
        throw CatError("based structure is not over the weakened type");
    int one = c.id_of(total_of(c, A));
    int delta = need(c, wk.square, one, one, "diagonal");

    UnbasedIdStructure out;
    out.A = A;
    out.formation = wk.square;
    out.diag = delta;
    int wk_one = c.id_of(total_of(c, wk.type));
    int delta_up = need(c, based.formation, wk_one,
                        c.compose(delta, wk.type.proj), "weakened diagonal");
    Reindexed rx = reindex(d, based.id_type, delta_up);
    out.id_type = rx.type;
    // Valid because the two weakenings of the diagonal agree as pairings.
    out.refl_total = need(c, rx.square, delta, c.compose(based.refl_total, delta),
                          "unbased reflexivity");
    out.refl_square = reindex(d, out.id_type, delta);
    out.refl = TermOf{out.refl_square.type,
                      need(c, out.refl_square.square, one, out.refl_total,
                           "unbased reflexivity section"),
                      one};

    // The based entries at the diagonal point are exactly the unbased ones.
    TermOf dterm{wk.type, delta, one};
    for (const TypeOver& C : types_over(d, total_of(c, out.id_type))) {
        Reindexed inst = reindex(d, C, out.refl_total);
        for (const TermOf& sd : terms_of(c, inst.type)) {
            auto it = based.elim_table.find(ElimKey{dterm, C, sd});
            if (it == based.elim_table.end())
                throw CatError("no based entry at the diagonal for " +
                               c.mor_id(C.proj) + " seeded " + c.mor_id(sd.sec));
            out.elim_table.emplace(UnbasedKey{C, sd}, it->second);
        }
    }
    return out;
}

namespace {

// One instance of the re-indexing comparison.  Both sides are collapsed to
// unbased structures over the squared substituted type; the substituted side
// is carried across the formation comparison iso, extended by an eliminator
// search, and the two arrows are produced by elimination on each side.
// Throws CatError to name the failure.
void check_one_stability(const DispCat& d, const IdProvider& provider, TypeOver A,
                         int sigma, StabilityVerdict& v) {
    const FiniteCategory& c = d.cat;
    Reindexed rA = reindex(d, A, sigma);
    TypeOver Asig = rA.type;
    int sig_up = rA.square.proj_right;
    int one_s = c.id_of(total_of(c, Asig));

    Reindexed wk_s = reindex(d, Asig, Asig.proj);
    UnbasedIdStructure nat =
        based_to_parametrized_unbased(d, Asig, provider(wk_s.type));

    Reindexed wk_g = reindex(d, A, A.proj);
    UnbasedIdStructure glob = based_to_parametrized_unbased(d, A, provider(wk_g.type));
    Reindexed rx2 = reindex(d, wk_g.type, sig_up);
    int sig_upup = rx2.square.proj_right;
    Reindexed rId = reindex(d, glob.id_type, sig_upup);

    int prodmap = need(c, glob.formation,
                       c.compose(sig_up, nat.formation.proj_left),
                       c.compose(sig_up, nat.formation.proj_right),
                       "substituted pairing");
    int j = need(c, rx2.square, nat.formation.proj_left, prodmap,
                 "formation comparison");
    if (!is_isomorphism(c, j))
        throw CatError("formation comparison is not invertible");
    Reindexed S = reindex(d, rId.type, j);

    int dgs = need(c, rx2.square, one_s, c.compose(glob.diag, sig_up),
                   "substituted diagonal");
    int r_rid = need(c, rId.square, dgs, c.compose(glob.refl_total, sig_up),
                     "substituted reflexivity");
    int r_sub = need(c, S.square, nat.diag, r_rid, "comparison reflexivity");

    // Elimination must survive the re-indexing: search a section with a
    // computation witness for every motive over the carried space.
    int sub_tot = total_of(c, S.type);
    std::map<std::pair<int, int>, int> elim;
    for (const TypeOver& C : types_over(d, sub_tot)) {
        Reindexed inst = reindex(d, C, r_sub);
        auto seeds = terms_of(c, inst.type);
        if (seeds.empty()) continue;
        PathObjectWitness po = po_of(c, provider(inst.type));
        int Ctot = total_of(c, C);
        for (const TermOf& sd : seeds) {
            std::optional<int> found;
            for (int l : sorted_morphs(c)) {
                if (c.dom(l) != sub_tot || c.cod(l) != Ctot) continue;
                if (c.raw_comp(C.proj, l) != c.id_of(sub_tot)) continue;
                auto at = mediate(c, inst.square, one_s, c.compose(l, r_sub));
                if (!at) continue;
                bool hit = false;
                for (int h : c.hom(total_of(c, Asig), po.P))
                    if (c.raw_comp(po.s, h) == *at && c.raw_comp(po.t, h) == sd.sec) {
                        hit = true;
                        break;
                    }
                if (hit) {
                    found = l;
                    break;
                }
            }
            if (!found)
                throw CatError("no eliminator for the substituted space at " +
                               c.mor_id(C.proj) + " seeded " + c.mor_id(sd.sec));
            elim[{C.proj, sd.sec}] = *found;
        }
    }

    // Into the carried space, through the native table.
    Reindexed C2 = reindex(d, S.type, nat.id_type.proj);
    int m2 = need(c, C2.square, nat.refl_total, r_sub, "comparison seed");
    Reindexed inst2 = reindex(d, C2.type, nat.refl_total);
    int d2 = need(c, inst2.square, one_s, m2, "comparison seed section");
    auto it2 = nat.elim_table.find(UnbasedKey{C2.type, TermOf{inst2.type, d2, one_s}});
    if (it2 == nat.elim_table.end())
        throw CatError("native table has no entry for the comparison motive");
    v.to_reindexed = c.compose(C2.square.proj_right, it2->second.ind.sec);

    // Back out of it, through the searched eliminator.
    Reindexed C3 = reindex(d, nat.id_type, S.type.proj);
    int m3 = need(c, C3.square, r_sub, nat.refl_total, "comparison seed");
    Reindexed inst3 = reindex(d, C3.type, r_sub);
    int d3 = need(c, inst3.square, one_s, m3, "comparison seed section");
    auto e3 = elim.find({C3.type.proj, d3});
    if (e3 == elim.end())
        throw CatError("no eliminator for the substituted space at " +
                       c.mor_id(C3.type.proj) + " seeded " + c.mor_id(d3));
    v.to_substituted = c.compose(C3.square.proj_right, e3->second);

    if (c.raw_comp(S.type.proj, v.to_reindexed) != nat.id_type.proj ||
        c.raw_comp(nat.id_type.proj, v.to_substituted) != S.type.proj)
        throw CatError("comparison arrows do not commute over the formation");
}

}  // namespace

StabilityReport check_weak_stability_id(const DispCat& d, const IdProvider& provider) {
    const FiniteCategory& c = d.cat;
    StabilityReport out;
    for (int aproj : sorted_display(d)) {
        TypeOver A{aproj};
        for (int sigma : id_sorted(c, c.into(ctx_of(c, A)))) {
            StabilityVerdict v;
            v.type_proj = aproj;
            v.sigma = sigma;
            try {
                check_one_stability(d, provider, A, sigma, v);
                v.stable = true;
            } catch (const CatError& ex) {
                v.stable = false;
                v.failure = ex.what();
            }
            out.verdicts.push_back(v);
        }
    }
    return out;
}

bool StabilityReport::all_stable() const {
    return std::all_of(verdicts.begin(), verdicts.end(),
                       [](const StabilityVerdict& v) { return v.stable; });
}

Report StabilityReport::to_report(const FiniteCategory& c) const {
    Report r("weak-stability");
    for (const auto& v : verdicts) {
        if (v.stable)
            r.witness("stable", {c.mor_id(v.type_proj), c.mor_id(v.sigma),
                                 c.mor_id(v.to_reindexed), c.mor_id(v.to_substituted)});
        else
            r.fail(v.failure, {c.mor_id(v.type_proj), c.mor_id(v.sigma)});
    }
    return r;
}

Report check_ext_unit_sigma(const DispCat& d) {
    const FiniteCategory& c = d.cat;
    Report r("ext-unit-sigma");

    Report un("unit");
    for (int o : sorted_objects(c)) {
        if (!d.display.contains(c.id_of(o)))
            un.fail("identity is not a display map", {c.mor_id(c.id_of(o))});
        else
            un.witness("unit type", {c.obj_id(o), c.mor_id(c.id_of(o))});
    }
    bool unit_ok = un.pass;
    r.child(un);

    std::vector<int> disp = sorted_display(d);
    Report sg("sigma");
    for (int a : disp)
        for (int b : disp) {
            if (c.cod(b) != c.dom(a)) continue;
            int comp = c.raw_comp(a, b);
            if (comp < 0 || !d.display.contains(comp))
                sg.fail("display maps not closed under composition",
                        {c.mor_id(b), c.mor_id(a),
                         comp >= 0 ? c.mor_id(comp) : std::string("undefined")});
            else
                sg.witness("sigma type", {c.mor_id(b), c.mor_id(a), c.mor_id(comp)});
        }
    bool sigma_ok = sg.pass;
    r.child(sg);
    if (!unit_ok || !sigma_ok) return r;

    // With both verdicts positive the structures exist on the nose, and the
    // rules hold as table equalities rather than up to homotopy.
    Report law("strict laws");
    for (int o : sorted_objects(c)) {
        auto ts = terms_of(c, TypeOver{c.id_of(o)});
        if (ts.size() != 1 || ts[0].sec != c.id_of(o))
            law.fail("unit term is not unique", {c.obj_id(o)});
        else
            law.witness("unit laws hold strictly", {c.obj_id(o)});
    }
    for (int a : disp)
        for (int b : disp) {
            if (c.cod(b) != c.dom(a)) continue;
            int comp = c.compose(a, b);
            bool ok = true;
            std::set<int> pairs;
            for (const TermOf& at : terms_of(c, TypeOver{a})) {
                auto rx = try_reindex(d, TypeOver{b}, at.sec);
                if (!rx) {
                    ok = false;
                    break;
                }
                for (const TermOf& bt : terms_of(c, rx->type)) {
                    int pr = c.compose(rx->square.proj_right, bt.sec);
                    if (c.raw_comp(b, pr) != at.sec) ok = false;
                    auto back = mediate(c, rx->square, c.id_of(c.cod(a)), pr);
                    if (!back || *back != bt.sec) ok = false;
                    pairs.insert(pr);
                }
            }
            std::set<int> sections;
            for (const TermOf& t : terms_of(c, TypeOver{comp})) sections.insert(t.sec);
            if (!ok || pairs != sections)
                law.fail("sigma pairing is not bijective", {c.mor_id(b), c.mor_id(a)});
            else
                law.witness("sigma laws hold strictly", {c.mor_id(b), c.mor_id(a)});
        }
    r.child(law);
    return r;
}

Report check_axiomatic_unit_sigma(const DispCat& d, const MapClass& eq) {
    const FiniteCategory& c = d.cat;
    Report r("axiomatic-unit-sigma");
    PathCat tp{DispCat{c, fibration_closure(c, d.display), std::nullopt, std::nullopt},
               eq,
               {}};
    std::vector<int> disp = sorted_display(d);

    struct FoundUnit {
        int ctx, q, e;
    };
    std::vector<FoundUnit> units;
    Report un("unit");
    for (int o : sorted_objects(c)) {
        std::optional<FoundUnit> hit;
        for (int q : disp) {
            if (c.cod(q) != o || !eq.contains(q)) continue;
            for (int e : id_sorted(c, c.hom(o, c.dom(q))))
                if (c.raw_comp(q, e) == c.id_of(o)) {
                    hit = FoundUnit{o, q, e};
                    break;
                }
            if (hit) break;
        }
        if (hit) {
            un.witness("unit type", {c.obj_id(o), c.mor_id(hit->q)});
            units.push_back(*hit);
        } else {
            un.fail("no display map homotopic to the identity", {c.obj_id(o)});
        }
    }
    r.child(un);

    struct FoundSigma {
        int b, a, q, e;
    };
    std::vector<FoundSigma> sigmas;
    Report sg("sigma");
    for (int a : disp)
        for (int b : disp) {
            if (c.cod(b) != c.dom(a)) continue;
            int comp = c.raw_comp(a, b);
            std::optional<FoundSigma> hit;
            if (comp >= 0)
                for (int q : disp) {
                    if (c.cod(q) != c.cod(a)) continue;
                    for (int e : id_sorted(c, c.hom(c.dom(b), c.dom(q))))
                        if (eq.contains(e) && c.raw_comp(q, e) == comp) {
                            hit = FoundSigma{b, a, q, e};
                            break;
                        }
                    if (hit) break;
                }
            if (hit) {
                sg.witness("sigma type", {c.mor_id(hit->b), c.mor_id(hit->a),
                                          c.mor_id(hit->q), c.mor_id(hit->e)});
                sigmas.push_back(*hit);
            } else {
                sg.fail("no display map homotopic to the composite",
                        {c.mor_id(b), c.mor_id(a)});
            }
        }
    r.child(sg);

    // Eliminators come from lifting against the connecting equivalence; the
    // computation rule holds up to fibrewise homotopy.
    Report elim("eliminators");
    auto run_elims = [&](int e, int E, std::vector<std::string> tag) {
        int n = 0;
        for (const TypeOver& C : types_over(d, E)) {
            Reindexed inst;
            try {
                inst = reindex(d, C, e);
            } catch (const CatError& ex) {
                elim.fail(ex.what(), {c.mor_id(C.proj)});
                continue;
            }
            for (const TermOf& dt : terms_of(c, inst.type)) {
                try {
                    LiftSolution sol =
                        lift(tp, {e, c.compose(inst.square.proj_right, dt.sec),
                                  C.proj, c.id_of(E)});
                    TermOf at = subst_term(d, inst, TermOf{C, sol.l, c.id_of(E)}, e);
                    if (!homotopic(tp, at.sec, dt.sec, inst.type.proj))
                        elim.fail("eliminator computation is not homotopic to the seed",
                                  {c.mor_id(C.proj), c.mor_id(dt.sec)});
                    else
                        ++n;
                } catch (const CatError& ex) {
                    elim.fail(ex.what(), {c.mor_id(C.proj), c.mor_id(dt.sec)});
                }
            }
        }
        tag.push_back(std::to_string(n));
        elim.witness("eliminators derived", tag);
    };
    for (const FoundUnit& u : units) run_elims(u.e, c.dom(u.q), {c.obj_id(u.ctx)});
    for (const FoundSigma& s2 : sigmas)
        run_elims(s2.e, c.dom(s2.q), {c.mor_id(s2.b), c.mor_id(s2.a)});
    r.child(elim);
    return r;
}

Report check_pi_homotopy_exponent(const PathCat& p, TypeOver A, TypeOver B,
                                  const PiStructure& cand) {
    const FiniteCategory& c = p.cat();
    Report r("pi-homotopy-exponent");
    r.witness("classes compared at one homotopy level");
    int ctx = ctx_of(c, A);
    bool shape = cand.A == A && cand.B == B && cand.app >= 0 &&
                 c.cod(cand.pi.proj) == ctx && c.cod(B.proj) == total_of(c, A) &&
                 cand.prod.f == cand.pi.proj && cand.prod.g == A.proj &&
                 is_pullback(c, cand.prod) && c.dom(cand.app) == cand.prod.apex &&
                 c.cod(cand.app) == total_of(c, B) &&
                 c.raw_comp(B.proj, cand.app) == cand.prod.proj_right;
    if (!shape) {
        r.fail("evaluation map does not typecheck",
               {cand.app >= 0 ? c.mor_id(cand.app) : std::string("undefined")});
        return r;
    }
    for (int sigma : id_sorted(c, c.into(ctx))) {
        int D = c.dom(sigma);
        try {
            auto ax = pullback(c, sigma, A.proj);
            if (!ax) {
                r.fail("no pullback of the type along", {c.mor_id(sigma)});
                continue;
            }
            std::vector<int> lhs;
            for (int u : id_sorted(c, c.hom(D, total_of(c, cand.pi))))
                if (c.raw_comp(cand.pi.proj, u) == sigma) lhs.push_back(u);
            std::vector<int> rhs;
            for (int vm : id_sorted(c, c.hom(ax->apex, total_of(c, B))))
                if (c.raw_comp(B.proj, vm) == ax->proj_right) rhs.push_back(vm);
            std::map<int, int> img;
            bool broke = false;
            for (int u : lhs) {
                auto m = mediate(c, cand.prod, c.compose(u, ax->proj_left),
                                 ax->proj_right);
                if (!m) {
                    r.fail("no product pairing for a term",
                           {c.mor_id(u), c.mor_id(sigma)});
                    broke = true;
                    break;
                }
                img[u] = c.compose(cand.app, *m);
            }
            if (broke) continue;
            auto reps_of = [&](const std::vector<int>& xs, int proj) {
                std::vector<int> reps;
                for (int x : xs) {
                    bool seen = false;
                    for (int rep : reps)
                        if (homotopic(p, x, rep, proj)) {
                            seen = true;
                            break;
                        }
                    if (!seen) reps.push_back(x);
                }
                return reps;
            };
            std::vector<int> lreps = reps_of(lhs, cand.pi.proj);
            std::vector<int> rreps = reps_of(rhs, B.proj);
            bool bad = false;
            for (int vrep : rreps) {
                bool covered = false;
                for (int u : lhs)
                    if (homotopic(p, img[u], vrep, B.proj)) {
                        covered = true;
                        break;
                    }
                if (!covered) {
                    r.fail("class not in the image", {c.mor_id(sigma), c.mor_id(vrep)});
                    bad = true;
                }
            }
            if (!bad) r.witness("essentially surjective", {c.mor_id(sigma)});
            bool badf = false;
            for (size_t i = 0; i < lreps.size(); ++i)
                for (size_t j = i + 1; j < lreps.size(); ++j)
                    if (homotopic(p, img[lreps[i]], img[lreps[j]], B.proj)) {
                        r.fail("homotopic images from non-homotopic terms",
                               {c.mor_id(sigma), c.mor_id(lreps[i]),
                                c.mor_id(lreps[j])});
                        badf = true;
                    }
            if (!badf) r.witness("full", {c.mor_id(sigma)});
        } catch (const CatError& ex) {
            r.fail(ex.what(), {c.mor_id(sigma)});
        }
    }
    return r;
}

namespace {

// Exact hom-set bijection through the evaluation map, for every substitution.
bool lf_bijective(const FiniteCategory& c, int a, int b, int pr,
                  const PullbackWitness& prod, int app) {
    int G = c.cod(a);
    int P = c.dom(pr);
    for (int sigma : c.into(G)) {
        int D = c.dom(sigma);
        auto ax = pullback(c, sigma, a);
        if (!ax) return false;
        std::vector<int> lhs;
        for (int u : c.hom(D, P))
            if (c.raw_comp(pr, u) == sigma) lhs.push_back(u);
        std::set<int> rhs;
        for (int v : c.hom(ax->apex, c.dom(b)))
            if (c.raw_comp(b, v) == ax->proj_right) rhs.insert(v);
        std::set<int> image;
        for (int u : lhs) {
            auto m = mediate(c, prod, c.compose(u, ax->proj_left), ax->proj_right);
            if (!m) return false;
            if (!image.insert(c.compose(app, *m)).second) return false;
        }
        if (image != rhs) return false;
    }
    return true;
}

}  // namespace

Report check_LF(const DispCat& d) {
    const FiniteCategory& c = d.cat;
    Report r("lf");
    auto term = terminal_object(c);
    if (!term) {
        r.fail("no terminal object", {});
        return r;
    }

    Report pr("products");
    std::map<std::pair<int, int>, PullbackWitness> prods;
    for (int x : sorted_objects(c))
        for (int y : sorted_objects(c)) {
            auto w = pullback(c, unique_to_terminal(c, x), unique_to_terminal(c, y));
            if (w) {
                prods[{x, y}] = *w;
                if (!c.obj_less(y, x))
                    pr.witness("product", {c.obj_id(x), c.obj_id(y), c.obj_id(w->apex)});
            } else if (!c.obj_less(y, x)) {
                pr.fail("missing binary product", {c.obj_id(x), c.obj_id(y)});
            }
        }
    r.child(pr);
    if (!pr.pass) return r;

    Report ex("exponents");
    for (int a : sorted_display(d)) {
        int Atot = c.dom(a);
        int G = c.cod(a);
        std::set<int> bset;
        for (int b : d.display.members)
            if (c.cod(b) == Atot) bset.insert(b);
        for (int y = 0; y < c.n_obj(); ++y) {
            auto itL = prods.find({Atot, y});
            if (itL != prods.end()) bset.insert(itL->second.proj_left);
            auto itR = prods.find({y, Atot});
            if (itR != prods.end()) bset.insert(itR->second.proj_right);
        }
        for (int b : id_sorted(c, {bset.begin(), bset.end()})) {
            bool found = false;
            for (int P : sorted_objects(c)) {
                for (int pm : id_sorted(c, c.hom(P, G))) {
                    auto prod = pullback(c, pm, a);
                    if (!prod) continue;
                    for (int app : id_sorted(c, c.hom(prod->apex, c.dom(b)))) {
                        if (c.raw_comp(b, app) != prod->proj_right) continue;
                        if (lf_bijective(c, a, b, pm, *prod, app)) {
                            ex.witness("dependent exponent",
                                       {c.mor_id(a), c.mor_id(b), c.obj_id(P),
                                        c.mor_id(pm), c.mor_id(app)});
                            found = true;
                            break;
                        }
                    }
                    if (found) break;
                }
                if (found) break;
            }
            if (!found) ex.fail("no dependent exponent", {c.mor_id(a), c.mor_id(b)});
        }
    }
    r.child(ex);
    return r;
}

Report id_structure_report(const FiniteCategory& c, const IdStructure& s) {
    Report r("id-type");
    r.witness("type", {c.mor_id(s.A.proj)});
    r.witness("formation", {c.obj_id(s.formation.apex), c.mor_id(s.formation.proj_left),
                            c.mor_id(s.formation.proj_right)});
    r.witness("identity type", {c.mor_id(s.id_type.proj)});
    r.witness("diagonal", {c.mor_id(s.diag)});
    r.witness("reflexivity", {c.mor_id(s.refl_total)});
    r.witness("eliminators", {std::to_string(s.elim_table.size())});
    for (const auto& [k, e] : s.elim_table)
        r.witness("eliminator",
                  {c.mor_id(k.a.sec), c.mor_id(k.C.proj), c.mor_id(k.d.sec),
                   c.mor_id(e.ind.sec), c.mor_id(e.beta.h)});
    return r;
}

Report pi_structure_report(const FiniteCategory& c, const PiStructure& s) {
    Report r("pi-type");
    r.witness("domain", {c.mor_id(s.A.proj)});
    r.witness("family", {c.mor_id(s.B.proj)});
    r.witness("exponent", {c.mor_id(s.pi.proj)});
    r.witness("product", {c.obj_id(s.prod.apex), c.mor_id(s.prod.proj_left),
                          c.mor_id(s.prod.proj_right)});
    r.witness("evaluation", {c.mor_id(s.app)});
    return r;
}

}  // namespace catbench
