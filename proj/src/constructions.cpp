#include "catbench/constructions.hpp"

#include <string>

namespace catbench {

namespace {

int need(const FiniteCategory& c, const PullbackWitness& w, int u_left, int u_right,
         const std::string& what) {
    auto m = mediate(c, w, u_left, u_right);
    if (!m) throw CatError("no mediating map for the " + what);
    return *m;
}

}  // namespace

Factorization factorize(const PathCat& p, int f) {
    const FiniteCategory& c = p.cat();
    int B = c.dom(f);
    int A = c.cod(f);
    auto po = path_object_for(p, unique_to_terminal(c, A));
    if (!po) throw CatError("no path object for " + c.obj_id(A));
    auto W = pullback(c, f, po->s);
    if (!W) throw CatError("mapping path space pullback missing for " + c.mor_id(f));
    int wf = need(c, *W, c.id_of(B), c.compose(po->r, f), "mapping path space unit");
    int pf = c.compose(po->t, W->proj_right);
    if (c.compose(pf, wf) != f)
        throw CatError("mapping path space factorization does not recompose " + c.mor_id(f));
    if (!p.eq.contains(wf))
        throw CatError("mapping path space unit is not an equivalence: " + c.mor_id(wf));
    if (!p.fib().contains(pf))
        throw CatError("mapping path space projection is not a fibration: " + c.mor_id(pf));
    return {f, W->apex, wf, pf};
}

LiftSolution lift(const PathCat& p, const LiftProblem& prob) {
    const FiniteCategory& c = p.cat();
    if (c.dom(prob.w) != c.dom(prob.f))
        throw CatError("lift problem legs do not share a source");
    if (c.cod(prob.p) != c.cod(prob.sigma))
        throw CatError("lift problem legs do not share a target");
    if (!c.composable(prob.p, prob.f) || !c.composable(prob.sigma, prob.w))
        throw CatError("lift problem sides do not compose");
    if (c.compose(prob.p, prob.f) != c.compose(prob.sigma, prob.w))
        throw CatError("lift problem square does not commute");
    if (!p.eq.contains(prob.w))
        throw CatError("lift problem side is not an equivalence: " + c.mor_id(prob.w));
    if (!p.fib().contains(prob.p))
        throw CatError("lift problem side is not a fibration: " + c.mor_id(prob.p));

    LiftSolution sol;
    std::optional<HomotopyWitness> first;
    for (int l : sorted_morphs(c)) {
        if (c.dom(l) != c.cod(prob.w) || c.cod(l) != c.dom(prob.p)) continue;
        if (c.compose(prob.p, l) != prob.sigma) continue;
        auto h = homotopic(p, c.compose(l, prob.w), prob.f, prob.p);
        if (!h) continue;
        if (!first) first = *h;
        sol.candidates.push_back(l);
    }
    if (sol.candidates.empty())
        throw CatError("no lift found for " + c.mor_id(prob.f) + " against " +
                       c.mor_id(prob.w));
    // Thm: any two fillers agree up to fibrewise homotopy; a violation means
    // the ambient structure was not a path category.
    for (size_t i = 0; i < sol.candidates.size(); ++i)
        for (size_t j = i + 1; j < sol.candidates.size(); ++j)
            if (!homotopic(p, sol.candidates[i], sol.candidates[j], prob.p))
                throw CatError("lifts not unique up to fibrewise homotopy: " +
                               c.mor_id(sol.candidates[i]) + " vs " +
                               c.mor_id(sol.candidates[j]));
    sol.l = sol.candidates.front();
    sol.upper = *first;
    return sol;
}

TransportWitness transport(const PathCat& p, int fibration,
                           const PathObjectWitness& PG) {
    const FiniteCategory& c = p.cat();
    if (!p.fib().contains(fibration))
        throw CatError("transport needs a fibration: " + c.mor_id(fibration));
    int A = c.dom(fibration);
    int G = c.cod(fibration);
    if (!valid_path_object(c, p.fib(), p.eq, unique_to_terminal(c, G), PG))
        throw CatError("given path object for " + c.obj_id(G) + " is invalid");
    auto W = pullback(c, fibration, PG.s);
    if (!W)
        throw CatError("mapping path space pullback missing for " + c.mor_id(fibration));
    int wp = need(c, *W, c.id_of(A), c.compose(PG.r, fibration), "mapping path space unit");
    int pp = c.compose(PG.t, W->proj_right);
    LiftSolution sol = lift(p, {wp, c.id_of(A), fibration, pp});
    return {fibration, PG, *W, sol.l, sol.upper};
}

PathObjectWitness synthesize_path_fibration(const PathCat& p, int fibration,
                                            const PathObjectWitness& PA,
                                            const PathObjectWitness& PAB) {
    const FiniteCategory& c = p.cat();
    if (!p.fib().contains(fibration))
        throw CatError("synthesis needs a fibration: " + c.mor_id(fibration));
    int B = c.dom(fibration);
    int A = c.cod(fibration);
    int tB = unique_to_terminal(c, B);
    int tA = unique_to_terminal(c, A);
    if (!valid_path_object(c, p.fib(), p.eq, tA, PA))
        throw CatError("given path object for " + c.obj_id(A) + " is invalid");
    if (!valid_path_object(c, p.fib(), p.eq, fibration, PAB))
        throw CatError("given fibrewise path object for " + c.mor_id(fibration) +
                       " is invalid");
    // Base of the tower: over the terminal the fibre product is the product,
    // so the fibrewise witness already is a path object for B.
    if (terminal_object(c) == std::optional<int>(A)) return PAB;

    // The chosen witnesses must be the ones every lookup below resolves to.
    PathCat q = p;
    q.path_table[{true, A}] = PA;
    q.path_table[{false, fibration}] = PAB;

    TransportWitness tw = transport(q, fibration, PA);

    auto BB = pullback(c, tB, tB);
    if (!BB) throw CatError("product pullback missing for " + c.obj_id(B));
    auto AA = pullback(c, tA, tA);
    if (!AA) throw CatError("product pullback missing for " + c.obj_id(A));
    int pxp = need(c, *AA, c.compose(fibration, BB->proj_left),
                   c.compose(fibration, BB->proj_right), "squared fibration");
    int pairA = need(c, *AA, PA.s, PA.t, "endpoint pairing of the base path object");
    auto Q1 = pullback(c, pxp, pairA);
    if (!Q1)
        throw CatError("pullback of the base path object against the squared "
                       "fibration missing");
    auto BAB = pullback(c, fibration, fibration);
    if (!BAB) throw CatError("fibre product pullback missing for " + c.mor_id(fibration));
    int pairAB = need(c, *BAB, PAB.s, PAB.t, "endpoint pairing of the fibrewise path object");

    // A point of Q1 is (b, b', alpha); transport b along alpha and pair with b'.
    int intoLp = need(c, tw.Lp, c.compose(BB->proj_left, Q1->proj_left),
                      Q1->proj_right, "leg into the mapping path space");
    int intoBAB = need(c, *BAB, c.compose(tw.tau, intoLp),
                       c.compose(BB->proj_right, Q1->proj_left), "transported endpoints");
    auto PB = pullback(c, intoBAB, pairAB);
    if (!PB) throw CatError("total path object pullback missing");

    // Reflexivity pairs the trivial path below with the transport unit above.
    int diag = need(c, *BB, c.id_of(B), c.id_of(B), "diagonal");
    int intoQ1 = need(c, *Q1, diag, c.compose(PA.r, fibration),
                      "reflexivity into the endpoint square");
    int rB = need(c, *PB, intoQ1, tw.unit.h, "synthesized reflexivity");
    int pp0 = c.compose(Q1->proj_left, PB->proj_left);
    PathObjectWitness out{PB->apex, rB, c.compose(BB->proj_left, pp0),
                          c.compose(BB->proj_right, pp0)};

    // The synthesized object is the mapping path space of tau in disguise;
    // the comparison square is what makes rB an equivalence.
    auto LAt = pullback(c, tw.tau, PAB.s);
    if (!LAt) throw CatError("mapping path space of the transport missing");
    int phi = need(c, *LAt, c.compose(intoLp, PB->proj_left), PB->proj_right,
                   "comparison to the mapping path space");
    if (!is_isomorphism(c, phi))
        throw CatError("comparison to the mapping path space is not an isomorphism");
    int wp = need(c, tw.Lp, c.id_of(B), c.compose(PA.r, fibration),
                  "mapping path space unit");
    if (c.compose(LAt->proj_left, c.compose(phi, rB)) != wp)
        throw CatError("comparison square does not commute");
    if (!p.eq.contains(rB))
        throw CatError("synthesized reflexivity map is not an equivalence: " +
                       c.mor_id(rB));
    if (!valid_path_object(c, p.fib(), p.eq, tB, out))
        throw CatError("synthesized path object fails its invariants");
    return out;
}

PathCat slice_fib(const PathCat& p, int obj) {
    const FiniteCategory& c = p.cat();
    std::vector<int> fibs;
    for (int m : sorted_morphs(c))
        if (p.fib().contains(m) && c.cod(m) == obj) fibs.push_back(m);
    auto oid = [&](int q) { return c.mor_id(q); };
    auto mid = [&](int m, int q1, int q2) {
        return c.mor_id(m) + "[" + c.mor_id(q1) + ">" + c.mor_id(q2) + "]";
    };
    CategoryBuilder b;
    for (int q : fibs) b.add_object(oid(q), mid(c.id_of(c.dom(q)), q, q));
    struct Tri {
        int m, q1, q2;
    };
    std::vector<Tri> tris;
    for (int q1 : fibs)
        for (int q2 : fibs)
            for (int m : sorted_morphs(c)) {
                if (c.dom(m) != c.dom(q1) || c.cod(m) != c.dom(q2)) continue;
                if (c.compose(q2, m) != q1) continue;
                b.add_morph(mid(m, q1, q2), oid(q1), oid(q2));
                tris.push_back({m, q1, q2});
            }
    for (const auto& x : tris)
        for (const auto& y : tris) {
            if (x.q2 != y.q1) continue;
            b.set_comp(mid(y.m, y.q1, y.q2), mid(x.m, x.q1, x.q2),
                       mid(c.compose(y.m, x.m), x.q1, y.q2));
        }
    PathCat out;
    out.clan.cat = b.build();
    for (const auto& x : tris) {
        int sm = out.clan.cat.morph_index(mid(x.m, x.q1, x.q2));
        if (p.fib().contains(x.m)) out.clan.display.members.insert(sm);
        if (p.eq.contains(x.m)) out.eq.members.insert(sm);
    }
    return out;
}

Report check_equivalent_axioms(const DispCat& d, const MapClass& eq) {
    const FiniteCategory& c = d.cat;
    Report root("equivalent-axioms");
    Report pre("preconditions");
    pre.child(check_dmpc_core(d, eq));
    pre.child(check_root(d));
    bool ok = pre.pass;
    root.child(std::move(pre));
    if (!ok) {
        root.fail("preconditions not met; matrix not computed");
        return root;
    }

    MapClass fib = fibration_closure(c, d.display);
    PathCat tp;  // shares the homotopy machinery across the five decisions
    tp.clan.cat = c;
    tp.clan.display = fib;
    tp.eq = eq;

    auto fibrewise = [&](int f, int g, int proj) {
        try {
            return homotopic(tp, f, g, proj).has_value();
        } catch (const CatError&) {
            return false;
        }
    };

    Report po("PO: path objects");
    for (int G : sorted_objects(c)) {
        if (auto w = find_path_object(c, fib, eq, unique_to_terminal(c, G)))
            po.witness("path object", {c.obj_id(G), c.obj_id(w->P)});
        else
            po.fail("object has no path object", {c.obj_id(G)});
    }

    Report pf("PF: path fibrations");
    for (int q : sorted_morphs(c)) {
        if (!fib.contains(q)) continue;
        if (auto w = find_path_object(c, fib, eq, q))
            pf.witness("path fibration", {c.mor_id(q), c.obj_id(w->P)});
        else
            pf.fail("fibration has no path fibration", {c.mor_id(q)});
    }

    Report fa("F: factorizations");
    for (int f : sorted_morphs(c)) {
        int fw = -1, fq = -1;
        for (int w : sorted_morphs(c)) {
            if (!eq.contains(w) || c.dom(w) != c.dom(f)) continue;
            for (int qm : sorted_morphs(c)) {
                if (!fib.contains(qm) || c.dom(qm) != c.cod(w) ||
                    c.cod(qm) != c.cod(f))
                    continue;
                if (c.compose(qm, w) == f) {
                    fw = w;
                    fq = qm;
                    break;
                }
            }
            if (fw >= 0) break;
        }
        if (fw >= 0)
            fa.witness("factorization", {c.mor_id(f), c.mor_id(fw), c.mor_id(fq)});
        else
            fa.fail("map admits no factorization", {c.mor_id(f)});
    }

    Report tr("T: transport");
    for (int pm : sorted_morphs(c)) {
        if (!d.display.contains(pm)) continue;
        int A = c.dom(pm);
        int G = c.cod(pm);
        for (const auto& PG : all_path_objects(c, fib, eq, unique_to_terminal(c, G))) {
            auto W = pullback(c, pm, PG.s);
            if (!W) {
                tr.fail("no transport: mapping path space pullback missing",
                        {c.mor_id(pm), c.obj_id(PG.P)});
                continue;
            }
            auto wp = mediate(c, *W, c.id_of(A), c.compose(PG.r, pm));
            if (!wp) {
                tr.fail("no transport: mapping path space unit missing",
                        {c.mor_id(pm), c.obj_id(PG.P)});
                continue;
            }
            int ppm = c.compose(PG.t, W->proj_right);
            int wit = -1;
            for (int tau : sorted_morphs(c)) {
                if (c.dom(tau) != W->apex || c.cod(tau) != A) continue;
                if (c.compose(pm, tau) != ppm) continue;
                if (fibrewise(c.compose(tau, *wp), c.id_of(A), pm)) {
                    wit = tau;
                    break;
                }
            }
            if (wit >= 0)
                tr.witness("transport", {c.mor_id(pm), c.obj_id(PG.P), c.mor_id(wit)});
            else
                tr.fail("no transport map", {c.mor_id(pm), c.obj_id(PG.P)});
        }
    }

    Report li("L: lifting");
    for (int w : sorted_morphs(c)) {
        if (!eq.contains(w)) continue;
        for (int pm : sorted_morphs(c)) {
            if (!fib.contains(pm)) continue;
            for (int f : sorted_morphs(c)) {
                if (c.dom(f) != c.dom(w) || c.cod(f) != c.dom(pm)) continue;
                for (int sg : sorted_morphs(c)) {
                    if (c.dom(sg) != c.cod(w) || c.cod(sg) != c.cod(pm)) continue;
                    if (c.compose(pm, f) != c.compose(sg, w)) continue;
                    std::vector<int> ls;
                    for (int l : sorted_morphs(c)) {
                        if (c.dom(l) != c.cod(w) || c.cod(l) != c.dom(pm)) continue;
                        if (c.compose(pm, l) != sg) continue;
                        if (fibrewise(c.compose(l, w), f, pm)) ls.push_back(l);
                    }
                    if (ls.empty()) {
                        li.fail("lift problem has no solution",
                                {c.mor_id(w), c.mor_id(f), c.mor_id(pm), c.mor_id(sg)});
                        continue;
                    }
                    li.witness("lift", {c.mor_id(w), c.mor_id(f), c.mor_id(pm),
                                        c.mor_id(sg), c.mor_id(ls.front())});
                    for (size_t i = 0; i < ls.size(); ++i)
                        for (size_t j = i + 1; j < ls.size(); ++j)
                            if (!fibrewise(ls[i], ls[j], pm))
                                li.fail("lifts not unique up to fibrewise homotopy",
                                        {c.mor_id(w), c.mor_id(f), c.mor_id(pm),
                                         c.mor_id(sg), c.mor_id(ls[i]), c.mor_id(ls[j])});
                }
            }
        }
    }

    // The matrix children keep their own verdicts; only disagreement between
    // the five decisions fails the parent.
    std::vector<std::string> vec;
    bool vals[5] = {po.pass, pf.pass, fa.pass, tr.pass, li.pass};
    const char* names[5] = {"PO", "PF", "F", "T", "L"};
    bool constant = true;
    for (int i = 0; i < 5; ++i) {
        vec.push_back(std::string(names[i]) + "=" + (vals[i] ? "yes" : "no"));
        if (vals[i] != vals[0]) constant = false;
    }
    root.children.push_back(std::move(po));
    root.children.push_back(std::move(pf));
    root.children.push_back(std::move(fa));
    root.children.push_back(std::move(tr));
    root.children.push_back(std::move(li));
    if (constant)
        root.witness("axiom vector constant", vec);
    else
        root.fail("axiom vector is not constant", vec);
    return root;
}

}  // namespace catbench
