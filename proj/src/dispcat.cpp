#include "catbench/dispcat.hpp"

#include <algorithm>

namespace catbench {

MapClass repletion(const FiniteCategory& c, const MapClass& cls) {
    std::vector<int> isos;
    for (int m = 0; m < c.n_mor(); ++m)
        if (is_isomorphism(c, m)) isos.push_back(m);
    MapClass out = cls;
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<int> current(out.members.begin(), out.members.end());
        for (int f : current) {
            for (int i : isos) {
                if (c.dom(i) != c.dom(f)) continue;
                for (int j : isos) {
                    if (c.dom(j) != c.cod(f)) continue;
                    int jf = c.compose(j, f);
                    for (int fp : c.hom(c.cod(i), c.cod(j))) {
                        if (c.compose(fp, i) == jf && !out.contains(fp)) {
                            out.members.insert(fp);
                            grew = true;
                        }
                    }
                }
            }
        }
    }
    return out;
}

MapClass fibration_closure(const FiniteCategory& c, const MapClass& display) {
    MapClass out = display;
    for (int o = 0; o < c.n_obj(); ++o) out.members.insert(c.id_of(o));
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<int> cur(out.members.begin(), out.members.end());
        for (int g : cur)
            for (int f : cur) {
                if (!c.composable(g, f)) continue;
                int h = c.compose(g, f);
                if (!out.contains(h)) {
                    out.members.insert(h);
                    grew = true;
                }
            }
    }
    return out;
}

Report check_display_axioms(const DispCat& d) {
    const FiniteCategory& c = d.cat;
    Report r("display-axioms");

    Report rep("repletion");
    MapClass closed = repletion(c, d.display);
    for (int m : closed.members)
        if (!d.display.contains(m))
            rep.fail("map isomorphic to a display map but not display", {c.mor_id(m)});
    r.child(std::move(rep));

    Report pb("pullback-closure");
    for (int p : d.display.members) {
        for (int sigma = 0; sigma < c.n_mor(); ++sigma) {
            if (c.cod(sigma) != c.cod(p)) continue;
            auto w = pullback(c, sigma, p);
            if (!w) {
                pb.fail("no pullback of display map along", {c.mor_id(p), c.mor_id(sigma)});
                continue;
            }
            if (!d.display.contains(w->proj_left))
                pb.fail("pullback projection not display",
                        {c.mor_id(p), c.mor_id(sigma), c.mor_id(w->proj_left)});
        }
    }
    r.child(std::move(pb));

    if (d.strict_display || d.reindex_table) {
        Report st("structured");
        if (!d.structured()) {
            st.fail("strict types and reindex table must come together", {});
            r.child(std::move(st));
            return r;
        }
        for (int m : d.strict_display->members)
            if (!d.display.contains(m))
                st.fail("strict type not display", {c.mor_id(m)});
        MapClass strict_closure = repletion(c, *d.strict_display);
        for (int m : d.display.members)
            if (!strict_closure.contains(m))
                st.fail("display map not isomorphic to any strict type", {c.mor_id(m)});
        for (int p : d.strict_display->members) {
            for (int sigma = 0; sigma < c.n_mor(); ++sigma) {
                if (c.cod(sigma) != c.cod(p)) continue;
                auto it = d.reindex_table->find({p, sigma});
                if (it == d.reindex_table->end()) {
                    st.fail("reindex table missing entry", {c.mor_id(p), c.mor_id(sigma)});
                    continue;
                }
                PullbackWitness w = it->second;
                if (w.f != sigma || w.g != p || !is_pullback(c, w)) {
                    st.fail("reindex table entry is not a pullback",
                            {c.mor_id(p), c.mor_id(sigma)});
                    continue;
                }
                if (!d.strict_display->contains(w.proj_left))
                    st.fail("chosen reindex projection not strict",
                            {c.mor_id(p), c.mor_id(sigma), c.mor_id(w.proj_left)});
            }
        }
        r.child(std::move(st));
    }
    return r;
}

std::optional<Reindexed> try_reindex(const DispCat& d, TypeOver a, int sigma) {
    const FiniteCategory& c = d.cat;
    if (c.cod(sigma) != ctx_of(c, a))
        throw CatError("reindex: sigma does not land in the type's context");
    if (d.structured() && d.strict_display->contains(a.proj)) {
        auto it = d.reindex_table->find({a.proj, sigma});
        if (it != d.reindex_table->end())
            return Reindexed{TypeOver{it->second.proj_left}, it->second};
    }
    auto w = pullback(c, sigma, a.proj);
    if (!w) return std::nullopt;
    return Reindexed{TypeOver{w->proj_left}, *w};
}

Reindexed reindex(const DispCat& d, TypeOver a, int sigma) {
    auto rx = try_reindex(d, a, sigma);
    if (!rx)
        throw CatError("reindex: no pullback of " + d.cat.mor_id(a.proj) + " along " +
                       d.cat.mor_id(sigma));
    return *rx;
}

TermOf subst_term(const DispCat& d, const Reindexed& rx, const TermOf& a, int sigma) {
    const FiniteCategory& c = d.cat;
    if (a.base != c.id_of(ctx_of(c, a.type)))
        throw CatError("subst_term: only ordinary terms can be transported");
    int delta = c.dom(sigma);
    auto u = mediate(c, rx.square, c.id_of(delta), c.compose(a.sec, sigma));
    if (!u) throw CatError("subst_term: no mediating section");
    return TermOf{rx.type, *u, c.id_of(delta)};
}

Report check_root(const DispCat& d) {
    const FiniteCategory& c = d.cat;
    Report r("root");
    auto t = terminal_object(c);
    if (!t) {
        r.fail("no terminal object", {});
        return r;
    }
    r.witness("terminal", {c.obj_id(*t)});
    MapClass fib = fibration_closure(c, d.display);
    for (int x = 0; x < c.n_obj(); ++x)
        for (int m : c.hom(x, *t))
            if (!fib.contains(m))
                r.fail("map into terminal is not a fibration", {c.mor_id(m)});
    return r;
}

Report check_split(const DispCat& d) {
    if (!d.structured()) throw CatError("check_split: category is not structured");
    const FiniteCategory& c = d.cat;
    const ReindexTable& tbl = *d.reindex_table;
    Report r("split");
    for (int p : d.strict_display->members) {
        int gamma = c.cod(p);
        auto idrow = tbl.find({p, c.id_of(gamma)});
        if (idrow == tbl.end()) {
            r.fail("missing identity reindex entry", {c.mor_id(p)});
        } else {
            const PullbackWitness& w = idrow->second;
            if (w.apex != c.dom(p) || w.proj_left != p ||
                w.proj_right != c.id_of(c.dom(p)))
                r.fail("identity law broken: A[1] differs from A", {c.mor_id(p)});
        }
        for (int sigma = 0; sigma < c.n_mor(); ++sigma) {
            if (c.cod(sigma) != gamma) continue;
            auto e_sigma = tbl.find({p, sigma});
            if (e_sigma == tbl.end()) {
                r.fail("missing reindex entry", {c.mor_id(p), c.mor_id(sigma)});
                continue;
            }
            int q = e_sigma->second.proj_left;
            if (!d.strict_display->contains(q)) {
                r.fail("reindexed type not strict", {c.mor_id(p), c.mor_id(sigma)});
                continue;
            }
            for (int tau = 0; tau < c.n_mor(); ++tau) {
                if (c.cod(tau) != c.dom(sigma)) continue;
                int st = c.compose(sigma, tau);
                auto e_comp = tbl.find({p, st});
                auto e_tau = tbl.find({q, tau});
                if (e_comp == tbl.end() || e_tau == tbl.end()) {
                    r.fail("missing reindex entry for composite",
                           {c.mor_id(p), c.mor_id(sigma), c.mor_id(tau)});
                    continue;
                }
                bool ok = e_comp->second.apex == e_tau->second.apex &&
                          e_comp->second.proj_left == e_tau->second.proj_left &&
                          e_comp->second.proj_right ==
                              c.compose(e_sigma->second.proj_right,
                                        e_tau->second.proj_right);
                if (!ok)
                    r.fail("composition law broken: A[sigma.tau] differs from A[sigma][tau]",
                           {c.mor_id(p), c.mor_id(sigma), c.mor_id(tau)});
            }
        }
    }
    return r;
}

std::vector<TypeOver> types_over(const DispCat& d, int ctx) {
    std::vector<TypeOver> out;
    for (int m : d.display.members)
        if (d.cat.cod(m) == ctx) out.push_back(TypeOver{m});
    std::sort(out.begin(), out.end(), [&](TypeOver a, TypeOver b) {
        return d.cat.mor_less(a.proj, b.proj);
    });
    return out;
}

std::vector<TermOf> terms_of(const FiniteCategory& c, TypeOver a) {
    std::vector<TermOf> out;
    int gamma = ctx_of(c, a);
    for (int s : c.hom(gamma, total_of(c, a)))
        if (c.compose(a.proj, s) == c.id_of(gamma))
            out.push_back(TermOf{a, s, c.id_of(gamma)});
    std::sort(out.begin(), out.end(),
              [&](const TermOf& x, const TermOf& y) { return c.mor_less(x.sec, y.sec); });
    return out;
}

ReindexTable canonical_reindex_table(const FiniteCategory& c, const MapClass& strict) {
    ReindexTable tbl;
    for (int p : strict.members)
        for (int sigma = 0; sigma < c.n_mor(); ++sigma) {
            if (c.cod(sigma) != c.cod(p)) continue;
            auto w = pullback(c, sigma, p);
            if (w) tbl[{p, sigma}] = *w;
        }
    return tbl;
}

}  // namespace catbench
