#include "catbench/pathcat.hpp"

namespace catbench {

MapClass iso_class(const FiniteCategory& c) {
    MapClass out;
    for (int m = 0; m < c.n_mor(); ++m)
        if (is_isomorphism(c, m)) out.members.insert(m);
    return out;
}

MapClass intersect_classes(const MapClass& a, const MapClass& b) {
    MapClass out;
    for (int m : a.members)
        if (b.contains(m)) out.members.insert(m);
    return out;
}

int unique_to_terminal(const FiniteCategory& c, int obj) {
    auto term = terminal_object(c);
    if (!term) throw CatError("no terminal object");
    return c.hom(obj, *term).at(0);
}

Report check_two_out_of_six(const FiniteCategory& c, const MapClass& eq) {
    Report r("two-out-of-six");
    for (int f = 0; f < c.n_mor(); ++f)
        for (int g = 0; g < c.n_mor(); ++g) {
            if (!c.composable(g, f)) continue;
            int gf = c.compose(g, f);
            if (!eq.contains(gf)) continue;
            for (int h = 0; h < c.n_mor(); ++h) {
                if (!c.composable(h, g)) continue;
                if (!eq.contains(c.compose(h, g))) continue;
                for (int forced : {f, g, h, c.compose(h, gf)})
                    if (!eq.contains(forced))
                        r.fail("2-out-of-6 broken", {c.mor_id(f), c.mor_id(g),
                                                     c.mor_id(h), c.mor_id(forced)});
            }
        }
    return r;
}

Report check_clan(const DispCat& clan) {
    Report r("clan");
    r.child(check_display_axioms(clan));
    r.child(check_root(clan));
    Report comp("closed under composition");
    for (int m : fibration_closure(clan.cat, clan.display).members)
        if (!clan.display.contains(m))
            comp.fail("fibration class misses a composite or identity",
                      {clan.cat.mor_id(m)});
    r.child(std::move(comp));
    return r;
}

bool valid_path_object(const FiniteCategory& c, const MapClass& pairing_class,
                       const MapClass& eq, int proj, const PathObjectWitness& w) {
    if (w.P < 0 || w.r < 0 || w.s < 0 || w.t < 0) return false;
    int A = c.dom(proj);
    if (c.dom(w.r) != A || c.cod(w.r) != w.P) return false;
    if (c.dom(w.s) != w.P || c.cod(w.s) != A) return false;
    if (c.dom(w.t) != w.P || c.cod(w.t) != A) return false;
    if (!eq.contains(w.r)) return false;
    int idA = c.id_of(A);
    if (c.compose(w.s, w.r) != idA || c.compose(w.t, w.r) != idA) return false;
    auto sq = pullback(c, proj, proj);
    if (!sq) return false;
    auto pairing = mediate(c, *sq, w.s, w.t);
    return pairing && pairing_class.contains(*pairing);
}

std::vector<PathObjectWitness> all_path_objects(const FiniteCategory& c,
                                                const MapClass& pairing_class,
                                                const MapClass& eq, int proj) {
    std::vector<PathObjectWitness> out;
    auto sq = pullback(c, proj, proj);
    if (!sq) return out;
    int A = c.dom(proj);
    int idA = c.id_of(A);
    auto morphs = sorted_morphs(c);
    for (int P : sorted_objects(c))
        for (int r : morphs) {
            if (c.dom(r) != A || c.cod(r) != P || !eq.contains(r)) continue;
            for (int s : morphs) {
                if (c.dom(s) != P || c.cod(s) != A || c.compose(s, r) != idA) continue;
                for (int t : morphs) {
                    if (c.dom(t) != P || c.cod(t) != A || c.compose(t, r) != idA)
                        continue;
                    auto pairing = mediate(c, *sq, s, t);
                    if (pairing && pairing_class.contains(*pairing))
                        out.push_back({P, r, s, t});
                }
            }
        }
    return out;
}

std::optional<PathObjectWitness> find_path_object(const FiniteCategory& c,
                                                  const MapClass& pairing_class,
                                                  const MapClass& eq, int proj) {
    auto v = all_path_objects(c, pairing_class, eq, proj);
    if (v.empty()) return std::nullopt;
    return v.front();
}

MapClass bootstrap_equivalences(const FiniteCategory& c, const MapClass& fib) {
    MapClass eq = iso_class(c);
    for (int round = 0; round < c.n_mor() + 2; ++round) {
        PathCat p;
        p.clan.cat = c;
        p.clan.display = fib;
        p.eq = eq;
        MapClass next = homotopy_equivalences(p);
        if (next.members == eq.members) return eq;
        eq = std::move(next);
    }
    throw CatError("equivalence bootstrap did not stabilize");
}

namespace {

// Axioms shared between path categories and display map path categories:
// isos in eq, 2-out-of-6, trivial fibrations pullback-stable and sectioned.
void append_shared_axioms(Report& root, const FiniteCategory& c,
                          const MapClass& fib, const MapClass& eq) {
    Report a1("isomorphisms are equivalences");
    for (int m = 0; m < c.n_mor(); ++m)
        if (is_isomorphism(c, m) && !eq.contains(m))
            a1.fail("isomorphism not an equivalence", {c.mor_id(m)});
    root.child(std::move(a1));

    root.child(check_two_out_of_six(c, eq));

    MapClass tfib = intersect_classes(fib, eq);

    Report a3("trivial fibrations stable under pullback");
    for (int tf : tfib.members)
        for (int sig = 0; sig < c.n_mor(); ++sig) {
            if (c.cod(sig) != c.cod(tf)) continue;
            auto w = pullback(c, sig, tf);
            if (!w) {
                a3.fail("no pullback of trivial fibration along",
                        {c.mor_id(tf), c.mor_id(sig)});
                continue;
            }
            if (!fib.contains(w->proj_left) || !eq.contains(w->proj_left))
                a3.fail("pullback of trivial fibration not a trivial fibration",
                        {c.mor_id(tf), c.mor_id(sig), c.mor_id(w->proj_left)});
        }
    root.child(std::move(a3));

    Report a4("trivial fibrations have sections");
    for (int tf : tfib.members) {
        int found = -1;
        for (int sec : c.hom(c.cod(tf), c.dom(tf)))
            if (c.compose(tf, sec) == c.id_of(c.cod(tf))) {
                found = sec;
                break;
            }
        if (found >= 0)
            a4.witness("section", {c.mor_id(tf), c.mor_id(found)});
        else
            a4.fail("trivial fibration has no section", {c.mor_id(tf)});
    }
    root.child(std::move(a4));
}

std::vector<std::string> witness_ids(const FiniteCategory& c, const std::string& base,
                                     const PathObjectWitness& w) {
    return {base, c.obj_id(w.P), c.mor_id(w.r), c.mor_id(w.s), c.mor_id(w.t)};
}

}  // namespace

Report check_path_axioms(const PathCat& p) {
    const FiniteCategory& c = p.cat();
    Report root("path-axioms");
    root.child(check_clan(p.clan));
    append_shared_axioms(root, c, p.fib(), p.eq);

    Report a5("path objects");
    auto term = terminal_object(c);
    if (!term) {
        a5.fail("no terminal object to form diagonals over");
        root.child(std::move(a5));
        return root;
    }
    for (int A = 0; A < c.n_obj(); ++A) {
        int proj = c.hom(A, *term).at(0);
        const PathObjectWitness* chosen = nullptr;
        if (auto it = p.path_table.find({false, proj}); it != p.path_table.end())
            chosen = &it->second;
        else if (auto it2 = p.path_table.find({true, A}); it2 != p.path_table.end())
            chosen = &it2->second;
        if (chosen) {
            if (valid_path_object(c, p.fib(), p.eq, proj, *chosen))
                a5.witness("chosen path object", witness_ids(c, c.obj_id(A), *chosen));
            else
                a5.fail("chosen path object invalid", witness_ids(c, c.obj_id(A), *chosen));
        } else if (auto w = find_path_object(c, p.fib(), p.eq, proj)) {
            a5.witness("path object", witness_ids(c, c.obj_id(A), *w));
        } else {
            a5.fail("object has no path object", {c.obj_id(A)});
        }
    }
    // Fibrewise table entries are validated as well.
    for (const auto& [key, w] : p.path_table) {
        if (key.first || c.cod(key.second) == *term) continue;
        if (valid_path_object(c, p.fib(), p.eq, key.second, w))
            a5.witness("chosen fibrewise path object",
                       witness_ids(c, c.mor_id(key.second), w));
        else
            a5.fail("chosen path object invalid", witness_ids(c, c.mor_id(key.second), w));
    }
    root.child(std::move(a5));
    return root;
}

std::optional<PathObjectWitness> path_object_for(const PathCat& p, int proj) {
    const FiniteCategory& c = p.cat();
    auto use = [&](const PathObjectWitness& w) -> PathObjectWitness {
        if (!valid_path_object(c, p.fib(), p.eq, proj, w))
            throw CatError("chosen path object for " + c.mor_id(proj) + " is invalid");
        return w;
    };
    if (auto it = p.path_table.find({false, proj}); it != p.path_table.end())
        return use(it->second);
    auto term = terminal_object(c);
    if (term && c.cod(proj) == *term) {
        if (auto it = p.path_table.find({true, c.dom(proj)}); it != p.path_table.end())
            return use(it->second);
    }
    return find_path_object(c, p.fib(), p.eq, proj);
}

std::optional<HomotopyWitness> homotopic(const PathCat& p, int f, int g, int proj) {
    const FiniteCategory& c = p.cat();
    if (c.dom(f) != c.dom(g) || c.cod(f) != c.cod(g))
        throw CatError("homotopy needs parallel maps: " + c.mor_id(f) + ", " + c.mor_id(g));
    if (c.cod(f) != c.dom(proj))
        throw CatError("maps do not land in the fibration " + c.mor_id(proj));
    auto po = path_object_for(p, proj);
    if (!po)
        throw CatError("no path object for " + c.obj_id(c.dom(proj)) + " over " +
                       c.obj_id(c.cod(proj)));
    for (int h : sorted_morphs(c)) {
        if (c.dom(h) != c.dom(f) || c.cod(h) != po->P) continue;
        if (c.compose(po->s, h) == f && c.compose(po->t, h) == g)
            return HomotopyWitness{f, g, h, *po};
    }
    return std::nullopt;
}

std::optional<HomotopyWitness> homotopic(const PathCat& p, int f, int g) {
    return homotopic(p, f, g, unique_to_terminal(p.cat(), p.cat().cod(f)));
}

MapClass homotopy_equivalences(const PathCat& p) {
    const FiniteCategory& c = p.cat();
    MapClass out;
    for (int f = 0; f < c.n_mor(); ++f) {
        int A = c.dom(f);
        int B = c.cod(f);
        for (int g : c.hom(B, A)) {
            if (homotopic(p, c.compose(g, f), c.id_of(A)) &&
                homotopic(p, c.compose(f, g), c.id_of(B))) {
                out.members.insert(f);
                break;
            }
        }
    }
    return out;
}

Report check_saturation(const PathCat& p) {
    Report r("saturation");
    if (!check_root(p.clan).pass) {
        r.witness("no root: equivalence class unconstrained");
        return r;
    }
    const FiniteCategory& c = p.cat();
    MapClass heq;
    try {
        heq = homotopy_equivalences(p);
    } catch (const CatError& e) {
        r.fail("cannot compute homotopy equivalences", {e.what()});
        return r;
    }
    for (int m : p.eq.members)
        if (!heq.contains(m))
            r.fail("equivalence is not a homotopy equivalence", {c.mor_id(m)});
    for (int m : heq.members)
        if (!p.eq.contains(m))
            r.fail("homotopy equivalence missing from the equivalence class",
                   {c.mor_id(m)});
    if (r.pass) r.witness("classes coincide");
    return r;
}

Report check_dmpc_core(const DispCat& d, const MapClass& eq) {
    const FiniteCategory& c = d.cat;
    Report root("dmpc-core");
    root.child(check_display_axioms(d));
    append_shared_axioms(root, c, fibration_closure(c, d.display), eq);

    Report a5("path display maps");
    for (int p : d.display.members) {
        if (auto w = find_path_object(c, d.display, eq, p))
            a5.witness("path display map", witness_ids(c, c.mor_id(p), *w));
        else
            a5.fail("display map has no path display map", {c.mor_id(p)});
    }
    root.child(std::move(a5));
    return root;
}

Report check_dmpc_axioms(const DispCat& d, const MapClass& eq) {
    const FiniteCategory& c = d.cat;
    Report root("dmpc-axioms");
    root.child(check_dmpc_core(d, eq));
    MapClass fib = fibration_closure(c, d.display);

    Report pf("path fibrations");
    for (int q : fib.members) {
        if (auto w = find_path_object(c, fib, eq, q))
            pf.witness("path fibration", witness_ids(c, c.mor_id(q), *w));
        else
            pf.fail("fibration has no path fibration", {c.mor_id(q)});
    }
    root.child(std::move(pf));
    return root;
}

}  // namespace catbench
