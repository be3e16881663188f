#include "catbench/fincat.hpp"

#include <algorithm>
#include <array>

namespace catbench {

// ===== BUILDER =====

int CategoryBuilder::add_object(const std::string& id, const std::string& id_morph_id) {
    for (const auto& o : c_.objects)
        if (o == id) throw CatError("duplicate object id: " + id);
    c_.objects.push_back(id);
    pending_obj_.emplace_back(id, id_morph_id);
    return static_cast<int>(c_.objects.size()) - 1;
}

void CategoryBuilder::add_morph(const std::string& id, const std::string& dom,
                                const std::string& cod) {
    if (c_.morph_index(id) >= 0) throw CatError("duplicate morphism id: " + id);
    int d = c_.object_index(dom);
    int cd = c_.object_index(cod);
    if (d < 0) throw CatError("unknown object: " + dom);
    if (cd < 0) throw CatError("unknown object: " + cod);
    c_.morphs.push_back({id, d, cd});
}

void CategoryBuilder::set_comp(const std::string& g, const std::string& f,
                               const std::string& h) {
    pending_comp_.push_back({g, f, h});
}

FiniteCategory CategoryBuilder::build() {
    size_t n = c_.morphs.size();
    c_.comp.assign(n * n, -1);
    c_.identity.assign(c_.objects.size(), -1);
    for (const auto& [obj, idm] : pending_obj_) {
        int o = c_.object_index(obj);
        int m = c_.morph_index(idm);
        if (m < 0) throw CatError("identity morphism not declared: " + idm);
        if (c_.dom(m) != o || c_.cod(m) != o)
            throw CatError("identity morphism has wrong endpoints: " + idm);
        c_.identity[static_cast<size_t>(o)] = m;
    }
    for (const auto& [g, f, h] : pending_comp_) {
        int gi = c_.morph_index(g), fi = c_.morph_index(f), hi = c_.morph_index(h);
        if (gi < 0) throw CatError("unknown morphism: " + g);
        if (fi < 0) throw CatError("unknown morphism: " + f);
        if (hi < 0) throw CatError("unknown morphism: " + h);
        c_.comp[static_cast<size_t>(gi) * n + static_cast<size_t>(fi)] = hi;
    }
    // Identity compositions are implied unless a file overrides them; the
    // validator still scans them, so a deliberate corruption survives.
    for (int m = 0; m < c_.n_mor(); ++m) {
        int l = c_.id_of(c_.cod(m)), r = c_.id_of(c_.dom(m));
        if (l >= 0 && c_.comp[static_cast<size_t>(l) * n + static_cast<size_t>(m)] < 0)
            c_.comp[static_cast<size_t>(l) * n + static_cast<size_t>(m)] = m;
        if (r >= 0 && c_.comp[static_cast<size_t>(m) * n + static_cast<size_t>(r)] < 0)
            c_.comp[static_cast<size_t>(m) * n + static_cast<size_t>(r)] = m;
    }
    return std::move(c_);
}

// ===== VALIDATION =====

Report validate_category(const FiniteCategory& c) {
    Report r("validate");
    size_t n = c.morphs.size();
    for (int o = 0; o < c.n_obj(); ++o) {
        int i = c.identity[static_cast<size_t>(o)];
        if (i < 0) {
            r.fail("object without identity", {c.obj_id(o)});
            continue;
        }
        if (c.dom(i) != o || c.cod(i) != o)
            r.fail("identity endpoints wrong", {c.obj_id(o), c.mor_id(i)});
    }
    for (int g = 0; g < c.n_mor(); ++g) {
        for (int f = 0; f < c.n_mor(); ++f) {
            int h = c.comp[static_cast<size_t>(g) * n + static_cast<size_t>(f)];
            if (!c.composable(g, f)) {
                if (h >= 0)
                    r.fail("composite defined on non-composable pair",
                           {c.mor_id(g), c.mor_id(f)});
                continue;
            }
            if (h < 0) {
                r.fail("missing composite", {c.mor_id(g), c.mor_id(f)});
                continue;
            }
            if (c.dom(h) != c.dom(f) || c.cod(h) != c.cod(g))
                r.fail("composite has wrong endpoints",
                       {c.mor_id(g), c.mor_id(f), c.mor_id(h)});
        }
    }
    if (!r.pass) return r;
    // Identity laws.
    for (int m = 0; m < c.n_mor(); ++m) {
        if (c.compose(c.id_of(c.cod(m)), m) != m)
            r.fail("left identity law broken", {c.mor_id(m)});
        if (c.compose(m, c.id_of(c.dom(m))) != m)
            r.fail("right identity law broken", {c.mor_id(m)});
    }
    // Associativity over every composable triple.
    for (int f = 0; f < c.n_mor(); ++f)
        for (int g = 0; g < c.n_mor(); ++g) {
            if (!c.composable(g, f)) continue;
            for (int h = 0; h < c.n_mor(); ++h) {
                if (!c.composable(h, g)) continue;
                if (c.compose(h, c.compose(g, f)) != c.compose(c.compose(h, g), f))
                    r.fail("associativity broken",
                           {c.mor_id(h), c.mor_id(g), c.mor_id(f)});
            }
        }
    return r;
}

std::optional<int> terminal_object(const FiniteCategory& c) {
    std::optional<int> best;
    for (int t = 0; t < c.n_obj(); ++t) {
        bool ok = true;
        for (int x = 0; x < c.n_obj() && ok; ++x)
            ok = c.hom(x, t).size() == 1;
        if (ok && (!best || c.obj_less(t, *best))) best = t;
    }
    return best;
}

bool is_pullback(const FiniteCategory& c, const PullbackWitness& w) {
    if (w.apex < 0 || w.proj_left < 0 || w.proj_right < 0) return false;
    if (c.dom(w.proj_left) != w.apex || c.dom(w.proj_right) != w.apex) return false;
    if (c.cod(w.proj_left) != c.dom(w.f) || c.cod(w.proj_right) != c.dom(w.g)) return false;
    if (c.compose(w.f, w.proj_left) != c.compose(w.g, w.proj_right)) return false;
    for (int v = 0; v < c.n_obj(); ++v) {
        for (int u : c.hom(v, c.dom(w.f))) {
            for (int q : c.hom(v, c.dom(w.g))) {
                if (c.compose(w.f, u) != c.compose(w.g, q)) continue;
                int count = 0;
                for (int m : c.hom(v, w.apex))
                    if (c.compose(w.proj_left, m) == u && c.compose(w.proj_right, m) == q)
                        ++count;
                if (count != 1) return false;
            }
        }
    }
    return true;
}

std::optional<PullbackWitness> pullback(const FiniteCategory& c, int f, int g) {
    if (c.cod(f) != c.cod(g)) throw CatError("pullback of a non-cospan");
    std::optional<PullbackWitness> best;
    auto better = [&](const PullbackWitness& a, const PullbackWitness& b) {
        auto ka = std::array<const std::string*, 3>{&c.obj_id(a.apex), &c.mor_id(a.proj_left),
                                                   &c.mor_id(a.proj_right)};
        auto kb = std::array<const std::string*, 3>{&c.obj_id(b.apex), &c.mor_id(b.proj_left),
                                                   &c.mor_id(b.proj_right)};
        for (int i = 0; i < 3; ++i) {
            if (*ka[static_cast<size_t>(i)] != *kb[static_cast<size_t>(i)])
                return *ka[static_cast<size_t>(i)] < *kb[static_cast<size_t>(i)];
        }
        return false;
    };
    for (int w = 0; w < c.n_obj(); ++w) {
        for (int pl : c.hom(w, c.dom(f))) {
            for (int pr : c.hom(w, c.dom(g))) {
                PullbackWitness cand{w, pl, pr, f, g};
                if (c.compose(f, pl) != c.compose(g, pr)) continue;
                if (!is_pullback(c, cand)) continue;
                if (!best || better(cand, *best)) best = cand;
            }
        }
    }
    return best;
}

std::optional<int> is_isomorphism(const FiniteCategory& c, int m) {
    std::optional<int> best;
    for (int inv : c.hom(c.cod(m), c.dom(m))) {
        if (c.compose(inv, m) == c.id_of(c.dom(m)) &&
            c.compose(m, inv) == c.id_of(c.cod(m))) {
            if (!best || c.mor_less(inv, *best)) best = inv;
        }
    }
    return best;
}

std::optional<int> mediate(const FiniteCategory& c, const PullbackWitness& w,
                           int u_left, int u_right) {
    if (c.dom(u_left) != c.dom(u_right)) return std::nullopt;
    if (c.cod(u_left) != c.dom(w.f) || c.cod(u_right) != c.dom(w.g)) return std::nullopt;
    if (c.compose(w.f, u_left) != c.compose(w.g, u_right)) return std::nullopt;
    std::optional<int> found;
    for (int m : c.hom(c.dom(u_left), w.apex)) {
        if (c.compose(w.proj_left, m) == u_left && c.compose(w.proj_right, m) == u_right) {
            if (found) return std::nullopt;
            found = m;
        }
    }
    return found;
}

std::vector<int> sorted_objects(const FiniteCategory& c) {
    std::vector<int> v(static_cast<size_t>(c.n_obj()));
    for (int i = 0; i < c.n_obj(); ++i) v[static_cast<size_t>(i)] = i;
    std::sort(v.begin(), v.end(), [&](int a, int b) { return c.obj_less(a, b); });
    return v;
}

std::vector<int> sorted_morphs(const FiniteCategory& c) {
    std::vector<int> v(static_cast<size_t>(c.n_mor()));
    for (int i = 0; i < c.n_mor(); ++i) v[static_cast<size_t>(i)] = i;
    std::sort(v.begin(), v.end(), [&](int a, int b) { return c.mor_less(a, b); });
    return v;
}

}  // namespace catbench
