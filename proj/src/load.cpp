#include "catbench/load.hpp"

namespace catbench {

MapClass class_or(const Input& in, const std::string& name, MapClass fallback) {
    if (!in.has_class(name)) return fallback;
    MapClass out;
    out.members = in.cls(name);
    return out;
}

namespace {

MapClass every_morphism(const FiniteCategory& c) {
    MapClass out;
    for (int m = 0; m < c.n_mor(); ++m) out.members.insert(m);
    return out;
}

}  // namespace

DispCat dispcat_from(const Input& in) {
    DispCat d;
    d.cat = in.cat;
    d.display = class_or(in, "display", every_morphism(in.cat));
    if (in.has_class("strict_display")) {
        MapClass strict;
        strict.members = in.cls("strict_display");
        d.strict_display = strict;
    }
    if (!in.reindex_choices.empty()) {
        ReindexTable tbl;
        for (const auto& r : in.reindex_choices) tbl[{r.type_proj, r.sigma}] = r.square;
        d.reindex_table = tbl;
    }
    return d;
}

MapClass equivalence_class_from(const Input& in) {
    return class_or(in, "equivalence", iso_class(in.cat));
}

PathCat pathcat_from(const Input& in) {
    PathCat p;
    p.clan.cat = in.cat;
    MapClass display = class_or(in, "display", every_morphism(in.cat));
    p.clan.display = class_or(in, "fibration", fibration_closure(in.cat, display));
    p.eq = equivalence_class_from(in);
    for (const auto& pc : in.path_choices)
        p.path_table[{pc.key_is_object, pc.key}] = {pc.P, pc.r, pc.s, pc.t};
    return p;
}

}  // namespace catbench
