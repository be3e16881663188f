#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "catbench/correspondence.hpp"
#include "catbench/load.hpp"
#include "corpus.hpp"

using namespace catbench;

namespace {

std::string data_path(const std::string& name) {
    return std::string(CATBENCH_DATA_DIR) + "/" + name;
}

MapClass all_class(const FiniteCategory& c) {
    MapClass m;
    m.members = corpus::all_morphs(c);
    return m;
}

PathCat trivial_path(FiniteCategory c) {
    PathCat p;
    p.clan.display = all_class(c);
    p.eq = iso_class(c);
    p.clan.cat = std::move(c);
    return p;
}

DispCat all_disp(const FiniteCategory& c) {
    return DispCat{c, all_class(c), std::nullopt, std::nullopt};
}

bool has_counterexample(const Report& r, const std::string& what,
                        const std::vector<std::string>& ids) {
    for (const auto& cex : r.counterexamples)
        if (cex.what == what && cex.ids == ids) return true;
    for (const auto& ch : r.children)
        if (has_counterexample(ch, what, ids)) return true;
    return false;
}

bool has_witness(const Report& r, const std::string& what,
                 const std::vector<std::string>& ids) {
    for (const auto& w : r.witnesses)
        if (w.what == what && w.ids == ids) return true;
    for (const auto& ch : r.children)
        if (has_witness(ch, what, ids)) return true;
    return false;
}

const Report& child_named(const Report& r, const std::string& name) {
    for (const auto& ch : r.children)
        if (ch.check == name) return ch;
    REQUIRE(false);
    return r;
}

// The monotone collapse of the diamond onto the chain: bot, x go below y,
// top, but the meet of x and y drops to bot while its image does not drop
// below the image of y.  The smallest functor that destroys a meet.
Functor diamond_collapse(const FiniteCategory& s, const FiniteCategory& d) {
    auto o = [&](const std::string& n) { return d.object_index(n); };
    auto m = [&](const std::string& n) { return d.morph_index(n); };
    Functor F;
    F.obj_map.resize(static_cast<size_t>(s.n_obj()));
    F.mor_map.resize(static_cast<size_t>(s.n_mor()));
    F.obj_map[static_cast<size_t>(s.object_index("bot"))] = o("a");
    F.obj_map[static_cast<size_t>(s.object_index("x"))] = o("b");
    F.obj_map[static_cast<size_t>(s.object_index("y"))] = o("c");
    F.obj_map[static_cast<size_t>(s.object_index("top"))] = o("c");
    F.mor_map[static_cast<size_t>(s.morph_index("id_bot"))] = m("id_a");
    F.mor_map[static_cast<size_t>(s.morph_index("id_x"))] = m("id_b");
    F.mor_map[static_cast<size_t>(s.morph_index("id_y"))] = m("id_c");
    F.mor_map[static_cast<size_t>(s.morph_index("id_top"))] = m("id_c");
    F.mor_map[static_cast<size_t>(s.morph_index("bot_x"))] = m("ab");
    F.mor_map[static_cast<size_t>(s.morph_index("bot_y"))] = m("ac");
    F.mor_map[static_cast<size_t>(s.morph_index("bot_top"))] = m("ac");
    F.mor_map[static_cast<size_t>(s.morph_index("x_top"))] = m("bc");
    F.mor_map[static_cast<size_t>(s.morph_index("y_top"))] = m("id_c");
    return F;
}

// Oracle: which canonical squares stop being pullbacks in the image,
// recomputed by the universal property directly.
std::set<std::pair<std::string, std::string>> broken_squares(
    const Functor& F, const PathCat& src, const FiniteCategory& dst) {
    const FiniteCategory& c = src.cat();
    std::set<std::pair<std::string, std::string>> out;
    for (int m : src.fib().members)
        for (int sigma = 0; sigma < c.n_mor(); ++sigma) {
            if (c.cod(sigma) != c.cod(m)) continue;
            auto w = pullback(c, sigma, m);
            REQUIRE(w);
            PullbackWitness img{F.obj_map[static_cast<size_t>(w->apex)],
                                F.mor_map[static_cast<size_t>(w->proj_left)],
                                F.mor_map[static_cast<size_t>(w->proj_right)],
                                F.mor_map[static_cast<size_t>(sigma)],
                                F.mor_map[static_cast<size_t>(m)]};
            if (!is_pullback(dst, img)) out.insert({c.mor_id(m), c.mor_id(sigma)});
        }
    return out;
}

}  // namespace

TEST_CASE("identity functor is a 1-cell in both guises") {
    for (auto make : {corpus::one_object, corpus::walking_arrow, corpus::three_chain,
                      corpus::semilattice, corpus::interval}) {
        FiniteCategory c = make();
        Functor F = identity_functor(c);
        CHECK(check_functor(F, c, c).pass);
        PathCat p = trivial_path(make());
        Report r = check_1cell(F, p, p);
        INFO(c.obj_id(0));
        CHECK(r.pass);
        CHECK(has_witness(r, "fibrations preserved", {}));
        CHECK(has_witness(r, "equivalences preserved", {}));
        Report rd = check_1cell(F, all_disp(c), all_disp(c));
        CHECK(rd.pass);
        CHECK(has_witness(rd, "display maps preserved", {}));
    }
}

TEST_CASE("functor law violations are reported by name") {
    FiniteCategory t = corpus::three_chain();
    Functor F = identity_functor(t);
    F.mor_map[static_cast<size_t>(t.morph_index("ab"))] = t.morph_index("bc");
    Report r = check_functor(F, t, t);
    CHECK_FALSE(r.pass);
    CHECK(has_counterexample(r, "endpoints not preserved", {"ab"}));

    FiniteCategory z = corpus::cyclic2();
    Functor G;
    G.obj_map = {0};
    G.mor_map = {z.morph_index("sigma"), z.morph_index("sigma")};
    Report rg = check_functor(G, z, z);
    CHECK_FALSE(rg.pass);
    CHECK(has_counterexample(rg, "identity not preserved", {"star"}));
    CHECK(has_counterexample(rg, "composition not preserved", {"sigma", "sigma"}));

    Functor H;
    H.obj_map = {0};
    H.mor_map = {0};
    Report rh = check_functor(H, z, z);
    CHECK_FALSE(rh.pass);
    CHECK(has_counterexample(rh, "maps do not cover the source", {}));
}

TEST_CASE("round trip is the identity on the corpus") {
    for (auto make : {corpus::one_object, corpus::walking_arrow, corpus::three_chain,
                      corpus::semilattice, corpus::interval}) {
        PathCat p = trivial_path(make());
        INFO(p.cat().obj_id(0));
        DispTranslation t = path_to_dispcat(p);
        PathCat q = dispcat_to_path(t);
        CHECK(q.fib().members == p.fib().members);
        CHECK(q.eq.members == p.eq.members);
        Report r = roundtrip_check(p);
        CHECK(r.pass);
        CHECK(has_witness(r, "equivalences reconstructed",
                          {std::to_string(p.eq.members.size())}));
        CHECK(has_witness(r, "display class preserved",
                          {std::to_string(p.fib().members.size())}));
    }
}

TEST_CASE("round trip is the identity on the filed corpus") {
    for (const char* f : {"one_object.cat", "walking_arrow.cat", "three_chain.cat",
                          "semilattice.cat", "interval.cat"}) {
        Input in = load_file(data_path(f));
        PathCat p = pathcat_from(in);
        INFO(f);
        CHECK(roundtrip_check(p).pass);
    }
}

TEST_CASE("forward translation carries units, composites, and identity types") {
    FiniteCategory c = corpus::three_chain();
    PathCat p = trivial_path(corpus::three_chain());
    DispTranslation t = path_to_dispcat(p);
    CHECK(t.disp.display.members == p.fib().members);
    for (int o = 0; o < c.n_obj(); ++o) CHECK(t.units.at(o) == c.id_of(o));
    CHECK(t.sigmas.at({c.morph_index("bc"), c.morph_index("ab")}) ==
          c.morph_index("ac"));
    std::set<int> keys;
    for (const auto& [m, s] : t.id_types) keys.insert(m);
    CHECK(keys == p.fib().members);
}

TEST_CASE("seeded reverse translation pins the derived path objects") {
    FiniteCategory c = corpus::walking_arrow();
    PathCat p = trivial_path(corpus::walking_arrow());
    DispTranslation t = path_to_dispcat(p);
    PathCat q = dispcat_to_path(t);
    CHECK(q.path_table.size() == 3);
    for (int m : q.fib().members) {
        const IdStructure& s = t.id_types.at(m);
        auto w = path_object_for(q, m);
        REQUIRE(w);
        CHECK(w->P == total_of(c, s.id_type));
        CHECK(w->r == s.refl_total);
        CHECK(w->s == c.compose(s.formation.proj_left, s.id_type.proj));
        CHECK(w->t == c.compose(s.formation.proj_right, s.id_type.proj));
    }

    // The inverse arrow's fibre product sits on the other object, so its
    // path object does too.
    FiniteCategory ic = corpus::interval();
    PathCat ip = trivial_path(corpus::interval());
    PathCat iq = dispcat_to_path(path_to_dispcat(ip));
    auto wf = path_object_for(iq, ic.morph_index("f"));
    REQUIRE(wf);
    CHECK(ic.obj_id(wf->P) == "a");
    CHECK(ic.mor_id(wf->r) == "id_a");
    CHECK(ic.mor_id(wf->s) == "id_a");
    CHECK(ic.mor_id(wf->t) == "id_a");
    auto wg = path_object_for(iq, ic.morph_index("g"));
    REQUIRE(wg);
    CHECK(ic.obj_id(wg->P) == "a");
    CHECK(ic.mor_id(wg->r) == "g");
    CHECK(ic.mor_id(wg->s) == "f");
    CHECK(ic.mor_id(wg->t) == "f");
    CHECK(iq.eq.members == ip.eq.members);
}

TEST_CASE("reverse translation guards") {
    CHECK_THROWS_WITH_AS(dispcat_to_path(all_disp(corpus::cyclic2())),
                         "translation needs a root", CatError);

    FiniteCategory c = corpus::three_chain();
    MapClass noids;
    for (const char* n : {"ab", "bc", "ac"})
        noids.members.insert(c.morph_index(n));
    CHECK_THROWS_WITH_AS(dispcat_to_path(DispCat{c, noids, std::nullopt, std::nullopt}),
                         "translation needs identity display maps", CatError);

    MapClass open_comp;
    for (const char* n : {"id_a", "id_b", "id_c", "ab", "bc"})
        open_comp.members.insert(c.morph_index(n));
    CHECK_THROWS_WITH_AS(
        dispcat_to_path(DispCat{c, open_comp, std::nullopt, std::nullopt}),
        "translation needs display maps closed under composition", CatError);
}

TEST_CASE("translated display class is closed") {
    for (auto make : {corpus::one_object, corpus::walking_arrow, corpus::three_chain,
                      corpus::semilattice, corpus::interval}) {
        PathCat p = trivial_path(make());
        DispTranslation t = path_to_dispcat(p);
        MapClass closed = fibration_closure(t.disp.cat, t.disp.display);
        CHECK(closed.members == t.disp.display.members);
    }
}

TEST_CASE("collapsing the diamond onto the chain breaks pullback preservation") {
    FiniteCategory s = corpus::semilattice();
    FiniteCategory d = corpus::three_chain();
    Functor F = diamond_collapse(s, d);
    REQUIRE(check_functor(F, s, d).pass);

    PathCat ps = trivial_path(corpus::semilattice());
    std::set<std::pair<std::string, std::string>> expect = {{"x_top", "y_top"},
                                                            {"y_top", "x_top"}};
    CHECK(broken_squares(F, ps, d) == expect);

    Report r = check_1cell(F, ps, trivial_path(corpus::three_chain()));
    CHECK_FALSE(r.pass);
    CHECK(has_counterexample(r, "image square is not a pullback", {"x_top", "y_top"}));
    CHECK(has_counterexample(r, "image square is not a pullback", {"y_top", "x_top"}));
    CHECK(child_named(r, "fibrations").pass);
    CHECK(child_named(r, "trivial fibrations").pass);
    CHECK(child_named(r, "terminal").pass);
    CHECK(child_named(r, "equivalences").pass);
    CHECK_FALSE(child_named(r, "pullback squares").pass);

    Report rd = check_1cell(F, all_disp(s), all_disp(d));
    CHECK_FALSE(rd.pass);
    CHECK(has_counterexample(rd, "image square is not a pullback", {"x_top", "y_top"}));
}

TEST_CASE("collapse to the point preserves every canonical square") {
    // The image of any canonical square degenerates to the identity square
    // on the point, and that one is universal outright: the direct check
    // finds no failures, so the collapse is a 1-cell.
    FiniteCategory d = corpus::one_object();
    PathCat src = trivial_path(corpus::three_chain());
    Functor F;
    F.obj_map.assign(static_cast<size_t>(src.cat().n_obj()), 0);
    F.mor_map.assign(static_cast<size_t>(src.cat().n_mor()), 0);
    REQUIRE(check_functor(F, src.cat(), d).pass);
    CHECK(broken_squares(F, src, d).empty());
    Report r = check_1cell(F, src, trivial_path(corpus::one_object()));
    CHECK(r.pass);
}

TEST_CASE("splitting the walking arrow recovers its display class") {
    Input in = load_file(data_path("walking_arrow_structured.cat"));
    DispCat dc = dispcat_from(in);
    const FiniteCategory& c = dc.cat;
    SplitResult s = left_adjoint_split(dc);

    CHECK(s.split.types.size() == 5);
    std::set<std::string> comp;
    for (int m : s.split.disp.strict_display->members) comp.insert(c.mor_id(m));
    CHECK(comp == std::set<std::string>{"f", "id_A", "id_B"});
    CHECK(s.split.disp.display.members == dc.display.members);
    CHECK(s.verification.pass);
    CHECK(has_witness(s.verification, "repletion recovers the display class", {"3"}));
    CHECK(has_witness(s.verification, "isomorphic to a display map",
                      {"f", "f", "id_A"}));

    Report laws = check_split(s.split);
    CHECK(laws.pass);
    CHECK(has_witness(laws, "A[1] = A", {"5"}));

    CHECK(s.unit == identity_functor(c));
    CHECK(check_1cell(s.unit, dc, s.split.disp).pass);

    PathCat p2 = dispcat_to_path(dc);
    DispTranslation t2 = path_to_dispcat(p2);
    CHECK(t2.disp.display.members == dc.display.members);
    CHECK(p2.eq.members == iso_class(c).members);
}

TEST_CASE("splitting the diamond semilattice") {
    Input in = load_file(data_path("semilattice_structured.cat"));
    DispCat dc = dispcat_from(in);
    const FiniteCategory& c = dc.cat;
    SplitResult s = left_adjoint_split(dc);

    CHECK(s.split.types.size() == 25);
    CHECK(s.verification.pass);
    CHECK(has_witness(s.verification, "repletion recovers the display class", {"9"}));
    CHECK(check_split(s.split).pass);
    CHECK(check_1cell(s.unit, dc, s.split.disp).pass);

    SplitType meet{c.morph_index("y_top"), c.morph_index("x_top")};
    CHECK(c.mor_id(s.split.comprehension(meet)) == "bot_y");
    SplitType bogus{c.morph_index("bot_x"), c.morph_index("x_top")};
    CHECK_THROWS_WITH_AS(s.split.comprehension(bogus), "unknown split type", CatError);
}

TEST_CASE("tampered comprehension choices are caught") {
    Input in = load_file(data_path("semilattice_structured.cat"));
    DispCat dc = dispcat_from(in);
    const FiniteCategory& c = dc.cat;

    SplitResult s = left_adjoint_split(dc);
    SplitType t{c.morph_index("id_top"), c.morph_index("x_top")};
    PullbackWitness skew;
    skew.apex = c.object_index("bot");
    skew.proj_left = c.morph_index("bot_top");
    skew.proj_right = c.morph_index("bot_x");
    skew.f = c.morph_index("id_top");
    skew.g = c.morph_index("x_top");
    s.split.chosen[t] = skew;
    Report r = check_split(s.split);
    CHECK_FALSE(r.pass);
    CHECK(has_counterexample(r, "no connecting map between comprehensions",
                             {"id_top", "x_top", "x_top"}));
    CHECK(child_named(r, "identity law").pass);
    CHECK(child_named(r, "composition law").pass);

    SplitResult s2 = left_adjoint_split(dc);
    SplitType gone{c.morph_index("y_top"), c.morph_index("x_top")};
    s2.split.chosen.erase(gone);
    s2.split.types.erase(
        std::find(s2.split.types.begin(), s2.split.types.end(), gone));
    Report r2 = check_split(s2.split);
    CHECK_FALSE(r2.pass);
    CHECK(has_counterexample(r2, "missing comprehension square",
                             {"id_top", "x_top", "y_top"}));
}

TEST_CASE("coherence closure on the walking arrow") {
    Input in = load_file(data_path("walking_arrow_structured.cat"));
    SplitResult s = left_adjoint_split(dispcat_from(in));
    Report r = verify_coherence_closure(s.split);
    CHECK(r.pass);
    CHECK(has_witness(r, "root factorization", {"A", "id_A", "f"}));
    CHECK(has_witness(r, "root factorization", {"B", "id_B", "id_B"}));
    CHECK(has_witness(r, "(i) upper is invertible", {"id_A", "f", "id_A", "f"}));
    CHECK(has_witness(r, "(iv) through the invertible base", {"f", "id_B", "id_A", "f"}));
    CHECK(has_witness(r, "pullbacks stay in the class", {"f", "2"}));
    CHECK(has_witness(r, "identities present", {"2"}));
}

TEST_CASE("coherence closure on the diamond") {
    Input in = load_file(data_path("semilattice_structured.cat"));
    SplitResult s = left_adjoint_split(dispcat_from(in));
    Report r = verify_coherence_closure(s.split);
    CHECK(r.pass);
    CHECK(has_witness(r, "(ii) through a strict composite",
                      {"bot_x", "x_top", "id_bot", "bot_top"}));
    CHECK(has_witness(r, "root factorization", {"bot", "id_bot", "bot_top"}));
    CHECK(has_witness(r, "identities present", {"4"}));
}

TEST_CASE("coherence closure needs the strict verdicts up front") {
    FiniteCategory c = corpus::three_chain();
    SplitDispCat s;
    s.disp.cat = c;
    MapClass thin;
    thin.members.insert(c.morph_index("ab"));
    s.disp.display = thin;
    s.disp.strict_display = thin;
    CHECK_THROWS_WITH_AS(verify_coherence_closure(s),
                         "coherence needs extensional unit and sigma verdicts",
                         CatError);

    MapClass open_comp;
    for (const char* n : {"id_a", "id_b", "id_c", "ab", "bc"})
        open_comp.members.insert(c.morph_index(n));
    s.disp.display = open_comp;
    s.disp.strict_display = open_comp;
    CHECK_THROWS_WITH_AS(verify_coherence_closure(s),
                         "coherence needs extensional unit and sigma verdicts",
                         CatError);
}

TEST_CASE("one splitting pass leaves the pair choice unstable") {
    Input in = load_file(data_path("walking_arrow_structured.cat"));
    SplitResult s = left_adjoint_split(dispcat_from(in));
    Report r = check_strict_stability(s.split);
    CHECK_FALSE(r.pass);
    CHECK(child_named(r, "unit").pass);
    CHECK(has_witness(r, "unit strictly stable", {"A"}));
    CHECK(has_witness(r, "unit strictly stable", {"B"}));
    CHECK(child_named(r, "identity").pass);
    CHECK(has_witness(r, "identity carriers strictly stable", {}));
    CHECK_FALSE(child_named(r, "sigma").pass);
    CHECK(has_counterexample(r, "sigma choice moves under re-indexing",
                             {"id_B", "f", "f", "id_B", "f"}));

    Input in2 = load_file(data_path("semilattice_structured.cat"));
    SplitResult s2 = left_adjoint_split(dispcat_from(in2));
    Report r2 = check_strict_stability(s2.split);
    CHECK_FALSE(r2.pass);
    CHECK(child_named(r2, "unit").pass);
    CHECK(child_named(r2, "identity").pass);
    CHECK_FALSE(child_named(r2, "sigma").pass);
    CHECK(has_counterexample(r2, "sigma choice moves under re-indexing",
                             {"id_top", "x_top", "id_x", "bot_x", "y_top"}));
}

TEST_CASE("splitting requires the chosen table") {
    CHECK_THROWS_WITH_AS(left_adjoint_split(all_disp(corpus::three_chain())),
                         "splitting needs a structured input", CatError);
}
