#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "catbench/catfile.hpp"
#include "corpus.hpp"

using namespace catbench;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string data(const std::string& name) {
    return std::string(CATBENCH_DATA_DIR) + "/" + name;
}

const char* kFixtures[] = {
    "one_object.cat",    "walking_arrow.cat",           "three_chain.cat",
    "semilattice.cat",   "interval.cat",                "corrupt_three_chain.cat",
    "corrupt_arrow_eq.cat", "corrupt_semilattice_eq.cat",
    "walking_arrow_structured.cat",
};

}  // namespace

// ===== ROUND TRIPS =====

TEST_CASE("Catfile: EmitParseIdentityOnValues") {
    for (const char* fx : kFixtures) {
        std::string text = slurp(data(fx));
        CategoryFile v = parse(text);
        CategoryFile v2 = parse(emit(v));
        CHECK(v == v2);
    }
}

TEST_CASE("Catfile: FixturesAreCanonical") {
    // Bundled fixtures are stored in emit()'s exact layout, so loading and
    // re-emitting them is byte-stable.
    for (const char* fx : kFixtures) {
        std::string text = slurp(data(fx));
        INFO(fx);
        CHECK(emit(parse(text)) == text);
    }
}

TEST_CASE("Catfile: EmitIdempotent") {
    for (const char* fx : kFixtures) {
        std::string text = slurp(data(fx));
        std::string once = emit(parse(text));
        CHECK(emit(parse(once)) == once);
    }
}

// ===== RESOLUTION =====

TEST_CASE("Catfile: ResolvedFixturesMatchInCodeCorpus") {
    auto same = [](const FiniteCategory& a, const FiniteCategory& b) {
        CHECK(a.objects == b.objects);
        REQUIRE(a.morphs.size() == b.morphs.size());
        for (size_t i = 0; i < a.morphs.size(); ++i) CHECK(a.morphs[i] == b.morphs[i]);
        CHECK(a.identity == b.identity);
        CHECK(a.comp == b.comp);
    };
    same(load_file(data("one_object.cat")).cat, corpus::one_object());
    same(load_file(data("walking_arrow.cat")).cat, corpus::walking_arrow());
    same(load_file(data("three_chain.cat")).cat, corpus::three_chain());
    same(load_file(data("semilattice.cat")).cat, corpus::semilattice());
    same(load_file(data("interval.cat")).cat, corpus::interval());
}

TEST_CASE("Catfile: ClassesResolve") {
    Input in = load_file(data("interval.cat"));
    CHECK(in.name == "interval");
    REQUIRE(in.has_class("equivalence"));
    CHECK(in.cls("equivalence").size() == 4);
    CHECK(in.cls("fibration") == corpus::all_morphs(in.cat));
    REQUIRE(in.expects.size() == 5);
    CHECK(in.expects[0].check == "validate");
    CHECK(in.expects[0].pass);
}

TEST_CASE("Catfile: ReindexChoicesResolve") {
    Input in = load_file(data("walking_arrow_structured.cat"));
    REQUIRE(in.reindex_choices.size() == 5);
    const auto& row = in.reindex_choices[2];  // reindex id_B f : A id_A f
    CHECK(in.cat.mor_id(row.type_proj) == "id_B");
    CHECK(in.cat.mor_id(row.sigma) == "f");
    CHECK(in.cat.obj_id(row.square.apex) == "A");
    CHECK(in.cat.mor_id(row.square.proj_left) == "id_A");
    CHECK(in.cat.mor_id(row.square.proj_right) == "f");
    CHECK(is_pullback(in.cat, row.square));
}

// ===== ERRORS =====

TEST_CASE("Catfile: UnknownSectionRejected") {
    try {
        parse("[objects]\nx : id_x\n\n[frobnicate]\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 4);
        CHECK(std::string(e.what()).find("frobnicate") != std::string::npos);
    }
}

TEST_CASE("Catfile: UnknownClassNameRejected") {
    CHECK_THROWS_AS(parse("[classes]\ncofibration = f\n"), ParseError);
}

TEST_CASE("Catfile: EmptyFileMissingObjects") {
    try {
        resolve(parse(""));
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("missing objects section") != std::string::npos);
    }
}

TEST_CASE("Catfile: DanglingCompositionIdLocated") {
    std::string text =
        "[objects]\n"
        "a : id_a\n"
        "\n"
        "[morphisms]\n"
        "id_a : a -> a\n"
        "\n"
        "[composition]\n"
        "id_a . ghost = id_a\n";
    try {
        resolve(parse(text));
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 8);
        CHECK(std::string(e.what()).find("ghost") != std::string::npos);
    }
}

TEST_CASE("Catfile: DuplicateMorphismRejected") {
    std::string text =
        "[objects]\n"
        "a : id_a\n"
        "\n"
        "[morphisms]\n"
        "id_a : a -> a\n"
        "id_a : a -> a\n";
    CHECK_THROWS_AS(resolve(parse(text)), ParseError);
}

TEST_CASE("Catfile: MalformedEntryNamesLine") {
    try {
        parse("[morphisms]\nf : a b\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
}

TEST_CASE("Catfile: CommentsAndBlankLinesAccepted") {
    std::string text =
        "# a tiny category\n"
        "[objects]\n"
        "a : id_a   # the only object\n"
        "\n"
        "[morphisms]\n"
        "id_a : a -> a\n";
    Input in = resolve(parse(text));
    CHECK(in.cat.n_obj() == 1);
    CHECK(in.cat.n_mor() == 1);
}

TEST_CASE("Catfile: IdentityCompositionsImplied") {
    Input in = load_file(data("walking_arrow.cat"));
    int f = in.cat.morph_index("f");
    CHECK(in.cat.compose(in.cat.morph_index("id_B"), f) == f);
    CHECK(in.cat.compose(f, in.cat.morph_index("id_A")) == f);
}
