#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "catbench/fincat.hpp"

namespace catbench {

// ===== CATEGORY FILES =====
//
// Line-oriented text format for finite categories with marked structure.
// Sections: metadata, objects, morphisms, composition, classes, choices.
// The formal grammar lives in docs/format.md; emit() produces the canonical
// layout and parse(emit(v)) == v for every value v.

struct ParseError : CatError {
    int line;
    ParseError(int ln, const std::string& msg)
        : CatError("line " + std::to_string(ln) + ": " + msg), line(ln) {}
};

struct PathChoiceRow {
    std::string key;  // object id, or the fibration's morphism id
    std::string P, r, s, t;
    int line = 0;

    bool operator==(const PathChoiceRow& o) const {
        return key == o.key && P == o.P && r == o.r && s == o.s && t == o.t;
    }
};

struct ReindexChoiceRow {
    std::string type_proj, sigma;
    std::string apex, proj, top;
    int line = 0;

    bool operator==(const ReindexChoiceRow& o) const {
        return type_proj == o.type_proj && sigma == o.sigma && apex == o.apex &&
               proj == o.proj && top == o.top;
    }
};

struct CategoryFile {
    std::vector<std::pair<std::string, std::string>> metadata;
    std::vector<std::pair<std::string, std::string>> objects;  // (object, identity)
    std::vector<std::array<std::string, 3>> morphisms;         // (id, dom, cod)
    std::vector<std::array<std::string, 3>> composition;       // (g, f, h) for g.f=h
    std::vector<std::pair<std::string, std::vector<std::string>>> classes;
    std::vector<PathChoiceRow> path_choices;
    std::vector<ReindexChoiceRow> reindex_choices;

    // Source lines for located semantic errors; not part of the value.
    std::vector<int> object_lines, morphism_lines, composition_lines, class_lines;

    bool operator==(const CategoryFile& o) const;
};

CategoryFile parse(const std::string& text);
std::string emit(const CategoryFile& f);

// Resolved form: the category plus marked structure with every reference
// checked for dangling ids.
struct PathChoice {
    bool key_is_object = false;
    int key = -1;  // object index or morphism index
    int P = -1, r = -1, s = -1, t = -1;
};

struct ReindexChoice {
    int type_proj = -1;
    int sigma = -1;
    PullbackWitness square;
};

struct Expect {
    std::string check;
    bool pass = true;
};

struct Input {
    FiniteCategory cat;
    std::map<std::string, std::set<int>> classes;
    std::vector<PathChoice> path_choices;
    std::vector<ReindexChoice> reindex_choices;
    std::string name;
    std::string description;
    std::vector<Expect> expects;

    bool has_class(const std::string& n) const { return classes.count(n) > 0; }
    const std::set<int>& cls(const std::string& n) const { return classes.at(n); }
};

Input resolve(const CategoryFile& f);
Input load_file(const std::string& path);

}  // namespace catbench
