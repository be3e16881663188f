#include "catbench/catfile.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace catbench {

namespace {

const char* kSectionNames[] = {"metadata", "objects",    "morphisms",
                               "composition", "classes", "choices"};
const char* kClassNames[] = {"display", "strict_display", "fibration", "equivalence"};

bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

// Tokens: identifiers, ":", "=", ".", "->".  Comments run from '#' to eol.
std::vector<std::string> tokenize(const std::string& line, int ln) {
    std::vector<std::string> out;
    size_t i = 0;
    while (i < line.size()) {
        char c = line[i];
        if (c == '#') break;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (ident_char(c)) {
            size_t j = i;
            while (j < line.size() && ident_char(line[j])) ++j;
            out.push_back(line.substr(i, j - i));
            i = j;
        } else if (c == '-' && i + 1 < line.size() && line[i + 1] == '>') {
            out.push_back("->");
            i += 2;
        } else if (c == ':' || c == '=' || c == '.' || c == '[' || c == ']') {
            out.push_back(std::string(1, c));
            ++i;
        } else {
            throw ParseError(ln, std::string("unexpected character '") + c + "'");
        }
    }
    return out;
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

}  // namespace

bool CategoryFile::operator==(const CategoryFile& o) const {
    return metadata == o.metadata && objects == o.objects && morphisms == o.morphisms &&
           composition == o.composition && classes == o.classes &&
           path_choices == o.path_choices && reindex_choices == o.reindex_choices;
}

CategoryFile parse(const std::string& text) {
    CategoryFile f;
    std::istringstream in(text);
    std::string raw;
    std::string section;
    int ln = 0;
    while (std::getline(in, raw)) {
        ++ln;
        std::string line = trim(raw);
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = trim(line.substr(0, hash));
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ParseError(ln, "malformed section header: " + line);
            section = trim(line.substr(1, line.size() - 2));
            bool known = false;
            for (const char* s : kSectionNames)
                if (section == s) known = true;
            if (!known) throw ParseError(ln, "unknown section: " + section);
            continue;
        }
        if (section.empty()) throw ParseError(ln, "entry before any section header");
        if (section == "metadata") {
            size_t eq = raw.find('=');
            if (eq == std::string::npos)
                throw ParseError(ln, "metadata entry needs 'key = value'");
            std::string key = trim(raw.substr(0, eq));
            std::string value = trim(raw.substr(eq + 1));
            size_t h2 = value.find('#');
            if (h2 != std::string::npos) value = trim(value.substr(0, h2));
            if (key.empty()) throw ParseError(ln, "empty metadata key");
            f.metadata.emplace_back(key, value);
            continue;
        }
        auto toks = tokenize(line, ln);
        if (toks.empty()) continue;
        if (section == "objects") {
            if (toks.size() != 3 || toks[1] != ":")
                throw ParseError(ln, "objects entry needs 'object : identity'");
            f.objects.emplace_back(toks[0], toks[2]);
            f.object_lines.push_back(ln);
        } else if (section == "morphisms") {
            if (toks.size() != 5 || toks[1] != ":" || toks[3] != "->")
                throw ParseError(ln, "morphisms entry needs 'id : dom -> cod'");
            f.morphisms.push_back({toks[0], toks[2], toks[4]});
            f.morphism_lines.push_back(ln);
        } else if (section == "composition") {
            if (toks.size() != 5 || toks[1] != "." || toks[3] != "=")
                throw ParseError(ln, "composition entry needs 'g . f = h'");
            f.composition.push_back({toks[0], toks[2], toks[4]});
            f.composition_lines.push_back(ln);
        } else if (section == "classes") {
            if (toks.size() < 2 || toks[1] != "=")
                throw ParseError(ln, "classes entry needs 'name = ids...'");
            bool known = false;
            for (const char* s : kClassNames)
                if (toks[0] == s) known = true;
            if (!known) throw ParseError(ln, "unknown class name: " + toks[0]);
            std::vector<std::string> ids(toks.begin() + 2, toks.end());
            for (const auto& id : ids)
                if (id == ":" || id == "=" || id == "." || id == "->")
                    throw ParseError(ln, "unexpected token in class list");
            f.classes.emplace_back(toks[0], std::move(ids));
            f.class_lines.push_back(ln);
        } else if (section == "choices") {
            if (toks[0] == "path") {
                if (toks.size() != 7 || toks[2] != ":")
                    throw ParseError(ln, "path choice needs 'path key : P r s t'");
                f.path_choices.push_back({toks[1], toks[3], toks[4], toks[5], toks[6], ln});
            } else if (toks[0] == "reindex") {
                if (toks.size() != 7 || toks[3] != ":")
                    throw ParseError(ln,
                                     "reindex choice needs 'reindex A sigma : apex proj top'");
                f.reindex_choices.push_back(
                    {toks[1], toks[2], toks[4], toks[5], toks[6], ln});
            } else {
                throw ParseError(ln, "unknown choice kind: " + toks[0]);
            }
        }
    }
    return f;
}

std::string emit(const CategoryFile& f) {
    std::string out;
    bool first = true;
    auto open = [&](const char* name) {
        if (!first) out += "\n";
        first = false;
        out += std::string("[") + name + "]\n";
    };
    if (!f.metadata.empty()) {
        open("metadata");
        for (const auto& [k, v] : f.metadata) out += k + " = " + v + "\n";
    }
    if (!f.objects.empty()) {
        open("objects");
        for (const auto& [o, i] : f.objects) out += o + " : " + i + "\n";
    }
    if (!f.morphisms.empty()) {
        open("morphisms");
        for (const auto& m : f.morphisms) out += m[0] + " : " + m[1] + " -> " + m[2] + "\n";
    }
    if (!f.composition.empty()) {
        open("composition");
        for (const auto& c : f.composition) out += c[0] + " . " + c[1] + " = " + c[2] + "\n";
    }
    if (!f.classes.empty()) {
        open("classes");
        for (const auto& [n, ids] : f.classes) {
            out += n + " =";
            for (const auto& id : ids) out += " " + id;
            out += "\n";
        }
    }
    if (!f.path_choices.empty() || !f.reindex_choices.empty()) {
        open("choices");
        for (const auto& p : f.path_choices)
            out += "path " + p.key + " : " + p.P + " " + p.r + " " + p.s + " " + p.t + "\n";
        for (const auto& r : f.reindex_choices)
            out += "reindex " + r.type_proj + " " + r.sigma + " : " + r.apex + " " +
                   r.proj + " " + r.top + "\n";
    }
    return out;
}

Input resolve(const CategoryFile& f) {
    if (f.objects.empty()) throw ParseError(1, "missing objects section");
    auto line_of = [](const std::vector<int>& lines, size_t i) {
        return i < lines.size() ? lines[i] : 0;
    };
    // Located semantic checks before the builder sees anything.
    std::set<std::string> obj_ids, mor_ids;
    for (size_t i = 0; i < f.objects.size(); ++i) {
        if (!obj_ids.insert(f.objects[i].first).second)
            throw ParseError(line_of(f.object_lines, i),
                             "duplicate object id: " + f.objects[i].first);
    }
    for (size_t i = 0; i < f.morphisms.size(); ++i) {
        const auto& m = f.morphisms[i];
        int ln = line_of(f.morphism_lines, i);
        if (!mor_ids.insert(m[0]).second)
            throw ParseError(ln, "duplicate morphism id: " + m[0]);
        if (!obj_ids.count(m[1])) throw ParseError(ln, "unknown object: " + m[1]);
        if (!obj_ids.count(m[2])) throw ParseError(ln, "unknown object: " + m[2]);
    }
    for (size_t i = 0; i < f.objects.size(); ++i) {
        if (!mor_ids.count(f.objects[i].second))
            throw ParseError(line_of(f.object_lines, i),
                             "identity morphism not declared: " + f.objects[i].second);
    }
    for (size_t i = 0; i < f.composition.size(); ++i) {
        for (const auto& id : f.composition[i])
            if (!mor_ids.count(id))
                throw ParseError(line_of(f.composition_lines, i),
                                 "unknown morphism: " + id);
    }
    for (size_t i = 0; i < f.classes.size(); ++i) {
        for (const auto& id : f.classes[i].second)
            if (!mor_ids.count(id))
                throw ParseError(line_of(f.class_lines, i), "unknown morphism: " + id);
    }
    Input in;
    CategoryBuilder b;
    for (const auto& [o, i] : f.objects) b.add_object(o, i);
    for (const auto& m : f.morphisms) b.add_morph(m[0], m[1], m[2]);
    for (const auto& c : f.composition) b.set_comp(c[0], c[1], c[2]);
    in.cat = b.build();

    auto need_morph = [&](const std::string& id, int ln) {
        int m = in.cat.morph_index(id);
        if (m < 0) throw ParseError(ln, "unknown morphism: " + id);
        return m;
    };
    auto need_obj = [&](const std::string& id, int ln) {
        int o = in.cat.object_index(id);
        if (o < 0) throw ParseError(ln, "unknown object: " + id);
        return o;
    };

    for (const auto& [name, ids] : f.classes) {
        auto& s = in.classes[name];  // empty class lists are meaningful
        for (const auto& id : ids) s.insert(need_morph(id, 0));
    }
    for (const auto& p : f.path_choices) {
        PathChoice c;
        if (in.cat.object_index(p.key) >= 0) {
            c.key_is_object = true;
            c.key = in.cat.object_index(p.key);
        } else {
            c.key_is_object = false;
            c.key = need_morph(p.key, p.line);
        }
        c.P = need_obj(p.P, p.line);
        c.r = need_morph(p.r, p.line);
        c.s = need_morph(p.s, p.line);
        c.t = need_morph(p.t, p.line);
        in.path_choices.push_back(c);
    }
    for (const auto& r : f.reindex_choices) {
        ReindexChoice c;
        c.type_proj = need_morph(r.type_proj, r.line);
        c.sigma = need_morph(r.sigma, r.line);
        c.square.apex = need_obj(r.apex, r.line);
        c.square.proj_left = need_morph(r.proj, r.line);
        c.square.proj_right = need_morph(r.top, r.line);
        c.square.f = c.sigma;
        c.square.g = c.type_proj;
        in.reindex_choices.push_back(c);
    }
    for (const auto& [k, v] : f.metadata) {
        if (k == "name") {
            in.name = v;
        } else if (k == "description") {
            in.description = v;
        } else if (k == "expect") {
            std::istringstream vs(v);
            std::string check, verdict;
            vs >> check >> verdict;
            if (verdict != "pass" && verdict != "fail")
                throw ParseError(0, "expect verdict must be 'pass' or 'fail': " + v);
            in.expects.push_back({check, verdict == "pass"});
        } else {
            throw ParseError(0, "unknown metadata key: " + k);
        }
    }
    return in;
}

Input load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CatError("cannot open file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return resolve(parse(ss.str()));
}

}  // namespace catbench
