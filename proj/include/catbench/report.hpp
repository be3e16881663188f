#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace catbench {

// A single witness or counterexample: a short label plus the identifiers of
// the objects/morphisms involved.
struct Finding {
    std::string what;
    std::vector<std::string> ids;

    bool operator==(const Finding&) const = default;
};

// Verdict tree produced by every check.  Invariant: a failing node carries at
// least one counterexample (enforced by fail()).
struct Report {
    std::string check;
    bool pass = true;
    std::vector<Finding> witnesses;
    std::vector<Finding> counterexamples;
    std::vector<Report> children;

    explicit Report(std::string name = "") : check(std::move(name)) {}

    void witness(std::string what, std::vector<std::string> ids = {}) {
        witnesses.push_back({std::move(what), std::move(ids)});
    }

    void fail(std::string what, std::vector<std::string> ids = {}) {
        pass = false;
        counterexamples.push_back({std::move(what), std::move(ids)});
    }

    // Adopts the child's verdict into this node's.
    Report& child(Report r) {
        if (!r.pass) pass = false;
        children.push_back(std::move(r));
        return children.back();
    }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["check"] = check;
        j["pass"] = pass;
        auto fs = [](const std::vector<Finding>& v) {
            nlohmann::json a = nlohmann::json::array();
            for (const auto& f : v) a.push_back({{"what", f.what}, {"ids", f.ids}});
            return a;
        };
        j["witnesses"] = fs(witnesses);
        j["counterexamples"] = fs(counterexamples);
        nlohmann::json kids = nlohmann::json::array();
        for (const auto& c : children) kids.push_back(c.to_json());
        j["children"] = kids;
        return j;
    }

    // Indented plain-text rendering, one line per node plus findings.
    std::string to_text(int indent = 0) const {
        std::string pad(static_cast<size_t>(indent) * 2, ' ');
        std::string out = pad + (pass ? "[pass] " : "[FAIL] ") + check + "\n";
        for (const auto& f : witnesses) {
            out += pad + "  * " + f.what;
            for (const auto& id : f.ids) out += " " + id;
            out += "\n";
        }
        for (const auto& f : counterexamples) {
            out += pad + "  ! " + f.what;
            for (const auto& id : f.ids) out += " " + id;
            out += "\n";
        }
        for (const auto& c : children) out += c.to_text(indent + 1);
        return out;
    }
};

// Structural errors (bad preconditions, unresolved references).  Violations
// found by checks are reported as data, not thrown.
struct CatError : std::runtime_error {
    explicit CatError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace catbench
