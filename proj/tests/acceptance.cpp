// Acceptance battery for the workbench: one line per criterion, nonzero exit
// when any fails.  Each criterion re-verifies results with direct library
// calls rather than trusting the check that produced them.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "catbench/catfile.hpp"
#include "catbench/cli.hpp"
#include "catbench/constructions.hpp"
#include "catbench/correspondence.hpp"
#include "catbench/dispcat.hpp"
#include "catbench/fincat.hpp"
#include "catbench/load.hpp"
#include "catbench/pathcat.hpp"
#include "catbench/syntaxmodel.hpp"
#include "catbench/typeformers.hpp"

using namespace catbench;

namespace {

std::string data_path(const std::string& name) {
    return std::string(CATBENCH_DATA_DIR) + "/" + name;
}

const std::vector<std::string> kAllFiles = {
    "corrupt_arrow_eq.cat",       "corrupt_semilattice_eq.cat",
    "corrupt_three_chain.cat",    "interval.cat",
    "one_object.cat",             "semilattice.cat",
    "semilattice_structured.cat", "three_chain.cat",
    "walking_arrow.cat",          "walking_arrow_structured.cat"};

struct Entry {
    std::string name;
    Input in;
    PathCat p;
};

// Every bundled file that actually forms a path category.
std::vector<Entry> path_corpus() {
    std::vector<Entry> out;
    for (const auto& name : kAllFiles) {
        Input in;
        try {
            in = load_file(data_path(name));
        } catch (const CatError&) {
            continue;
        }
        try {
            PathCat p = pathcat_from(in);
            if (!check_path_axioms(p).pass) continue;
            out.push_back({name, std::move(in), std::move(p)});
        } catch (const CatError&) {
            continue;
        }
    }
    return out;
}

void collect_fails(const Report& r, std::vector<Finding>& out) {
    for (const auto& f : r.counterexamples) out.push_back(f);
    for (const auto& c : r.children) collect_fails(c, out);
}

bool has_named_fail(const Report& r) {
    std::vector<Finding> fs;
    collect_fails(r, fs);
    for (const auto& f : fs)
        if (!f.what.empty() && !f.ids.empty()) return true;
    return false;
}

const Report* child_named(const Report& r, const std::string& name) {
    for (const auto& c : r.children)
        if (c.check == name) return &c;
    return nullptr;
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Shared by every criterion body: first unmet condition becomes the detail.
struct Check {
    bool ok = true;
    std::string detail;

    void req(bool cond, const std::string& why) {
        if (cond || !ok) return;
        ok = false;
        detail = why;
    }
};

Check criterion1() {
    Check c;
    auto t0 = Clock::now();
    c.req(run_command({"check", "path-axioms", data_path("walking_arrow.cat")})
                  .exit_code == 0,
          "walking arrow rejected");
    c.req(run_command({"check", "path-axioms", data_path("interval.cat")})
                  .exit_code == 0,
          "interval rejected");
    for (const std::string name :
         {"corrupt_arrow_eq.cat", "corrupt_semilattice_eq.cat"}) {
        CommandResult res = run_command({"check", "path-axioms", data_path(name)});
        c.req(res.exit_code == 1, name + " not rejected");
        c.req(has_named_fail(res.report), name + " counterexample not named");
    }
    c.req(seconds_since(t0) < 5.0, "over 5s");
    return c;
}

Check criterion2() {
    Check c;
    auto t0 = Clock::now();
    int factored = 0;
    for (const Entry& e : path_corpus()) {
        const FiniteCategory& cat = e.in.cat;
        MapClass heq = homotopy_equivalences(e.p);
        for (int m = 0; m < cat.n_mor(); ++m) {
            Factorization fac = factorize(e.p, m);
            c.req(cat.compose(fac.p_f, fac.w_f) == m,
                  e.name + ": legs do not compose to " + cat.mor_id(m));
            c.req(heq.members.count(fac.w_f) > 0,
                  e.name + ": left leg not an equivalence for " + cat.mor_id(m));
            c.req(e.p.fib().members.count(fac.p_f) > 0,
                  e.name + ": right leg not a fibration for " + cat.mor_id(m));
            ++factored;
        }
    }
    c.req(factored > 0, "nothing factored");
    c.req(seconds_since(t0) < 10.0, "over 10s");
    return c;
}

Check criterion3() {
    Check c;
    auto t0 = Clock::now();
    int solved = 0;
    for (const Entry& e : path_corpus()) {
        const FiniteCategory& cat = e.in.cat;
        for (int w : e.p.eq.members)
            for (int f = 0; f < cat.n_mor(); ++f) {
                if (cat.dom(f) != cat.dom(w)) continue;
                for (int p : e.p.fib().members) {
                    if (cat.dom(p) != cat.cod(f)) continue;
                    int lower = cat.compose(p, f);
                    for (int sigma = 0; sigma < cat.n_mor(); ++sigma) {
                        if (cat.dom(sigma) != cat.cod(w) ||
                            cat.cod(sigma) != cat.cod(p))
                            continue;
                        if (cat.compose(sigma, w) != lower) continue;
                        LiftProblem prob{w, f, p, sigma};
                        LiftSolution sol;
                        try {
                            sol = lift(e.p, prob);
                        } catch (const CatError& err) {
                            std::string msg = err.what();
                            if (msg.rfind("no lift found", 0) == 0) continue;
                            c.req(false, e.name + ": " + msg);
                            continue;
                        }
                        for (size_t i = 0; i < sol.candidates.size(); ++i)
                            for (size_t j = i + 1; j < sol.candidates.size(); ++j)
                                c.req(homotopic(e.p, sol.candidates[i],
                                                sol.candidates[j], prob.p)
                                          .has_value(),
                                      e.name + ": lifts of " + cat.mor_id(f) +
                                          " not homotopic");
                        ++solved;
                    }
                }
            }
    }
    c.req(solved > 0, "no solvable problems found");
    c.req(seconds_since(t0) < 30.0, "over 30s");
    return c;
}

Check criterion4() {
    Check c;
    std::optional<std::vector<bool>> vec;
    for (const std::string name : {"one_object.cat", "walking_arrow.cat",
                                   "three_chain.cat", "semilattice.cat",
                                   "interval.cat"}) {
        Input in = load_file(data_path(name));
        Report r = check_equivalent_axioms(dispcat_from(in),
                                           equivalence_class_from(in));
        std::vector<bool> v;
        for (const auto& ch : r.children)
            if (ch.check != "preconditions") v.push_back(ch.pass);
        c.req(v.size() == 5, name + ": matrix not computed");
        if (!vec) vec = v;
        c.req(*vec == v, name + ": verdict vector differs");
    }

    int towers = 0;
    for (const Entry& e : path_corpus()) {
        const FiniteCategory& cat = e.in.cat;
        auto term = terminal_object(cat);
        if (!term) continue;
        // Towers of fibrations reaching the root, length 1 to 3.
        std::vector<std::vector<int>> stack;
        for (int d : e.p.fib().members)
            if (cat.cod(d) == *term) stack.push_back({d});
        while (!stack.empty()) {
            std::vector<int> tower = stack.back();
            stack.pop_back();
            auto PA = path_object_for(e.p, unique_to_terminal(cat, *term));
            c.req(PA.has_value(), e.name + ": root has no path object");
            if (!PA) break;
            int top = *term;
            bool built = true;
            for (int d : tower) {
                auto PAB = path_object_for(e.p, d);
                c.req(PAB.has_value(),
                      e.name + ": no fibrewise path object for " + cat.mor_id(d));
                if (!PAB) {
                    built = false;
                    break;
                }
                PathObjectWitness next =
                    synthesize_path_fibration(e.p, d, *PA, *PAB);
                top = cat.dom(d);
                PA = next;
            }
            if (built) {
                c.req(valid_path_object(cat, e.p.fib(), e.p.eq,
                                        unique_to_terminal(cat, top), *PA),
                      e.name + ": synthesized witness invalid");
                ++towers;
            }
            if (tower.size() < 3) {
                int bottom = cat.dom(tower.back());
                for (int d : e.p.fib().members)
                    if (cat.cod(d) == bottom) {
                        auto ext = tower;
                        ext.push_back(d);
                        stack.push_back(std::move(ext));
                    }
            }
        }
    }
    c.req(towers > 0, "no towers synthesized");
    return c;
}

Check criterion5() {
    Check c;
    for (const Entry& e : path_corpus()) {
        const FiniteCategory& cat = e.in.cat;
        IdProvider provider = id_provider(e.p);
        bool ext = e.p.eq.members == iso_class(cat).members;
        for (int m : e.p.fib().members) {
            IdStructure s = provider(TypeOver{m});
            c.req(check_id_structure(e.p.clan, s, IdFlavor::axiomatic).pass,
                  e.name + ": axiomatic laws fail for " + cat.mor_id(m));
            if (ext)
                c.req(check_id_structure(e.p.clan, s, IdFlavor::extensional).pass,
                      e.name + ": extensional laws fail for " + cat.mor_id(m));
        }
        StabilityReport sr = check_weak_stability_id(e.p.clan, provider);
        c.req(sr.all_stable(), e.name + ": weak stability fails");
        c.req(!sr.verdicts.empty(), e.name + ": no stability instances");
        for (const auto& v : sr.verdicts) {
            c.req(v.to_reindexed >= 0 && v.to_substituted >= 0,
                  e.name + ": comparison arrow missing");
        }
    }
    return c;
}

Check criterion6() {
    Check c;
    for (const Entry& e : path_corpus())
        c.req(roundtrip_check(e.p).pass, e.name + ": roundtrip not the identity");
    return c;
}

Check criterion7() {
    Check c;
    for (const std::string name :
         {"walking_arrow_structured.cat", "semilattice_structured.cat"}) {
        Input in = load_file(data_path(name));
        DispCat d = dispcat_from(in);
        SplitResult s = left_adjoint_split(d);
        c.req(s.verification.pass, name + ": splitting verification fails");
        c.req(check_split(s.split).pass, name + ": split laws fail");
        c.req(check_1cell(s.unit, d, s.split.disp).pass,
              name + ": unit functor fails");
    }
    Input in = load_file(data_path("walking_arrow_structured.cat"));
    Report coh = verify_coherence_closure(left_adjoint_split(dispcat_from(in)).split);
    c.req(coh.pass, "coherence closure fails");
    for (const std::string part :
         {"roots", "compositions", "pullbacks", "identities"}) {
        const Report* ch = child_named(coh, part);
        c.req(ch != nullptr && ch->pass, "coherence case missing: " + part);
    }
    return c;
}

Check criterion8() {
    Check c;
    Enumeration empty = enumerate_closed_terms(type_S(gen("r'")), 4);
    c.req(empty.terms.empty() && empty.saturating, "S(r') not saturating empty");
    Enumeration one = enumerate_closed_terms(type_S(gen("r")), 4);
    c.req(one.terms.size() == 1 && to_string(one.terms[0]) == "s",
          "S(r) misenumerated");
    Report cov = check_elimination_coverage(3);
    c.req(cov.pass, "elimination coverage fails");
    bool beta = false;
    for (const auto& w : cov.witnesses)
        if (w.what == "computation rule holds definitionally") beta = true;
    c.req(beta, "computation rule not verified");
    auto t0 = Clock::now();
    c.req(run_command({"counterexample"}).exit_code == 0, "counterexample fails");
    c.req(seconds_since(t0) < 1.0, "counterexample over 1s");
    return c;
}

Check criterion9() {
    Check c;
    int compared = 0;
    for (const Entry& e : path_corpus()) {
        const FiniteCategory& cat = e.in.cat;
        for (int G = 0; G < cat.n_obj(); ++G) {
            auto ws = all_path_objects(cat, e.p.fib(), e.p.eq,
                                       unique_to_terminal(cat, G));
            if (ws.size() < 2) continue;
            std::optional<std::set<std::pair<int, int>>> rel;
            for (const auto& w : ws) {
                std::set<std::pair<int, int>> pairs;
                for (int f = 0; f < cat.n_mor(); ++f) {
                    if (cat.cod(f) != G) continue;
                    for (int g = 0; g < cat.n_mor(); ++g) {
                        if (cat.cod(g) != G || cat.dom(g) != cat.dom(f)) continue;
                        for (int h : cat.hom(cat.dom(f), w.P))
                            if (cat.compose(w.s, h) == f &&
                                cat.compose(w.t, h) == g) {
                                pairs.insert({f, g});
                                break;
                            }
                    }
                }
                if (!rel)
                    rel = std::move(pairs);
                else
                    c.req(*rel == pairs, e.name + ": homotopy relation depends on "
                                         "the witness at " + cat.obj_id(G));
            }
            ++compared;
        }
    }
    c.req(compared > 0, "no object offered two witnesses");
    return c;
}

Check criterion10() {
    const std::vector<std::vector<std::string>> battery = {
        {"validate", data_path("semilattice.cat")},
        {"check", "path-axioms", data_path("walking_arrow.cat")},
        {"check", "dmpc", data_path("interval.cat")},
        {"check", "root", data_path("three_chain.cat")},
        {"check", "split", data_path("walking_arrow_structured.cat")},
        {"check", "lf", data_path("one_object.cat")},
        {"check", "stability", data_path("walking_arrow.cat")},
        {"derive", "id-types", data_path("interval.cat")},
        {"factorize", data_path("semilattice.cat"), "bot_top"},
        {"lift", data_path("interval.cat"), "f", "f", "id_b", "id_b"},
        {"synthesize", "pf", data_path("three_chain.cat"), "bc", "ab"},
        {"translate", "to-disp", data_path("walking_arrow.cat")},
        {"translate", "to-path", data_path("semilattice_structured.cat")},
        {"roundtrip", data_path("interval.cat")},
        {"split", data_path("semilattice_structured.cat")},
        {"coherence", data_path("walking_arrow_structured.cat")},
        {"counterexample"},
        {"matrix", data_path("semilattice.cat")}};
    auto sweep = [&] {
        std::string all;
        for (const auto& cmd : battery) {
            CommandResult res = run_command(cmd);
            all += std::to_string(res.exit_code) + "\n";
            all += res.report.to_json().dump(2) + "\n";
        }
        return all;
    };
    Check c;
    c.req(sweep() == sweep(), "reports differ between runs");
    return c;
}

}  // namespace

int main() {
    struct Row {
        const char* label;
        Check (*fn)();
    };
    const std::vector<Row> rows = {
        {"path axioms accepted and corrupted fixtures rejected", criterion1},
        {"every morphism factors as equivalence then fibration", criterion2},
        {"lifts exist and agree up to fibrewise homotopy", criterion3},
        {"axiom matrix constant and towers synthesize", criterion4},
        {"identity structures derived, verified, weakly stable", criterion5},
        {"translation round trip is the identity", criterion6},
        {"splitting strict, unit a 1-cell, coherence closed", criterion7},
        {"base theory enumerations and underivability", criterion8},
        {"homotopy relation independent of the witness", criterion9},
        {"byte-identical reports across runs", criterion10},
    };
    int failures = 0;
    for (size_t i = 0; i < rows.size(); ++i) {
        Check c;
        try {
            c = rows[i].fn();
        } catch (const std::exception& e) {
            c.ok = false;
            c.detail = e.what();
        }
        std::printf("%s criterion %2zu: %s%s%s\n", c.ok ? "[pass]" : "[FAIL]",
                    i + 1, rows[i].label, c.detail.empty() ? "" : " -- ",
                    c.detail.c_str());
        if (!c.ok) ++failures;
    }
    if (failures) std::printf("%d of %zu criteria failed\n", failures, rows.size());
    return failures ? 1 : 0;
}
