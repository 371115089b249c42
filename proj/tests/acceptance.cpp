// Acceptance suite: ten stand-alone criteria, one PASS/FAIL line each.
// Exits with the number of failed criteria. No test framework on purpose:
// the output is meant to be read (and parsed) as a checklist.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "testutil.hpp"

using namespace torcol;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
    std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", criterion, detail.c_str());
    if (!ok) ++failures;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_secs(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", s);
    return buf;
}

}  // namespace

int main() {
    // ---- 1: initial charges sum to 2*genus - 2 on every corpus embedding.
    auto t1 = Clock::now();
    std::vector<testutil::NamedEmbedding> corpus = testutil::build_embedded_corpus();
    std::string bad;
    for (const auto& entry : corpus) {
        ChargeState s = initial_charges(entry.emb);
        if (!(s.total() == Rat(2) * entry.emb.genus() - 2)) {
            bad = entry.name;
            break;
        }
    }
    double e1 = seconds_since(t1);
    report(1, bad.empty() && e1 < 1.0,
           bad.empty()
               ? "charge identity holds on all " + std::to_string(corpus.size()) +
                     " embeddings, " + fmt_secs(e1) + "s (budget 1s)"
               : "charge identity fails on " + bad);

    // ---- 2: exact conservation and ledger replay, built-in and random
    // rule sets, the random ones via actual files.
    auto t2 = Clock::now();
    std::vector<RuleSet> sets{builtin_rules(1), builtin_rules(2)};
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        std::string path = testutil::write_temp("acceptance_" + std::to_string(seed) + ".rules",
                                                emit_rules(testutil::random_rule_set(seed)));
        sets.push_back(parse_rules(testutil::slurp(path)));
    }
    bad.clear();
    for (const auto& entry : corpus) {
        Rat expected = Rat(2) * entry.emb.genus() - 2;
        for (std::size_t r = 0; r < sets.size() && bad.empty(); ++r) {
            auto [state, ledger] = apply_discharging(entry.emb, sets[r]);
            if (!(state.total() == expected)) bad = entry.name + ": total drifted";
            ChargeState replayed = replay_ledger(initial_charges(entry.emb), ledger);
            if (replayed.vertex_charge != state.vertex_charge ||
                replayed.face_charge != state.face_charge)
                bad = entry.name + ": replay mismatch";
        }
        if (!bad.empty()) break;
    }
    double e2 = seconds_since(t2);
    report(2, bad.empty() && e2 < 5.0,
           bad.empty() ? std::to_string(sets.size()) + " rule sets conserve and replay on " +
                             std::to_string(corpus.size()) + " embeddings, " + fmt_secs(e2) +
                             "s (budget 5s)"
                       : bad);

    // ---- 3: the worked 4x4 torus grid discharge, element by element.
    {
        EmbeddedGraph grid = gen_torus_grid(4, 4);
        auto [state, ledger] = apply_discharging(grid, builtin_rules(1));
        bool ok = true;
        for (const Rat& c : state.vertex_charge) ok = ok && c == Rat(-1, 3);
        for (const Rat& c : state.face_charge) ok = ok && c == Rat(1, 3);
        report(3, ok, ok ? "4x4 torus grid, case 1: every vertex -1/3, every face +1/3"
                         : "4x4 torus grid, case 1: charges differ from the hand computation");
    }

    // ---- 4: guaranteed small-face bounds are strictly positive.
    {
        bool ok = true;
        std::string values;
        for (const auto& t : discharging_bound_templates()) {
            ok = ok && t.bound.positive();
            if (!values.empty()) values += ", ";
            values += t.id + "=" + t.bound.str();
        }
        report(4, ok, (ok ? "all five bound templates positive: " : "nonpositive bound among: ") +
                          values);
    }

    // ---- 5: every in-class corpus graph is recognized and reducible.
    auto t5 = Clock::now();
    std::vector<testutil::NamedEmbedding> members = testutil::build_in_class_corpus();
    bad.clear();
    for (const auto& entry : members) {
        if (!class_membership(entry.emb).in_class) {
            bad = entry.name + ": not recognized as in-class";
            break;
        }
        if (!find_reducible_configuration(entry.emb.graph())) {
            bad = entry.name + ": no reducible configuration found";
            break;
        }
    }
    double e5 = seconds_since(t5);
    report(5, bad.empty() && members.size() >= 100 && e5 < 10.0,
           bad.empty() ? std::to_string(members.size()) +
                             " in-class graphs all recognized and reducible, " + fmt_secs(e5) +
                             "s (budget 10s)"
                       : bad);

    // ---- 6: reduce-and-color succeeds and verifies on 100 seeded list
    // assignments per in-class graph.
    auto t6 = Clock::now();
    bad.clear();
    long runs = 0;
    for (std::size_t i = 0; i < members.size() && bad.empty(); ++i) {
        const Graph& g = members[i].emb.graph();
        int n = g.vertex_count();
        for (int t = 0; t < 100; ++t) {
            ListAssignment la = random_lists(n, 3, 6, (i + 1) * 10000ULL + t);
            ReductionOutcome out = reduce_and_color(g, la);
            if (!out.succeeded() ||
                !verify_coloring(g, la, *out.coloring, 1).ok) {
                bad = members[i].name + " seed " + std::to_string((i + 1) * 10000ULL + t);
                break;
            }
            ++runs;
        }
    }
    double e6 = seconds_since(t6);
    report(6, bad.empty() && e6 < 60.0,
           bad.empty() ? std::to_string(runs) + " reductions all colored and verified at d=1, " +
                             fmt_secs(e6) + "s (budget 60s)"
                       : "reduction failed on " + bad);

    // ---- 7: oracle ground truths, double-checked by plain enumeration.
    {
        Graph k7 = testutil::complete_graph(7);
        Graph k5 = testutil::complete_graph(5);
        Graph c5 = testutil::cycle_graph(5);
        ListAssignment l7 = ListAssignment::uniform(7, {1, 2, 3});
        ListAssignment l5 = ListAssignment::uniform(5, {1, 2, 3});
        ListAssignment l2 = ListAssignment::uniform(5, {1, 2});

        OracleResult r7 = oracle_solve(k7, l7, 1);
        OracleResult r5 = oracle_solve(k5, l5, 1);
        OracleResult rc = oracle_solve(c5, l2, 1);
        auto n7 = testutil::naive_list_coloring(k7, l7.lists, 1);
        auto n5 = testutil::naive_list_coloring(k5, l5.lists, 1);
        auto nc = testutil::naive_list_coloring(c5, l2.lists, 1);

        bool ok = !r7.satisfiable && !n7.has_value();
        ok = ok && r5.satisfiable && n5.has_value() && r5.witness->colors == *n5 &&
             verify_coloring(k5, l5, *r5.witness, 1).ok;
        ok = ok && rc.satisfiable && nc.has_value() && rc.witness->colors == *nc &&
             verify_coloring(c5, l2, *rc.witness, 1).ok;
        report(7, ok,
               ok ? "K7/3-lists unsatisfiable, K5/3-lists and C5/2-lists satisfiable, "
                    "oracle and enumeration agree"
                  : "oracle verdicts disagree with plain enumeration");
    }

    // ---- 8: oracle and constructive reduction agree on small graphs.
    {
        bad.clear();
        int checked = 0, both_sat = 0;
        for (std::size_t i = 0; i < members.size() && bad.empty(); ++i) {
            const Graph& g = members[i].emb.graph();
            int n = g.vertex_count();
            if (n > 12) continue;
            for (int t = 0; t < 10; ++t) {
                ListAssignment la = random_lists(n, 3, 6, 777000ULL + i * 100 + t);
                bool sat = oracle_solve(g, la, 1).satisfiable;
                bool reduced = reduce_and_color(g, la).succeeded();
                if (sat != reduced) {
                    bad = members[i].name + " trial " + std::to_string(t);
                    break;
                }
                ++checked;
                if (sat) ++both_sat;
            }
        }
        bool ok = bad.empty() && checked > 0 && both_sat == checked;
        report(8, ok,
               ok ? "oracle and reduction agree (all satisfiable) on " + std::to_string(checked) +
                        " small-graph trials"
                  : (bad.empty() ? "agreement held but some trials were unsatisfiable"
                                 : "disagreement on " + bad));
    }

    // ---- 9: incidence bounds implied by the observations.
    {
        std::vector<testutil::NamedEmbedding> sweep = corpus;
        sweep.push_back({"obs-case1", testutil::obs_case1_fixture()});
        sweep.push_back({"obs-case2", testutil::obs_case2_fixture()});
        sweep.push_back({"obs-case2-quad", testutil::obs_case2_quad_fixture()});
        bad.clear();
        int case1 = 0, case2 = 0, with_small = 0;
        for (const auto& entry : sweep) {
            const Graph& g = entry.emb.graph();
            if (verify_observations(entry.emb, 1).all_passed()) {
                ++case1;
                for (int v = 0; v < g.vertex_count() && bad.empty(); ++v) {
                    IncidenceCounts c = incidence_counts(entry.emb, v);
                    int k = g.degree(v);
                    if (c.r_v > k / 2)
                        bad = entry.name + ": vertex " + std::to_string(v) + " has r_v " +
                              std::to_string(c.r_v) + " > floor(" + std::to_string(k) + "/2)";
                    if (c.r_v > 0) ++with_small;
                }
            }
            if (verify_observations(entry.emb, 2).all_passed()) {
                ++case2;
                for (int v = 0; v < g.vertex_count() && bad.empty(); ++v) {
                    IncidenceCounts c = incidence_counts(entry.emb, v);
                    int k = g.degree(v);
                    if (c.r1 > 2 * k / 3)
                        bad = entry.name + ": vertex " + std::to_string(v) + " has r1 " +
                              std::to_string(c.r1) + " > floor(2*" + std::to_string(k) + "/3)";
                    if (3 * ((c.r1 + 1) / 2) + c.r2 > k + 1)
                        bad = entry.name + ": vertex " + std::to_string(v) +
                              " violates 3*ceil(r1/2)+r2 <= k+1";
                }
            }
            if (!bad.empty()) break;
        }
        bool ok = bad.empty() && case1 > 0 && case2 > 0 && with_small > 0;
        report(9, ok,
               ok ? "incidence bounds hold on " + std::to_string(case1) + " case-1 and " +
                        std::to_string(case2) + " case-2 embeddings"
                  : (bad.empty() ? "bounds vacuous: no embedding passed the observations" : bad));
    }

    // ---- 10: byte-exact round-trips of all five formats on emitter output.
    {
        bad.clear();
        for (std::size_t i = 0; i < corpus.size() && bad.empty(); ++i) {
            const auto& entry = corpus[i];
            const Graph& g = entry.emb.graph();
            int n = g.vertex_count();

            std::string g6 = emit_graph6(g);
            if (parse_graph6(g6).edges() != g.edges() || emit_graph6(parse_graph6(g6)) != g6)
                bad = entry.name + ": graph6";

            std::string rot = emit_rotation(entry.emb);
            if (bad.empty() &&
                (!(parse_rotation(rot) == entry.emb) || emit_rotation(parse_rotation(rot)) != rot))
                bad = entry.name + ": rotation";

            TokenMap names;
            for (int c = 0; c < 6; ++c) names.intern(std::to_string(c));
            std::string lists = emit_lists(random_lists(n, 3, 6, i + 1), names);
            TokenMap fresh1;
            if (bad.empty() && emit_lists(parse_lists(lists, n, fresh1), fresh1) != lists)
                bad = entry.name + ": lists";

            std::vector<int> colors(n);
            for (int v = 0; v < n; ++v) colors[v] = v % 3;
            std::string coloring = emit_coloring(colors, names);
            TokenMap fresh2;
            if (bad.empty() &&
                emit_coloring(parse_coloring(coloring, n, fresh2), fresh2) != coloring)
                bad = entry.name + ": coloring";
        }
        if (bad.empty()) {
            for (std::size_t r = 0; r < sets.size() && bad.empty(); ++r) {
                std::string text = emit_rules(sets[r]);
                if (emit_rules(parse_rules(text)) != text)
                    bad = "rule set " + std::to_string(r) + ": rules";
            }
        }
        report(10, bad.empty(),
               bad.empty() ? "graph6, rotation, list, coloring, and rule files round-trip "
                             "byte-exactly across the corpus"
                           : "round-trip broke on " + bad);
    }

    return failures;
}
