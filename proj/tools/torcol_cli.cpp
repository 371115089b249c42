#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "torcol/torcol.hpp"

namespace {

using namespace torcol;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open " + path + " for writing");
    out << content;
    if (!out) throw Error("failed writing " + path);
}

/// Input kind is detected from content, not extension: a rotation file
/// starts with the header token "n", anything else is treated as graph6.
struct Input {
    Graph graph;
    std::optional<EmbeddedGraph> embedding;
};

bool looks_like_rotation(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    while (std::getline(in, raw)) {
        auto toks = detail::split_tokens(detail::strip_comment(raw));
        if (toks.empty()) continue;
        return toks[0].text == "n";
    }
    return false;
}

Input load_input(const std::string& path) {
    std::string text = read_file(path);
    if (looks_like_rotation(text)) {
        EmbeddedGraph e = parse_rotation(text);
        Graph g = e.graph();
        return {std::move(g), std::move(e)};
    }
    return {parse_graph6(text), std::nullopt};
}

const EmbeddedGraph& need_embedding(const Input& in, const char* cmd) {
    if (!in.embedding)
        throw EmbeddingRequired(std::string(cmd) +
                                " needs a rotation-system input, got a plain graph");
    return *in.embedding;
}

const char* bs(bool b) { return b ? "true" : "false"; }

std::string join(const std::vector<int>& v, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(v[i]);
    }
    return out;
}

struct ListOpts {
    std::string path;
    bool random = false;
    int size = 3;
    int pool = 6;
    std::uint64_t seed = 0;
    bool seed_set = false;
};

void add_list_options(CLI::App* cmd, ListOpts& o) {
    auto* lists = cmd->add_option("--lists", o.path, "color lists file");
    auto* random = cmd->add_flag("--random-lists", o.random, "draw seeded random lists");
    lists->excludes(random);
    random->excludes(lists);
    cmd->add_option("--size", o.size, "random list size (default 3)")->needs(random);
    cmd->add_option("--pool", o.pool, "random color pool (default 6)")->needs(random);
    cmd->add_option("--seed", o.seed, "random seed")
        ->needs(random)
        ->each([&o](const std::string&) { o.seed_set = true; });
}

std::pair<ListAssignment, TokenMap> acquire_lists(const ListOpts& o, int n, bool machine) {
    TokenMap map;
    if (!o.path.empty()) {
        ListAssignment la = parse_lists(read_file(o.path), n, map);
        return {std::move(la), std::move(map)};
    }
    if (!o.random) throw Error("one of --lists or --random-lists is required");
    if (machine && !o.seed_set)
        throw Error("--seed is required with --random-lists in machine mode");
    ListAssignment la = random_lists(n, o.size, o.pool, o.seed);
    for (int c = 0; c < o.pool; ++c) map.intern(std::to_string(c));
    return {std::move(la), std::move(map)};
}

int run_faces(const std::string& input, bool machine) {
    Input in = load_input(input);
    const EmbeddedGraph& e = need_embedding(in, "faces");
    const FaceSet& fs = e.faces();
    if (machine) {
        std::cout << "vertices=" << e.graph().vertex_count() << "\n"
                  << "edges=" << e.graph().edge_count() << "\n"
                  << "faces=" << fs.face_count() << "\n"
                  << "genus=" << e.genus() << "\n";
        for (int f = 0; f < fs.face_count(); ++f)
            std::cout << "face." << f << ".degree=" << fs.degree(f) << "\n"
                      << "face." << f << ".corners=" << join(fs.corners(f), ",") << "\n";
    } else {
        std::cout << "vertices " << e.graph().vertex_count() << ", edges "
                  << e.graph().edge_count() << ", faces " << fs.face_count() << ", genus "
                  << e.genus() << "\n";
        for (int f = 0; f < fs.face_count(); ++f)
            std::cout << "face " << f << ": degree " << fs.degree(f) << ", corners "
                      << join(fs.corners(f), " ") << "\n";
    }
    return 0;
}

int run_class(const std::string& input, const std::string& mode, bool machine) {
    Input in = load_input(input);
    const EmbeddedGraph& e = need_embedding(in, "class");
    TriangleMode tm = mode == "faces" ? TriangleMode::faces : TriangleMode::cycles;
    ClassReport r = class_membership(e, tm);
    std::string l = r.qualifying_l.empty() ? "none" : join(r.qualifying_l, ",");
    if (machine) {
        std::cout << "genus=" << e.genus() << "\n"
                  << "genus_ok=" << bs(r.genus_ok) << "\n"
                  << "min_degree=" << r.min_degree << "\n"
                  << "adjacent_triangles=" << bs(r.adjacent_triangles) << "\n"
                  << "cycle5=" << bs(r.has_cycle5) << "\n"
                  << "cycle6=" << bs(r.has_cycle6) << "\n"
                  << "cycle7=" << bs(r.has_cycle7) << "\n"
                  << "qualifying_l=" << l << "\n"
                  << "in_class=" << bs(r.in_class) << "\n";
    } else {
        std::cout << "genus " << e.genus() << (r.genus_ok ? " (at most 1)" : " (above 1)") << "\n"
                  << "min degree " << r.min_degree << "\n"
                  << "adjacent triangles: " << (r.adjacent_triangles ? "yes" : "no") << "\n"
                  << "cycles of length 5/6/7: " << (r.has_cycle5 ? "yes" : "no") << "/"
                  << (r.has_cycle6 ? "yes" : "no") << "/" << (r.has_cycle7 ? "yes" : "no") << "\n"
                  << "excluded length l: " << l << "\n"
                  << "in class: " << (r.in_class ? "yes" : "no") << "\n";
    }
    return r.in_class ? 0 : 1;
}

int run_configs(const std::string& input, bool machine) {
    Input in = load_input(input);
    auto cfgs = enumerate_configurations(in.graph, in.embedding ? &*in.embedding : nullptr);
    if (machine) {
        std::cout << "count=" << cfgs.size() << "\n";
        for (std::size_t i = 0; i < cfgs.size(); ++i) {
            std::cout << "config." << i << ".kind=" << config_kind_name(cfgs[i].kind) << "\n"
                      << "config." << i << ".witness=" << join(cfgs[i].witness, ",") << "\n"
                      << "config." << i << ".face="
                      << (cfgs[i].face_id ? std::to_string(*cfgs[i].face_id) : "-") << "\n";
        }
    } else {
        std::cout << cfgs.size() << " reducible configuration"
                  << (cfgs.size() == 1 ? "" : "s") << "\n";
        for (const auto& c : cfgs) {
            std::cout << config_kind_name(c.kind) << ": witness " << join(c.witness, " ");
            if (c.face_id) std::cout << ", face " << *c.face_id;
            std::cout << "\n";
        }
    }
    return cfgs.empty() ? 1 : 0;
}

int run_discharge(const std::string& input, int case_id, const std::string& rules_path,
                  bool show_ledger, bool machine) {
    Input in = load_input(input);
    const EmbeddedGraph& e = need_embedding(in, "discharge");
    RuleSet rules;
    std::optional<ObservationReport> obs;
    if (case_id != 0 && !rules_path.empty())
        throw Error("--case and --rules are mutually exclusive");
    if (case_id != 0) {
        rules = builtin_rules(case_id);
        obs = verify_observations(e, case_id);
    } else if (!rules_path.empty()) {
        rules = parse_rules(read_file(rules_path));
    } else {
        throw Error("one of --case or --rules is required");
    }

    auto [state, ledger] = apply_discharging(e, rules);
    AuditReport a = audit(state, e);

    bool templates_ok = true;
    for (const auto& t : a.templates)
        if (!t.bound.positive()) templates_ok = false;

    if (machine) {
        if (case_id != 0) std::cout << "case=" << case_id << "\n";
        if (obs) {
            for (const auto& o : obs->observations) {
                std::cout << "observation." << o.id << "=" << (o.passed ? "pass" : "fail")
                          << "\n";
                if (!o.passed)
                    std::cout << "observation." << o.id << ".witness=" << o.witness << "\n";
            }
        }
        std::cout << "total=" << a.total.str() << "\n"
                  << "expected=" << a.expected.str() << "\n"
                  << "conserved=" << bs(a.conserved) << "\n"
                  << "negatives=" << a.negatives.size() << "\n";
        for (std::size_t i = 0; i < a.negatives.size(); ++i) {
            std::cout << "negative." << i << ".kind="
                      << (a.negatives[i].is_face ? "face" : "vertex") << "\n"
                      << "negative." << i << ".id=" << a.negatives[i].id << "\n"
                      << "negative." << i << ".value=" << a.negatives[i].value.str() << "\n";
        }
        for (const auto& t : a.templates)
            std::cout << "template." << t.id << ".bound=" << t.bound.str() << "\n"
                      << "template." << t.id << ".positive=" << bs(t.bound.positive()) << "\n";
        for (const auto& f : a.small_faces) {
            std::cout << "face." << f.face << ".degree=" << f.degree << "\n"
                      << "face." << f.face << ".templates=";
            if (f.applicable.empty()) {
                std::cout << "none";
            } else {
                for (std::size_t i = 0; i < f.applicable.size(); ++i)
                    std::cout << (i ? "," : "") << f.applicable[i];
            }
            std::cout << "\n";
        }
        if (show_ledger) {
            std::cout << "transfers=" << ledger.entries.size() << "\n";
            for (std::size_t i = 0; i < ledger.entries.size(); ++i) {
                const Transfer& t = ledger.entries[i];
                std::cout << "transfer." << i << "="
                          << (t.source_kind == SourceKind::Vertex ? "vertex" : "face") << ":"
                          << t.source_id << "->" << t.target_face << ":" << t.amount.str()
                          << ":" << t.rule_id << "\n";
            }
        }
    } else {
        if (obs) {
            std::cout << "observations (case " << case_id << "):\n";
            for (const auto& o : obs->observations) {
                std::cout << "  " << o.id << ": " << (o.passed ? "pass" : "fail");
                if (!o.passed) std::cout << "  " << o.witness;
                std::cout << "\n";
            }
        }
        std::cout << a.str();
        if (show_ledger) {
            std::cout << "transfers (" << ledger.entries.size() << "):\n";
            for (const Transfer& t : ledger.entries)
                std::cout << "  " << t.rule_id << ": "
                          << (t.source_kind == SourceKind::Vertex ? "vertex " : "face ")
                          << t.source_id << " -> face " << t.target_face << ": "
                          << t.amount.str() << "\n";
        }
    }

    bool ok = a.conserved && a.negatives.empty() && templates_ok &&
              (!obs || obs->all_passed());
    return ok ? 0 : 1;
}

int run_color(const std::string& input, const ListOpts& lo, const std::string& out_path,
              bool machine) {
    Input in = load_input(input);
    int n = in.graph.vertex_count();
    auto [lists, map] = acquire_lists(lo, n, machine);
    ReductionOutcome res = reduce_and_color(in.graph, lists);

    if (!res.succeeded()) {
        const StuckReport& s = *res.stuck;
        if (machine) {
            std::cout << "ok=false\n"
                      << "remaining=" << s.remaining.size() << "\n"
                      << "remaining_ids=" << join(s.remaining, ",") << "\n"
                      << "min_degree=" << s.min_degree << "\n";
        } else {
            std::cout << "stuck: no reducible configuration among " << s.remaining.size()
                      << " remaining vertices (min degree " << s.min_degree << ")\n"
                      << "remaining: " << join(s.remaining, " ") << "\n";
        }
        return 1;
    }

    Verdict v = verify_coloring(in.graph, lists, *res.coloring, 1);
    std::string body = emit_coloring(res.coloring->colors, map);
    if (!out_path.empty()) write_file(out_path, body);
    if (machine) {
        std::cout << "ok=true\n"
                  << "vertices=" << n << "\n"
                  << "steps=" << res.trace.steps.size() << "\n"
                  << "impropriety=1\n"
                  << "verified=" << bs(v.ok) << "\n";
        if (lo.random) std::cout << "seed=" << lo.seed << "\n";
        if (!out_path.empty()) {
            std::cout << "out=" << out_path << "\n";
        } else {
            for (int u = 0; u < n; ++u)
                std::cout << "color." << u << "=" << map.name(res.coloring->colors[u]) << "\n";
        }
    } else {
        std::cout << "colored " << n << " vertices in " << res.trace.steps.size()
                  << " reduction steps, impropriety 1, verified: " << (v.ok ? "yes" : "no")
                  << "\n";
        if (!out_path.empty()) std::cout << "written to " << out_path << "\n";
        else std::cout << body;
    }
    return v.ok ? 0 : 1;
}

int run_oracle(const std::string& input, const ListOpts& lo, int d, std::uint64_t budget,
               const std::string& out_path, bool machine) {
    Input in = load_input(input);
    int n = in.graph.vertex_count();
    auto [lists, map] = acquire_lists(lo, n, machine);
    OracleOptions options;
    options.node_budget = budget;
    OracleResult r = oracle_solve(in.graph, lists, d, options);

    std::string body;
    if (r.satisfiable) {
        body = emit_coloring(r.witness->colors, map);
        if (!out_path.empty()) write_file(out_path, body);
    }
    if (machine) {
        std::cout << "satisfiable=" << bs(r.satisfiable) << "\n"
                  << "d=" << d << "\n"
                  << "nodes=" << r.nodes << "\n";
        if (r.satisfiable) {
            if (!out_path.empty()) {
                std::cout << "out=" << out_path << "\n";
            } else {
                for (int u = 0; u < n; ++u)
                    std::cout << "color." << u << "=" << map.name(r.witness->colors[u]) << "\n";
            }
        }
    } else {
        std::cout << (r.satisfiable ? "satisfiable" : "unsatisfiable") << " with impropriety "
                  << d << " (" << r.nodes << " nodes searched)\n";
        if (r.satisfiable) {
            if (!out_path.empty()) std::cout << "written to " << out_path << "\n";
            else std::cout << body;
        }
    }
    return r.satisfiable ? 0 : 1;
}

int run_verify(const std::string& input, const std::string& lists_path,
               const std::string& coloring_path, int d, bool machine) {
    Input in = load_input(input);
    int n = in.graph.vertex_count();
    TokenMap map;
    ListAssignment lists = parse_lists(read_file(lists_path), n, map);
    std::vector<int> colors = parse_coloring(read_file(coloring_path), n, map);
    Verdict v = verify_coloring(in.graph, lists, DefectiveColoring{colors, d}, d);
    if (machine) {
        std::cout << "ok=" << bs(v.ok) << "\n"
                  << "d=" << d << "\n"
                  << "violations=" << v.violations.size() << "\n";
        for (std::size_t i = 0; i < v.violations.size(); ++i) {
            const Violation& x = v.violations[i];
            std::cout << "violation." << i << ".type="
                      << (x.type == Violation::Type::OffList ? "off-list" : "defect") << "\n"
                      << "violation." << i << ".vertex=" << x.vertex << "\n";
            if (x.type == Violation::Type::DefectExceeded)
                std::cout << "violation." << i << ".count=" << x.count << "\n";
        }
    } else {
        if (v.ok) {
            std::cout << "valid: every color on its list, at most " << d
                      << " same-colored neighbors per vertex\n";
        } else {
            std::cout << v.violations.size() << " violation"
                      << (v.violations.size() == 1 ? "" : "s") << "\n";
            for (const Violation& x : v.violations) {
                if (x.type == Violation::Type::OffList)
                    std::cout << "vertex " << x.vertex << ": color not on its list\n";
                else
                    std::cout << "vertex " << x.vertex << ": " << x.count
                              << " same-colored neighbors, bound " << d << "\n";
            }
        }
    }
    return v.ok ? 0 : 1;
}

void emit_artifact(const std::string& body, const std::string& out_path) {
    if (!out_path.empty()) write_file(out_path, body);
    else std::cout << body;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"structure and defective list-coloring toolkit for torus-embedded graphs"};
    app.require_subcommand(1);

    std::string in_faces, in_class, in_configs, in_discharge, in_color, in_oracle, in_verify;
    bool m_faces = false, m_class = false, m_configs = false, m_discharge = false,
         m_color = false, m_oracle = false, m_verify = false;

    auto* c_faces = app.add_subcommand("faces", "trace faces and genus of a rotation system");
    c_faces->add_option("input", in_faces, "rotation file")->required();
    c_faces->add_flag("--machine", m_faces, "key=value output");

    auto* c_class = app.add_subcommand("class", "check class membership");
    c_class->add_option("input", in_class, "rotation file")->required();
    std::string triangle_mode = "cycles";
    c_class->add_option("--triangle-mode", triangle_mode, "triangle adjacency mode")
        ->check(CLI::IsMember({"cycles", "faces"}));
    c_class->add_flag("--machine", m_class, "key=value output");

    auto* c_configs = app.add_subcommand("configs", "enumerate reducible configurations");
    c_configs->add_option("input", in_configs, "graph6 or rotation file")->required();
    c_configs->add_flag("--machine", m_configs, "key=value output");

    auto* c_discharge = app.add_subcommand("discharge", "run a discharging and audit it");
    c_discharge->add_option("input", in_discharge, "rotation file")->required();
    int case_id = 0;
    std::string rules_path;
    bool show_ledger = false;
    c_discharge->add_option("--case", case_id, "built-in rule set (1 or 2)")
        ->check(CLI::IsMember({1, 2}));
    c_discharge->add_option("--rules", rules_path, "rule file");
    c_discharge->add_flag("--ledger", show_ledger, "print every transfer");
    c_discharge->add_flag("--machine", m_discharge, "key=value output");

    auto* c_color = app.add_subcommand("color", "constructive list coloring with impropriety 1");
    c_color->add_option("input", in_color, "graph6 or rotation file")->required();
    ListOpts lo_color;
    add_list_options(c_color, lo_color);
    std::string color_out;
    c_color->add_option("--out", color_out, "write the coloring to a file");
    c_color->add_flag("--machine", m_color, "key=value output");

    auto* c_oracle = app.add_subcommand("oracle", "exhaustive list-coloring search");
    c_oracle->add_option("input", in_oracle, "graph6 or rotation file")->required();
    ListOpts lo_oracle;
    add_list_options(c_oracle, lo_oracle);
    int oracle_d = 1;
    std::uint64_t oracle_budget = OracleOptions{}.node_budget;
    std::string oracle_out;
    c_oracle->add_option("--d", oracle_d, "impropriety bound (default 1)");
    c_oracle->add_option("--budget", oracle_budget, "search node budget");
    c_oracle->add_option("--out", oracle_out, "write the witness to a file");
    c_oracle->add_flag("--machine", m_oracle, "key=value output");

    auto* c_verify = app.add_subcommand("verify", "check a coloring against lists and bound");
    c_verify->add_option("input", in_verify, "graph6 or rotation file")->required();
    std::string verify_lists, verify_coloring;
    int verify_d = 1;
    c_verify->add_option("--lists", verify_lists, "color lists file")->required();
    c_verify->add_option("--coloring", verify_coloring, "coloring file")->required();
    c_verify->add_option("--d", verify_d, "impropriety bound (default 1)");
    c_verify->add_flag("--machine", m_verify, "key=value output");

    auto* c_gen = app.add_subcommand("gen", "generate inputs");
    c_gen->require_subcommand(1);
    auto* c_grid = c_gen->add_subcommand("grid", "torus grid rotation system");
    int grid_m = 0, grid_n = 0;
    bool grid_diag = false;
    std::string grid_out;
    c_grid->add_option("m", grid_m, "rows")->required();
    c_grid->add_option("n", grid_n, "columns")->required();
    c_grid->add_flag("--diagonals", grid_diag, "triangulate with parallel diagonals");
    c_grid->add_option("--out", grid_out, "output file");
    auto* c_subdiv = c_gen->add_subcommand("subdiv", "subdivide every edge");
    std::string subdiv_in, subdiv_out;
    int subdiv_k = 1;
    c_subdiv->add_option("input", subdiv_in, "graph6 or rotation file")->required();
    c_subdiv->add_option("--k", subdiv_k, "interior vertices per edge (default 1)");
    c_subdiv->add_option("--out", subdiv_out, "output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        int code = app.exit(err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (c_faces->parsed()) return run_faces(in_faces, m_faces);
        if (c_class->parsed()) return run_class(in_class, triangle_mode, m_class);
        if (c_configs->parsed()) return run_configs(in_configs, m_configs);
        if (c_discharge->parsed())
            return run_discharge(in_discharge, case_id, rules_path, show_ledger, m_discharge);
        if (c_color->parsed()) return run_color(in_color, lo_color, color_out, m_color);
        if (c_oracle->parsed())
            return run_oracle(in_oracle, lo_oracle, oracle_d, oracle_budget, oracle_out,
                              m_oracle);
        if (c_verify->parsed())
            return run_verify(in_verify, verify_lists, verify_coloring, verify_d, m_verify);
        if (c_grid->parsed()) {
            emit_artifact(emit_rotation(gen_torus_grid(grid_m, grid_n, grid_diag)), grid_out);
            return 0;
        }
        if (c_subdiv->parsed()) {
            Input in = load_input(subdiv_in);
            std::string body = in.embedding
                                   ? emit_rotation(gen_subdivision(*in.embedding, subdiv_k))
                                   : emit_graph6(gen_subdivision(in.graph, subdiv_k)) + "\n";
            emit_artifact(body, subdiv_out);
            return 0;
        }
    } catch (const torcol::Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
    return 2;
}
