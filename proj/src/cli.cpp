#include "rlis/cli.hpp"

#include "rlis/chordal_dp.hpp"
#include "rlis/graph.hpp"
#include "rlis/oracle.hpp"
#include "rlis/treedec.hpp"
#include "rlis/tw_dp.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace rlis {

namespace {

constexpr int ex_yes = 0;
constexpr int ex_no = 1;
constexpr int ex_input = 2;
constexpr int ex_domain = 3;

int input_fail(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return ex_input;
}

// Both supported graph formats are accepted behind --graph; a PACE file is
// recognized by its 'p tw' problem line (or a leading 'c' comment), anything
// else is treated as a plain edge list.
graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    graph_format fmt = graph_format::edge_list;
    for (size_t pos = 0; pos < text.size();) {
        size_t eol = text.find('\n', pos);
        if (eol == std::string::npos) eol = text.size();
        const std::string line = text.substr(pos, eol - pos);
        pos = eol + 1;
        const size_t i = line.find_first_not_of(" \t\r");
        if (i == std::string::npos) continue;
        if (line[i] == 'p' || line[i] == 'c') fmt = graph_format::pace_gr;
        break;
    }
    std::istringstream ss(text);
    return parse_graph(ss, fmt);
}

std::vector<int> to_external(std::vector<int> vs) {
    for (int& v : vs) ++v;
    return vs;
}

long long ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

struct report {
    bool yes = false;
    std::optional<std::vector<int>> witness;   // 1-based ids
    std::string solver;
    std::optional<int> width;                  // absent for the oracle
    long long millis = 0;
};

void print_report(const report& r, bool as_json) {
    if (as_json) {
        nlohmann::ordered_json j;
        j["verdict"] = r.yes ? "yes" : "no";
        if (r.witness) j["witness"] = *r.witness;
        j["solver"] = r.solver;
        if (r.width)
            j["width"] = *r.width;
        else
            j["width"] = nullptr;
        j["millis"] = r.millis;
        std::cout << j.dump() << "\n";
        return;
    }
    std::cout << (r.yes ? "yes" : "no") << "\n";
    if (r.witness) {
        std::cout << "witness:";
        for (int v : *r.witness) std::cout << ' ' << v;
        std::cout << "\n";
    }
    std::cout << "solver: " << r.solver << "\n";
    if (r.width) std::cout << "width: " << *r.width << "\n";
    std::cout << "millis: " << r.millis << "\n";
}

struct solve_opts {
    std::string graph_path, td_path;
    std::string solver = "auto";
    int v0 = 0, a = 0, b = 0;
    bool as_json = false;
};

int cmd_solve(const solve_opts& o) {
    graph g;
    try {
        g = load_graph(o.graph_path);
    } catch (const std::exception& e) {
        return input_fail(e.what());
    }
    if (o.b < 3) {
        std::cerr << "error: b must be at least 3 (a tree with fewer leaves is a path)\n";
        return ex_domain;
    }
    if (o.v0 < 1 || o.v0 > g.n())
        return input_fail("--v0 must name a vertex between 1 and " + std::to_string(g.n()));
    if (o.a < 1 || o.a > g.n())
        return input_fail("--a must be between 1 and " + std::to_string(g.n()));
    const int v0 = o.v0 - 1;

    std::optional<tree_decomposition> td;
    if (!o.td_path.empty()) {
        try {
            td = read_td_file(o.td_path, g.n());
        } catch (const std::exception& e) {
            return input_fail(e.what());
        }
        if (auto viol = validate_decomposition(g, *td))
            return input_fail("invalid tree decomposition: " + viol->detail);
    }

    std::string chosen = o.solver;
    if (chosen == "auto") chosen = chordal_clique_tree(g).chordal ? "chordal" : "treewidth";

    report rep;
    rep.solver = chosen;
    const auto t0 = std::chrono::steady_clock::now();
    if (chosen == "chordal") {
        if (td)
            std::cerr << "note: the chordal solver builds its own clique tree; --td is ignored\n";
        try {
            chordal_solver cs(g);
            rep.width = cs.nice().width();
            chordal_answer ans = cs.solve(v0, o.a, o.b, true);
            rep.yes = ans.yes;
            if (!ans.witness.empty()) rep.witness = to_external(ans.witness);
        } catch (const not_chordal_error& e) {
            return input_fail(std::string(e.what()) + "; use --solver treewidth instead");
        }
    } else if (chosen == "treewidth") {
        try {
            const tree_decomposition base =
                td ? *td : heuristic_decomposition(g, elim_rule::min_fill);
            const nice_decomposition nd =
                make_nice(g, base, edge_convention::bag_complete, v0);
            rep.width = nd.width();
            rep.yes = solve_treewidth(g, nd, v0, o.a, o.b);
        } catch (const domain_error& e) {
            return input_fail(e.what());
        }
    } else {   // oracle
        if (g.n() > oracle_max_n)
            return input_fail("the oracle handles at most " + std::to_string(oracle_max_n) +
                              " vertices; use one of the real solvers");
        rep.yes = oracle_rlis(g, v0, o.a, o.b);
        if (rep.yes) {
            std::vector<int> wit;
            enumerate_induced_subtrees(g, o.a, [&](const subtree_record& r) {
                if (!wit.empty() || r.vertices.count() != o.a) return;
                if (r.leaf_count >= o.b && r.internals.test(v0))
                    wit = r.vertices.to_vector();
            });
            if (!wit.empty()) rep.witness = to_external(wit);
        }
    }
    rep.millis = ms_since(t0);
    print_report(rep, o.as_json);
    return rep.yes ? ex_yes : ex_no;
}

struct leafmap_opts {
    std::string graph_path;
    int v0 = 0;   // 0 = no filter
    bool as_json = false;
};

int cmd_leafmap(const leafmap_opts& o) {
    graph g;
    try {
        g = load_graph(o.graph_path);
    } catch (const std::exception& e) {
        return input_fail(e.what());
    }
    if (o.v0 != 0 && (o.v0 < 1 || o.v0 > g.n()))
        return input_fail("--v0 must name a vertex between 1 and " + std::to_string(g.n()));

    // sizes 1 and 2 cannot have an internal vertex and are answered directly
    std::map<int, int> out;
    if (g.n() >= 1) out[1] = 0;
    if (g.m() >= 1) out[2] = 2;

    if (g.n() >= 3) {
        std::vector<int> cands;
        if (o.v0 >= 1)
            cands.push_back(o.v0 - 1);
        else {
            cands.resize(size_t(g.n()));
            std::iota(cands.begin(), cands.end(), 0);
        }
        std::vector<std::optional<int>> best(size_t(g.n()) + 1);
        auto merge = [&](const std::vector<std::optional<int>>& vec) {
            for (int a = 3; a < int(vec.size()); ++a)
                if (vec[size_t(a)] &&
                    (!best[size_t(a)] || *best[size_t(a)] < *vec[size_t(a)]))
                    best[size_t(a)] = vec[size_t(a)];
        };
        // a tree with a vertices has at most a-1 leaves; once every size hit
        // that ceiling no further candidate can improve the table
        auto saturated = [&] {
            for (int a = 3; a <= g.n(); ++a)
                if (!best[size_t(a)] || *best[size_t(a)] != a - 1) return false;
            return true;
        };
        const chordal_result cr = chordal_clique_tree(g);
        if (cr.chordal) {
            chordal_solver cs(g);
            for (int v : cands) {
                merge(cs.max_leaves(v, g.n()));
                if (saturated()) break;
            }
        } else {
            const tree_decomposition base = heuristic_decomposition(g, elim_rule::min_fill);
            for (int v : cands) {
                const nice_decomposition nd =
                    make_nice(g, base, edge_convention::bag_complete, v);
                merge(tw_max_leaves(g, nd, v, g.n()));
                if (saturated()) break;
            }
        }
        for (int a = 3; a <= g.n(); ++a)
            if (best[size_t(a)]) out[a] = *best[size_t(a)];
    }

    if (o.as_json) {
        nlohmann::ordered_json j;
        for (const auto& [size, leaves] : out) j[std::to_string(size)] = leaves;
        std::cout << j.dump() << "\n";
    } else {
        for (const auto& [size, leaves] : out) std::cout << size << ' ' << leaves << "\n";
    }
    return ex_yes;
}

struct decompose_opts {
    std::string graph_path, out_path;
    std::string method = "min-fill";
};

int cmd_decompose(const decompose_opts& o) {
    graph g;
    try {
        g = load_graph(o.graph_path);
    } catch (const std::exception& e) {
        return input_fail(e.what());
    }
    const elim_rule rule =
        o.method == "min-degree" ? elim_rule::min_degree : elim_rule::min_fill;
    const tree_decomposition td = heuristic_decomposition(g, rule);
    std::ofstream outf(o.out_path);
    if (!outf) return input_fail("cannot write " + o.out_path);
    write_td(outf, td);
    return ex_yes;
}

struct validate_opts {
    std::string graph_path, td_path;
};

int cmd_validate(const validate_opts& o) {
    graph g;
    try {
        g = load_graph(o.graph_path);
    } catch (const std::exception& e) {
        return input_fail(e.what());
    }
    tree_decomposition td;
    try {
        td = read_td_file(o.td_path, g.n());
    } catch (const std::exception& e) {
        return input_fail(e.what());
    }
    if (auto viol = validate_decomposition(g, td)) {
        std::cout << "invalid: " << viol->detail << "\n";
        return ex_no;
    }
    std::cout << "valid\n";
    return ex_yes;
}

} // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"induced subtrees with many leaves: solvers and decomposition tooling"};
    app.require_subcommand(1);

    solve_opts so;
    CLI::App* solve = app.add_subcommand(
        "solve", "decide whether an induced subtree with a vertices, at least b "
                 "leaves, and v0 internal exists");
    solve->add_option("--graph", so.graph_path, "graph file (PACE .gr or edge list)")
        ->required();
    solve->add_option("--td", so.td_path, "tree decomposition (.td) for the treewidth solver");
    solve->add_option("--v0", so.v0, "vertex required to be internal (1-based)")->required();
    solve->add_option("--a", so.a, "exact number of subtree vertices")->required();
    solve->add_option("--b", so.b, "minimum number of leaves (at least 3)")->required();
    solve->add_option("--solver", so.solver, "auto | chordal | treewidth | oracle")
        ->check(CLI::IsMember({"auto", "chordal", "treewidth", "oracle"}));
    solve->add_flag("--json", so.as_json, "machine-readable report");

    leafmap_opts lo;
    CLI::App* leafmap = app.add_subcommand(
        "leafmap", "maximum leaf count per subtree size over the whole graph");
    leafmap->add_option("--graph", lo.graph_path, "graph file (PACE .gr or edge list)")
        ->required();
    leafmap->add_option("--v0", lo.v0,
                        "only count subtrees where this vertex is internal (1-based)");
    leafmap->add_flag("--json", lo.as_json, "machine-readable table");

    decompose_opts dco;
    CLI::App* decompose =
        app.add_subcommand("decompose", "write a heuristic tree decomposition");
    decompose->add_option("--graph", dco.graph_path, "graph file (PACE .gr or edge list)")
        ->required();
    decompose->add_option("--method", dco.method, "min-degree | min-fill")
        ->check(CLI::IsMember({"min-degree", "min-fill"}));
    decompose->add_option("-o,--output", dco.out_path, "output .td path")->required();

    validate_opts vo;
    CLI::App* validate =
        app.add_subcommand("validate", "check a .td file against a graph");
    validate->add_option("--graph", vo.graph_path, "graph file (PACE .gr or edge list)")
        ->required();
    validate->add_option("--td", vo.td_path, "tree decomposition file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ex_yes : ex_input;
    }

    try {
        if (solve->parsed()) return cmd_solve(so);
        if (leafmap->parsed()) return cmd_leafmap(lo);
        if (decompose->parsed()) return cmd_decompose(dco);
        if (validate->parsed()) return cmd_validate(vo);
    } catch (const std::exception& e) {
        return input_fail(e.what());
    }
    return ex_input;
}

} // namespace rlis
