#include "rlis/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace rlis {

std::vector<std::pair<int, int>> graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(size_t(m_));
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> graph::components() const {
    std::vector<int> comp(n_, -1);
    int next = 0;
    std::vector<int> stack;
    for (int s = 0; s < n_; ++s) {
        if (comp[s] != -1) continue;
        comp[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : adj_[u])
                if (comp[v] == -1) {
                    comp[v] = next;
                    stack.push_back(v);
                }
        }
        ++next;
    }
    return comp;
}

vertex_set graph::component_of(int v) const {
    auto comp = components();
    vertex_set s(n_);
    for (int u = 0; u < n_; ++u)
        if (comp[u] == comp[v]) s.set(u);
    return s;
}

graph read_gr(std::istream& in) {
    std::string line;
    graph g;
    bool have_header = false;
    long declared_m = 0, seen = 0;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ss(line);
        if (!have_header) {
            std::string p, tw;
            int n;
            long m;
            if (!(ss >> p >> tw >> n >> m) || p != "p" || tw != "tw" || n < 0 || m < 0)
                throw parse_error("bad header at line " + std::to_string(lineno) + ": " + line);
            g = graph(n);
            declared_m = m;
            have_header = true;
            continue;
        }
        int u, v;
        if (!(ss >> u >> v))
            throw parse_error("bad edge line " + std::to_string(lineno) + ": " + line);
        if (u < 1 || u > g.n() || v < 1 || v > g.n())
            throw parse_error("vertex out of range at line " + std::to_string(lineno) + ": " + line);
        if (u == v)
            throw parse_error("self loop at line " + std::to_string(lineno) + ": " + line);
        g.add_edge(u - 1, v - 1);
        ++seen;
    }
    if (!have_header) throw parse_error("missing 'p tw' header");
    if (seen != declared_m)
        throw parse_error("header declares " + std::to_string(declared_m) + " edges, file has " +
                          std::to_string(seen));
    return g;
}

graph read_edge_list(std::istream& in) {
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> lines;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == 'c' || line[0] == '#') continue;
        std::istringstream ss(line);
        int u, v;
        if (!(ss >> u >> v) || u < 1 || v < 1)
            throw parse_error("bad edge list line " + std::to_string(lineno) + ": " + line);
        pairs.emplace_back(u, v);
        lines.push_back(lineno);
    }
    bool header = !pairs.empty() && size_t(pairs.front().second) == pairs.size() - 1;
    int n = 0;
    size_t first = 0;
    if (header) {
        n = pairs.front().first;
        first = 1;
    } else {
        for (auto [u, v] : pairs) n = std::max({n, u, v});
    }
    graph g(n);
    for (size_t i = first; i < pairs.size(); ++i) {
        auto [u, v] = pairs[i];
        if (u > n || v > n)
            throw parse_error("vertex out of range at line " + std::to_string(lines[i]));
        if (u == v) throw parse_error("self loop at line " + std::to_string(lines[i]));
        g.add_edge(u - 1, v - 1);
    }
    return g;
}

graph parse_graph(std::istream& in, graph_format fmt) {
    return fmt == graph_format::pace_gr ? read_gr(in) : read_edge_list(in);
}

void write_gr(std::ostream& out, const graph& g) {
    out << "p tw " << g.n() << " " << g.m() << "\n";
    for (auto [u, v] : g.edges()) out << u + 1 << " " << v + 1 << "\n";
}

graph read_gr_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path);
    return read_gr(in);
}

induced_graph induced_subgraph(const graph& g, const vertex_set& s) {
    induced_graph out;
    out.map = s.to_vector();
    std::vector<int> inv(g.n(), -1);
    for (size_t i = 0; i < out.map.size(); ++i) inv[out.map[i]] = int(i);
    out.g = graph(int(out.map.size()));
    for (int u : out.map)
        for (int v : g.neighbors(u))
            if (u < v && inv[v] != -1) out.g.add_edge(inv[u], inv[v]);
    return out;
}

tree_check classify_tree(const graph& g, const vertex_set& s) {
    tree_check r;
    r.leaves = vertex_set(g.n());
    r.internals = vertex_set(g.n());
    int k = s.count();
    if (k == 0) return r;

    // connectivity within S plus edge count
    long edges = 0;
    int start = -1;
    s.for_each([&](int v) {
        if (start == -1) start = v;
        edges += g.row(v).count_and(s);
    });
    edges /= 2;
    if (edges != k - 1) return r;

    std::vector<int> stack{start};
    vertex_set seen(g.n());
    seen.set(start);
    int reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : g.neighbors(u))
            if (s.test(v) && !seen.test(v)) {
                seen.set(v);
                ++reached;
                stack.push_back(v);
            }
    }
    if (reached != k) return r;

    r.is_tree = true;
    s.for_each([&](int v) {
        int d = g.row(v).count_and(s);
        if (d == 1) r.leaves.set(v);
        else if (d >= 2) r.internals.set(v);
    });
    return r;
}

} // namespace rlis
