#include "doctest.h"

#include "rlis/graph.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

using namespace rlis;

namespace {

graph from_gr(const std::string& text) {
    std::istringstream in(text);
    return read_gr(in);
}

graph from_edges(const std::string& text) {
    std::istringstream in(text);
    return read_edge_list(in);
}

graph path(int n) {
    graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

graph star(int leaves) {
    graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

} // namespace

TEST_SUITE("graph") {

TEST_CASE("vertex_set basics") {
    vertex_set s(70);
    CHECK(s.capacity() == 70);
    CHECK(s.empty());
    CHECK(s.count() == 0);
    s.set(0);
    s.set(63);
    s.set(64);
    s.set(69);
    CHECK(s.count() == 4);
    CHECK(s.test(63));
    CHECK(s.test(64));
    CHECK_FALSE(s.test(1));
    CHECK_FALSE(s.test(-1));   // out of range reads are just false
    CHECK_FALSE(s.test(70));
    s.reset(63);
    CHECK_FALSE(s.test(63));
    CHECK(s.count() == 3);
    CHECK(s.to_vector() == std::vector<int>{0, 64, 69});
    CHECK(s == vertex_set::of(70, {69, 0, 64}));
}

TEST_CASE("vertex_set algebra") {
    auto a = vertex_set::of(10, {1, 2, 3});
    auto b = vertex_set::of(10, {3, 4});
    CHECK(a.intersects(b));
    CHECK(a.count_and(b) == 1);
    CHECK_FALSE(a.subset_of(b));
    CHECK(vertex_set::of(10, {2, 3}).subset_of(a));
    CHECK(vertex_set(10).subset_of(b));

    auto u = a;
    u |= b;
    CHECK(u.to_vector() == std::vector<int>{1, 2, 3, 4});
    auto i = a;
    i &= b;
    CHECK(i.to_vector() == std::vector<int>{3});
    auto d = a;
    d -= b;
    CHECK(d.to_vector() == std::vector<int>{1, 2});
    CHECK_FALSE(vertex_set::of(10, {5}).intersects(a));
}

TEST_CASE("vertex_set for_each ascends") {
    auto s = vertex_set::of(130, {128, 5, 77, 0});
    std::vector<int> seen;
    s.for_each([&](int v) { seen.push_back(v); });
    CHECK(seen == std::vector<int>{0, 5, 77, 128});
}

TEST_CASE("graph add_edge drops duplicates and self loops") {
    graph g(4);
    CHECK(g.add_edge(0, 1));
    CHECK_FALSE(g.add_edge(1, 0));   // duplicate, other direction
    CHECK_FALSE(g.add_edge(2, 2));   // self loop
    CHECK(g.add_edge(1, 2));
    CHECK(g.n() == 4);
    CHECK(g.m() == 2);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 0));
    CHECK_FALSE(g.has_edge(0, 2));
    CHECK(g.degree(1) == 2);
    CHECK(g.degree(3) == 0);
    CHECK(g.row(1) == vertex_set::of(4, {0, 2}));
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
}

TEST_CASE("components and component_of") {
    graph g(7);   // triangle {0,1,2}, edge {4,5}, isolated 3 and 6
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    g.add_edge(4, 5);
    auto comp = g.components();
    CHECK(comp == std::vector<int>{0, 0, 0, 1, 2, 2, 3});
    CHECK(g.component_of(5) == vertex_set::of(7, {4, 5}));
    CHECK(g.component_of(3) == vertex_set::of(7, {3}));
}

TEST_CASE("read_gr accepts the documented format") {
    auto g = from_gr("c a comment\n\np tw 5 4\n1 2\nc mid comment\n1 3\n1 4\n1 5\n");
    CHECK(g.n() == 5);
    CHECK(g.m() == 4);
    CHECK(g.degree(0) == 4);   // vertex 1 in the file is vertex 0 here
    CHECK(g.has_edge(0, 4));
}

TEST_CASE("read_gr duplicated edge lines count toward the header") {
    auto g = from_gr("p tw 3 2\n1 2\n2 1\n");
    CHECK(g.m() == 1);
}

TEST_CASE("read_gr rejects malformed input") {
    CHECK_THROWS_AS(from_gr(""), parse_error);
    CHECK_THROWS_AS(from_gr("p td 3 2\n1 2\n2 3\n"), parse_error);      // wrong descriptor
    CHECK_THROWS_AS(from_gr("1 2\n"), parse_error);                     // edge before header
    CHECK_THROWS_AS(from_gr("p tw 3 2\n1 2\n"), parse_error);           // fewer edges than declared
    CHECK_THROWS_AS(from_gr("p tw 3 1\n1 2\n2 3\n"), parse_error);      // more edges than declared
    CHECK_THROWS_AS(from_gr("p tw 3 1\n1 4\n"), parse_error);           // vertex out of range
    CHECK_THROWS_AS(from_gr("p tw 3 1\n0 1\n"), parse_error);           // ids are 1-based
    CHECK_THROWS_AS(from_gr("p tw 3 1\n2 2\n"), parse_error);           // self loop
    CHECK_THROWS_AS(from_gr("p tw 3 1\nx y\n"), parse_error);           // not numbers
    CHECK_THROWS_AS(from_gr("p tw -1 0\n"), parse_error);               // negative n
}

TEST_CASE("write_gr round trips") {
    auto g = star(4);
    std::ostringstream out;
    write_gr(out, g);
    auto h = from_gr(out.str());
    CHECK(h.n() == g.n());
    CHECK(h.edges() == g.edges());
    CHECK(out.str().substr(0, 9) == "p tw 5 4\n");
}

TEST_CASE("read_edge_list with and without header") {
    // header line recognized: second number equals the count of edge lines
    auto g = from_edges("4 3\n1 2\n2 3\n3 4\n");
    CHECK(g.n() == 4);
    CHECK(g.m() == 3);

    // no header: n is the largest endpoint mentioned. the first pair must not
    // look like a header (second number = count of remaining lines), so files
    // are read the same way a human would scan them
    auto h = from_edges("# comment\n1 3\n2 3\nc also a comment\n2 5\n");
    CHECK(h.n() == 5);
    CHECK(h.m() == 3);
    CHECK(h.has_edge(1, 4));

    // header declaring extra isolated vertices
    auto k = from_edges("6 1\n1 2\n");
    CHECK(k.n() == 6);
    CHECK(k.m() == 1);
}

TEST_CASE("read_edge_list rejects malformed input") {
    CHECK_THROWS_AS(from_edges("1\n"), parse_error);          // lone number
    CHECK_THROWS_AS(from_edges("0 2\n"), parse_error);        // ids are 1-based
    CHECK_THROWS_AS(from_edges("2 1\n1 3\n"), parse_error);   // beyond declared n
    CHECK_THROWS_AS(from_edges("3 1\n2 2\n"), parse_error);   // self loop
    CHECK_THROWS_AS(from_edges("a b\n"), parse_error);
}

TEST_CASE("parse_graph dispatches on format") {
    std::istringstream a("p tw 2 1\n1 2\n");
    CHECK(parse_graph(a, graph_format::pace_gr).m() == 1);
    std::istringstream b("1 2\n");
    CHECK(parse_graph(b, graph_format::edge_list).m() == 1);
}

TEST_CASE("read_gr_file loads fixtures and rejects missing paths") {
    auto g = read_gr_file(std::string(RLIS_TEST_DATA_DIR) + "/star5.gr");
    CHECK(g.n() == 5);
    CHECK(g.degree(0) == 4);
    CHECK_THROWS_AS(read_gr_file(std::string(RLIS_TEST_DATA_DIR) + "/does_not_exist.gr"),
                    parse_error);
}

TEST_CASE("induced_subgraph relabels and keeps exactly the inner edges") {
    auto g = path(5);
    g.add_edge(0, 4);   // C5
    auto sub = induced_subgraph(g, vertex_set::of(5, {0, 2, 3, 4}));
    CHECK(sub.map == std::vector<int>{0, 2, 3, 4});
    CHECK(sub.g.n() == 4);
    CHECK(sub.g.m() == 3);   // {2,3}, {3,4}, {4,0}
    CHECK(sub.g.has_edge(1, 2));
    CHECK(sub.g.has_edge(2, 3));
    CHECK(sub.g.has_edge(0, 3));
    CHECK_FALSE(sub.g.has_edge(0, 1));

    auto empty = induced_subgraph(g, vertex_set(5));
    CHECK(empty.g.n() == 0);
    CHECK(empty.map.empty());
}

TEST_CASE("classify_tree on hand picked sets") {
    auto g = star(3);   // center 0
    g.add_edge(1, 2);   // plus one triangle edge

    auto whole = classify_tree(g, vertex_set::of(4, {0, 1, 2, 3}));
    CHECK_FALSE(whole.is_tree);   // contains a triangle

    auto t = classify_tree(g, vertex_set::of(4, {0, 1, 3}));
    CHECK(t.is_tree);
    CHECK(t.internals == vertex_set::of(4, {0}));
    CHECK(t.leaves == vertex_set::of(4, {1, 3}));

    auto edge = classify_tree(g, vertex_set::of(4, {1, 2}));
    CHECK(edge.is_tree);
    CHECK(edge.leaves.count() == 2);
    CHECK(edge.internals.empty());

    auto single = classify_tree(g, vertex_set::of(4, {3}));
    CHECK(single.is_tree);   // a singleton counts as a tree with no leaves
    CHECK(single.leaves.empty());
    CHECK(single.internals.empty());

    CHECK_FALSE(classify_tree(g, vertex_set(4)).is_tree);            // empty set
    CHECK_FALSE(classify_tree(g, vertex_set::of(4, {1, 3})).is_tree);   // disconnected
}

TEST_CASE("classify_tree counts degrees within the set only") {
    auto g = path(6);
    auto t = classify_tree(g, vertex_set::of(6, {1, 2, 3}));
    CHECK(t.is_tree);
    // 1 and 3 have outside neighbors, but within the set they are leaves
    CHECK(t.leaves == vertex_set::of(6, {1, 3}));
    CHECK(t.internals == vertex_set::of(6, {2}));
}

} // TEST_SUITE("graph")
