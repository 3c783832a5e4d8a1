#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "comax/quiver.hpp"

using namespace comax;

namespace {
Quiver ab() { return parse_quiver("vertices: a b\narrows: x: a -> b\n"); }
Quiver loop() { return parse_quiver("vertices: v\narrows:\nx: v -> v\n"); }
} // namespace

TEST_CASE("parsing the basic quivers") {
    Quiver q = ab();
    CHECK(q.vertices == std::vector<std::string>{"a", "b"});
    REQUIRE(q.arrows.size() == 1);
    CHECK(q.arrows[0].label == "x");
    CHECK(q.arrows[0].src == 0);
    CHECK(q.arrows[0].tgt == 1);

    Quiver l = loop();
    CHECK(l.vertices.size() == 1);
    CHECK(l.arrows.size() == 1);
    CHECK_FALSE(l.is_acyclic());

    Quiver single = parse_quiver("vertices: a\narrows:\n");
    CHECK(single.vertices.size() == 1);
    CHECK(single.arrows.empty());

    // comments and the arrows-on-the-header-line form
    Quiver c = parse_quiver("# a graph\nvertices: a b # two\narrows:\nx: a -> b # edge\n");
    CHECK(c == ab());
}

TEST_CASE("parse errors carry their kind") {
    auto kind_of = [](const std::string& text) {
        try {
            parse_quiver(text);
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::Internal;
    };
    CHECK(kind_of("arrows:\n") == ErrorKind::ParseError);
    CHECK(kind_of("vertices: a a\n") == ErrorKind::DuplicateLabel);
    CHECK(kind_of("vertices: a b\narrows:\nx: a -> b\nx: b -> a\n") == ErrorKind::DuplicateLabel);
    CHECK(kind_of("vertices: a\narrows:\nx: a -> c\n") == ErrorKind::DanglingEndpoint);
    CHECK(kind_of("vertices: a\narrows:\nx a -> a\n") == ErrorKind::ParseError);
}

TEST_CASE("round trip is bit-exact on canonical form") {
    for (const Quiver& q : {ab(), loop(), parse_quiver("vertices: u v w\narrows:\np: u -> v\nq: v -> w\n")}) {
        std::string s = serialize_quiver(q);
        CHECK(parse_quiver(s) == q);
        CHECK(serialize_quiver(parse_quiver(s)) == s);
    }
}

TEST_CASE("path enumeration") {
    std::vector<Path> p = enumerate_paths(ab());
    REQUIRE(p.size() == 3);
    CHECK(p[0].trivial());
    CHECK(p[1].trivial());
    CHECK(p[2].arrows == std::vector<int>{0});
    CHECK(path_label(ab(), p[2]) == "x");

    std::vector<Path> lp = enumerate_paths(loop(), 2);
    REQUIRE(lp.size() == 3);
    CHECK(lp[2].length() == 2);
    CHECK(path_label(loop(), lp[2]) == "x*x");

    CHECK(enumerate_paths(parse_quiver("vertices: v\narrows:\n")).size() == 1);
    CHECK_THROWS_AS(enumerate_paths(loop()), Error);
}

TEST_CASE("path ordering is (length, lex) and closed under prefixes/suffixes") {
    Quiver q = parse_quiver(
        "vertices: a b c d\narrows:\nx: a -> b\ny: b -> c\nz: a -> c\nw: c -> d\n");
    std::vector<Path> ps = enumerate_paths(q);
    for (size_t i = 1; i < ps.size(); ++i) {
        CHECK(ps[i - 1].length() <= ps[i].length());
        if (ps[i - 1].length() == ps[i].length() && ps[i].length() > 0)
            CHECK(ps[i - 1].arrows < ps[i].arrows);
    }
    auto find = [&](int start, const std::vector<int>& arrows) {
        for (const Path& p : ps)
            if (p.start == start && p.arrows == arrows) return true;
        return false;
    };
    for (const Path& p : ps)
        for (int cut = 0; cut <= p.length(); ++cut) {
            std::vector<int> pre(p.arrows.begin(), p.arrows.begin() + cut);
            std::vector<int> suf(p.arrows.begin() + cut, p.arrows.end());
            int mid = cut == 0 ? p.start : q.arrows[pre.back()].tgt;
            CHECK(find(p.start, pre));
            CHECK(find(mid, suf));
        }
}

TEST_CASE("sinks and path counts") {
    std::map<int, int> s = sinks_and_path_counts(ab());
    REQUIRE(s.size() == 1);
    CHECK(s.at(1) == 2); // v_b and x

    Quiver par = parse_quiver("vertices: a b\narrows:\nx: a -> b\ny: a -> b\n");
    CHECK(sinks_and_path_counts(par).at(1) == 3);

    Quiver iso = parse_quiver("vertices: v\narrows:\n");
    CHECK(sinks_and_path_counts(iso).at(0) == 1);

    CHECK_THROWS_AS(sinks_and_path_counts(loop()), Error);

    // total paths = sum over all vertices of paths ending there
    Quiver q = parse_quiver(
        "vertices: a b c d\narrows:\nx: a -> b\ny: b -> c\nz: a -> c\nw: c -> d\n");
    std::vector<Path> ps = enumerate_paths(q);
    std::map<int, int> per_vertex;
    for (const Path& p : ps) ++per_vertex[p.end];
    int total = 0;
    for (auto& [v, n] : per_vertex) total += n;
    CHECK(total == int(ps.size()));
}
