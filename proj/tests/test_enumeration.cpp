#include "doctest.h"

#include <algorithm>

#include "fixtures.hpp"
#include "mech/enumerate.hpp"
#include "mech/mechanation.hpp"
#include "oracles.hpp"

using namespace mech;

namespace {

std::vector<std::vector<VertexId>> seqs(const std::vector<Walk>& ws) {
    std::vector<std::vector<VertexId>> out;
    for (const auto& w : ws) out.push_back(w.seq());
    return out;
}

} // namespace

TEST_CASE("path enumeration on the worked example") {
    auto e2 = fixtures::e2();
    CHECK(seqs(all_paths(e2, "b", "a")) ==
          std::vector<std::vector<VertexId>>{{"b", "g", "d", "a"}});
    CHECK(seqs(all_paths(e2, "e", "e")) ==
          std::vector<std::vector<VertexId>>{{"e", "e"}});
    CHECK(all_paths(e2, "a", "g").empty());
    CHECK(all_paths(e2, "a", "a").empty());
    CHECK_THROWS_AS(all_paths(e2, "a", "zz"), ValidationError);
}

TEST_CASE("cycle enumeration on the worked example") {
    auto e2 = fixtures::e2();
    CHECK(seqs(all_cycles(e2, "d")) ==
          std::vector<std::vector<VertexId>>{{"d", "e", "f", "g", "d"},
                                             {"d", "e", "g", "d"}});
    CHECK(all_cycles(e2, "a").empty());
    CHECK(all_cycles(fixtures::e1(), "e").size() == 4);
}

TEST_CASE("units") {
    auto e2 = fixtures::e2();
    CHECK(unit(e2, "h") ==
          Digraph::build({"h", "i", "j"}, {{"h", "i"}, {"i", "j"}, {"j", "h"}}));
    CHECK(unit(e2, "a").empty());
    CHECK(unit(e2, "e") ==
          Digraph::build({"d", "e", "f", "g"},
                         {{"e", "e"}, {"e", "f"}, {"e", "g"}, {"f", "g"},
                          {"g", "d"}, {"d", "e"}}));
}

TEST_CASE("uniters") {
    auto e2 = fixtures::e2();
    CHECK(uniter(e2, "b", "c") ==
          Digraph::build({"b", "c", "d", "e", "f", "g"},
                         {{"b", "g"}, {"g", "d"}, {"d", "e"}, {"e", "f"}, {"f", "c"}}));
    CHECK(uniter(e2, "a", "b").empty());
    CHECK(uniter(e2, "h", "j") ==
          Digraph::build({"h", "i", "j"}, {{"h", "i"}, {"i", "j"}}));
    CHECK_THROWS_AS(uniter(e2, "e", "e"), ValidationError);
}

TEST_CASE("full listing counts") {
    auto l2 = full_listing(fixtures::e2());
    CHECK(l2.path_count() == 42);
    CHECK(l2.cycle_count() == 13);

    auto empty = full_listing(Digraph::build({"x"}, {}));
    CHECK(empty.path_count() == 0);
    CHECK(empty.cycle_count() == 0);

    auto fd = full_listing(fixtures::quad_d());
    CHECK(fd.path_count() == 14);
    CHECK(fd.cycle_count() == 8);
}

TEST_CASE("loop walks appear in both listing sections") {
    auto l2 = full_listing(fixtures::e2());
    bool in_paths = false, in_cycles = false;
    for (const auto& g : l2.paths)
        for (const auto& w : g.walks)
            if (w.text() == "e e") in_paths = true;
    for (const auto& g : l2.cycles)
        for (const auto& w : g.walks)
            if (w.text() == "e e") in_cycles = true;
    CHECK(in_paths);
    CHECK(in_cycles);
}

TEST_CASE("diversal check") {
    auto e2 = fixtures::e2();
    std::vector<Walk> cycles;
    for (const auto& v : e2.vertices())
        for (auto& c : all_cycles(e2, v)) cycles.push_back(std::move(c));
    auto pairs = diversal_check(cycles);
    bool found = false;
    for (const auto& [w1, w2] : pairs) {
        auto t1 = w1.text(), t2 = w2.text();
        if ((t1 == "c f c" && t2 == "f c f") || (t1 == "f c f" && t2 == "c f c"))
            found = true;
    }
    CHECK(found);

    std::vector<Walk> paths;
    for (const auto& x : e2.vertices())
        for (const auto& y : e2.vertices())
            if (x != y)
                for (auto& p : all_paths(e2, x, y)) paths.push_back(std::move(p));
    CHECK(diversal_check(paths).empty());

    CHECK(diversal_check({make_walk(e2, {"b", "g"})}).empty());

    auto other = fixtures::e2();
    CHECK_THROWS_AS(
        diversal_check({make_walk(e2, {"b", "g"}), make_walk(other, {"b", "g"})}),
        ValidationError);
}

TEST_CASE("enumerated walks validate as simple") {
    oracles::RandomDigraphs gen(31);
    for (int i = 0; i < 30; ++i) {
        auto d = gen.next(6);
        for (const auto& x : d.vertices()) {
            for (const auto& c : all_cycles(d, x)) {
                auto k = classify_walk(c);
                CHECK(k.closure == Closure::Circulation);
                CHECK(k.simple);
            }
            for (const auto& y : d.vertices()) {
                if (x == y) continue;
                for (const auto& p : all_paths(d, x, y)) {
                    auto k = classify_walk(p);
                    CHECK(k.closure == Closure::Deliveration);
                    CHECK(k.simple);
                }
            }
        }
    }
}

TEST_CASE("enumeration matches the brute-force oracle") {
    oracles::RandomDigraphs gen(37);
    for (int i = 0; i < 60; ++i) {
        auto d = gen.next(6);
        for (const auto& x : d.vertices()) {
            CHECK(seqs(all_cycles(d, x)) == oracles::oracle_cycles(d, x));
            for (const auto& y : d.vertices())
                CHECK(seqs(all_paths(d, x, y)) == oracles::oracle_paths(d, x, y));
        }
    }
}

TEST_CASE("path counts agree with the formization matrix") {
    auto e2 = fixtures::e2();
    auto t = formize(e2, FormizationMode::SingleLeveled);
    long total = 0;
    for (const auto& row : t.path_matrix)
        for (int v : row) total += v;
    long listed = 0;
    for (const auto& x : e2.vertices())
        for (const auto& y : e2.vertices()) listed += all_paths(e2, x, y).size();
    CHECK(total == listed);
}

TEST_CASE("unit nonempty iff self-connected") {
    oracles::RandomDigraphs gen(41);
    for (int i = 0; i < 40; ++i) {
        auto d = gen.next(6);
        for (const auto& x : d.vertices())
            CHECK(!unit(d, x).empty() == is_connected(d, x, x));
    }
}

TEST_CASE("resource guards") {
    CHECK_THROWS_AS(full_listing(fixtures::e2(), EnumLimits{.max_walks = 5}),
                    ResourceLimitError);
    CHECK_THROWS_AS(full_listing(fixtures::e2(), EnumLimits{.max_vertices = 4}),
                    ResourceLimitError);
}
