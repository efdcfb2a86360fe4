#ifndef MECH_TESTS_FIXTURES_HPP
#define MECH_TESTS_FIXTURES_HPP

#include <vector>

#include "mech/digraph.hpp"
#include "mech/mechanation.hpp"

namespace fixtures {

using mech::Digraph;
using mech::FormizationMode;
using mech::FormizationTable;

// 9-vertex example mechanism with ground {e,f,g,h,i}.
inline Digraph e1() {
    return Digraph::build(
        {"a", "b", "c", "d", "e", "f", "g", "h", "i"},
        {{"a", "b"}, {"a", "c"}, {"b", "c"}, {"b", "i"}, {"c", "e"},
         {"d", "f"}, {"d", "i"}, {"e", "g"}, {"e", "h"}, {"f", "e"},
         {"f", "i"}, {"g", "f"}, {"h", "e"}, {"h", "g"}, {"i", "h"}});
}

// 10-vertex example with a loop on e and no ground.
inline Digraph e2() {
    return Digraph::build(
        {"a", "b", "c", "d", "e", "f", "g", "h", "i", "j"},
        {{"b", "g"}, {"c", "f"}, {"d", "a"}, {"d", "e"}, {"e", "e"},
         {"e", "f"}, {"e", "g"}, {"f", "c"}, {"f", "g"}, {"g", "d"},
         {"h", "i"}, {"i", "j"}, {"j", "h"}});
}

// The four small digraphs used for the characterization-mode claims,
// reconstructed from their reference path/cycle lists.
inline Digraph quad_a() {
    return Digraph::build({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "a"}, {"c", "d"}});
}

inline Digraph quad_b() {
    return Digraph::build({"a", "b", "c", "d"},
                          {{"a", "b"}, {"b", "a"}, {"c", "d"}, {"d", "c"}});
}

inline Digraph quad_c() {
    return Digraph::build({"a", "b", "c", "d"},
                          {{"a", "b"}, {"b", "a"}, {"b", "c"}, {"c", "d"}, {"d", "c"}});
}

inline Digraph quad_d() {
    return Digraph::build({"a", "b", "c", "d"},
                          {{"a", "b"}, {"b", "a"}, {"b", "c"}, {"c", "d"}, {"d", "c"},
                           {"d", "a"}});
}

inline FormizationTable make_table(FormizationMode mode,
                                   std::vector<std::vector<int>> pm,
                                   std::vector<int> cycles, std::vector<int> out,
                                   std::vector<int> in) {
    FormizationTable t;
    t.mode = mode;
    t.n = pm.size();
    t.path_matrix = std::move(pm);
    t.cycle_vector = std::move(cycles);
    t.out_vector = std::move(out);
    t.in_vector = std::move(in);
    return t;
}

// Published formization of the 10-vertex example.
inline FormizationTable table_e2(FormizationMode mode) {
    return make_table(mode,
                      {{0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
                       {1, 0, 1, 1, 1, 1, 1, 0, 0, 0},
                       {1, 0, 0, 1, 1, 1, 1, 0, 0, 0},
                       {1, 0, 1, 0, 1, 1, 2, 0, 0, 0},
                       {2, 0, 1, 2, 1, 1, 2, 0, 0, 0},
                       {1, 0, 1, 1, 1, 0, 1, 0, 0, 0},
                       {1, 0, 1, 1, 1, 1, 0, 0, 0, 0},
                       {0, 0, 0, 0, 0, 0, 0, 0, 1, 1},
                       {0, 0, 0, 0, 0, 0, 0, 1, 0, 1},
                       {0, 0, 0, 0, 0, 0, 0, 1, 1, 0}},
                      {0, 0, 1, 2, 3, 2, 2, 1, 1, 1},
                      {0, 1, 1, 2, 3, 2, 1, 1, 1, 1},
                      {1, 0, 1, 1, 2, 2, 3, 1, 1, 1});
}

// Published formization of the 9-vertex example.
inline FormizationTable table_e1(FormizationMode mode) {
    return make_table(mode,
                      {{0, 1, 2, 0, 4, 6, 6, 5, 5},
                       {0, 0, 1, 0, 3, 4, 4, 3, 3},
                       {0, 0, 0, 0, 1, 2, 2, 2, 2},
                       {0, 0, 0, 0, 4, 3, 6, 3, 2},
                       {0, 0, 0, 0, 0, 2, 2, 2, 2},
                       {0, 0, 0, 0, 2, 0, 4, 2, 1},
                       {0, 0, 0, 0, 2, 1, 0, 2, 1},
                       {0, 0, 0, 0, 2, 2, 2, 0, 2},
                       {0, 0, 0, 0, 2, 2, 2, 1, 0}},
                      {0, 0, 0, 0, 4, 4, 4, 4, 2},
                      {2, 2, 1, 2, 2, 2, 1, 2, 1},
                      {0, 1, 2, 0, 3, 2, 2, 2, 3});
}

// Published tables of the five 6-vertex digraphs of the first
// formization-insufficiency study.
inline FormizationTable study1_d1(FormizationMode mode) {
    return make_table(mode,
                      {{0, 2, 2, 0, 0, 0},
                       {2, 0, 2, 0, 0, 0},
                       {2, 2, 0, 0, 0, 0},
                       {0, 0, 0, 0, 1, 1},
                       {0, 0, 0, 1, 0, 1},
                       {0, 0, 0, 1, 1, 0}},
                      {4, 4, 4, 1, 1, 1}, {2, 2, 2, 1, 1, 1}, {2, 2, 2, 1, 1, 1});
}

inline FormizationTable study1_d2(FormizationMode mode) {
    return make_table(mode,
                      {{0, 2, 2, 2, 2, 2},
                       {2, 0, 2, 2, 2, 2},
                       {2, 2, 0, 1, 1, 1},
                       {2, 1, 2, 0, 1, 1},
                       {2, 1, 2, 2, 0, 1},
                       {2, 1, 2, 2, 2, 0}},
                      {4, 4, 4, 2, 2, 2}, {2, 2, 2, 1, 1, 1}, {2, 2, 2, 1, 1, 1});
}

inline FormizationTable study1_d3(FormizationMode mode) {
    return make_table(mode,
                      {{0, 1, 1, 1, 1, 1},
                       {1, 0, 1, 1, 1, 1},
                       {1, 1, 0, 1, 1, 1},
                       {1, 1, 1, 0, 1, 1},
                       {1, 1, 1, 1, 0, 1},
                       {1, 1, 1, 1, 1, 0}},
                      {1, 1, 1, 1, 1, 1}, {1, 1, 1, 1, 1, 1}, {1, 1, 1, 1, 1, 1});
}

inline FormizationTable study1_d4(FormizationMode mode) {
    return make_table(mode,
                      {{0, 2, 2, 5, 5, 5},
                       {2, 0, 2, 5, 5, 5},
                       {2, 2, 0, 5, 5, 5},
                       {0, 0, 0, 0, 1, 1},
                       {0, 0, 0, 1, 0, 1},
                       {0, 0, 0, 1, 1, 0}},
                      {4, 4, 4, 1, 1, 1}, {3, 3, 3, 1, 1, 1}, {2, 2, 2, 2, 2, 2});
}

inline FormizationTable study1_d5(FormizationMode mode) {
    return make_table(mode,
                      {{0, 1, 1, 1, 1, 1},
                       {1, 0, 1, 1, 1, 1},
                       {1, 1, 0, 1, 1, 1},
                       {1, 1, 1, 0, 1, 1},
                       {1, 1, 1, 1, 0, 1},
                       {1, 1, 1, 1, 1, 0}},
                      {2, 2, 2, 1, 1, 1}, {2, 2, 2, 1, 1, 1}, {2, 2, 2, 1, 1, 1});
}

// Published tables of the four 6-vertex digraphs of the second study; all
// share cycle and degree vectors.
inline FormizationTable study2_d6(int variant, FormizationMode mode) {
    static const std::vector<std::vector<std::vector<int>>> pms = {
        {{0, 2, 2, 1, 1, 1},
         {2, 0, 2, 2, 2, 2},
         {2, 2, 0, 2, 2, 2},
         {2, 2, 1, 0, 2, 2},
         {2, 1, 2, 2, 0, 1},
         {2, 1, 2, 2, 2, 0}},
        {{0, 2, 2, 2, 2, 2},
         {2, 0, 2, 2, 1, 1},
         {2, 2, 0, 1, 2, 2},
         {1, 2, 2, 0, 2, 2},
         {1, 2, 2, 2, 0, 2},
         {1, 2, 2, 2, 1, 0}},
        {{0, 2, 2, 1, 2, 2},
         {2, 0, 2, 2, 1, 1},
         {2, 2, 0, 2, 2, 2},
         {2, 2, 1, 0, 2, 2},
         {1, 2, 2, 1, 0, 2},
         {1, 2, 2, 1, 1, 0}},
        {{0, 2, 2, 2, 1, 1},
         {2, 0, 2, 2, 2, 2},
         {2, 2, 0, 1, 2, 2},
         {1, 2, 2, 0, 1, 1},
         {2, 1, 2, 2, 0, 1},
         {2, 1, 2, 2, 2, 0}}};
    return make_table(mode, pms.at(static_cast<std::size_t>(variant - 1)),
                      {4, 4, 4, 2, 2, 2}, {2, 2, 2, 1, 1, 1}, {2, 2, 2, 1, 1, 1});
}

} // namespace fixtures

#endif
