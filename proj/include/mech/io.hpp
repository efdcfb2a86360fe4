#ifndef MECH_IO_HPP
#define MECH_IO_HPP

#include <string>
#include <vector>

#include "mech/digraph.hpp"
#include "mech/enumerate.hpp"
#include "mech/ground.hpp"
#include "mech/mechanation.hpp"

namespace mech {

enum class EditKind { AddVertex, RemoveVertex, AddArc, RemoveArc };

struct Edit {
    EditKind kind;
    VertexId a;
    VertexId b;  // head, for arc edits
    bool operator==(const Edit&) const = default;
};

using EditScript = std::vector<Edit>;

struct MechFile {
    Digraph digraph;
    EditScript edits;
};

// Line-oriented text format:
//   vertices: a b c
//   a -> b
//   edit:
//   +v x
//   -a i->h
// '#' starts a comment; blank lines are ignored.
MechFile parse_mech(const std::string& text);

// Applies the script in order; removing a vertex removes its incident
// arcs. The original digraph is untouched.
Digraph apply_edits(const Digraph& d, const EditScript& edits);

EditScript inverse_edits(const Digraph& base, const EditScript& edits);

// Digraph back to the .mech text format (round-trips through parse_mech).
std::string emit_mech(const Digraph& d);

struct ArcDiff {
    std::vector<Arc> removed;  // styled dotted; may reference pre-edit arcs
    std::vector<Arc> added;    // styled dashed
};

enum class DotColoring { Plain, Partitioned, GroundAbsent };

// DOT output. Partitioned coloring: ground red, ground-reciprocal magenta,
// non-ground blue (an arc is blue iff both endpoints belong to the
// non-ground net); GroundAbsent colors everything brown; Plain is black.
std::string emit_dot(const Digraph& d, DotColoring coloring,
                     const GroundPartition* partition = nullptr,
                     const ArcDiff* diff = nullptr);

enum class TableFormat { Csv, Markdown };

std::string emit_formization(const FormizationTable& t, TableFormat format);

// Reads back the CSV layout written by emit_formization.
FormizationTable parse_formization_csv(const std::string& text);

enum class ListingFormat { Markdown, Plain };

std::string emit_walk_listing(const WalkListing& listing, ListingFormat format);

} // namespace mech

#endif
