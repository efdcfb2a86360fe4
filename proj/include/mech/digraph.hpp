#ifndef MECH_DIGRAPH_HPP
#define MECH_DIGRAPH_HPP

#include <compare>
#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mech/error.hpp"

namespace mech {

using VertexId = std::string;

struct Arc {
    VertexId tail;
    VertexId head;
    auto operator<=>(const Arc&) const = default;
};

// An immutable finite digraph. Vertex insertion order is preserved and used
// for deterministic output ordering; equality compares vertex and arc sets.
class Digraph {
public:
    Digraph() = default;

    // Throws ValidationError on duplicate vertices, duplicate arcs, or arc
    // endpoints missing from the vertex list.
    static Digraph build(std::vector<VertexId> vertices,
                         const std::vector<std::pair<VertexId, VertexId>>& arcs);

    const std::vector<VertexId>& vertices() const { return vertices_; }
    const std::vector<Arc>& arcs() const { return arcs_; }

    std::size_t order() const { return vertices_.size(); }
    std::size_t size() const { return arcs_.size(); }
    bool empty() const { return vertices_.empty(); }

    bool has_vertex(const VertexId& v) const { return index_.count(v) != 0; }
    bool has_arc(const VertexId& tail, const VertexId& head) const;

    // Index of a vertex in insertion order; throws on unknown label.
    std::size_t index_of(const VertexId& v) const;

    // Out-neighbours sorted by label.
    const std::vector<VertexId>& successors(const VertexId& v) const;

    std::size_t out_degree(const VertexId& v) const { return successors(v).size(); }
    std::size_t in_degree(const VertexId& v) const;

    // Set equality on vertices and arcs; insensitive to insertion order.
    bool operator==(const Digraph& other) const;

private:
    std::vector<VertexId> vertices_;
    std::vector<Arc> arcs_;
    std::unordered_map<VertexId, std::size_t> index_;
    std::vector<std::vector<VertexId>> succ_;  // per vertex, label-sorted
};

// Sub-digraph induced by a vertex set S (arcs with both endpoints in S).
// Throws ValidationError if S contains an unknown label.
Digraph induced_subdigraph(const Digraph& d, const std::vector<VertexId>& s);

// Vertex-set and arc-set union; shared labels denote the same vertex.
Digraph union_digraphs(const Digraph& h, const Digraph& l);

bool is_subdigraph(const Digraph& h, const Digraph& d);

// reach[i][j] is true iff a walk of length >= 1 exists from vertex i to j
// (indices in insertion order).
std::vector<std::vector<bool>> reachability_matrix(const Digraph& d);

// True iff a walk of length >= 1 exists from x to y; x == y therefore
// requires a cycle or loop through x.
bool is_connected(const Digraph& d, const VertexId& x, const VertexId& y);

struct StructureFlags {
    bool strongly_connected = false;
    bool strongly_cyclic = false;
};

StructureFlags structure_flags(const Digraph& d);

struct Condensation {
    // Maximal strongly connected components, ordered by smallest member
    // vertex index; a lone vertex without a loop is its own component.
    std::vector<std::vector<VertexId>> components;
    // Arcs between distinct components, as component index pairs.
    std::vector<std::pair<std::size_t, std::size_t>> arcs;

    std::size_t component_of(const Digraph& d, const VertexId& v) const;
};

Condensation scc_condensation(const Digraph& d);

enum class CheckStatus { Holds, Fails, ByConstruction };

struct CharacteristicCheck {
    int number = 0;
    std::string description;
    CheckStatus status = CheckStatus::ByConstruction;
    std::vector<VertexId> witnesses;  // failing vertices, when computed
};

// Advisory validation report; characteristics 3 and 4 are computed, the
// rest of 1-10 hold by construction under this data model. 11-14 are
// walk-level and live with the enumeration checks.
struct MechanismValidationReport {
    std::vector<CharacteristicCheck> checks;
    bool all_hold() const;
};

MechanismValidationReport validate_mechanism(const Digraph& d);

} // namespace mech

#endif
