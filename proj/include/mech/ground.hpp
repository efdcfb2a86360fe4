#ifndef MECH_GROUND_HPP
#define MECH_GROUND_HPP

#include <optional>
#include <vector>

#include "mech/digraph.hpp"

namespace mech {

// The self/non-self split of a cognition mechanism. The ground is the
// unique sink component reachable from everywhere; the reciprocal vertices
// are the heads of boundary arcs and belong to both induced nets.
struct GroundPartition {
    std::vector<VertexId> ground;
    std::vector<VertexId> reciprocal;
    std::vector<VertexId> non_ground_vertices;  // (V \ ground) + reciprocal
    Digraph ground_net;
    Digraph non_ground_net;
};

struct BaseFeatureReport {
    bool underlyingness = false;  // reachable from every outside vertex
    bool primitiveness = false;   // no arc leaves the candidate
    bool unifiedness = false;     // induced candidate strongly connected

    bool basalness() const { return underlyingness && primitiveness; }
    bool singleness() const { return underlyingness && unifiedness; }
    bool uniqueness() const { return primitiveness && unifiedness; }
    bool compositional_fundamentality() const {
        return underlyingness && primitiveness && unifiedness;
    }
};

// Evaluates the three base characteristics for a candidate vertex set S.
// Throws ValidationError on empty S or unknown labels.
BaseFeatureReport base_characteristics(const Digraph& d, const std::vector<VertexId>& s);

// Detects the ground, if any: the single sink component of the condensation,
// reachable from every vertex, internally strongly connected (a lone vertex
// needs a loop).
std::optional<GroundPartition> find_ground(const Digraph& d);

// Builds the partition for a candidate that satisfies all three
// characteristics; throws ValidationError naming the failed one otherwise.
GroundPartition partition_from_candidate(const Digraph& d, const std::vector<VertexId>& s);

} // namespace mech

#endif
