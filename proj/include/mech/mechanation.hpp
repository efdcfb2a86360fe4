#ifndef MECH_MECHANATION_HPP
#define MECH_MECHANATION_HPP

#include <optional>
#include <utility>
#include <vector>

#include "mech/digraph.hpp"
#include "mech/enumerate.hpp"
#include "mech/ground.hpp"

namespace mech {

enum class CharacterizationMode { Symbolistic, Connectionistic, Hybridistic };

using VertexPair = std::pair<VertexId, VertexId>;

// Meta-mechanation: the host's vertices equipped with units and/or uniters.
// A loop contributes the pair (v, v) on the uniter side so that a looped
// vertex stays coverable connectionistically.
struct CharacterizationReport {
    CharacterizationMode mode;
    std::vector<std::pair<VertexId, Digraph>> units;
    std::vector<std::pair<VertexPair, Digraph>> uniters;
    std::vector<VertexPair> completion;  // hybrid only
    Digraph covered;                     // union of all included nets
    bool total = false;
    std::vector<VertexId> uncovered_vertices;
    std::vector<Arc> uncovered_arcs;
};

CharacterizationReport characterize(const Digraph& d, CharacterizationMode mode,
                                    const EnumLimits& limits = {});

// Greedy selection of uniters that extend the union of all units to cover
// the whole digraph. Ties break toward the smallest net, then the
// lexicographically least pair. Throws ValidationError when some arc is
// coverable by no unit or uniter.
std::vector<VertexPair> hybrid_completion(const Digraph& d, const EnumLimits& limits = {});

// The standard for cognition mechanisms: self characterized symbolistically
// on the ground net, non-self connectionistically on the non-ground net
// with reciprocal vertices acting as terminals only (the self never emits
// into the non-self). Only nonempty uniters are reported.
struct StandardCharacterization {
    GroundPartition partition;
    std::vector<std::pair<VertexId, Digraph>> units;
    std::vector<std::pair<VertexPair, Digraph>> uniters;
};

StandardCharacterization standard_cognition_characterization(const Digraph& d,
                                                             const EnumLimits& limits = {});

enum class FormizationMode { SingleLeveled, MixedLeveled };

// Unlabeled fingerprint of a digraph: indices in presentation order (sorted
// descending by cycle count, out-degree, in-degree, row and column
// multisets; ties in input order). All four measures are stored; the mode
// scopes which of them take part in equivalence.
struct FormizationTable {
    FormizationMode mode = FormizationMode::SingleLeveled;
    std::size_t n = 0;
    std::vector<std::vector<int>> path_matrix;  // diagonal: 1 iff loop
    std::vector<int> cycle_vector;
    std::vector<int> out_vector;
    std::vector<int> in_vector;
};

FormizationTable formize(const Digraph& d, FormizationMode mode,
                         const EnumLimits& limits = {});

struct EquivalenceResult {
    bool equivalent = false;
    // witness[i] is the index of t2 matched to index i of t1.
    std::optional<std::vector<std::size_t>> witness;
};

// Permutation-aware equality of the mode-relevant payload; invariant
// partitioning first, then backtracking capped at 10^7 nodes.
EquivalenceResult formization_equivalent(const FormizationTable& t1,
                                         const FormizationTable& t2);

// Substancization: labels[i] is the vertex of the reference digraph
// standing behind table index i.
struct LabelAssignment {
    std::vector<VertexId> labels;
    bool operator==(const LabelAssignment&) const = default;
};

// All bijections from table indices to reference vertices under which the
// reference reproduces the table's mode-relevant payload exactly.
std::vector<LabelAssignment> recover_labels(const FormizationTable& t,
                                            const Digraph& d_ref,
                                            const EnumLimits& limits = {});

} // namespace mech

#endif
