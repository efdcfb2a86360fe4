#ifndef MECH_ENUMERATE_HPP
#define MECH_ENUMERATE_HPP

#include <cstddef>
#include <vector>

#include "mech/digraph.hpp"
#include "mech/walk.hpp"

namespace mech {

// Guards against runaway exhaustive enumeration; exceeding either bound
// raises ResourceLimitError.
struct EnumLimits {
    std::size_t max_walks = 1'000'000;
    std::size_t max_vertices = 15;
};

// All simple open walks from x to y when x != y, in lexicographic label
// order. For x == y, the loop walk [x, x] when the loop arc exists, else
// empty (the listing convention for loops).
std::vector<Walk> all_paths(const Digraph& d, const VertexId& x, const VertexId& y,
                            const EnumLimits& limits = {});

// All cycles over x (loop walk included), lexicographic order.
std::vector<Walk> all_cycles(const Digraph& d, const VertexId& x,
                             const EnumLimits& limits = {});

// All-cyclic sub-digraph: union of carrying nets of all cycles over x.
Digraph unit(const Digraph& d, const VertexId& x, const EnumLimits& limits = {});

// All-pathic sub-digraph: union of carrying nets of all paths from x to y;
// x == y is an error (loops are handled by units).
Digraph uniter(const Digraph& d, const VertexId& x, const VertexId& y,
               const EnumLimits& limits = {});

struct WalkListing {
    struct Group {
        VertexId initial;
        std::vector<Walk> walks;
    };
    std::vector<Group> paths;   // grouped by initial vertex, label order
    std::vector<Group> cycles;  // grouped by start vertex, label order

    std::size_t path_count() const;
    std::size_t cycle_count() const;
};

// Every simple walk of the digraph exactly once; loop walks appear in both
// the path and the cycle section.
WalkListing full_listing(const Digraph& d, const EnumLimits& limits = {});

// Unordered pairs of distinct walks with identical carrying nets.
std::vector<std::pair<Walk, Walk>> diversal_check(const std::vector<Walk>& walks);

} // namespace mech

#endif
