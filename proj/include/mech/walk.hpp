#ifndef MECH_WALK_HPP
#define MECH_WALK_HPP

#include <string>
#include <vector>

#include "mech/digraph.hpp"

namespace mech {

// A walk over a host digraph. The walk keeps a pointer to its host; the
// caller must keep the host alive for the walk's lifetime.
class Walk {
public:
    // Throws ValidationError on length < 2, unknown vertices, or a
    // consecutive pair that is not an arc of the host.
    Walk(const Digraph& host, std::vector<VertexId> seq);

    const Digraph& host() const { return *host_; }
    const std::vector<VertexId>& seq() const { return seq_; }
    std::size_t length() const { return seq_.size(); }

    const VertexId& initial() const { return seq_.front(); }
    const VertexId& terminal() const { return seq_.back(); }

    // Space-separated vertex labels, e.g. "b g d a".
    std::string text() const;

    bool same_host(const Walk& other) const { return host_ == other.host_; }
    bool operator==(const Walk& other) const {
        return host_ == other.host_ && seq_ == other.seq_;
    }

private:
    const Digraph* host_;
    std::vector<VertexId> seq_;
};

inline Walk make_walk(const Digraph& d, std::vector<VertexId> seq) {
    return Walk(d, std::move(seq));
}

enum class Closure { Circulation, Deliveration };

struct WalkKind {
    Closure closure;
    bool simple;
    bool operator==(const WalkKind&) const = default;
};

// A simple circulation is a cycle (the loop walk [v, v] included); a simple
// deliveration is a path.
WalkKind classify_walk(const Walk& w);

// Succession: terminal of w1 must equal initial of w2, same host.
Walk join_walks(const Walk& w1, const Walk& w2);

// The traversed sub-digraph: distinct vertices and distinct consecutive
// pairs of the walk.
Digraph carrying_net(const Walk& w);

// All simple walks from init to term whose carrying net equals the whole
// pattern digraph; empty when the pattern is not steady for this choice.
std::vector<Walk> steady_instances(const Digraph& pattern, const VertexId& init,
                                   const VertexId& term);

} // namespace mech

#endif
