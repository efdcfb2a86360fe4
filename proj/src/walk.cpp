#include "mech/walk.hpp"

#include <algorithm>
#include <set>

#include "mech/enumerate.hpp"

namespace mech {

Walk::Walk(const Digraph& host, std::vector<VertexId> seq)
    : host_(&host), seq_(std::move(seq)) {
    if (seq_.size() < 2)
        throw ValidationError("a walk needs at least two vertices");
    for (auto& v : seq_)
        host.index_of(v);
    for (std::size_t i = 0; i + 1 < seq_.size(); ++i)
        if (!host.has_arc(seq_[i], seq_[i + 1]))
            throw ValidationError("(" + seq_[i] + "," + seq_[i + 1] +
                                  ") at position " + std::to_string(i) + " is not an arc");
}

std::string Walk::text() const {
    std::string out;
    for (auto& v : seq_) {
        if (!out.empty())
            out += ' ';
        out += v;
    }
    return out;
}

WalkKind classify_walk(const Walk& w) {
    const auto& s = w.seq();
    WalkKind k{};
    k.closure = (s.front() == s.back()) ? Closure::Circulation : Closure::Deliveration;
    // A circulation is simple when only the first/last repetition occurs.
    const std::size_t distinct_len =
        (k.closure == Closure::Circulation) ? s.size() - 1 : s.size();
    std::set<VertexId> seen(s.begin(), s.begin() + static_cast<long>(distinct_len));
    k.simple = seen.size() == distinct_len;
    return k;
}

Walk join_walks(const Walk& w1, const Walk& w2) {
    if (!w1.same_host(w2))
        throw ValidationError("walks have different hosts");
    if (w1.terminal() != w2.initial())
        throw ValidationError("cannot join: terminal " + w1.terminal() +
                              " differs from initial " + w2.initial());
    std::vector<VertexId> seq(w1.seq().begin(), w1.seq().end() - 1);
    seq.insert(seq.end(), w2.seq().begin(), w2.seq().end());
    return Walk(w1.host(), std::move(seq));
}

Digraph carrying_net(const Walk& w) {
    std::vector<VertexId> verts;
    std::set<VertexId> seen;
    for (auto& v : w.seq())
        if (seen.insert(v).second)
            verts.push_back(v);
    std::vector<std::pair<VertexId, VertexId>> arcs;
    std::set<std::pair<VertexId, VertexId>> arc_seen;
    for (std::size_t i = 0; i + 1 < w.seq().size(); ++i) {
        auto pair = std::make_pair(w.seq()[i], w.seq()[i + 1]);
        if (arc_seen.insert(pair).second)
            arcs.push_back(pair);
    }
    return Digraph::build(std::move(verts), arcs);
}

std::vector<Walk> steady_instances(const Digraph& pattern, const VertexId& init,
                                   const VertexId& term) {
    std::vector<Walk> candidates =
        (init == term) ? all_cycles(pattern, init) : all_paths(pattern, init, term);
    std::vector<Walk> out;
    for (auto& w : candidates)
        if (carrying_net(w) == pattern)
            out.push_back(w);
    return out;
}

} // namespace mech
