#include "mech/ground.hpp"

#include <algorithm>
#include <set>

namespace mech {
namespace {

GroundPartition build_partition(const Digraph& d, const std::set<VertexId>& ground_set) {
    GroundPartition p;
    std::set<VertexId> reciprocal;
    for (auto& a : d.arcs())
        if (!ground_set.count(a.tail) && ground_set.count(a.head))
            reciprocal.insert(a.head);
    for (auto& v : d.vertices()) {
        if (ground_set.count(v))
            p.ground.push_back(v);
        if (reciprocal.count(v))
            p.reciprocal.push_back(v);
        if (!ground_set.count(v) || reciprocal.count(v))
            p.non_ground_vertices.push_back(v);
    }
    p.ground_net = induced_subdigraph(d, p.ground);
    p.non_ground_net = induced_subdigraph(d, p.non_ground_vertices);
    return p;
}

} // namespace

BaseFeatureReport base_characteristics(const Digraph& d, const std::vector<VertexId>& s) {
    if (s.empty())
        throw ValidationError("candidate ground set is empty");
    std::set<VertexId> in_s;
    for (auto& v : s) {
        d.index_of(v);
        in_s.insert(v);
    }
    const auto reach = reachability_matrix(d);

    BaseFeatureReport r;
    r.underlyingness = true;
    for (auto& outside : d.vertices()) {
        if (in_s.count(outside))
            continue;
        for (auto& member : in_s)
            if (!reach[d.index_of(outside)][d.index_of(member)])
                r.underlyingness = false;
    }
    r.primitiveness = true;
    for (auto& member : in_s)
        for (auto& outside : d.vertices())
            if (!in_s.count(outside) && reach[d.index_of(member)][d.index_of(outside)])
                r.primitiveness = false;

    const Digraph net = induced_subdigraph(d, s);
    r.unifiedness = structure_flags(net).strongly_connected && !net.empty();
    return r;
}

std::optional<GroundPartition> find_ground(const Digraph& d) {
    if (d.empty())
        return std::nullopt;
    const auto cond = scc_condensation(d);
    std::vector<bool> has_out(cond.components.size(), false);
    for (auto& [from, to] : cond.arcs)
        has_out[from] = true;
    std::vector<std::size_t> sinks;
    for (std::size_t c = 0; c < cond.components.size(); ++c)
        if (!has_out[c])
            sinks.push_back(c);
    if (sinks.size() != 1)
        return std::nullopt;
    const auto& sink = cond.components[sinks[0]];
    // Every vertex must be connected into the sink, and the sink must
    // support a walk from each of its vertices to itself.
    if (sink.size() == 1 && !d.has_arc(sink[0], sink[0]))
        return std::nullopt;
    std::set<VertexId> ground_set(sink.begin(), sink.end());
    const auto reach = reachability_matrix(d);
    for (auto& v : d.vertices()) {
        if (ground_set.count(v))
            continue;
        if (!reach[d.index_of(v)][d.index_of(sink[0])])
            return std::nullopt;
    }
    return build_partition(d, ground_set);
}

GroundPartition partition_from_candidate(const Digraph& d, const std::vector<VertexId>& s) {
    const auto report = base_characteristics(d, s);
    if (!report.underlyingness)
        throw ValidationError("candidate fails underlyingness");
    if (!report.primitiveness)
        throw ValidationError("candidate fails primitiveness");
    if (!report.unifiedness)
        throw ValidationError("candidate fails unifiedness");
    return build_partition(d, std::set<VertexId>(s.begin(), s.end()));
}

} // namespace mech
