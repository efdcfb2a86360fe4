#include "mech/enumerate.hpp"

#include <algorithm>
#include <set>

namespace mech {
namespace {

struct Budget {
    std::size_t remaining;
    void spend() {
        if (remaining == 0)
            throw ResourceLimitError("walk enumeration exceeded the configured budget");
        --remaining;
    }
};

void check_size(const Digraph& d, const EnumLimits& limits) {
    if (d.order() > limits.max_vertices)
        throw ResourceLimitError("digraph has " + std::to_string(d.order()) +
                                 " vertices, above the limit of " +
                                 std::to_string(limits.max_vertices));
}

void path_dfs(const Digraph& d, const VertexId& target, std::vector<VertexId>& seq,
              std::set<VertexId>& on_path, std::vector<std::vector<VertexId>>& out,
              Budget& budget) {
    for (const auto& next : d.successors(seq.back())) {
        budget.spend();
        if (next == target) {
            seq.push_back(next);
            out.push_back(seq);
            seq.pop_back();
        } else if (!on_path.count(next)) {
            seq.push_back(next);
            on_path.insert(next);
            path_dfs(d, target, seq, on_path, out, budget);
            on_path.erase(next);
            seq.pop_back();
        }
    }
}

std::vector<Walk> to_walks(const Digraph& d, std::vector<std::vector<VertexId>> seqs) {
    std::sort(seqs.begin(), seqs.end());
    std::vector<Walk> walks;
    walks.reserve(seqs.size());
    for (auto& s : seqs)
        walks.emplace_back(d, std::move(s));
    return walks;
}

} // namespace

std::vector<Walk> all_paths(const Digraph& d, const VertexId& x, const VertexId& y,
                            const EnumLimits& limits) {
    d.index_of(x);
    d.index_of(y);
    check_size(d, limits);
    if (x == y) {
        std::vector<Walk> out;
        if (d.has_arc(x, x))
            out.emplace_back(d, std::vector<VertexId>{x, x});
        return out;
    }
    Budget budget{limits.max_walks};
    std::vector<VertexId> seq{x};
    std::set<VertexId> on_path{x};
    std::vector<std::vector<VertexId>> seqs;
    path_dfs(d, y, seq, on_path, seqs, budget);
    return to_walks(d, std::move(seqs));
}

std::vector<Walk> all_cycles(const Digraph& d, const VertexId& x,
                             const EnumLimits& limits) {
    d.index_of(x);
    check_size(d, limits);
    Budget budget{limits.max_walks};
    std::vector<VertexId> seq{x};
    std::set<VertexId> on_path{x};
    std::vector<std::vector<VertexId>> seqs;
    // Closing back to x yields a cycle; the loop arc closes at length 1.
    path_dfs(d, x, seq, on_path, seqs, budget);
    return to_walks(d, std::move(seqs));
}

Digraph unit(const Digraph& d, const VertexId& x, const EnumLimits& limits) {
    Digraph net;
    for (auto& w : all_cycles(d, x, limits))
        net = union_digraphs(net, carrying_net(w));
    return net;
}

Digraph uniter(const Digraph& d, const VertexId& x, const VertexId& y,
               const EnumLimits& limits) {
    if (x == y)
        throw ValidationError("uniter endpoints must be distinct");
    Digraph net;
    for (auto& w : all_paths(d, x, y, limits))
        net = union_digraphs(net, carrying_net(w));
    return net;
}

std::size_t WalkListing::path_count() const {
    std::size_t n = 0;
    for (auto& g : paths)
        n += g.walks.size();
    return n;
}

std::size_t WalkListing::cycle_count() const {
    std::size_t n = 0;
    for (auto& g : cycles)
        n += g.walks.size();
    return n;
}

WalkListing full_listing(const Digraph& d, const EnumLimits& limits) {
    check_size(d, limits);
    std::vector<VertexId> order = d.vertices();
    std::sort(order.begin(), order.end());
    WalkListing listing;
    for (auto& x : order) {
        std::vector<Walk> group;
        for (auto& y : order)
            for (auto& w : all_paths(d, x, y, limits))
                group.push_back(std::move(w));
        std::sort(group.begin(), group.end(),
                  [](const Walk& a, const Walk& b) { return a.seq() < b.seq(); });
        if (!group.empty())
            listing.paths.push_back({x, std::move(group)});
    }
    for (auto& x : order) {
        auto cycles = all_cycles(d, x, limits);
        if (!cycles.empty())
            listing.cycles.push_back({x, std::move(cycles)});
    }
    return listing;
}

std::vector<std::pair<Walk, Walk>> diversal_check(const std::vector<Walk>& walks) {
    for (std::size_t i = 1; i < walks.size(); ++i)
        if (!walks[i].same_host(walks[0]))
            throw ValidationError("diversal check over walks with mixed hosts");
    std::vector<Digraph> nets;
    nets.reserve(walks.size());
    for (auto& w : walks)
        nets.push_back(carrying_net(w));
    std::vector<std::pair<Walk, Walk>> violations;
    for (std::size_t i = 0; i < walks.size(); ++i)
        for (std::size_t j = i + 1; j < walks.size(); ++j)
            if (!(walks[i] == walks[j]) && nets[i] == nets[j])
                violations.emplace_back(walks[i], walks[j]);
    return violations;
}

} // namespace mech
