#include "mech/digraph.hpp"

#include <algorithm>
#include <set>

namespace mech {

Digraph Digraph::build(std::vector<VertexId> vertices,
                       const std::vector<std::pair<VertexId, VertexId>>& arcs) {
    Digraph d;
    for (auto& v : vertices) {
        if (v.empty())
            throw ValidationError("empty vertex label");
        if (!d.index_.emplace(v, d.vertices_.size()).second)
            throw ValidationError("duplicate vertex label: " + v);
        d.vertices_.push_back(v);
    }
    std::set<std::pair<VertexId, VertexId>> seen;
    for (auto& [tail, head] : arcs) {
        if (!d.index_.count(tail))
            throw ValidationError("arc endpoint not in vertex list: " + tail);
        if (!d.index_.count(head))
            throw ValidationError("arc endpoint not in vertex list: " + head);
        if (!seen.emplace(tail, head).second)
            throw ValidationError("duplicate arc: (" + tail + "," + head + ")");
        d.arcs_.push_back(Arc{tail, head});
    }
    d.succ_.resize(d.vertices_.size());
    for (auto& a : d.arcs_)
        d.succ_[d.index_.at(a.tail)].push_back(a.head);
    for (auto& s : d.succ_)
        std::sort(s.begin(), s.end());
    return d;
}

bool Digraph::has_arc(const VertexId& tail, const VertexId& head) const {
    auto it = index_.find(tail);
    if (it == index_.end())
        return false;
    const auto& s = succ_[it->second];
    return std::binary_search(s.begin(), s.end(), head);
}

std::size_t Digraph::index_of(const VertexId& v) const {
    auto it = index_.find(v);
    if (it == index_.end())
        throw ValidationError("unknown vertex: " + v);
    return it->second;
}

const std::vector<VertexId>& Digraph::successors(const VertexId& v) const {
    return succ_[index_of(v)];
}

std::size_t Digraph::in_degree(const VertexId& v) const {
    index_of(v);  // validate
    std::size_t n = 0;
    for (auto& a : arcs_)
        if (a.head == v)
            ++n;
    return n;
}

bool Digraph::operator==(const Digraph& other) const {
    if (vertices_.size() != other.vertices_.size() || arcs_.size() != other.arcs_.size())
        return false;
    std::set<VertexId> va(vertices_.begin(), vertices_.end());
    std::set<VertexId> vb(other.vertices_.begin(), other.vertices_.end());
    if (va != vb)
        return false;
    std::set<Arc> aa(arcs_.begin(), arcs_.end());
    std::set<Arc> ab(other.arcs_.begin(), other.arcs_.end());
    return aa == ab;
}

Digraph induced_subdigraph(const Digraph& d, const std::vector<VertexId>& s) {
    std::set<VertexId> keep;
    for (auto& v : s) {
        d.index_of(v);
        keep.insert(v);
    }
    std::vector<VertexId> verts;
    for (auto& v : d.vertices())
        if (keep.count(v))
            verts.push_back(v);
    std::vector<std::pair<VertexId, VertexId>> arcs;
    for (auto& a : d.arcs())
        if (keep.count(a.tail) && keep.count(a.head))
            arcs.emplace_back(a.tail, a.head);
    return Digraph::build(std::move(verts), arcs);
}

Digraph union_digraphs(const Digraph& h, const Digraph& l) {
    std::vector<VertexId> verts = h.vertices();
    for (auto& v : l.vertices())
        if (!h.has_vertex(v))
            verts.push_back(v);
    std::vector<std::pair<VertexId, VertexId>> arcs;
    for (auto& a : h.arcs())
        arcs.emplace_back(a.tail, a.head);
    for (auto& a : l.arcs())
        if (!h.has_arc(a.tail, a.head))
            arcs.emplace_back(a.tail, a.head);
    return Digraph::build(std::move(verts), arcs);
}

bool is_subdigraph(const Digraph& h, const Digraph& d) {
    for (auto& v : h.vertices())
        if (!d.has_vertex(v))
            return false;
    for (auto& a : h.arcs()) {
        if (!d.has_arc(a.tail, a.head))
            return false;
        if (!h.has_vertex(a.tail) || !h.has_vertex(a.head))
            return false;
    }
    return true;
}

std::vector<std::vector<bool>> reachability_matrix(const Digraph& d) {
    const std::size_t n = d.order();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (auto& a : d.arcs())
        reach[d.index_of(a.tail)][d.index_of(a.head)] = true;
    // Floyd-Warshall over walks of length >= 1.
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) {
            if (!reach[i][k])
                continue;
            for (std::size_t j = 0; j < n; ++j)
                if (reach[k][j])
                    reach[i][j] = true;
        }
    return reach;
}

bool is_connected(const Digraph& d, const VertexId& x, const VertexId& y) {
    const auto reach = reachability_matrix(d);
    return reach[d.index_of(x)][d.index_of(y)];
}

StructureFlags structure_flags(const Digraph& d) {
    const auto reach = reachability_matrix(d);
    const std::size_t n = d.order();
    StructureFlags f{true, true};
    for (std::size_t i = 0; i < n; ++i) {
        if (!reach[i][i])
            f.strongly_cyclic = false;
        for (std::size_t j = 0; j < n; ++j)
            if (!reach[i][j])
                f.strongly_connected = false;
    }
    return f;
}

std::size_t Condensation::component_of(const Digraph& d, const VertexId& v) const {
    d.index_of(v);
    for (std::size_t c = 0; c < components.size(); ++c)
        for (auto& u : components[c])
            if (u == v)
                return c;
    throw ValidationError("vertex not in any component: " + v);
}

Condensation scc_condensation(const Digraph& d) {
    const auto reach = reachability_matrix(d);
    const std::size_t n = d.order();
    std::vector<std::size_t> comp(n, n);
    Condensation c;
    for (std::size_t i = 0; i < n; ++i) {
        if (comp[i] != n)
            continue;
        std::vector<VertexId> members{d.vertices()[i]};
        comp[i] = c.components.size();
        for (std::size_t j = i + 1; j < n; ++j)
            if (comp[j] == n && reach[i][j] && reach[j][i]) {
                comp[j] = c.components.size();
                members.push_back(d.vertices()[j]);
            }
        c.components.push_back(std::move(members));
    }
    std::set<std::pair<std::size_t, std::size_t>> carcs;
    for (auto& a : d.arcs()) {
        auto ct = comp[d.index_of(a.tail)];
        auto ch = comp[d.index_of(a.head)];
        if (ct != ch)
            carcs.emplace(ct, ch);
    }
    c.arcs.assign(carcs.begin(), carcs.end());
    return c;
}

bool MechanismValidationReport::all_hold() const {
    return std::all_of(checks.begin(), checks.end(), [](const CharacteristicCheck& c) {
        return c.status != CheckStatus::Fails;
    });
}

MechanismValidationReport validate_mechanism(const Digraph& d) {
    MechanismValidationReport r;
    auto by_construction = [&](int num, const char* desc) {
        r.checks.push_back({num, desc, CheckStatus::ByConstruction, {}});
    };
    by_construction(1, "vertices and arcs are individual objects");
    by_construction(2, "vertex and arc sets are finite");

    CharacteristicCheck c3{3, "every vertex has out-degree >= 1", CheckStatus::Holds, {}};
    for (auto& v : d.vertices())
        if (d.out_degree(v) == 0)
            c3.witnesses.push_back(v);
    if (!c3.witnesses.empty())
        c3.status = CheckStatus::Fails;
    r.checks.push_back(std::move(c3));

    CharacteristicCheck c4{4, "every vertex has an arc to or from a distinct vertex",
                           CheckStatus::Holds, {}};
    for (auto& v : d.vertices()) {
        bool ok = false;
        for (auto& a : d.arcs())
            if ((a.tail == v && a.head != v) || (a.head == v && a.tail != v)) {
                ok = true;
                break;
            }
        if (!ok)
            c4.witnesses.push_back(v);
    }
    if (!c4.witnesses.empty())
        c4.status = CheckStatus::Fails;
    r.checks.push_back(std::move(c4));

    by_construction(5, "vertex out-neighbourhoods are single-valued");
    by_construction(6, "every vertex has an out-neighbourhood entry");
    by_construction(7, "the vertex set underlies the whole structure");
    by_construction(8, "arcs reach every member of each out-neighbourhood");
    by_construction(9, "every arc is a binary relation between single vertices");
    by_construction(10, "the digraph is composed solely of vertices and arcs");
    return r;
}

} // namespace mech
