#include "mech/mechanation.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace mech {
namespace {

// Loop arcs enter the uniter side as the pair (v, v); the public uniter()
// rejects equal endpoints, so the loop net is built directly.
std::optional<Digraph> loop_net(const Digraph& d, const VertexId& v) {
    if (!d.has_arc(v, v))
        return std::nullopt;
    return Digraph::build({v}, {{v, v}});
}

void finish_coverage(const Digraph& d, CharacterizationReport& r) {
    r.total = r.covered == d;
    for (auto& v : d.vertices())
        if (!r.covered.has_vertex(v))
            r.uncovered_vertices.push_back(v);
    for (auto& a : d.arcs())
        if (!r.covered.has_arc(a.tail, a.head))
            r.uncovered_arcs.push_back(a);
}

std::vector<std::pair<VertexId, Digraph>> all_units(const Digraph& d,
                                                    const EnumLimits& limits) {
    std::vector<std::pair<VertexId, Digraph>> units;
    for (auto& v : d.vertices())
        units.emplace_back(v, unit(d, v, limits));
    return units;
}

std::vector<std::pair<VertexPair, Digraph>> all_uniters(const Digraph& d,
                                                        const EnumLimits& limits) {
    std::vector<std::pair<VertexPair, Digraph>> uniters;
    for (auto& x : d.vertices())
        for (auto& y : d.vertices()) {
            if (x == y) {
                if (auto net = loop_net(d, x))
                    uniters.emplace_back(VertexPair{x, x}, std::move(*net));
            } else {
                uniters.emplace_back(VertexPair{x, y}, uniter(d, x, y, limits));
            }
        }
    return uniters;
}

} // namespace

CharacterizationReport characterize(const Digraph& d, CharacterizationMode mode,
                                    const EnumLimits& limits) {
    CharacterizationReport r;
    r.mode = mode;
    if (mode == CharacterizationMode::Symbolistic ||
        mode == CharacterizationMode::Hybridistic)
        r.units = all_units(d, limits);
    if (mode == CharacterizationMode::Connectionistic)
        r.uniters = all_uniters(d, limits);
    if (mode == CharacterizationMode::Hybridistic) {
        r.completion = hybrid_completion(d, limits);
        for (auto& pair : r.completion)
            r.uniters.emplace_back(pair, uniter(d, pair.first, pair.second, limits));
    }
    for (auto& [v, net] : r.units)
        r.covered = union_digraphs(r.covered, net);
    for (auto& [pair, net] : r.uniters)
        r.covered = union_digraphs(r.covered, net);
    finish_coverage(d, r);
    return r;
}

std::vector<VertexPair> hybrid_completion(const Digraph& d, const EnumLimits& limits) {
    Digraph covered;
    for (auto& [v, net] : all_units(d, limits))
        covered = union_digraphs(covered, net);

    std::vector<std::pair<VertexPair, Digraph>> candidates;
    for (auto& [pair, net] : all_uniters(d, limits))
        if (pair.first != pair.second && !net.empty())
            candidates.emplace_back(pair, net);

    std::vector<VertexPair> selection;
    while (!(covered == d)) {
        std::size_t best = candidates.size();
        std::size_t best_gain = 0;
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            const auto& net = candidates[i].second;
            std::size_t gain = 0;
            for (auto& v : net.vertices())
                if (!covered.has_vertex(v))
                    ++gain;
            for (auto& a : net.arcs())
                if (!covered.has_arc(a.tail, a.head))
                    ++gain;
            if (gain == 0)
                continue;
            if (best == candidates.size() || gain > best_gain ||
                (gain == best_gain &&
                 std::make_pair(net.order() + net.size(), candidates[i].first) <
                     std::make_pair(candidates[best].second.order() +
                                        candidates[best].second.size(),
                                    candidates[best].first))) {
                best = i;
                best_gain = gain;
            }
        }
        if (best == candidates.size()) {
            std::string arcs;
            for (auto& a : d.arcs())
                if (!covered.has_arc(a.tail, a.head))
                    arcs += " (" + a.tail + "," + a.head + ")";
            throw ValidationError("no unit or uniter covers:" + arcs);
        }
        selection.push_back(candidates[best].first);
        covered = union_digraphs(covered, candidates[best].second);
    }
    return selection;
}

StandardCharacterization standard_cognition_characterization(const Digraph& d,
                                                             const EnumLimits& limits) {
    auto partition = find_ground(d);
    if (!partition)
        throw ValidationError("digraph has no ground");
    StandardCharacterization s;
    s.partition = std::move(*partition);

    for (auto& v : s.partition.ground)
        s.units.emplace_back(v, unit(s.partition.ground_net, v, limits));

    // Reciprocal vertices are shared with the self; in the non-self view
    // they only receive, so their out-arcs are dropped before path search.
    const std::set<VertexId> reciprocal(s.partition.reciprocal.begin(),
                                        s.partition.reciprocal.end());
    std::vector<std::pair<VertexId, VertexId>> arcs;
    for (auto& a : s.partition.non_ground_net.arcs())
        if (!reciprocal.count(a.tail))
            arcs.emplace_back(a.tail, a.head);
    const Digraph view = Digraph::build(s.partition.non_ground_vertices, arcs);

    for (auto& x : view.vertices())
        for (auto& y : view.vertices()) {
            if (x == y) {
                if (auto net = loop_net(view, x))
                    s.uniters.emplace_back(VertexPair{x, x}, std::move(*net));
                continue;
            }
            Digraph net = uniter(view, x, y, limits);
            if (!net.empty())
                s.uniters.emplace_back(VertexPair{x, y}, std::move(net));
        }
    return s;
}

namespace {

using Row = std::vector<int>;

std::vector<std::size_t> presentation_order(const FormizationTable& raw) {
    const std::size_t n = raw.n;
    auto sorted_desc = [](Row r) {
        std::sort(r.begin(), r.end(), std::greater<int>());
        return r;
    };
    std::vector<std::tuple<int, int, int, Row, Row>> keys(n);
    for (std::size_t i = 0; i < n; ++i) {
        Row col(n);
        for (std::size_t j = 0; j < n; ++j)
            col[j] = raw.path_matrix[j][i];
        keys[i] = {raw.cycle_vector[i], raw.out_vector[i], raw.in_vector[i],
                   sorted_desc(raw.path_matrix[i]), sorted_desc(col)};
    }
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i)
        order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return keys[a] > keys[b]; });
    return order;
}

FormizationTable permute_table(const FormizationTable& raw,
                               const std::vector<std::size_t>& order) {
    FormizationTable t;
    t.mode = raw.mode;
    t.n = raw.n;
    t.path_matrix.assign(t.n, Row(t.n, 0));
    t.cycle_vector.resize(t.n);
    t.out_vector.resize(t.n);
    t.in_vector.resize(t.n);
    for (std::size_t i = 0; i < t.n; ++i) {
        t.cycle_vector[i] = raw.cycle_vector[order[i]];
        t.out_vector[i] = raw.out_vector[order[i]];
        t.in_vector[i] = raw.in_vector[order[i]];
        for (std::size_t j = 0; j < t.n; ++j)
            t.path_matrix[i][j] = raw.path_matrix[order[i]][order[j]];
    }
    return t;
}

FormizationTable measure(const Digraph& d, FormizationMode mode,
                         const EnumLimits& limits) {
    FormizationTable t;
    t.mode = mode;
    t.n = d.order();
    t.path_matrix.assign(t.n, Row(t.n, 0));
    t.cycle_vector.resize(t.n);
    t.out_vector.resize(t.n);
    t.in_vector.resize(t.n);
    const auto& verts = d.vertices();
    for (std::size_t i = 0; i < t.n; ++i) {
        t.cycle_vector[i] = static_cast<int>(all_cycles(d, verts[i], limits).size());
        t.out_vector[i] = static_cast<int>(d.out_degree(verts[i]));
        t.in_vector[i] = static_cast<int>(d.in_degree(verts[i]));
        for (std::size_t j = 0; j < t.n; ++j)
            t.path_matrix[i][j] =
                (i == j) ? (d.has_arc(verts[i], verts[i]) ? 1 : 0)
                         : static_cast<int>(all_paths(d, verts[i], verts[j], limits).size());
    }
    return t;
}

// Mode-relevant per-index invariant used to prune the permutation search.
struct IndexKey {
    std::vector<int> scalars;
    Row row_multiset;
    Row col_multiset;
    auto operator<=>(const IndexKey&) const = default;
};

std::vector<IndexKey> index_keys(const FormizationTable& t) {
    std::vector<IndexKey> keys(t.n);
    for (std::size_t i = 0; i < t.n; ++i) {
        IndexKey k;
        if (t.mode == FormizationMode::SingleLeveled)
            k.scalars = {t.cycle_vector[i], t.path_matrix[i][i]};
        else
            k.scalars = {t.out_vector[i], t.in_vector[i], t.path_matrix[i][i]};
        k.row_multiset = t.path_matrix[i];
        std::sort(k.row_multiset.begin(), k.row_multiset.end());
        k.col_multiset.resize(t.n);
        for (std::size_t j = 0; j < t.n; ++j)
            k.col_multiset[j] = t.path_matrix[j][i];
        std::sort(k.col_multiset.begin(), k.col_multiset.end());
        keys[i] = std::move(k);
    }
    return keys;
}

constexpr std::size_t kSearchNodeCap = 10'000'000;

// Backtracking over index assignments; candidates are tried in ascending
// order so the first full assignment is the lexicographically least one.
// With collect_all set, every valid assignment is gathered instead.
struct PermutationSearch {
    const FormizationTable& t1;
    const FormizationTable& t2;
    std::vector<IndexKey> keys1, keys2;
    std::vector<std::size_t> assign;
    std::vector<bool> used;
    std::size_t nodes = 0;
    bool collect_all = false;
    std::vector<std::vector<std::size_t>> results;

    PermutationSearch(const FormizationTable& a, const FormizationTable& b)
        : t1(a), t2(b), keys1(index_keys(a)), keys2(index_keys(b)),
          assign(a.n), used(a.n, false) {}

    bool consistent(std::size_t i, std::size_t j) const {
        if (keys1[i] != keys2[j])
            return false;
        for (std::size_t k = 0; k < i; ++k) {
            if (t1.path_matrix[i][k] != t2.path_matrix[j][assign[k]])
                return false;
            if (t1.path_matrix[k][i] != t2.path_matrix[assign[k]][j])
                return false;
        }
        return true;
    }

    bool run(std::size_t i) {
        if (i == t1.n) {
            results.push_back(assign);
            return !collect_all;
        }
        for (std::size_t j = 0; j < t1.n; ++j) {
            if (used[j])
                continue;
            if (++nodes > kSearchNodeCap)
                throw ResourceLimitError("permutation search exceeded its node budget");
            if (!consistent(i, j))
                continue;
            assign[i] = j;
            used[j] = true;
            if (run(i + 1))
                return true;
            used[j] = false;
        }
        return false;
    }
};

} // namespace

FormizationTable formize(const Digraph& d, FormizationMode mode,
                         const EnumLimits& limits) {
    const FormizationTable raw = measure(d, mode, limits);
    return permute_table(raw, presentation_order(raw));
}

EquivalenceResult formization_equivalent(const FormizationTable& t1,
                                         const FormizationTable& t2) {
    if (t1.mode != t2.mode)
        throw ValidationError("formization tables have different modes");
    EquivalenceResult res;
    if (t1.n != t2.n)
        return res;
    PermutationSearch search(t1, t2);
    // Quick reject: the multisets of per-index invariants must agree.
    auto k1 = search.keys1;
    auto k2 = search.keys2;
    std::sort(k1.begin(), k1.end());
    std::sort(k2.begin(), k2.end());
    if (k1 != k2)
        return res;
    if (search.run(0)) {
        res.equivalent = true;
        res.witness = search.results.front();
    }
    return res;
}

std::vector<LabelAssignment> recover_labels(const FormizationTable& t,
                                            const Digraph& d_ref,
                                            const EnumLimits& limits) {
    if (d_ref.order() != t.n)
        throw ValidationError("reference digraph size differs from table size");
    const FormizationTable ref = measure(d_ref, t.mode, limits);
    PermutationSearch search(t, ref);
    search.collect_all = true;
    search.run(0);
    std::vector<LabelAssignment> out;
    for (auto& assign : search.results) {
        LabelAssignment la;
        for (std::size_t i = 0; i < t.n; ++i)
            la.labels.push_back(d_ref.vertices()[assign[i]]);
        out.push_back(std::move(la));
    }
    std::sort(out.begin(), out.end(), [](const LabelAssignment& a, const LabelAssignment& b) {
        return a.labels < b.labels;
    });
    return out;
}

} // namespace mech
