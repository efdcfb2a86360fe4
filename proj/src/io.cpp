#include "mech/io.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace mech {
namespace {

std::string strip(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok)
        out.push_back(tok);
    return out;
}

// "x->y" or "x -> y"
std::pair<VertexId, VertexId> parse_arrow(const std::string& s, int line) {
    auto pos = s.find("->");
    if (pos == std::string::npos)
        throw ParseError("expected 'tail -> head'", line);
    VertexId tail = strip(s.substr(0, pos));
    VertexId head = strip(s.substr(pos + 2));
    if (tail.empty() || head.empty() || tail.find(' ') != std::string::npos ||
        head.find(' ') != std::string::npos)
        throw ParseError("malformed arc '" + s + "'", line);
    return {tail, head};
}

} // namespace

MechFile parse_mech(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    bool have_vertices = false;
    bool in_edits = false;
    std::vector<VertexId> vertices;
    std::vector<std::pair<VertexId, VertexId>> arcs;
    EditScript edits;

    while (std::getline(in, raw)) {
        ++line;
        auto hash = raw.find('#');
        if (hash != std::string::npos)
            raw = raw.substr(0, hash);
        const std::string s = strip(raw);
        if (s.empty())
            continue;
        if (s.rfind("vertices:", 0) == 0) {
            if (have_vertices)
                throw ParseError("duplicate vertices header", line);
            have_vertices = true;
            for (auto& tok : split_ws(s.substr(9)))
                vertices.push_back(tok);
            continue;
        }
        if (s == "edit:") {
            in_edits = true;
            continue;
        }
        if (!have_vertices)
            throw ParseError("vertices header required before '" + s + "'", line);
        if (in_edits) {
            auto toks = split_ws(s);
            const std::string op = toks.empty() ? "" : toks[0];
            const std::string rest = strip(s.substr(op.size()));
            if (op == "+v" && toks.size() == 2)
                edits.push_back({EditKind::AddVertex, toks[1], ""});
            else if (op == "-v" && toks.size() == 2)
                edits.push_back({EditKind::RemoveVertex, toks[1], ""});
            else if (op == "+a") {
                auto [t, h] = parse_arrow(rest, line);
                edits.push_back({EditKind::AddArc, t, h});
            } else if (op == "-a") {
                auto [t, h] = parse_arrow(rest, line);
                edits.push_back({EditKind::RemoveArc, t, h});
            } else {
                throw ParseError("unknown edit '" + s + "'", line);
            }
            continue;
        }
        arcs.push_back(parse_arrow(s, line));
    }
    if (!have_vertices)
        throw ParseError("vertices header required", line == 0 ? 1 : line);
    return {Digraph::build(std::move(vertices), arcs), std::move(edits)};
}

Digraph apply_edits(const Digraph& d, const EditScript& edits) {
    std::vector<VertexId> vertices = d.vertices();
    std::vector<std::pair<VertexId, VertexId>> arcs;
    for (auto& a : d.arcs())
        arcs.emplace_back(a.tail, a.head);

    auto has_vertex = [&](const VertexId& v) {
        return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
    };
    auto find_arc = [&](const VertexId& t, const VertexId& h) {
        return std::find(arcs.begin(), arcs.end(), std::make_pair(t, h));
    };

    for (auto& e : edits) {
        switch (e.kind) {
        case EditKind::AddVertex:
            if (has_vertex(e.a))
                throw ValidationError("add of duplicate vertex " + e.a);
            vertices.push_back(e.a);
            break;
        case EditKind::RemoveVertex: {
            if (!has_vertex(e.a))
                throw ValidationError("remove of missing vertex " + e.a);
            std::erase(vertices, e.a);
            std::erase_if(arcs, [&](const auto& p) {
                return p.first == e.a || p.second == e.a;
            });
            break;
        }
        case EditKind::AddArc:
            if (find_arc(e.a, e.b) != arcs.end())
                throw ValidationError("add of duplicate arc (" + e.a + "," + e.b + ")");
            if (!has_vertex(e.a) || !has_vertex(e.b))
                throw ValidationError("arc endpoint not present: (" + e.a + "," + e.b + ")");
            arcs.emplace_back(e.a, e.b);
            break;
        case EditKind::RemoveArc: {
            auto it = find_arc(e.a, e.b);
            if (it == arcs.end())
                throw ValidationError("remove of missing arc (" + e.a + "," + e.b + ")");
            arcs.erase(it);
            break;
        }
        }
    }
    return Digraph::build(std::move(vertices), arcs);
}

EditScript inverse_edits(const Digraph& base, const EditScript& edits) {
    // Replay forward to know each edit's pre-state, then reverse.
    EditScript inverse;
    Digraph current = base;
    for (auto& e : edits) {
        switch (e.kind) {
        case EditKind::AddVertex:
            inverse.push_back({EditKind::RemoveVertex, e.a, ""});
            break;
        case EditKind::RemoveVertex: {
            EditScript restore{{EditKind::AddVertex, e.a, ""}};
            for (auto& a : current.arcs())
                if (a.tail == e.a || a.head == e.a)
                    restore.push_back({EditKind::AddArc, a.tail, a.head});
            inverse.insert(inverse.end(), restore.rbegin(), restore.rend());
            break;
        }
        case EditKind::AddArc:
            inverse.push_back({EditKind::RemoveArc, e.a, e.b});
            break;
        case EditKind::RemoveArc:
            inverse.push_back({EditKind::AddArc, e.a, e.b});
            break;
        }
        current = apply_edits(current, {e});
    }
    std::reverse(inverse.begin(), inverse.end());
    return inverse;
}

std::string emit_mech(const Digraph& d) {
    std::string out = "vertices:";
    for (auto& v : d.vertices())
        out += " " + v;
    out += "\n";
    for (auto& a : d.arcs())
        out += a.tail + " -> " + a.head + "\n";
    return out;
}

std::string emit_dot(const Digraph& d, DotColoring coloring,
                     const GroundPartition* partition, const ArcDiff* diff) {
    if (coloring == DotColoring::Partitioned && partition == nullptr)
        throw ValidationError("partitioned coloring requires a partition");
    std::set<VertexId> ground, reciprocal, non_ground;
    if (partition != nullptr) {
        ground.insert(partition->ground.begin(), partition->ground.end());
        reciprocal.insert(partition->reciprocal.begin(), partition->reciprocal.end());
        non_ground.insert(partition->non_ground_vertices.begin(),
                          partition->non_ground_vertices.end());
    }
    auto vertex_color = [&](const VertexId& v) -> std::string {
        if (coloring == DotColoring::GroundAbsent)
            return "brown";
        if (coloring == DotColoring::Plain)
            return "black";
        if (reciprocal.count(v))
            return "magenta";
        if (ground.count(v))
            return "red";
        return "blue";
    };
    auto arc_color = [&](const Arc& a) -> std::string {
        if (coloring == DotColoring::GroundAbsent)
            return "brown";
        if (coloring == DotColoring::Plain)
            return "black";
        // The non-ground net owns every arc induced on its vertex set,
        // boundary arcs included; the rest is ground-internal.
        if (non_ground.count(a.tail) && non_ground.count(a.head))
            return "blue";
        return "red";
    };
    std::set<std::pair<VertexId, VertexId>> added, removed;
    if (diff != nullptr) {
        for (auto& a : diff->added) {
            if (!d.has_arc(a.tail, a.head))
                throw ValidationError("added arc not in digraph: (" + a.tail + "," +
                                      a.head + ")");
            added.emplace(a.tail, a.head);
        }
        for (auto& a : diff->removed) {
            if (!d.has_vertex(a.tail) || !d.has_vertex(a.head))
                throw ValidationError("removed arc references unknown vertex: (" +
                                      a.tail + "," + a.head + ")");
            removed.emplace(a.tail, a.head);
        }
    }

    std::string out = "digraph mechanism {\n";
    for (auto& v : d.vertices())
        out += "  \"" + v + "\" [color=" + vertex_color(v) +
               ", fontcolor=" + vertex_color(v) + "];\n";
    for (auto& a : d.arcs()) {
        out += "  \"" + a.tail + "\" -> \"" + a.head + "\" [color=" + arc_color(a);
        if (added.count({a.tail, a.head}))
            out += ", style=dashed";
        out += "];\n";
    }
    for (auto& [tail, head] : removed)
        out += "  \"" + tail + "\" -> \"" + head + "\" [color=" +
               (coloring == DotColoring::GroundAbsent ? "brown" : "black") +
               ", style=dotted];\n";
    out += "}\n";
    return out;
}

namespace {

std::string csv_row(const std::string& head, const std::vector<int>& values) {
    std::string out = head;
    for (int v : values)
        out += "," + std::to_string(v);
    return out + "\n";
}

std::string md_row(const std::string& head, const std::vector<int>& values) {
    std::string out = "| " + head + " |";
    for (int v : values)
        out += " " + std::to_string(v) + " |";
    return out + "\n";
}

} // namespace

std::string emit_formization(const FormizationTable& t, TableFormat format) {
    const std::string mode_name =
        t.mode == FormizationMode::SingleLeveled ? "single_leveled" : "mixed_leveled";
    if (format == TableFormat::Csv) {
        std::string out = "mode," + mode_name + "\n";
        for (std::size_t i = 0; i < t.n; ++i)
            out += csv_row("paths", t.path_matrix[i]);
        out += csv_row("cycles", t.cycle_vector);
        out += csv_row("from", t.out_vector);
        out += csv_row("to", t.in_vector);
        return out;
    }
    std::string out = "mode: " + mode_name + "\n\n| paths |";
    for (std::size_t j = 0; j < t.n; ++j)
        out += " o" + std::to_string(j + 1) + " |";
    out += "\n|---|";
    for (std::size_t j = 0; j < t.n; ++j)
        out += "---|";
    out += "\n";
    for (std::size_t i = 0; i < t.n; ++i)
        out += md_row("o" + std::to_string(i + 1), t.path_matrix[i]);
    out += md_row("cycles", t.cycle_vector);
    out += md_row("from", t.out_vector);
    out += md_row("to", t.in_vector);
    return out;
}

FormizationTable parse_formization_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    FormizationTable t;
    bool have_mode = false;
    std::vector<std::vector<int>> rows;
    bool have_cycles = false, have_from = false, have_to = false;

    while (std::getline(in, line)) {
        ++lineno;
        const std::string s = strip(line);
        if (s.empty())
            continue;
        std::vector<std::string> cells;
        std::istringstream cin(s);
        std::string cell;
        while (std::getline(cin, cell, ','))
            cells.push_back(strip(cell));
        if (cells.empty())
            continue;
        if (cells[0] == "mode") {
            if (cells.size() != 2)
                throw ParseError("mode row needs one value", lineno);
            if (cells[1] == "single_leveled")
                t.mode = FormizationMode::SingleLeveled;
            else if (cells[1] == "mixed_leveled")
                t.mode = FormizationMode::MixedLeveled;
            else
                throw ParseError("unknown mode '" + cells[1] + "'", lineno);
            have_mode = true;
            continue;
        }
        std::vector<int> values;
        for (std::size_t i = 1; i < cells.size(); ++i) {
            try {
                values.push_back(std::stoi(cells[i]));
            } catch (const std::exception&) {
                throw ParseError("not an integer: '" + cells[i] + "'", lineno);
            }
        }
        if (cells[0] == "paths") {
            rows.push_back(std::move(values));
        } else if (cells[0] == "cycles") {
            t.cycle_vector = std::move(values);
            have_cycles = true;
        } else if (cells[0] == "from") {
            t.out_vector = std::move(values);
            have_from = true;
        } else if (cells[0] == "to") {
            t.in_vector = std::move(values);
            have_to = true;
        } else {
            throw ParseError("unknown row '" + cells[0] + "'", lineno);
        }
    }
    if (!have_mode || !have_cycles || !have_from || !have_to || rows.empty())
        throw ParseError("incomplete formization table", lineno == 0 ? 1 : lineno);
    t.n = rows.size();
    for (auto& r : rows)
        if (r.size() != t.n)
            throw ParseError("path matrix is not square", lineno);
    if (t.cycle_vector.size() != t.n || t.out_vector.size() != t.n ||
        t.in_vector.size() != t.n)
        throw ParseError("vector length differs from matrix size", lineno);
    t.path_matrix = std::move(rows);
    return t;
}

std::string emit_walk_listing(const WalkListing& listing, ListingFormat format) {
    const bool md = format == ListingFormat::Markdown;
    std::string out;
    auto section = [&](const std::string& title,
                       const std::vector<WalkListing::Group>& groups) {
        out += md ? ("## " + title + "\n") : (title + ":\n");
        for (auto& g : groups) {
            std::string row;
            for (auto& w : g.walks) {
                if (!row.empty())
                    row += ", ";
                row += w.text();
            }
            out += md ? ("- " + row + "\n") : ("  " + row + "\n");
        }
    };
    section(md ? "Paths" : "paths", listing.paths);
    if (md)
        out += "\n";
    section(md ? "Cycles" : "cycles", listing.cycles);
    return out;
}

} // namespace mech
