#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mech/digraph.hpp"
#include "mech/enumerate.hpp"
#include "mech/ground.hpp"
#include "mech/io.hpp"
#include "mech/mechanation.hpp"
#include "mech/walk.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in)
        throw mech::ValidationError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct Options {
    std::string input;
    bool apply_edits = false;
    mech::EnumLimits limits;
};

mech::EnumLimits limits_from_env() {
    mech::EnumLimits limits;
    if (const char* w = std::getenv("MECH_MAX_WALKS"))
        limits.max_walks = std::strtoull(w, nullptr, 10);
    if (const char* v = std::getenv("MECH_MAX_VERTICES"))
        limits.max_vertices = std::strtoull(v, nullptr, 10);
    return limits;
}

mech::MechFile load(const Options& opt) {
    auto file = mech::parse_mech(read_input(opt.input));
    if (opt.apply_edits) {
        file.digraph = mech::apply_edits(file.digraph, file.edits);
        file.edits.clear();
    }
    return file;
}

void print_partition(const mech::GroundPartition& p) {
    auto row = [](const char* name, const std::vector<mech::VertexId>& vs) {
        std::string out = name;
        for (auto& v : vs)
            out += " " + v;
        std::cout << out << "\n";
    };
    row("ground:", p.ground);
    row("reciprocal:", p.reciprocal);
    row("non-ground:", p.non_ground_vertices);
}

const char* status_text(mech::CheckStatus s) {
    switch (s) {
    case mech::CheckStatus::Holds: return "holds";
    case mech::CheckStatus::Fails: return "fails";
    default: return "by-construction";
    }
}

int cmd_validate(const Options& opt) {
    const auto file = load(opt);
    const auto report = mech::validate_mechanism(file.digraph);
    for (auto& c : report.checks) {
        std::cout << "#" << c.number << " " << c.description << ": "
                  << status_text(c.status);
        if (!c.witnesses.empty()) {
            std::cout << " (witnesses:";
            for (auto& w : c.witnesses)
                std::cout << " " << w;
            std::cout << ")";
        }
        std::cout << "\n";
    }
    std::cout << "#11-#14 are walk-level; see 'list'\n";
    return kExitOk;
}

int cmd_ground(const Options& opt, bool require) {
    const auto file = load(opt);
    const auto p = mech::find_ground(file.digraph);
    if (!p) {
        std::cout << "no ground\n";
        return require ? kExitNegative : kExitOk;
    }
    print_partition(*p);
    return kExitOk;
}

int cmd_characterize(const Options& opt, const std::string& mode) {
    const auto file = load(opt);
    if (mode == "standard") {
        if (!mech::find_ground(file.digraph)) {
            std::cout << "no ground\n";
            return kExitNegative;
        }
        const auto s =
            mech::standard_cognition_characterization(file.digraph, opt.limits);
        print_partition(s.partition);
        std::cout << "units:";
        for (auto& [v, net] : s.units)
            std::cout << " " << v;
        std::cout << "\nuniters:";
        for (auto& [pair, net] : s.uniters)
            std::cout << " " << pair.first << "->" << pair.second;
        std::cout << "\n";
        return kExitOk;
    }
    mech::CharacterizationMode m;
    if (mode == "sym")
        m = mech::CharacterizationMode::Symbolistic;
    else if (mode == "con")
        m = mech::CharacterizationMode::Connectionistic;
    else if (mode == "hyb")
        m = mech::CharacterizationMode::Hybridistic;
    else
        throw CLI::ValidationError("--mode", "expected sym, con, hyb, or standard");
    const auto r = mech::characterize(file.digraph, m, opt.limits);
    std::cout << "total: " << (r.total ? "yes" : "no") << "\n";
    if (!r.units.empty()) {
        std::cout << "units:";
        for (auto& [v, net] : r.units)
            if (!net.empty())
                std::cout << " " << v;
        std::cout << "\n";
    }
    if (!r.uniters.empty()) {
        std::cout << "uniters:";
        for (auto& [pair, net] : r.uniters)
            if (!net.empty())
                std::cout << " " << pair.first << "->" << pair.second;
        std::cout << "\n";
    }
    if (!r.completion.empty()) {
        std::cout << "completion:";
        for (auto& pair : r.completion)
            std::cout << " " << pair.first << "->" << pair.second;
        std::cout << "\n";
    }
    if (!r.total) {
        std::cout << "uncovered:";
        for (auto& v : r.uncovered_vertices)
            std::cout << " " << v;
        for (auto& a : r.uncovered_arcs)
            std::cout << " (" << a.tail << "," << a.head << ")";
        std::cout << "\n";
    }
    return kExitOk;
}

mech::FormizationMode formization_mode(const std::string& mode) {
    if (mode == "single")
        return mech::FormizationMode::SingleLeveled;
    if (mode == "mixed")
        return mech::FormizationMode::MixedLeveled;
    throw CLI::ValidationError("--mode", "expected single or mixed");
}

mech::FormizationTable load_table(const std::string& path, mech::FormizationMode mode,
                                  const mech::EnumLimits& limits) {
    const std::string text = read_input(path);
    // Serialized tables start with a mode row; anything else is a .mech file.
    if (text.rfind("mode,", 0) == 0) {
        auto t = mech::parse_formization_csv(text);
        t.mode = mode;
        return t;
    }
    auto file = mech::parse_mech(text);
    return mech::formize(file.digraph, mode, limits);
}

int cmd_evolve(const Options& opt) {
    auto file = mech::parse_mech(read_input(opt.input));
    const mech::Digraph before = file.digraph;
    const mech::Digraph after = mech::apply_edits(before, file.edits);

    auto verdict = [](const char* tag, const mech::Digraph& d) {
        const auto p = mech::find_ground(d);
        std::cout << tag << ": ";
        if (!p) {
            std::cout << "no ground\n";
            return;
        }
        std::cout << "ground";
        for (auto& v : p->ground)
            std::cout << " " << v;
        std::cout << "\n";
    };
    verdict("before", before);
    verdict("after", after);

    mech::ArcDiff diff;
    for (auto& e : file.edits) {
        if (e.kind == mech::EditKind::AddArc)
            diff.added.push_back({e.a, e.b});
        else if (e.kind == mech::EditKind::RemoveArc)
            diff.removed.push_back({e.a, e.b});
    }
    // Arcs dropped implicitly with a removed vertex cannot be drawn.
    std::erase_if(diff.removed, [&](const mech::Arc& a) {
        return !after.has_vertex(a.tail) || !after.has_vertex(a.head);
    });
    const auto p = mech::find_ground(after);
    std::cout << mech::emit_dot(after,
                                p ? mech::DotColoring::Partitioned
                                  : mech::DotColoring::GroundAbsent,
                                p ? &*p : nullptr, &diff);
    return kExitOk;
}

int cmd_render(const Options& opt, bool partition, bool with_diff) {
    auto file = mech::parse_mech(read_input(opt.input));
    mech::Digraph graph = file.digraph;
    mech::ArcDiff diff;
    if (with_diff) {
        graph = mech::apply_edits(graph, file.edits);
        for (auto& e : file.edits) {
            if (e.kind == mech::EditKind::AddArc)
                diff.added.push_back({e.a, e.b});
            else if (e.kind == mech::EditKind::RemoveArc)
                diff.removed.push_back({e.a, e.b});
        }
        std::erase_if(diff.removed, [&](const mech::Arc& a) {
            return !graph.has_vertex(a.tail) || !graph.has_vertex(a.head);
        });
    } else if (opt.apply_edits) {
        graph = mech::apply_edits(graph, file.edits);
    }
    if (!partition) {
        std::cout << mech::emit_dot(graph, mech::DotColoring::Plain, nullptr,
                                    with_diff ? &diff : nullptr);
        return kExitOk;
    }
    const auto p = mech::find_ground(graph);
    std::cout << mech::emit_dot(graph,
                                p ? mech::DotColoring::Partitioned
                                  : mech::DotColoring::GroundAbsent,
                                p ? &*p : nullptr, with_diff ? &diff : nullptr);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cognition mechanism analysis over .mech files"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    opt.limits = limits_from_env();
    app.add_option("--max-walks", opt.limits.max_walks, "enumeration walk budget");
    app.add_option("--max-vertices", opt.limits.max_vertices,
                   "largest digraph accepted for enumeration");
    app.add_flag("--apply-edits", opt.apply_edits,
                 "apply the edit section before analysis");

    std::string x, y, mode = "single", format = "plain", other;
    bool require_ground = false, partition = false, with_diff = false;

    auto add_input = [&](CLI::App* sub) {
        sub->add_option("input", opt.input, "input .mech file or '-' for stdin")
            ->required();
    };

    auto* validate = app.add_subcommand("validate", "Table-2 style mechanism report");
    add_input(validate);
    auto* list = app.add_subcommand("list", "all paths and cycles");
    add_input(list);
    list->add_option("--format", format, "plain or md");
    auto* paths = app.add_subcommand("paths", "all paths from X to Y");
    add_input(paths);
    paths->add_option("x", x)->required();
    paths->add_option("y", y)->required();
    auto* cycles = app.add_subcommand("cycles", "all cycles over X");
    add_input(cycles);
    cycles->add_option("x", x)->required();
    auto* unit_cmd = app.add_subcommand("unit", "all-cyclic sub-digraph over X");
    add_input(unit_cmd);
    unit_cmd->add_option("x", x)->required();
    auto* uniter_cmd = app.add_subcommand("uniter", "all-pathic sub-digraph X to Y");
    add_input(uniter_cmd);
    uniter_cmd->add_option("x", x)->required();
    uniter_cmd->add_option("y", y)->required();
    auto* ground = app.add_subcommand("ground", "self/non-self partition");
    add_input(ground);
    ground->add_flag("--require-ground", require_ground,
                     "exit 1 when there is no ground");
    auto* characterize = app.add_subcommand("characterize", "units and uniters");
    add_input(characterize);
    characterize->add_option("--mode", mode, "sym, con, hyb, or standard")->required();
    auto* formize = app.add_subcommand("formize", "formization table");
    add_input(formize);
    formize->add_option("--mode", mode, "single or mixed");
    formize->add_option("--format", format, "csv or md");
    auto* compare = app.add_subcommand("compare", "formization equivalence");
    compare->add_option("a", opt.input, ".mech or csv table")->required();
    compare->add_option("b", other, ".mech or csv table")->required();
    compare->add_option("--mode", mode, "single or mixed");
    auto* evolve = app.add_subcommand("evolve", "apply edits, report both grounds");
    add_input(evolve);
    auto* render = app.add_subcommand("render", "DOT output");
    add_input(render);
    render->add_flag("--partition", partition, "color ground/non-ground");
    render->add_flag("--diff", with_diff, "style edited arcs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*validate)
            return cmd_validate(opt);
        if (*list) {
            const auto file = load(opt);
            std::cout << mech::emit_walk_listing(
                mech::full_listing(file.digraph, opt.limits),
                format == "md" ? mech::ListingFormat::Markdown
                               : mech::ListingFormat::Plain);
            return kExitOk;
        }
        if (*paths) {
            const auto file = load(opt);
            for (auto& w : mech::all_paths(file.digraph, x, y, opt.limits))
                std::cout << w.text() << "\n";
            return kExitOk;
        }
        if (*cycles) {
            const auto file = load(opt);
            for (auto& w : mech::all_cycles(file.digraph, x, opt.limits))
                std::cout << w.text() << "\n";
            return kExitOk;
        }
        if (*unit_cmd) {
            const auto file = load(opt);
            std::cout << mech::emit_mech(mech::unit(file.digraph, x, opt.limits));
            return kExitOk;
        }
        if (*uniter_cmd) {
            const auto file = load(opt);
            std::cout << mech::emit_mech(mech::uniter(file.digraph, x, y, opt.limits));
            return kExitOk;
        }
        if (*ground)
            return cmd_ground(opt, require_ground);
        if (*characterize)
            return cmd_characterize(opt, mode);
        if (*formize) {
            const auto file = load(opt);
            const auto t =
                mech::formize(file.digraph, formization_mode(mode), opt.limits);
            std::cout << mech::emit_formization(t, format == "md"
                                                       ? mech::TableFormat::Markdown
                                                       : mech::TableFormat::Csv);
            return kExitOk;
        }
        if (*compare) {
            const auto m = formization_mode(mode);
            const auto ta = load_table(opt.input, m, opt.limits);
            const auto tb = load_table(other, m, opt.limits);
            const auto res = mech::formization_equivalent(ta, tb);
            if (!res.equivalent) {
                std::cout << "not equivalent\n";
                return kExitNegative;
            }
            std::cout << "equivalent; witness:";
            for (std::size_t i = 0; i < res.witness->size(); ++i)
                std::cout << " o" << i + 1 << "->o" << (*res.witness)[i] + 1;
            std::cout << "\n";
            return kExitOk;
        }
        if (*evolve)
            return cmd_evolve(opt);
        if (*render)
            return cmd_render(opt, partition, with_diff);
    } catch (const mech::ResourceLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const mech::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const mech::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.get_name() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
