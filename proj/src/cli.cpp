#include "gsetca/cli.hpp"

#include <filesystem>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "gsetca/analysis.hpp"
#include "gsetca/error.hpp"
#include "gsetca/hyperbolic.hpp"
#include "gsetca/io.hpp"
#include "gsetca/zoo.hpp"

namespace gsetca::cli {

namespace {

namespace fs = std::filesystem;

Window parse_window(const std::string& text) {
    std::array<std::int64_t, 4> v{};
    std::istringstream is(text);
    for (std::size_t i = 0; i < 4; ++i) {
        if (!(is >> v[i])) throw ValidationError("--window expects x0,y0,x1,y1, got '" + text + "'");
        if (i < 3 && is.get() != ',') throw ValidationError("--window expects x0,y0,x1,y1, got '" + text + "'");
    }
    if (is.peek() != std::char_traits<char>::eof()) {
        throw ValidationError("--window expects x0,y0,x1,y1, got '" + text + "'");
    }
    return Window({v[0], v[1]}, {v[2], v[3]});
}

// Elements may be given as separate tokens or joined with ';'.
std::vector<Isometry> parse_elements(const std::vector<std::string>& tokens) {
    std::vector<Isometry> out;
    for (const auto& token : tokens) {
        std::istringstream is(token);
        std::string part;
        while (std::getline(is, part, ';')) {
            if (!part.empty()) out.push_back(parse_isometry(part));
        }
    }
    return out;
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
    } else {
        io::write_text_file(path, text);
    }
}

std::string format_from(const std::string& requested, const std::string& path) {
    if (!requested.empty()) return requested;
    const std::string ext = fs::path(path).extension().string();
    if (ext == ".json") return "json";
    if (ext == ".pgm") return "pgm";
    if (ext == ".svg") return "svg";
    return "text";
}

Configuration clip(const Configuration& x, const Window& w) {
    Configuration out(x.default_state());
    for (const auto& [c, s] : x.assignments()) {
        if (w.contains(c)) out.set(c, s);
    }
    return out;
}

std::string render(const std::string& format, const Configuration& x, const StateSet& states, const Window& w) {
    if (format == "text") return io::render_text(x, states, w);
    if (format == "pgm") return io::render_pgm(x, states, w);
    if (format == "svg") return io::render_svg(x, states, w);
    return io::config_to_json(clip(x, w), states).dump(2) + "\n";
}

fs::path frame_path(const std::string& out, int step) {
    const fs::path p(out);
    std::ostringstream name;
    name << p.stem().string() << '-' << std::setw(4) << std::setfill('0') << step << p.extension().string();
    return p.parent_path() / name.str();
}

struct RunOptions {
    std::string rule;
    std::string config;
    int steps = 1;
    std::string window;
    std::string out;
    std::string format;
    bool frames = false;
};

int cmd_run(const RunOptions& o, std::ostream& out) {
    const ConstructionTriple tr = io::load_rule(o.rule);
    Configuration x(tr.states().quiescent());
    if (!o.config.empty()) x = io::load_config(o.config, tr.states());
    if (o.steps < 0) throw ValidationError("--steps must be nonnegative");
    const std::string format = format_from(o.format, o.out);

    std::vector<Configuration> frames{x};
    for (int i = 0; i < o.steps; ++i) {
        x = step(tr, x);
        if (o.frames) frames.push_back(x);
    }
    if (!o.frames) frames = {x};

    std::optional<Window> window;
    if (!o.window.empty()) {
        window = parse_window(o.window);
    } else {
        for (const auto& f : frames) {
            const auto b = bounding_window(f);
            if (!b) continue;
            window = window ? Window({std::min(window->lo.x, b->lo.x), std::min(window->lo.y, b->lo.y)},
                                     {std::max(window->hi.x, b->hi.x), std::max(window->hi.y, b->hi.y)})
                            : *b;
        }
        if (!window) window = Window({0, 0}, {0, 0});
    }

    if (!o.frames) {
        emit(o.out, render(format, x, tr.states(), *window), out);
        return kExitOk;
    }
    if (format == "pgm" || format == "svg") {
        if (o.out.empty() || o.out == "-") throw ValidationError("--frames with pgm or svg output needs --out");
        for (std::size_t i = 0; i < frames.size(); ++i) {
            io::write_text_file(frame_path(o.out, static_cast<int>(i)),
                                render(format, frames[i], tr.states(), *window));
        }
        return kExitOk;
    }
    if (format == "json") {
        nlohmann::json doc = nlohmann::json::array();
        for (std::size_t i = 0; i < frames.size(); ++i) {
            doc.push_back({{"step", i}, {"config", io::config_to_json(clip(frames[i], *window), tr.states())}});
        }
        emit(o.out, nlohmann::json{{"frames", doc}}.dump(2) + "\n", out);
        return kExitOk;
    }
    std::string text;
    for (std::size_t i = 0; i < frames.size(); ++i) {
        text += "# step " + std::to_string(i) + "\n" + io::render_text(frames[i], tr.states(), *window);
    }
    emit(o.out, text, out);
    return kExitOk;
}

std::string hyp_summary(const hyperbolic::HypPatch& patch) {
    std::ostringstream os;
    os << "layers: " << patch.layers << '\n' << "cells: " << patch.size() << '\n';
    const auto counts = patch.layer_counts();
    for (std::size_t i = 0; i < counts.size(); ++i) os << "ring " << i << ": " << counts[i] << '\n';
    return os.str();
}

std::string id_list(const std::set<int>& ids) {
    std::string s;
    for (int id : ids) s += (s.empty() ? "" : " ") + std::to_string(id);
    return s;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cellular automata on the square grid and its isometry group", "gsetca"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for all subcommands");

    std::function<int()> action;

    // run
    RunOptions run_opts;
    auto* run = app.add_subcommand("run", "Step a configuration");
    run->add_option("--rule", run_opts.rule, "Rule file or builtin:NAME")->required();
    run->add_option("--config", run_opts.config, "Configuration file (default: empty)");
    run->add_option("--steps", run_opts.steps, "Number of steps")->capture_default_str();
    run->add_option("--window", run_opts.window, "Output window x0,y0,x1,y1 (default: bounding box)");
    run->add_option("--out", run_opts.out, "Output path ('-' for stdout)");
    run->add_option("--format", run_opts.format, "Output format")
        ->check(CLI::IsMember({"text", "pgm", "svg", "json"}));
    run->add_flag("--frames", run_opts.frames, "Write every intermediate configuration");
    run->callback([&] { action = [&] { return cmd_run(run_opts, out); }; });

    // analyze
    auto* analyze = app.add_subcommand("analyze", "Memory, invariance and equivariance analyses");
    analyze->require_subcommand(1);
    std::string an_rule;
    std::string an_out;
    int an_radius = 2;
    std::vector<std::string> an_elements;
    bool an_d4 = false;

    auto* min_memory = analyze->add_subcommand("min-memory", "Minimal memory set (useful cells)");
    min_memory->add_option("--rule", an_rule, "Rule file or builtin:NAME")->required();
    min_memory->add_option("--out", an_out, "Also write the minimized rule file here");
    min_memory->callback([&] {
        action = [&] {
            const ConstructionTriple tr = io::load_rule(an_rule);
            const ConstructionTriple small = analysis::minimize(tr);
            out << analysis::format_memory(small.memory());
            if (!an_out.empty()) io::write_text_file(an_out, io::rule_to_json(small).dump(2) + "\n");
            return kExitOk;
        };
    });

    auto* equivariance = analyze->add_subcommand("equivariance", "Invariance under the obstruction set");
    equivariance->add_option("--rule", an_rule, "Rule file or builtin:NAME")->required();
    equivariance->add_option("--radius", an_radius, "Search radius for the obstruction set")->capture_default_str();
    equivariance->callback([&] {
        action = [&] {
            const ConstructionTriple tr = io::load_rule(an_rule);
            const auto report = analysis::equivariance_check(tr, an_radius);
            out << analysis::format(tr, report);
            return report.obstruction_found() ? kExitViolation : kExitOk;
        };
    });

    auto* invariance = analyze->add_subcommand("invariance", "Invariance of the local rule under stabilizers");
    invariance->add_option("--rule", an_rule, "Rule file or builtin:NAME")->required();
    invariance->add_option("--elements", an_elements, "Isometries A:tx,ty (space or ';' separated)");
    invariance->add_flag("--d4", an_d4, "Use the eight D4 stabilizers of the origin");
    invariance->callback([&] {
        action = [&] {
            const ConstructionTriple tr = io::load_rule(an_rule);
            std::vector<Isometry> elements = parse_elements(an_elements);
            if (an_d4) {
                const auto gens = d4_stabilizer(tr.origin(), tr.universe()).generators;
                elements.insert(elements.end(), gens.begin(), gens.end());
            }
            if (elements.empty()) throw ValidationError("give --elements or --d4");
            const auto reports = analysis::invariance_check(tr, elements);
            bool ok = true;
            for (std::size_t i = 0; i < reports.size(); ++i) {
                out << (i ? "\n" : "") << analysis::format(tr, reports[i]);
                ok = ok && reports[i].holds;
            }
            return ok ? kExitOk : kExitViolation;
        };
    });

    // compose / verify
    std::string rule1;
    std::string rule2;
    std::string compose_out;
    int trials = 100;
    std::uint64_t seed = 0;
    int radius = 5;

    auto* compose = app.add_subcommand("compose", "Construction triple of rule1 after rule2");
    compose->add_option("--rule1", rule1, "Outer rule (applied second)")->required();
    compose->add_option("--rule2", rule2, "Inner rule (applied first)")->required();
    compose->add_option("--out", compose_out, "Rule file to write")->required();
    compose->callback([&] {
        action = [&] {
            const auto composed = analysis::compose_triples(io::load_rule(rule1), io::load_rule(rule2));
            io::write_text_file(compose_out, io::rule_to_json(composed).dump(2) + "\n");
            out << analysis::format_memory(composed.memory());
            return kExitOk;
        };
    });

    auto add_verify_options = [&](CLI::App* cmd) {
        cmd->add_option("--rule1", rule1, "First rule")->required();
        cmd->add_option("--rule2", rule2, "Second rule")->required();
        cmd->add_option("--trials", trials, "Random configurations")->capture_default_str();
        cmd->add_option("--seed", seed, "Seed of the mt19937_64 generator")->required();
        cmd->add_option("--radius", radius, "Random configurations fill this Chebyshev ball")->capture_default_str();
    };

    auto* verify_compose = app.add_subcommand("verify-compose", "Compare rule1(rule2(x)) with the composed triple");
    add_verify_options(verify_compose);
    verify_compose->callback([&] {
        action = [&] {
            const auto t1 = io::load_rule(rule1);
            const auto t2 = io::load_rule(rule2);
            const auto composed = analysis::compose_triples(t1, t2);
            const auto report = analysis::verify_composition(t1, t2, composed, trials, seed, radius);
            out << analysis::format(t1.states(), report);
            return report.consistent ? kExitOk : kExitViolation;
        };
    });

    auto* verify_inverse = app.add_subcommand("verify-inverse", "Check that two rules undo each other");
    add_verify_options(verify_inverse);
    verify_inverse->callback([&] {
        action = [&] {
            const auto a = io::load_rule(rule1);
            const auto b = io::load_rule(rule2);
            const auto report = analysis::verify_inverse(a, b, trials, seed, radius);
            out << analysis::format(a.states(), report);
            return report.inverse ? kExitOk : kExitViolation;
        };
    });

    // export-rule
    std::string export_rule;
    std::string export_out;
    bool export_minimize = false;
    auto* exporter = app.add_subcommand("export-rule", "Write a rule (e.g. builtin:NAME) as an explicit rule file");
    exporter->add_option("--rule", export_rule, "Rule file or builtin:NAME")->required();
    exporter->add_option("--out", export_out, "Output path ('-' for stdout)");
    exporter->add_flag("--minimize", export_minimize, "Drop useless memory cells first");
    exporter->callback([&] {
        action = [&] {
            ConstructionTriple tr = io::load_rule(export_rule);
            if (export_minimize) tr = analysis::minimize(tr);
            emit(export_out, io::rule_to_json(tr).dump(2) + "\n", out);
            return kExitOk;
        };
    });

    // list
    auto* list = app.add_subcommand("list", "List builtin rules and coordinate presets");
    list->callback([&] {
        action = [&] {
            for (auto name : zoo::builtin_names()) out << "builtin: " << name << '\n';
            for (Preset p : shipped_presets()) out << "preset: " << to_string(p) << '\n';
            return kExitOk;
        };
    });

    // hyp
    auto* hyp = app.add_subcommand("hyp", "Game of Life on a patch of the octagon tiling");
    hyp->require_subcommand(1);
    int layers = 2;
    std::string hyp_out;
    std::string alive_path;
    int hyp_steps = 1;

    auto* hyp_build = hyp->add_subcommand("build", "Build a patch and print its ring sizes");
    hyp_build->add_option("--layers", layers, "Rings around the central octagon (0-6)")->capture_default_str();
    hyp_build->add_option("--out", hyp_out, "SVG output path");
    hyp_build->callback([&] {
        action = [&] {
            const auto patch = hyperbolic::build_patch(layers);
            out << hyp_summary(patch);
            if (!hyp_out.empty()) io::write_text_file(hyp_out, hyperbolic::render_svg(patch, {}));
            return kExitOk;
        };
    });

    auto* hyp_run = hyp->add_subcommand("run", "Step the sum rule on a patch");
    hyp_run->add_option("--layers", layers, "Rings around the central octagon (0-6)")->capture_default_str();
    hyp_run->add_option("--alive", alive_path, "JSON list of live cell ids")->required();
    hyp_run->add_option("--steps", hyp_steps, "Number of steps")->capture_default_str();
    hyp_run->add_option("--out", hyp_out, "SVG output path");
    hyp_run->callback([&] {
        action = [&] {
            if (hyp_steps < 0) throw ValidationError("--steps must be nonnegative");
            const auto patch = hyperbolic::build_patch(layers);
            std::set<int> alive = io::alive_from_json(io::read_json_file(alive_path));
            out << "step 0: " << id_list(alive) << '\n';
            for (int i = 1; i <= hyp_steps; ++i) {
                alive = hyperbolic::hyp_gol_step(patch, alive);
                out << "step " << i << ": " << id_list(alive) << '\n';
            }
            if (!hyp_out.empty()) io::write_text_file(hyp_out, hyperbolic::render_svg(patch, alive));
            return kExitOk;
        };
    });

    // CLI11 wants argv-style input.
    std::vector<std::string> storage{"gsetca"};
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& s : storage) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        // Prints help for --help and a diagnostic otherwise.
        return app.exit(e, out, err) == 0 ? kExitOk : kExitInvalid;
    }

    try {
        return action ? action() : kExitInvalid;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
}

} // namespace gsetca::cli
