#include "gsetca/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "gsetca/error.hpp"
#include "gsetca/zoo.hpp"

namespace gsetca::io {

using nlohmann::json;

namespace {

[[noreturn]] void field_error(const std::string& path, const std::string& what) {
    throw ValidationError("field " + path + ": " + what);
}

const json& require(const json& obj, const std::string& key, const std::string& path) {
    if (!obj.is_object()) field_error(path, "expected an object");
    const auto it = obj.find(key);
    if (it == obj.end()) field_error(path + "/" + key, "missing");
    return *it;
}

std::string as_string(const json& v, const std::string& path) {
    if (!v.is_string()) field_error(path, "expected a string");
    return v.get<std::string>();
}

std::int64_t as_int(const json& v, const std::string& path) {
    if (!v.is_number_integer()) field_error(path, "expected an integer");
    return v.get<std::int64_t>();
}

Cell as_cell(const json& v, const std::string& path) {
    if (!v.is_array() || v.size() != 2) field_error(path, "expected [x, y]");
    return {as_int(v[0], path + "/0"), as_int(v[1], path + "/1")};
}

json cell_json(Cell c) { return json::array({c.x, c.y}); }

// Wraps library errors with the field they came from.
template <class F>
auto at_field(const std::string& path, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const Error& e) {
        if (std::string_view(e.what()).starts_with("field ")) throw;
        field_error(path, e.what());
    }
}

StateSet states_from_json(const json& doc) {
    const json& list = require(doc, "states", "");
    if (!list.is_array() || list.empty()) field_error("/states", "expected a nonempty array of strings");
    std::vector<std::string> symbols;
    for (std::size_t i = 0; i < list.size(); ++i) {
        std::string s = as_string(list[i], "/states/" + std::to_string(i));
        if (s.empty() || s.find(',') != std::string::npos) {
            field_error("/states/" + std::to_string(i), "state names must be nonempty and contain no comma");
        }
        symbols.push_back(std::move(s));
    }
    const std::string quiescent = as_string(require(doc, "quiescent", ""), "/quiescent");
    return at_field("/states", [&] { return StateSet(symbols, quiescent); });
}

CoordinateSystem coords_from_json(const json& doc, Universe u) {
    const json& cs = require(doc, "coordinate_system", "");
    const std::string preset = as_string(require(cs, "preset", "/coordinate_system"), "/coordinate_system/preset");
    CoordinateSystem out = at_field("/coordinate_system/preset", [&] { return CoordinateSystem::preset(preset, u); });
    if (const auto it = cs.find("conjugate"); it != cs.end()) {
        const std::string text = as_string(*it, "/coordinate_system/conjugate");
        const Isometry g = at_field("/coordinate_system/conjugate", [&] { return parse_isometry(text); });
        out = conjugate_system(out, g);
    }
    if (const auto it = cs.find("origin"); it != cs.end()) {
        const Cell origin = as_cell(*it, "/coordinate_system/origin");
        if (origin != out.origin()) out = change_origin(out, out.coordinate(origin));
    }
    return out;
}

std::vector<std::string> split_key(const std::string& key) {
    std::vector<std::string> parts;
    if (key.empty()) return parts;
    std::string part;
    std::istringstream is(key);
    while (std::getline(is, part, ',')) parts.push_back(part);
    if (key.back() == ',') parts.emplace_back();
    return parts;
}

LocalRule local_rule_from_json(const json& rule_doc, MemorySet memory, const StateSet& states, Cell origin) {
    const std::string type = as_string(require(rule_doc, "type", "/rule"), "/rule/type");
    if (type == "table") {
        const json& entries = require(rule_doc, "entries", "/rule");
        if (!entries.is_object()) field_error("/rule/entries", "expected an object");
        std::map<std::vector<std::string>, std::string> table;
        for (const auto& [key, value] : entries.items()) {
            table.emplace(split_key(key), as_string(value, "/rule/entries/" + key));
        }
        return at_field("/rule/entries", [&] { return table_rule(std::move(memory), states, table); });
    }
    if (type == "life-sum") {
        Cell center = origin;
        if (const auto it = rule_doc.find("center"); it != rule_doc.end()) center = as_cell(*it, "/rule/center");
        std::optional<std::vector<Cell>> summed;
        if (const auto it = rule_doc.find("summed"); it != rule_doc.end()) {
            if (!it->is_array()) field_error("/rule/summed", "expected an array of cells");
            summed.emplace();
            for (std::size_t i = 0; i < it->size(); ++i) {
                summed->push_back(as_cell((*it)[i], "/rule/summed/" + std::to_string(i)));
            }
        }
        return at_field("/rule", [&] { return life_sum_rule(std::move(memory), states, center, summed); });
    }
    if (type == "projection") {
        const Cell read = as_cell(require(rule_doc, "cell", "/rule"), "/rule/cell");
        return at_field("/rule/cell", [&] { return projection_rule(std::move(memory), read); });
    }
    if (type == "margolus") {
        return at_field("/rule", [&] { return margolus_rule(std::move(memory), states); });
    }
    field_error("/rule/type", "unknown rule type '" + type + "'");
}

} // namespace

ConstructionTriple rule_from_json(const json& doc) {
    if (!doc.is_object()) field_error("/", "expected an object");
    if (const auto it = doc.find("builtin"); it != doc.end()) {
        const std::string name = as_string(*it, "/builtin");
        return at_field("/builtin", [&] { return zoo::builtin(name); });
    }
    const StateSet states = states_from_json(doc);
    const std::string universe_name = as_string(require(doc, "universe", ""), "/universe");
    const Universe u = at_field("/universe", [&] { return parse_universe(universe_name); });
    CoordinateSystem coords = coords_from_json(doc, u);

    const json& cells = require(doc, "memory", "");
    if (!cells.is_array()) field_error("/memory", "expected an array of cells");
    std::vector<Cell> memory;
    for (std::size_t i = 0; i < cells.size(); ++i) memory.push_back(as_cell(cells[i], "/memory/" + std::to_string(i)));
    MemorySet m = at_field("/memory", [&] { return MemorySet(std::move(memory)); });

    LocalRule rule = local_rule_from_json(require(doc, "rule", ""), std::move(m), states, coords.origin());
    std::string name;
    if (const auto it = doc.find("name"); it != doc.end()) name = as_string(*it, "/name");
    return at_field("/rule", [&] { return ConstructionTriple(std::move(rule), std::move(coords), states, name); });
}

json rule_to_json(const ConstructionTriple& tr) {
    const CoordinateSystem& cs = tr.coords();
    if (cs.kind() == Preset::Custom) throw ValidationError("custom coordinate systems cannot be written to a rule file");
    const StateSet& states = tr.states();
    json doc;
    if (!tr.name().empty()) doc["name"] = tr.name();
    doc["states"] = states.symbols();
    doc["quiescent"] = states.symbol(states.quiescent());
    doc["universe"] = std::string(to_string(tr.universe()));
    json coords{{"preset", std::string(to_string(cs.kind()))}, {"origin", cell_json(cs.origin())}};
    if (cs.conjugator() != Isometry::identity()) coords["conjugate"] = to_string(cs.conjugator());
    doc["coordinate_system"] = coords;

    json memory = json::array();
    for (const Cell& c : tr.memory()) memory.push_back(cell_json(c));
    doc["memory"] = memory;

    const auto& body = tr.rule().kernel().body;
    const auto& m = tr.memory();
    if (const auto* k = std::get_if<LifeSumKernel>(&body)) {
        json summed = json::array();
        for (std::size_t i : k->summed) summed.push_back(cell_json(m[i]));
        doc["rule"] = {{"type", "life-sum"}, {"center", cell_json(m[k->center])}, {"summed", summed}};
    } else if (const auto* p = std::get_if<ProjectionKernel>(&body)) {
        doc["rule"] = {{"type", "projection"}, {"cell", cell_json(m[p->index])}};
    } else if (const auto* g = std::get_if<MargolusKernel>(&body);
               g && g->block == std::array<std::size_t, 4>{0, 1, 2, 3}) {
        doc["rule"] = {{"type", "margolus"}};
    } else {
        // Everything else is written out as its full table.
        const TableKernel table = to_table(tr.rule(), states);
        json entries = json::object();
        std::vector<StateId> tuple(m.size());
        for (std::uint64_t i = 0; i < table.image.size(); ++i) {
            pattern_from_index(i, states.size(), tuple);
            std::string key;
            for (std::size_t j = 0; j < tuple.size(); ++j) key += (j ? "," : "") + states.symbol(tuple[j]);
            entries[key] = states.symbol(table.image[i]);
        }
        doc["rule"] = {{"type", "table"}, {"entries", entries}};
    }
    return doc;
}

Configuration config_from_json(const json& doc, const StateSet& states) {
    if (!doc.is_object()) field_error("/", "expected an object");
    const std::string def = as_string(require(doc, "default", ""), "/default");
    const StateId default_state = at_field("/default", [&] { return states.id(def); });
    Configuration x(default_state);
    const json& cells = require(doc, "cells", "");
    if (!cells.is_array()) field_error("/cells", "expected an array of [x, y, state]");
    std::set<Cell> seen;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const std::string path = "/cells/" + std::to_string(i);
        const json& e = cells[i];
        if (!e.is_array() || e.size() != 3) field_error(path, "expected [x, y, state]");
        const Cell c{as_int(e[0], path + "/0"), as_int(e[1], path + "/1")};
        const std::string sym = as_string(e[2], path + "/2");
        if (!seen.insert(c).second) field_error(path, "cell " + to_string(c) + " listed twice");
        x.set(c, at_field(path + "/2", [&] { return states.id(sym); }));
    }
    return x;
}

json config_to_json(const Configuration& x, const StateSet& states) {
    json cells = json::array();
    for (const auto& [c, s] : x.assignments()) cells.push_back(json::array({c.x, c.y, states.symbol(s)}));
    return json{{"default", states.symbol(x.default_state())}, {"cells", cells}};
}

std::set<int> alive_from_json(const json& doc) {
    const json* list = &doc;
    std::string path = "";
    if (doc.is_object()) {
        list = &require(doc, "alive", "");
        path = "/alive";
    }
    if (!list->is_array()) field_error(path.empty() ? "/" : path, "expected an array of cell ids");
    std::set<int> out;
    for (std::size_t i = 0; i < list->size(); ++i) {
        out.insert(static_cast<int>(as_int((*list)[i], path + "/" + std::to_string(i))));
    }
    return out;
}

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open '" + path.string() + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError("'" + path.string() + "': " + e.what());
    }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write '" + path.string() + "'");
    out << text;
    if (!out) throw ValidationError("write to '" + path.string() + "' failed");
}

ConstructionTriple load_rule(const std::string& ref) {
    constexpr std::string_view prefix = "builtin:";
    if (ref.starts_with(prefix)) return zoo::builtin(std::string_view(ref).substr(prefix.size()));
    try {
        return rule_from_json(read_json_file(ref));
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ValidationError("rule file '" + ref + "': " + e.what());
    }
}

Configuration load_config(const std::filesystem::path& path, const StateSet& states) {
    try {
        return config_from_json(read_json_file(path), states);
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ValidationError("config file '" + path.string() + "': " + e.what());
    }
}

std::vector<char> state_aliases(const StateSet& states) {
    std::vector<char> out(states.size(), '?');
    std::set<char> used{'.'};
    out[states.quiescent()] = '.';
    for (StateId i = 0; i < states.size(); ++i) {
        const std::string& s = states.symbol(i);
        if (i == states.quiescent() || s.size() != 1 || !std::isgraph(static_cast<unsigned char>(s[0]))) continue;
        if (used.insert(s[0]).second) out[i] = s[0];
    }
    char next = 'A';
    for (StateId i = 0; i < states.size(); ++i) {
        if (out[i] != '?') continue;
        while (used.contains(next)) ++next;
        out[i] = next;
        used.insert(next);
    }
    return out;
}

std::string render_text(const Configuration& x, const StateSet& states, const Window& w) {
    const auto alias = state_aliases(states);
    std::string out;
    for (std::int64_t y = w.hi.y; y >= w.lo.y; --y) {
        for (std::int64_t cx = w.lo.x; cx <= w.hi.x; ++cx) out += alias[x.at({cx, y})];
        out += '\n';
    }
    return out;
}

std::string render_pgm(const Configuration& x, const StateSet& states, const Window& w) {
    const std::size_t maxval = std::max<std::size_t>(1, states.size() - 1);
    std::ostringstream os;
    os << "P2\n" << w.width() << ' ' << w.height() << '\n' << maxval << '\n';
    for (std::int64_t y = w.hi.y; y >= w.lo.y; --y) {
        for (std::int64_t cx = w.lo.x; cx <= w.hi.x; ++cx) {
            os << (cx == w.lo.x ? "" : " ") << maxval - x.at({cx, y});
        }
        os << '\n';
    }
    return os.str();
}

std::string render_svg(const Configuration& x, const StateSet& states, const Window& w, int cell_px) {
    static constexpr const char* palette[] = {"#000000", "#d62728", "#1f77b4", "#2ca02c",
                                              "#ff7f0e", "#9467bd", "#8c564b", "#e377c2"};
    const auto width = w.width() * cell_px;
    const auto height = w.height() * cell_px;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
       << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    os << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"#ffffff\"/>\n";
    for (const auto& [c, s] : x.assignments()) {
        if (!w.contains(c)) continue;
        // Rank among non-quiescent states picks the colour.
        const std::size_t rank = s < states.quiescent() ? s : s - 1u;
        os << "<rect x=\"" << (c.x - w.lo.x) * cell_px << "\" y=\"" << (w.hi.y - c.y) * cell_px << "\" width=\""
           << cell_px << "\" height=\"" << cell_px << "\" fill=\"" << palette[rank % 8] << "\"><title>"
           << to_string(c) << ' ' << states.symbol(s) << "</title></rect>\n";
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace gsetca::io
