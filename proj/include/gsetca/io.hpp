#pragma once

// JSON rule and configuration files, and configuration renderers.

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "gsetca/automaton.hpp"

namespace gsetca::io {

// Rule file:
//   {"states": [...], "quiescent": s, "universe": "square-tessellation",
//    "coordinate_system": {"preset": p, "origin": [x,y], "conjugate": "A:tx,ty"},
//    "memory": [[x,y],...], "rule": {...}}
// or {"builtin": name}. "conjugate" is optional; when present the preset is
// conjugated first and the origin is then moved to "origin".
// Rule kinds: {"type": "table", "entries": {"s1,s2,...": s}},
//             {"type": "life-sum", "center": [x,y], "summed": [[x,y],...]} (both optional),
//             {"type": "projection", "cell": [x,y]}, {"type": "margolus"}.
ConstructionTriple rule_from_json(const nlohmann::json& doc);
nlohmann::json rule_to_json(const ConstructionTriple& tr);

// Config file: {"default": s, "cells": [[x,y,s],...]}; cells equal to the
// default are dropped. The default must be a state of `states`.
Configuration config_from_json(const nlohmann::json& doc, const StateSet& states);
nlohmann::json config_to_json(const Configuration& x, const StateSet& states);

// Hyperbolic alive set: a JSON array of ids or {"alive": [...]}.
std::set<int> alive_from_json(const nlohmann::json& doc);

nlohmann::json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

// A rule reference: "builtin:NAME" or a path to a rule file.
ConstructionTriple load_rule(const std::string& ref);
Configuration load_config(const std::filesystem::path& path, const StateSet& states);

// One printable character per state: '.' for the quiescent state, the symbol
// itself when it is a single other printable character, otherwise letters.
std::vector<char> state_aliases(const StateSet& states);

// Rows from the top (largest y) down, one alias per cell.
std::string render_text(const Configuration& x, const StateSet& states, const Window& w);
// Plain PGM (P2). Grey level = maxval - state id, so state 0 is white.
std::string render_pgm(const Configuration& x, const StateSet& states, const Window& w);
std::string render_svg(const Configuration& x, const StateSet& states, const Window& w, int cell_px = 12);

} // namespace gsetca::io
