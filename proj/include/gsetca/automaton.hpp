#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gsetca/configuration.hpp"
#include "gsetca/coordsys.hpp"
#include "gsetca/rule.hpp"

namespace gsetca {

// (memory set, local rule, coordinate system) over a state set. Construction
// validates quiescence: the all-quiescent tuple must map to the quiescent state.
class ConstructionTriple {
public:
    ConstructionTriple(LocalRule rule, CoordinateSystem coords, StateSet states, std::string name = {});

    const LocalRule& rule() const { return rule_; }
    const MemorySet& memory() const { return rule_.memory(); }
    const CoordinateSystem& coords() const { return coords_; }
    const StateSet& states() const { return states_; }
    Universe universe() const { return coords_.universe(); }
    Cell origin() const { return coords_.origin(); }
    const std::string& name() const { return name_; }

    // Largest squared centre distance from the origin to a memory cell. Every
    // coordinate is an isometry, so cell a only reads cells within this distance.
    std::int64_t reach2() const { return reach2_; }

    // Tuple read by cell `a`: x at coordinate(a) . beta for beta in M, in order.
    std::vector<StateId> read(const Configuration& x, Cell a) const;

private:
    LocalRule rule_;
    CoordinateSystem coords_;
    StateSet states_;
    std::string name_;
    std::int64_t reach2_ = 0;
};

// Global transition map. Requires x.default_state() to be the quiescent state.
Configuration step(const ConstructionTriple& tr, const Configuration& x);

Configuration run(const ConstructionTriple& tr, Configuration x, int steps);

// Exact evaluation when x is only known on `known`: the result holds tau(x) on
// every cell of `known` whose whole read set lies in `known`. An empty region is
// a valid outcome.
struct WindowStep {
    std::vector<Cell> region; // sorted
    std::map<Cell, StateId> values;
    std::optional<Window> bounds;
};

WindowStep step_window(const ConstructionTriple& tr, const Window& known, const Configuration& x);

} // namespace gsetca
