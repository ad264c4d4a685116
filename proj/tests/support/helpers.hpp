#pragma once

#include <random>
#include <vector>

#include "gsetca/configuration.hpp"
#include "oracles.hpp"

namespace testing_support {

// The standard five-cell glider, y pointing up:
//   .#.
//   ..#
//   ###
inline gsetca::Configuration glider() {
    gsetca::Configuration x(0);
    for (gsetca::Cell c : std::vector<gsetca::Cell>{{1, 2}, {2, 1}, {0, 0}, {1, 0}, {2, 0}}) x.set(c, 1);
    return x;
}

// Translation found by a brute-force pre-run of the glider for four steps.
inline constexpr gsetca::Vec2 kGliderDrift{1, -1};

inline oracle::Grid to_grid(const gsetca::Configuration& x) {
    oracle::Grid g;
    for (const auto& [c, s] : x.assignments()) g[{c.x, c.y}] = 1;
    return g;
}

inline gsetca::Configuration translated(const gsetca::Configuration& x, gsetca::Vec2 v) {
    gsetca::Configuration out(x.default_state());
    for (const auto& [c, s] : x.assignments()) out.set(c + v, s);
    return out;
}

} // namespace testing_support
