#pragma once

// Reference implementations used only by the tests. None of them call into the
// library's stepping or geometry code.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace oracle {

using Grid = std::map<std::pair<std::int64_t, std::int64_t>, int>; // live cells only, value 1

// Ball of the given radius around one vertex of the {3,8} triangulation (the
// dual of the octagon tiling), built ring by ring from degree deficits.
struct DualBall {
    std::vector<std::vector<int>> adjacency;
    std::vector<int> ring;
    std::vector<std::size_t> ring_sizes;
};
DualBall dual_ball(int layers);

// B3/S23 on a dense array covering the support plus a margin.
Grid life_step(const Grid& live);

// Billiard-ball block rule on the 2x2 partition whose blocks have lower-left
// corners at offset + 2Z^2.
Grid billiard_step(const Grid& live, std::int64_t offset);

} // namespace oracle
