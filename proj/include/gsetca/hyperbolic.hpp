#pragma once

// Finite patches of the {8,3} tessellation of the hyperbolic plane by regular
// octagons (three around each vertex), and the Game of Life sum rule on them.
// Geometry is floating point and only used to discover cells; everything after
// construction works on the exact adjacency lists.

#include <array>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

namespace gsetca::hyperbolic {

// Point of the hyperboloid x^2 + y^2 - t^2 = -1, t > 0.
struct HypPoint {
    double x = 0.0;
    double y = 0.0;
    double t = 1.0;
};

using Frame = std::array<double, 9>; // row-major Lorentz matrix

struct HypCell {
    int id = 0;
    int layer = 0;
    HypPoint center;
};

struct HypPatch {
    int layers = 0;
    std::vector<HypCell> cells;
    std::vector<std::vector<int>> neighbors; // sorted ids of edge-adjacent cells
    std::vector<bool> boundary;              // outermost ring: neighbourhood leaves the patch
    std::vector<Frame> frames;               // maps the central octagon onto each cell

    std::size_t size() const { return cells.size(); }
    std::vector<std::size_t> layer_counts() const; // cells per ring, index = layer
};

inline constexpr int kMaxLayers = 6;
inline constexpr double kDefaultTolerance = 1e-6;

// Hyperbolic distance between two hyperboloid points.
double distance(const HypPoint& a, const HypPoint& b);

// Breadth-first closure of the central octagon under its edge reflections, up to
// `layers` rings (0..kMaxLayers). Candidates closer than `tolerance` to a known
// centre are merged; a candidate landing between `tolerance` and a quarter of the
// centre spacing throws ToleranceCollision, since no two true centres are that close.
HypPatch build_patch(int layers, double tolerance = kDefaultTolerance);

// Sum rule over the cell and its 8 neighbours: live when the sum is 3, or 4 with a
// live centre. Boundary cells are frozen dead. Throws UnknownCell for bad ids.
std::set<int> hyp_gol_step(const HypPatch& patch, const std::set<int>& alive);

// Poincare disk picture; live cells filled.
std::string render_svg(const HypPatch& patch, const std::set<int>& alive, int size_px = 640);

// Poincare disk coordinates of a hyperboloid point.
std::array<double, 2> to_disk(const HypPoint& p);

} // namespace gsetca::hyperbolic
