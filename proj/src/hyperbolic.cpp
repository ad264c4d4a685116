#include "gsetca/hyperbolic.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <numbers>
#include <sstream>

#include "gsetca/error.hpp"

namespace gsetca::hyperbolic {

namespace {

constexpr int kSides = 8;
constexpr int kAroundVertex = 3;

// Inradius and circumradius of the regular octagon with three at each vertex.
const double kInradius = std::acosh(std::cos(std::numbers::pi / kAroundVertex) / std::sin(std::numbers::pi / kSides));
const double kCircumradius =
    std::acosh(1.0 / (std::tan(std::numbers::pi / kSides) * std::tan(std::numbers::pi / kAroundVertex)));

Frame multiply(const Frame& a, const Frame& b) {
    Frame out{};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            double s = 0.0;
            for (int k = 0; k < 3; ++k) s += a[3 * i + k] * b[3 * k + j];
            out[3 * i + j] = s;
        }
    }
    return out;
}

HypPoint map_point(const Frame& m, const HypPoint& p) {
    return {m[0] * p.x + m[1] * p.y + m[2] * p.t, m[3] * p.x + m[4] * p.y + m[5] * p.t,
            m[6] * p.x + m[7] * p.y + m[8] * p.t};
}

// Reflection in the geodesic carrying edge k of the central octagon; the edge
// midpoint lies in direction k * 45 degrees.
Frame edge_reflection(int k) {
    const double theta = k * 2.0 * std::numbers::pi / kSides;
    const std::array<double, 3> n{std::cos(theta) * std::cosh(kInradius), std::sin(theta) * std::cosh(kInradius),
                                  std::sinh(kInradius)};
    const std::array<double, 3> jn{n[0], n[1], -n[2]}; // J n with J = diag(1,1,-1)
    Frame r{};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) r[3 * i + j] = (i == j ? 1.0 : 0.0) - 2.0 * n[i] * jn[j];
    }
    return r;
}

const std::array<Frame, kSides>& reflections() {
    static const std::array<Frame, kSides> table = [] {
        std::array<Frame, kSides> t{};
        for (int k = 0; k < kSides; ++k) t[k] = edge_reflection(k);
        return t;
    }();
    return table;
}

constexpr Frame kIdentityFrame{1, 0, 0, 0, 1, 0, 0, 0, 1};

// Index of centres by polar angle, so a lookup only inspects an angular window.
class CenterIndex {
public:
    CenterIndex(double tolerance, double band) : tolerance_(tolerance), band_(band) {}

    // Id of the centre within tolerance of p, or -1.
    int find(const HypPoint& p, const std::vector<HypCell>& cells) const {
        const double r = std::hypot(p.x, p.y);
        const double ratio = std::sinh(band_) / std::max(r, 1e-300);
        if (ratio >= 1.0 || index_.size() < 16) return scan(p, cells, index_.begin(), index_.end());
        const double w = 1.1 * std::asin(ratio) + 1e-12;
        const double a = std::atan2(p.y, p.x);
        int found = scan(p, cells, index_.lower_bound(a - w), index_.upper_bound(a + w));
        // The window may wrap around the branch cut at +-pi.
        if (found < 0 && a - w < -std::numbers::pi) {
            found = scan(p, cells, index_.lower_bound(a - w + 2 * std::numbers::pi), index_.end());
        }
        if (found < 0 && a + w > std::numbers::pi) {
            found = scan(p, cells, index_.begin(), index_.upper_bound(a + w - 2 * std::numbers::pi));
        }
        return found;
    }

    void insert(const HypPoint& p, int id) { index_.emplace(std::atan2(p.y, p.x), id); }

private:
    using Map = std::multimap<double, int>;

    int scan(const HypPoint& p, const std::vector<HypCell>& cells, Map::const_iterator first,
             Map::const_iterator last) const {
        for (auto it = first; it != last; ++it) {
            const double d = distance(p, cells[static_cast<std::size_t>(it->second)].center);
            if (d < tolerance_) return it->second;
            if (d < band_) {
                std::ostringstream msg;
                msg << "candidate centre lies " << d << " from cell " << it->second
                    << ", outside the merge tolerance " << tolerance_ << " but too close to be a distinct cell";
                throw ToleranceCollision(msg.str());
            }
        }
        return -1;
    }

    double tolerance_;
    double band_;
    Map index_;
};

} // namespace

double distance(const HypPoint& a, const HypPoint& b) {
    // cosh d - 1 = <a-b, a-b> / 2 in the Minkowski form; stable for nearby points.
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    const double dt = a.t - b.t;
    const double q = std::max(0.0, dx * dx + dy * dy - dt * dt);
    return 2.0 * std::asinh(std::sqrt(q) / 2.0);
}

std::array<double, 2> to_disk(const HypPoint& p) { return {p.x / (1.0 + p.t), p.y / (1.0 + p.t)}; }

std::vector<std::size_t> HypPatch::layer_counts() const {
    std::vector<std::size_t> counts(static_cast<std::size_t>(layers) + 1, 0);
    for (const HypCell& c : cells) ++counts[static_cast<std::size_t>(c.layer)];
    return counts;
}

HypPatch build_patch(int layers, double tolerance) {
    if (layers < 0 || layers > kMaxLayers) {
        throw ValidationError("layers must be between 0 and " + std::to_string(kMaxLayers));
    }
    const double spacing = 2.0 * kInradius; // distance between adjacent centres
    if (!(tolerance > 0.0) || tolerance >= spacing / 4.0) {
        throw ValidationError("tolerance must be positive and well below the centre spacing");
    }

    HypPatch patch;
    patch.layers = layers;
    CenterIndex index(tolerance, spacing / 4.0);
    std::vector<std::set<int>> adjacency;

    auto add_cell = [&](const Frame& frame, int layer) {
        const int id = static_cast<int>(patch.cells.size());
        const HypPoint c = map_point(frame, HypPoint{});
        patch.cells.push_back({id, layer, c});
        patch.frames.push_back(frame);
        adjacency.emplace_back();
        index.insert(c, id);
        return id;
    };

    add_cell(kIdentityFrame, 0);
    std::size_t ring_begin = 0;
    for (int layer = 0; layer <= layers; ++layer) {
        const std::size_t ring_end = patch.cells.size();
        for (std::size_t i = ring_begin; i < ring_end; ++i) {
            const Frame frame = patch.frames[i];
            for (const Frame& r : reflections()) {
                const Frame next = multiply(frame, r);
                int j = index.find(map_point(next, HypPoint{}), patch.cells);
                if (j < 0) {
                    if (layer == layers) continue; // outside the patch
                    j = add_cell(next, layer + 1);
                }
                adjacency[i].insert(j);
                adjacency[static_cast<std::size_t>(j)].insert(static_cast<int>(i));
            }
        }
        ring_begin = ring_end;
    }

    for (const auto& s : adjacency) patch.neighbors.emplace_back(s.begin(), s.end());
    for (const HypCell& c : patch.cells) patch.boundary.push_back(c.layer == layers);
    return patch;
}

std::set<int> hyp_gol_step(const HypPatch& patch, const std::set<int>& alive) {
    const int n = static_cast<int>(patch.size());
    std::vector<char> live(patch.size(), 0);
    for (int id : alive) {
        if (id < 0 || id >= n) throw UnknownCell("cell id " + std::to_string(id) + " is not in the patch");
        live[static_cast<std::size_t>(id)] = 1;
    }
    std::set<int> out;
    for (int id = 0; id < n; ++id) {
        const auto i = static_cast<std::size_t>(id);
        if (patch.boundary[i]) continue;
        int sum = live[i];
        for (int j : patch.neighbors[i]) sum += live[static_cast<std::size_t>(j)];
        if (sum == 3 || (sum == 4 && live[i])) out.insert(id);
    }
    return out;
}

std::string render_svg(const HypPatch& patch, const std::set<int>& alive, int size_px) {
    const double half = size_px / 2.0;
    const double scale = half - 4.0;
    std::ostringstream os;
    os << std::fixed << std::setprecision(3);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size_px << "\" height=\"" << size_px
       << "\" viewBox=\"0 0 " << size_px << ' ' << size_px << "\">\n";
    os << "<circle cx=\"" << half << "\" cy=\"" << half << "\" r=\"" << scale
       << "\" fill=\"none\" stroke=\"#888\" stroke-width=\"1\"/>\n";

    std::array<HypPoint, kSides> corners{};
    for (int k = 0; k < kSides; ++k) {
        const double a = (k + 0.5) * 2.0 * std::numbers::pi / kSides;
        corners[k] = {std::cos(a) * std::sinh(kCircumradius), std::sin(a) * std::sinh(kCircumradius),
                      std::cosh(kCircumradius)};
    }
    for (const HypCell& c : patch.cells) {
        const Frame& f = patch.frames[static_cast<std::size_t>(c.id)];
        os << "<polygon data-id=\"" << c.id << "\" data-layer=\"" << c.layer << "\" points=\"";
        for (int k = 0; k < kSides; ++k) {
            const auto d = to_disk(map_point(f, corners[k]));
            os << (k ? " " : "") << half + scale * d[0] << ',' << half - scale * d[1];
        }
        os << "\" fill=\"" << (alive.contains(c.id) ? "#000" : "#fff")
           << "\" stroke=\"#333\" stroke-width=\"0.5\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace gsetca::hyperbolic
