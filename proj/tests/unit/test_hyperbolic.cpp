#include <cmath>
#include <map>
#include <numbers>
#include <random>

#include "doctest.h"
#include "gsetca/error.hpp"
#include "gsetca/hyperbolic.hpp"
#include "gsetca/zoo.hpp"
#include "oracles.hpp"

using namespace gsetca;
using namespace gsetca::hyperbolic;

namespace {

std::size_t edge_count(const std::vector<std::vector<int>>& adj) {
    std::size_t sum = 0;
    for (const auto& n : adj) sum += n.size();
    return sum / 2;
}

std::map<std::pair<int, std::size_t>, int> degree_histogram(const std::vector<std::vector<int>>& adj,
                                                            const std::vector<int>& ring) {
    std::map<std::pair<int, std::size_t>, int> h;
    for (std::size_t i = 0; i < adj.size(); ++i) ++h[{ring[i], adj[i].size()}];
    return h;
}

std::vector<int> rings(const HypPatch& p) {
    std::vector<int> r;
    for (const auto& c : p.cells) r.push_back(c.layer);
    return r;
}

} // namespace

TEST_CASE("small patches") {
    const auto p0 = build_patch(0);
    CHECK(p0.size() == 1u);
    CHECK(p0.boundary[0]);
    const auto p1 = build_patch(1);
    CHECK(p1.size() == 9u);
    CHECK(p1.neighbors[0].size() == 8u);
    CHECK_FALSE(p1.boundary[0]);
    for (int i = 1; i < 9; ++i) CHECK(p1.boundary[i]);
}

TEST_CASE("ring structure matches the dual triangulation") {
    for (int layers = 1; layers <= kMaxLayers; ++layers) {
        CAPTURE(layers);
        const auto patch = build_patch(layers);
        const auto dual = oracle::dual_ball(layers);
        CHECK(patch.layer_counts() == dual.ring_sizes);
        CHECK(edge_count(patch.neighbors) == edge_count(dual.adjacency));
        CHECK(degree_histogram(patch.neighbors, rings(patch)) == degree_histogram(dual.adjacency, dual.ring));
    }
    CHECK(build_patch(6).layer_counts() == std::vector<std::size_t>{1, 8, 32, 120, 448, 1672, 6240});
}

TEST_CASE("adjacency invariants") {
    for (int layers = 0; layers <= 5; ++layers) {
        const auto p = build_patch(layers);
        for (std::size_t i = 0; i < p.size(); ++i) {
            const auto& n = p.neighbors[i];
            CHECK(std::is_sorted(n.begin(), n.end()));
            for (int j : n) {
                CHECK(j != static_cast<int>(i));
                CHECK(std::binary_search(p.neighbors[j].begin(), p.neighbors[j].end(), static_cast<int>(i)));
                CHECK(std::abs(p.cells[j].layer - p.cells[i].layer) <= 1);
            }
            CHECK(p.boundary[i] == (p.cells[i].layer == layers));
            if (p.boundary[i]) continue;
            CHECK(n.size() == 8u);
            // Three octagons per vertex: the neighbours of an interior cell form an 8-cycle,
            // giving eight triangles through the cell.
            int triangles = 0;
            for (int a : n) {
                int inside = 0;
                for (int b : p.neighbors[a])
                    if (std::binary_search(n.begin(), n.end(), b)) ++inside;
                CHECK(inside == 2);
                triangles += inside;
            }
            CHECK(triangles / 2 == 8);
        }
    }
}

TEST_CASE("neighbouring centres sit twice the inradius apart") {
    const double inradius = std::acosh(std::cos(std::numbers::pi / 3) / std::sin(std::numbers::pi / 8));
    const auto p = build_patch(4);
    for (std::size_t i = 0; i < p.size(); ++i) {
        const double norm = p.cells[i].center.x * p.cells[i].center.x + p.cells[i].center.y * p.cells[i].center.y -
                            p.cells[i].center.t * p.cells[i].center.t;
        CHECK(norm == doctest::Approx(-1.0).epsilon(1e-9));
        for (int j : p.neighbors[i])
            CHECK(distance(p.cells[i].center, p.cells[j].center) == doctest::Approx(2 * inradius).epsilon(1e-9));
        const auto d = to_disk(p.cells[i].center);
        CHECK(std::hypot(d[0], d[1]) < 1.0);
    }
}

TEST_CASE("dedup is stable under a smaller tolerance") {
    for (int layers : {3, 5}) {
        const auto a = build_patch(layers);
        const auto b = build_patch(layers, kDefaultTolerance / 2);
        CHECK(a.neighbors == b.neighbors);
        CHECK(a.layer_counts() == b.layer_counts());
        CHECK(a.boundary == b.boundary);
    }
}

TEST_CASE("invalid patch requests") {
    CHECK_THROWS_AS(build_patch(-1), ValidationError);
    CHECK_THROWS_AS(build_patch(kMaxLayers + 1), ValidationError);
    CHECK_THROWS_AS(build_patch(2, 0.0), ValidationError);
    CHECK_THROWS_AS(build_patch(2, 1.0), ValidationError);
    bool rejected = false;
    try {
        build_patch(4, 1e-300);
    } catch (const ToleranceCollision&) {
        rejected = true;
    } catch (const ValidationError&) {
        rejected = true;
    }
    CHECK(rejected);
}

TEST_CASE("hyperbolic Game of Life step") {
    const auto p = build_patch(2);
    CHECK(hyp_gol_step(p, {}).empty());
    CHECK(hyp_gol_step(p, {0}).empty());
    const int a = p.neighbors[0][0], b = p.neighbors[0][3];
    CHECK(hyp_gol_step(p, {0, a, b}).contains(0));
    CHECK_THROWS_AS(hyp_gol_step(p, {-1}), UnknownCell);
    CHECK_THROWS_AS(hyp_gol_step(p, {static_cast<int>(p.size())}), UnknownCell);
    CHECK(render_svg(p, {0}).find("<svg") != std::string::npos);
}

TEST_CASE("hyperbolic step uses the same local rule as the Euclidean Game of Life") {
    const auto gol = zoo::builtin("game-of-life");
    const auto& states = gol.states();
    const auto p = build_patch(3);
    std::mt19937_64 rng(31);
    std::bernoulli_distribution coin(0.35);
    for (int trial = 0; trial < 30; ++trial) {
        std::set<int> alive;
        for (std::size_t i = 0; i < p.size(); ++i)
            if (coin(rng)) alive.insert(static_cast<int>(i));
        const auto next = hyp_gol_step(p, alive);
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (p.boundary[i]) {
                CHECK_FALSE(next.contains(static_cast<int>(i)));
                continue;
            }
            std::vector<std::string> tuple(9);
            tuple[4] = alive.contains(static_cast<int>(i)) ? "1" : "0";
            for (std::size_t k = 0, slot = 0; k < 8; ++k, ++slot) {
                if (slot == 4) ++slot;
                tuple[slot] = alive.contains(p.neighbors[i][k]) ? "1" : "0";
            }
            REQUIRE((local_eval(gol.rule(), states, tuple) == "1") == next.contains(static_cast<int>(i)));
        }
    }
}
