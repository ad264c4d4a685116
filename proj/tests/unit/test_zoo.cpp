#include <random>
#include <set>

#include "doctest.h"
#include "gsetca/analysis.hpp"
#include "gsetca/error.hpp"
#include "gsetca/zoo.hpp"
#include "helpers.hpp"

using namespace gsetca;

namespace {

const StateSet kBinary = StateSet::binary();

std::set<Cell> support(const Configuration& x) {
    std::set<Cell> out;
    for (const auto& [c, s] : x.assignments()) out.insert(c);
    return out;
}

} // namespace

TEST_CASE("every builtin resolves and validates") {
    CHECK(zoo::builtin_names().size() == 9u);
    for (auto name : zoo::builtin_names()) {
        CAPTURE(name);
        const auto tr = zoo::builtin(name);
        CHECK(tr.name() == name);
        CHECK(verify_on_patch(tr.coords(), 10).ok);
        CHECK(step(tr, Configuration(tr.states().quiescent())).empty());
        CHECK(tr.states() == kBinary);
    }
    CHECK_THROWS_AS(zoo::builtin("no-such-rule"), ValidationError);
}

TEST_CASE("identity builtin") {
    const auto id = zoo::builtin("identity");
    std::mt19937_64 rng(20);
    for (int i = 0; i < 20; ++i) {
        const auto x = random_configuration(kBinary, 8, rng);
        CHECK(step(id, x) == x);
    }
}

TEST_CASE("margolus tau0 moves a lone ball across its block") {
    const auto tau0 = zoo::builtin("margolus-tau0");
    Configuration x(0);
    x.set({0, 0}, 1);
    CHECK(support(step(tau0, x)) == std::set<Cell>{{1, 1}});
    // tau1 blocks start at (1,1), so (0,0) is the upper-right corner of its block.
    const auto tau1 = zoo::builtin("margolus-tau1");
    CHECK(support(step(tau1, x)) == std::set<Cell>{{-1, -1}});
}

TEST_CASE("margolus automata are involutions") {
    std::mt19937_64 rng(100);
    for (const char* name : {"margolus-tau0", "margolus-tau1"}) {
        const auto tr = zoo::builtin(name);
        for (int i = 0; i < 100; ++i) {
            const auto x = random_configuration(kBinary, 7, rng);
            REQUIRE(run(tr, x, 2) == x);
        }
    }
}

TEST_CASE("the wedge state shift and its inverse cancel") {
    const auto a = zoo::builtin("state-shift-44");
    const auto b = zoo::builtin("state-shift-44-inverse");
    std::mt19937_64 rng(44);
    for (int i = 0; i < 100; ++i) {
        const auto x = random_configuration(kBinary, 7, rng);
        REQUIRE(step(a, step(b, x)) == x);
        REQUIRE(step(b, step(a, x)) == x);
    }
}

TEST_CASE("single-cell state shifts permute cells") {
    for (const char* name : {"state-shift-c", "state-shift-d", "state-shift-44", "state-shift-44-inverse"}) {
        CAPTURE(name);
        const auto tr = zoo::builtin(name);
        CHECK(tr.memory().size() == 1u);
        // Every cell reads exactly one cell; over a patch, no two cells read the same one.
        std::set<Cell> read;
        for (int a = -8; a <= 8; ++a)
            for (int b = -8; b <= 8; ++b) {
                const Cell c{a, b};
                const Cell r = act(tr.coords().coordinate(c), tr.memory()[0], tr.universe());
                CHECK(read.insert(r).second);
            }
    }
}

TEST_CASE("declared stabiliser invariance of the builtins") {
    const auto gol = zoo::builtin("game-of-life");
    const auto d4 = d4_stabilizer({0, 0}, Universe::SquareTessellation).generators;
    REQUIRE(d4.size() == 8u);
    for (const auto& r : analysis::invariance_check(gol, d4)) CHECK(r.holds);

    const auto shift = zoo::builtin("state-shift-44");
    const Isometry quarter{PointPart::R90, {1, 0}}; // about the centre of cell (0,0)
    const auto reports = analysis::invariance_check(shift, std::vector<Isometry>{quarter});
    REQUIRE(reports.size() == 1u);
    CHECK_FALSE(reports[0].holds);
}

TEST_CASE("padded Game of Life steps like the plain one") {
    const auto gol = zoo::builtin("game-of-life");
    const auto padded = zoo::padded_game_of_life({5, 5});
    CHECK(padded.memory().size() == 10u);
    std::mt19937_64 rng(55);
    for (int i = 0; i < 20; ++i) {
        const auto x = random_configuration(kBinary, 6, rng);
        CHECK(step(gol, x) == step(padded, x));
    }
}
