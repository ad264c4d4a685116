#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "gsetca/analysis.hpp"
#include "gsetca/error.hpp"
#include "gsetca/zoo.hpp"
#include "helpers.hpp"

using namespace gsetca;
using namespace gsetca::analysis;

namespace {

const StateSet kBinary = StateSet::binary();
constexpr Universe kSquare = Universe::SquareTessellation;

std::set<Cell> as_set(const MemorySet& m) { return {m.begin(), m.end()}; }

std::set<Cell> moved(const Isometry& g, const MemorySet& m, Universe u) {
    std::set<Cell> out;
    for (const Cell& c : m) out.insert(act(g, c, u));
    return out;
}

bool step_equivalent(const ConstructionTriple& a, const ConstructionTriple& b, int trials, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int i = 0; i < trials; ++i) {
        const auto x = random_configuration(a.states(), 6, rng);
        if (step(a, x) != step(b, x)) return false;
    }
    return true;
}

ConstructionTriple three_state_identity() {
    return ConstructionTriple(projection_rule(MemorySet({{0, 0}}), {0, 0}),
                              CoordinateSystem::preset(Preset::TranslationsOnly), StateSet({"a", "b", "c"}, "a"));
}

ConstructionTriple identity_on(Universe u) {
    return ConstructionTriple(projection_rule(MemorySet({{0, 0}}), {0, 0}),
                              CoordinateSystem::preset(Preset::TranslationsOnly, u), kBinary);
}

// Same automaton, origin moved by g in T: memory g.M, same kernel.
ConstructionTriple rebased(const ConstructionTriple& tr, const Isometry& g) {
    std::vector<Cell> cells;
    for (const Cell& c : tr.memory()) cells.push_back(act(g, c, tr.universe()));
    return ConstructionTriple(LocalRule(MemorySet(cells), tr.rule().kernel_ptr()), change_origin(tr.coords(), g),
                              tr.states());
}

} // namespace

TEST_CASE("useful cells") {
    CHECK(as_set(useful_cells(zoo::builtin("identity"))) == std::set<Cell>{{0, 0}});
    const auto moore = as_set(zoo::moore_memory());
    CHECK(as_set(useful_cells(zoo::padded_game_of_life({5, 5}))) == moore);
    CHECK(as_set(useful_cells(zoo::builtin("game-of-life"))) == moore);

    // Spot check: the centre matters when exactly two neighbours are alive.
    const auto gol = zoo::builtin("game-of-life");
    std::vector<std::string> p(9, "0");
    p[0] = p[1] = "1";
    const auto dead = local_eval(gol.rule(), kBinary, p);
    p[4] = "1";
    CHECK(dead != local_eval(gol.rule(), kBinary, p));

    std::vector<Cell> many;
    for (int i = 0; i < 17; ++i) many.push_back({i, 0});
    const ConstructionTriple big(constant_rule(MemorySet(many), 0), CoordinateSystem::preset(Preset::TranslationsOnly),
                                 kBinary);
    CHECK_THROWS_AS(useful_cells(big), TooLarge);
}

TEST_CASE("minimize") {
    const auto padded = zoo::padded_game_of_life({5, 5});
    const auto small = minimize(padded);
    CHECK(small.memory().size() == 9u);
    CHECK(step_equivalent(padded, small, 50, 7));

    const auto gol = zoo::builtin("game-of-life");
    CHECK(minimize(gol).memory() == gol.memory());

    const ConstructionTriple flat(constant_rule(zoo::moore_memory(), 0),
                                  CoordinateSystem::preset(Preset::TranslationsOnly), kBinary);
    const auto none = minimize(flat);
    CHECK(none.memory().empty());
    CHECK(step_equivalent(flat, none, 10, 8));
}

TEST_CASE("useful_cells is idempotent on minimised triples") {
    std::vector<ConstructionTriple> all{zoo::padded_game_of_life({-3, 4})};
    for (auto name : zoo::builtin_names()) all.push_back(zoo::builtin(name));
    for (const auto& tr : all) {
        const auto m = minimize(tr);
        CHECK(useful_cells(m) == m.memory());
        CHECK(step_equivalent(tr, m, 20, 9));
    }
}

TEST_CASE("minimal memory follows a change of origin") {
    const std::vector<std::pair<ConstructionTriple, Cell>> cases{
        {zoo::padded_game_of_life({5, 5}), {3, -2}},
        {zoo::builtin("fairy-lights"), {1, 0}}, // odd cell: coordinate is a half turn
        {zoo::builtin("fairy-lights"), {2, 4}},
    };
    for (const auto& [tr, target] : cases) {
        const Isometry g = tr.coords().coordinate(target);
        const auto other = rebased(tr, g);
        CHECK(other.origin() == target);
        CHECK(step_equivalent(tr, other, 30, 10));
        CHECK(as_set(useful_cells(other)) == moved(g, useful_cells(tr), tr.universe()));
    }
}

TEST_CASE("stabilisers preserve the minimal memory of the Game of Life") {
    const auto m0 = useful_cells(zoo::builtin("game-of-life"));
    for (const auto& s : d4_stabilizer({0, 0}, kSquare).generators) CHECK(moved(s, m0, kSquare) == as_set(m0));
}

TEST_CASE("equivariance witnesses are closed under composition and inverse") {
    struct Case {
        const char* name;
        Isometry g, h;
    };
    const std::vector<Case> cases{
        {"game-of-life", {PointPart::R90, {1, 0}}, Isometry::translate({2, -1})},
        {"fairy-lights", Isometry::translate({1, 1}), {PointPart::R180, {1, 0}}},
        {"margolus-tau0", {PointPart::R90, {2, 0}}, Isometry::translate({0, 2})},
    };
    for (const auto& c : cases) {
        CAPTURE(c.name);
        const auto tr = zoo::builtin(c.name);
        REQUIRE_FALSE(equivariance_sample(tr, c.g, 50, 1, 5));
        REQUIRE_FALSE(equivariance_sample(tr, c.h, 50, 1, 5));
        CHECK_FALSE(equivariance_sample(tr, compose(c.g, c.h), 50, 1, 5));
        CHECK_FALSE(equivariance_sample(tr, inverse(c.g), 50, 1, 5));
        CHECK_FALSE(equivariance_sample(tr, inverse(c.h), 50, 1, 5));
    }
    // Negative control: an odd translation swaps the fairy-lights read directions.
    CHECK(equivariance_sample(zoo::builtin("fairy-lights"), Isometry::translate({1, 0}), 50, 1, 5));
}

TEST_CASE("invariance_check") {
    const auto shift = zoo::builtin("state-shift-44");
    const Isometry quarter{PointPart::R90, {1, 0}};
    const auto r = invariance_check(shift, std::vector<Isometry>{quarter, Isometry::identity()});
    REQUIRE(r.size() == 2u);
    REQUIRE_FALSE(r[0].holds);
    REQUIRE(r[0].counterexample);
    const auto& w = *r[0].counterexample;
    CHECK(w.original != w.transformed);
    const std::map<Cell, StateId> pattern(w.cells.begin(), w.cells.end());
    CHECK(pattern.at({1, 0}) == 1);
    CHECK(pattern.at({0, 1}) == 0);
    CHECK(replay(shift, r[0]));
    CHECK(r[1].holds);
    CHECK_FALSE(r[1].counterexample);

    for (auto name : zoo::builtin_names()) {
        const auto tr = zoo::builtin(name);
        const std::vector<Isometry> id{Isometry::identity()};
        CHECK(invariance_check(tr, id)[0].holds);
    }
    CHECK_THROWS_AS(invariance_check(shift, std::vector<Isometry>{Isometry::translate({1, 0})}), NotAStabilizer);
}

TEST_CASE("every invariance witness replays") {
    for (auto name : zoo::builtin_names()) {
        const auto tr = zoo::builtin(name);
        if (tr.universe() != kSquare) continue;
        const auto stab = d4_stabilizer(tr.origin(), kSquare).generators;
        for (const auto& r : invariance_check(tr, stab)) {
            if (!r.holds) CHECK(replay(tr, r));
        }
    }
}

TEST_CASE("s_set") {
    const auto plain = CoordinateSystem::preset(Preset::TranslationsOnly);
    for (int radius = 0; radius <= 4; ++radius) CHECK(s_set(plain, radius) == std::vector<Isometry>{Isometry::identity()});

    const auto wedge = CoordinateSystem::preset(Preset::WedgeRotation44);
    const auto s = s_set(wedge, 2);
    CHECK(std::any_of(s.begin(), s.end(), [](const Isometry& g) {
        return (g.linear == PointPart::R90 || g.linear == PointPart::R270) && act(g, {0, 0}, kSquare) == Cell{0, 0};
    }));

    for (Preset p : shipped_presets()) {
        const auto cs = CoordinateSystem::preset(
            p, p == Preset::FairyLights ? Universe::PointLattice : kSquare);
        const auto set = s_set(cs, 3);
        CHECK(std::is_sorted(set.begin(), set.end()));
        CHECK(std::adjacent_find(set.begin(), set.end()) == set.end());
        for (const auto& g : set) CHECK(act(g, cs.origin(), cs.universe()) == cs.origin());
    }
}

TEST_CASE("equivariance_check") {
    const auto fairy = equivariance_check(zoo::builtin("fairy-lights"), 4);
    CHECK_FALSE(fairy.obstruction_found());
    CHECK_FALSE(fairy.automaton_not_equivariant);

    const auto shift_tr = zoo::builtin("state-shift-44");
    const auto shift = equivariance_check(shift_tr, 2);
    REQUIRE(shift.obstruction_found());
    CHECK(shift.automaton_not_equivariant);
    CHECK(replay(shift_tr, *shift.violation));

    for (int radius = 0; radius <= 3; ++radius) CHECK_FALSE(equivariance_check(zoo::builtin("identity"), radius).obstruction_found());
    CHECK_FALSE(equivariance_check(zoo::builtin("game-of-life"), 3).obstruction_found());
}

TEST_CASE("compose_triples") {
    const auto id = zoo::builtin("identity");
    CHECK(step_equivalent(zoo::builtin("game-of-life"), compose_triples(id, zoo::builtin("game-of-life")), 50, 11));

    // The construction always reproduces the composite at the first origin; away
    // from it, the first triple's transversal decides.
    for (const char* name : {"fairy-lights", "margolus-tau0", "state-shift-d"}) {
        CAPTURE(name);
        const auto tr = zoo::builtin(name);
        const auto left = identity_on(tr.universe());
        const auto composed = compose_triples(left, tr);
        std::mt19937_64 rng(13);
        for (int i = 0; i < 50; ++i) {
            const auto x = random_configuration(kBinary, 6, rng);
            REQUIRE(step(composed, x).at(left.origin()) == step(left, step(tr, x)).at(left.origin()));
        }
    }
    // Fairy lights is not a translation automaton, so identity-coordinates give a plain shift.
    CHECK_FALSE(step_equivalent(zoo::builtin("fairy-lights"),
                                compose_triples(identity_on(Universe::PointLattice), zoo::builtin("fairy-lights")), 20,
                                14));
    CHECK_THROWS_AS(compose_triples(id, zoo::builtin("fairy-lights")), IncompatibleStateSets);

    const auto d = zoo::builtin("state-shift-d");
    const auto dd = compose_triples(d, d);
    CHECK(dd.memory() == MemorySet({{-1, 1}}));

    const auto tau0 = zoo::builtin("margolus-tau0");
    const auto tau1 = zoo::builtin("margolus-tau1");
    const auto billiard = compose_triples(tau1, tau0);
    std::mt19937_64 rng(12);
    for (int i = 0; i < 30; ++i) {
        const auto x = random_configuration(kBinary, 6, rng);
        const auto grid = oracle::billiard_step(oracle::billiard_step(testing_support::to_grid(x), 0), 1);
        REQUIRE(testing_support::to_grid(step(billiard, x)) == grid);
    }

    CHECK_THROWS_AS(compose_triples(id, three_state_identity()), IncompatibleStateSets);
}

TEST_CASE("verify_composition") {
    const auto tau0 = zoo::builtin("margolus-tau0");
    const auto tau1 = zoo::builtin("margolus-tau1");
    const auto ok = verify_composition(tau1, tau0, compose_triples(tau1, tau0), 200, 5, 5);
    CHECK(ok.consistent);
    CHECK(ok.trials == 200);

    const auto id = zoo::builtin("identity");
    CHECK(verify_composition(id, id, compose_triples(id, id), 50, 5, 5).consistent);

    const auto d = zoo::builtin("state-shift-d");
    const auto composed = compose_triples(d, d);
    const auto bad = verify_composition(d, d, composed, 100, 5, 5);
    REQUIRE_FALSE(bad.consistent);
    REQUIRE(bad.witness);
    const auto& w = *bad.witness;
    CHECK(w.cell == Cell{1, 0});
    CHECK(w.composite == w.config.at({1, 2}));
    CHECK(w.composed == w.config.at({0, 1}));
    CHECK(w.composite != w.composed);
    CHECK(replay(d, d, composed, w));
}

TEST_CASE("verify_inverse") {
    const auto fairy = zoo::builtin("fairy-lights");
    CHECK(verify_inverse(fairy, fairy, 100, 3, 6).inverse);
    CHECK(verify_inverse(zoo::builtin("state-shift-44"), zoo::builtin("state-shift-44-inverse"), 100, 3, 6).inverse);

    const auto gol = zoo::builtin("game-of-life");
    const auto r = verify_inverse(gol, gol, 100, 3, 6);
    REQUIRE_FALSE(r.inverse);
    REQUIRE(r.witness);
    const auto& w = *r.witness;
    CHECK(w.got != w.expected);
    CHECK(step(gol, step(gol, w.config)).at(w.cell) == w.got);
    CHECK(w.config.at(w.cell) == w.expected);
}

TEST_CASE("report text") {
    const auto shift = zoo::builtin("state-shift-44");
    const auto eq = format(shift, equivariance_check(shift, 2));
    CHECK(eq.rfind("verdict: not-equivariant", 0) == 0);
    const auto fairy = zoo::builtin("fairy-lights");
    CHECK(format(fairy, equivariance_check(fairy, 2)).rfind("verdict: no-obstruction", 0) == 0);
    CHECK(format_memory(MemorySet({{0, 0}, {1, -1}})) == "memory: 2\ncell: (0,0)\ncell: (1,-1)\n");
    const auto inv = format(kBinary, verify_inverse(fairy, fairy, 5, 1, 3));
    CHECK(inv.rfind("verdict: inverse", 0) == 0);
}
