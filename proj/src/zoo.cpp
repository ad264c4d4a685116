#include "gsetca/zoo.hpp"

#include "gsetca/error.hpp"

namespace gsetca::zoo {

namespace {

ConstructionTriple checked(ConstructionTriple tr) {
    const auto report = verify_on_patch(tr.coords(), 10);
    if (!report.ok) throw ValidationError("builtin '" + tr.name() + "': " + report.message);
    return tr;
}

ConstructionTriple state_shift(std::string_view name, Preset preset, Cell read) {
    MemorySet memory({read});
    return ConstructionTriple(projection_rule(memory, read), CoordinateSystem::preset(preset),
                              StateSet::binary(), std::string(name));
}

MemorySet margolus_block_memory() { return MemorySet({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }

} // namespace

const std::vector<std::string_view>& builtin_names() {
    static const std::vector<std::string_view> names = {
        "game-of-life",   "fairy-lights",           "state-shift-c", "state-shift-d",
        "state-shift-44", "state-shift-44-inverse", "margolus-tau0", "margolus-tau1",
        "identity"};
    return names;
}

MemorySet moore_memory() {
    std::vector<Cell> cells;
    for (std::int64_t dy = -1; dy <= 1; ++dy) {
        for (std::int64_t dx = -1; dx <= 1; ++dx) cells.push_back({dx, dy});
    }
    return MemorySet(std::move(cells));
}

ConstructionTriple padded_game_of_life(Cell pad) {
    auto cells = moore_memory().cells();
    const std::vector<Cell> summed = cells;
    cells.push_back(pad);
    const StateSet states = StateSet::binary();
    MemorySet memory(std::move(cells));
    return checked(ConstructionTriple(life_sum_rule(memory, states, {0, 0}, summed),
                                      CoordinateSystem::preset(Preset::TranslationsOnly), states,
                                      "game-of-life-padded"));
}

ConstructionTriple builtin(std::string_view name) {
    const StateSet binary = StateSet::binary();
    if (name == "game-of-life") {
        return checked(ConstructionTriple(life_sum_rule(moore_memory(), binary, {0, 0}),
                                          CoordinateSystem::preset(Preset::TranslationsOnly), binary,
                                          std::string(name)));
    }
    if (name == "fairy-lights") {
        MemorySet memory({{0, 1}});
        return checked(ConstructionTriple(projection_rule(memory, {0, 1}),
                                          CoordinateSystem::preset(Preset::FairyLights, Universe::PointLattice),
                                          binary, std::string(name)));
    }
    if (name == "state-shift-c") return checked(state_shift(name, Preset::QuadrantRotationCorner, {0, 1}));
    if (name == "state-shift-d") return checked(state_shift(name, Preset::QuadrantRotationCenter, {0, 1}));
    if (name == "state-shift-44") return checked(state_shift(name, Preset::WedgeRotation44, {0, 1}));
    if (name == "state-shift-44-inverse") {
        return checked(state_shift(name, Preset::WedgeRotation44Inverse, {1, 0}));
    }
    if (name == "margolus-tau0") {
        return checked(ConstructionTriple(margolus_rule(margolus_block_memory(), binary),
                                          CoordinateSystem::preset(Preset::MargolusBlocks), binary,
                                          std::string(name)));
    }
    if (name == "margolus-tau1") {
        // (t0 . M0, t0 mu0, (t0 . origin, t0 T0 t0^-1)) with t0 the translation by (1,1).
        // (t0 mu0)(x) = mu0(t0^-1 x) reads the translated block in the same order,
        // so the kernel is unchanged.
        const Isometry t0 = Isometry::translate({1, 1});
        std::vector<Cell> cells;
        for (const Cell& c : margolus_block_memory()) cells.push_back(act(t0, c, Universe::SquareTessellation));
        return checked(ConstructionTriple(
            margolus_rule(MemorySet(std::move(cells)), binary),
            conjugate_system(CoordinateSystem::preset(Preset::MargolusBlocks), t0), binary, std::string(name)));
    }
    if (name == "identity") {
        MemorySet memory({{0, 0}});
        return checked(ConstructionTriple(projection_rule(memory, {0, 0}),
                                          CoordinateSystem::preset(Preset::TranslationsOnly), binary,
                                          std::string(name)));
    }
    throw ValidationError("unknown builtin '" + std::string(name) + "'");
}

} // namespace gsetca::zoo
