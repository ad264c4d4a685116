#include "gsetca/automaton.hpp"

#include <algorithm>
#include <unordered_set>

#include "gsetca/error.hpp"

namespace gsetca {

ConstructionTriple::ConstructionTriple(LocalRule rule, CoordinateSystem coords, StateSet states, std::string name)
    : rule_(std::move(rule)), coords_(std::move(coords)), states_(std::move(states)), name_(std::move(name)) {
    const std::vector<StateId> quiet(rule_.arity(), states_.quiescent());
    const StateId image = rule_(quiet);
    if (image != states_.quiescent()) {
        throw QuiescenceError("rule maps the all-quiescent pattern to '" + states_.symbol(image) +
                              "', not the quiescent state '" + states_.symbol(states_.quiescent()) + "'");
    }
    const Cell o = coords_.origin();
    for (const Cell& beta : rule_.memory()) reach2_ = std::max(reach2_, center_distance2(o, beta));
}

std::vector<StateId> ConstructionTriple::read(const Configuration& x, Cell a) const {
    const Isometry t = coords_.coordinate(a);
    std::vector<StateId> tuple;
    tuple.reserve(rule_.arity());
    for (const Cell& beta : rule_.memory()) tuple.push_back(x.at(act(t, beta, universe())));
    return tuple;
}

namespace {

std::vector<Vec2> offsets_within(std::int64_t reach2) {
    std::vector<Vec2> out;
    std::int64_t r = 0;
    while ((r + 1) * (r + 1) <= reach2) ++r;
    for (std::int64_t dy = -r; dy <= r; ++dy) {
        for (std::int64_t dx = -r; dx <= r; ++dx) {
            if (dx * dx + dy * dy <= reach2) out.push_back({dx, dy});
        }
    }
    return out;
}

} // namespace

Configuration step(const ConstructionTriple& tr, const Configuration& x) {
    if (x.default_state() != tr.states().quiescent()) {
        throw ValidationError("configuration default must be the quiescent state");
    }
    Configuration out(tr.states().quiescent());
    if (x.empty()) return out;

    std::unordered_set<Cell, Vec2Hash> candidates;
    const auto offsets = offsets_within(tr.reach2());
    for (const auto& [cell, state] : x.assignments()) {
        for (const Vec2& d : offsets) candidates.insert(cell + d);
    }
    for (const Cell& a : candidates) out.set(a, tr.rule()(tr.read(x, a)));
    return out;
}

Configuration run(const ConstructionTriple& tr, Configuration x, int steps) {
    if (steps < 0) throw ValidationError("step count must be nonnegative");
    for (int i = 0; i < steps; ++i) x = step(tr, x);
    return x;
}

WindowStep step_window(const ConstructionTriple& tr, const Window& known, const Configuration& x) {
    WindowStep result;
    for (std::int64_t y = known.lo.y; y <= known.hi.y; ++y) {
        for (std::int64_t cx = known.lo.x; cx <= known.hi.x; ++cx) {
            const Cell a{cx, y};
            const Isometry t = tr.coords().coordinate(a);
            std::vector<StateId> tuple;
            tuple.reserve(tr.rule().arity());
            bool inside = true;
            for (const Cell& beta : tr.memory()) {
                const Cell src = act(t, beta, tr.universe());
                if (!known.contains(src)) {
                    inside = false;
                    break;
                }
                tuple.push_back(x.at(src));
            }
            if (!inside) continue;
            result.values.emplace(a, tr.rule()(tuple));
        }
    }
    for (const auto& [cell, v] : result.values) result.region.push_back(cell);
    if (!result.region.empty()) {
        Cell lo = result.region.front();
        Cell hi = lo;
        for (const Cell& c : result.region) {
            lo = {std::min(lo.x, c.x), std::min(lo.y, c.y)};
            hi = {std::max(hi.x, c.x), std::max(hi.y, c.y)};
        }
        result.bounds = Window(lo, hi);
    }
    return result;
}

} // namespace gsetca
