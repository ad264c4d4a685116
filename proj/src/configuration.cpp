#include "gsetca/configuration.hpp"

#include <algorithm>

#include "gsetca/error.hpp"

namespace gsetca {

StateId Configuration::at(Cell c) const {
    const auto it = cells_.find(c);
    return it == cells_.end() ? default_ : it->second;
}

void Configuration::set(Cell c, StateId s) {
    if (s == default_) {
        cells_.erase(c);
    } else {
        cells_[c] = s;
    }
}

Configuration act_on_config(const Isometry& g, const Configuration& x, Universe u) {
    Configuration out(x.default_state());
    for (const auto& [cell, state] : x.assignments()) out.set(act(g, cell, u), state);
    return out;
}

Window::Window(Cell a, Cell b)
    : lo{std::min(a.x, b.x), std::min(a.y, b.y)}, hi{std::max(a.x, b.x), std::max(a.y, b.y)} {}

std::optional<Window> bounding_window(const Configuration& x) {
    if (x.empty()) return std::nullopt;
    Cell lo = x.assignments().begin()->first;
    Cell hi = lo;
    for (const auto& [c, s] : x.assignments()) {
        lo = {std::min(lo.x, c.x), std::min(lo.y, c.y)};
        hi = {std::max(hi.x, c.x), std::max(hi.y, c.y)};
    }
    return Window(lo, hi);
}

Configuration random_configuration(const StateSet& states, int radius, std::mt19937_64& rng,
                                   std::optional<std::size_t> max_support, Cell center) {
    if (radius < 0) throw ValidationError("radius must be nonnegative");
    Configuration x(states.quiescent());
    const auto n = static_cast<std::uint64_t>(states.size());
    if (!max_support) {
        for (std::int64_t dy = -radius; dy <= radius; ++dy) {
            for (std::int64_t dx = -radius; dx <= radius; ++dx) {
                x.set(center + Vec2{dx, dy}, static_cast<StateId>(rng() % n));
            }
        }
        return x;
    }
    if (n < 2) return x;
    std::vector<StateId> live;
    for (StateId s = 0; s < n; ++s) {
        if (s != states.quiescent()) live.push_back(s);
    }
    const auto side = static_cast<std::uint64_t>(2 * radius + 1);
    for (std::size_t i = 0; i < *max_support; ++i) {
        const std::uint64_t k = rng() % (side * side);
        const Cell c = center + Vec2{static_cast<std::int64_t>(k % side) - radius,
                                     static_cast<std::int64_t>(k / side) - radius};
        x.set(c, live[rng() % live.size()]);
    }
    return x;
}

} // namespace gsetca
