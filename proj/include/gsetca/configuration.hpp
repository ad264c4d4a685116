#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>

#include "gsetca/group_action.hpp"
#include "gsetca/rule.hpp"

namespace gsetca {

// Finite-support configuration over a default state. Stored assignments never
// equal the default.
class Configuration {
public:
    explicit Configuration(StateId default_state = 0) : default_(default_state) {}

    StateId default_state() const { return default_; }
    StateId at(Cell c) const;
    void set(Cell c, StateId s);

    const std::map<Cell, StateId>& assignments() const { return cells_; }
    std::size_t support_size() const { return cells_.size(); }
    bool empty() const { return cells_.empty(); }

    friend bool operator==(const Configuration&, const Configuration&) = default;

private:
    StateId default_;
    std::map<Cell, StateId> cells_;
};

// (g x)(a) = x(g^-1 . a)
Configuration act_on_config(const Isometry& g, const Configuration& x, Universe u);

// Axis-aligned rectangle, corners inclusive.
struct Window {
    Cell lo;
    Cell hi;

    Window(Cell a, Cell b);
    bool contains(Cell c) const { return lo.x <= c.x && c.x <= hi.x && lo.y <= c.y && c.y <= hi.y; }
    std::int64_t width() const { return hi.x - lo.x + 1; }
    std::int64_t height() const { return hi.y - lo.y + 1; }

    friend bool operator==(const Window&, const Window&) = default;
};

std::optional<Window> bounding_window(const Configuration& x);

// Seeded random configurations. The generator is std::mt19937_64 (fully specified
// by the C++ standard); states are drawn as rng() % n so witnesses replay exactly.
//
// Without `max_support`, every cell of the square ball |dx|,|dy| <= radius around
// `center` (visited with y outer, x inner, both ascending) gets a uniform state.
// With `max_support = k`, k cells are drawn uniformly from the ball, each given a
// uniform non-quiescent state; repeats collapse so the support is at most k.
Configuration random_configuration(const StateSet& states, int radius, std::mt19937_64& rng,
                                   std::optional<std::size_t> max_support = std::nullopt,
                                   Cell center = {0, 0});

} // namespace gsetca
