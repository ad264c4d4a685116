#pragma once

#include <string_view>
#include <vector>

#include "gsetca/automaton.hpp"

namespace gsetca::zoo {

// "game-of-life", "fairy-lights", "state-shift-c", "state-shift-d",
// "state-shift-44", "state-shift-44-inverse", "margolus-tau0", "margolus-tau1",
// "identity".
const std::vector<std::string_view>& builtin_names();

// Throws ValidationError for an unknown name. Each triple is checked for
// quiescence and for a valid coordinate system on a radius-10 patch.
ConstructionTriple builtin(std::string_view name);

// Moore neighbourhood of the origin cell in row-major order from (-1,-1); the
// origin sits at index 4.
MemorySet moore_memory();

// Game of Life whose memory set also contains `pad`, a cell the rule never reads.
ConstructionTriple padded_game_of_life(Cell pad);

} // namespace gsetca::zoo
