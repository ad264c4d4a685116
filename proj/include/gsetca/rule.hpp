#pragma once

// State sets, memory sets and local defining maps.

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gsetca/group_action.hpp"

namespace gsetca {

using StateId = std::uint16_t;

// Rule tables with more than this many entries are rejected; brute-force analyses
// use the same bound.
inline constexpr std::uint64_t kMaxTableSize = std::uint64_t{1} << 16;

class StateSet {
public:
    StateSet(std::vector<std::string> symbols, std::string_view quiescent);

    static StateSet binary(); // {"0", "1"}, quiescent "0"

    std::size_t size() const { return symbols_.size(); }
    const std::string& symbol(StateId id) const { return symbols_.at(id); }
    StateId id(std::string_view symbol) const; // throws UnknownSymbol
    bool contains(std::string_view symbol) const;
    StateId quiescent() const { return quiescent_; }
    const std::vector<std::string>& symbols() const { return symbols_; }

    friend bool operator==(const StateSet&, const StateSet&) = default;

private:
    std::vector<std::string> symbols_;
    StateId quiescent_ = 0;
};

// Ordered, duplicate-free list of cells. The order fixes the tuple layout used
// by every rule kernel.
class MemorySet {
public:
    MemorySet() = default;
    explicit MemorySet(std::vector<Cell> cells); // throws ValidationError on duplicates

    std::size_t size() const { return cells_.size(); }
    bool empty() const { return cells_.empty(); }
    const Cell& operator[](std::size_t i) const { return cells_[i]; }
    auto begin() const { return cells_.begin(); }
    auto end() const { return cells_.end(); }
    const std::vector<Cell>& cells() const { return cells_; }
    std::optional<std::size_t> index_of(Cell c) const;

    friend bool operator==(const MemorySet&, const MemorySet&) = default;

private:
    std::vector<Cell> cells_;
};

// |Q|^|M|, saturating at UINT64_MAX.
std::uint64_t pattern_count(std::size_t states, std::size_t cells);

// Mixed-radix index of a tuple; the first position is the most significant digit.
std::uint64_t pattern_index(std::span<const StateId> tuple, std::size_t radix);
void pattern_from_index(std::uint64_t index, std::size_t radix, std::span<StateId> out);

struct Kernel;
using KernelPtr = std::shared_ptr<const Kernel>;

struct TableKernel {
    std::size_t radix = 2;
    std::vector<StateId> image; // indexed by pattern_index
};

// Sum rule of the Game of Life family: counts live cells among `summed`
// (which should include the centre); output is live when the count is 3, or 4
// with a live centre.
struct LifeSumKernel {
    std::size_t center = 0;
    std::vector<std::size_t> summed;
    StateId live = 1;
    StateId dead = 0;
};

struct ProjectionKernel {
    std::size_t index = 0;
};

// Block rule on positions (a, r.a, r^2.a, r^3.a) for a quarter-turn r:
//   one live cell        -> value of r^2.a (the ball crosses the block)
//   two live, r.a==r^3.a -> value of r.a   (diagonal pairs swap diagonals)
//   otherwise            -> value of a
struct MargolusKernel {
    std::array<std::size_t, 4> block{0, 1, 2, 3};
    StateId live = 1;
};

struct ConstantKernel {
    StateId value = 0;
};

// Evaluates `inner` on a tuple gathered from the outer one; positions without a
// source read `fill`.
struct RestrictedKernel {
    KernelPtr inner;
    std::vector<std::optional<std::size_t>> source;
    StateId fill = 0;
};

// outer(inner(gather_0), ..., inner(gather_{k-1})).
struct CompositeKernel {
    KernelPtr outer;
    KernelPtr inner;
    std::vector<std::vector<std::size_t>> gathers;
};

struct Kernel {
    std::variant<TableKernel, LifeSumKernel, ProjectionKernel, MargolusKernel, ConstantKernel,
                 RestrictedKernel, CompositeKernel>
        body;

    StateId eval(std::span<const StateId> tuple) const;
};

class LocalRule {
public:
    LocalRule(MemorySet memory, KernelPtr kernel);

    const MemorySet& memory() const { return memory_; }
    const Kernel& kernel() const { return *kernel_; }
    const KernelPtr& kernel_ptr() const { return kernel_; }
    std::size_t arity() const { return memory_.size(); }

    StateId operator()(std::span<const StateId> tuple) const { return kernel_->eval(tuple); }

private:
    MemorySet memory_;
    KernelPtr kernel_;
};

// Builders. All check arity and state bounds and throw ValidationError.
LocalRule table_rule(MemorySet memory, const StateSet& states, std::vector<StateId> image);
LocalRule table_rule(MemorySet memory, const StateSet& states,
                     const std::map<std::vector<std::string>, std::string>& entries);
LocalRule life_sum_rule(MemorySet memory, const StateSet& states, Cell center,
                        std::optional<std::vector<Cell>> summed = std::nullopt);
LocalRule projection_rule(MemorySet memory, Cell read);
LocalRule margolus_rule(MemorySet memory, const StateSet& states);
LocalRule constant_rule(MemorySet memory, StateId value);

// Materialises any rule as an explicit table. Throws TooLarge above kMaxTableSize.
TableKernel to_table(const LocalRule& rule, const StateSet& states);

// Evaluates the rule on a tuple of state names, in memory order.
std::string local_eval(const LocalRule& rule, const StateSet& states,
                       std::span<const std::string> pattern);

} // namespace gsetca
