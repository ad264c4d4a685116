#include "gsetca/rule.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "gsetca/error.hpp"

namespace gsetca {

StateSet::StateSet(std::vector<std::string> symbols, std::string_view quiescent)
    : symbols_(std::move(symbols)) {
    if (symbols_.empty()) throw ValidationError("state set must be nonempty");
    if (symbols_.size() > std::numeric_limits<StateId>::max()) throw ValidationError("too many states");
    std::set<std::string> seen;
    for (const auto& s : symbols_) {
        if (!seen.insert(s).second) throw ValidationError("duplicate state '" + s + "'");
    }
    if (!contains(quiescent)) {
        throw ValidationError("quiescent state '" + std::string(quiescent) + "' is not in the state set");
    }
    quiescent_ = id(quiescent);
}

StateSet StateSet::binary() { return StateSet({"0", "1"}, "0"); }

StateId StateSet::id(std::string_view symbol) const {
    const auto it = std::find(symbols_.begin(), symbols_.end(), symbol);
    if (it == symbols_.end()) throw UnknownSymbol("unknown state symbol '" + std::string(symbol) + "'");
    return static_cast<StateId>(it - symbols_.begin());
}

bool StateSet::contains(std::string_view symbol) const {
    return std::find(symbols_.begin(), symbols_.end(), symbol) != symbols_.end();
}

MemorySet::MemorySet(std::vector<Cell> cells) : cells_(std::move(cells)) {
    std::set<Cell> seen;
    for (const Cell& c : cells_) {
        if (!seen.insert(c).second) throw ValidationError("duplicate memory cell " + to_string(c));
    }
}

std::optional<std::size_t> MemorySet::index_of(Cell c) const {
    const auto it = std::find(cells_.begin(), cells_.end(), c);
    if (it == cells_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - cells_.begin());
}

std::uint64_t pattern_count(std::size_t states, std::size_t cells) {
    std::uint64_t n = 1;
    for (std::size_t i = 0; i < cells; ++i) {
        if (states != 0 && n > std::numeric_limits<std::uint64_t>::max() / states) {
            return std::numeric_limits<std::uint64_t>::max();
        }
        n *= states;
    }
    return n;
}

std::uint64_t pattern_index(std::span<const StateId> tuple, std::size_t radix) {
    std::uint64_t index = 0;
    for (StateId s : tuple) index = index * radix + s;
    return index;
}

void pattern_from_index(std::uint64_t index, std::size_t radix, std::span<StateId> out) {
    for (std::size_t i = out.size(); i-- > 0;) {
        out[i] = static_cast<StateId>(index % radix);
        index /= radix;
    }
}

namespace {

struct Evaluator {
    std::span<const StateId> tuple;

    StateId operator()(const TableKernel& k) const { return k.image[pattern_index(tuple, k.radix)]; }

    StateId operator()(const LifeSumKernel& k) const {
        int sum = 0;
        for (std::size_t i : k.summed) sum += tuple[i] == k.live ? 1 : 0;
        if (sum == 3 || (sum == 4 && tuple[k.center] == k.live)) return k.live;
        return k.dead;
    }

    StateId operator()(const ProjectionKernel& k) const { return tuple[k.index]; }

    StateId operator()(const MargolusKernel& k) const {
        const StateId a = tuple[k.block[0]];
        const StateId ra = tuple[k.block[1]];
        const StateId r2a = tuple[k.block[2]];
        const StateId r3a = tuple[k.block[3]];
        const int sum = (a == k.live) + (ra == k.live) + (r2a == k.live) + (r3a == k.live);
        if (sum == 1) return r2a;
        if (sum == 2 && ra == r3a) return ra;
        return a;
    }

    StateId operator()(const ConstantKernel& k) const { return k.value; }

    StateId operator()(const RestrictedKernel& k) const {
        std::vector<StateId> inner(k.source.size());
        for (std::size_t i = 0; i < k.source.size(); ++i) {
            inner[i] = k.source[i] ? tuple[*k.source[i]] : k.fill;
        }
        return k.inner->eval(inner);
    }

    StateId operator()(const CompositeKernel& k) const {
        std::vector<StateId> middle(k.gathers.size());
        std::vector<StateId> scratch;
        for (std::size_t i = 0; i < k.gathers.size(); ++i) {
            scratch.resize(k.gathers[i].size());
            for (std::size_t j = 0; j < scratch.size(); ++j) scratch[j] = tuple[k.gathers[i][j]];
            middle[i] = k.inner->eval(scratch);
        }
        return k.outer->eval(middle);
    }
};

KernelPtr make_kernel(auto body) { return std::make_shared<const Kernel>(Kernel{std::move(body)}); }

std::size_t require_index(const MemorySet& memory, Cell c, std::string_view what) {
    const auto i = memory.index_of(c);
    if (!i) throw ValidationError(std::string(what) + " cell " + to_string(c) + " is not in the memory set");
    return *i;
}

void require_binary(const StateSet& states, std::string_view rule) {
    if (states.size() != 2) throw ValidationError(std::string(rule) + " rule needs exactly two states");
}

} // namespace

StateId Kernel::eval(std::span<const StateId> tuple) const { return std::visit(Evaluator{tuple}, body); }

LocalRule::LocalRule(MemorySet memory, KernelPtr kernel)
    : memory_(std::move(memory)), kernel_(std::move(kernel)) {
    if (!kernel_) throw ValidationError("rule kernel is null");
}

LocalRule table_rule(MemorySet memory, const StateSet& states, std::vector<StateId> image) {
    const std::uint64_t n = pattern_count(states.size(), memory.size());
    if (n > kMaxTableSize) {
        throw TooLarge("rule table would have " + std::to_string(n) + " entries (limit " +
                       std::to_string(kMaxTableSize) + "); use a named rule");
    }
    if (image.size() != n) {
        throw ValidationError("rule table has " + std::to_string(image.size()) + " entries, expected " +
                              std::to_string(n));
    }
    for (StateId s : image) {
        if (s >= states.size()) throw ValidationError("rule table image out of range");
    }
    return LocalRule(std::move(memory), make_kernel(TableKernel{states.size(), std::move(image)}));
}

LocalRule table_rule(MemorySet memory, const StateSet& states,
                     const std::map<std::vector<std::string>, std::string>& entries) {
    const std::uint64_t n = pattern_count(states.size(), memory.size());
    if (n > kMaxTableSize) {
        throw TooLarge("rule table would have " + std::to_string(n) + " entries (limit " +
                       std::to_string(kMaxTableSize) + "); use a named rule");
    }
    std::vector<std::optional<StateId>> slots(n);
    std::vector<StateId> tuple(memory.size());
    for (const auto& [key, value] : entries) {
        if (key.size() != memory.size()) {
            throw ValidationError("rule table key has " + std::to_string(key.size()) + " states, expected " +
                                  std::to_string(memory.size()));
        }
        for (std::size_t i = 0; i < key.size(); ++i) tuple[i] = states.id(key[i]);
        auto& slot = slots[pattern_index(tuple, states.size())];
        if (slot) throw ValidationError("duplicate rule table entry");
        slot = states.id(value);
    }
    std::vector<StateId> image(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        if (!slots[i]) {
            pattern_from_index(i, states.size(), tuple);
            std::string key;
            for (std::size_t j = 0; j < tuple.size(); ++j) key += (j ? "," : "") + states.symbol(tuple[j]);
            throw ValidationError("rule table is not total: missing entry '" + key + "'");
        }
        image[i] = *slots[i];
    }
    return LocalRule(std::move(memory), make_kernel(TableKernel{states.size(), std::move(image)}));
}

LocalRule life_sum_rule(MemorySet memory, const StateSet& states, Cell center,
                        std::optional<std::vector<Cell>> summed) {
    require_binary(states, "life-sum");
    LifeSumKernel k;
    k.center = require_index(memory, center, "life-sum centre");
    if (summed) {
        std::set<std::size_t> seen;
        for (const Cell& c : *summed) {
            const auto i = require_index(memory, c, "life-sum summed");
            if (!seen.insert(i).second) throw ValidationError("life-sum summed cell listed twice");
            k.summed.push_back(i);
        }
    } else {
        for (std::size_t i = 0; i < memory.size(); ++i) k.summed.push_back(i);
    }
    k.dead = states.quiescent();
    k.live = static_cast<StateId>(1 - k.dead);
    return LocalRule(std::move(memory), make_kernel(k));
}

LocalRule projection_rule(MemorySet memory, Cell read) {
    const auto i = require_index(memory, read, "projection");
    return LocalRule(std::move(memory), make_kernel(ProjectionKernel{i}));
}

LocalRule margolus_rule(MemorySet memory, const StateSet& states) {
    require_binary(states, "margolus");
    if (memory.size() != 4) throw ValidationError("margolus rule needs a 4-cell memory set");
    MargolusKernel k;
    k.live = static_cast<StateId>(1 - states.quiescent());
    return LocalRule(std::move(memory), make_kernel(k));
}

LocalRule constant_rule(MemorySet memory, StateId value) {
    return LocalRule(std::move(memory), make_kernel(ConstantKernel{value}));
}

TableKernel to_table(const LocalRule& rule, const StateSet& states) {
    if (const auto* t = std::get_if<TableKernel>(&rule.kernel().body)) return *t;
    const std::uint64_t n = pattern_count(states.size(), rule.arity());
    if (n > kMaxTableSize) {
        throw TooLarge("rule would need " + std::to_string(n) + " table entries (limit " +
                       std::to_string(kMaxTableSize) + ")");
    }
    TableKernel out{states.size(), std::vector<StateId>(n)};
    std::vector<StateId> tuple(rule.arity());
    for (std::uint64_t i = 0; i < n; ++i) {
        pattern_from_index(i, states.size(), tuple);
        out.image[i] = rule(tuple);
    }
    return out;
}

std::string local_eval(const LocalRule& rule, const StateSet& states, std::span<const std::string> pattern) {
    if (pattern.size() != rule.arity()) {
        throw ValidationError("pattern has " + std::to_string(pattern.size()) + " states, rule reads " +
                              std::to_string(rule.arity()));
    }
    std::vector<StateId> tuple;
    tuple.reserve(pattern.size());
    for (const auto& s : pattern) tuple.push_back(states.id(s));
    return states.symbol(rule(tuple));
}

} // namespace gsetca
