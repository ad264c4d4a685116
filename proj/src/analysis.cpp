#include "gsetca/analysis.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "gsetca/error.hpp"

namespace gsetca::analysis {

namespace {

KernelPtr make_kernel(auto body) { return std::make_shared<const Kernel>(Kernel{std::move(body)}); }

void require_table_bound(std::size_t states, std::size_t cells, const char* what) {
    const auto n = pattern_count(states, cells);
    if (n > kMaxTableSize) {
        throw TooLarge(std::string(what) + ": " + std::to_string(states) + "^" + std::to_string(cells) +
                       " patterns exceed the limit of " + std::to_string(kMaxTableSize));
    }
}

std::string pattern_text(const StateSet& states, const std::vector<std::pair<Cell, StateId>>& cells) {
    std::string out;
    for (const auto& [c, s] : cells) {
        if (!out.empty()) out += ' ';
        out += to_string(c) + "=" + states.symbol(s);
    }
    return out;
}

std::string config_text(const Configuration& x, const StateSet& states) {
    std::vector<std::pair<Cell, StateId>> cells(x.assignments().begin(), x.assignments().end());
    return cells.empty() ? std::string("(empty)") : pattern_text(states, cells);
}

// Cells where two configurations differ (both are canonical over the same default).
std::vector<Cell> differing_cells(const Configuration& a, const Configuration& b) {
    std::set<Cell> cells;
    for (const auto& [c, s] : a.assignments()) cells.insert(c);
    for (const auto& [c, s] : b.assignments()) cells.insert(c);
    std::vector<Cell> out;
    for (const Cell& c : cells) {
        if (a.at(c) != b.at(c)) out.push_back(c);
    }
    return out;
}

// Witness order: nearer to `origin` first; at equal distance, counter-clockwise
// angle measured from the positive x axis. Integer arithmetic only.
bool witness_before(Cell a, Cell b, Cell origin) {
    const Vec2 u = a - origin;
    const Vec2 v = b - origin;
    if (norm2(u) != norm2(v)) return norm2(u) < norm2(v);
    const auto half = [](Vec2 w) { return (w.y < 0 || (w.y == 0 && w.x < 0)) ? 1 : 0; };
    if (half(u) != half(v)) return half(u) < half(v);
    return u.x * v.y - u.y * v.x > 0;
}

std::optional<Cell> first_witness(const std::vector<Cell>& cells, Cell origin) {
    std::optional<Cell> best;
    for (const Cell& c : cells) {
        if (!best || witness_before(c, *best, origin)) best = c;
    }
    return best;
}

} // namespace

MemorySet useful_cells(const ConstructionTriple& tr) {
    const auto& memory = tr.memory();
    require_table_bound(tr.states().size(), memory.size(), "useful_cells");
    const TableKernel table = to_table(tr.rule(), tr.states());
    const std::uint64_t radix = table.radix;
    const std::uint64_t total = table.image.size();

    // Patterns differing only at position j by one unit are `stride` apart. If
    // every such adjacent pair agrees, all patterns differing at j agree.
    std::vector<Cell> useful;
    std::uint64_t stride = total;
    for (std::size_t j = 0; j < memory.size(); ++j) {
        stride /= radix;
        bool matters = false;
        for (std::uint64_t i = 0; i < total && !matters; ++i) {
            if ((i / stride) % radix == 0) continue;
            matters = table.image[i] != table.image[i - stride];
        }
        if (matters) useful.push_back(memory[j]);
    }
    return MemorySet(std::move(useful));
}

ConstructionTriple minimize(const ConstructionTriple& tr) {
    MemorySet useful = useful_cells(tr);
    if (useful == tr.memory()) return tr;
    RestrictedKernel restricted;
    restricted.inner = tr.rule().kernel_ptr();
    restricted.fill = tr.states().quiescent();
    for (const Cell& c : tr.memory()) restricted.source.push_back(useful.index_of(c));
    LocalRule rule(std::move(useful), make_kernel(std::move(restricted)));
    return ConstructionTriple(std::move(rule), tr.coords(), tr.states(), tr.name() + "-minimized");
}

std::vector<InvarianceReport> invariance_check(const ConstructionTriple& tr, std::span<const Isometry> elements) {
    const Universe u = tr.universe();
    const Cell origin = tr.origin();
    const auto& memory = tr.memory();
    const std::size_t radix = tr.states().size();
    std::vector<InvarianceReport> reports;

    for (const Isometry& s : elements) {
        if (act(s, origin, u) != origin) {
            throw NotAStabilizer(to_string(s) + " moves the origin " + to_string(origin) + " to " +
                                 to_string(act(s, origin, u)));
        }
        // Omega = M followed by the new cells of s^-1 . M.
        const Isometry s_inv = inverse(s);
        std::vector<Cell> omega = memory.cells();
        std::vector<std::size_t> moved; // moved[i] = position in omega of s^-1 . M[i]
        for (const Cell& beta : memory) {
            const Cell c = act(s_inv, beta, u);
            auto it = std::find(omega.begin(), omega.end(), c);
            if (it == omega.end()) {
                omega.push_back(c);
                it = omega.end() - 1;
            }
            moved.push_back(static_cast<std::size_t>(it - omega.begin()));
        }
        require_table_bound(radix, omega.size(), "invariance_check");

        InvarianceReport report{s, true, std::nullopt};
        const std::uint64_t total = pattern_count(radix, omega.size());
        std::vector<StateId> pattern(omega.size());
        std::vector<StateId> plain(memory.size());
        std::vector<StateId> shifted(memory.size());
        for (std::uint64_t i = 0; i < total; ++i) {
            pattern_from_index(i, radix, pattern);
            for (std::size_t k = 0; k < memory.size(); ++k) {
                plain[k] = pattern[k];
                shifted[k] = pattern[moved[k]]; // (s x)(beta) = x(s^-1 beta)
            }
            const StateId a = tr.rule()(plain);
            const StateId b = tr.rule()(shifted);
            if (a != b) {
                PatternWitness w;
                for (std::size_t k = 0; k < omega.size(); ++k) w.cells.emplace_back(omega[k], pattern[k]);
                w.original = a;
                w.transformed = b;
                report.holds = false;
                report.counterexample = std::move(w);
                break;
            }
        }
        reports.push_back(std::move(report));
    }
    return reports;
}

bool replay(const ConstructionTriple& tr, const InvarianceReport& report) {
    if (!report.counterexample) return false;
    Configuration x(tr.states().quiescent());
    for (const auto& [c, s] : report.counterexample->cells) x.set(c, s);
    const Configuration sx = act_on_config(report.element, x, tr.universe());
    std::vector<StateId> plain;
    std::vector<StateId> shifted;
    for (const Cell& beta : tr.memory()) {
        plain.push_back(x.at(beta));
        shifted.push_back(sx.at(beta));
    }
    const StateId a = tr.rule()(plain);
    const StateId b = tr.rule()(shifted);
    return a != b && a == report.counterexample->original && b == report.counterexample->transformed;
}

std::vector<Isometry> s_set(const CoordinateSystem& cs, int radius) {
    if (radius < 0) throw ValidationError("radius must be nonnegative");
    const Universe u = cs.universe();
    const Cell origin = cs.origin();
    std::vector<Isometry> inv_coords;
    std::vector<Isometry> coords;
    for (std::int64_t dy = -radius; dy <= radius; ++dy) {
        for (std::int64_t dx = -radius; dx <= radius; ++dx) {
            const Isometry t = cs.coordinate(origin + Vec2{dx, dy});
            coords.push_back(t);
            inv_coords.push_back(inverse(t));
        }
    }
    std::set<Isometry> found;
    for (const Isometry& ti : inv_coords) {
        for (const Isometry& t2 : coords) {
            const Isometry g = compose(ti, t2);
            const Isometry s = compose(inverse(cs.coordinate(act(g, origin, u))), g);
            found.insert(s);
        }
    }
    return {found.begin(), found.end()};
}

EquivarianceReport equivariance_check(const ConstructionTriple& tr, int radius) {
    EquivarianceReport report;
    report.radius = radius;
    report.elements = s_set(tr, radius);
    for (auto& r : invariance_check(tr, report.elements)) {
        if (!r.holds) {
            report.violation = std::move(r);
            break;
        }
    }
    if (report.violation && tr.memory().size() == 1 &&
        std::holds_alternative<ProjectionKernel>(tr.rule().kernel().body) && tr.memory()[0] != tr.origin()) {
        report.automaton_not_equivariant = true;
    }
    return report;
}

ConstructionTriple compose_triples(const ConstructionTriple& t1, const ConstructionTriple& t2) {
    if (!(t1.states() == t2.states())) throw IncompatibleStateSets("the two triples use different state sets");
    if (t1.universe() != t2.universe()) throw IncompatibleStateSets("the two triples live on different universes");
    const Universe u = t1.universe();

    std::vector<Cell> cells;
    std::vector<std::vector<std::size_t>> gathers;
    for (const Cell& b1 : t1.memory()) {
        const Isometry t = t2.coords().coordinate(b1);
        std::vector<std::size_t> gather;
        for (const Cell& b2 : t2.memory()) {
            const Cell c = act(t, b2, u);
            auto it = std::find(cells.begin(), cells.end(), c);
            if (it == cells.end()) {
                cells.push_back(c);
                it = cells.end() - 1;
            }
            gather.push_back(static_cast<std::size_t>(it - cells.begin()));
        }
        gathers.push_back(std::move(gather));
    }
    require_table_bound(t1.states().size(), cells.size(), "compose_triples");

    CompositeKernel body{t1.rule().kernel_ptr(), t2.rule().kernel_ptr(), std::move(gathers)};
    LocalRule rule(MemorySet(std::move(cells)), make_kernel(std::move(body)));
    return ConstructionTriple(std::move(rule), t1.coords(), t1.states(), t1.name() + "*" + t2.name());
}

CompositionReport verify_composition(const ConstructionTriple& t1, const ConstructionTriple& t2,
                                     const ConstructionTriple& composed, int trials, std::uint64_t seed,
                                     int radius) {
    if (trials < 1) throw ValidationError("trials must be at least 1");
    CompositionReport report;
    report.trials = trials;
    std::mt19937_64 rng(seed);
    for (int i = 0; i < trials; ++i) {
        const Configuration x = random_configuration(t1.states(), radius, rng);
        const Configuration lhs = step(t1, step(t2, x));
        const Configuration rhs = step(composed, x);
        const auto cell = first_witness(differing_cells(lhs, rhs), t1.origin());
        if (!cell) continue;
        if (!report.witness || witness_before(*cell, report.witness->cell, t1.origin())) {
            report.consistent = false;
            report.witness = CompositionWitness{x, *cell, lhs.at(*cell), rhs.at(*cell)};
        }
    }
    return report;
}

bool replay(const ConstructionTriple& t1, const ConstructionTriple& t2, const ConstructionTriple& composed,
            const CompositionWitness& w) {
    const StateId a = step(t1, step(t2, w.config)).at(w.cell);
    const StateId b = step(composed, w.config).at(w.cell);
    return a != b && a == w.composite && b == w.composed;
}

InverseReport verify_inverse(const ConstructionTriple& a, const ConstructionTriple& b, int trials,
                             std::uint64_t seed, int radius) {
    if (trials < 1) throw ValidationError("trials must be at least 1");
    if (!(a.states() == b.states())) throw IncompatibleStateSets("the two triples use different state sets");
    InverseReport report;
    report.trials = trials;
    std::mt19937_64 rng(seed);
    for (int i = 0; i < trials; ++i) {
        const Configuration x = random_configuration(a.states(), radius, rng);
        for (const bool a_after_b : {true, false}) {
            const Configuration y = a_after_b ? step(a, step(b, x)) : step(b, step(a, x));
            if (const auto cell = first_witness(differing_cells(x, y), a.origin())) {
                report.inverse = false;
                report.witness = InverseWitness{x, a_after_b, *cell, y.at(*cell), x.at(*cell)};
                return report;
            }
        }
    }
    return report;
}

std::optional<Configuration> equivariance_sample(const ConstructionTriple& tr, const Isometry& g, int trials,
                                                 std::uint64_t seed, int radius) {
    std::mt19937_64 rng(seed);
    const Universe u = tr.universe();
    for (int i = 0; i < trials; ++i) {
        const Configuration x = random_configuration(tr.states(), radius, rng);
        if (step(tr, act_on_config(g, x, u)) != act_on_config(g, step(tr, x), u)) return x;
    }
    return std::nullopt;
}

std::string format_memory(const MemorySet& m) {
    std::ostringstream os;
    os << "memory: " << m.size() << '\n';
    for (const Cell& c : m) os << "cell: " << to_string(c) << '\n';
    return os.str();
}

std::string format(const ConstructionTriple& tr, const InvarianceReport& r) {
    std::ostringstream os;
    os << "verdict: " << (r.holds ? "holds" : "violated") << '\n';
    os << "element: " << to_string(r.element) << '\n';
    if (r.counterexample) {
        const auto& w = *r.counterexample;
        os << "witness: " << pattern_text(tr.states(), w.cells) << '\n';
        os << "original: " << tr.states().symbol(w.original) << '\n';
        os << "transformed: " << tr.states().symbol(w.transformed) << '\n';
    }
    return os.str();
}

std::string format(const ConstructionTriple& tr, const EquivarianceReport& r) {
    std::ostringstream os;
    if (!r.violation) {
        os << "verdict: no-obstruction\n";
    } else if (r.automaton_not_equivariant) {
        os << "verdict: not-equivariant\n";
    } else {
        os << "verdict: triple-not-s-invariant\n";
    }
    os << "radius: " << r.radius << '\n';
    os << "s-set:";
    for (const Isometry& s : r.elements) os << ' ' << to_string(s);
    os << '\n';
    if (r.violation) os << format(tr, *r.violation);
    return os.str();
}

std::string format(const StateSet& states, const CompositionReport& r) {
    std::ostringstream os;
    os << "verdict: " << (r.consistent ? "consistent" : "counterexample") << '\n';
    os << "trials: " << r.trials << '\n';
    if (r.witness) {
        os << "cell: " << to_string(r.witness->cell) << '\n';
        os << "composite: " << states.symbol(r.witness->composite) << '\n';
        os << "composed: " << states.symbol(r.witness->composed) << '\n';
        os << "config: " << config_text(r.witness->config, states) << '\n';
    }
    return os.str();
}

std::string format(const StateSet& states, const InverseReport& r) {
    std::ostringstream os;
    os << "verdict: " << (r.inverse ? "inverse" : "not-inverse") << '\n';
    os << "trials: " << r.trials << '\n';
    if (r.witness) {
        os << "order: " << (r.witness->a_after_b ? "first-after-second" : "second-after-first") << '\n';
        os << "cell: " << to_string(r.witness->cell) << '\n';
        os << "got: " << states.symbol(r.witness->got) << '\n';
        os << "expected: " << states.symbol(r.witness->expected) << '\n';
        os << "config: " << config_text(r.witness->config, states) << '\n';
    }
    return os.str();
}

} // namespace gsetca::analysis
