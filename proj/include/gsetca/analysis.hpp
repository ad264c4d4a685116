#pragma once

// Executable forms of the structural results about construction triples:
// minimal memory sets, stabiliser invariance, the obstruction set S(origin, T),
// composition of triples and empirical reversibility.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gsetca/automaton.hpp"

namespace gsetca::analysis {

// Cells beta of M for which two patterns differing only at beta get different
// images. Exhaustive over Q^M; throws TooLarge above kMaxTableSize patterns.
MemorySet useful_cells(const ConstructionTriple& tr);

// Same automaton with the memory set cut down to the useful cells. Useless
// positions are filled with the quiescent state, which cannot change the image.
ConstructionTriple minimize(const ConstructionTriple& tr);

struct PatternWitness {
    std::vector<std::pair<Cell, StateId>> cells; // a pattern on M u s^-1.M
    StateId original = 0;                        // mu(x|M)
    StateId transformed = 0;                     // mu((s x)|M)
};

struct InvarianceReport {
    Isometry element;
    bool holds = true;
    std::optional<PatternWitness> counterexample;
};

// For each s (which must fix the origin): does mu((s x)|M) == mu(x|M) for every
// pattern x on M u s^-1.M? When all generators hold, mu is invariant under the
// subgroup they generate.
std::vector<InvarianceReport> invariance_check(const ConstructionTriple& tr, std::span<const Isometry> elements);

// Recomputes a witness through act_on_config; true when it reproduces a difference.
bool replay(const ConstructionTriple& tr, const InvarianceReport& report);

// Elements of (T^-1 T^-1 T) n Stab(origin) witnessed by pairs of cells in the
// Chebyshev ball of the given radius around the origin: for t = coord(c),
// t' = coord(c'), u = t^-1 t', emits coord(u . origin)^-1 u. Sorted, unique.
std::vector<Isometry> s_set(const CoordinateSystem& cs, int radius);
inline std::vector<Isometry> s_set(const ConstructionTriple& tr, int radius) { return s_set(tr.coords(), radius); }

struct EquivarianceReport {
    int radius = 0;
    std::vector<Isometry> elements; // the S-set that was checked
    std::optional<InvarianceReport> violation;
    // Set only for single-cell state shifts, whose coordinate system is
    // essentially unique, so a non-invariant mu rules out equivariance itself.
    bool automaton_not_equivariant = false;

    bool obstruction_found() const { return violation.has_value(); }
};

EquivarianceReport equivariance_check(const ConstructionTriple& tr, int radius);

// Triple of tau1 o tau2 when that composite is a cellular automaton:
// memory {t_b1 . b2}, t_b1 the coordinate of b1 in t2's system (duplicates
// collapsed, first occurrence kept); mu(y) = mu1(b1 -> mu2(y at t_b1 . M2));
// coordinate system of t1.
ConstructionTriple compose_triples(const ConstructionTriple& t1, const ConstructionTriple& t2);

struct CompositionWitness {
    Configuration config;
    Cell cell;
    StateId composite = 0; // step(t1, step(t2, x)) at cell
    StateId composed = 0;  // step(composed, x) at cell
};

struct CompositionReport {
    bool consistent = true;
    int trials = 0;
    std::optional<CompositionWitness> witness;
};

// Compares both sides on `trials` random configurations (uniform states on the
// radius ball, std::mt19937_64 seeded with `seed`). Among all differing cells
// the reported one is nearest to t1's origin, ties broken by counter-clockwise
// angle from the positive x axis, then by earliest trial.
CompositionReport verify_composition(const ConstructionTriple& t1, const ConstructionTriple& t2,
                                     const ConstructionTriple& composed, int trials, std::uint64_t seed,
                                     int radius);

bool replay(const ConstructionTriple& t1, const ConstructionTriple& t2, const ConstructionTriple& composed,
            const CompositionWitness& w);

struct InverseWitness {
    Configuration config;
    bool a_after_b = true; // which order failed: step(A, step(B, x)) or step(B, step(A, x))
    Cell cell;
    StateId got = 0;
    StateId expected = 0;
};

struct InverseReport {
    bool inverse = true;
    int trials = 0;
    std::optional<InverseWitness> witness;
};

InverseReport verify_inverse(const ConstructionTriple& a, const ConstructionTriple& b, int trials,
                             std::uint64_t seed, int radius);

// Empirical check of tau(g x) == g tau(x) on seeded random configurations.
// Returns the first failing configuration, if any.
std::optional<Configuration> equivariance_sample(const ConstructionTriple& tr, const Isometry& g, int trials,
                                                 std::uint64_t seed, int radius);

// Line-oriented report text (see README for the schema).
std::string format_memory(const MemorySet& m);
std::string format(const ConstructionTriple& tr, const InvarianceReport& r);
std::string format(const ConstructionTriple& tr, const EquivarianceReport& r);
std::string format(const StateSet& states, const CompositionReport& r);
std::string format(const StateSet& states, const InverseReport& r);

} // namespace gsetca::analysis
