#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gsetca/group_action.hpp"

namespace gsetca {

enum class Preset : std::uint8_t {
    TranslationsOnly,
    FairyLights,
    QuadrantRotationCorner,
    QuadrantRotationCenter,
    MargolusBlocks,
    WedgeRotation44,
    WedgeRotation44Inverse,
    Custom,
};

std::string_view to_string(Preset p);
Preset parse_preset(std::string_view name); // throws ValidationError for unknown names or "custom"
const std::vector<Preset>& shipped_presets();

// A coordinate system (origin, T): an origin cell together with a total function
// picking, for each cell c, the unique element t of the transversal T with t . origin = c.
//
// Every system is kept in the normal form
//     T = (h T_preset h^-1) g^-1,   origin = g h . origin_preset
// where h is the accumulated conjugator and g the accumulated origin shift; both
// change_origin and conjugate_system preserve this form, so any derived system can
// be written back to a rule file as (preset, conjugator, origin).
class CoordinateSystem {
public:
    using RepresentativeFn = std::function<Isometry(Cell)>;

    static CoordinateSystem preset(Preset p, Universe u = Universe::SquareTessellation);
    static CoordinateSystem preset(std::string_view name, Universe u = Universe::SquareTessellation);

    // A user-supplied transversal. Not serialisable.
    static CoordinateSystem custom(std::string name, Cell origin, Universe u, RepresentativeFn fn);

    Isometry coordinate(Cell c) const;
    Cell origin() const;
    Universe universe() const { return universe_; }
    Preset kind() const { return preset_; }
    std::string name() const;
    const Isometry& conjugator() const { return conjugator_; }
    const Isometry& shift() const { return shift_; }

private:
    CoordinateSystem() = default;
    Isometry base_coordinate(Cell c) const;

    Preset preset_ = Preset::TranslationsOnly;
    Universe universe_ = Universe::SquareTessellation;
    Isometry conjugator_{};
    Isometry shift_{};
    std::string custom_name_;
    Cell custom_origin_{};
    std::shared_ptr<const RepresentativeFn> custom_;

    friend CoordinateSystem change_origin(const CoordinateSystem&, const Isometry&);
    friend CoordinateSystem conjugate_system(const CoordinateSystem&, const Isometry&);
};

inline Isometry coordinate(const CoordinateSystem& cs, Cell c) { return cs.coordinate(c); }

// (g . origin, T g^-1). Requires g to be an element of T.
CoordinateSystem change_origin(const CoordinateSystem& cs, const Isometry& g);

// (g . origin, g T g^-1). Valid for every g.
CoordinateSystem conjugate_system(const CoordinateSystem& cs, const Isometry& g);

struct Decomposition {
    Isometry t; // element of T
    Isometry s; // fixes the origin
};

// h = t s with t = coordinate(h . origin) and s in Stab(origin).
Decomposition decompose(const Isometry& h, const CoordinateSystem& cs);

struct PatchReport {
    bool ok = true;
    std::optional<Cell> violation;
    std::string message;
};

// Checks the transversal axioms on every cell within Chebyshev distance `radius`
// of the origin. A finite patch cannot certify the infinite set T.
PatchReport verify_on_patch(const CoordinateSystem& cs, int radius);

// The eight D4 isometries fixing `cell`.
struct StabilizerGens {
    Cell cell;
    std::vector<Isometry> generators;
};
StabilizerGens d4_stabilizer(Cell cell, Universe u);

} // namespace gsetca
