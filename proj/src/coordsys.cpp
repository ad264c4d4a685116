#include "gsetca/coordsys.hpp"

#include <array>
#include <cassert>

#include "gsetca/error.hpp"

namespace gsetca {

namespace {

struct PresetInfo {
    Preset preset;
    std::string_view name;
};

constexpr std::array<PresetInfo, 7> kPresetNames = {{
    {Preset::TranslationsOnly, "translations-only"},
    {Preset::FairyLights, "fairy-lights"},
    {Preset::QuadrantRotationCorner, "quadrant-rotation-corner"},
    {Preset::QuadrantRotationCenter, "quadrant-rotation-center"},
    {Preset::MargolusBlocks, "margolus-blocks"},
    {Preset::WedgeRotation44, "wedge-rotation-44"},
    {Preset::WedgeRotation44Inverse, "wedge-rotation-44-inverse"},
}};

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// t_a r^k or r^k t_a where the base cell a = r^-k . c lies in the preset's T1.
Isometry rotated_translation(const Isometry& r, int k, Cell c) {
    const Cell base = act(power(r, -k), c, Universe::SquareTessellation);
    return compose(power(r, k), Isometry::translate(base));
}

// Rotation by 90 degrees about the lattice point (0,0).
constexpr Isometry kRotCorner{PointPart::R90, {0, 0}};
// Rotation by 90 degrees about (1/2, 1/2), the centre of cell (0,0).
constexpr Isometry kRotCenter{PointPart::R90, {1, 0}};
// Rotation by 90 degrees about the lattice point (1,1).
constexpr Isometry kRotBlock{PointPart::R90, {2, 0}};

Isometry quadrant_corner(Cell c) {
    int k = 0;
    if (c.x >= 0 && c.y >= 0) k = 0;
    else if (c.x < 0 && c.y >= 0) k = 1;
    else if (c.x < 0) k = 2;
    else k = 3;
    return rotated_translation(kRotCorner, k, c);
}

Isometry quadrant_center(Cell c) {
    if (c == Cell{0, 0}) return Isometry::identity();
    int k = 0;
    if (c.x >= 1 && c.y >= 0) k = 0;
    else if (c.x <= 0 && c.y >= 1) k = 1;
    else if (c.x <= -1 && c.y <= 0) k = 2;
    else k = 3; // x >= 0, y <= -1
    return rotated_translation(kRotCenter, k, c);
}

Isometry margolus_block(Cell c) {
    const Cell corner{2 * floor_div(c.x, 2), 2 * floor_div(c.y, 2)};
    const Cell pos = c - corner;
    int k = 0;
    if (pos == Cell{1, 0}) k = 1;
    else if (pos == Cell{1, 1}) k = 2;
    else if (pos == Cell{0, 1}) k = 3;
    return compose(Isometry::translate(corner), power(kRotBlock, k));
}

// Wedges of the two state-shift transversals. The four rotated copies of each
// wedge overlap on boundary cells, and an overlap always involves two cyclically
// adjacent copies {k, k+1 mod 4}. The 44 system keeps copy k; the inverse system
// keeps copy k+1. With these rules the two state shifts are mutually inverse.
bool in_wedge_44(Cell a) { return 0 <= a.x && a.x <= (a.y < 0 ? -a.y : a.y); }
bool in_wedge_44_inverse(Cell a) { return 0 <= a.y && a.y <= (a.x < 0 ? -a.x : a.x); }

Isometry wedge(Cell c, bool (*member)(Cell), bool keep_later) {
    std::array<bool, 4> hit{};
    int count = 0;
    for (int k = 0; k < 4; ++k) {
        hit[k] = member(act(power(kRotCorner, -k), c, Universe::SquareTessellation));
        count += hit[k] ? 1 : 0;
    }
    assert(count == 1 || count == 2);
    int chosen = -1;
    if (count == 1) {
        for (int k = 0; k < 4; ++k) {
            if (hit[k]) chosen = k;
        }
    } else {
        for (int k = 0; k < 4; ++k) {
            if (hit[k] && hit[(k + 1) % 4]) chosen = keep_later ? (k + 1) % 4 : k;
        }
    }
    if (chosen < 0) throw Error("wedge transversal does not cover cell " + to_string(c));
    return rotated_translation(kRotCorner, chosen, c);
}

} // namespace

std::string_view to_string(Preset p) {
    for (const auto& info : kPresetNames) {
        if (info.preset == p) return info.name;
    }
    return "custom";
}

Preset parse_preset(std::string_view name) {
    for (const auto& info : kPresetNames) {
        if (info.name == name) return info.preset;
    }
    throw ValidationError("unknown coordinate-system preset '" + std::string(name) + "'");
}

const std::vector<Preset>& shipped_presets() {
    static const std::vector<Preset> all = [] {
        std::vector<Preset> v;
        for (const auto& info : kPresetNames) v.push_back(info.preset);
        return v;
    }();
    return all;
}

CoordinateSystem CoordinateSystem::preset(Preset p, Universe u) {
    if (p == Preset::Custom) throw ValidationError("custom systems are built with CoordinateSystem::custom");
    const Universe required = p == Preset::FairyLights ? Universe::PointLattice : Universe::SquareTessellation;
    if (p != Preset::TranslationsOnly && u != required) {
        throw ValidationError("preset '" + std::string(to_string(p)) + "' requires universe " +
                              std::string(to_string(required)));
    }
    CoordinateSystem cs;
    cs.preset_ = p;
    cs.universe_ = u;
    return cs;
}

CoordinateSystem CoordinateSystem::preset(std::string_view name, Universe u) {
    return preset(parse_preset(name), u);
}

CoordinateSystem CoordinateSystem::custom(std::string name, Cell origin, Universe u, RepresentativeFn fn) {
    CoordinateSystem cs;
    cs.preset_ = Preset::Custom;
    cs.universe_ = u;
    cs.custom_name_ = std::move(name);
    cs.custom_origin_ = origin;
    cs.custom_ = std::make_shared<const RepresentativeFn>(std::move(fn));
    return cs;
}

std::string CoordinateSystem::name() const {
    return preset_ == Preset::Custom ? custom_name_ : std::string(to_string(preset_));
}

Isometry CoordinateSystem::base_coordinate(Cell c) const {
    switch (preset_) {
    case Preset::TranslationsOnly:
        return Isometry::translate(c);
    case Preset::FairyLights:
        // even cells: t_c;  odd cells: (-Id) o t_{-c}
        if (((c.x + c.y) % 2 + 2) % 2 == 0) return Isometry::translate(c);
        return compose(Isometry{PointPart::R180, {0, 0}}, Isometry::translate(-c));
    case Preset::QuadrantRotationCorner:
        return quadrant_corner(c);
    case Preset::QuadrantRotationCenter:
        return quadrant_center(c);
    case Preset::MargolusBlocks:
        return margolus_block(c);
    case Preset::WedgeRotation44:
        return wedge(c, in_wedge_44, false);
    case Preset::WedgeRotation44Inverse:
        return wedge(c, in_wedge_44_inverse, true);
    case Preset::Custom:
        return (*custom_)(c);
    }
    return Isometry::identity();
}

Cell CoordinateSystem::origin() const {
    const Cell base = preset_ == Preset::Custom ? custom_origin_ : Cell{0, 0};
    return act(shift_, act(conjugator_, base, universe_), universe_);
}

Isometry CoordinateSystem::coordinate(Cell c) const {
    Isometry t;
    if (conjugator_ == Isometry::identity()) {
        t = base_coordinate(c);
    } else {
        const Isometry h_inv = inverse(conjugator_);
        t = compose(conjugator_, compose(base_coordinate(act(h_inv, c, universe_)), h_inv));
    }
    if (shift_ != Isometry::identity()) t = compose(t, inverse(shift_));
    return t;
}

CoordinateSystem change_origin(const CoordinateSystem& cs, const Isometry& g) {
    const Cell target = act(g, cs.origin(), cs.universe());
    if (cs.coordinate(target) != g) {
        throw MembershipError("isometry " + to_string(g) + " is not in the coordinate set of '" +
                              cs.name() + "'");
    }
    CoordinateSystem out = cs;
    out.shift_ = compose(g, cs.shift_);
    return out;
}

CoordinateSystem conjugate_system(const CoordinateSystem& cs, const Isometry& g) {
    CoordinateSystem out = cs;
    out.conjugator_ = compose(g, cs.conjugator_);
    out.shift_ = compose(g, compose(cs.shift_, inverse(g)));
    return out;
}

Decomposition decompose(const Isometry& h, const CoordinateSystem& cs) {
    const Isometry t = cs.coordinate(act(h, cs.origin(), cs.universe()));
    return {t, compose(inverse(t), h)};
}

PatchReport verify_on_patch(const CoordinateSystem& cs, int radius) {
    const Cell origin = cs.origin();
    const Universe u = cs.universe();
    if (cs.coordinate(origin) != Isometry::identity()) {
        return {false, origin, "coordinate of the origin is " + to_string(cs.coordinate(origin))};
    }
    for (std::int64_t dy = -radius; dy <= radius; ++dy) {
        for (std::int64_t dx = -radius; dx <= radius; ++dx) {
            const Cell c = origin + Vec2{dx, dy};
            const Isometry t = cs.coordinate(c);
            const Cell image = act(t, origin, u);
            if (image != c) {
                return {false, c,
                        "coordinate " + to_string(t) + " of " + to_string(c) + " maps the origin to " +
                            to_string(image)};
            }
        }
    }
    return {true, std::nullopt, "ok"};
}

StabilizerGens d4_stabilizer(Cell cell, Universe u) {
    StabilizerGens out{cell, {}};
    for (PointPart p : kAllPointParts) {
        Vec2 v;
        if (u == Universe::PointLattice) {
            v = cell - apply(p, cell);
        } else {
            const Vec2 c2 = 2 * cell + Vec2{1, 1};
            const Vec2 d = c2 - apply(p, c2);
            v = {d.x / 2, d.y / 2};
        }
        out.generators.push_back({p, v});
    }
    return out;
}

} // namespace gsetca
