#pragma once

// The isometry group Z^2 x| D4 of the integer lattice and of the unit-square
// tessellation, with its action on cells. All arithmetic is exact.

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

namespace gsetca {

struct Vec2 {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend constexpr auto operator<=>(const Vec2&, const Vec2&) = default;
    friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend constexpr Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
    friend constexpr Vec2 operator*(std::int64_t k, Vec2 a) { return {k * a.x, k * a.y}; }
};

// A cell is named by an integer index. On the point lattice the index is the
// point itself; on the square tessellation (a,b) is the square [a,a+1]x[b,b+1].
using Cell = Vec2;

constexpr std::int64_t norm2(Vec2 v) { return v.x * v.x + v.y * v.y; }
constexpr std::int64_t chebyshev(Vec2 v) {
    const auto ax = v.x < 0 ? -v.x : v.x;
    const auto ay = v.y < 0 ? -v.y : v.y;
    return ax > ay ? ax : ay;
}

enum class Universe : std::uint8_t { PointLattice, SquareTessellation };

std::string_view to_string(Universe u);
Universe parse_universe(std::string_view text);

// The dihedral group D4 realised as 2x2 integer orthogonal matrices.
//   R0..R270: rotations by k*90 degrees (counterclockwise)
//   MX: (x,y) -> (x,-y)   MY: (x,y) -> (-x,y)
//   MD: (x,y) -> (y,x)    MA: (x,y) -> (-y,-x)
enum class PointPart : std::uint8_t { R0, R90, R180, R270, MX, MY, MD, MA };

inline constexpr std::array<PointPart, 8> kAllPointParts = {
    PointPart::R0, PointPart::R90, PointPart::R180, PointPart::R270,
    PointPart::MX, PointPart::MY,  PointPart::MD,   PointPart::MA};

struct Mat2 {
    int a, b, c, d; // [[a, b], [c, d]]
    friend constexpr bool operator==(const Mat2&, const Mat2&) = default;
};

Mat2 matrix(PointPart p);
PointPart point_part_from_matrix(const Mat2& m); // throws Error if not in D4
PointPart operator*(PointPart lhs, PointPart rhs);
PointPart inverse(PointPart p);
Vec2 apply(PointPart p, Vec2 v);
int determinant(PointPart p);

std::string_view to_string(PointPart p);
PointPart parse_point_part(std::string_view text);

// x -> linear * x + translation
struct Isometry {
    PointPart linear = PointPart::R0;
    Vec2 translation{};

    static constexpr Isometry identity() { return {}; }
    static constexpr Isometry translate(Vec2 v) { return {PointPart::R0, v}; }

    friend constexpr auto operator<=>(const Isometry&, const Isometry&) = default;
};

Isometry compose(const Isometry& g, const Isometry& h); // g after h
Isometry inverse(const Isometry& g);
Isometry power(const Isometry& g, int k);

// Action on cells of the given universe. Law: act(g, act(h, c)) == act(compose(g, h), c).
Cell act(const Isometry& g, Cell c, Universe u);

// Squared Euclidean distance between cell centres; equal to norm2(a - b) in both universes.
inline std::int64_t center_distance2(Cell a, Cell b) { return norm2(a - b); }

// "A:tx,ty", e.g. "R90:1,0".
std::string to_string(const Isometry& g);
Isometry parse_isometry(std::string_view text);
std::string to_string(Cell c); // "(x,y)"

std::ostream& operator<<(std::ostream& os, const Vec2& v);
std::ostream& operator<<(std::ostream& os, const Isometry& g);
std::ostream& operator<<(std::ostream& os, PointPart p);

struct Vec2Hash {
    std::size_t operator()(const Vec2& v) const noexcept {
        const auto h1 = std::hash<std::int64_t>{}(v.x);
        const auto h2 = std::hash<std::int64_t>{}(v.y);
        return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
    }
};

} // namespace gsetca
