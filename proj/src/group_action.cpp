#include "gsetca/group_action.hpp"

#include <cassert>
#include <charconv>
#include <ostream>

#include "gsetca/error.hpp"

namespace gsetca {

namespace {

constexpr std::array<Mat2, 8> kMatrices = {{
    {1, 0, 0, 1},   // R0
    {0, -1, 1, 0},  // R90
    {-1, 0, 0, -1}, // R180
    {0, 1, -1, 0},  // R270
    {1, 0, 0, -1},  // MX
    {-1, 0, 0, 1},  // MY
    {0, 1, 1, 0},   // MD
    {0, -1, -1, 0}, // MA
}};

constexpr std::array<std::string_view, 8> kNames = {"R0", "R90", "R180", "R270",
                                                    "MX", "MY",  "MD",   "MA"};

constexpr Mat2 multiply(const Mat2& l, const Mat2& r) {
    return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d, l.c * r.a + l.d * r.c,
            l.c * r.b + l.d * r.d};
}

// Cayley table of D4, built once from the matrices.
struct CayleyTable {
    std::array<std::array<PointPart, 8>, 8> product{};
    std::array<PointPart, 8> inv{};

    constexpr CayleyTable() {
        for (std::size_t i = 0; i < 8; ++i) {
            for (std::size_t j = 0; j < 8; ++j) {
                const Mat2 m = multiply(kMatrices[i], kMatrices[j]);
                for (std::size_t k = 0; k < 8; ++k) {
                    if (kMatrices[k] == m) product[i][j] = static_cast<PointPart>(k);
                }
            }
        }
        for (std::size_t i = 0; i < 8; ++i) {
            for (std::size_t j = 0; j < 8; ++j) {
                if (product[i][j] == PointPart::R0) inv[i] = static_cast<PointPart>(j);
            }
        }
    }
};

constexpr CayleyTable kTable{};

std::size_t idx(PointPart p) { return static_cast<std::size_t>(p); }

std::int64_t parse_int(std::string_view s, std::string_view whole) {
    std::int64_t value = 0;
    const auto* first = s.data();
    const auto* last = s.data() + s.size();
    if (!s.empty() && s.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || first == last) {
        throw ParseError("malformed integer in isometry '" + std::string(whole) + "'");
    }
    return value;
}

} // namespace

std::string_view to_string(Universe u) {
    return u == Universe::PointLattice ? "point-lattice" : "square-tessellation";
}

Universe parse_universe(std::string_view text) {
    if (text == "point-lattice") return Universe::PointLattice;
    if (text == "square-tessellation") return Universe::SquareTessellation;
    throw ParseError("unknown universe '" + std::string(text) + "'");
}

Mat2 matrix(PointPart p) { return kMatrices[idx(p)]; }

PointPart point_part_from_matrix(const Mat2& m) {
    for (std::size_t k = 0; k < 8; ++k) {
        if (kMatrices[k] == m) return static_cast<PointPart>(k);
    }
    throw Error("matrix is not an element of D4");
}

PointPart operator*(PointPart lhs, PointPart rhs) { return kTable.product[idx(lhs)][idx(rhs)]; }

PointPart inverse(PointPart p) { return kTable.inv[idx(p)]; }

Vec2 apply(PointPart p, Vec2 v) {
    const Mat2& m = kMatrices[idx(p)];
    return {m.a * v.x + m.b * v.y, m.c * v.x + m.d * v.y};
}

int determinant(PointPart p) {
    const Mat2& m = kMatrices[idx(p)];
    return m.a * m.d - m.b * m.c;
}

std::string_view to_string(PointPart p) { return kNames[idx(p)]; }

PointPart parse_point_part(std::string_view text) {
    for (std::size_t k = 0; k < 8; ++k) {
        if (kNames[k] == text) return static_cast<PointPart>(k);
    }
    throw ParseError("unknown point part '" + std::string(text) + "'");
}

Isometry compose(const Isometry& g, const Isometry& h) {
    return {g.linear * h.linear, apply(g.linear, h.translation) + g.translation};
}

Isometry inverse(const Isometry& g) {
    const PointPart inv = inverse(g.linear);
    return {inv, -apply(inv, g.translation)};
}

Isometry power(const Isometry& g, int k) {
    Isometry base = k < 0 ? inverse(g) : g;
    Isometry result = Isometry::identity();
    for (int i = 0; i < (k < 0 ? -k : k); ++i) result = compose(base, result);
    return result;
}

Cell act(const Isometry& g, Cell c, Universe u) {
    if (u == Universe::PointLattice) return apply(g.linear, c) + g.translation;
    // Work with doubled coordinates so the centre c + (1/2, 1/2) stays integral.
    const Vec2 centre2 = 2 * c + Vec2{1, 1};
    const Vec2 image2 = apply(g.linear, centre2) + 2 * g.translation - Vec2{1, 1};
    assert(image2.x % 2 == 0 && image2.y % 2 == 0);
    return {image2.x / 2, image2.y / 2};
}

std::string to_string(const Isometry& g) {
    return std::string(to_string(g.linear)) + ":" + std::to_string(g.translation.x) + "," +
           std::to_string(g.translation.y);
}

Isometry parse_isometry(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) {
        throw ParseError("isometry '" + std::string(text) + "' must look like A:tx,ty");
    }
    const auto rest = text.substr(colon + 1);
    const auto comma = rest.find(',');
    if (comma == std::string_view::npos) {
        throw ParseError("isometry '" + std::string(text) + "' must look like A:tx,ty");
    }
    Isometry g;
    g.linear = parse_point_part(text.substr(0, colon));
    g.translation = {parse_int(rest.substr(0, comma), text), parse_int(rest.substr(comma + 1), text)};
    return g;
}

std::string to_string(Cell c) {
    return "(" + std::to_string(c.x) + "," + std::to_string(c.y) + ")";
}

std::ostream& operator<<(std::ostream& os, const Vec2& v) { return os << to_string(v); }
std::ostream& operator<<(std::ostream& os, const Isometry& g) { return os << to_string(g); }
std::ostream& operator<<(std::ostream& os, PointPart p) { return os << to_string(p); }

} // namespace gsetca
