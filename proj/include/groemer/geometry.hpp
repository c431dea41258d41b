#ifndef GROEMER_GEOMETRY_HPP
#define GROEMER_GEOMETRY_HPP

/**
 * @file geometry.hpp
 * @brief Lattice realization of a boundary sequence.
 *
 * Points use axial coordinates (u, v) on the triangular lattice. The
 * Euclidean centre is (2u + v, sqrt(3) v), so neighbouring centres are 2
 * apart and squared distances are the integer (2du + dv)^2 + 3 dv^2.
 * Side 1 lies on v = 0 and starts at the origin; the sides are walked
 * counter-clockwise in directions (1,0), (0,1), (-1,1), (-1,0), (0,-1), (1,-1).
 */

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <limits>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "groemer/arith.hpp"
#include "groemer/search.hpp"

namespace groemer {

struct LatticePoint {
    integer u = 0;
    integer v = 0;

    // (v, u) order, i.e. row-major.
    friend constexpr auto operator<=>(const LatticePoint& x, const LatticePoint& y) {
        if (auto cmp = x.v <=> y.v; cmp != 0) {
            return cmp;
        }
        return x.u <=> y.u;
    }
    friend constexpr bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

constexpr integer distance_sq(const LatticePoint& x, const LatticePoint& y) {
    const integer du = x.u - y.u;
    const integer dv = x.v - y.v;
    return (2 * du + dv) * (2 * du + dv) + 3 * dv * dv;
}

inline constexpr std::array<LatticePoint, 6> side_directions{
    {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}}};

/// The six half-planes cutting out the hexagon: 0 <= v <= v_max, u_min <= u <= u_max, 0 <= u + v <= s_max.
struct HexBounds {
    integer v_max = 0;
    integer u_min = 0;
    integer u_max = 0;
    integer s_max = 0;

    constexpr bool contains(const LatticePoint& q) const {
        return q.v >= 0 && q.v <= v_max && q.u >= u_min && q.u <= u_max && q.u + q.v >= 0 && q.u + q.v <= s_max;
    }
    constexpr bool tight(const LatticePoint& q) const {
        return q.v == 0 || q.v == v_max || q.u == u_min || q.u == u_max || q.u + q.v == 0 || q.u + q.v == s_max;
    }
};

struct HexRealization {
    BoundarySeq seq;
    HexBounds bounds;
    std::vector<LatticePoint> points;  // sorted by (v, u)
    std::array<LatticePoint, 6> vertices{};
    integer boundary_count = 0;
    /// Twice the signed lattice area of the vertex polygon in (u, v) coordinates.
    integer twice_area = 0;

    bool on_boundary(const LatticePoint& q) const { return bounds.tight(q); }
    bool flat() const { return twice_area == 0; }
};

/**
 * Fills the hexagon row by row from its six half-planes.
 *
 * The boundary count is the number of points on a tight half-plane. When the
 * hexagon collapses to a segment or a single point it is instead the length
 * of the closed boundary walk, sum(p_i - 1), which is what the perimeter
 * formula measures for those shapes.
 */
inline HexRealization realize(const BoundarySeq& seq) {
    if (!closure_holds(seq)) {
        throw std::invalid_argument("groemer: boundary sequence violates closure or positivity");
    }
    HexRealization r;
    r.seq = seq;
    const auto& p = seq.p;
    r.bounds = HexBounds{p[1] + p[2] - 2, p[0] - p[2] - p[3] + 1, p[0] - 1, p[0] + p[1] - 2};

    LatticePoint corner{0, 0};
    for (std::size_t i = 0; i < 6; ++i) {
        r.vertices[i] = corner;
        corner.u += side_directions[i].u * (p[i] - 1);
        corner.v += side_directions[i].v * (p[i] - 1);
    }
    if (corner != LatticePoint{0, 0}) {
        throw std::logic_error("groemer: boundary walk did not close");
    }
    for (std::size_t i = 0; i < 6; ++i) {
        const auto& x = r.vertices[i];
        const auto& y = r.vertices[(i + 1) % 6];
        r.twice_area += x.u * y.v - y.u * x.v;
    }

    const wide expected = n_of_seq(seq);
    r.points.reserve(static_cast<std::size_t>(expected));
    integer tight = 0;
    for (integer v = 0; v <= r.bounds.v_max; ++v) {
        const integer first = std::max(r.bounds.u_min, -v);
        const integer last = std::min(r.bounds.u_max, r.bounds.s_max - v);
        for (integer u = first; u <= last; ++u) {
            const LatticePoint q{u, v};
            r.points.push_back(q);
            tight += r.bounds.tight(q) ? 1 : 0;
        }
    }

    integer walk = 0;
    for (integer side : p) {
        walk += side - 1;
    }
    r.boundary_count = r.flat() ? walk : tight;
    return r;
}

/**
 * Minimum squared distance over distinct pairs.
 *
 * Any two lattice neighbours give the lattice minimum 4, so a sorted lookup
 * of the three forward neighbours settles every set that has an adjacent pair
 * (all realizations with two or more points do). Sparser sets fall back to
 * comparing all pairs.
 */
inline integer min_pairwise_distance_sq(std::span<const LatticePoint> pts) {
    if (pts.size() < 2) {
        throw std::invalid_argument("groemer: need at least two points");
    }
    std::vector<LatticePoint> sorted(pts.begin(), pts.end());
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        if (sorted[i] == sorted[i - 1]) {
            throw std::invalid_argument("groemer: duplicate lattice point");
        }
    }
    for (const auto& q : sorted) {
        for (std::size_t d = 0; d < 3; ++d) {
            const LatticePoint next{q.u + side_directions[d].u, q.v + side_directions[d].v};
            if (std::binary_search(sorted.begin(), sorted.end(), next)) {
                return 4;
            }
        }
    }
    integer best = std::numeric_limits<integer>::max();
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        for (std::size_t j = i + 1; j < sorted.size(); ++j) {
            best = std::min(best, distance_sq(sorted[i], sorted[j]));
        }
    }
    return best;
}

inline integer min_pairwise_distance_sq(const HexRealization& r) {
    return min_pairwise_distance_sq(std::span<const LatticePoint>(r.points));
}

/// Header `u,v`, then one row per point in (v, u) order.
inline std::string export_csv(const HexRealization& r) {
    std::string out = "u,v\n";
    out.reserve(out.size() + r.points.size() * 12);
    for (const auto& q : r.points) {
        out += std::to_string(q.u);
        out += ',';
        out += std::to_string(q.v);
        out += '\n';
    }
    return out;
}

struct RenderOptions {
    double scale = 10.0;  // pixels per unit length
    bool highlight_boundary = true;
};

inline std::string export_svg(const HexRealization& r, const RenderOptions& opts = {}) {
    constexpr double sqrt3 = 1.7320508075688772;
    const double s = opts.scale;

    integer x_min = std::numeric_limits<integer>::max();
    integer x_max = std::numeric_limits<integer>::min();
    integer v_max = 0;
    for (const auto& q : r.points) {
        x_min = std::min(x_min, 2 * q.u + q.v);
        x_max = std::max(x_max, 2 * q.u + q.v);
        v_max = std::max(v_max, q.v);
    }
    if (r.points.empty()) {
        x_min = x_max = 0;
    }
    const double width = s * static_cast<double>(x_max - x_min + 2);
    const double height = s * (static_cast<double>(v_max) * sqrt3 + 2.0);

    std::ostringstream svg;
    svg.precision(10);
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"" << s * static_cast<double>(x_min - 1) << ' ' << -s << ' ' << width << ' ' << height
        << "\">\n"
        << "<style>.interior{fill:#dfe8f2;stroke:#4a6a8a}.boundary{fill:#f4d3c4;stroke:#b03a10;stroke-width:2}"
        << "</style>\n"
        << "<g transform=\"matrix(1 0 0 -1 0 " << static_cast<double>(v_max) * sqrt3 * s << ")\">\n";
    for (const auto& q : r.points) {
        const bool boundary = opts.highlight_boundary && r.on_boundary(q);
        svg << "<circle class=\"" << (boundary ? "boundary" : "interior") << "\" cx=\""
            << s * static_cast<double>(2 * q.u + q.v) << "\" cy=\"" << s * static_cast<double>(q.v) * sqrt3
            << "\" r=\"" << s << "\"/>\n";
    }
    svg << "</g>\n</svg>\n";
    return svg.str();
}

}

#endif
