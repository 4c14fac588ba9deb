#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vecopt/errors.hpp"

namespace vecopt {

struct Vec2 {
    double x = 0;
    double y = 0;

    Vec2() = default;
    Vec2(double x_, double y_) : x(x_), y(y_) {}

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2& operator+=(Vec2 o) {
        x += o.x;
        y += o.y;
        return *this;
    }
    double dot(Vec2 o) const { return x * o.x + y * o.y; }
    double norm2() const { return x * x + y * y; }
    double norm() const { return std::sqrt(norm2()); }
    bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

inline Vec2 operator*(double s, Vec2 v) { return v * s; }

struct Rect {
    Vec2 lo{0, 0};
    Vec2 hi{0, 0};

    double width() const { return hi.x - lo.x; }
    double height() const { return hi.y - lo.y; }
    Vec2 center() const { return {(lo.x + hi.x) * 0.5, (lo.y + hi.y) * 0.5}; }
    bool contains(Vec2 p) const {
        return p.x >= lo.x && p.x <= hi.x && p.y >= lo.y && p.y <= hi.y;
    }
    Rect inflated(double r) const { return {{lo.x - r, lo.y - r}, {hi.x + r, hi.y + r}}; }
    void expand(Vec2 p) {
        lo.x = std::min(lo.x, p.x);
        lo.y = std::min(lo.y, p.y);
        hi.x = std::max(hi.x, p.x);
        hi.y = std::max(hi.y, p.y);
    }
};

// RGBA, every component in [0, 1].
struct ColorAttr {
    double r = 0;
    double g = 0;
    double b = 0;
    double a = 1;
};

enum class StyleClass { Iconography, PixelArt, LowPoly, Painting, Sketching, InkWash };

// Which path attributes a style leaves trainable and what primitive shape it
// uses. The constraint set is total: attributes not flagged stay frozen.
struct StylePreset {
    StyleClass style;
    bool closed;        // closed fill shape vs open stroke
    bool square_init;   // initialized as axis-aligned squares
    bool has_fill;
    bool has_stroke;
    bool stroke_black;  // stroke rgb pinned to black
    bool train_points;
    bool train_color;   // rgb of the active paint
    bool train_opacity; // alpha of the active paint
    bool train_width;
};

const StylePreset& style_preset(StyleClass style);
const char* style_name(StyleClass style);
std::optional<StyleClass> style_from_name(const std::string& name);

// A piecewise cubic Bezier path. points holds 3k+1 control points for k
// segments; segment j uses points 3j..3j+3. A closed path whose last point
// differs from its first is closed by an implicit straight edge.
struct VectorPath {
    std::vector<Vec2> points;
    bool closed = false;
    std::optional<ColorAttr> fill;
    std::optional<ColorAttr> stroke;
    double stroke_width = 0;
    StyleClass style = StyleClass::Iconography;

    int segment_count() const { return int((points.size() - 1) / 3); }

    // Alpha of the active paint (fill for fill styles, stroke otherwise).
    double effective_opacity() const {
        if (fill) return fill->a;
        if (stroke) return stroke->a;
        return 0;
    }
    ColorAttr& paint() { return fill ? *fill : *stroke; }
    const ColorAttr& paint() const { return fill ? *fill : *stroke; }

    // Throws ContractError on structural violations.
    void validate() const;
};

// One parametric piece of a path. Line pieces (the implicit closing edge)
// evaluate as q(t) = p0 (1-t) + p3 t and route gradients only to i0/i3.
struct Segment {
    Vec2 p0, p1, p2, p3;
    int i0, i1, i2, i3;  // control-point indices, for gradient routing
    bool is_line = false;
};

std::vector<Segment> path_segments(const VectorPath& path);

inline Vec2 cubic_eval(const Segment& s, double t) {
    if (s.is_line) return s.p0 * (1 - t) + s.p3 * t;
    double u = 1 - t;
    double b0 = u * u * u, b1 = 3 * u * u * t, b2 = 3 * u * t * t, b3 = t * t * t;
    return s.p0 * b0 + s.p1 * b1 + s.p2 * b2 + s.p3 * b3;
}

inline Vec2 cubic_deriv(const Segment& s, double t) {
    if (s.is_line) return s.p3 - s.p0;
    double u = 1 - t;
    return (s.p1 - s.p0) * (3 * u * u) + (s.p2 - s.p1) * (6 * u * t) +
           (s.p3 - s.p2) * (3 * t * t);
}

inline Vec2 cubic_second(const Segment& s, double t) {
    if (s.is_line) return {0, 0};
    double u = 1 - t;
    return (s.p2 - s.p1 * 2 + s.p0) * (6 * u) + (s.p3 - s.p2 * 2 + s.p1) * (6 * t);
}

// Weights of the four control points at parameter t (Bernstein basis, or the
// endpoint interpolation weights for line pieces).
inline std::array<double, 4> control_weights(const Segment& s, double t) {
    if (s.is_line) return {1 - t, 0, 0, t};
    double u = 1 - t;
    return {u * u * u, 3 * u * u * t, 3 * u * t * t, t * t * t};
}

// Flattened vertex with its source segment and parameter, for seeding
// closest-point queries.
struct FlatVertex {
    Vec2 p;
    int seg;
    double t;
};

// Recursive de Casteljau flattening until the max chord deviation of every
// piece is <= tolerance. Closed paths yield closed polylines (first == last).
std::vector<FlatVertex> flatten_tagged(const VectorPath& path, double tolerance);
std::vector<Vec2> flatten(const VectorPath& path, double tolerance);

// Tolerance used for area / containment / bbox queries.
inline constexpr double kGeomFlattenTol = 0.1;

// Absolute shoelace area of the flattened outline. Closed paths only.
double path_area(const VectorPath& path);

// Nonzero-winding containment for closed paths; for open paths, true iff the
// distance to the polyline is <= stroke_width / 2.
bool point_in_path(const VectorPath& path, Vec2 p);

Rect path_bbox(const VectorPath& path);

// Halves the path along its longer bbox axis: both children are the parent
// scaled by 1/2 along that axis about the area centroid and shifted by a
// quarter extent in opposite directions, so they tile the parent's footprint.
std::pair<VectorPath, VectorPath> split_path(const VectorPath& path);

// Copy translated along `direction` (unit vector) by the bbox extent's
// support in that direction, so the copy's bbox abuts the original's.
VectorPath clone_path(const VectorPath& path, Vec2 direction);

}  // namespace vecopt
