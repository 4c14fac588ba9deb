#include "vecopt/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace vecopt {

namespace {

const StylePreset kPresets[] = {
    // style                      closed square fill  strk  black  pts   color  opac  width
    {StyleClass::Iconography,     true,  false, true,  false, false, true,  true,  true,  false},
    {StyleClass::PixelArt,        true,  true,  true,  false, false, false, true,  true,  false},
    {StyleClass::LowPoly,         true,  true,  true,  false, false, true,  true,  true,  false},
    {StyleClass::Painting,        false, false, false, true,  false, true,  true,  true,  true},
    {StyleClass::Sketching,       false, false, false, true,  true,  true,  false, true,  false},
    {StyleClass::InkWash,         false, false, false, true,  true,  true,  false, true,  true},
};

const char* kStyleNames[] = {"iconography", "pixelart", "lowpoly",
                             "painting",    "sketching", "inkwash"};

}  // namespace

const StylePreset& style_preset(StyleClass style) { return kPresets[int(style)]; }

const char* style_name(StyleClass style) { return kStyleNames[int(style)]; }

std::optional<StyleClass> style_from_name(const std::string& name) {
    for (int i = 0; i < 6; ++i)
        if (name == kStyleNames[i]) return StyleClass(i);
    return std::nullopt;
}

void VectorPath::validate() const {
    if (points.size() < 4 || points.size() % 3 != 1)
        throw ContractError("path needs 3k+1 control points, k >= 1");
    for (const Vec2& p : points)
        if (!p.finite()) throw ContractError("path has non-finite control point");
    if (closed) {
        if (fill.has_value() == stroke.has_value())
            throw ContractError("closed path needs exactly one of fill/stroke");
    } else {
        if (fill) throw ContractError("open path cannot have fill");
        if (!stroke) throw ContractError("open path needs a stroke");
    }
    if (stroke && stroke_width <= 0)
        throw ContractError("stroke requires positive stroke_width");
    auto check_unit = [](const ColorAttr& c) {
        for (double v : {c.r, c.g, c.b, c.a})
            if (!(v >= 0 && v <= 1)) throw ContractError("color component outside [0,1]");
    };
    if (fill) check_unit(*fill);
    if (stroke) check_unit(*stroke);
}

std::vector<Segment> path_segments(const VectorPath& path) {
    std::vector<Segment> segs;
    int n = path.segment_count();
    segs.reserve(n + 1);
    for (int k = 0; k < n; ++k) {
        segs.push_back({path.points[3 * k], path.points[3 * k + 1],
                        path.points[3 * k + 2], path.points[3 * k + 3],
                        3 * k, 3 * k + 1, 3 * k + 2, 3 * k + 3, false});
    }
    if (path.closed) {
        Vec2 a = path.points.back();
        Vec2 b = path.points.front();
        if ((a - b).norm2() > 0) {
            int last = int(path.points.size()) - 1;
            segs.push_back({a, a, b, b, last, last, 0, 0, true});
        }
    }
    return segs;
}

namespace {

// Max deviation of the inner controls from the chord; conservative flatness
// bound for a cubic.
double flatness(Vec2 p0, Vec2 p1, Vec2 p2, Vec2 p3) {
    Vec2 d = p3 - p0;
    double len2 = d.norm2();
    if (len2 < 1e-24)
        return std::sqrt(std::max((p1 - p0).norm2(), (p2 - p3).norm2()));
    double c1 = std::abs((p1.x - p0.x) * d.y - (p1.y - p0.y) * d.x);
    double c2 = std::abs((p2.x - p0.x) * d.y - (p2.y - p0.y) * d.x);
    return std::max(c1, c2) / std::sqrt(len2);
}

void subdivide(Vec2 p0, Vec2 p1, Vec2 p2, Vec2 p3, double t0, double t1, int seg,
               double tol, int depth, std::vector<FlatVertex>& out) {
    if (depth >= 24 || flatness(p0, p1, p2, p3) <= tol) {
        out.push_back({p3, seg, t1});
        return;
    }
    Vec2 p01 = (p0 + p1) * 0.5, p12 = (p1 + p2) * 0.5, p23 = (p2 + p3) * 0.5;
    Vec2 p012 = (p01 + p12) * 0.5, p123 = (p12 + p23) * 0.5;
    Vec2 mid = (p012 + p123) * 0.5;
    double tm = (t0 + t1) * 0.5;
    subdivide(p0, p01, p012, mid, t0, tm, seg, tol, depth + 1, out);
    subdivide(mid, p123, p23, p3, tm, t1, seg, tol, depth + 1, out);
}

}  // namespace

std::vector<FlatVertex> flatten_tagged(const VectorPath& path, double tolerance) {
    if (tolerance <= 0) throw ContractError("flatten tolerance must be positive");
    auto segs = path_segments(path);
    std::vector<FlatVertex> out;
    out.push_back({path.points.front(), 0, 0.0});
    for (int k = 0; k < int(segs.size()); ++k) {
        const Segment& s = segs[k];
        if (s.is_line)
            out.push_back({s.p3, k, 1.0});
        else
            subdivide(s.p0, s.p1, s.p2, s.p3, 0.0, 1.0, k, tolerance, 0, out);
    }
    return out;
}

std::vector<Vec2> flatten(const VectorPath& path, double tolerance) {
    auto tagged = flatten_tagged(path, tolerance);
    std::vector<Vec2> out;
    out.reserve(tagged.size());
    for (const auto& v : tagged) out.push_back(v.p);
    return out;
}

double path_area(const VectorPath& path) {
    if (!path.closed) throw ContractError("path_area requires a closed path");
    auto poly = flatten(path, kGeomFlattenTol);
    double twice = 0;
    for (size_t i = 0; i + 1 < poly.size(); ++i)
        twice += poly[i].x * poly[i + 1].y - poly[i + 1].x * poly[i].y;
    return std::abs(twice) * 0.5;
}

namespace {

int polyline_winding(const std::vector<Vec2>& poly, Vec2 p) {
    int w = 0;
    for (size_t i = 0; i + 1 < poly.size(); ++i) {
        Vec2 a = poly[i], b = poly[i + 1];
        if (a.y <= p.y) {
            if (b.y > p.y && (b.x - a.x) * (p.y - a.y) - (p.x - a.x) * (b.y - a.y) > 0)
                ++w;
        } else {
            if (b.y <= p.y && (b.x - a.x) * (p.y - a.y) - (p.x - a.x) * (b.y - a.y) < 0)
                --w;
        }
    }
    return w;
}

double dist_point_segment(Vec2 p, Vec2 a, Vec2 b) {
    Vec2 ab = b - a;
    double len2 = ab.norm2();
    double t = len2 > 0 ? std::clamp((p - a).dot(ab) / len2, 0.0, 1.0) : 0.0;
    return (p - (a + ab * t)).norm();
}

}  // namespace

bool point_in_path(const VectorPath& path, Vec2 p) {
    auto poly = flatten(path, kGeomFlattenTol);
    if (path.closed) return polyline_winding(poly, p) != 0;
    double best = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i + 1 < poly.size(); ++i)
        best = std::min(best, dist_point_segment(p, poly[i], poly[i + 1]));
    return best <= path.stroke_width * 0.5;
}

Rect path_bbox(const VectorPath& path) {
    auto poly = flatten(path, kGeomFlattenTol);
    Rect r{poly.front(), poly.front()};
    for (const Vec2& p : poly) r.expand(p);
    return r;
}

namespace {

Vec2 polygon_centroid(const std::vector<Vec2>& poly, double& signed_area) {
    double a2 = 0, cx = 0, cy = 0;
    for (size_t i = 0; i + 1 < poly.size(); ++i) {
        double cross = poly[i].x * poly[i + 1].y - poly[i + 1].x * poly[i].y;
        a2 += cross;
        cx += (poly[i].x + poly[i + 1].x) * cross;
        cy += (poly[i].y + poly[i + 1].y) * cross;
    }
    signed_area = a2 * 0.5;
    if (std::abs(a2) < 1e-12) return poly.front();
    return {cx / (3 * a2), cy / (3 * a2)};
}

}  // namespace

std::pair<VectorPath, VectorPath> split_path(const VectorPath& path) {
    if (!path.closed) throw ContractError("split_path requires a closed path");
    auto poly = flatten(path, kGeomFlattenTol);
    double signed_area = 0;
    Vec2 c = polygon_centroid(poly, signed_area);
    if (std::abs(signed_area) <= 0)
        throw ContractError("split_path requires positive area");

    Rect box = path_bbox(path);
    bool along_x = box.width() >= box.height();
    double extent = along_x ? box.width() : box.height();
    Vec2 axis = along_x ? Vec2{1, 0} : Vec2{0, 1};
    double shift = extent * 0.25;

    auto make_child = [&](double side) {
        VectorPath child = path;
        for (Vec2& p : child.points) {
            if (along_x)
                p.x = c.x + (p.x - c.x) * 0.5;
            else
                p.y = c.y + (p.y - c.y) * 0.5;
            p += axis * (side * shift);
        }
        return child;
    };
    return {make_child(-1.0), make_child(+1.0)};
}

VectorPath clone_path(const VectorPath& path, Vec2 direction) {
    if (std::abs(direction.norm() - 1.0) > 1e-6)
        throw ContractError("clone_path direction must be a unit vector");
    Rect box = path_bbox(path);
    double span = box.width() * std::abs(direction.x) + box.height() * std::abs(direction.y);
    VectorPath copy = path;
    for (Vec2& p : copy.points) p += direction * span;
    return copy;
}

}  // namespace vecopt
