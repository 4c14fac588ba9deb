#include "vecopt/raster.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "vecopt/parallel.hpp"

namespace vecopt {

void Scene::validate() const {
    if (width <= 0 || height <= 0)
        throw ContractError("scene canvas dimensions must be positive");
    for (const PathEntry& e : paths) e.shape.validate();
}

ParamGradients ParamGradients::zeros_like(const Scene& scene) {
    ParamGradients g;
    g.paths.resize(scene.paths.size());
    for (size_t i = 0; i < scene.paths.size(); ++i)
        g.paths[i].points.assign(scene.paths[i].shape.points.size(), Vec2{0, 0});
    return g;
}

bool ParamGradients::congruent_with(const Scene& scene) const {
    if (paths.size() != scene.paths.size()) return false;
    for (size_t i = 0; i < paths.size(); ++i)
        if (paths[i].points.size() != scene.paths[i].shape.points.size()) return false;
    return true;
}

bool ParamGradients::finite() const {
    for (const PathGrad& p : paths) {
        for (Vec2 v : p.points)
            if (!v.finite()) return false;
        for (double v : {p.color.r, p.color.g, p.color.b, p.color.a, p.width})
            if (!std::isfinite(v)) return false;
    }
    return true;
}

double coverage(double d, double bandwidth) {
    if (bandwidth <= 0) throw ContractError("coverage bandwidth must be positive");
    if (d <= -bandwidth) return 1.0;
    if (d >= bandwidth) return 0.0;
    double t = (bandwidth - d) / (2 * bandwidth);
    return t * t * (3 - 2 * t);
}

double coverage_ddist(double d, double bandwidth) {
    if (bandwidth <= 0) throw ContractError("coverage bandwidth must be positive");
    if (d <= -bandwidth || d >= bandwidth) return 0.0;
    double t = (bandwidth - d) / (2 * bandwidth);
    return -3.0 * t * (1 - t) / bandwidth;
}

namespace {

constexpr double kRasterFlattenTol = 0.1;

// ------------------------------------------------------------------
// cubic root solving for scanline crossings

int solve_quadratic(double a, double b, double c, double out[3]) {
    if (std::abs(a) < 1e-14 * (std::abs(b) + std::abs(c))) {
        if (std::abs(b) < 1e-300) return 0;
        out[0] = -c / b;
        return 1;
    }
    double disc = b * b - 4 * a * c;
    if (disc < 0) return 0;
    double sq = std::sqrt(disc);
    // citardauq form for the small root
    double q = -0.5 * (b + (b >= 0 ? sq : -sq));
    int n = 0;
    out[n++] = q / a;
    if (std::abs(q) > 1e-300) out[n++] = c / q;
    return n;
}

// All real roots of c3 t^3 + c2 t^2 + c1 t + c0, Newton-polished.
int solve_cubic(double c3, double c2, double c1, double c0, double out[3]) {
    double scale = std::max({std::abs(c3), std::abs(c2), std::abs(c1), std::abs(c0)});
    if (scale < 1e-300) return 0;
    int n;
    if (std::abs(c3) < 1e-12 * scale) {
        n = solve_quadratic(c2, c1, c0, out);
    } else {
        double a = c2 / c3, b = c1 / c3, c = c0 / c3;
        double p = b - a * a / 3;
        double q = 2 * a * a * a / 27 - a * b / 3 + c;
        double off = a / 3;
        double disc = q * q / 4 + p * p * p / 27;
        n = 0;
        if (disc > 1e-18 * scale / std::abs(c3)) {
            double sq = std::sqrt(disc);
            double u = std::cbrt(-q / 2 + sq);
            double v = std::cbrt(-q / 2 - sq);
            out[n++] = u + v - off;
        } else if (disc >= 0) {
            double u = std::cbrt(-q / 2);
            out[n++] = 2 * u - off;
            out[n++] = -u - off;
        } else {
            double r = std::sqrt(-p * p * p / 27);
            double phi = std::acos(std::clamp(-q / (2 * r), -1.0, 1.0));
            double m = 2 * std::sqrt(-p / 3);
            out[n++] = m * std::cos(phi / 3) - off;
            out[n++] = m * std::cos((phi + 2 * M_PI) / 3) - off;
            out[n++] = m * std::cos((phi + 4 * M_PI) / 3) - off;
        }
    }
    // polish on the original polynomial
    for (int i = 0; i < n; ++i) {
        double t = out[i];
        for (int it = 0; it < 2; ++it) {
            double f = ((c3 * t + c2) * t + c1) * t + c0;
            double df = (3 * c3 * t + 2 * c2) * t + c1;
            if (std::abs(df) < 1e-14 * scale) break;
            t -= f / df;
        }
        out[i] = t;
    }
    return n;
}

struct Crossing {
    double x;
    int dir;
};

// Crossings of the outline with the horizontal line y = yc. Roots at
// parameter 1 belong to the next segment (half-open), so shared junction
// points count once.
void row_crossings(const std::vector<Segment>& segs, double yc,
                   std::vector<Crossing>& out) {
    out.clear();
    for (const Segment& s : segs) {
        if (s.is_line) {
            double denom = s.p3.y - s.p0.y;
            if (std::abs(denom) < 1e-300) continue;
            double t = (yc - s.p0.y) / denom;
            if (t >= -1e-9 && t < 1.0 - 1e-9)
                out.push_back({s.p0.x + t * (s.p3.x - s.p0.x), denom > 0 ? 1 : -1});
            continue;
        }
        double y0 = s.p0.y, y1 = s.p1.y, y2 = s.p2.y, y3 = s.p3.y;
        double lo = std::min({y0, y1, y2, y3}), hi = std::max({y0, y1, y2, y3});
        if (yc < lo || yc > hi) continue;
        double A = -y0 + 3 * y1 - 3 * y2 + y3;
        double B = 3 * y0 - 6 * y1 + 3 * y2;
        double C = -3 * y0 + 3 * y1;
        double roots[3];
        int n = solve_cubic(A, B, C, y0 - yc, roots);
        double x0 = s.p0.x, x1 = s.p1.x, x2 = s.p2.x, x3 = s.p3.x;
        double XA = -x0 + 3 * x1 - 3 * x2 + x3;
        double XB = 3 * x0 - 6 * x1 + 3 * x2;
        double XC = -3 * x0 + 3 * x1;
        for (int i = 0; i < n; ++i) {
            double t = roots[i];
            if (t < -1e-9 || t >= 1.0 - 1e-9) continue;
            t = std::max(t, 0.0);
            double dy = (3 * A * t + 2 * B) * t + C;
            if (std::abs(dy) < 1e-12) continue;  // tangential touch
            double x = ((XA * t + XB) * t + XC) * t + x0;
            out.push_back({x, dy > 0 ? 1 : -1});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const Crossing& a, const Crossing& b) { return a.x < b.x; });
}

// ------------------------------------------------------------------
// closest point on a path

struct Nearest {
    double dist = std::numeric_limits<double>::infinity();
    int seg = 0;
    double t = 0;
    Vec2 q{0, 0};
};

double newton_polish(const Segment& s, Vec2 p, double t) {
    for (int it = 0; it < 6; ++it) {
        Vec2 q = cubic_eval(s, t);
        Vec2 dq = cubic_deriv(s, t);
        Vec2 r = q - p;
        double g = r.dot(dq);
        double h = dq.norm2() + r.dot(cubic_second(s, t));
        if (h <= 1e-18) break;
        double tn = std::clamp(t - g / h, 0.0, 1.0);
        if (std::abs(tn - t) < 1e-13) {
            t = tn;
            break;
        }
        t = tn;
    }
    return t;
}

Nearest nearest_on_path(const std::vector<Segment>& segs,
                        const std::vector<FlatVertex>& poly, Vec2 p) {
    // pass 1: nearest polyline edge
    double best2 = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i + 1 < poly.size(); ++i) {
        Vec2 a = poly[i].p, ab = poly[i + 1].p - poly[i].p;
        double len2 = ab.norm2();
        double s = len2 > 0 ? std::clamp((p - a).dot(ab) / len2, 0.0, 1.0) : 0.0;
        best2 = std::min(best2, (p - (a + ab * s)).norm2());
    }
    double cutoff = std::sqrt(best2) + 1.0;
    double cutoff2 = cutoff * cutoff;

    // pass 2: Newton-polish every competitive seed
    Nearest best;
    auto consider = [&](int seg, double t) {
        t = newton_polish(segs[seg], p, t);
        Vec2 q = cubic_eval(segs[seg], t);
        double d = (p - q).norm();
        if (d < best.dist) best = {d, seg, t, q};
    };
    for (size_t i = 0; i + 1 < poly.size(); ++i) {
        Vec2 a = poly[i].p, ab = poly[i + 1].p - poly[i].p;
        double len2 = ab.norm2();
        double s = len2 > 0 ? std::clamp((p - a).dot(ab) / len2, 0.0, 1.0) : 0.0;
        if ((p - (a + ab * s)).norm2() > cutoff2) continue;
        if (poly[i].seg == poly[i + 1].seg) {
            consider(poly[i].seg, poly[i].t + s * (poly[i + 1].t - poly[i].t));
        } else {  // edge straddles a junction
            consider(poly[i].seg, poly[i].t);
            consider(poly[i + 1].seg, poly[i + 1].t * s);
        }
    }
    if (!std::isfinite(best.dist)) {  // degenerate path, fall back to a vertex
        best = {(p - poly[0].p).norm(), poly[0].seg, poly[0].t, poly[0].p};
    }
    return best;
}

// Unit vector u with d(p) = |p - q| and grad_{P_j} d = u * weight_j; sign
// folds the inside flag for fills.
Vec2 dist_grad_dir(Vec2 p, const Nearest& n, const Segment& s, double sign) {
    Vec2 r = p - n.q;
    double len = r.norm();
    if (len > 1e-9) return r * (-sign / len);
    Vec2 tang = cubic_deriv(s, n.t);
    double tl = tang.norm();
    if (tl < 1e-12) return {0, 0};
    return Vec2{-tang.y / tl, tang.x / tl} * -sign;
}

// ------------------------------------------------------------------
// per-path raster data

struct BandCell {
    int x, y;
    double d;      // signed distance at the cell center
    int seg;
    double t;
    Vec2 m;        // grad_{P_j} d = m * bernstein_j(t)
};

struct PathRaster {
    int x0 = 0, y0 = 0, x1 = 0, y1 = 0;  // half-open cell range
    bool visible = false;
    bool is_stroke = false;
    double rgb[3] = {0, 0, 0};  // clamped paint
    double alpha = 0;
    bool rgb_free[3] = {false, false, false};  // raw value strictly clampable
    bool alpha_free = false;
    bool width_free = false;
    std::vector<Segment> segs;
    std::vector<double> cov;
    std::vector<BandCell> band;

    int w() const { return x1 - x0; }
    size_t cell(int x, int y) const { return size_t(y - y0) * w() + (x - x0); }
    double cov_at(int x, int y) const { return cov[cell(x, y)]; }
};

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

PathRaster prepare_path(const VectorPath& path, int W, int H, double bw) {
    PathRaster pr;
    pr.is_stroke = !path.fill.has_value();
    const ColorAttr& paint = path.paint();
    pr.rgb[0] = clamp01(paint.r);
    pr.rgb[1] = clamp01(paint.g);
    pr.rgb[2] = clamp01(paint.b);
    pr.alpha = clamp01(paint.a);
    pr.rgb_free[0] = paint.r >= 0 && paint.r <= 1;
    pr.rgb_free[1] = paint.g >= 0 && paint.g <= 1;
    pr.rgb_free[2] = paint.b >= 0 && paint.b <= 1;
    pr.alpha_free = paint.a >= 0 && paint.a <= 1;
    pr.width_free = path.stroke_width >= 0;
    double half_w = pr.is_stroke ? std::max(path.stroke_width, 0.0) * 0.5 : 0.0;

    pr.segs = path_segments(path);
    Rect hull{path.points[0], path.points[0]};
    for (Vec2 p : path.points) hull.expand(p);
    double pad = half_w + bw + 1.0;
    pr.x0 = std::clamp(int(std::floor(hull.lo.x - pad)), 0, W);
    pr.x1 = std::clamp(int(std::ceil(hull.hi.x + pad)) + 1, 0, W);
    pr.y0 = std::clamp(int(std::floor(hull.lo.y - pad)), 0, H);
    pr.y1 = std::clamp(int(std::ceil(hull.hi.y + pad)) + 1, 0, H);
    if (pr.x0 >= pr.x1 || pr.y0 >= pr.y1) return pr;
    pr.visible = true;

    int gw = pr.w(), gh = pr.y1 - pr.y0;
    pr.cov.assign(size_t(gw) * gh, 0.0);
    auto poly = flatten_tagged(path, kRasterFlattenTol);

    // conservative band mark around the outline
    std::vector<uint8_t> mark(size_t(gw) * gh, 0);
    double rm = half_w + bw + kRasterFlattenTol + 0.5;
    for (size_t i = 0; i + 1 < poly.size(); ++i) {
        Vec2 a = poly[i].p, b = poly[i + 1].p;
        int mx0 = std::max(pr.x0, int(std::ceil(std::min(a.x, b.x) - rm - 0.5)));
        int mx1 = std::min(pr.x1 - 1, int(std::floor(std::max(a.x, b.x) + rm - 0.5)));
        int my0 = std::max(pr.y0, int(std::ceil(std::min(a.y, b.y) - rm - 0.5)));
        int my1 = std::min(pr.y1 - 1, int(std::floor(std::max(a.y, b.y) + rm - 0.5)));
        for (int y = my0; y <= my1; ++y)
            for (int x = mx0; x <= mx1; ++x) mark[pr.cell(x, y)] = 1;
    }

    // winding per cell for fills (scanline crossings, shared per row)
    std::vector<int8_t> inside;
    if (!pr.is_stroke) {
        inside.assign(size_t(gw) * gh, 0);
        std::vector<Crossing> cr;
        for (int y = pr.y0; y < pr.y1; ++y) {
            row_crossings(pr.segs, y + 0.5, cr);
            if (cr.empty()) continue;
            int total = 0;
            for (const Crossing& c : cr) total += c.dir;
            size_t j = 0;
            int prefix = 0;
            for (int x = pr.x0; x < pr.x1; ++x) {
                double xc = x + 0.5;
                while (j < cr.size() && cr[j].x <= xc) prefix += cr[j++].dir;
                inside[pr.cell(x, y)] = (total - prefix) != 0;
            }
        }
    }

    for (int y = pr.y0; y < pr.y1; ++y) {
        for (int x = pr.x0; x < pr.x1; ++x) {
            size_t c = pr.cell(x, y);
            if (!mark[c]) {
                if (!pr.is_stroke && inside[c]) pr.cov[c] = 1.0;
                continue;
            }
            Vec2 p{x + 0.5, y + 0.5};
            Nearest n = nearest_on_path(pr.segs, poly, p);
            double d, sign = 1.0;
            if (pr.is_stroke) {
                d = n.dist - half_w;
            } else {
                sign = inside[c] ? -1.0 : 1.0;
                d = sign * n.dist;
            }
            pr.cov[c] = coverage(d, bw);
            if (std::abs(d) < bw)
                pr.band.push_back({x, y, d, n.seg, n.t,
                                   dist_grad_dir(p, n, pr.segs[n.seg], sign)});
        }
    }
    return pr;
}

constexpr int kTileRows = 32;

}  // namespace

// ------------------------------------------------------------------
// Renderer

struct Renderer::Impl {
    int width = 0, height = 0;
    double bw = 1.0;
    int threads = 1;
    ColorAttr bg;
    std::vector<PathRaster> prs;
    std::vector<size_t> point_counts;

    Impl(const Scene& scene, const RenderOptions& opt) {
        scene.validate();
        width = scene.width;
        height = scene.height;
        bw = opt.bandwidth;
        if (bw <= 0) throw ContractError("render bandwidth must be positive");
        threads = resolve_threads(opt.threads);
        bg.r = clamp01(scene.background.r);
        bg.g = clamp01(scene.background.g);
        bg.b = clamp01(scene.background.b);
        bg.a = clamp01(scene.background.a);
        prs.resize(scene.paths.size());
        point_counts.resize(scene.paths.size());
        for (size_t i = 0; i < scene.paths.size(); ++i)
            point_counts[i] = scene.paths[i].shape.points.size();
        parallel_for(int(scene.paths.size()), threads, [&](int i) {
            prs[i] = prepare_path(scene.paths[i].shape, width, height, bw);
        });
    }

    int tile_count() const { return (height + kTileRows - 1) / kTileRows; }

    RasterImage forward() const {
        RasterImage img(width, height, bg.r, bg.g, bg.b, bg.a);
        parallel_for(tile_count(), threads, [&](int tile) {
            int ty0 = tile * kTileRows;
            int ty1 = std::min(height, ty0 + kTileRows);
            for (const PathRaster& pr : prs) {
                if (!pr.visible) continue;
                int y0 = std::max(pr.y0, ty0), y1 = std::min(pr.y1, ty1);
                for (int y = y0; y < y1; ++y) {
                    for (int x = pr.x0; x < pr.x1; ++x) {
                        double a = pr.cov[pr.cell(x, y)] * pr.alpha;
                        if (a <= 0) continue;
                        double* px = img.px(x, y);
                        px[0] = px[0] * (1 - a) + pr.rgb[0] * a;
                        px[1] = px[1] * (1 - a) + pr.rgb[1] * a;
                        px[2] = px[2] * (1 - a) + pr.rgb[2] * a;
                        px[3] = px[3] * (1 - a) + a;
                    }
                }
            }
        });
        return img;
    }

    ParamGradients backward(const RasterImage& grad) {
        if (grad.width != width || grad.height != height)
            throw ContractError("gradient image dimensions do not match scene canvas");
        int n = int(prs.size());
        int tiles = tile_count();

        // per-path d(loss)/d(coverage), plus per-tile color accumulators so
        // the reduction order is fixed regardless of thread count
        std::vector<std::vector<double>> dcov(n);
        for (int i = 0; i < n; ++i)
            if (prs[i].visible) dcov[i].assign(prs[i].cov.size(), 0.0);
        struct ColorAcc {
            std::vector<double> rgba;  // 4 per path
        };
        std::vector<ColorAcc> acc(tiles);

        parallel_for(tiles, threads, [&](int tile) {
            acc[tile].rgba.assign(size_t(n) * 4, 0.0);
            double* ca = acc[tile].rgba.data();
            int ty0 = tile * kTileRows;
            int ty1 = std::min(height, ty0 + kTileRows);
            std::vector<int> local;  // paths whose bbox meets this tile
            for (int i = 0; i < n; ++i)
                if (prs[i].visible && prs[i].y0 < ty1 && prs[i].y1 > ty0)
                    local.push_back(i);
            std::vector<int> hit;
            std::vector<double> pre;  // rgba composite below each hit
            for (int y = ty0; y < ty1; ++y) {
                for (int x = 0; x < width; ++x) {
                    hit.clear();
                    for (int i : local) {
                        const PathRaster& pr = prs[i];
                        if (y < pr.y0 || y >= pr.y1 || x < pr.x0 || x >= pr.x1) continue;
                        if (pr.cov[pr.cell(x, y)] > 0) hit.push_back(i);
                    }
                    if (hit.empty()) continue;
                    size_t m = hit.size();
                    pre.resize((m + 1) * 4);
                    pre[0] = bg.r;
                    pre[1] = bg.g;
                    pre[2] = bg.b;
                    pre[3] = bg.a;
                    for (size_t k = 0; k < m; ++k) {
                        const PathRaster& pr = prs[hit[k]];
                        double a = pr.cov[pr.cell(x, y)] * pr.alpha;
                        const double* below = &pre[k * 4];
                        double* up = &pre[(k + 1) * 4];
                        up[0] = below[0] * (1 - a) + pr.rgb[0] * a;
                        up[1] = below[1] * (1 - a) + pr.rgb[1] * a;
                        up[2] = below[2] * (1 - a) + pr.rgb[2] * a;
                        up[3] = below[3] * (1 - a) + a;
                    }
                    const double* gpx = grad.px(x, y);
                    double G[4] = {gpx[0], gpx[1], gpx[2], gpx[3]};
                    for (size_t k = m; k-- > 0;) {
                        int i = hit[k];
                        const PathRaster& pr = prs[i];
                        double cv = pr.cov[pr.cell(x, y)];
                        double a = cv * pr.alpha;
                        const double* below = &pre[k * 4];
                        double da = G[3] * (1 - below[3]);
                        for (int ch = 0; ch < 3; ++ch) {
                            ca[i * 4 + ch] += G[ch] * a;
                            da += G[ch] * (pr.rgb[ch] - below[ch]);
                        }
                        ca[i * 4 + 3] += da * cv;
                        dcov[i][pr.cell(x, y)] += da * pr.alpha;
                        for (int ch = 0; ch < 4; ++ch) G[ch] *= (1 - a);
                    }
                }
            }
        });

        ParamGradients out;
        out.paths.resize(n);
        for (int i = 0; i < n; ++i) out.paths[i].points.assign(point_counts[i], Vec2{0, 0});

        // fixed-order reduction of the per-tile color sums
        for (int tile = 0; tile < tiles; ++tile) {
            for (int i = 0; i < n; ++i) {
                PathGrad& pg = out.paths[i];
                const double* ca = &acc[tile].rgba[size_t(i) * 4];
                pg.color.r += ca[0];
                pg.color.g += ca[1];
                pg.color.b += ca[2];
                pg.color.a += ca[3];
            }
        }

        // geometry chain: d(loss)/d(coverage) -> signed distance -> points
        parallel_for(n, threads, [&](int i) {
            PathRaster& pr = prs[i];
            if (!pr.visible) return;
            PathGrad& pg = out.paths[i];
            for (const BandCell& bc : pr.band) {
                double dd = dcov[i][pr.cell(bc.x, bc.y)] * coverage_ddist(bc.d, bw);
                if (dd == 0) continue;
                const Segment& s = pr.segs[bc.seg];
                auto w4 = control_weights(s, bc.t);
                pg.points[s.i0] += bc.m * (dd * w4[0]);
                pg.points[s.i1] += bc.m * (dd * w4[1]);
                pg.points[s.i2] += bc.m * (dd * w4[2]);
                pg.points[s.i3] += bc.m * (dd * w4[3]);
                if (pr.is_stroke) pg.width += dd * -0.5;
            }
            if (!pr.rgb_free[0]) pg.color.r = 0;
            if (!pr.rgb_free[1]) pg.color.g = 0;
            if (!pr.rgb_free[2]) pg.color.b = 0;
            if (!pr.alpha_free) pg.color.a = 0;
            if (!pr.width_free) pg.width = 0;
        });
        return out;
    }
};

Renderer::Renderer(const Scene& scene, const RenderOptions& opt)
    : impl_(std::make_unique<Impl>(scene, opt)) {}
Renderer::~Renderer() = default;
RasterImage Renderer::forward() { return impl_->forward(); }
ParamGradients Renderer::backward(const RasterImage& grad) {
    return impl_->backward(grad);
}

// ------------------------------------------------------------------
// public wrappers

double signed_distance(const VectorPath& path, Vec2 p) {
    auto segs = path_segments(path);
    auto poly = flatten_tagged(path, 0.01);
    Nearest n = nearest_on_path(segs, poly, p);
    if (!path.closed) return n.dist - path.stroke_width * 0.5;
    int w = 0;
    for (size_t i = 0; i + 1 < poly.size(); ++i) {
        Vec2 a = poly[i].p, b = poly[i + 1].p;
        if (a.y <= p.y) {
            if (b.y > p.y && (b.x - a.x) * (p.y - a.y) - (p.x - a.x) * (b.y - a.y) > 0) ++w;
        } else if (b.y <= p.y && (b.x - a.x) * (p.y - a.y) - (p.x - a.x) * (b.y - a.y) < 0) {
            --w;
        }
    }
    return w != 0 ? -n.dist : n.dist;
}

namespace {

Scene scaled_scene(const Scene& scene, int factor) {
    Scene s = scene;
    s.width = scene.width * factor;
    s.height = scene.height * factor;
    for (PathEntry& e : s.paths) {
        for (Vec2& p : e.shape.points) p = p * double(factor);
        e.shape.stroke_width *= factor;
    }
    return s;
}

}  // namespace

RasterImage render(const Scene& scene, const RenderOptions& opt) {
    if (opt.supersample <= 1) {
        Renderer r(scene, opt);
        return r.forward();
    }
    int f = opt.supersample;
    RenderOptions fine = opt;
    fine.supersample = 1;
    Renderer r(scaled_scene(scene, f), fine);
    RasterImage hi = r.forward();
    RasterImage out(scene.width, scene.height);
    double inv = 1.0 / (f * f);
    for (int y = 0; y < scene.height; ++y)
        for (int x = 0; x < scene.width; ++x) {
            double sum[4] = {0, 0, 0, 0};
            for (int sy = 0; sy < f; ++sy)
                for (int sx = 0; sx < f; ++sx) {
                    const double* px = hi.px(x * f + sx, y * f + sy);
                    for (int c = 0; c < 4; ++c) sum[c] += px[c];
                }
            double* px = out.px(x, y);
            for (int c = 0; c < 4; ++c) px[c] = sum[c] * inv;
        }
    return out;
}

ParamGradients backward(const Scene& scene, const RasterImage& grad_image,
                        const RenderOptions& opt) {
    Renderer r(scene, opt);
    return r.backward(grad_image);
}

}  // namespace vecopt
