#include "vecopt/init.hpp"

#include <algorithm>
#include <cmath>

#include "vecopt/rng.hpp"

namespace vecopt {

void InitConfig::validate() const {
    if (num_paths_per_region < 1)
        throw ContractError("num_paths_per_region must be >= 1");
    if (segments_per_path < 1)
        throw ContractError("segments_per_path must be >= 1");
    if (!(radius_fraction > 0 && radius_fraction < 0.1))
        throw ContractError("radius_fraction must lie in (0, 0.1)");
    if (stroke_width <= 0) throw ContractError("initial stroke width must be positive");
}

ImportanceMap importance_from_image(const RasterImage& target) {
    int W = target.width, H = target.height;
    std::vector<double> lum(size_t(W) * H);
    for (int y = 0; y < H; ++y)
        for (int x = 0; x < W; ++x) {
            const double* px = target.px(x, y);
            lum[size_t(y) * W + x] = 0.2126 * px[0] + 0.7152 * px[1] + 0.0722 * px[2];
        }
    auto at = [&](int x, int y) {
        x = std::clamp(x, 0, W - 1);
        y = std::clamp(y, 0, H - 1);
        return lum[size_t(y) * W + x];
    };
    ImportanceMap map(W, H);
    double peak = 0;
    for (int y = 0; y < H; ++y)
        for (int x = 0; x < W; ++x) {
            double gx = at(x + 1, y - 1) + 2 * at(x + 1, y) + at(x + 1, y + 1) -
                        at(x - 1, y - 1) - 2 * at(x - 1, y) - at(x - 1, y + 1);
            double gy = at(x - 1, y + 1) + 2 * at(x, y + 1) + at(x + 1, y + 1) -
                        at(x - 1, y - 1) - 2 * at(x, y - 1) - at(x + 1, y - 1);
            double m = std::sqrt(gx * gx + gy * gy);
            map.data[size_t(y) * W + x] = m;
            peak = std::max(peak, m);
        }
    if (peak <= 1e-12) {
        std::fill(map.data.begin(), map.data.end(), 1e-6);
        return map;
    }
    for (double& v : map.data) v /= peak;
    return map;
}

namespace {

VectorPath square_path(Vec2 center, double side) {
    double h = side * 0.5;
    Vec2 c[4] = {{center.x - h, center.y - h},
                 {center.x + h, center.y - h},
                 {center.x + h, center.y + h},
                 {center.x - h, center.y + h}};
    VectorPath path;
    path.points.reserve(13);
    for (int i = 0; i < 4; ++i) {
        Vec2 a = c[i], b = c[(i + 1) % 4];
        path.points.push_back(a);
        path.points.push_back(a + (b - a) * (1.0 / 3.0));
        path.points.push_back(a + (b - a) * (2.0 / 3.0));
    }
    path.points.push_back(c[0]);
    path.closed = true;
    return path;
}

}  // namespace

std::vector<VectorPath> sample_initial_paths(const ImportanceMap& map,
                                             const BinaryMask& region_mask,
                                             const InitConfig& cfg,
                                             const RasterImage* target) {
    cfg.validate();
    if (map.width != region_mask.width || map.height != region_mask.height)
        throw ContractError("importance map and region mask dimensions differ");
    int W = map.width, H = map.height;

    // cumulative weights over the region's pixels, mass proportional to value
    std::vector<size_t> pixels;
    std::vector<double> cdf;
    double mass = 0;
    for (size_t p = 0; p < map.data.size(); ++p) {
        if (!region_mask.data[p]) continue;
        double w = map.data[p];
        if (w <= 0) continue;
        mass += w;
        pixels.push_back(p);
        cdf.push_back(mass);
    }
    if (pixels.empty() || mass <= 0)
        throw ContractError("importance map has zero mass inside the region");

    const StylePreset preset = style_preset(cfg.style);
    double radius = cfg.radius_fraction * std::max(W, H);
    double side = 2.0;
    if (preset.square_init) {
        double area = double(region_mask.count_set());
        side = std::clamp(std::sqrt(area / cfg.num_paths_per_region), 2.0,
                          0.25 * std::min(W, H));
    }

    Rng rng(cfg.seed);
    std::vector<VectorPath> out;
    out.reserve(cfg.num_paths_per_region);
    for (int k = 0; k < cfg.num_paths_per_region; ++k) {
        double u = rng.uniform() * mass;
        size_t idx = std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin();
        idx = std::min(idx, pixels.size() - 1);
        int px = int(pixels[idx] % W), py = int(pixels[idx] / W);
        Vec2 anchor{double(px), double(py)};

        VectorPath path;
        if (preset.square_init) {
            path = square_path(anchor, side);
        } else {
            int n = 3 * cfg.segments_per_path + 1;
            path.points.reserve(n);
            path.points.push_back(anchor);
            for (int i = 1; i < n; ++i) {
                double ang = 2 * M_PI * rng.uniform();
                double rad = radius * std::sqrt(rng.uniform());
                path.points.push_back(
                    {anchor.x + rad * std::cos(ang), anchor.y + rad * std::sin(ang)});
            }
            path.closed = preset.closed;
        }

        ColorAttr color{0.5, 0.5, 0.5, 1.0};
        if (target) {
            const double* t = target->px(px, py);
            color = {t[0], t[1], t[2], 1.0};
        }
        if (preset.has_fill) {
            path.fill = color;
            path.stroke_width = 1.0;
        } else {
            path.stroke = preset.stroke_black ? ColorAttr{0, 0, 0, 1} : color;
            path.stroke_width = cfg.stroke_width;
        }
        path.style = cfg.style;
        path.validate();
        out.push_back(std::move(path));
    }
    return out;
}

}  // namespace vecopt
