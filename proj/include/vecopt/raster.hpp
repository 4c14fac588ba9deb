#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "vecopt/geometry.hpp"
#include "vecopt/image.hpp"

namespace vecopt {

// A path in a scene: geometry plus a stable id (for control events and
// traces) and its object/part assignment from initialization.
struct PathEntry {
    VectorPath shape;
    uint32_t id = 0;
    int object = -1;  // -1 = background region
    int part = -1;
};

// Ordered back-to-front paint list over a canvas.
struct Scene {
    std::vector<PathEntry> paths;
    int width = 0;
    int height = 0;
    ColorAttr background{1, 1, 1, 1};
    uint32_t next_id = 1;

    Scene() = default;
    Scene(int w, int h, ColorAttr bg = {1, 1, 1, 1})
        : width(w), height(h), background(bg) {}

    uint32_t add_path(VectorPath shape, int object = -1, int part = -1) {
        uint32_t id = next_id++;
        paths.push_back({std::move(shape), id, object, part});
        return id;
    }
    int index_of(uint32_t id) const {
        for (int i = 0; i < int(paths.size()); ++i)
            if (paths[i].id == id) return i;
        return -1;
    }
    void validate() const;
};

// Gradient block for one path, congruent with its shape.
struct PathGrad {
    std::vector<Vec2> points;
    ColorAttr color{0, 0, 0, 0};  // gradient of the active paint
    double width = 0;
};

// Mirrors the Scene structure; paths[i] corresponds to scene.paths[i].
struct ParamGradients {
    std::vector<PathGrad> paths;

    static ParamGradients zeros_like(const Scene& scene);
    bool congruent_with(const Scene& scene) const;
    bool finite() const;
};

struct RenderOptions {
    double bandwidth = 1.0;  // half-width of the soft coverage edge, pixels
    int supersample = 1;     // 1 = optimization renders; 2 = 4x final quality
    int threads = 0;         // 0 = hardware concurrency
};

// Signed distance from p to the path outline: negative inside closed paths;
// for open paths, distance to the centerline minus stroke_width / 2.
double signed_distance(const VectorPath& path, Vec2 p);

// Soft coverage: 1 at d <= -bandwidth, 0 at d >= bandwidth, smoothstep
// between; differentiable everywhere.
double coverage(double d, double bandwidth);
double coverage_ddist(double d, double bandwidth);

RasterImage render(const Scene& scene, const RenderOptions& opt = {});

// Parameter gradients of sum(grad_image * render(scene)) over pixels.
ParamGradients backward(const Scene& scene, const RasterImage& grad_image,
                        const RenderOptions& opt = {});

// Forward + backward sharing one geometry preparation; the fast path for
// optimization loops.
class Renderer {
public:
    Renderer(const Scene& scene, const RenderOptions& opt = {});
    ~Renderer();
    RasterImage forward();
    ParamGradients backward(const RasterImage& grad_image);

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace vecopt
