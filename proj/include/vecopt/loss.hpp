#pragma once

#include <string>
#include <utility>
#include <vector>

#include "vecopt/image.hpp"
#include "vecopt/masks.hpp"
#include "vecopt/raster.hpp"

namespace vecopt {

// Result of a masked reconstruction objective. `total` always equals the sum
// of the per-mask terms; gradients are analytic.
struct LossReport {
    double total = 0;
    std::vector<std::pair<std::string, double>> per_mask;
    RasterImage grad_image;  // d total / d composite render, RGBA layout (A unused)
    // d total / d per-object render, parallel to the object list; only
    // populated by the part-level objective.
    std::vector<RasterImage> per_object_grads;
};

// Region-masked squared reconstruction error: for each object mask (and the
// background mask unless excluded) the canvas-mean of the masked RGB squared
// difference. Mask ids: "object_<i>", "background".
LossReport sive_loss(const RasterImage& render, const RasterImage& target,
                     const MaskSet& masks, bool include_background = true);

// Hierarchical objective: the region-masked term above plus, for every part
// mask j of object i, the canvas-mean masked squared difference between that
// object's isolated render and its target. Part ids: "part_<i>_<j>".
// With no part masks this equals sive_loss on the same inputs.
LossReport hive_loss(const RasterImage& render, const RasterImage& target,
                     const std::vector<RasterImage>& per_object_renders,
                     const std::vector<RasterImage>& per_object_targets,
                     const MaskSet& masks, bool include_background = true);

// Routes an externally supplied per-pixel gradient through the rasterizer's
// backward pass; same contract as raster backward.
ParamGradients inject_gradient(const Scene& scene, const RasterImage& grad_image,
                               const RenderOptions& opt = {});

// 10*log10(1 / MSE) over the RGB channels. Identical images give +infinity
// (the distinguished "exact" value; see psnr_text).
double psnr(const RasterImage& a, const RasterImage& b);

// Formats a PSNR value, rendering +infinity as "exact".
std::string psnr_text(double value);

}  // namespace vecopt
