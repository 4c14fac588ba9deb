#include "vecopt/loss.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

namespace vecopt {

namespace {

void require_same_dims(const RasterImage& a, const RasterImage& b,
                       const char* what) {
    if (!a.same_dims(b))
        throw ContractError(std::string("dimension mismatch in ") + what);
}

// Accumulates one masked squared-difference term (canvas-mean over RGB) and
// its gradient w.r.t. `render` into `grad`.
double masked_term(const RasterImage& render, const RasterImage& target,
                   const BinaryMask& mask, RasterImage& grad) {
    double inv_n = 1.0 / double(render.pixel_count());
    double sum = 0;
    size_t n = size_t(render.width) * render.height;
    for (size_t p = 0; p < n; ++p) {
        if (!mask.data[p]) continue;
        for (int c = 0; c < 3; ++c) {
            double diff = render.data[p * 4 + c] - target.data[p * 4 + c];
            sum += diff * diff;
            grad.data[p * 4 + c] += 2.0 * diff * inv_n;
        }
    }
    return sum * inv_n;
}

void append_region_terms(LossReport& report, const RasterImage& render,
                         const RasterImage& target, const MaskSet& masks,
                         bool include_background) {
    for (size_t i = 0; i < masks.objects.size(); ++i) {
        if (masks.objects[i].width != render.width ||
            masks.objects[i].height != render.height)
            throw ContractError("object mask dimensions do not match render");
        double v = masked_term(render, target, masks.objects[i], report.grad_image);
        report.per_mask.emplace_back("object_" + std::to_string(i), v);
        report.total += v;
    }
    if (include_background) {
        if (masks.background.width != render.width ||
            masks.background.height != render.height)
            throw ContractError("background mask dimensions do not match render");
        double v = masked_term(render, target, masks.background, report.grad_image);
        report.per_mask.emplace_back("background", v);
        report.total += v;
    }
}

}  // namespace

LossReport sive_loss(const RasterImage& render, const RasterImage& target,
                     const MaskSet& masks, bool include_background) {
    require_same_dims(render, target, "sive_loss");
    LossReport report;
    report.grad_image = RasterImage(render.width, render.height);
    append_region_terms(report, render, target, masks, include_background);
    return report;
}

LossReport hive_loss(const RasterImage& render, const RasterImage& target,
                     const std::vector<RasterImage>& per_object_renders,
                     const std::vector<RasterImage>& per_object_targets,
                     const MaskSet& masks, bool include_background) {
    require_same_dims(render, target, "hive_loss");
    if (per_object_renders.size() != masks.objects.size() ||
        per_object_targets.size() != masks.objects.size())
        throw ContractError("hive_loss object render/target count does not match mask set");

    LossReport report;
    report.grad_image = RasterImage(render.width, render.height);
    append_region_terms(report, render, target, masks, include_background);

    report.per_object_grads.reserve(masks.objects.size());
    for (size_t i = 0; i < masks.objects.size(); ++i) {
        require_same_dims(per_object_renders[i], render, "hive_loss object render");
        require_same_dims(per_object_targets[i], render, "hive_loss object target");
        report.per_object_grads.emplace_back(render.width, render.height);
        const auto& parts = i < masks.parts.size() ? masks.parts[i]
                                                   : std::vector<BinaryMask>{};
        for (size_t j = 0; j < parts.size(); ++j) {
            if (parts[j].width != render.width || parts[j].height != render.height)
                throw ContractError("part mask dimensions do not match render");
            double v = masked_term(per_object_renders[i], per_object_targets[i],
                                   parts[j], report.per_object_grads[i]);
            report.per_mask.emplace_back(
                "part_" + std::to_string(i) + "_" + std::to_string(j), v);
            report.total += v;
        }
    }
    return report;
}

ParamGradients inject_gradient(const Scene& scene, const RasterImage& grad_image,
                               const RenderOptions& opt) {
    return backward(scene, grad_image, opt);
}

double psnr(const RasterImage& a, const RasterImage& b) {
    require_same_dims(a, b, "psnr");
    double sum = 0;
    size_t n = size_t(a.width) * a.height;
    for (size_t p = 0; p < n; ++p)
        for (int c = 0; c < 3; ++c) {
            double diff = a.data[p * 4 + c] - b.data[p * 4 + c];
            sum += diff * diff;
        }
    double mse = sum / double(n * 3);
    if (mse <= 0) return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(1.0 / mse);
}

std::string psnr_text(double value) {
    if (std::isinf(value)) return "exact";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", value);
    return buf;
}

}  // namespace vecopt
