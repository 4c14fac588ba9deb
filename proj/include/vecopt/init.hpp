#pragma once

#include <cstdint>
#include <vector>

#include "vecopt/geometry.hpp"
#include "vecopt/image.hpp"
#include "vecopt/masks.hpp"

namespace vecopt {

struct InitConfig {
    int num_paths_per_region = 16;
    int segments_per_path = 4;        // points per path = 3*segments + 1
    double radius_fraction = 0.0005;  // of max(canvas W, H)
    uint64_t seed = 0;
    StyleClass style = StyleClass::Iconography;
    double stroke_width = 3.0;  // initial width for stroke styles

    void validate() const;
};

// Fallback weight map when none is supplied: Sobel gradient magnitude of the
// Rec.709 luminance, max-normalized to [0,1]. A perfectly flat image yields
// a uniform small positive map so sampling still has mass.
ImportanceMap importance_from_image(const RasterImage& target);

// Draws cfg.num_paths_per_region paths whose anchor points follow the weight
// map restricted to region_mask (probability proportional to map value). The
// anchor is the sampled pixel's (x, y); the remaining points fall uniformly
// in a disk of radius radius_fraction * max(W, H) around it. Square styles
// emit axis-aligned squares centered on the anchor instead. Colors come from
// the target pixel under the anchor when a target is given, else mid-gray.
// Throws ContractError when the map restricted to the region has zero mass.
std::vector<VectorPath> sample_initial_paths(const ImportanceMap& map,
                                             const BinaryMask& region_mask,
                                             const InitConfig& cfg,
                                             const RasterImage* target = nullptr);

}  // namespace vecopt
