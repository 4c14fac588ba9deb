#pragma once

#include <string>
#include <vector>

#include "vecopt/errors.hpp"
#include "vecopt/image.hpp"

namespace vecopt {

// Region decomposition of the canvas: disjoint-ish object masks whose
// complement is the background, plus optional per-object part masks.
struct MaskSet {
    int width = 0;
    int height = 0;
    std::vector<BinaryMask> objects;
    // parts[i] are the part masks belonging to objects[i]; may be empty.
    std::vector<std::vector<BinaryMask>> parts;
    BinaryMask background;

    size_t object_count() const { return objects.size(); }
};

// One problem found by validate_masks.
struct MaskIssue {
    enum class Kind {
        DimensionMismatch,
        BackgroundNotComplement,
        PartOutsideObject,
        EmptyMask,
    };
    Kind kind;
    std::string subject;  // e.g. "object 2" or "part 1 of object 0"
    std::string detail;
};

struct MaskReport {
    std::vector<MaskIssue> issues;
    bool ok() const { return issues.empty(); }
};

// value > threshold -> 1, else 0
BinaryMask binarize(const GrayMap& map, double threshold);

// Pixelwise complement of the union of the object masks.
BinaryMask derive_background(const std::vector<BinaryMask>& objects, int width,
                             int height);

// Builds a MaskSet from object masks (background derived). Part masks may be
// attached afterwards; call validate_masks to check the result.
MaskSet make_mask_set(std::vector<BinaryMask> objects, int width, int height);

// Structural checks: uniform dimensions, background == complement of the
// object union, each part >=99% contained in its object, no empty object.
MaskReport validate_masks(const MaskSet& masks);

}  // namespace vecopt
