#include "vecopt/masks.hpp"

#include <utility>

namespace vecopt {

BinaryMask binarize(const GrayMap& map, double threshold) {
    BinaryMask out(map.width, map.height);
    for (size_t i = 0; i < map.data.size(); ++i)
        out.data[i] = map.data[i] > threshold ? 1 : 0;
    return out;
}

BinaryMask derive_background(const std::vector<BinaryMask>& objects, int width,
                             int height) {
    BinaryMask bg(width, height, 1);
    for (const BinaryMask& m : objects) {
        if (m.width != width || m.height != height)
            throw ContractError("object mask dimensions do not match canvas");
        for (size_t i = 0; i < bg.data.size(); ++i)
            if (m.data[i]) bg.data[i] = 0;
    }
    return bg;
}

MaskSet make_mask_set(std::vector<BinaryMask> objects, int width, int height) {
    MaskSet set;
    set.width = width;
    set.height = height;
    set.background = derive_background(objects, width, height);
    set.objects = std::move(objects);
    set.parts.resize(set.objects.size());
    return set;
}

MaskReport validate_masks(const MaskSet& masks) {
    MaskReport report;
    auto issue = [&](MaskIssue::Kind kind, std::string subject, std::string detail) {
        report.issues.push_back({kind, std::move(subject), std::move(detail)});
    };

    auto check_dims = [&](const BinaryMask& m, const std::string& subject) {
        if (m.width != masks.width || m.height != masks.height) {
            issue(MaskIssue::Kind::DimensionMismatch, subject,
                  std::to_string(m.width) + "x" + std::to_string(m.height) +
                      " vs canvas " + std::to_string(masks.width) + "x" +
                      std::to_string(masks.height));
            return false;
        }
        return true;
    };

    bool objects_ok = true;
    for (size_t i = 0; i < masks.objects.size(); ++i) {
        std::string subject = "object " + std::to_string(i);
        if (!check_dims(masks.objects[i], subject)) {
            objects_ok = false;
            continue;
        }
        if (masks.objects[i].count_set() == 0)
            issue(MaskIssue::Kind::EmptyMask, subject, "mask has no set pixels");
    }
    bool bg_ok = check_dims(masks.background, "background");

    if (objects_ok && bg_ok) {
        BinaryMask expect = derive_background(masks.objects, masks.width, masks.height);
        size_t wrong = 0;
        for (size_t i = 0; i < expect.data.size(); ++i)
            if (expect.data[i] != masks.background.data[i]) ++wrong;
        if (wrong > 0)
            issue(MaskIssue::Kind::BackgroundNotComplement, "background",
                  std::to_string(wrong) + " pixels differ from the complement of the object union");
    }

    for (size_t i = 0; i < masks.parts.size() && i < masks.objects.size(); ++i) {
        for (size_t j = 0; j < masks.parts[i].size(); ++j) {
            std::string subject =
                "part " + std::to_string(j) + " of object " + std::to_string(i);
            const BinaryMask& part = masks.parts[i][j];
            if (!check_dims(part, subject)) continue;
            if (masks.objects[i].width != masks.width) continue;
            size_t total = 0, outside = 0;
            for (size_t k = 0; k < part.data.size(); ++k) {
                if (!part.data[k]) continue;
                ++total;
                if (!masks.objects[i].data[k]) ++outside;
            }
            if (total == 0) {
                issue(MaskIssue::Kind::EmptyMask, subject, "mask has no set pixels");
            } else if (double(outside) / double(total) > 0.01) {
                issue(MaskIssue::Kind::PartOutsideObject, subject,
                      std::to_string(outside) + " of " + std::to_string(total) +
                          " set pixels fall outside the parent object");
            }
        }
    }
    return report;
}

}  // namespace vecopt
