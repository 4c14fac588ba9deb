#pragma once

#include <cstdint>
#include <vector>

#include "vecopt/errors.hpp"

namespace vecopt {

// H x W x 4 RGBA raster of unit-interval values, row-major.
struct RasterImage {
    int width = 0;
    int height = 0;
    std::vector<double> data;  // width * height * 4

    RasterImage() = default;
    RasterImage(int w, int h, double r = 0, double g = 0, double b = 0, double a = 0)
        : width(w), height(h), data(size_t(w) * h * 4) {
        if (w <= 0 || h <= 0) throw ContractError("raster dimensions must be positive");
        for (size_t i = 0; i < data.size(); i += 4) {
            data[i] = r;
            data[i + 1] = g;
            data[i + 2] = b;
            data[i + 3] = a;
        }
    }

    double* px(int x, int y) { return &data[(size_t(y) * width + x) * 4]; }
    const double* px(int x, int y) const { return &data[(size_t(y) * width + x) * 4]; }
    size_t pixel_count() const { return size_t(width) * height; }

    bool same_dims(const RasterImage& o) const {
        return width == o.width && height == o.height;
    }
};

// Grayscale raster of unit-interval values (importance maps, intensity maps).
struct GrayMap {
    int width = 0;
    int height = 0;
    std::vector<double> data;  // width * height

    GrayMap() = default;
    GrayMap(int w, int h, double fill = 0.0)
        : width(w), height(h), data(size_t(w) * h, fill) {
        if (w <= 0 || h <= 0) throw ContractError("map dimensions must be positive");
    }

    double at(int x, int y) const { return data[size_t(y) * width + x]; }
    double& at(int x, int y) { return data[size_t(y) * width + x]; }
};

using ImportanceMap = GrayMap;

// Binary raster; one byte per pixel, values 0 or 1.
struct BinaryMask {
    int width = 0;
    int height = 0;
    std::vector<uint8_t> data;

    BinaryMask() = default;
    BinaryMask(int w, int h, uint8_t fill = 0)
        : width(w), height(h), data(size_t(w) * h, fill) {
        if (w <= 0 || h <= 0) throw ContractError("mask dimensions must be positive");
    }

    uint8_t at(int x, int y) const { return data[size_t(y) * width + x]; }
    uint8_t& at(int x, int y) { return data[size_t(y) * width + x]; }
    size_t count_set() const {
        size_t n = 0;
        for (uint8_t v : data) n += v != 0;
        return n;
    }
    bool same_dims(const BinaryMask& o) const {
        return width == o.width && height == o.height;
    }
};

}  // namespace vecopt
