#include "vecopt/png_io.hpp"

#include <png.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

namespace vecopt {

namespace {

std::vector<uint8_t> read_rgba_bytes(const std::string& path, int& w, int& h) {
    png_image img;
    std::fill_n(reinterpret_cast<char*>(&img), sizeof img, 0);
    img.version = PNG_IMAGE_VERSION;
    if (!png_image_begin_read_from_file(&img, path.c_str()))
        throw IoError("cannot read PNG '" + path + "': " + img.message);
    img.format = PNG_FORMAT_RGBA;
    std::vector<uint8_t> buf(PNG_IMAGE_SIZE(img));
    if (!png_image_finish_read(&img, nullptr, buf.data(), 0, nullptr)) {
        std::string msg = img.message;
        png_image_free(&img);
        throw IoError("cannot decode PNG '" + path + "': " + msg);
    }
    w = int(img.width);
    h = int(img.height);
    return buf;
}

}  // namespace

RasterImage read_png(const std::string& path) {
    int w, h;
    std::vector<uint8_t> buf = read_rgba_bytes(path, w, h);
    RasterImage out(w, h);
    for (size_t i = 0; i < out.data.size(); ++i) out.data[i] = buf[i] / 255.0;
    return out;
}

void write_png(const std::string& path, const RasterImage& image) {
    if (image.width <= 0 || image.height <= 0)
        throw ContractError("cannot write PNG with empty dimensions");
    std::vector<uint8_t> buf(image.data.size());
    for (size_t i = 0; i < buf.size(); ++i) {
        double v = std::clamp(image.data[i], 0.0, 1.0);
        buf[i] = uint8_t(std::lround(v * 255.0));
    }
    png_image img;
    std::fill_n(reinterpret_cast<char*>(&img), sizeof img, 0);
    img.version = PNG_IMAGE_VERSION;
    img.width = png_uint_32(image.width);
    img.height = png_uint_32(image.height);
    img.format = PNG_FORMAT_RGBA;
    if (!png_image_write_to_file(&img, path.c_str(), 0, buf.data(), 0, nullptr))
        throw IoError("cannot write PNG '" + path + "': " + img.message);
}

BinaryMask read_mask_png(const std::string& path) {
    int w, h;
    std::vector<uint8_t> buf = read_rgba_bytes(path, w, h);
    BinaryMask out(w, h);
    for (size_t i = 0; i < out.data.size(); ++i)
        out.data[i] = buf[i * 4] >= 128 ? 1 : 0;
    return out;
}

GrayMap read_gray_png(const std::string& path) {
    int w, h;
    std::vector<uint8_t> buf = read_rgba_bytes(path, w, h);
    GrayMap out(w, h);
    for (size_t i = 0; i < out.data.size(); ++i) out.data[i] = buf[i * 4] / 255.0;
    return out;
}

}  // namespace vecopt
