#pragma once

#include <string>

#include "vecopt/errors.hpp"
#include "vecopt/image.hpp"

namespace vecopt {

// Decodes any common PNG layout (gray, palette, rgb, rgba; 8 or 16 bit) to
// RGBA doubles in [0,1]. Throws IoError on missing or malformed files.
RasterImage read_png(const std::string& path);

// Encodes as 8-bit RGBA; channel values are clamped to [0,1] and rounded.
void write_png(const std::string& path, const RasterImage& image);

// Reads a mask image: any pixel whose decoded 8-bit value is >= 128 counts
// as set. Color inputs use the red channel.
BinaryMask read_mask_png(const std::string& path);

// Reads a grayscale weight image to [0,1] doubles (red channel of the
// decoded RGBA data).
GrayMap read_gray_png(const std::string& path);

}  // namespace vecopt
