#pragma once

#include <string>

#include "graykeep/image.hpp"

namespace graykeep {

/// Loads an 8-bit RGB image. Binary PPM (P6) always works; PNG when built
/// with libpng. Grayscale, palette, alpha or 16-bit inputs are rejected.
ColorImage load_image(const std::string& path);

/// Writes the image losslessly; format chosen by extension (.ppm or .png).
/// save_image followed by load_image returns sample-identical data.
void save_image(const ColorImage& img, const std::string& path);

}  // namespace graykeep
