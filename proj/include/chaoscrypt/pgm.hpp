#pragma once

#include <filesystem>
#include <iosfwd>

#include "chaoscrypt/image.hpp"

namespace chaoscrypt {

// Binary P5, square, maxval <= 255. The image's gray-level count is
// maxval + 1.
Image read_pgm(std::istream& in);
Image read_pgm(const std::filesystem::path& path);
void write_pgm(std::ostream& out, const Image& img);
void write_pgm(const std::filesystem::path& path, const Image& img);

}  // namespace chaoscrypt
