#include "chaoscrypt/image.hpp"

#include <random>
#include <string>
#include <utility>

#include "chaoscrypt/error.hpp"

namespace chaoscrypt {

namespace {

void check_shape(std::size_t side, std::uint32_t levels) {
  if (side == 0) throw Error(ErrorCode::InvalidArgument, "image side must be positive");
  if (levels < 2 || levels > 65536)
    throw Error(ErrorCode::InvalidArgument, "gray levels must be in [2, 65536], got " + std::to_string(levels));
}

}  // namespace

Image::Image(std::size_t side, std::uint32_t levels) : side_(side), levels_(levels) {
  check_shape(side, levels);
  pixels_.assign(side * side, 0);
}

Image::Image(std::size_t side, std::uint32_t levels, std::vector<Pixel> pixels)
    : side_(side), levels_(levels), pixels_(std::move(pixels)) {
  check_shape(side, levels);
  if (pixels_.size() != side * side)
    throw Error(ErrorCode::SizeMismatch, "expected " + std::to_string(side * side) + " pixels, got " +
                                             std::to_string(pixels_.size()));
  for (std::size_t i = 0; i < pixels_.size(); ++i)
    if (pixels_[i] >= levels)
      throw Error(ErrorCode::PixelOutOfRange, "pixel " + std::to_string(i) + " = " + std::to_string(pixels_[i]));
}

Image make_random_image(std::size_t side, std::uint32_t levels, std::uint64_t seed) {
  Image img(side, levels);
  std::mt19937_64 rng(seed);
  for (auto& p : img.pixels()) p = static_cast<Pixel>(rng() % levels);
  return img;
}

}  // namespace chaoscrypt
