#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace chaoscrypt {

using Pixel = std::uint16_t;

// Square N x N grid of gray levels in [0, L-1], stored row-major
// (index = y * N + x).
class Image {
 public:
  Image() = default;
  Image(std::size_t side, std::uint32_t levels);
  Image(std::size_t side, std::uint32_t levels, std::vector<Pixel> pixels);

  std::size_t side() const noexcept { return side_; }
  std::uint32_t levels() const noexcept { return levels_; }
  std::size_t size() const noexcept { return pixels_.size(); }

  Pixel at(std::size_t x, std::size_t y) const { return pixels_[y * side_ + x]; }
  Pixel& at(std::size_t x, std::size_t y) { return pixels_[y * side_ + x]; }

  Pixel operator[](std::size_t index) const { return pixels_[index]; }
  Pixel& operator[](std::size_t index) { return pixels_[index]; }

  const std::vector<Pixel>& pixels() const noexcept { return pixels_; }
  std::vector<Pixel>& pixels() noexcept { return pixels_; }

  friend bool operator==(const Image&, const Image&) = default;

 private:
  std::size_t side_ = 0;
  std::uint32_t levels_ = 0;
  std::vector<Pixel> pixels_;
};

// Uniform pseudorandom image. Uses raw mt19937_64 output so the result is
// identical on every standard library.
Image make_random_image(std::size_t side, std::uint32_t levels, std::uint64_t seed);

}  // namespace chaoscrypt
