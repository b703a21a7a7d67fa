#include "chaoscrypt/diffusion.hpp"

#include <string>

#include "chaoscrypt/error.hpp"

namespace chaoscrypt {

namespace {

void check_levels(std::uint32_t levels) {
  if (levels < 2 || levels > 65536)
    throw Error(ErrorCode::InvalidArgument, "gray levels must be in [2, 65536]");
}

void check_pixels(std::span<const Pixel> pixels, DiffusionKey key, std::uint32_t levels) {
  check_levels(levels);
  if (key.q_init >= levels)
    throw Error(ErrorCode::PixelOutOfRange, "diffusion key " + std::to_string(key.q_init) + " >= L");
  for (std::size_t i = 0; i < pixels.size(); ++i)
    if (pixels[i] >= levels)
      throw Error(ErrorCode::PixelOutOfRange, "pixel " + std::to_string(i) + " = " + std::to_string(pixels[i]));
}

// Squares of values < 2^16 fit comfortably in 64 bits.
inline std::uint64_t feedback(DiffusionKind kind, std::uint64_t prev, std::uint64_t levels) {
  return kind == DiffusionKind::Add ? prev : (prev * prev) % levels;
}

std::vector<Pixel> forward(DiffusionKind kind, std::span<const Pixel> pixels, DiffusionKey key,
                           std::uint32_t levels) {
  check_pixels(pixels, key, levels);
  std::vector<Pixel> out(pixels.size());
  std::uint64_t prev = key.q_init;
  for (std::size_t i = 0; i < pixels.size(); ++i) {
    prev = (pixels[i] + feedback(kind, prev, levels)) % levels;
    out[i] = static_cast<Pixel>(prev);
  }
  return out;
}

std::vector<Pixel> backward(DiffusionKind kind, std::span<const Pixel> cipher, DiffusionKey key,
                            std::uint32_t levels) {
  check_pixels(cipher, key, levels);
  std::vector<Pixel> out(cipher.size());
  std::uint64_t prev = key.q_init;
  for (std::size_t i = 0; i < cipher.size(); ++i) {
    out[i] = static_cast<Pixel>((cipher[i] + levels - feedback(kind, prev, levels)) % levels);
    prev = cipher[i];
  }
  return out;
}

}  // namespace

std::string to_string(DiffusionKind kind) { return kind == DiffusionKind::Add ? "add" : "pow"; }

DiffusionKind parse_diffusion_kind(const std::string& name) {
  if (name == "add") return DiffusionKind::Add;
  if (name == "pow") return DiffusionKind::Pow;
  throw Error(ErrorCode::InvalidArgument, "unknown diffusion kind '" + name + "'");
}

std::vector<Point> scan_sequence(ScanOrder order, std::size_t side) {
  const bool right_to_left = order == ScanOrder::RasterTR || order == ScanOrder::RasterBR;
  const bool bottom_to_top = order == ScanOrder::RasterBL || order == ScanOrder::RasterBR;
  std::vector<Point> seq;
  seq.reserve(side * side);
  for (std::size_t r = 0; r < side; ++r) {
    const std::size_t y = bottom_to_top ? side - 1 - r : r;
    for (std::size_t c = 0; c < side; ++c) seq.push_back({right_to_left ? side - 1 - c : c, y});
  }
  return seq;
}

std::vector<std::uint32_t> scan_indices(ScanOrder order, std::size_t side) {
  std::vector<std::uint32_t> idx;
  idx.reserve(side * side);
  for (Point p : scan_sequence(order, side)) idx.push_back(static_cast<std::uint32_t>(lattice_index(p, side)));
  return idx;
}

std::vector<Pixel> diffuse_add(std::span<const Pixel> pixels, DiffusionKey key, std::uint32_t levels) {
  return forward(DiffusionKind::Add, pixels, key, levels);
}

std::vector<Pixel> diffuse_pow(std::span<const Pixel> pixels, DiffusionKey key, std::uint32_t levels) {
  return forward(DiffusionKind::Pow, pixels, key, levels);
}

std::vector<Pixel> undiffuse_add(std::span<const Pixel> cipher, DiffusionKey key, std::uint32_t levels) {
  return backward(DiffusionKind::Add, cipher, key, levels);
}

std::vector<Pixel> undiffuse_pow(std::span<const Pixel> cipher, DiffusionKey key, std::uint32_t levels) {
  return backward(DiffusionKind::Pow, cipher, key, levels);
}

std::vector<Pixel> diffuse(DiffusionKind kind, std::span<const Pixel> pixels, DiffusionKey key,
                           std::uint32_t levels) {
  return forward(kind, pixels, key, levels);
}

std::vector<Pixel> undiffuse(DiffusionKind kind, std::span<const Pixel> cipher, DiffusionKey key,
                             std::uint32_t levels) {
  return backward(kind, cipher, key, levels);
}

void diffuse_image(Image& img, DiffusionKind kind, DiffusionKey key, ScanOrder order) {
  if (order == ScanOrder::RasterTL) {
    img.pixels() = forward(kind, img.pixels(), key, img.levels());
    return;
  }
  const auto idx = scan_indices(order, img.side());
  std::vector<Pixel> seq(idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i) seq[i] = img[idx[i]];
  seq = forward(kind, seq, key, img.levels());
  for (std::size_t i = 0; i < idx.size(); ++i) img[idx[i]] = seq[i];
}

void undiffuse_image(Image& img, DiffusionKind kind, DiffusionKey key, ScanOrder order) {
  if (order == ScanOrder::RasterTL) {
    img.pixels() = backward(kind, img.pixels(), key, img.levels());
    return;
  }
  const auto idx = scan_indices(order, img.side());
  std::vector<Pixel> seq(idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i) seq[i] = img[idx[i]];
  seq = backward(kind, seq, key, img.levels());
  for (std::size_t i = 0; i < idx.size(); ++i) img[idx[i]] = seq[i];
}

}  // namespace chaoscrypt
