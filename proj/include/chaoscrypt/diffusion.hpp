#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "chaoscrypt/image.hpp"
#include "chaoscrypt/lattice_maps.hpp"

namespace chaoscrypt {

enum class DiffusionKind { Add, Pow };

std::string to_string(DiffusionKind kind);
DiffusionKind parse_diffusion_kind(const std::string& name);

// Seed Q_{-1} of the diffusion recurrence.
struct DiffusionKey {
  std::uint32_t q_init = 0;
  friend bool operator==(const DiffusionKey&, const DiffusionKey&) = default;
};

// Row-major rasters starting at each corner; rows and columns are
// traversed away from the start corner.
enum class ScanOrder : std::uint8_t { RasterTL = 0, RasterTR = 1, RasterBL = 2, RasterBR = 3 };

std::vector<Point> scan_sequence(ScanOrder order, std::size_t side);
// Same traversal as lattice indices.
std::vector<std::uint32_t> scan_indices(ScanOrder order, std::size_t side);

// Q_i = (P_i + Q_{i-1}) mod L
std::vector<Pixel> diffuse_add(std::span<const Pixel> pixels, DiffusionKey key, std::uint32_t levels);
// Q_i = (P_i + Q_{i-1}^2) mod L
std::vector<Pixel> diffuse_pow(std::span<const Pixel> pixels, DiffusionKey key, std::uint32_t levels);
std::vector<Pixel> undiffuse_add(std::span<const Pixel> cipher, DiffusionKey key, std::uint32_t levels);
std::vector<Pixel> undiffuse_pow(std::span<const Pixel> cipher, DiffusionKey key, std::uint32_t levels);

std::vector<Pixel> diffuse(DiffusionKind kind, std::span<const Pixel> pixels, DiffusionKey key, std::uint32_t levels);
std::vector<Pixel> undiffuse(DiffusionKind kind, std::span<const Pixel> cipher, DiffusionKey key,
                             std::uint32_t levels);

// One diffusion pass over an image in place, visiting pixels in `order`.
void diffuse_image(Image& img, DiffusionKind kind, DiffusionKey key, ScanOrder order);
void undiffuse_image(Image& img, DiffusionKind kind, DiffusionKey key, ScanOrder order);

}  // namespace chaoscrypt
