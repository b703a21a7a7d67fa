#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "chaoscrypt/image.hpp"

namespace chaoscrypt {

struct Point {
  std::size_t x = 0;
  std::size_t y = 0;
  friend bool operator==(const Point&, const Point&) = default;
};

// Row-major lattice index.
inline std::size_t lattice_index(Point p, std::size_t side) { return p.y * side + p.x; }
inline Point lattice_point(std::size_t index, std::size_t side) { return {index % side, index / side}; }

enum class MapKind { Standard, Cat, Baker };

struct StandardKey {
  std::int64_t k = 0;
  friend bool operator==(const StandardKey&, const StandardKey&) = default;
};

struct CatKey {
  std::uint64_t u = 0;
  std::uint64_t v = 0;
  friend bool operator==(const CatKey&, const CatKey&) = default;
};

// Strip widths k_1..k_t of the discretized Baker map. Validity depends on
// the lattice size, so it is checked against N by validate().
class BakerKey {
 public:
  BakerKey() = default;
  explicit BakerKey(std::vector<std::size_t> strips) : strips_(std::move(strips)) {}

  const std::vector<std::size_t>& strips() const noexcept { return strips_; }

  // Throws InvalidBakerKey unless the strips sum to N and each divides N.
  void validate(std::size_t side) const;
  bool is_valid(std::size_t side) const noexcept;

  friend bool operator==(const BakerKey&, const BakerKey&) = default;

 private:
  std::vector<std::size_t> strips_;
};

using MapKey = std::variant<StandardKey, CatKey, BakerKey>;

MapKind kind_of(const MapKey& key) noexcept;
std::string to_string(MapKind kind);
MapKind parse_map_kind(const std::string& name);
std::string to_string(const MapKey& key);
void validate(const MapKey& key, std::size_t side);

Point standard_step(Point p, const StandardKey& key, std::size_t side);
Point cat_step(Point p, const CatKey& key, std::size_t side);
Point baker_step(Point p, const BakerKey& key, std::size_t side);
Point map_step(Point p, const MapKey& key, std::size_t side);

// Integer offset round(k * sin(2*pi*x/N)) used by the Standard map.
std::int64_t standard_offset(std::size_t x, std::int64_t k, std::size_t side);

// Bijection on the N*N lattice: forward[i] is where the pixel at index i
// is sent.
class Permutation {
 public:
  Permutation() = default;
  static Permutation identity(std::size_t side);
  // Throws NotBijective if `forward` has a collision or an out-of-range entry.
  static Permutation from_forward(std::size_t side, std::vector<std::uint32_t> forward);

  std::size_t side() const noexcept { return side_; }
  std::size_t size() const noexcept { return forward_.size(); }
  std::span<const std::uint32_t> forward() const noexcept { return forward_; }
  std::span<const std::uint32_t> inverse() const noexcept { return inverse_; }

  Permutation inverted() const;
  // (this then other): index i goes to other.forward[this.forward[i]].
  Permutation then(const Permutation& other) const;
  Permutation power(unsigned times) const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.side_ == b.side_ && a.forward_ == b.forward_;
  }

 private:
  std::size_t side_ = 0;
  std::vector<std::uint32_t> forward_;
  std::vector<std::uint32_t> inverse_;
};

Permutation build_permutation(const MapKey& key, std::size_t side);

// Output pixel at forward[i] equals input pixel at i.
Image apply_permutation(const Image& img, const Permutation& perm);
void apply_permutation(std::span<const Pixel> in, std::span<Pixel> out, const Permutation& perm);
Permutation invert(const Permutation& perm);

// CSV with columns src_index,dst_index.
void write_permutation_csv(std::ostream& os, const Permutation& perm);

}  // namespace chaoscrypt
