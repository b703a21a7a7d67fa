#include "chaoscrypt/lattice_maps.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <string>

#include "chaoscrypt/error.hpp"

namespace chaoscrypt {

namespace {

void check_side(std::size_t side) {
  if (side < 2) throw Error(ErrorCode::InvalidArgument, "lattice size must be >= 2");
  if (side > 65535) throw Error(ErrorCode::InvalidArgument, "lattice size must be <= 65535");
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

// Strip start N_i and width k_i for every column x.
struct StripTable {
  std::vector<std::size_t> start;
  std::vector<std::size_t> width;
};

StripTable make_strip_table(const BakerKey& key, std::size_t side) {
  StripTable t{std::vector<std::size_t>(side), std::vector<std::size_t>(side)};
  std::size_t begin = 0;
  for (std::size_t k : key.strips()) {
    for (std::size_t x = begin; x < begin + k; ++x) {
      t.start[x] = begin;
      t.width[x] = k;
    }
    begin += k;
  }
  return t;
}

Point baker_step_in_strip(Point p, std::size_t strip_start, std::size_t strip_width, std::size_t side) {
  const std::size_t stretch = side / strip_width;
  const std::size_t low = p.y % stretch;
  return {stretch * (p.x - strip_start) + low, (p.y - low) / stretch + strip_start};
}

}  // namespace

void BakerKey::validate(std::size_t side) const {
  if (strips_.empty()) throw Error(ErrorCode::InvalidBakerKey, "empty strip list");
  std::size_t sum = 0;
  for (std::size_t k : strips_) {
    if (k == 0) throw Error(ErrorCode::InvalidBakerKey, "zero-width strip");
    if (side % k != 0)
      throw Error(ErrorCode::InvalidBakerKey,
                  "strip width " + std::to_string(k) + " does not divide N=" + std::to_string(side));
    sum += k;
  }
  if (sum != side)
    throw Error(ErrorCode::InvalidBakerKey,
                "strip widths sum to " + std::to_string(sum) + ", expected N=" + std::to_string(side));
}

bool BakerKey::is_valid(std::size_t side) const noexcept {
  try {
    validate(side);
    return true;
  } catch (const Error&) {
    return false;
  }
}

MapKind kind_of(const MapKey& key) noexcept {
  return std::visit(overloaded{[](const StandardKey&) { return MapKind::Standard; },
                               [](const CatKey&) { return MapKind::Cat; },
                               [](const BakerKey&) { return MapKind::Baker; }},
                    key);
}

std::string to_string(MapKind kind) {
  switch (kind) {
    case MapKind::Standard: return "standard";
    case MapKind::Cat: return "cat";
    case MapKind::Baker: return "baker";
  }
  return "unknown";
}

MapKind parse_map_kind(const std::string& name) {
  if (name == "standard") return MapKind::Standard;
  if (name == "cat") return MapKind::Cat;
  if (name == "baker") return MapKind::Baker;
  throw Error(ErrorCode::InvalidArgument, "unknown map kind '" + name + "'");
}

std::string to_string(const MapKey& key) {
  return std::visit(overloaded{[](const StandardKey& k) { return "standard(" + std::to_string(k.k) + ")"; },
                               [](const CatKey& k) {
                                 return "cat(" + std::to_string(k.u) + "," + std::to_string(k.v) + ")";
                               },
                               [](const BakerKey& k) {
                                 std::string s = "baker(";
                                 for (std::size_t i = 0; i < k.strips().size(); ++i) {
                                   if (i) s += ",";
                                   s += std::to_string(k.strips()[i]);
                                 }
                                 return s + ")";
                               }},
                    key);
}

void validate(const MapKey& key, std::size_t side) {
  check_side(side);
  std::visit(overloaded{[](const StandardKey& k) {
                          if (k.k < 0) throw Error(ErrorCode::InvalidArgument, "Standard map key must be >= 0");
                        },
                        [](const CatKey&) {},
                        [side](const BakerKey& k) { k.validate(side); }},
             key);
}

std::int64_t standard_offset(std::size_t x, std::int64_t k, std::size_t side) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(x % side) / static_cast<double>(side);
  return static_cast<std::int64_t>(std::round(static_cast<double>(k) * std::sin(angle)));
}

Point standard_step(Point p, const StandardKey& key, std::size_t side) {
  const auto n = static_cast<std::int64_t>(side);
  const std::size_t x = (p.x + p.y) % side;
  std::int64_t y = (static_cast<std::int64_t>(p.y) + standard_offset(x, key.k, side) % n) % n;
  if (y < 0) y += n;
  return {x, static_cast<std::size_t>(y)};
}

Point cat_step(Point p, const CatKey& key, std::size_t side) {
  const std::uint64_t n = side;
  const std::uint64_t u = key.u % n;
  const std::uint64_t v = key.v % n;
  const std::uint64_t x = p.x, y = p.y;
  // Entries are < 2^16, so every product below fits in 64 bits.
  const std::uint64_t nx = (x + u * y) % n;
  const std::uint64_t ny = (v * x + ((u * v + 1) % n) * y) % n;
  return {static_cast<std::size_t>(nx), static_cast<std::size_t>(ny)};
}

Point baker_step(Point p, const BakerKey& key, std::size_t side) {
  key.validate(side);
  std::size_t begin = 0;
  for (std::size_t k : key.strips()) {
    if (p.x < begin + k) return baker_step_in_strip(p, begin, k, side);
    begin += k;
  }
  throw Error(ErrorCode::InvalidArgument, "point outside lattice");
}

Point map_step(Point p, const MapKey& key, std::size_t side) {
  return std::visit(overloaded{[&](const StandardKey& k) { return standard_step(p, k, side); },
                               [&](const CatKey& k) { return cat_step(p, k, side); },
                               [&](const BakerKey& k) { return baker_step(p, k, side); }},
                    key);
}

Permutation Permutation::identity(std::size_t side) {
  std::vector<std::uint32_t> fwd(side * side);
  for (std::size_t i = 0; i < fwd.size(); ++i) fwd[i] = static_cast<std::uint32_t>(i);
  return from_forward(side, std::move(fwd));
}

Permutation Permutation::from_forward(std::size_t side, std::vector<std::uint32_t> forward) {
  const std::size_t count = side * side;
  if (forward.size() != count)
    throw Error(ErrorCode::SizeMismatch, "permutation table has " + std::to_string(forward.size()) +
                                             " entries, expected " + std::to_string(count));
  constexpr std::uint32_t unset = ~std::uint32_t{0};
  std::vector<std::uint32_t> inverse(count, unset);
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint32_t dst = forward[i];
    if (dst >= count) throw Error(ErrorCode::NotBijective, "entry " + std::to_string(i) + " out of range");
    if (inverse[dst] != unset)
      throw Error(ErrorCode::NotBijective, "indices " + std::to_string(inverse[dst]) + " and " +
                                               std::to_string(i) + " both map to " + std::to_string(dst));
    inverse[dst] = static_cast<std::uint32_t>(i);
  }
  Permutation perm;
  perm.side_ = side;
  perm.forward_ = std::move(forward);
  perm.inverse_ = std::move(inverse);
  return perm;
}

Permutation Permutation::inverted() const {
  Permutation perm;
  perm.side_ = side_;
  perm.forward_ = inverse_;
  perm.inverse_ = forward_;
  return perm;
}

Permutation Permutation::then(const Permutation& other) const {
  if (other.side_ != side_) throw Error(ErrorCode::SizeMismatch, "composing permutations of different size");
  std::vector<std::uint32_t> fwd(forward_.size());
  for (std::size_t i = 0; i < fwd.size(); ++i) fwd[i] = other.forward_[forward_[i]];
  return from_forward(side_, std::move(fwd));
}

Permutation Permutation::power(unsigned times) const {
  Permutation result = identity(side_);
  Permutation base = *this;
  while (times > 0) {
    if (times & 1u) result = result.then(base);
    times >>= 1;
    if (times > 0) base = base.then(base);
  }
  return result;
}

Permutation build_permutation(const MapKey& key, std::size_t side) {
  validate(key, side);
  std::vector<std::uint32_t> fwd(side * side);
  if (const auto* baker = std::get_if<BakerKey>(&key)) {
    const StripTable strips = make_strip_table(*baker, side);
    for (std::size_t y = 0; y < side; ++y)
      for (std::size_t x = 0; x < side; ++x)
        fwd[y * side + x] = static_cast<std::uint32_t>(
            lattice_index(baker_step_in_strip({x, y}, strips.start[x], strips.width[x], side), side));
  } else if (const auto* standard = std::get_if<StandardKey>(&key)) {
    // The sine offset depends only on the new x, so tabulate it once.
    std::vector<std::int64_t> offset(side);
    for (std::size_t x = 0; x < side; ++x) offset[x] = standard_offset(x, standard->k, side);
    const auto n = static_cast<std::int64_t>(side);
    for (std::size_t y = 0; y < side; ++y)
      for (std::size_t x = 0; x < side; ++x) {
        const std::size_t nx = (x + y) % side;
        std::int64_t ny = (static_cast<std::int64_t>(y) + offset[nx] % n) % n;
        if (ny < 0) ny += n;
        fwd[y * side + x] = static_cast<std::uint32_t>(static_cast<std::size_t>(ny) * side + nx);
      }
  } else {
    for (std::size_t i = 0; i < fwd.size(); ++i)
      fwd[i] = static_cast<std::uint32_t>(lattice_index(map_step(lattice_point(i, side), key, side), side));
  }
  return Permutation::from_forward(side, std::move(fwd));
}

void apply_permutation(std::span<const Pixel> in, std::span<Pixel> out, const Permutation& perm) {
  if (in.size() != perm.size() || out.size() != perm.size())
    throw Error(ErrorCode::SizeMismatch, "image and permutation sizes differ");
  const auto fwd = perm.forward();
  for (std::size_t i = 0; i < in.size(); ++i) out[fwd[i]] = in[i];
}

Image apply_permutation(const Image& img, const Permutation& perm) {
  if (img.side() != perm.side()) throw Error(ErrorCode::SizeMismatch, "image and permutation sizes differ");
  Image out(img.side(), img.levels());
  apply_permutation(img.pixels(), out.pixels(), perm);
  return out;
}

Permutation invert(const Permutation& perm) { return perm.inverted(); }

void write_permutation_csv(std::ostream& os, const Permutation& perm) {
  os << "src_index,dst_index\n";
  const auto fwd = perm.forward();
  for (std::size_t i = 0; i < fwd.size(); ++i) os << i << ',' << fwd[i] << '\n';
}

}  // namespace chaoscrypt
