#include "chaoscrypt/cryptanalysis.hpp"

#include <ostream>
#include <string>

#include "chaoscrypt/error.hpp"

namespace chaoscrypt {

void AttackInput::validate() const {
  if (levels < 2 || levels > 65536) throw Error(ErrorCode::InvalidArgument, "L must be in [2, 65536]");
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "iteration count n must be >= 1");
  if (p0 >= levels || q0n >= levels) throw Error(ErrorCode::PixelOutOfRange, "corner pixels must be < L");
}

std::uint32_t corner_forward(std::uint32_t p0, std::uint32_t q, unsigned n, std::uint32_t levels,
                             DiffusionKind kind) {
  const std::uint64_t step = kind == DiffusionKind::Add ? q : (std::uint64_t{q} * q) % levels;
  std::uint64_t v = p0;
  for (unsigned i = 0; i < n; ++i) v = (v + step) % levels;
  return static_cast<std::uint32_t>(v);
}

std::uint64_t isqrt(std::uint64_t value) noexcept {
  // Bitwise digit-by-digit square root.
  std::uint64_t root = 0;
  std::uint64_t bit = std::uint64_t{1} << 62;
  while (bit > value) bit >>= 2;
  while (bit != 0) {
    if (value >= root + bit) {
      value -= root + bit;
      root = (root >> 1) + bit;
    } else {
      root >>= 1;
    }
    bit >>= 2;
  }
  return root;
}

CandidateSet recover_key_add(const AttackInput& in) {
  in.validate();
  if (in.diffusion_kind != DiffusionKind::Add)
    throw Error(ErrorCode::InvalidArgument, "recover_key_add needs the addition diffusion");
  const std::uint64_t levels = in.levels;
  const std::uint64_t residue = (in.q0n + levels - in.p0) % levels;
  CandidateSet out;
  for (std::uint64_t k = 0; k < in.n; ++k) {
    ++out.attempts;
    const std::uint64_t numerator = k * levels + residue;
    if (numerator % in.n != 0) continue;
    const std::uint64_t q = numerator / in.n;
    if (q < levels) out.candidates.insert(static_cast<std::uint32_t>(q));
  }
  return out;
}

CandidateSet recover_key_pow(const AttackInput& in) {
  in.validate();
  if (in.diffusion_kind != DiffusionKind::Pow)
    throw Error(ErrorCode::InvalidArgument, "recover_key_pow needs the power diffusion");
  const std::uint64_t levels = in.levels;
  const std::uint64_t residue = (in.q0n + levels - in.p0) % levels;
  const std::uint64_t k_max = std::uint64_t{in.n} * (levels - 1) * (levels - 1) / levels;
  CandidateSet out;
  for (std::uint64_t k = 0; k <= k_max; ++k) {
    ++out.attempts;
    const std::uint64_t numerator = k * levels + residue;
    if (numerator % in.n != 0) continue;
    const std::uint64_t square = numerator / in.n;
    const std::uint64_t q = isqrt(square);
    if (q * q == square && q < levels) out.candidates.insert(static_cast<std::uint32_t>(q));
  }
  return out;
}

CandidateSet brute_force_oracle(const AttackInput& in) {
  in.validate();
  CandidateSet out;
  for (std::uint32_t q = 0; q < in.levels; ++q) {
    ++out.attempts;
    if (corner_forward(in.p0, q, in.n, in.levels, in.diffusion_kind) == in.q0n) out.candidates.insert(q);
  }
  return out;
}

AttackResult corner_attack(const Image& plain, const Image& cipher, const CipherConfig& cfg,
                           AttackOptions options) {
  cfg.validate();
  if (plain.side() != cipher.side() || plain.levels() != cipher.levels())
    throw Error(ErrorCode::SizeMismatch, "plain and cipher images differ in shape");
  if (plain.side() != cfg.side || plain.levels() != cfg.levels)
    throw Error(ErrorCode::SizeMismatch, "images do not match the configuration");
  if (!options.force) {
    if (cfg.scan_hardening)
      throw Error(ErrorCode::AttackInapplicable, "scan-order hardening moves the first scanned pixel");
    if (cfg.schedule_mode != ScheduleMode::SameKey)
      throw Error(ErrorCode::AttackInapplicable, "diffusion keys differ between rounds");
  }
  const AttackInput in{plain.at(0, 0), cipher.at(0, 0), cfg.n, cfg.levels, cfg.diffusion_kind};
  AttackResult result;
  result.keys = cfg.diffusion_kind == DiffusionKind::Add ? recover_key_add(in) : recover_key_pow(in);
  if (!result.keys.candidates.empty())
    result.reduction_factor = static_cast<double>(cfg.levels) / static_cast<double>(result.keys.candidates.size());
  return result;
}

bool fixed_point_audit(const MapKey& key, std::size_t side, unsigned max_iter) {
  validate(key, side);
  Point p{0, 0};
  for (unsigned i = 0; i < max_iter; ++i) {
    p = map_step(p, key, side);
    if (p != Point{0, 0}) return false;
  }
  return true;
}

void write_attack_csv(std::ostream& os, const AttackInput& in, const CandidateSet& set) {
  os << "candidate,verified\n";
  for (std::uint32_t q : set.candidates)
    os << q << ',' << (corner_forward(in.p0, q, in.n, in.levels, in.diffusion_kind) == in.q0n ? "true" : "false")
       << '\n';
}

}  // namespace chaoscrypt
