#include "chaoscrypt/keygen.hpp"

#include <bit>
#include <cctype>
#include <cstdio>

#include "chaoscrypt/error.hpp"

namespace chaoscrypt {

namespace {

__extension__ using u128 = unsigned __int128;

inline constexpr std::int64_t kStandardKeyModulus = 50001;

bool degenerate(Fraction x) noexcept { return x == 0 || x == kThreeQuarters; }

Fraction remediate(Fraction x, std::uint64_t t) {
  if (!degenerate(x)) return x;
  const Fraction fixed = kRemediationConstant ^ t;
  if (degenerate(fixed)) throw Error(ErrorCode::DegenerateState, "remediation degenerate at t=" + std::to_string(t));
  return fixed;
}

std::uint64_t parse_hex64(std::string_view hex) {
  std::uint64_t v = 0;
  for (char c : hex) {
    int d;
    if (c >= '0' && c <= '9') d = c - '0';
    else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
    else throw Error(ErrorCode::InvalidArgument, "non-hex character in master key");
    v = (v << 4) | static_cast<std::uint64_t>(d);
  }
  return v;
}

}  // namespace

MasterKey MasterKey::from_hex(std::string_view hex) {
  if (hex.size() != 32) throw Error(ErrorCode::InvalidArgument, "master key must be 32 hex characters");
  MasterKey key{parse_hex64(hex.substr(0, 16)), parse_hex64(hex.substr(16))};
  key.validate();
  return key;
}

std::string MasterKey::to_hex() const {
  char buf[33];
  std::snprintf(buf, sizeof buf, "%016llx%016llx", static_cast<unsigned long long>(k1),
                static_cast<unsigned long long>(k2));
  return buf;
}

void MasterKey::validate() const {
  if (degenerate(k1) || degenerate(k2))
    throw Error(ErrorCode::DegenerateMasterKey, "master key halves must not be 0 or 3/4");
}

GeneratorState GeneratorState::from(const MasterKey& master) {
  master.validate();
  return {master.k1, master.k2, 0};
}

Fraction logistic_step(Fraction x) noexcept {
  // 4 * x * (1 - x) * 2^64 = (a * (2^64 - a)) >> 62 for x = a / 2^64.
  const u128 a = x;
  const u128 product = a * ((u128{1} << 64) - a);
  const u128 next = product >> 62;
  if (next > ~std::uint64_t{0}) return ~std::uint64_t{0};
  return static_cast<Fraction>(next);
}

Fraction logistic_iterate(Fraction x, unsigned times) noexcept {
  for (unsigned i = 0; i < times; ++i) x = logistic_step(x);
  return x;
}

std::uint64_t extract_subkey(Fraction x, unsigned bits) {
  if (bits < 1 || bits > 64) throw Error(ErrorCode::InvalidArgument, "sub-key length S must be in [1, 64]");
  // Reversing the whole word puts the fraction's MSB at bit 0.
  std::uint64_t reversed = 0;
  for (unsigned j = 0; j < 64; ++j) reversed |= ((x >> (63 - j)) & 1u) << j;
  return bits == 64 ? reversed : reversed & ((std::uint64_t{1} << bits) - 1);
}

std::pair<SubKeyPair, GeneratorState> next_subkeys(const GeneratorState& state, unsigned iterations,
                                                   unsigned bits) {
  if (degenerate(state.x1) || degenerate(state.x2))
    throw Error(ErrorCode::DegenerateState, "generator state is a fixed point of the logistic map");
  const Fraction mean = static_cast<Fraction>((u128{state.x1} + state.x2) >> 1);
  const Fraction half_gap = (state.x1 > state.x2 ? state.x1 - state.x2 : state.x2 - state.x1) >> 1;
  GeneratorState next{logistic_iterate(mean, iterations), logistic_iterate(half_gap, iterations), state.t + 1};
  next.x1 = remediate(next.x1, next.t);
  next.x2 = remediate(next.x2, next.t);
  return {SubKeyPair{extract_subkey(next.x1, bits), extract_subkey(next.x2, bits)}, next};
}

std::vector<SubKeyPair> generate_subkeys(const MasterKey& master, std::size_t count, unsigned iterations,
                                         unsigned bits) {
  std::vector<SubKeyPair> out;
  out.reserve(count);
  GeneratorState state = GeneratorState::from(master);
  for (std::size_t i = 0; i < count; ++i) {
    auto [pair, next] = next_subkeys(state, iterations, bits);
    out.push_back(pair);
    state = next;
  }
  return out;
}

BakerKey baker_key_from_bits(std::uint64_t x1, unsigned bits, std::size_t side) {
  if (side < 2 || !std::has_single_bit(side))
    throw Error(ErrorCode::BakerRequiresPow2N, "Baker sub-keys need N a power of two, got " + std::to_string(side));
  if (bits < 1 || bits > 64) throw Error(ErrorCode::InvalidArgument, "sub-key length S must be in [1, 64]");
  std::vector<std::size_t> strips;
  std::size_t remaining = side;
  unsigned cursor = 0;
  while (remaining > 0) {
    // Draws wrap around the S available bits.
    unsigned draw = 0;
    for (unsigned b = 0; b < 3; ++b) {
      draw |= static_cast<unsigned>((x1 >> (cursor % bits)) & 1u) << b;
      ++cursor;
    }
    const auto log_remaining = static_cast<unsigned>(std::bit_width(remaining) - 1);
    std::size_t width = std::size_t{1} << (1 + draw % log_remaining);
    if (width > remaining) width = remaining;
    strips.push_back(width);
    remaining -= width;
  }
  return BakerKey(std::move(strips));
}

RoundKeys subkeys_to_round_keys(const std::vector<SubKeyPair>& pairs, const CipherConfig& cfg, unsigned bits,
                                std::vector<std::string>* warnings) {
  cfg.validate();
  const std::size_t groups = cfg.group_count();
  if (pairs.size() < groups)
    throw Error(ErrorCode::InvalidArgument,
                "need " + std::to_string(groups) + " sub-key pairs, got " + std::to_string(pairs.size()));
  RoundKeys keys;
  for (std::size_t g = 0; g < groups; ++g) {
    const SubKeyPair& p = pairs[g];
    switch (cfg.map_kind) {
      case MapKind::Cat: {
        const CatKey key{p.x1 % cfg.side, p.x2 % cfg.side};
        if (key.u == 0 && key.v == 0 && warnings)
          warnings->push_back("group " + std::to_string(g) + ": Cat key (0,0) is the identity map");
        keys.confusion_keys.emplace_back(key);
        break;
      }
      case MapKind::Standard:
        keys.confusion_keys.emplace_back(
            StandardKey{static_cast<std::int64_t>(p.x1 % static_cast<std::uint64_t>(kStandardKeyModulus))});
        break;
      case MapKind::Baker:
        keys.confusion_keys.emplace_back(baker_key_from_bits(p.x1, bits, cfg.side));
        break;
    }
    keys.diffusion_keys.push_back(DiffusionKey{static_cast<std::uint32_t>(p.x2 % cfg.levels)});
  }
  return keys;
}

}  // namespace chaoscrypt
