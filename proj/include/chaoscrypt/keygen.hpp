#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chaoscrypt/config.hpp"

namespace chaoscrypt {

// Fixed-point fraction in [0, 1): value / 2^64.
using Fraction = std::uint64_t;

inline constexpr Fraction kThreeQuarters = 0xC000000000000000ull;
inline constexpr Fraction kRemediationConstant = 0x5851F42D4C957F2Dull;
inline constexpr unsigned kDefaultLogisticIterations = 100;
inline constexpr unsigned kDefaultSubkeyBits = 32;

// Master key split into the two logistic seeds. Neither half may be a
// fixed point of the logistic map (0 or 3/4).
struct MasterKey {
  Fraction k1 = 0;
  Fraction k2 = 0;

  // 32 hex characters; the first 16 are k1.
  static MasterKey from_hex(std::string_view hex);
  std::string to_hex() const;
  void validate() const;
  friend bool operator==(const MasterKey&, const MasterKey&) = default;
};

struct GeneratorState {
  Fraction x1 = 0;
  Fraction x2 = 0;
  std::uint64_t t = 0;

  static GeneratorState from(const MasterKey& master);
  friend bool operator==(const GeneratorState&, const GeneratorState&) = default;
};

struct SubKeyPair {
  std::uint64_t x1 = 0;
  std::uint64_t x2 = 0;
  friend bool operator==(const SubKeyPair&, const SubKeyPair&) = default;
};

// f(x) = 4x(1-x) with a 128-bit intermediate product truncated to 64
// fractional bits. x = 1/2 would yield exactly 1, which saturates to
// 1 - 2^-64.
Fraction logistic_step(Fraction x) noexcept;
Fraction logistic_iterate(Fraction x, unsigned times) noexcept;

// X = sum_{j<S} bit_j * 2^j where bit_j is the (j+1)-th most significant
// fractional bit of x.
std::uint64_t extract_subkey(Fraction x, unsigned bits);

std::pair<SubKeyPair, GeneratorState> next_subkeys(const GeneratorState& state,
                                                   unsigned iterations = kDefaultLogisticIterations,
                                                   unsigned bits = kDefaultSubkeyBits);

std::vector<SubKeyPair> generate_subkeys(const MasterKey& master, std::size_t count,
                                         unsigned iterations = kDefaultLogisticIterations,
                                         unsigned bits = kDefaultSubkeyBits);

// Maps sub-key pairs onto cipher keys:
//   Cat      u = X1 mod N, v = X2 mod N
//   Standard k = X1 mod 50001
//   Baker    power-of-two strips drawn 3 bits at a time from X1
//   q_init   X2 mod L
// `bits` is the sub-key width S used to produce the pairs. Weak keys (Cat
// identity) are reported through `warnings` when provided.
RoundKeys subkeys_to_round_keys(const std::vector<SubKeyPair>& pairs, const CipherConfig& cfg,
                                unsigned bits = kDefaultSubkeyBits, std::vector<std::string>* warnings = nullptr);

BakerKey baker_key_from_bits(std::uint64_t x1, unsigned bits, std::size_t side);

}  // namespace chaoscrypt
