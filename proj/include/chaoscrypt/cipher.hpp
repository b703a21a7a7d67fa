#pragma once

#include <cstddef>

#include "chaoscrypt/config.hpp"
#include "chaoscrypt/image.hpp"
#include "chaoscrypt/keygen.hpp"

namespace chaoscrypt {

// Per-call instrumentation.
struct CipherStats {
  std::size_t permutations_built = 0;
  std::size_t diffusion_passes = 0;
};

// Scan order used by diffusion in round r (0-based).
ScanOrder round_scan_order(const CipherConfig& cfg, unsigned round);

// n rounds of confusion followed by diffusion. Round r uses the keys of
// group r / n0; each group's permutation table is built once.
Image encrypt(const Image& img, const CipherConfig& cfg, const RoundKeys& keys, CipherStats* stats = nullptr);
Image decrypt(const Image& img, const CipherConfig& cfg, const RoundKeys& keys, CipherStats* stats = nullptr);

RoundKeys derive_round_keys(const MasterKey& master, const CipherConfig& cfg,
                            unsigned iterations = kDefaultLogisticIterations, unsigned bits = kDefaultSubkeyBits);

}  // namespace chaoscrypt
