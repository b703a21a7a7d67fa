#include "chaoscrypt/cipher.hpp"

#include <string>

#include "chaoscrypt/error.hpp"

namespace chaoscrypt {

namespace {

void check_image(const Image& img, const CipherConfig& cfg) {
  if (img.side() != cfg.side || img.levels() != cfg.levels)
    throw Error(ErrorCode::ConfigKeyMismatch, "image is " + std::to_string(img.side()) + "x" +
                                                  std::to_string(img.side()) + " L=" + std::to_string(img.levels()) +
                                                  ", config expects N=" + std::to_string(cfg.side) +
                                                  " L=" + std::to_string(cfg.levels));
}

}  // namespace

ScanOrder round_scan_order(const CipherConfig& cfg, unsigned round) {
  return cfg.scan_hardening ? static_cast<ScanOrder>(round % 4) : ScanOrder::RasterTL;
}

Image encrypt(const Image& img, const CipherConfig& cfg, const RoundKeys& keys, CipherStats* stats) {
  check_keys(cfg, keys);
  check_image(img, cfg);
  CipherStats local;
  Image state = img;
  Image scratch(cfg.side, cfg.levels);
  unsigned round = 0;
  for (std::size_t g = 0; g < cfg.group_count(); ++g) {
    const Permutation perm = build_permutation(keys.confusion_keys[g], cfg.side);
    ++local.permutations_built;
    for (unsigned r = 0; r < cfg.n0; ++r, ++round) {
      apply_permutation(state.pixels(), scratch.pixels(), perm);
      std::swap(state, scratch);
      diffuse_image(state, cfg.diffusion_kind, keys.diffusion_keys[g], round_scan_order(cfg, round));
      ++local.diffusion_passes;
    }
  }
  if (stats) *stats = local;
  return state;
}

Image decrypt(const Image& img, const CipherConfig& cfg, const RoundKeys& keys, CipherStats* stats) {
  check_keys(cfg, keys);
  check_image(img, cfg);
  CipherStats local;
  Image state = img;
  Image scratch(cfg.side, cfg.levels);
  unsigned round = cfg.n;
  for (std::size_t g = cfg.group_count(); g-- > 0;) {
    const Permutation inverse = build_permutation(keys.confusion_keys[g], cfg.side).inverted();
    ++local.permutations_built;
    for (unsigned r = 0; r < cfg.n0; ++r) {
      --round;
      undiffuse_image(state, cfg.diffusion_kind, keys.diffusion_keys[g], round_scan_order(cfg, round));
      ++local.diffusion_passes;
      apply_permutation(state.pixels(), scratch.pixels(), inverse);
      std::swap(state, scratch);
    }
  }
  if (stats) *stats = local;
  return state;
}

RoundKeys derive_round_keys(const MasterKey& master, const CipherConfig& cfg, unsigned iterations, unsigned bits) {
  cfg.validate();
  return subkeys_to_round_keys(generate_subkeys(master, cfg.group_count(), iterations, bits), cfg, bits);
}

}  // namespace chaoscrypt
