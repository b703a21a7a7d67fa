#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "chaoscrypt/diffusion.hpp"
#include "chaoscrypt/lattice_maps.hpp"

namespace chaoscrypt {

// SameKey is Grouped with n0 = n; PerRound is Grouped with n0 = 1.
enum class ScheduleMode { SameKey, PerRound, Grouped };

std::string to_string(ScheduleMode mode);
ScheduleMode parse_schedule_mode(const std::string& name);

struct CipherConfig {
  MapKind map_kind = MapKind::Cat;
  DiffusionKind diffusion_kind = DiffusionKind::Add;
  unsigned n = 1;
  unsigned n0 = 1;
  ScheduleMode schedule_mode = ScheduleMode::SameKey;
  bool scan_hardening = false;
  std::size_t side = 256;
  std::uint32_t levels = 256;

  // Throws InvalidArgument on inconsistent fields.
  void validate() const;
  unsigned group_count() const { return n / n0; }

  // Builds a config with n0 implied by the schedule (ignored unless Grouped).
  static CipherConfig make(MapKind map, DiffusionKind diffusion, unsigned n, ScheduleMode mode, std::size_t side,
                           std::uint32_t levels, unsigned n0 = 0, bool harden = false);
};

// One (confusion, diffusion) key per group of n0 rounds.
struct RoundKeys {
  std::vector<MapKey> confusion_keys;
  std::vector<DiffusionKey> diffusion_keys;
  friend bool operator==(const RoundKeys&, const RoundKeys&) = default;
};

// Throws ConfigKeyMismatch (or InvalidBakerKey) if keys do not fit cfg.
void check_keys(const CipherConfig& cfg, const RoundKeys& keys);

}  // namespace chaoscrypt
