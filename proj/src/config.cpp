#include "chaoscrypt/config.hpp"

#include "chaoscrypt/error.hpp"

namespace chaoscrypt {

std::string to_string(ScheduleMode mode) {
  switch (mode) {
    case ScheduleMode::SameKey: return "same";
    case ScheduleMode::PerRound: return "per-round";
    case ScheduleMode::Grouped: return "grouped";
  }
  return "unknown";
}

ScheduleMode parse_schedule_mode(const std::string& name) {
  if (name == "same") return ScheduleMode::SameKey;
  if (name == "per-round") return ScheduleMode::PerRound;
  if (name == "grouped") return ScheduleMode::Grouped;
  throw Error(ErrorCode::InvalidArgument, "unknown schedule '" + name + "'");
}

void CipherConfig::validate() const {
  if (side < 2) throw Error(ErrorCode::InvalidArgument, "N must be >= 2");
  if (levels < 2 || levels > 65536) throw Error(ErrorCode::InvalidArgument, "L must be in [2, 65536]");
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "iteration count n must be >= 1");
  if (n0 < 1 || n0 > n) throw Error(ErrorCode::InvalidArgument, "group size n0 must be in [1, n]");
  if (n % n0 != 0) throw Error(ErrorCode::InvalidArgument, "group size n0 must divide n");
  if (schedule_mode == ScheduleMode::SameKey && n0 != n)
    throw Error(ErrorCode::InvalidArgument, "SameKey schedule requires n0 == n");
  if (schedule_mode == ScheduleMode::PerRound && n0 != 1)
    throw Error(ErrorCode::InvalidArgument, "PerRound schedule requires n0 == 1");
}

CipherConfig CipherConfig::make(MapKind map, DiffusionKind diffusion, unsigned n, ScheduleMode mode,
                                std::size_t side, std::uint32_t levels, unsigned n0, bool harden) {
  CipherConfig cfg;
  cfg.map_kind = map;
  cfg.diffusion_kind = diffusion;
  cfg.n = n;
  cfg.schedule_mode = mode;
  cfg.side = side;
  cfg.levels = levels;
  cfg.scan_hardening = harden;
  switch (mode) {
    case ScheduleMode::SameKey: cfg.n0 = n; break;
    case ScheduleMode::PerRound: cfg.n0 = 1; break;
    case ScheduleMode::Grouped: cfg.n0 = n0; break;
  }
  cfg.validate();
  return cfg;
}

void check_keys(const CipherConfig& cfg, const RoundKeys& keys) {
  cfg.validate();
  const std::size_t groups = cfg.group_count();
  if (keys.confusion_keys.size() != groups || keys.diffusion_keys.size() != groups)
    throw Error(ErrorCode::ConfigKeyMismatch, "expected " + std::to_string(groups) + " key pairs, got " +
                                                  std::to_string(keys.confusion_keys.size()) + "/" +
                                                  std::to_string(keys.diffusion_keys.size()));
  for (const MapKey& key : keys.confusion_keys) {
    if (kind_of(key) != cfg.map_kind)
      throw Error(ErrorCode::ConfigKeyMismatch,
                  "confusion key " + to_string(key) + " does not match map " + to_string(cfg.map_kind));
    validate(key, cfg.side);
  }
  for (const DiffusionKey& key : keys.diffusion_keys)
    if (key.q_init >= cfg.levels)
      throw Error(ErrorCode::ConfigKeyMismatch, "diffusion key " + std::to_string(key.q_init) + " >= L");
}

}  // namespace chaoscrypt
