#pragma once

#include <cstdint>
#include <iosfwd>
#include <set>

#include "chaoscrypt/config.hpp"
#include "chaoscrypt/image.hpp"

namespace chaoscrypt {

// Known corner pixel before and after n rounds.
struct AttackInput {
  std::uint32_t p0 = 0;
  std::uint32_t q0n = 0;
  unsigned n = 1;
  std::uint32_t levels = 256;
  DiffusionKind diffusion_kind = DiffusionKind::Add;

  void validate() const;
};

struct CandidateSet {
  std::set<std::uint32_t> candidates;
  std::uint64_t attempts = 0;

  bool contains(std::uint32_t q) const { return candidates.count(q) != 0; }
  friend bool operator==(const CandidateSet&, const CandidateSet&) = default;
};

// Corner value after n rounds when (0,0) is a fixed point of the
// confusion: v <- (v + q) mod L, or v <- (v + q^2) mod L.
std::uint32_t corner_forward(std::uint32_t p0, std::uint32_t q, unsigned n, std::uint32_t levels, DiffusionKind kind);

// Solves n*q = q0n - p0 (mod L) by testing k = 0..n-1.
CandidateSet recover_key_add(const AttackInput& in);
// Solves n*q^2 = q0n - p0 (mod L) by testing k = 0..floor(n(L-1)^2 / L).
CandidateSet recover_key_pow(const AttackInput& in);
CandidateSet brute_force_oracle(const AttackInput& in);

std::uint64_t isqrt(std::uint64_t value) noexcept;

struct AttackResult {
  CandidateSet keys;
  // L / |candidates|; 0 when no candidate survived.
  double reduction_factor = 0.0;
};

struct AttackOptions {
  // Run even when the config defeats the attack's assumptions.
  bool force = false;
};

// Throws AttackInapplicable when scan hardening is on or the schedule is not
// SameKey, unless forced.
AttackResult corner_attack(const Image& plain, const Image& cipher, const CipherConfig& cfg,
                           AttackOptions options = {});

bool fixed_point_audit(const MapKey& key, std::size_t side, unsigned max_iter);

// Rows candidate,verified; verified re-runs the forward corner recurrence.
void write_attack_csv(std::ostream& os, const AttackInput& in, const CandidateSet& set);

}  // namespace chaoscrypt
