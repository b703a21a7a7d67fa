#include <gtest/gtest.h>

#include <random>
#include <set>

#include "chaoscrypt/cipher.hpp"
#include "chaoscrypt/error.hpp"

using namespace chaoscrypt;

namespace {

MapKey random_key(MapKind kind, std::size_t side, std::mt19937_64& rng) {
  switch (kind) {
    case MapKind::Standard: return StandardKey{static_cast<std::int64_t>(rng() % 50001)};
    case MapKind::Cat: return CatKey{rng() % side, rng() % side};
    case MapKind::Baker: {
      // Random power-of-two composition of a power-of-two side.
      std::vector<std::size_t> strips;
      std::size_t remaining = side;
      while (remaining > 0) {
        std::size_t k = std::size_t{1} << (rng() % 4);
        while (k > remaining) k >>= 1;
        strips.push_back(k);
        remaining -= k;
      }
      return BakerKey(strips);
    }
  }
  return {};
}

RoundKeys random_keys(const CipherConfig& cfg, std::mt19937_64& rng) {
  RoundKeys keys;
  for (unsigned g = 0; g < cfg.group_count(); ++g) {
    keys.confusion_keys.push_back(random_key(cfg.map_kind, cfg.side, rng));
    keys.diffusion_keys.push_back({static_cast<std::uint32_t>(rng() % cfg.levels)});
  }
  return keys;
}

RoundKeys same_keys(MapKey key, std::uint32_t q) { return {{std::move(key)}, {DiffusionKey{q}}}; }

}  // namespace

TEST(Encrypt, IdentityOnZeroImage) {
  const auto cfg = CipherConfig::make(MapKind::Cat, DiffusionKind::Add, 1, ScheduleMode::SameKey, 4, 256);
  const Image zero(4, 256);
  EXPECT_EQ(encrypt(zero, cfg, same_keys(CatKey{0, 0}, 0)), zero);
}

TEST(Encrypt, MatchesHandComposition) {
  const auto cfg = CipherConfig::make(MapKind::Cat, DiffusionKind::Add, 2, ScheduleMode::SameKey, 4, 256);
  const Image img = make_random_image(4, 256, 77);
  const Permutation perm = build_permutation(CatKey{1, 1}, 4);
  Image expected = img;
  for (int r = 0; r < 2; ++r) {
    expected = apply_permutation(expected, perm);
    expected.pixels() = diffuse_add(expected.pixels(), {7}, 256);
  }
  EXPECT_EQ(encrypt(img, cfg, same_keys(CatKey{1, 1}, 7)), expected);
}

TEST(Decrypt, DegenerateComposition) {
  const auto cfg = CipherConfig::make(MapKind::Cat, DiffusionKind::Add, 1, ScheduleMode::SameKey, 4, 256);
  const Image img = make_random_image(4, 256, 78);
  const Image out = decrypt(img, cfg, same_keys(CatKey{0, 0}, 7));
  EXPECT_EQ(out.pixels(), undiffuse_add(img.pixels(), {7}, 256));
}

TEST(Cipher, RoundTripEveryCombination) {
  std::mt19937_64 rng(2024);
  for (MapKind map : {MapKind::Standard, MapKind::Cat, MapKind::Baker})
    for (DiffusionKind diff : {DiffusionKind::Add, DiffusionKind::Pow})
      for (ScheduleMode mode : {ScheduleMode::SameKey, ScheduleMode::PerRound, ScheduleMode::Grouped})
        for (bool harden : {false, true})
          for (std::size_t side : {4u, 8u, 16u})
            for (std::uint32_t levels : {16u, 256u}) {
              const unsigned n = mode == ScheduleMode::Grouped ? 6 : 1 + static_cast<unsigned>(rng() % 5);
              const auto cfg = CipherConfig::make(map, diff, n, mode, side, levels, 2, harden);
              const Image img = make_random_image(side, levels, rng());
              const RoundKeys keys = random_keys(cfg, rng);
              ASSERT_EQ(decrypt(encrypt(img, cfg, keys), cfg, keys), img)
                  << to_string(map) << " " << to_string(diff) << " " << to_string(mode) << " harden=" << harden;
            }
}

TEST(Cipher, CornerLawWithoutHardening) {
  std::mt19937_64 rng(31);
  for (MapKind map : {MapKind::Standard, MapKind::Cat, MapKind::Baker})
    for (DiffusionKind diff : {DiffusionKind::Add, DiffusionKind::Pow})
      for (int trial = 0; trial < 20; ++trial) {
        const unsigned n = 1 + static_cast<unsigned>(rng() % 8);
        const auto cfg = CipherConfig::make(map, diff, n, ScheduleMode::SameKey, 16, 256);
        const Image img = make_random_image(16, 256, rng());
        const RoundKeys keys = random_keys(cfg, rng);
        const std::uint64_t q = keys.diffusion_keys[0].q_init;
        const std::uint64_t step = diff == DiffusionKind::Add ? q : q * q;
        EXPECT_EQ(encrypt(img, cfg, keys).at(0, 0), (img.at(0, 0) + n * step) % 256);
      }
}

TEST(Cipher, HardeningBreaksCornerLaw) {
  std::mt19937_64 rng(32);
  const int trials = 1000;
  for (unsigned n : {2u, 3u, 4u, 5u}) {
    int holds = 0;
    for (int trial = 0; trial < trials; ++trial) {
      const auto cfg = CipherConfig::make(MapKind::Cat, DiffusionKind::Add, n, ScheduleMode::SameKey, 8, 256, 0, true);
      const Image img = make_random_image(8, 256, rng());
      const RoundKeys keys = random_keys(cfg, rng);
      const std::uint64_t q = keys.diffusion_keys[0].q_init;
      holds += encrypt(img, cfg, keys).at(0, 0) == (img.at(0, 0) + n * q) % 256;
    }
    EXPECT_LT(static_cast<double>(holds) / trials, 1.0 / 256 + 0.05) << "n=" << n;
  }
}

TEST(Cipher, SameKeyBuildsOneTable) {
  const auto cfg = CipherConfig::make(MapKind::Standard, DiffusionKind::Pow, 8, ScheduleMode::SameKey, 16, 256);
  CipherStats stats;
  encrypt(make_random_image(16, 256, 1), cfg, same_keys(StandardKey{1234}, 9), &stats);
  EXPECT_EQ(stats.permutations_built, 1u);
  EXPECT_EQ(stats.diffusion_passes, 8u);

  std::mt19937_64 rng(4);
  const auto grouped = CipherConfig::make(MapKind::Cat, DiffusionKind::Add, 8, ScheduleMode::Grouped, 16, 256, 2);
  encrypt(make_random_image(16, 256, 2), grouped, random_keys(grouped, rng), &stats);
  EXPECT_EQ(stats.permutations_built, 4u);
  EXPECT_EQ(stats.diffusion_passes, 8u);
}

TEST(Cipher, RejectsMismatchedKeys) {
  const auto cfg = CipherConfig::make(MapKind::Cat, DiffusionKind::Add, 4, ScheduleMode::PerRound, 8, 256);
  const Image img(8, 256);
  auto code_of = [&](const RoundKeys& keys) {
    try {
      encrypt(img, cfg, keys);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Io;
  };
  EXPECT_EQ(code_of(same_keys(CatKey{1, 1}, 3)), ErrorCode::ConfigKeyMismatch);
  RoundKeys wrong_kind;
  for (int i = 0; i < 4; ++i) {
    wrong_kind.confusion_keys.push_back(StandardKey{5});
    wrong_kind.diffusion_keys.push_back({1});
  }
  EXPECT_EQ(code_of(wrong_kind), ErrorCode::ConfigKeyMismatch);

  const auto baker = CipherConfig::make(MapKind::Baker, DiffusionKind::Add, 1, ScheduleMode::SameKey, 8, 256);
  EXPECT_THROW(
      {
        try {
          encrypt(img, baker, same_keys(BakerKey({3, 5}), 1));
        } catch (const Error& e) {
          EXPECT_EQ(e.code(), ErrorCode::InvalidBakerKey);
          throw;
        }
      },
      Error);
}

TEST(CipherConfig, Validation) {
  EXPECT_THROW(CipherConfig::make(MapKind::Cat, DiffusionKind::Add, 6, ScheduleMode::Grouped, 8, 256, 4), Error);
  EXPECT_THROW(CipherConfig::make(MapKind::Cat, DiffusionKind::Add, 0, ScheduleMode::SameKey, 8, 256), Error);
  CipherConfig cfg = CipherConfig::make(MapKind::Cat, DiffusionKind::Add, 6, ScheduleMode::SameKey, 8, 256);
  EXPECT_EQ(cfg.n0, 6u);
  cfg.n0 = 3;
  EXPECT_THROW(cfg.validate(), Error);
}

TEST(DeriveRoundKeys, GroupCounts) {
  const MasterKey master = MasterKey::from_hex("0123456789abcdef0fedcba987654321");
  const auto same = CipherConfig::make(MapKind::Cat, DiffusionKind::Add, 4, ScheduleMode::SameKey, 256, 256);
  EXPECT_EQ(derive_round_keys(master, same).confusion_keys.size(), 1u);
  const auto per = CipherConfig::make(MapKind::Cat, DiffusionKind::Add, 4, ScheduleMode::PerRound, 256, 256);
  const RoundKeys keys = derive_round_keys(master, per);
  EXPECT_EQ(keys.confusion_keys.size(), 4u);
  EXPECT_EQ(keys.diffusion_keys.size(), 4u);
  EXPECT_EQ(derive_round_keys(master, per), keys);
}

TEST(DeriveRoundKeys, PerRoundPairsDistinct) {
  const auto cfg = CipherConfig::make(MapKind::Standard, DiffusionKind::Pow, 4, ScheduleMode::PerRound, 256, 256);
  std::mt19937_64 rng(99);
  int collisions = 0;
  const int masters = 1000;
  for (int m = 0; m < masters; ++m) {
    const MasterKey master{rng() | 1, rng() | 1};
    const RoundKeys keys = derive_round_keys(master, cfg);
    std::set<std::pair<std::int64_t, std::uint32_t>> pairs;
    for (std::size_t g = 0; g < 4; ++g)
      pairs.insert({std::get<StandardKey>(keys.confusion_keys[g]).k, keys.diffusion_keys[g].q_init});
    collisions += pairs.size() != 4;
  }
  EXPECT_LT(static_cast<double>(collisions) / masters, 1e-3);
}

TEST(DeriveRoundKeys, EncryptsWithEveryMap) {
  const MasterKey master = MasterKey::from_hex("00112233445566778899aabbccddeeff");
  for (MapKind map : {MapKind::Standard, MapKind::Cat, MapKind::Baker}) {
    const auto cfg = CipherConfig::make(map, DiffusionKind::Pow, 6, ScheduleMode::Grouped, 32, 256, 2, true);
    const RoundKeys keys = derive_round_keys(master, cfg);
    const Image img = make_random_image(32, 256, 5);
    EXPECT_EQ(decrypt(encrypt(img, cfg, keys), cfg, keys), img);
  }
}
