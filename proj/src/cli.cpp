#include "chaoscrypt/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "chaoscrypt/cipher.hpp"
#include "chaoscrypt/cryptanalysis.hpp"
#include "chaoscrypt/error.hpp"
#include "chaoscrypt/keygen.hpp"
#include "chaoscrypt/metrics.hpp"
#include "chaoscrypt/pgm.hpp"

namespace chaoscrypt {

namespace {

constexpr int kUsageError = 1;
constexpr int kDataError = 2;

std::vector<std::size_t> parse_list(const std::string& text) {
  std::vector<std::size_t> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw Error(ErrorCode::InvalidArgument, "bad key component '" + item + "' in '" + text + "'");
    values.push_back(static_cast<std::size_t>(std::stoull(item)));
  }
  return values;
}

const std::map<std::string, MapKind> kMapNames{
    {"standard", MapKind::Standard}, {"cat", MapKind::Cat}, {"baker", MapKind::Baker}};
const std::map<std::string, DiffusionKind> kDiffusionNames{{"add", DiffusionKind::Add}, {"pow", DiffusionKind::Pow}};
const std::map<std::string, ScheduleMode> kScheduleNames{
    {"same", ScheduleMode::SameKey}, {"per-round", ScheduleMode::PerRound}, {"grouped", ScheduleMode::Grouped}};

template <class T>
CLI::Transformer choice(const std::map<std::string, T>& names) {
  return CLI::Transformer(names, CLI::ignore_case);
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error(ErrorCode::Io, "cannot open " + path);
  os << text;
}

// Files for several series get an _n<k> suffix before the extension.
std::string series_path(const std::string& base, const MetricSeries& s, std::size_t count) {
  if (count == 1) return base;
  std::filesystem::path p(base);
  const std::string suffix = "_" + s.label.substr(0, 1) + s.label.substr(2);
  return (p.parent_path() / (p.stem().string() + suffix + p.extension().string())).string();
}

struct CipherArgs {
  MapKind map = MapKind::Cat;
  DiffusionKind diffusion = DiffusionKind::Pow;
  unsigned n = 1;
  unsigned n0 = 0;
  ScheduleMode schedule = ScheduleMode::SameKey;
  bool harden = false;
  std::string master_key;
  std::vector<std::string> confusion_keys;
  std::vector<std::uint32_t> diffusion_keys;
  unsigned iterations = kDefaultLogisticIterations;
  unsigned bits = kDefaultSubkeyBits;
  std::string in;
  std::optional<std::uint64_t> gen_seed;
  std::size_t size = 256;
  std::string out;
};

void add_cipher_options(CLI::App* cmd, CipherArgs& a, bool allow_generate) {
  cmd->add_option("--map", a.map, "confusion map: standard|cat|baker")->transform(choice(kMapNames));
  cmd->add_option("--diffusion", a.diffusion, "diffusion: add|pow")->transform(choice(kDiffusionNames));
  cmd->add_option("--n", a.n, "iteration count")->check(CLI::PositiveNumber);
  cmd->add_option("--n0", a.n0, "group size (grouped schedule)");
  cmd->add_option("--schedule", a.schedule, "same|per-round|grouped")->transform(choice(kScheduleNames));
  cmd->add_flag("--harden", a.harden, "rotate the diffusion scan order every round");
  auto* master = cmd->add_option("--master-key", a.master_key, "128-bit master key, 32 hex characters");
  auto* conf = cmd->add_option("--confusion-key", a.confusion_keys,
                               "explicit map key per group: k | u,v | k1,k2,...")
                   ->take_all()
                   ->allow_extra_args(false);
  auto* diff = cmd->add_option("--diffusion-key", a.diffusion_keys, "explicit q_init per group")
                   ->allow_extra_args(false);
  master->excludes(conf)->excludes(diff);
  conf->needs(diff);
  diff->needs(conf);
  cmd->add_option("--logistic-iterations", a.iterations, "key generator T")->check(CLI::PositiveNumber);
  cmd->add_option("--subkey-bits", a.bits, "key generator S")->check(CLI::Range(1, 64));
  auto* in = cmd->add_option("--in", a.in, "input PGM");
  if (allow_generate) {
    auto* gen = cmd->add_option("--gen-image", a.gen_seed, "encrypt a seeded random image instead of --in");
    cmd->add_option("--size", a.size, "side of the generated image")->check(CLI::Range(2, 4096));
    in->excludes(gen);
  } else {
    in->required();
  }
  cmd->add_option("--out", a.out, "output PGM")->required();
}

RoundKeys cipher_keys(const CipherArgs& a, const CipherConfig& cfg) {
  if (!a.master_key.empty()) return derive_round_keys(MasterKey::from_hex(a.master_key), cfg, a.iterations, a.bits);
  RoundKeys keys;
  for (const auto& text : a.confusion_keys) keys.confusion_keys.push_back(parse_map_key(cfg.map_kind, text));
  for (auto q : a.diffusion_keys) keys.diffusion_keys.push_back(DiffusionKey{q});
  return keys;
}

int run_cipher(const CipherArgs& a, bool decrypting, std::ostream& out, std::ostream& err) {
  if (a.master_key.empty() && a.confusion_keys.empty()) {
    err << "error: one of --master-key or --confusion-key/--diffusion-key is required\n";
    return kUsageError;
  }
  if (!decrypting && a.in.empty() && !a.gen_seed) {
    err << "error: one of --in or --gen-image is required\n";
    return kUsageError;
  }
  const Image input = a.in.empty() ? make_random_image(a.size, 256, *a.gen_seed) : read_pgm(a.in);
  const CipherConfig cfg =
      CipherConfig::make(a.map, a.diffusion, a.n, a.schedule, input.side(), input.levels(), a.n0, a.harden);
  const RoundKeys keys = cipher_keys(a, cfg);
  CipherStats stats;
  const Image result = decrypting ? decrypt(input, cfg, keys, &stats) : encrypt(input, cfg, keys, &stats);
  write_pgm(a.out, result);
  out << (decrypting ? "decrypted " : "encrypted ") << input.side() << "x" << input.side() << " image, n=" << cfg.n
      << ", n0=" << cfg.n0 << ", tables built=" << stats.permutations_built << "\n";
  return 0;
}

}  // namespace

MapKey parse_map_key(MapKind kind, const std::string& text) {
  const auto values = parse_list(text);
  switch (kind) {
    case MapKind::Standard:
      if (values.size() != 1) throw Error(ErrorCode::InvalidArgument, "Standard key is a single integer k");
      return StandardKey{static_cast<std::int64_t>(values[0])};
    case MapKind::Cat:
      if (values.size() != 2) throw Error(ErrorCode::InvalidArgument, "Cat key is 'u,v'");
      return CatKey{values[0], values[1]};
    case MapKind::Baker:
      if (values.empty()) throw Error(ErrorCode::InvalidArgument, "Baker key is 'k1,k2,...'");
      return BakerKey(values);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown map kind");
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chaos-based image cipher workbench", "chaoscrypt"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  CipherArgs enc_args, dec_args;
  auto* enc = app.add_subcommand("encrypt", "encrypt a PGM image");
  add_cipher_options(enc, enc_args, true);
  auto* dec = app.add_subcommand("decrypt", "decrypt a PGM image");
  add_cipher_options(dec, dec_args, false);

  struct {
    std::string plain, cipher, csv;
    unsigned n = 1;
    DiffusionKind diffusion = DiffusionKind::Add;
    ScheduleMode schedule = ScheduleMode::SameKey;
    bool harden = false, force = false;
  } atk;
  auto* attack = app.add_subcommand("attack", "recover the diffusion key from the corner pixel");
  attack->add_option("--plain", atk.plain, "known plaintext PGM")->required();
  attack->add_option("--cipher", atk.cipher, "matching ciphertext PGM")->required();
  attack->add_option("--n", atk.n, "iteration count")->required()->check(CLI::PositiveNumber);
  attack->add_option("--diffusion", atk.diffusion, "add|pow")->required()->transform(choice(kDiffusionNames));
  attack->add_option("--schedule", atk.schedule, "schedule used for encryption")->transform(choice(kScheduleNames));
  attack->add_flag("--harden", atk.harden, "ciphertext was produced with scan hardening");
  attack->add_flag("--force", atk.force, "run even when the attack's assumptions do not hold");
  attack->add_option("--csv", atk.csv, "write candidate,verified rows");

  struct {
    MapKind map = MapKind::Cat;
    DiffusionKind diffusion = DiffusionKind::Pow;
    unsigned n_min = 1, n_max = 6;
    std::size_t size = 256;
    std::uint32_t levels = 256;
    std::uint64_t seed = 1;
    std::vector<std::string> keys;
    std::size_t baker_wide = 64;
    std::uint32_t q_init = 7;
    std::size_t flip_index = 0;
    unsigned flip_bit = 0;
    std::string csv;
  } met;
  auto* metric = app.add_subcommand("metric", "Cdr, Adc and Pcr experiments");
  metric->require_subcommand(1);
  auto add_common = [&](CLI::App* c) {
    c->add_option("--size", met.size, "image side N")->check(CLI::Range(2, 4096));
    c->add_option("--seed", met.seed, "test image seed");
    c->add_option("--csv", met.csv, "CSV output path");
  };
  auto add_sweep = [&](CLI::App* c) {
    add_common(c);
    c->add_option("--map", met.map, "standard|cat|baker")->transform(choice(kMapNames));
    c->add_option("--n-min", met.n_min, "first iteration count");
    c->add_option("--n-max", met.n_max, "last iteration count");
    c->add_option("--key", met.keys, "explicit key (repeatable); default is the built-in family");
    c->add_option("--baker-wide", met.baker_wide, "wide strip of the default Baker family");
  };
  auto* m_cdr = metric->add_subcommand("cdr", "ciphertext difference rate sweep");
  add_sweep(m_cdr);
  m_cdr->add_option("--levels", met.levels, "gray levels of the test image")->check(CLI::Range(2, 256));
  auto* m_adc = metric->add_subcommand("adc", "average distance change sweep");
  add_sweep(m_adc);
  auto* m_pcr = metric->add_subcommand("pcr", "pixel change rate curve");
  add_common(m_pcr);
  m_pcr->add_option("--levels", met.levels, "gray levels of the test image")->check(CLI::Range(2, 256));
  m_pcr->add_option("--diffusion", met.diffusion, "add|pow")->transform(choice(kDiffusionNames));
  m_pcr->add_option("--q-init", met.q_init, "diffusion key");
  m_pcr->add_option("--n-max", met.n_max, "last iteration count")->check(CLI::PositiveNumber);
  m_pcr->add_option("--flip-index", met.flip_index, "scan position of the flipped pixel");
  m_pcr->add_option("--flip-bit", met.flip_bit, "bit flipped in that pixel");

  struct {
    MapKind map = MapKind::Cat;
    DiffusionKind diffusion = DiffusionKind::Pow;
    std::size_t size = 256;
    std::uint32_t levels = 256;
    unsigned n = 1, n0 = 0;
    ScheduleMode schedule = ScheduleMode::SameKey;
  } rep;
  auto* keyspace = app.add_subcommand("keyspace", "key-space report (log2)");
  auto* complexity = app.add_subcommand("complexity", "operation-count report");
  for (auto* c : {keyspace, complexity}) {
    c->add_option("--map", rep.map, "standard|cat|baker")->transform(choice(kMapNames));
    c->add_option("--size", rep.size, "image side N")->check(CLI::PositiveNumber);
    c->add_option("--n", rep.n, "iteration count")->check(CLI::PositiveNumber);
    c->add_option("--n0", rep.n0, "group size (grouped schedule)");
    c->add_option("--schedule", rep.schedule, "same|per-round|grouped")->transform(choice(kScheduleNames));
  }
  keyspace->add_option("--levels", rep.levels, "gray levels L")->check(CLI::PositiveNumber);
  complexity->add_option("--diffusion", rep.diffusion, "add|pow")->transform(choice(kDiffusionNames));

  struct {
    std::string master_key;
    std::size_t count = 1;
    unsigned iterations = kDefaultLogisticIterations, bits = kDefaultSubkeyBits;
  } kg;
  auto* keygen = app.add_subcommand("keygen", "expand a master key into sub-key pairs");
  keygen->add_option("--master-key", kg.master_key, "32 hex characters")->required();
  keygen->add_option("--count", kg.count, "number of sub-key pairs");
  keygen->add_option("--logistic-iterations", kg.iterations, "T")->check(CLI::PositiveNumber);
  keygen->add_option("--subkey-bits", kg.bits, "S")->check(CLI::Range(1, 64));

  struct {
    std::uint64_t seed = 1;
    std::size_t size = 256;
    std::uint32_t levels = 256;
    std::string out;
  } gen;
  auto* gen_image = app.add_subcommand("gen-image", "write a seeded random PGM");
  gen_image->add_option("--seed", gen.seed, "generator seed");
  gen_image->add_option("--size", gen.size, "image side")->check(CLI::Range(1, 4096));
  gen_image->add_option("--levels", gen.levels, "gray levels")->check(CLI::Range(2, 256));
  gen_image->add_option("--out", gen.out, "output PGM")->required();

  struct {
    MapKind map = MapKind::Cat;
    std::string key, csv;
    std::size_t size = 256;
  } pm;
  auto* perm_cmd = app.add_subcommand("perm", "export a permutation table as CSV");
  perm_cmd->add_option("--map", pm.map, "standard|cat|baker")->transform(choice(kMapNames));
  perm_cmd->add_option("--key", pm.key, "k | u,v | k1,k2,...")->required();
  perm_cmd->add_option("--size", pm.size, "lattice side N")->check(CLI::Range(2, 4096));
  perm_cmd->add_option("--csv", pm.csv, "output path (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*enc) return run_cipher(enc_args, false, out, err);
    if (*dec) return run_cipher(dec_args, true, out, err);

    if (*attack) {
      const Image plain = read_pgm(atk.plain);
      const Image cipher = read_pgm(atk.cipher);
      const unsigned n0 = atk.schedule == ScheduleMode::Grouped ? 1 : 0;
      const CipherConfig cfg = CipherConfig::make(MapKind::Cat, atk.diffusion, atk.n, atk.schedule, plain.side(),
                                                  plain.levels(), n0, atk.harden);
      const AttackResult r = corner_attack(plain, cipher, cfg, AttackOptions{atk.force});
      out << "candidates:";
      for (auto q : r.keys.candidates) out << ' ' << q;
      out << "\nattempts: " << r.keys.attempts << "\nreduction factor: " << r.reduction_factor << "\n";
      if (!atk.csv.empty()) {
        std::ostringstream os;
        write_attack_csv(os, AttackInput{plain.at(0, 0), cipher.at(0, 0), cfg.n, cfg.levels, cfg.diffusion_kind},
                         r.keys);
        write_text(atk.csv, os.str());
      }
      return 0;
    }

    if (*metric) {
      std::vector<MetricSeries> series;
      std::string metric_name, map_name = "none";
      if (*m_pcr) {
        metric_name = "pcr";
        const Image img = make_random_image(met.size, met.levels, met.seed);
        series.push_back(pcr_curve(img, met.diffusion, DiffusionKey{met.q_init},
                                   PcrOptions{met.n_max, met.flip_index, met.flip_bit}));
      } else {
        metric_name = *m_cdr ? "cdr" : "adc";
        map_name = to_string(met.map);
        std::vector<SweepSample> family;
        if (!met.keys.empty()) {
          for (std::size_t i = 0; i < met.keys.size(); ++i)
            family.push_back({parse_map_key(met.map, met.keys[i]), static_cast<double>(i)});
        } else if (met.map == MapKind::Standard) {
          family = standard_key_family();
        } else if (met.map == MapKind::Cat) {
          family = cat_key_family(met.size);
        } else {
          family = baker_key_family(met.size, met.baker_wide);
        }
        SweepResult r = *m_cdr ? cdr_sweep(family, make_random_image(met.size, met.levels, met.seed),
                                           SweepOptions{met.n_min, met.n_max})
                               : adc_sweep(family, met.size, SweepOptions{met.n_min, met.n_max});
        for (const auto& f : r.flagged) err << "skipped " << f << "\n";
        series = std::move(r.series);
      }
      for (const auto& s : series) {
        const std::string text = format_series_csv(s, metric_name, map_name, met.size, met.levels, met.seed);
        if (met.csv.empty()) {
          out << "# " << s.label << "\n" << text;
        } else {
          write_text(series_path(met.csv, s, series.size()), text);
        }
      }
      return 0;
    }

    if (*keyspace) {
      const KeySpaceReport r = keyspace_report(rep.map, rep.size, rep.levels, rep.n, rep.schedule, rep.n0);
      out << std::fixed << std::setprecision(6) << "map: " << to_string(r.map_kind) << "\nschedule: "
          << to_string(r.mode) << "\nn: " << r.n << "\nn0: " << r.n0
          << "\nlog2 parameter space: " << r.log2_parameter_space
          << "\nlog2 key space: " << r.log2_total_key_space << "\n";
      if (rep.map == MapKind::Standard) out << "log2 swept range: " << r.log2_swept_range << "\n";
      return 0;
    }

    if (*complexity) {
      const CipherConfig cfg =
          CipherConfig::make(rep.map, rep.diffusion, rep.n, rep.schedule, rep.size, 256, rep.n0);
      const ComplexityReport r = complexity_report(cfg);
      out << "additions: " << r.per_pixel.additions << "N^2 a (" << r.additions() << ")\n"
          << "multiplications: " << r.per_pixel.multiplications << "N^2 b (" << r.multiplications() << ")\n";
      return 0;
    }

    if (*keygen) {
      const auto pairs = generate_subkeys(MasterKey::from_hex(kg.master_key), kg.count, kg.iterations, kg.bits);
      for (std::size_t t = 0; t < pairs.size(); ++t)
        out << (t + 1) << ' ' << pairs[t].x1 << ' ' << pairs[t].x2 << "\n";
      return 0;
    }

    if (*gen_image) {
      write_pgm(gen.out, make_random_image(gen.size, gen.levels, gen.seed));
      return 0;
    }

    if (*perm_cmd) {
      const Permutation perm = build_permutation(parse_map_key(pm.map, pm.key), pm.size);
      if (pm.csv.empty()) {
        write_permutation_csv(out, perm);
      } else {
        std::ostringstream os;
        write_permutation_csv(os, perm);
        write_text(pm.csv, os.str());
      }
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kDataError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kDataError;
  }
  return kUsageError;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"chaoscrypt"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace chaoscrypt
