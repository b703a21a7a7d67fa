#include "chaoscrypt/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <sstream>

#include "chaoscrypt/diffusion.hpp"
#include "chaoscrypt/error.hpp"

namespace chaoscrypt {

namespace {

void check_same_shape(const Image& a, const Image& b) {
  if (a.side() != b.side() || a.size() != b.size())
    throw Error(ErrorCode::SizeMismatch, "images have different dimensions");
}

double percent_of(std::size_t count, std::size_t total) {
  return 100.0 * static_cast<double>(count) / static_cast<double>(total);
}

std::string series_label(unsigned n) { return "n=" + std::to_string(n); }

void sort_rows(std::vector<MetricSeries>& series) {
  for (auto& s : series)
    std::stable_sort(s.rows.begin(), s.rows.end(),
                     [](const SeriesRow& a, const SeriesRow& b) { return a.sweep_value < b.sweep_value; });
}

}  // namespace

std::size_t diff_count(const Image& a, const Image& b) {
  check_same_shape(a, b);
  std::size_t count = 0;
  for (std::size_t i = 0; i < a.size(); ++i) count += a[i] != b[i];
  return count;
}

double cdr(const Image& y, const Image& y1, const Image& y2) {
  check_same_shape(y, y1);
  check_same_shape(y, y2);
  return 100.0 * static_cast<double>(diff_count(y, y1) + diff_count(y, y2)) / (2.0 * static_cast<double>(y.size()));
}

double pcr(const Image& y, const Image& yp) {
  check_same_shape(y, yp);
  return percent_of(diff_count(y, yp), y.size());
}

double adc(const Permutation& perm, std::size_t side) {
  if (side < 2) throw Error(ErrorCode::InvalidArgument, "Adc needs N >= 2");
  if (perm.side() != side) throw Error(ErrorCode::SizeMismatch, "permutation size differs from N");
  const auto fwd = perm.forward();
  auto image_of = [&](std::size_t x, std::size_t y) { return lattice_point(fwd[y * side + x], side); };
  auto dist = [](Point a, Point b) {
    const double dx = static_cast<double>(a.x) - static_cast<double>(b.x);
    const double dy = static_cast<double>(a.y) - static_cast<double>(b.y);
    return std::sqrt(dx * dx + dy * dy);
  };
  double total = 0.0;
  for (std::size_t y = 0; y + 1 < side; ++y)
    for (std::size_t x = 0; x + 1 < side; ++x) {
      const Point c00 = image_of(x, y), c10 = image_of(x + 1, y);
      const Point c01 = image_of(x, y + 1), c11 = image_of(x + 1, y + 1);
      total += (dist(c00, c10) + dist(c00, c01) + dist(c10, c11) + dist(c01, c11)) / 4.0;
    }
  const double quads = static_cast<double>(side - 1) * static_cast<double>(side - 1);
  return 100.0 * total / quads / static_cast<double>(side);
}

std::pair<MapKey, MapKey> perturb_key(const MapKey& key, std::size_t side) {
  validate(key, side);
  if (const auto* s = std::get_if<StandardKey>(&key)) {
    if (s->k < 1) throw Error(ErrorCode::InvalidKeyPerturbation, "k - 1 < 0");
    return {StandardKey{s->k - 1}, StandardKey{s->k + 1}};
  }
  if (const auto* c = std::get_if<CatKey>(&key)) {
    if (c->v < 1 || c->v + 1 >= side)
      throw Error(ErrorCode::InvalidKeyPerturbation, "v -/+ 1 leaves [0, N-1] for v=" + std::to_string(c->v));
    return {CatKey{c->u, c->v - 1}, CatKey{c->u, c->v + 1}};
  }
  const auto& strips = std::get<BakerKey>(key).strips();
  const auto p = static_cast<std::size_t>(std::max_element(strips.begin(), strips.end()) - strips.begin());
  if (p == 0 || p + 1 >= strips.size())
    throw Error(ErrorCode::InvalidKeyPerturbation, "widest strip has no neighbour on both sides");
  if (strips[p - 1] == strips[p] || strips[p + 1] == strips[p])
    throw Error(ErrorCode::InvalidKeyPerturbation, "swapping equal strips leaves the key unchanged");
  auto left = strips, right = strips;
  std::swap(left[p - 1], left[p]);
  std::swap(right[p], right[p + 1]);
  return {BakerKey(std::move(left)), BakerKey(std::move(right))};
}

SweepResult cdr_sweep(const std::vector<SweepSample>& family, const Image& test_image, SweepOptions options) {
  if (options.n_min < 1 || options.n_max < options.n_min)
    throw Error(ErrorCode::InvalidArgument, "Cdr sweep needs 1 <= n_min <= n_max");
  const std::size_t side = test_image.side();
  SweepResult result;
  for (unsigned n = options.n_min; n <= options.n_max; ++n) result.series.push_back({series_label(n), {}});
  for (const SweepSample& sample : family) {
    std::pair<MapKey, MapKey> neighbours;
    try {
      neighbours = perturb_key(sample.key, side);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::InvalidKeyPerturbation) throw;
      result.flagged.push_back(to_string(sample.key) + ": " + e.what());
      continue;
    }
    const Permutation p = build_permutation(sample.key, side);
    const Permutation p_minus = build_permutation(neighbours.first, side);
    const Permutation p_plus = build_permutation(neighbours.second, side);
    Image y = test_image, y1 = test_image, y2 = test_image;
    for (unsigned n = 1; n <= options.n_max; ++n) {
      y = apply_permutation(y, p);
      y1 = apply_permutation(y1, p_minus);
      y2 = apply_permutation(y2, p_plus);
      if (n >= options.n_min) result.series[n - options.n_min].rows.push_back({sample.sweep_value, cdr(y, y1, y2)});
    }
  }
  sort_rows(result.series);
  return result;
}

SweepResult adc_sweep(const std::vector<SweepSample>& family, std::size_t side, SweepOptions options) {
  if (options.n_max < options.n_min) throw Error(ErrorCode::InvalidArgument, "Adc sweep needs n_min <= n_max");
  SweepResult result;
  for (unsigned n = options.n_min; n <= options.n_max; ++n) result.series.push_back({series_label(n), {}});
  for (const SweepSample& sample : family) {
    const Permutation step = build_permutation(sample.key, side);
    Permutation composed = Permutation::identity(side);
    for (unsigned n = 0; n <= options.n_max; ++n) {
      if (n > 0) composed = composed.then(step);
      if (n >= options.n_min)
        result.series[n - options.n_min].rows.push_back({sample.sweep_value, adc(composed, side)});
    }
  }
  sort_rows(result.series);
  return result;
}

std::vector<SweepSample> standard_key_family(std::int64_t max, std::int64_t step) {
  if (step <= 0 || max < 0) throw Error(ErrorCode::InvalidArgument, "Standard family needs step > 0, max >= 0");
  std::vector<SweepSample> out;
  for (std::int64_t k = 0; k <= max; k += step) out.push_back({StandardKey{k}, static_cast<double>(k)});
  return out;
}

std::vector<SweepSample> cat_key_family(std::size_t side, std::size_t stride) {
  if (stride == 0) throw Error(ErrorCode::InvalidArgument, "Cat family stride must be positive");
  std::vector<SweepSample> out;
  for (std::size_t u = 0; u < side; u += stride)
    for (std::size_t v = 0; v < side; v += stride)
      out.push_back({CatKey{u, v}, static_cast<double>(u * side + v)});
  return out;
}

std::vector<SweepSample> baker_key_family(std::size_t side, std::size_t wide, std::size_t narrow) {
  if (narrow == 0 || wide < narrow || wide > side || (side - wide) % narrow != 0)
    throw Error(ErrorCode::InvalidBakerKey, "cannot fill N with one wide strip and narrow strips");
  const std::size_t count = 1 + (side - wide) / narrow;
  std::vector<SweepSample> out;
  for (std::size_t pos = 0; pos < count; ++pos) {
    std::vector<std::size_t> strips(count, narrow);
    strips[pos] = wide;
    BakerKey key(std::move(strips));
    key.validate(side);
    out.push_back({std::move(key), static_cast<double>(pos)});
  }
  return out;
}

MetricSeries pcr_curve(const Image& img, DiffusionKind kind, DiffusionKey key, PcrOptions options) {
  if (options.flip_index >= img.size()) throw Error(ErrorCode::InvalidArgument, "flip position outside the image");
  if ((std::uint32_t{1} << options.flip_bit) >= img.levels() || options.flip_bit >= 16)
    throw Error(ErrorCode::InvalidArgument, "flip bit exceeds the pixel depth");
  Image base = img;
  Image flipped = img;
  const std::uint32_t idx = scan_indices(ScanOrder::RasterTL, img.side())[options.flip_index];
  flipped[idx] = static_cast<Pixel>(flipped[idx] ^ (1u << options.flip_bit));
  if (flipped[idx] >= img.levels()) throw Error(ErrorCode::PixelOutOfRange, "flipped pixel exceeds L - 1");
  MetricSeries series{"pcr-" + to_string(kind), {}};
  for (unsigned n = 1; n <= options.n_max; ++n) {
    diffuse_image(base, kind, key, ScanOrder::RasterTL);
    diffuse_image(flipped, kind, key, ScanOrder::RasterTL);
    series.rows.push_back({static_cast<double>(n), pcr(base, flipped)});
  }
  return series;
}

KeySpaceReport keyspace_report(MapKind map, std::size_t side, std::uint32_t levels, unsigned n, ScheduleMode mode,
                               unsigned n0) {
  if (side < 1 || levels < 1 || n < 1) throw Error(ErrorCode::InvalidArgument, "N, L, n must be >= 1");
  KeySpaceReport r;
  r.map_kind = map;
  r.mode = mode;
  r.n = n;
  const double log2_n = std::log2(static_cast<double>(side));
  switch (map) {
    case MapKind::Cat: r.log2_parameter_space = 2.0 * log2_n; break;
    case MapKind::Baker: r.log2_parameter_space = static_cast<double>(side - 1); break;
    case MapKind::Standard: {
      const double cells = static_cast<double>(side) * static_cast<double>(side);
      r.log2_parameter_space = std::lgamma(cells + 1.0) / std::numbers::ln2;
      r.log2_swept_range = std::log2(50001.0);
      break;
    }
  }
  const double once = r.log2_parameter_space + std::log2(static_cast<double>(levels));
  switch (mode) {
    case ScheduleMode::SameKey: r.n0 = n; break;
    case ScheduleMode::PerRound: r.n0 = 1; break;
    case ScheduleMode::Grouped:
      if (n0 < 1 || n0 > n || n % n0 != 0) throw Error(ErrorCode::InvalidArgument, "n0 must divide n");
      r.n0 = n0;
      break;
  }
  r.log2_total_key_space = static_cast<double>(n / r.n0) * once;
  return r;
}

OpCost confusion_cost(MapKind map) {
  switch (map) {
    case MapKind::Cat: return {2, 3};
    case MapKind::Baker: return {2, 2};
    case MapKind::Standard: return {2, 4};
  }
  return {};
}

OpCost diffusion_cost(DiffusionKind kind) { return kind == DiffusionKind::Add ? OpCost{1, 1} : OpCost{1, 2}; }

namespace {

ComplexityReport aggregate(const CipherConfig& cfg, std::uint64_t confusions) {
  const OpCost c = confusion_cost(cfg.map_kind);
  const OpCost d = diffusion_cost(cfg.diffusion_kind);
  ComplexityReport r;
  r.side = cfg.side;
  r.per_pixel.additions = confusions * c.additions + cfg.n * d.additions;
  r.per_pixel.multiplications = confusions * c.multiplications + cfg.n * d.multiplications;
  return r;
}

}  // namespace

ComplexityReport complexity_report(const CipherConfig& cfg) {
  cfg.validate();
  return aggregate(cfg, cfg.group_count());
}

ComplexityReport complexity_same_key(const CipherConfig& cfg) {
  cfg.validate();
  return aggregate(cfg, 1);
}

ComplexityReport complexity_per_round(const CipherConfig& cfg) {
  cfg.validate();
  return aggregate(cfg, cfg.n);
}

std::string format_series_csv(const MetricSeries& series, const std::string& metric, const std::string& map,
                              std::size_t side, std::uint32_t levels, std::uint64_t seed) {
  std::ostringstream os;
  write_series_csv(os, series, metric, map, side, levels, seed);
  return os.str();
}

void write_series_csv(std::ostream& os, const MetricSeries& series, const std::string& metric,
                      const std::string& map, std::size_t side, std::uint32_t levels, std::uint64_t seed) {
  os << "# metric=" << metric << " map=" << map << " N=" << side << " L=" << levels << " seed=" << seed << '\n';
  char line[128];
  for (const SeriesRow& row : series.rows) {
    std::snprintf(line, sizeof line, "%.6f,%.6f\n", row.sweep_value, row.percent);
    os << line;
  }
}

}  // namespace chaoscrypt
