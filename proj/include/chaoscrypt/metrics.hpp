#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "chaoscrypt/config.hpp"
#include "chaoscrypt/image.hpp"
#include "chaoscrypt/lattice_maps.hpp"

namespace chaoscrypt {

struct SeriesRow {
  double sweep_value = 0.0;
  double percent = 0.0;
};

struct MetricSeries {
  std::string label;
  std::vector<SeriesRow> rows;
};

std::size_t diff_count(const Image& a, const Image& b);
// (Diff(Y,Y1) + Diff(Y,Y2)) / 2N^2 * 100
double cdr(const Image& y, const Image& y1, const Image& y2);
// Diff(Y,Yp) / N^2 * 100
double pcr(const Image& y, const Image& yp);

// Mean distance between the images of lattice neighbours, divided by N and
// expressed in percent. Neighbour quads are anchored at i, j in [0, N-2].
double adc(const Permutation& perm, std::size_t side);

// Key perturbations K - dK and K + dK used by the Cdr experiment:
//   Standard  k -/+ 1
//   Cat       v -/+ 1
//   Baker     swap the first widest strip with its left / right neighbour
// Throws InvalidKeyPerturbation when either neighbour leaves the key domain.
std::pair<MapKey, MapKey> perturb_key(const MapKey& key, std::size_t side);

struct SweepSample {
  MapKey key;
  double sweep_value = 0.0;
};

struct SweepOptions {
  unsigned n_min = 1;
  unsigned n_max = 6;
};

struct SweepResult {
  // One series per n, rows ordered by sweep value.
  std::vector<MetricSeries> series;
  // Samples skipped because their perturbation was invalid.
  std::vector<std::string> flagged;
};

// Confusion-only Cdr of `test_image` for every key and n in [n_min, n_max].
SweepResult cdr_sweep(const std::vector<SweepSample>& family, const Image& test_image, SweepOptions options);
// Adc of the n-fold permutation for every key; n = 0 gives the identity.
SweepResult adc_sweep(const std::vector<SweepSample>& family, std::size_t side, SweepOptions options);

// k in {0, step, ..., max}.
std::vector<SweepSample> standard_key_family(std::int64_t max = 50000, std::int64_t step = 500);
// (u, v) on the grid {0, stride, 2*stride, ...} < N; sweep value u*N + v.
std::vector<SweepSample> cat_key_family(std::size_t side, std::size_t stride = 17);
// One strip of `wide` among strips of `narrow`, at every position.
std::vector<SweepSample> baker_key_family(std::size_t side, std::size_t wide, std::size_t narrow = 2);

struct PcrOptions {
  unsigned n_max = 20;
  // Position in the diffusion scan of the flipped pixel, and the bit flipped.
  std::size_t flip_index = 0;
  unsigned flip_bit = 0;
};

// Pcr after n = 1..n_max diffusion-only rounds (RasterTL scan).
MetricSeries pcr_curve(const Image& img, DiffusionKind kind, DiffusionKey key, PcrOptions options);

struct KeySpaceReport {
  MapKind map_kind = MapKind::Cat;
  ScheduleMode mode = ScheduleMode::SameKey;
  unsigned n = 1;
  unsigned n0 = 1;
  double log2_parameter_space = 0.0;
  double log2_total_key_space = 0.0;
  // Standard map only: log2 of the swept parameter range k in [0, 50000].
  double log2_swept_range = 0.0;
};

KeySpaceReport keyspace_report(MapKind map, std::size_t side, std::uint32_t levels, unsigned n, ScheduleMode mode,
                               unsigned n0 = 0);

// Operation counts in units of N^2: a = addition/subtraction, b =
// multiplication/division.
struct OpCost {
  std::uint64_t additions = 0;
  std::uint64_t multiplications = 0;
  friend bool operator==(const OpCost&, const OpCost&) = default;
};

OpCost confusion_cost(MapKind map);
OpCost diffusion_cost(DiffusionKind kind);

struct ComplexityReport {
  std::size_t side = 0;
  OpCost per_pixel;  // coefficients of N^2 a and N^2 b
  std::uint64_t additions() const { return per_pixel.additions * side * side; }
  std::uint64_t multiplications() const { return per_pixel.multiplications * side * side; }
};

// (n / n0) * R_c + n * R_d
ComplexityReport complexity_report(const CipherConfig& cfg);
// Same key every round: R_c + n * R_d.
ComplexityReport complexity_same_key(const CipherConfig& cfg);
// Fresh key every round: n * (R_c + R_d).
ComplexityReport complexity_per_round(const CipherConfig& cfg);

std::string format_series_csv(const MetricSeries& series, const std::string& metric, const std::string& map,
                              std::size_t side, std::uint32_t levels, std::uint64_t seed);
void write_series_csv(std::ostream& os, const MetricSeries& series, const std::string& metric,
                      const std::string& map, std::size_t side, std::uint32_t levels, std::uint64_t seed);

}  // namespace chaoscrypt
