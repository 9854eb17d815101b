#ifndef DETGB_IO_HPP
#define DETGB_IO_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "detgb/engine.hpp"
#include "detgb/gncomplex.hpp"

namespace detgb::io {

using ff::Fel;
using ff::Field;

/// SplitMix64. State advances by the golden-gamma constant; the output mix is
/// the standard finalizer, so streams are reproducible across platforms.
struct SplitMix64 {
  std::uint64_t state = 0;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform residue mod p by rejection sampling.
  std::uint64_t uniform_mod(std::uint64_t p) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % p;
    std::uint64_t r;
    do {
      r = next();
    } while (r >= limit);
    return r % p;
  }
};

/// Instance coefficients are drawn entry by entry, row-major, x1..x4 within
/// an entry.
gncomplex::LinearMatrix random_instance(std::uint64_t p, int n, std::uint64_t seed);

struct GbFile {
  std::uint64_t p = 0;
  int n = 0;
  int maxdeg = 0;
  engine::GroebnerBasis gb;
};

struct InstanceFile {
  std::uint64_t p = 0;
  int n = 0;
  std::uint64_t seed = 0;  // optional metadata, 0 when absent
  gncomplex::LinearMatrix matrix;
};

std::string instance_to_json(const InstanceFile& inst);
InstanceFile instance_from_json(const std::string& text);

std::string gb_to_json(const GbFile& f);
GbFile gb_from_json(const std::string& text);

/// One CSV row of per-degree statistics.
struct StatsRow {
  std::string run_id;
  int n = 0;
  std::uint64_t p = 0;
  std::uint64_t seed = 0;
  std::string stage;
  int degree = 0;
  std::uint64_t rows = 0, cols = 0, alpha = 0, beta = 0, gamma = 0;
  std::uint64_t mul_count = 0, add_count = 0;
  std::uint64_t zero_reductions = 0, redundant_skipped = 0, collisions = 0, new_pivots = 0;
  double a_block_density = 0.0;
  std::uint64_t wall_ns = 0;
};

extern const char* const kStatsCsvHeader;

std::string stats_to_csv(const std::vector<StatsRow>& rows);

std::vector<StatsRow> stats_rows(const std::string& run_id, int n, std::uint64_t p,
                                 std::uint64_t seed,
                                 const std::vector<engine::StageDegreeStats>& stats);

/// Whole-file atomic write (write temp, rename).
void atomic_write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace detgb::io

#endif
