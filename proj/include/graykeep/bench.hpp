#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graykeep/schemes.hpp"

namespace graykeep {

struct BenchRecord {
  std::string image;
  Scheme scheme = Scheme::kProposed;
  uint64_t capacity_bits = 0;
  int t1 = 0, t2 = 0;
  double psnr_db = 0.0;
  uint32_t gray_changed_pixels = 0;
  double runtime_ms = 0.0;  // threshold selection plus embedding
  // Cross-checks carried alongside the CSV columns.
  bool roundtrip_ok = false;
  bool invariance_ok = false;
  uint32_t clamp_violations = 0;
};

struct BenchOptions {
  std::vector<std::string> image_paths;
  std::vector<uint64_t> capacities;
  std::vector<Scheme> schemes;
  uint64_t seed = 1;
  int threads = 1;
};

/// Deterministic seed derivation for one bench job.
uint64_t mix_seed(uint64_t seed, uint64_t value);

/// Runs every (image, scheme, capacity) combination: seeded random payload,
/// auto thresholds, embed, then a full decode to confirm bit-exact recovery.
/// Jobs may run on several threads; the returned rows are sorted by
/// (image, scheme, capacity) regardless of scheduling.
std::vector<BenchRecord> run_bench(const BenchOptions& options);

/// CSV schema: image,scheme,capacity_bits,t1,t2,psnr_db,gray_changed_pixels,
/// runtime_ms (one fixed header row).
void write_bench_csv(const std::string& path,
                     const std::vector<BenchRecord>& records);

}  // namespace graykeep
