#include "graykeep/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <memory>
#include <thread>
#include <tuple>

#include "graykeep/bits.hpp"
#include "graykeep/codec.hpp"
#include "graykeep/errors.hpp"
#include "graykeep/image_io.hpp"
#include "graykeep/metrics.hpp"

namespace graykeep {

uint64_t mix_seed(uint64_t seed, uint64_t value) {
  Xorshift64Star rng(seed ^ (value * 0xD1B54A32D192ED03ull) ^ 0x8BADF00Dull);
  return rng.next();
}

namespace {

std::string image_stem(const std::string& path) {
  const size_t slash = path.find_last_of("/\\");
  std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
  const size_t dot = name.find_last_of('.');
  if (dot != std::string::npos) name = name.substr(0, dot);
  return name;
}

}  // namespace

std::vector<BenchRecord> run_bench(const BenchOptions& options) {
  struct Job {
    size_t image_idx;
    Scheme scheme;
    uint64_t capacity;
  };
  std::vector<ColorImage> images;
  std::vector<std::string> names;
  images.reserve(options.image_paths.size());
  for (const auto& path : options.image_paths) {
    images.push_back(load_image(path));
    names.push_back(image_stem(path));
  }

  std::vector<Job> jobs;
  for (size_t ii = 0; ii < images.size(); ++ii)
    for (const Scheme scheme : options.schemes)
      for (const uint64_t cap : options.capacities)
        jobs.push_back({ii, scheme, cap});

  std::vector<BenchRecord> records(jobs.size());
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const size_t idx = next.fetch_add(1);
      if (idx >= jobs.size()) return;
      const Job& job = jobs[idx];
      BenchRecord rec;
      rec.image = names[job.image_idx];
      rec.scheme = job.scheme;
      rec.capacity_bits = job.capacity;

      const uint64_t payload_seed = mix_seed(
          mix_seed(mix_seed(options.seed, job.image_idx + 1),
                   static_cast<uint64_t>(job.scheme) + 1),
          job.capacity);
      const BitVec secret = random_bits(job.capacity, payload_seed);
      const ColorImage& cover = images[job.image_idx];

      const auto start = std::chrono::steady_clock::now();
      const ThresholdChoice th =
          select_thresholds(cover, job.scheme, job.capacity);
      EncodeParams params;
      params.scheme = job.scheme;
      params.t1 = th.t1;
      params.t2 = th.t2;
      EncodeReport report;
      const ColorImage marked = encode(cover, secret, params, &report);
      const auto stop = std::chrono::steady_clock::now();

      rec.t1 = th.t1;
      rec.t2 = th.t2;
      rec.psnr_db = report.psnr_db;
      rec.gray_changed_pixels = report.gray_changed_pixels;
      rec.runtime_ms =
          std::chrono::duration<double, std::milli>(stop - start).count();
      rec.clamp_violations = report.clamp_violations;

      const DecodeResult back = decode(marked, job.scheme);
      rec.roundtrip_ok = back.cover == cover && back.secret == secret;
      const InvarianceReport inv = invariance_report(cover, marked);
      rec.invariance_ok = inv.all_in_row0();
      records[idx] = std::move(rec);
    }
  };

  const int threads = std::max(1, options.threads);
  if (threads == 1 || jobs.size() <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  std::sort(records.begin(), records.end(),
            [](const BenchRecord& a, const BenchRecord& b) {
              return std::tuple(a.image, scheme_name(a.scheme), a.capacity_bits) <
                     std::tuple(b.image, scheme_name(b.scheme), b.capacity_bits);
            });
  return records;
}

void write_bench_csv(const std::string& path,
                     const std::vector<BenchRecord>& records) {
  std::unique_ptr<FILE, int (*)(FILE*)> f(fopen(path.c_str(), "wb"), fclose);
  if (!f) throw IoError("cannot open for writing: " + path);
  fprintf(f.get(),
          "image,scheme,capacity_bits,t1,t2,psnr_db,gray_changed_pixels,"
          "runtime_ms\n");
  for (const auto& r : records) {
    if (std::isinf(r.psnr_db))
      fprintf(f.get(), "%s,%s,%llu,%d,%d,inf,%u,%.3f\n", r.image.c_str(),
              scheme_name(r.scheme), static_cast<unsigned long long>(r.capacity_bits),
              r.t1, r.t2, r.gray_changed_pixels, r.runtime_ms);
    else
      fprintf(f.get(), "%s,%s,%llu,%d,%d,%.4f,%u,%.3f\n", r.image.c_str(),
              scheme_name(r.scheme), static_cast<unsigned long long>(r.capacity_bits),
              r.t1, r.t2, r.psnr_db, r.gray_changed_pixels, r.runtime_ms);
  }
}

}  // namespace graykeep
