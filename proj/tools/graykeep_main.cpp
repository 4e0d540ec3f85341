#include <chrono>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "graykeep/bench.hpp"
#include "graykeep/bits.hpp"
#include "graykeep/codec.hpp"
#include "graykeep/errors.hpp"
#include "graykeep/image_io.hpp"
#include "graykeep/metrics.hpp"

namespace {

using namespace graykeep;

void print_report(const EncodeReport& r, double runtime_ms) {
  printf("method:              %s\n", scheme_name(r.scheme));
  printf("thresholds:          t1=%d t2=%d\n", r.t1, r.t2);
  printf("secret bits:         %" PRIu64 "\n", r.secret_bits);
  printf("payload bits:        %" PRIu64 " (incl. displaced header LSBs)\n",
         r.payload_bits);
  printf("embedding units:     %u (%u carrying two bits)\n", r.embedding_units,
         r.two_bit_units);
  printf("end unit index:      %u\n", r.k_end);
  printf("location map ones:   %u (compressed to %u bits)\n", r.lm_ones,
         r.l_clm);
  printf("header pixels:       %u (%u bits in row-0 LSBs)\n", r.header_pixels,
         r.header_bits);
  printf("gray changed pixels: %u\n", r.gray_changed_pixels);
  if (std::isinf(r.psnr_db))
    printf("psnr:                inf\n");
  else
    printf("psnr:                %.4f dB (mse %.6f)\n", r.psnr_db, r.mse);
  printf("runtime:             %.1f ms\n", runtime_ms);
}

int bench_threads() {
  if (const char* env = getenv("GRAYKEEP_THREADS")) {
    const int n = atoi(env);
    if (n >= 1) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

int run(int argc, char** argv) {
  CLI::App app{"graykeep: reversible data hiding in RGB images with an "
               "invariant grayscale"};
  app.require_subcommand(1);

  // embed
  auto* embed_cmd = app.add_subcommand("embed", "embed a payload into a cover image");
  std::string cover_path, out_path, payload_path, method = "proposed";
  uint64_t random_bits_n = 0, target_bits = 0, seed = 1;
  bool have_random = false, have_target = false;
  int t1 = -1, t2 = -1;
  embed_cmd->add_option("--cover", cover_path, "cover image (PPM/PNG)")->required();
  embed_cmd->add_option("--out", out_path, "marked image output")->required();
  auto* opt_payload = embed_cmd->add_option("--payload", payload_path,
                                            "payload file (see README format)");
  auto* opt_random = embed_cmd->add_option("--random-bits", random_bits_n,
                                           "generate a seeded random payload of N bits");
  embed_cmd->add_option("--seed", seed, "random payload seed (default 1)");
  embed_cmd->add_option("--t1", t1, "smooth/normal threshold");
  embed_cmd->add_option("--t2", t2, "normal/complex threshold");
  auto* opt_target = embed_cmd->add_option("--target-bits", target_bits,
                                           "auto-select thresholds for this capacity");
  embed_cmd->add_option("--method", method, "proposed|hou|li")
      ->check(CLI::IsMember({"proposed", "hou", "li"}));
  opt_random->excludes(opt_payload);

  // extract
  auto* extract_cmd = app.add_subcommand("extract", "recover the cover image and payload");
  std::string marked_path, out_cover, out_payload;
  extract_cmd->add_option("--marked", marked_path, "marked image")->required();
  extract_cmd->add_option("--out-cover", out_cover, "recovered cover output")->required();
  extract_cmd->add_option("--out-payload", out_payload, "recovered payload output")->required();
  extract_cmd->add_option("--method", method, "proposed|hou|li")
      ->check(CLI::IsMember({"proposed", "hou", "li"}));

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "check grayscale invariance of a marked image");
  std::string v_cover, v_marked;
  verify_cmd->add_option("--cover", v_cover, "cover image")->required();
  verify_cmd->add_option("--marked", v_marked, "marked image")->required();

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "distortion-capacity sweep to CSV");
  std::string images_dir, csv_path;
  std::vector<uint64_t> capacities;
  std::vector<std::string> methods;
  uint64_t bench_seed = 1;
  bench_cmd->add_option("--images", images_dir, "directory of cover images")->required();
  bench_cmd->add_option("--capacities", capacities, "payload sizes in bits")
      ->required()->delimiter(',');
  bench_cmd->add_option("--methods", methods, "schemes to run")
      ->required()->delimiter(',');
  bench_cmd->add_option("--seed", bench_seed, "payload seed");
  bench_cmd->add_option("--csv", csv_path, "output CSV path")->required();

  CLI11_PARSE(app, argc, argv);
  have_random = opt_random->count() > 0;
  have_target = opt_target->count() > 0;

  if (embed_cmd->parsed()) {
    const ColorImage cover = load_image(cover_path);
    BitVec secret;
    if (have_random)
      secret = random_bits(random_bits_n, seed);
    else if (!payload_path.empty())
      secret = read_payload_file(payload_path);
    else
      throw std::invalid_argument("embed needs --payload or --random-bits");

    const Scheme scheme = scheme_from_name(method.c_str());
    const auto start = std::chrono::steady_clock::now();
    EncodeParams params;
    params.scheme = scheme;
    if (t1 >= 0 || t2 >= 0) {
      if (t1 < 0 || t2 < 0)
        throw std::invalid_argument("--t1 and --t2 must be given together");
      params.t1 = t1;
      params.t2 = t2;
    } else {
      const uint64_t target =
          have_target ? std::max<uint64_t>(target_bits, secret.size())
                      : secret.size();
      const ThresholdChoice th = select_thresholds(cover, scheme, target);
      params.t1 = th.t1;
      params.t2 = th.t2;
    }
    EncodeReport report;
    const ColorImage marked = encode(cover, secret, params, &report);
    const auto stop = std::chrono::steady_clock::now();
    save_image(marked, out_path);
    print_report(report,
                 std::chrono::duration<double, std::milli>(stop - start).count());
    return 0;
  }

  if (extract_cmd->parsed()) {
    const ColorImage marked = load_image(marked_path);
    const DecodeResult result = decode(marked, scheme_from_name(method.c_str()));
    save_image(result.cover, out_cover);
    write_payload_file(out_payload, result.secret);
    printf("recovered %zu payload bits (header thresholds t1=%d t2=%d)\n",
           result.secret.size(), result.t1, result.t2);
    return 0;
  }

  if (verify_cmd->parsed()) {
    const ColorImage cover = load_image(v_cover);
    const ColorImage marked = load_image(v_marked);
    const double p = psnr(cover, marked);
    const InvarianceReport inv = invariance_report(cover, marked);
    if (std::isinf(p))
      printf("psnr: inf\n");
    else
      printf("psnr: %.4f dB\n", p);
    printf("gray-changed pixels: %zu\n", inv.count());
    size_t shown = 0;
    for (const auto& rc : inv.changed) {
      if (shown++ >= 16) {
        printf("  ...\n");
        break;
      }
      printf("  (row %d, col %d)\n", rc.first, rc.second);
    }
    const bool ok = inv.all_in_row0();
    printf("grayscale invariance outside row 0: %s\n", ok ? "OK" : "VIOLATED");
    return ok ? 0 : 1;
  }

  if (bench_cmd->parsed()) {
    BenchOptions options;
    namespace fs = std::filesystem;
    std::vector<std::string> paths;
    for (const auto& entry : fs::directory_iterator(images_dir)) {
      if (!entry.is_regular_file()) continue;
      const std::string ext = entry.path().extension().string();
      if (ext == ".ppm" || ext == ".png") paths.push_back(entry.path().string());
    }
    std::sort(paths.begin(), paths.end());
    if (paths.empty()) throw IoError("no .ppm/.png images in " + images_dir);
    options.image_paths = paths;
    options.capacities = capacities;
    for (const auto& m : methods)
      options.schemes.push_back(scheme_from_name(m.c_str()));
    options.seed = bench_seed;
    options.threads = bench_threads();
    const auto records = run_bench(options);
    write_bench_csv(csv_path, records);
    int failures = 0;
    for (const auto& r : records) {
      printf("%-12s %-8s %8" PRIu64 " bits  t=(%3d,%3d)  psnr %8.4f dB  %s\n",
             r.image.c_str(), scheme_name(r.scheme), r.capacity_bits, r.t1,
             r.t2, r.psnr_db,
             r.roundtrip_ok && r.invariance_ok ? "ok" : "FAILED");
      if (!r.roundtrip_ok || !r.invariance_ok || r.clamp_violations != 0)
        ++failures;
    }
    printf("wrote %zu rows to %s\n", records.size(), csv_path.c_str());
    return failures == 0 ? 0 : 1;
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
