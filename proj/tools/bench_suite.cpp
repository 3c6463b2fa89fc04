// Compares the serial reference path of the suite kernels against the
// OpenMP path and reports per-kernel timings and speedups.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "shilov/suite.hpp"

namespace {

double run_filtered(const std::string& filter, int threads, int samples) {
  shilov::suite::SuiteConfig config;
  config.seed = 42;
  config.threads = threads;
  config.sample_override = samples;
  config.filters = {filter};
  const auto start = std::chrono::steady_clock::now();
  const auto report = shilov::suite::run_suite(config);
  const auto stop = std::chrono::steady_clock::now();
  if (!report.overall_pass) std::fprintf(stderr, "warning: %s failed\n", filter.c_str());
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  int samples = 2000;
  if (argc > 1) samples = std::atoi(argv[1]);
#ifdef _OPENMP
  const int hw = omp_get_max_threads();
#else
  const int hw = 1;
#endif
  std::printf("sample override: %d, parallel threads: %d\n", samples, hw);
  std::printf("%-36s %12s %12s %9s\n", "kernel", "serial (ms)", "openmp (ms)",
              "speedup");

  const std::vector<std::string> kernels = {
      "acceptance/02_spectral_reconstruction",
      "acceptance/03_shilov_double",
      "acceptance/05_foll_bracket",
      "acceptance/07_cayley_shilov_n",
      "acceptance/08_hull",
      "acceptance/09_heis3",
  };
  for (const auto& kernel : kernels) {
    run_filtered(kernel, 1, 64);  // warm up allocators and static tables
    const double serial = run_filtered(kernel, 1, samples);
    const double parallel = run_filtered(kernel, 0, samples);
    std::printf("%-36s %12.1f %12.1f %8.2fx\n", kernel.c_str(), serial,
                parallel, serial / parallel);
  }
  return 0;
}
