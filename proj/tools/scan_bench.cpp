// Times the serial error-scan kernel against the OpenMP one on the same
// grid and checks that they produce identical rows.

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "capa/classical.hpp"

namespace {

template <typename F>
double time_run(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(stop - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  capa::Rat step(1, 100);
  if (argc > 1) {
    const long denominator = std::strtol(argv[1], nullptr, 10);
    if (denominator <= 0) {
      std::cerr << "usage: scan_bench [steps-per-degree]\n";
      return 2;
    }
    step = capa::Rat(1, denominator);
  }

  capa::ScanResult serial;
  capa::ScanResult parallel;
  const double t_serial =
      time_run([&] { serial = capa::bhaskara_error_scan(step); });
  const double t_parallel =
      time_run([&] { parallel = capa::bhaskara_error_scan_parallel(step); });

  if (serial.rows.size() != parallel.rows.size()) {
    std::cerr << "row count mismatch: " << serial.rows.size() << " vs "
              << parallel.rows.size() << "\n";
    return 1;
  }
  for (std::size_t i = 0; i < serial.rows.size(); ++i) {
    const capa::ScanRow& a = serial.rows[i];
    const capa::ScanRow& b = parallel.rows[i];
    if (a.x_deg != b.x_deg || a.approx != b.approx || a.exact != b.exact ||
        a.rel_err_percent != b.rel_err_percent) {
      std::cerr << "row " << i << " differs between kernels\n";
      return 1;
    }
  }

  int threads = 1;
#ifdef _OPENMP
#pragma omp parallel
  {
#pragma omp single
    threads = omp_get_num_threads();
  }
#endif

  std::cout << std::fixed << std::setprecision(3);
  std::cout << "rows:      " << serial.rows.size() << "\n";
  std::cout << "threads:   " << threads << "\n";
  std::cout << "serial:    " << t_serial << " s\n";
  std::cout << "parallel:  " << t_parallel << " s\n";
  std::cout << "speedup:   " << t_serial / t_parallel << "x\n";
  std::cout << "max |err|: " << std::setprecision(6)
            << serial.max_abs_rel_err_percent << "% at "
            << capa::to_real(serial.argmax_deg) << " deg\n";
  std::cout << "kernels agree on all rows\n";
  return 0;
}
