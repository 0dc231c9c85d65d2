// Times the OpenMP kernels against their serial reference implementations.

#include <chrono>
#include <string>

#include <fmt/core.h>
#ifdef _OPENMP
#include <omp.h>
#endif

#include "ncis/verify.hpp"

using namespace ncis;

namespace {

template <class F>
double time_once(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void row(const std::string& name, double serial, double parallel) {
  fmt::print("{:<42} {:>10.3f} {:>10.3f} {:>8.2f}x\n", name, serial * 1e3,
             parallel * 1e3, serial / parallel);
}

}  // namespace

int main() {
#ifdef _OPENMP
  fmt::print("OpenMP enabled, max threads = {}\n", omp_get_max_threads());
#else
  fmt::print("built without OpenMP; both columns run serially\n");
#endif
  fmt::print("{:<42} {:>10} {:>10} {:>9}\n", "kernel", "serial/ms", "omp/ms", "speedup");

  const AlgebraElement h = hamiltonian_h();
  const AlgebraElement h2 = h.pow(2), h3 = h.pow(3), h4 = h.pow(4);

  {
    volatile std::size_t sink = 0;
    double s = time_once([&] { sink += double_bracket_serial(h2, h2).term_count(); });
    double p = time_once([&] { sink += double_bracket(h2, h2).term_count(); });
    row("double_bracket(h^2, h^2)", s, p);
  }
  {
    volatile std::size_t sink = 0;
    double s = time_once([&] { sink += loday_bracket_serial(h3, h3).term_count(); });
    double p = time_once([&] { sink += loday_bracket(h3, h3).term_count(); });
    row("loday_bracket(h^3, h^3)", s, p);
  }
  {
    volatile std::size_t sink = 0;
    double s =
        time_once([&] { sink += loday_bracket_projected_serial(h4, h4).term_count(); });
    double p = time_once([&] { sink += loday_bracket_projected(h4, h4).term_count(); });
    row("pi(loday_bracket)(h^4, h^4)", s, p);
  }
  {
    SuiteOptions serial_opt{2000, 5, 0, false};
    SuiteOptions parallel_opt{2000, 5, 0, true};
    volatile bool sink = true;
    double s = time_once([&] { sink = sink && run_jacobi_suite(serial_opt).pass; });
    double p = time_once([&] { sink = sink && run_jacobi_suite(parallel_opt).pass; });
    row("jacobi suite, 2000 samples", s, p);
  }
  return 0;
}
