// Serial vs OpenMP timings for the batch kernels.
//
//   bench_kernels [n]    n = framing parameter of the theta batch (default 4000)

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>
#include <string>

#include "csurg/kernels.hpp"

using namespace csurg;

namespace {

template <typename F>
double seconds(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

template <typename F>
void compare(const std::string& name, F&& f) {
  decltype(f(Exec::serial)) serial_out, parallel_out;
  const double ts = seconds([&] { serial_out = f(Exec::serial); });
  const double tp = seconds([&] { parallel_out = f(Exec::parallel); });
  std::cout << name << "  serial " << ts << " s  parallel " << tp << " s  speedup " << (tp > 0 ? ts / tp : 0.0)
            << "  identical " << (serial_out == parallel_out ? "yes" : "NO") << std::endl;
}

}  // namespace

int main(int argc, char** argv) {
  const long n = argc > 1 ? std::atol(argv[1]) : 4000;
  std::cout << "threads " << max_threads() << std::endl;

  const BraidWord knot = parse_braid("B3 s1^7 s2^-1");

  // theta over a 2/7-style chain with large menus: slope 2/(2n+1) has chain [-(n+1), -2].
  const SlopeVector wide{{make_rational(2, 2 * n + 1)}};
  const WeinsteinEnumeration e = enumerate_weinstein(knot, wide);
  const auto count = e.count().get_ui();
  compare("theta_batch(" + std::to_string(count) + ")", [&](Exec x) { return theta_batch(e, 0, count, x); });
  compare("rotation_tuple_batch(" + std::to_string(count) + ")",
          [&](Exec x) { return rotation_tuple_batch(e, 0, count, x); });

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> qdist(2, 60);
  std::vector<SlopeVector> slopes;
  for (int i = 0; i < 2000; ++i) {
    const long q = qdist(rng);
    std::uniform_int_distribution<long> pdist(1, 5 * q);
    slopes.push_back({{make_rational(pdist(rng), q)}});
  }
  compare("expanded_determinants(2000)", [&](Exec x) { return expanded_determinants(knot, slopes, x); });
  return 0;
}
