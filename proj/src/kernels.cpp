#include "csurg/kernels.hpp"

#include <omp.h>

#include <exception>

#include "csurg/errors.hpp"

namespace csurg {

namespace {

// Runs body(i) for i in [0, n). Exceptions thrown inside the parallel region
// are captured and the first one is rethrown afterwards.
template <typename Body>
void run(std::int64_t n, Exec exec, Body&& body) {
  if (exec == Exec::serial) {
    for (std::int64_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      body(i);
    } catch (...) {
#pragma omp critical(csurg_kernel_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

void check_range(const WeinsteinEnumeration& e, std::uint64_t first, std::uint64_t count) {
  const Integer end = Integer(static_cast<unsigned long>(first)) + static_cast<unsigned long>(count);
  if (end > e.count()) throw DomainError("batch runs past the end of the enumeration");
}

}  // namespace

int max_threads() { return omp_get_max_threads(); }

std::vector<ThetaReport> theta_batch(const WeinsteinEnumeration& e, std::uint64_t first, std::uint64_t count,
                                     Exec exec) {
  check_range(e, first, count);
  const ThetaContext ctx = theta_context(e.base());
  std::vector<ThetaReport> out(count);
  run(static_cast<std::int64_t>(count), exec, [&](std::int64_t i) {
    const auto idx = first + static_cast<std::uint64_t>(i);
    out[static_cast<std::size_t>(i)] = theta(e.at(idx), ctx);
  });
  return out;
}

std::vector<WeinsteinDiagram> weinstein_batch(const WeinsteinEnumeration& e, std::uint64_t first, std::uint64_t count,
                                              Exec exec) {
  check_range(e, first, count);
  std::vector<WeinsteinDiagram> out(count, WeinsteinDiagram{e.base(), {}, {}});
  run(static_cast<std::int64_t>(count), exec, [&](std::int64_t i) {
    out[static_cast<std::size_t>(i)] = e.at(first + static_cast<std::uint64_t>(i));
  });
  return out;
}

std::vector<std::vector<std::int64_t>> rotation_tuple_batch(const WeinsteinEnumeration& e, std::uint64_t first,
                                                            std::uint64_t count, Exec exec) {
  check_range(e, first, count);
  std::vector<std::vector<std::int64_t>> out(count);
  run(static_cast<std::int64_t>(count), exec, [&](std::int64_t i) {
    out[static_cast<std::size_t>(i)] = e.at(first + static_cast<std::uint64_t>(i)).rotation_tuple;
  });
  return out;
}

std::vector<Integer> expanded_determinants(const BraidWord& beta, const std::vector<SlopeVector>& slopes, Exec exec) {
  std::vector<Integer> out(slopes.size());
  run(static_cast<std::int64_t>(slopes.size()), exec, [&](std::int64_t i) {
    const auto k = static_cast<std::size_t>(i);
    out[k] = determinant(linking_matrix(slam_dunk_expand(rational_surgery(beta, slopes[k]))));
  });
  return out;
}

}  // namespace csurg
