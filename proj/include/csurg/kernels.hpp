#pragma once

#include <cstdint>
#include <vector>

#include "csurg/legendrian.hpp"

namespace csurg {

/// Batch kernels. `serial` is the reference loop; `parallel` splits the same
/// loop across OpenMP threads and must produce identical output.
enum class Exec { serial, parallel };

/// Threads an OpenMP parallel region would use.
int max_threads();

/// theta for diagrams first .. first + count - 1 of an enumeration.
std::vector<ThetaReport> theta_batch(const WeinsteinEnumeration& e, std::uint64_t first, std::uint64_t count,
                                     Exec exec);

/// Diagrams first .. first + count - 1.
std::vector<WeinsteinDiagram> weinstein_batch(const WeinsteinEnumeration& e, std::uint64_t first, std::uint64_t count,
                                              Exec exec);

/// Rotation tuples for diagrams first .. first + count - 1.
std::vector<std::vector<std::int64_t>> rotation_tuple_batch(const WeinsteinEnumeration& e, std::uint64_t first,
                                                            std::uint64_t count, Exec exec);

/// det of the slam-dunk expanded linking matrix for each slope vector.
std::vector<Integer> expanded_determinants(const BraidWord& beta, const std::vector<SlopeVector>& slopes, Exec exec);

}  // namespace csurg
