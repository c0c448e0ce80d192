#pragma once

#include <cstdint>
#include <exception>
#include <mutex>

namespace hw {

// Kernels take an Exec: `serial` is the plain-loop reference kept for
// testing; `parallel` runs the same loop body under OpenMP.
enum class Exec { serial, parallel };

// Runs body(i) for i in [0, count). Exceptions thrown by any iteration are
// rethrown (the first one captured) after the loop completes.
template <class Body>
void for_each_index(Exec exec, std::int64_t count, Body&& body) {
  if (exec == Exec::serial) {
    for (std::int64_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::exception_ptr error;
  std::mutex error_mutex;
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      body(i);
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace hw
