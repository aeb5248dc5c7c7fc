#include "tsc/parallel.hpp"

#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tsc {

namespace {

template <class In, class Out, class Fn>
std::vector<Out> map_batch(std::span<const In> in, Execution exec, Fn fn) {
  std::vector<Out> out(in.size());
  const auto n = static_cast<std::ptrdiff_t>(in.size());
  if (exec == Execution::Serial) {
    for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = fn(in[i]);
    return out;
  }
  // exceptions may not cross the parallel region; the first one is rethrown
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      out[i] = fn(in[i]);
    } catch (...) {
#pragma omp critical(tsc_batch_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace

int parallel_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::vector<char> derives_batch(std::span<const Sequent> sequents, Execution exec) {
  return map_batch<Sequent, char>(sequents, exec, [](const Sequent& s) -> char { return derives(s) ? 1 : 0; });
}

std::vector<World> val_batch(std::span<const Formula> formulas, Execution exec) {
  return map_batch<Formula, World>(formulas, exec, [](const Formula& f) { return val(f); });
}

std::vector<Mnf> normalize_batch(std::span<const Formula> formulas, Execution exec) {
  return map_batch<Formula, Mnf>(formulas, exec, [](const Formula& f) { return normalize(f); });
}

}  // namespace tsc
