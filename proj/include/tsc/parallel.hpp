#pragma once

// Batch kernels. Each has an OpenMP path and a serial reference path that
// must produce identical output; the benchmark target compares the two.

#include <span>
#include <vector>

#include "tsc/formula.hpp"
#include "tsc/frame.hpp"
#include "tsc/normalform.hpp"

namespace tsc {

enum class Execution { Serial, Parallel };

/// Threads the parallel path will use (1 when built without OpenMP).
int parallel_threads();

std::vector<char> derives_batch(std::span<const Sequent> sequents, Execution exec);
std::vector<World> val_batch(std::span<const Formula> formulas, Execution exec);
std::vector<Mnf> normalize_batch(std::span<const Formula> formulas, Execution exec);

}  // namespace tsc
