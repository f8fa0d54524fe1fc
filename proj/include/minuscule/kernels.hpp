#pragma once

// Arithmetic kernels with a serial reference and an OpenMP variant each.
// The reference versions are the plain textbook loops and exist so tests and
// the benchmark can check the parallel ones against them.

#include <cstddef>
#include <span>
#include <vector>

#include "minuscule/rational.hpp"

namespace minuscule::kernels {

/// Coefficient convolution over Q, one mpq product per term.
std::vector<Rat> convolve_reference(std::span<const Rat> a, std::span<const Rat> b);

/// Same result: lifts both operands to a common integer scale and
/// parallelizes over output coefficients.
std::vector<Rat> convolve_parallel(std::span<const Rat> a, std::span<const Rat> b);

std::vector<Int> convolve_reference(std::span<const Int> a, std::span<const Int> b);
std::vector<Int> convolve_parallel(std::span<const Int> a, std::span<const Int> b);

/// Dispatcher used by Poly multiplication.
std::vector<Rat> convolve(std::span<const Rat> a, std::span<const Rat> b);

/// Operand size (shorter side) at which convolve() switches to the parallel path.
inline constexpr std::size_t kParallelConvolveThreshold = 24;

}  // namespace minuscule::kernels
