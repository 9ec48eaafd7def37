#pragma once

// Data-parallel kernels. Each OpenMP kernel has a serial reference kept for
// tests and benchmarks; both must return identical results.

#include <cstddef>
#include <span>

#include "softdx/fuzzify.hpp"
#include "softdx/rules.hpp"

namespace softdx::kernels {

FuzzyTable fuzzify_serial(std::span<const PatientRecord> records, const VariableConfig& config);
FuzzyTable fuzzify_parallel(std::span<const PatientRecord> records, const VariableConfig& config);

// Walks the product with an odometer, reusing prefix intersections.
RuleSet enumerate_serial(const RuleSpace& space);

// Intersects candidates block by block in parallel, then prunes and
// deduplicates each block in id order.
inline constexpr std::size_t kDefaultEnumerateBlock = std::size_t{1} << 16;
RuleSet enumerate_parallel(const RuleSpace& space, std::size_t block_size = kDefaultEnumerateBlock);

}  // namespace softdx::kernels
