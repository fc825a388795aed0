#pragma once

#include <cstddef>
#include <span>

namespace msot {

// Kahan compensated summation. Error is O(eps) independent of length.
double kahan_sum(std::span<const double> values);

// Fixed-order pairwise (cascade) summation; bitwise deterministic.
double pairwise_sum(std::span<const double> values);

// Pairwise-summed dot product <a, b>, same determinism contract.
double pairwise_dot(std::span<const double> a, std::span<const double> b);

} // namespace msot
