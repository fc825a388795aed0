#include "msot/numeric.hpp"

#include <cmath>

namespace msot {

double kahan_sum(std::span<const double> values) {
    double sum = 0.0;
    double carry = 0.0;
    for (double v : values) {
        const double y = v - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    return sum;
}

namespace {

double pairwise_block(const double* data, std::size_t n) {
    if (n <= 32) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += data[i];
        return s;
    }
    const std::size_t half = n / 2;
    return pairwise_block(data, half) + pairwise_block(data + half, n - half);
}

double pairwise_dot_block(const double* a, const double* b, std::size_t n) {
    if (n <= 32) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
        return s;
    }
    const std::size_t half = n / 2;
    return pairwise_dot_block(a, b, half) + pairwise_dot_block(a + half, b + half, n - half);
}

} // namespace

double pairwise_sum(std::span<const double> values) {
    return pairwise_block(values.data(), values.size());
}

double pairwise_dot(std::span<const double> a, std::span<const double> b) {
    return pairwise_dot_block(a.data(), b.data(), a.size() < b.size() ? a.size() : b.size());
}

} // namespace msot
