#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace msot {

// Ground cost C(x, y) = (1/p) * ||x - y||^p with exponent p in [1, 2].
struct CostSpec {
    double p = 2.0;

    void validate() const;
};

double cost(std::span<const double> x, std::span<const double> y, const CostSpec& spec);

// A weighted point cloud in R^D: atoms (x_i, w_i) with w_i > 0.
// Atoms with weight exactly zero are dropped at construction so that
// log-weights are always finite. Immutable once built.
class DiscreteMeasure {
public:
    // points: row-major N x dim coordinates; weights: N nonnegative masses.
    DiscreteMeasure(std::vector<double> points, std::vector<double> weights, std::size_t dim);

    std::size_t size() const { return weights_.size(); }
    std::size_t dim() const { return dim_; }

    std::span<const double> point(std::size_t i) const {
        return {points_.data() + i * dim_, dim_};
    }
    std::span<const double> points() const { return points_; }
    std::span<const double> weights() const { return weights_; }
    std::span<const double> log_weights() const { return log_weights_; }
    double total_mass() const { return total_mass_; }

    // Same atoms with new coordinates (used by barycenter descent).
    DiscreteMeasure with_points(std::vector<double> points) const;

    // Atoms reordered by `order` (a permutation of 0..N-1).
    DiscreteMeasure permuted(std::span<const std::size_t> order) const;

private:
    std::vector<double> points_;
    std::vector<double> weights_;
    std::vector<double> log_weights_;
    std::size_t dim_ = 0;
    double total_mass_ = 0.0;
};

// An ordered 3D polyline with at least two vertices.
using Polyline = std::vector<std::array<double, 3>>;

struct FiberSet {
    std::vector<Polyline> fibers;
    int resample_count = 20; // points per fiber after arc-length resampling
};

// Resamples every fiber to P points at equal arc length, flattens to a
// 3P-dimensional atom scaled by 1/sqrt(P), and assigns uniform weights 1/N.
DiscreteMeasure encode_fibers(const FiberSet& fs);

// Bookkeeping for mirror-flip augmentation: atoms [0, originals) are the
// input fibers in order, atoms [originals, 2*originals) their reversals.
struct FlipMap {
    std::size_t originals = 0;

    std::size_t original_of(std::size_t augmented) const {
        return augmented < originals ? augmented : augmented - originals;
    }
    bool is_flipped(std::size_t augmented) const { return augmented >= originals; }
};

struct AugmentedMeasure {
    DiscreteMeasure measure;
    FlipMap map;
};

// Appends the point-order reversal of every fiber atom and halves all
// weights so total mass is preserved. Atom dimension must equal 3 * P.
AugmentedMeasure flip_augment(const DiscreteMeasure& m, int P);

struct DensityVoxel {
    int i = 0, j = 0, k = 0;
    double value = 0.0;
};

// Sparse voxel grid of nonnegative densities, in mm coordinates.
struct DensityMap {
    int nx = 0, ny = 0, nz = 0;
    double voxel_mm = 1.0;
    std::array<double, 3> origin{0.0, 0.0, 0.0};
    std::vector<DensityVoxel> voxels;
};

// One atom per nonzero voxel, placed at the voxel center, weights
// normalized to total mass 1 (compensated summation).
DiscreteMeasure density_to_measure(const DensityMap& d);

} // namespace msot
