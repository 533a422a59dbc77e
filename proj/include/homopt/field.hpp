#pragma once

#include "homopt/mesh.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace homopt {

/// One scalar value per interior node per time slice, slice-major.
/// Carrier of u, p, v, f and the target u_T.
struct SpaceTimeField {
    Mesh mesh;
    TimeAxis time;
    std::vector<double> data;

    SpaceTimeField() = default;
    SpaceTimeField(const Mesh& m, const TimeAxis& t)
        : mesh(m), time(t), data(static_cast<size_t>(t.M + 1) * m.interior_count(), 0.0) {}

    int num_slices() const { return time.M + 1; }
    int nodes() const { return mesh.interior_count(); }

    std::span<double> slice(int k) {
        return {data.data() + static_cast<size_t>(k) * nodes(), static_cast<size_t>(nodes())};
    }
    std::span<const double> slice(int k) const {
        return {data.data() + static_cast<size_t>(k) * nodes(), static_cast<size_t>(nodes())};
    }

    bool same_axes(const SpaceTimeField& other) const {
        return mesh.same_grid(other.mesh) && time == other.time;
    }
};

void require_same_axes(const SpaceTimeField& a, const SpaceTimeField& b, const char* where);

/// Immutable node indicator; houses the control-region characteristic
/// function chi_omega.
struct RegionMask {
    std::vector<std::uint8_t> on;
    int count = 0;

    bool empty() const { return count == 0; }
};

/// Rasterizes an open sub-box to the interior nodes strictly inside it.
RegionMask make_box_mask(const Mesh& mesh, const std::array<double, 3>& lo,
                         const std::array<double, 3>& hi);

/// Mask covering every interior node.
RegionMask make_full_mask(const Mesh& mesh);

/// Zeroes a field outside the mask, in place.
void apply_mask(SpaceTimeField& f, const RegionMask& mask);
void apply_mask_slice(std::span<double> slice, const RegionMask& mask);

using SampledFunction = std::function<double(const std::array<double, 3>&, double)>;

/// Evaluates g at every interior node and time slice. Aborts with the node and
/// time location when g produces a non-finite value.
SpaceTimeField sample_function(const Mesh& mesh, const TimeAxis& time, const SampledFunction& g);

/// Node coordinates of interior node with flat index `idx`.
std::array<double, 3> node_coords(const Mesh& mesh, int idx);

// Elementwise helpers used throughout the solvers.
SpaceTimeField zeros_like(const SpaceTimeField& f);
void axpy(double a, const SpaceTimeField& x, SpaceTimeField& y);  // y += a*x
SpaceTimeField subtract(const SpaceTimeField& a, const SpaceTimeField& b);
void scale(SpaceTimeField& f, double c);

}  // namespace homopt
