#include "homopt/field.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace homopt {

void require_same_axes(const SpaceTimeField& a, const SpaceTimeField& b, const char* where) {
    if (!a.same_axes(b))
        throw std::invalid_argument(std::string(where) + ": fields live on different axes");
}

std::array<double, 3> node_coords(const Mesh& mesh, int idx) {
    std::array<double, 3> x{0.0, 0.0, 0.0};
    int rem = idx;
    // row-major: the last axis varies fastest
    for (int a = mesh.dim - 1; a >= 0; --a) {
        const int i = rem % mesh.interior[a];
        rem /= mesh.interior[a];
        x[a] = mesh.coord(a, i);
    }
    return x;
}

RegionMask make_box_mask(const Mesh& mesh, const std::array<double, 3>& lo,
                         const std::array<double, 3>& hi) {
    RegionMask mask;
    mask.on.assign(mesh.interior_count(), 0);
    for (int idx = 0; idx < mesh.interior_count(); ++idx) {
        const auto x = node_coords(mesh, idx);
        bool inside = true;
        for (int a = 0; a < mesh.dim; ++a)
            if (!(x[a] > lo[a] && x[a] < hi[a])) { inside = false; break; }
        if (inside) {
            mask.on[idx] = 1;
            ++mask.count;
        }
    }
    return mask;
}

RegionMask make_full_mask(const Mesh& mesh) {
    RegionMask mask;
    mask.on.assign(mesh.interior_count(), 1);
    mask.count = mesh.interior_count();
    return mask;
}

void apply_mask_slice(std::span<double> slice, const RegionMask& mask) {
    for (size_t i = 0; i < slice.size(); ++i)
        if (!mask.on[i]) slice[i] = 0.0;
}

void apply_mask(SpaceTimeField& f, const RegionMask& mask) {
    if (mask.on.size() != static_cast<size_t>(f.nodes()))
        throw std::invalid_argument("apply_mask: mask size does not match field");
    for (int k = 0; k <= f.time.M; ++k) apply_mask_slice(f.slice(k), mask);
}

SpaceTimeField sample_function(const Mesh& mesh, const TimeAxis& time,
                               const SampledFunction& g) {
    SpaceTimeField f(mesh, time);
    for (int k = 0; k <= time.M; ++k) {
        const double t = time.t(k);
        auto s = f.slice(k);
        for (int idx = 0; idx < mesh.interior_count(); ++idx) {
            const auto x = node_coords(mesh, idx);
            const double val = g(x, t);
            if (!std::isfinite(val)) {
                char buf[160];
                std::snprintf(buf, sizeof(buf),
                              "sample_function: non-finite value at node %d "
                              "(x = %.6g, %.6g, %.6g), t = %.6g",
                              idx, x[0], x[1], x[2], t);
                throw std::domain_error(buf);
            }
            s[idx] = val;
        }
    }
    return f;
}

SpaceTimeField zeros_like(const SpaceTimeField& f) { return SpaceTimeField(f.mesh, f.time); }

void axpy(double a, const SpaceTimeField& x, SpaceTimeField& y) {
    require_same_axes(x, y, "axpy");
    for (size_t i = 0; i < y.data.size(); ++i) y.data[i] += a * x.data[i];
}

SpaceTimeField subtract(const SpaceTimeField& a, const SpaceTimeField& b) {
    require_same_axes(a, b, "subtract");
    SpaceTimeField out = a;
    for (size_t i = 0; i < out.data.size(); ++i) out.data[i] -= b.data[i];
    return out;
}

void scale(SpaceTimeField& f, double c) {
    for (double& v : f.data) v *= c;
}

}  // namespace homopt
