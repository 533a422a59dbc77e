#include "homopt/norms.hpp"

#include <cmath>
#include <stdexcept>

namespace homopt {

double time_weight(const TimeAxis& time, int k) {
    const double dt = time.dt();
    return (k == 0 || k == time.M) ? 0.5 * dt : dt;
}

double inner_spacetime(const SpaceTimeField& a, const SpaceTimeField& b) {
    require_same_axes(a, b, "inner_spacetime");
    const double vol = a.mesh.cell_volume();
    double sum = 0.0;
    for (int k = 0; k <= a.time.M; ++k) {
        const auto sa = a.slice(k);
        const auto sb = b.slice(k);
        double s = 0.0;
        for (size_t i = 0; i < sa.size(); ++i) s += sa[i] * sb[i];
        sum += time_weight(a.time, k) * s;
    }
    return vol * sum;
}

double inner_spacetime_masked(const SpaceTimeField& a, const SpaceTimeField& b,
                              const RegionMask& mask) {
    require_same_axes(a, b, "inner_spacetime_masked");
    const double vol = a.mesh.cell_volume();
    double sum = 0.0;
    for (int k = 0; k <= a.time.M; ++k) {
        const auto sa = a.slice(k);
        const auto sb = b.slice(k);
        double s = 0.0;
        for (size_t i = 0; i < sa.size(); ++i)
            if (mask.on[i]) s += sa[i] * sb[i];
        sum += time_weight(a.time, k) * s;
    }
    return vol * sum;
}

double l2_spacetime(const SpaceTimeField& f) { return std::sqrt(inner_spacetime(f, f)); }

double l2_spacetime_masked(const SpaceTimeField& f, const RegionMask& mask) {
    return std::sqrt(inner_spacetime_masked(f, f, mask));
}

double l2_slice(const Mesh& mesh, std::span<const double> slice) {
    double s = 0.0;
    for (double v : slice) s += v * v;
    return std::sqrt(mesh.cell_volume() * s);
}

double l2_slice(const SpaceTimeField& f, int k) {
    if (k < 0 || k > f.time.M) throw std::out_of_range("l2_slice: slice index out of range");
    return l2_slice(f.mesh, f.slice(k));
}

namespace {

std::array<int, 3> interior_strides(const Mesh& mesh) {
    std::array<int, 3> stride{0, 0, 0};
    int s = 1;
    for (int a = mesh.dim - 1; a >= 0; --a) {
        stride[a] = s;
        s *= mesh.interior[a];
    }
    return stride;
}

// Sum of squared one-sided difference quotients between adjacent interior
// nodes; boundary values are not referenced.
double interior_link_energy(const Mesh& mesh, std::span<const double> z) {
    const auto stride = interior_strides(mesh);
    const double vol = mesh.cell_volume();
    double sum = 0.0;
    for (int a = 0; a < mesh.dim; ++a) {
        const double inv_h2 = 1.0 / (mesh.h[a] * mesh.h[a]);
        const int sa = stride[a];
        const int na = mesh.interior[a];
        for (int idx = 0; idx < mesh.interior_count(); ++idx) {
            const int ia = (idx / sa) % na;
            if (ia + 1 < na) {
                const double d = z[idx + sa] - z[idx];
                sum += d * d * inv_h2;
            }
        }
    }
    return vol * sum;
}

}  // namespace

double h1_seminorm_spacetime(const SpaceTimeField& f) {
    double sum = 0.0;
    for (int k = 0; k <= f.time.M; ++k)
        sum += time_weight(f.time, k) * interior_link_energy(f.mesh, f.slice(k));
    return std::sqrt(sum);
}

double dirichlet_energy_slice(const Mesh& mesh, std::span<const double> z) {
    const auto stride = interior_strides(mesh);
    const double vol = mesh.cell_volume();
    double sum = 0.0;
    for (int a = 0; a < mesh.dim; ++a) {
        const double inv_h2 = 1.0 / (mesh.h[a] * mesh.h[a]);
        const int sa = stride[a];
        const int na = mesh.interior[a];
        for (int idx = 0; idx < mesh.interior_count(); ++idx) {
            const int ia = (idx / sa) % na;
            // link to the next interior node, plus the two boundary links
            if (ia + 1 < na) {
                const double d = z[idx + sa] - z[idx];
                sum += d * d * inv_h2;
            } else {
                sum += z[idx] * z[idx] * inv_h2;  // right boundary link
            }
            if (ia == 0) sum += z[idx] * z[idx] * inv_h2;  // left boundary link
        }
    }
    return vol * sum;
}

double h1_dirichlet_spacetime(const SpaceTimeField& f) {
    double sum = 0.0;
    for (int k = 0; k <= f.time.M; ++k)
        sum += time_weight(f.time, k) * dirichlet_energy_slice(f.mesh, f.slice(k));
    return std::sqrt(sum);
}

double max_abs(const SpaceTimeField& f) {
    double m = 0.0;
    for (double v : f.data) m = std::max(m, std::abs(v));
    return m;
}

}  // namespace homopt
