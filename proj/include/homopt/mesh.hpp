#pragma once

#include <array>
#include <span>

namespace homopt {

/// Structured box grid with homogeneous Dirichlet boundary. Field data lives
/// on the interior nodes only; any node whose index is 0 or nodes-1 along an
/// axis is a boundary node and carries the value 0 implicitly.
struct Mesh {
    int dim = 0;
    std::array<int, 3> nodes{1, 1, 1};      // nodes per axis, boundary included
    std::array<double, 3> lo{0.0, 0.0, 0.0};
    std::array<double, 3> hi{1.0, 1.0, 1.0};
    std::array<double, 3> h{0.0, 0.0, 0.0};
    std::array<int, 3> interior{1, 1, 1};   // interior node count per axis

    int interior_count() const {
        int n = 1;
        for (int a = 0; a < dim; ++a) n *= interior[a];
        return n;
    }

    /// Volume of the dual cell attached to each interior node.
    double cell_volume() const {
        double v = 1.0;
        for (int a = 0; a < dim; ++a) v *= h[a];
        return v;
    }

    /// Coordinate of interior node `i` (0-based in the interior numbering)
    /// along `axis`.
    double coord(int axis, int i) const { return lo[axis] + (i + 1) * h[axis]; }

    bool same_grid(const Mesh& other) const {
        if (dim != other.dim) return false;
        for (int a = 0; a < dim; ++a) {
            if (nodes[a] != other.nodes[a]) return false;
            if (lo[a] != other.lo[a] || hi[a] != other.hi[a]) return false;
        }
        return true;
    }
};

struct BoxExtents {
    std::array<double, 3> lo{0.0, 0.0, 0.0};
    std::array<double, 3> hi{1.0, 1.0, 1.0};
};

/// Builds a mesh over an axis-aligned box. d must be 1, 2 or 3 and every axis
/// needs at least 3 nodes so that the interior is nonempty.
Mesh build_mesh(int d, std::span<const int> nodes_per_axis,
                const BoxExtents& box = BoxExtents{});

Mesh build_mesh(int d, int nodes_per_axis, const BoxExtents& box = BoxExtents{});

/// Uniform partition of [0, T] into M steps; slice k sits at t_k = k*dt.
struct TimeAxis {
    double T = 1.0;
    int M = 1;

    double dt() const { return T / M; }
    double t(int k) const { return (k == M) ? T : k * dt(); }

    bool operator==(const TimeAxis& other) const {
        return T == other.T && M == other.M;
    }
};

TimeAxis make_time_axis(double T, int M);

}  // namespace homopt
