#include "homopt/mesh.hpp"

#include <stdexcept>
#include <string>

namespace homopt {

Mesh build_mesh(int d, std::span<const int> nodes_per_axis, const BoxExtents& box) {
    if (d < 1 || d > 3)
        throw std::invalid_argument("build_mesh: dimension must be 1, 2 or 3, got " +
                                    std::to_string(d));
    if (nodes_per_axis.size() != static_cast<size_t>(d) && nodes_per_axis.size() != 1)
        throw std::invalid_argument("build_mesh: need one node count per axis");

    Mesh m;
    m.dim = d;
    for (int a = 0; a < d; ++a) {
        const int n = nodes_per_axis[nodes_per_axis.size() == 1 ? 0 : a];
        if (n < 3)
            throw std::invalid_argument("build_mesh: axis " + std::to_string(a) +
                                        " needs at least 3 nodes, got " + std::to_string(n));
        const double extent = box.hi[a] - box.lo[a];
        if (!(extent > 0.0))
            throw std::invalid_argument("build_mesh: axis " + std::to_string(a) +
                                        " has non-positive extent");
        m.nodes[a] = n;
        m.lo[a] = box.lo[a];
        m.hi[a] = box.hi[a];
        m.h[a] = extent / (n - 1);
        m.interior[a] = n - 2;
    }
    return m;
}

Mesh build_mesh(int d, int nodes_per_axis, const BoxExtents& box) {
    const int n[1] = {nodes_per_axis};
    return build_mesh(d, std::span<const int>(n, 1), box);
}

TimeAxis make_time_axis(double T, int M) {
    if (!(T > 0.0)) throw std::invalid_argument("make_time_axis: T must be positive");
    if (M < 1) throw std::invalid_argument("make_time_axis: need at least one step");
    return TimeAxis{T, M};
}

}  // namespace homopt
