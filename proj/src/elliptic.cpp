#include "homopt/elliptic.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace homopt {

namespace {

struct StencilGeometry {
    std::array<int, 3> stride{0, 0, 0};
    std::array<int, 3> n{1, 1, 1};
    std::array<double, 3> inv_h2{0.0, 0.0, 0.0};
    int dim = 0;
    double diag = 0.0;  // sum of 2/h_a^2
};

StencilGeometry stencil_geometry(const Mesh& mesh) {
    StencilGeometry g;
    g.dim = mesh.dim;
    int s = 1;
    for (int a = mesh.dim - 1; a >= 0; --a) {
        g.stride[a] = s;
        s *= mesh.interior[a];
        g.n[a] = mesh.interior[a];
        g.inv_h2[a] = 1.0 / (mesh.h[a] * mesh.h[a]);
    }
    for (int a = 0; a < mesh.dim; ++a) g.diag += 2.0 * g.inv_h2[a];
    return g;
}

}  // namespace

void EllipticOperator::apply(std::span<const double> x, std::span<double> out) const {
    const auto g = stencil_geometry(*mesh);
    const double c = shift + g.diag;
    const int total = mesh->interior_count();
    for (int idx = 0; idx < total; ++idx) out[idx] = c * x[idx];
    for (int a = 0; a < g.dim; ++a) {
        const int sa = g.stride[a];
        const int na = g.n[a];
        const double w = g.inv_h2[a];
        for (int idx = 0; idx < total; ++idx) {
            const int ia = (idx / sa) % na;
            if (ia > 0) out[idx] -= w * x[idx - sa];
            if (ia + 1 < na) out[idx] -= w * x[idx + sa];
        }
    }
}

std::vector<double> apply_laplacian(const Mesh& mesh, std::span<const double> slice) {
    EllipticOperator op{&mesh, 0.0};
    std::vector<double> out(slice.size());
    op.apply(slice, out);           // out = -Lap_h slice
    for (double& v : out) v = -v;
    return out;
}

CgResult cg_solve(const EllipticOperator& op, std::span<const double> rhs,
                  std::span<double> x, double tol, int max_iter) {
    const int n = static_cast<int>(rhs.size());
    if (max_iter <= 0) max_iter = std::max(200, 10 * n);

    const auto geo = stencil_geometry(*op.mesh);
    const double inv_diag = 1.0 / (op.shift + geo.diag);

    double bnorm = 0.0;
    for (double v : rhs) bnorm += v * v;
    bnorm = std::sqrt(bnorm);
    if (bnorm == 0.0) {
        for (double& v : x) v = 0.0;
        return CgResult{0, 0.0, true};
    }

    std::vector<double> r(n), z(n), p(n), Ap(n);
    op.apply(x, std::span<double>(Ap));
    for (int i = 0; i < n; ++i) r[i] = rhs[i] - Ap[i];
    for (int i = 0; i < n; ++i) z[i] = inv_diag * r[i];
    p.assign(z.begin(), z.end());

    double rz = 0.0;
    for (int i = 0; i < n; ++i) rz += r[i] * z[i];

    CgResult res;
    for (int it = 0; it < max_iter; ++it) {
        double rnorm = 0.0;
        for (double v : r) rnorm += v * v;
        rnorm = std::sqrt(rnorm);
        res.residual = rnorm / bnorm;
        res.iterations = it;
        if (res.residual <= tol) {
            res.converged = true;
            return res;
        }
        op.apply(p, std::span<double>(Ap));
        double pAp = 0.0;
        for (int i = 0; i < n; ++i) pAp += p[i] * Ap[i];
        const double alpha = rz / pAp;
        for (int i = 0; i < n; ++i) x[i] += alpha * p[i];
        for (int i = 0; i < n; ++i) r[i] -= alpha * Ap[i];
        for (int i = 0; i < n; ++i) z[i] = inv_diag * r[i];
        double rz_next = 0.0;
        for (int i = 0; i < n; ++i) rz_next += r[i] * z[i];
        const double beta = rz_next / rz;
        rz = rz_next;
        for (int i = 0; i < n; ++i) p[i] = z[i] + beta * p[i];
    }

    double rnorm = 0.0;
    for (double v : r) rnorm += v * v;
    res.residual = std::sqrt(rnorm) / bnorm;
    res.iterations = max_iter;
    res.converged = res.residual <= tol;
    return res;
}

std::vector<double> implicit_step_solve(const EllipticOperator& op,
                                        std::span<const double> rhs, double tol,
                                        int max_iter) {
    std::vector<double> x(rhs.size(), 0.0);
    const CgResult res = cg_solve(op, rhs, x, tol, max_iter);
    if (!res.converged) {
        char buf[128];
        std::snprintf(buf, sizeof(buf),
                      "implicit_step_solve: CG hit the iteration cap (%d) at residual %.3e",
                      res.iterations, res.residual);
        throw std::runtime_error(buf);
    }
    return x;
}

}  // namespace homopt
