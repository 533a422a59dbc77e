#pragma once

#include "homopt/mesh.hpp"

#include <span>
#include <vector>

namespace homopt {

/// (2d+1)-point second-order Laplacian with homogeneous Dirichlet boundary,
/// wrapped as the shifted operator x -> shift*x - Lap_h x. Symmetric positive
/// definite for any shift >= 0.
struct EllipticOperator {
    const Mesh* mesh = nullptr;
    double shift = 0.0;

    void apply(std::span<const double> x, std::span<double> out) const;
};

/// Discrete Laplacian Lap_h applied to one interior slice.
std::vector<double> apply_laplacian(const Mesh& mesh, std::span<const double> slice);

struct CgResult {
    int iterations = 0;
    double residual = 0.0;   // relative to ||rhs||
    bool converged = false;
};

/// Preconditioned conjugate gradients (Jacobi) on the SPD operator. x carries
/// the initial guess on entry and the solution on exit.
CgResult cg_solve(const EllipticOperator& op, std::span<const double> rhs,
                  std::span<double> x, double tol, int max_iter);

/// One implicit step solve to relative residual <= tol; throws on iteration
/// cap with the residual in the message.
std::vector<double> implicit_step_solve(const EllipticOperator& op,
                                        std::span<const double> rhs,
                                        double tol = 1e-10, int max_iter = 0);

}  // namespace homopt
