#pragma once

#include "homopt/field.hpp"

#include <vector>

namespace homopt {

/// Running value of the memory operator H along a forward time march.
/// H solves dH/dt + B*H = u with H(0) = 0; the march uses the
/// exponential-Euler recurrence
///     H^{k+1} = e^{-B*dt} H^k + (1 - e^{-B*dt})/B * u^{k+1},
/// which is unconditionally stable and exact for input constant over a step.
struct MemoryAccumulator {
    double B = 1.0;
    int k = 0;
    std::vector<double> current;

    MemoryAccumulator(double rate, int nodes)
        : B(rate), current(static_cast<size_t>(nodes), 0.0) {}
};

/// Recurrence weights for one step of size dt.
struct MemoryStepWeights {
    double decay;   // e^{-B*dt}
    double gain;    // (1 - e^{-B*dt}) / B
};
MemoryStepWeights memory_step_weights(double B, double dt);

/// Advances the accumulator by one step with right-endpoint sample u_next.
void step_H(MemoryAccumulator& acc, std::span<const double> u_next, double dt);

/// H(phi)(x,t) = int_0^t exp(-B (t - tau)) phi(x, tau) dtau, slice 0 zero.
SpaceTimeField apply_H(const SpaceTimeField& phi, double B);

/// Continuous-adjoint discretization of
/// H*(psi)(x,t) = int_t^T exp(B (t - tau)) psi(x, tau) dtau, slice M zero;
/// backward recurrence mirroring apply_H. First-order consistent.
SpaceTimeField apply_H_star(const SpaceTimeField& psi, double B);

/// Exact algebraic transpose of the apply_H map with respect to the discrete
/// space-time inner product of inner_spacetime, so that
/// <H phi, psi> = <phi, H*_adj psi> holds to round-off at any dt.
SpaceTimeField apply_H_star_adjoint(const SpaceTimeField& psi, double B);

/// dH/dt recovered through the defining ODE: returns phi - B*H pointwise.
SpaceTimeField dH_dt(const SpaceTimeField& Hfield, const SpaceTimeField& phi, double B);

}  // namespace homopt
