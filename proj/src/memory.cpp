#include "homopt/memory.hpp"

#include "homopt/norms.hpp"

#include <cmath>
#include <stdexcept>

namespace homopt {

MemoryStepWeights memory_step_weights(double B, double dt) {
    if (!(B > 0.0)) throw std::invalid_argument("memory operator: kernel rate B must be positive");
    if (!(dt > 0.0)) throw std::invalid_argument("memory operator: dt must be positive");
    const double decay = std::exp(-B * dt);
    // -expm1 keeps the gain accurate for small B*dt
    return MemoryStepWeights{decay, -std::expm1(-B * dt) / B};
}

void step_H(MemoryAccumulator& acc, std::span<const double> u_next, double dt) {
    if (u_next.size() != acc.current.size())
        throw std::invalid_argument("step_H: slice size does not match accumulator");
    const auto w = memory_step_weights(acc.B, dt);
    for (size_t i = 0; i < acc.current.size(); ++i)
        acc.current[i] = w.decay * acc.current[i] + w.gain * u_next[i];
    ++acc.k;
}

SpaceTimeField apply_H(const SpaceTimeField& phi, double B) {
    SpaceTimeField out(phi.mesh, phi.time);
    const double dt = phi.time.dt();
    MemoryAccumulator acc(B, phi.nodes());
    for (int k = 1; k <= phi.time.M; ++k) {
        step_H(acc, phi.slice(k), dt);
        auto s = out.slice(k);
        for (int i = 0; i < phi.nodes(); ++i) s[i] = acc.current[i];
    }
    return out;
}

SpaceTimeField apply_H_star(const SpaceTimeField& psi, double B) {
    SpaceTimeField out(psi.mesh, psi.time);
    const auto w = memory_step_weights(B, psi.time.dt());
    // (H*)^k = decay * (H*)^{k+1} + gain * psi^k, (H*)^M = 0
    for (int k = psi.time.M - 1; k >= 0; --k) {
        const auto next = out.slice(k + 1);
        const auto src = psi.slice(k);
        auto s = out.slice(k);
        for (int i = 0; i < psi.nodes(); ++i) s[i] = w.decay * next[i] + w.gain * src[i];
    }
    return out;
}

SpaceTimeField apply_H_star_adjoint(const SpaceTimeField& psi, double B) {
    // Transpose of the lower-triangular H map in the weighted inner product:
    //   (H*_adj psi)^j = gain / w_j * sum_{k >= j} decay^{k-j} w_k psi^k,  j >= 1
    // computed by the backward recurrence S^j = decay * S^{j+1} + w_j psi^j.
    // Slice 0 never feeds the forward recurrence, so its transpose image is 0.
    SpaceTimeField out(psi.mesh, psi.time);
    const int M = psi.time.M;
    const auto w = memory_step_weights(B, psi.time.dt());
    std::vector<double> S(psi.nodes(), 0.0);
    for (int j = M; j >= 1; --j) {
        const double wj = time_weight(psi.time, j);
        const auto src = psi.slice(j);
        auto s = out.slice(j);
        for (int i = 0; i < psi.nodes(); ++i) {
            S[i] = w.decay * S[i] + wj * src[i];
            s[i] = w.gain * S[i] / wj;
        }
    }
    return out;
}

SpaceTimeField dH_dt(const SpaceTimeField& Hfield, const SpaceTimeField& phi, double B) {
    require_same_axes(Hfield, phi, "dH_dt");
    SpaceTimeField out = phi;
    for (size_t i = 0; i < out.data.size(); ++i) out.data[i] -= B * Hfield.data[i];
    return out;
}

}  // namespace homopt
