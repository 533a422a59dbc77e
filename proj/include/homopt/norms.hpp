#pragma once

#include "homopt/field.hpp"

namespace homopt {

/// Composite-trapezoid weight of time slice k.
double time_weight(const TimeAxis& time, int k);

/// Discrete space-time L2 inner product: trapezoid in time, one dual-cell
/// volume per interior node in space. l2_spacetime is its induced norm.
double inner_spacetime(const SpaceTimeField& a, const SpaceTimeField& b);
double inner_spacetime_masked(const SpaceTimeField& a, const SpaceTimeField& b,
                              const RegionMask& mask);

double l2_spacetime(const SpaceTimeField& f);
double l2_spacetime_masked(const SpaceTimeField& f, const RegionMask& mask);

/// Spatial L2 norm of a single time slice.
double l2_slice(const SpaceTimeField& f, int k);
double l2_slice(const Mesh& mesh, std::span<const double> slice);

/// H1 seminorm over the space-time cylinder using one-sided differences
/// between adjacent interior nodes. Boundary values are not referenced, so a
/// constant field has vanishing seminorm.
double h1_seminorm_spacetime(const SpaceTimeField& f);

/// Dirichlet gradient energy of a slice: sum over all grid links, boundary
/// links included with the implicit zero value. Equals vol * z^T (-Lap_h) z
/// and is the quadratic form behind the tracking term of the cost.
double dirichlet_energy_slice(const Mesh& mesh, std::span<const double> slice);

/// sqrt of the trapezoid-in-time sum of dirichlet_energy_slice.
double h1_dirichlet_spacetime(const SpaceTimeField& f);

double max_abs(const SpaceTimeField& f);

}  // namespace homopt
