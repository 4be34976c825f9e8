#pragma once

#include "hydro/boundary.hpp"
#include "hydro/euler.hpp"
#include "hydro/fields.hpp"

namespace hydro {

enum class Problem { vortex, sod, constant };

// Isentropic vortex: free stream (rho,u,v,w,p) = (1,1,1,0,1) plus a
// columnar perturbation of strength eps = 5 centered mid-domain,
//   d(u,v) = eps/(2pi) * exp((1-r^2)/2) * (-y', x')
//   dT     = -(gamma-1) eps^2 / (8 gamma pi^2) * exp(1-r^2)
// with uniform entropy, so rho = T^(1/(gamma-1)) and p = T^(gamma/(gamma-1)).
// The profile advects with the free stream, which makes the exact solution
// at time t the wrapped translate of the initial one.
struct VortexParams {
    double eps = 5.0;
    double rho_inf = 1.0, u_inf = 1.0, v_inf = 1.0, w_inf = 0.0, p_inf = 1.0;
};

PrimVars vortex_prim(const VortexParams& vp, const GasModel& gas, const PatchGeometry& g,
                     double x, double y, double t);

// Zone averages by midpoint sampling at order 2 and 2^3 Gauss sampling at
// order 3.
SkinnyState init_isentropic_vortex(const PatchGeometry& g, const GasModel& gas, int order);
SkinnyState exact_vortex(const PatchGeometry& g, const GasModel& gas, double t, int order);

// Largest velocity-perturbation magnitude on the domain boundary; used to
// warn when the periodic box clips a non-negligible vortex tail.
double vortex_boundary_tail(const PatchGeometry& g);

SkinnyState init_constant(const PatchGeometry& g, const GasModel& gas);
SkinnyState init_sod(const PatchGeometry& g, const GasModel& gas);

SkinnyState init_problem(Problem problem, const PatchGeometry& g, const GasModel& gas,
                         int order);

inline BoundaryKind boundary_for(Problem problem) {
    return problem == Problem::sod ? BoundaryKind::outflow : BoundaryKind::periodic;
}

// Default domain: [-5,5]^3 for the periodic problems, [0,1]^3 for sod.
void default_domain(Problem problem, std::array<double, 3>& lo, std::array<double, 3>& hi);

// One periodic crossing of the free stream (the default stopping time for
// the vortex).
double vortex_crossing_time(const PatchGeometry& g);

}  // namespace hydro
