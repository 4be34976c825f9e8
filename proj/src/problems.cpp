#include "hydro/problems.hpp"

#include <cmath>

namespace hydro {

namespace {
constexpr double PI = 3.14159265358979323846;
}

PrimVars vortex_prim(const VortexParams& vp, const GasModel& gas, const PatchGeometry& g,
                     double x, double y, double t) {
    // Domain extents and center come from the geometry so that split
    // patches sample the same global profile.
    const double Lx = g.nx * g.dx, Ly = g.ny * g.dy;
    const double cx = g.origin[0] + 0.5 * Lx, cy = g.origin[1] + 0.5 * Ly;

    // Periodic relative coordinates of the advected vortex center.
    double xr = std::remainder(x - vp.u_inf * t - cx, Lx);
    double yr = std::remainder(y - vp.v_inf * t - cy, Ly);
    double r2 = xr * xr + yr * yr;

    double swirl = vp.eps / (2.0 * PI) * std::exp(0.5 * (1.0 - r2));
    double gm1 = gas.gamma - 1.0;
    double dT = -gm1 * vp.eps * vp.eps / (8.0 * gas.gamma * PI * PI) * std::exp(1.0 - r2);

    double T_inf = vp.p_inf / vp.rho_inf;
    double entropy = vp.p_inf / std::pow(vp.rho_inf, gas.gamma);
    double T = T_inf + dT;

    PrimVars q;
    q.rho = std::pow(T / entropy, 1.0 / gm1);
    q.u = vp.u_inf - yr * swirl;
    q.v = vp.v_inf + xr * swirl;
    q.w = vp.w_inf;
    q.p = q.rho * T;
    return q;
}

namespace {

// Zone averages of an analytic primitive profile: midpoint sampling at
// order 2, 2^3 Gauss-Legendre sampling at order 3.
template <typename PrimFn>
SkinnyState sample_profile(const PatchGeometry& g, const GasModel& gas, int order, PrimFn prim) {
    SkinnyState s = SkinnyState::make(g);
    const int gh = g.ghost;
    const double goff = 0.5 / std::sqrt(3.0);  // Gauss point offset in zone units

#pragma omp parallel for collapse(3)
    for (int k = 0; k < g.mz(); ++k)
        for (int j = 0; j < g.my(); ++j)
            for (int i = 0; i < g.mx(); ++i) {
                double xc = g.xc(i - gh), yc = g.yc(j - gh), zc = g.zc(k - gh);
                double u[NVAR] = {0, 0, 0, 0, 0};
                if (order == 2) {
                    ConsVars c = prim_to_cons(prim(xc, yc, zc), gas);
                    c.store(u);
                } else {
                    for (int a = -1; a <= 1; a += 2)
                        for (int b = -1; b <= 1; b += 2)
                            for (int c3 = -1; c3 <= 1; c3 += 2) {
                                ConsVars c = prim_to_cons(prim(xc + a * goff * g.dx,
                                                               yc + b * goff * g.dy,
                                                               zc + c3 * goff * g.dz),
                                                          gas);
                                double w[NVAR];
                                c.store(w);
                                for (int q = 0; q < NVAR; ++q) u[q] += 0.125 * w[q];
                            }
                }
                double* dst = s.zone(k, j, i);
                for (int q = 0; q < NVAR; ++q) dst[q] = u[q];
            }
    return s;
}

}  // namespace

SkinnyState init_isentropic_vortex(const PatchGeometry& g, const GasModel& gas, int order) {
    VortexParams vp;
    return sample_profile(g, gas, order, [&](double x, double y, double) {
        return vortex_prim(vp, gas, g, x, y, 0.0);
    });
}

SkinnyState exact_vortex(const PatchGeometry& g, const GasModel& gas, double t, int order) {
    VortexParams vp;
    return sample_profile(g, gas, order, [&](double x, double y, double) {
        return vortex_prim(vp, gas, g, x, y, t);
    });
}

double vortex_boundary_tail(const PatchGeometry& g) {
    VortexParams vp;
    double half = 0.5 * std::min(g.nx * g.dx, g.ny * g.dy);
    return half * vp.eps / (2.0 * PI) * std::exp(0.5 * (1.0 - half * half));
}

SkinnyState init_constant(const PatchGeometry& g, const GasModel& gas) {
    VortexParams vp;
    PrimVars q{vp.rho_inf, vp.u_inf, vp.v_inf, vp.w_inf, vp.p_inf};
    return sample_profile(g, gas, 2, [&](double, double, double) { return q; });
}

SkinnyState init_sod(const PatchGeometry& g, const GasModel& gas) {
    return sample_profile(g, gas, 2, [&](double x, double, double) {
        if (x < 0.5) return PrimVars{1.0, 0.0, 0.0, 0.0, 1.0};
        return PrimVars{0.125, 0.0, 0.0, 0.0, 0.1};
    });
}

SkinnyState init_problem(Problem problem, const PatchGeometry& g, const GasModel& gas,
                         int order) {
    switch (problem) {
        case Problem::vortex: return init_isentropic_vortex(g, gas, order);
        case Problem::sod: return init_sod(g, gas);
        case Problem::constant: return init_constant(g, gas);
    }
    throw std::invalid_argument("unknown problem");
}

void default_domain(Problem problem, std::array<double, 3>& lo, std::array<double, 3>& hi) {
    if (problem == Problem::sod) {
        lo = {0.0, 0.0, 0.0};
        hi = {1.0, 1.0, 1.0};
    } else {
        lo = {-5.0, -5.0, -5.0};
        hi = {5.0, 5.0, 5.0};
    }
}

double vortex_crossing_time(const PatchGeometry& g) {
    VortexParams vp;
    return g.nx * g.dx / vp.u_inf;
}

}  // namespace hydro
