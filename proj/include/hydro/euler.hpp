#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "hydro/geometry.hpp"

namespace hydro {

struct GasModel {
    double gamma = 1.4;
};

struct ConsVars {
    double rho = 0.0;
    double mx = 0.0, my = 0.0, mz = 0.0;
    double E = 0.0;

    static ConsVars from(const double* u) { return {u[0], u[1], u[2], u[3], u[4]}; }
    void store(double* u) const { u[0] = rho; u[1] = mx; u[2] = my; u[3] = mz; u[4] = E; }
};

struct PrimVars {
    double rho = 0.0;
    double u = 0.0, v = 0.0, w = 0.0;
    double p = 0.0;
};

// Raised when a state with non-positive density or pressure is encountered.
// The message carries whatever zone/face context the caller attached.
struct unphysical_error : std::runtime_error {
    explicit unphysical_error(const std::string& what) : std::runtime_error(what) {}
};

inline PrimVars cons_to_prim(const ConsVars& c, const GasModel& gas) {
    if (!(c.rho > 0.0))
        throw unphysical_error("non-positive density " + std::to_string(c.rho));
    double inv_rho = 1.0 / c.rho;
    PrimVars q;
    q.rho = c.rho;
    q.u = c.mx * inv_rho;
    q.v = c.my * inv_rho;
    q.w = c.mz * inv_rho;
    q.p = (gas.gamma - 1.0) * (c.E - 0.5 * (c.mx * q.u + c.my * q.v + c.mz * q.w));
    if (!(q.p > 0.0))
        throw unphysical_error("non-positive pressure " + std::to_string(q.p));
    return q;
}

inline ConsVars prim_to_cons(const PrimVars& q, const GasModel& gas) {
    ConsVars c;
    c.rho = q.rho;
    c.mx = q.rho * q.u;
    c.my = q.rho * q.v;
    c.mz = q.rho * q.w;
    c.E = q.p / (gas.gamma - 1.0) + 0.5 * q.rho * (q.u * q.u + q.v * q.v + q.w * q.w);
    return c;
}

inline double sound_speed(const PrimVars& q, const GasModel& gas) {
    return std::sqrt(gas.gamma * q.p / q.rho);
}

inline double velocity_along(const PrimVars& q, Axis a) {
    return a == Axis::x ? q.u : (a == Axis::y ? q.v : q.w);
}

// Euler flux along the given axis; e.g. along x:
// (rho u, rho u^2 + p, rho u v, rho u w, u (E + p)).
inline std::array<double, 5> physical_flux(const ConsVars& c, Axis a, const GasModel& gas) {
    PrimVars q = cons_to_prim(c, gas);
    double un = velocity_along(q, a);
    std::array<double, 5> f;
    f[0] = c.rho * un;
    f[1] = c.mx * un;
    f[2] = c.my * un;
    f[3] = c.mz * un;
    f[4] = (c.E + q.p) * un;
    switch (a) {
        case Axis::x: f[1] += q.p; break;
        case Axis::y: f[2] += q.p; break;
        case Axis::z: f[3] += q.p; break;
    }
    return f;
}

inline double max_signal_speed(const ConsVars& c, Axis a, const GasModel& gas) {
    PrimVars q = cons_to_prim(c, gas);
    return std::abs(velocity_along(q, a)) + sound_speed(q, gas);
}

// Per-zone timestep estimate from the additive 3D CFL bound
//   dt = cfl / (s_x/dx + s_y/dy + s_z/dz).
inline double eval_tstep_ptwise(const ConsVars& c, double cfl, double dx, double dy,
                                double dz, const GasModel& gas) {
    PrimVars q = cons_to_prim(c, gas);
    double cs = sound_speed(q, gas);
    double sx = std::abs(q.u) + cs;
    double sy = std::abs(q.v) + cs;
    double sz = std::abs(q.w) + cs;
    return cfl / (sx / dx + sy / dy + sz / dz);
}

}  // namespace hydro
