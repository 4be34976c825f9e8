#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>

#include "hydro/euler.hpp"

namespace hydro {

enum class SolverChoice { rusanov, hll };

struct FaceStatePair {
    ConsVars left;
    ConsVars right;
    Axis axis = Axis::x;
};

namespace detail {
// Per-face solve counter (used for the RK/ADER cost-structure comparison)
// and a diagnostic counter for degenerate HLL fans.
inline std::atomic<std::uint64_t> riemann_calls{0};
inline std::atomic<std::uint64_t> hll_degenerate_fans{0};
}  // namespace detail

inline std::uint64_t riemann_call_count() {
    return detail::riemann_calls.load(std::memory_order_relaxed);
}
inline void reset_riemann_calls() {
    detail::riemann_calls.store(0, std::memory_order_relaxed);
}
inline std::uint64_t hll_degenerate_count() {
    return detail::hll_degenerate_fans.load(std::memory_order_relaxed);
}

inline std::array<double, 5> rusanov_flux(const FaceStatePair& pair, const GasModel& gas) {
    detail::riemann_calls.fetch_add(1, std::memory_order_relaxed);
    const ConsVars& L = pair.left;
    const ConsVars& R = pair.right;
    auto fl = physical_flux(L, pair.axis, gas);
    auto fr = physical_flux(R, pair.axis, gas);
    double smax = std::max(max_signal_speed(L, pair.axis, gas),
                           max_signal_speed(R, pair.axis, gas));
    std::array<double, 5> ul, ur, f;
    L.store(ul.data());
    R.store(ur.data());
    for (int q = 0; q < 5; ++q)
        f[q] = 0.5 * (fl[q] + fr[q]) - 0.5 * smax * (ur[q] - ul[q]);
    return f;
}

// HLL flux with Davis wave-speed bounds:
//   S_L = min(u_L - c_L, u_R - c_R), S_R = max(u_L + c_L, u_R + c_R).
inline std::array<double, 5> hll_flux(const FaceStatePair& pair, const GasModel& gas) {
    detail::riemann_calls.fetch_add(1, std::memory_order_relaxed);
    const ConsVars& L = pair.left;
    const ConsVars& R = pair.right;
    PrimVars ql = cons_to_prim(L, gas);
    PrimVars qr = cons_to_prim(R, gas);
    double cl = sound_speed(ql, gas);
    double cr = sound_speed(qr, gas);
    double unl = velocity_along(ql, pair.axis);
    double unr = velocity_along(qr, pair.axis);
    double sl = std::min(unl - cl, unr - cr);
    double sr = std::max(unl + cl, unr + cr);

    auto fl = physical_flux(L, pair.axis, gas);
    if (sl >= 0.0) return fl;
    auto fr = physical_flux(R, pair.axis, gas);
    if (sr <= 0.0) return fr;

    std::array<double, 5> f;
    if (sr == sl) {  // degenerate fan
        detail::hll_degenerate_fans.fetch_add(1, std::memory_order_relaxed);
        for (int q = 0; q < 5; ++q) f[q] = 0.5 * (fl[q] + fr[q]);
        return f;
    }
    std::array<double, 5> ul, ur;
    L.store(ul.data());
    R.store(ur.data());
    double inv = 1.0 / (sr - sl);
    for (int q = 0; q < 5; ++q)
        f[q] = (sr * fl[q] - sl * fr[q] + sl * sr * (ur[q] - ul[q])) * inv;
    return f;
}

inline std::array<double, 5> riemann_flux(SolverChoice kind, const FaceStatePair& pair,
                                          const GasModel& gas) {
    return kind == SolverChoice::rusanov ? rusanov_flux(pair, gas) : hll_flux(pair, gas);
}

}  // namespace hydro
