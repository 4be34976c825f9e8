#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

#include "hydro/fields.hpp"

namespace hydro {

struct LimiterConfig {
    double compression_factor_density = 2.0;
    double compression_factor_other = 1.5;
    double weno_epsilon = 1e-12;
    std::array<double, 3> weno_linear_weights = {0.25, 0.5, 0.25};  // left, central, right

    void validate() const {
        auto in_range = [](double c) { return c >= 1.0 && c <= 2.0; };
        if (!in_range(compression_factor_density) || !in_range(compression_factor_other))
            throw std::invalid_argument("compression factors must lie in [1, 2]");
        if (!(weno_epsilon > 0.0))
            throw std::invalid_argument("weno_epsilon must be positive");
        double sum = weno_linear_weights[0] + weno_linear_weights[1] + weno_linear_weights[2];
        if (std::abs(sum - 1.0) > 1e-14)
            throw std::invalid_argument("weno linear weights must sum to 1");
        for (double w : weno_linear_weights)
            if (w < 0.0) throw std::invalid_argument("weno linear weights must be nonnegative");
    }
};

// Monotone-centered limiter: zero when a and b have opposite signs, else the
// signed minimum of the centered and one-sided compressed slopes.
inline double mc_limiter(double a, double b, double cfac) {
    return std::min({0.5 * std::abs(a + b), cfac * std::abs(a), cfac * std::abs(b)}) *
           (std::copysign(0.5, a) + std::copysign(0.5, b));
}

// One-dimensional third-order WENO on five consecutive zone averages
// s[0..4] (center is s[2]). Fits quadratics on the left {0,1,2},
// central {1,2,3} and right {2,3,4} stencils, blends their undivided
// linear and quadratic coefficients by Jiang-Shu smoothness weights.
struct WenoCoeffs {
    double ux, uxx;
};

inline WenoCoeffs weno3_point(const double* s, const LimiterConfig& cfg) {
    // Difference form, so constant data yields exact zeros.
    double d0 = s[1] - s[0], d1 = s[2] - s[1], d2 = s[3] - s[2], d3 = s[4] - s[3];
    double ux_l = 0.5 * (3.0 * d1 - d0);
    double uxx_l = 0.5 * (d1 - d0);
    double ux_c = 0.5 * (d1 + d2);
    double uxx_c = 0.5 * (d2 - d1);
    double ux_r = 0.5 * (3.0 * d2 - d3);
    double uxx_r = 0.5 * (d3 - d2);

    const double k2 = 13.0 / 3.0;  // integral of (p'')^2 over the zone, undivided
    double is_l = ux_l * ux_l + k2 * uxx_l * uxx_l;
    double is_c = ux_c * ux_c + k2 * uxx_c * uxx_c;
    double is_r = ux_r * ux_r + k2 * uxx_r * uxx_r;

    double el = cfg.weno_epsilon + is_l;
    double ec = cfg.weno_epsilon + is_c;
    double er = cfg.weno_epsilon + is_r;
    double al = cfg.weno_linear_weights[0] / (el * el);
    double ac = cfg.weno_linear_weights[1] / (ec * ec);
    double ar = cfg.weno_linear_weights[2] / (er * er);
    double inv = 1.0 / (al + ac + ar);

    WenoCoeffs out;
    out.ux = (al * ux_l + ac * ux_c + ar * ux_r) * inv;
    out.uxx = (al * uxx_l + ac * uxx_c + ar * uxx_r) * inv;
    return out;
}

// Spatial basis value of a zone polynomial at the center of one of its
// faces. side = +1 for the high face, -1 for the low face along the axis.
// At order 3 the quadratic normal basis (xi^2 - 1/12) evaluates to 1/6 at
// either face abscissa; transverse modes average to zero over the face.
inline double extrapolate_to_face(const double* zone_var, int modes, Axis axis, double side) {
    double val = zone_var[0] + side * 0.5 * zone_var[1 + int(axis)];
    if (modes == 11) val += (1.0 / 6.0) * zone_var[4 + int(axis)];
    return val;
}

// Fills modes 1..3 on the active zones plus one ring by applying the MC
// limiter to forward/backward undivided differences per axis. Mode 0 is
// never rewritten.
void limit_patch_o2(ModalState& modal, const PatchGeometry& g, const LimiterConfig& cfg);

// Fills modes 1..9 (linear, quadratic, cross) at order 3. Linear and
// quadratic modes cover the active zones plus one ring; cross modes come
// from centered differences of the transverse linear modes and cover the
// active zones.
void reconstruct_patch_o3(ModalState& modal, const PatchGeometry& g, const LimiterConfig& cfg);

void reconstruct_patch(ModalState& modal, const PatchGeometry& g, const LimiterConfig& cfg,
                       int order);

}  // namespace hydro
