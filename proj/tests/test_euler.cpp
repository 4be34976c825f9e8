#include <doctest.h>

#include <random>

#include "hydro/euler.hpp"
#include "test_support.hpp"

using namespace hydro;

TEST_CASE("cons_to_prim hand values") {
    GasModel gas;
    PrimVars q = cons_to_prim({1.0, 0.0, 0.0, 0.0, 2.5}, gas);
    CHECK(q.u == 0.0);
    CHECK(q.v == 0.0);
    CHECK(q.w == 0.0);
    CHECK(q.p == doctest::Approx(1.0).epsilon(1e-14));

    // internal energy 0.5 > 0, p = 0.4 * 0.5 = 0.2
    PrimVars q2 = cons_to_prim({1.0, 1.0, 0.0, 0.0, 1.0}, gas);
    CHECK(q2.p == doctest::Approx(0.2).epsilon(1e-14));
}

TEST_CASE("conversion round trip on 1000 random states") {
    GasModel gas;
    std::mt19937_64 rng(42);
    for (int n = 0; n < 1000; ++n) {
        ConsVars c = test::random_cons(rng, gas);
        ConsVars c2 = prim_to_cons(cons_to_prim(c, gas), gas);
        CHECK(std::abs(c2.rho - c.rho) <= 1e-13 * std::abs(c.rho));
        CHECK(std::abs(c2.mx - c.mx) <= 1e-13 * (std::abs(c.mx) + 1e-30));
        CHECK(std::abs(c2.my - c.my) <= 1e-13 * (std::abs(c.my) + 1e-30));
        CHECK(std::abs(c2.mz - c.mz) <= 1e-13 * (std::abs(c.mz) + 1e-30));
        CHECK(std::abs(c2.E - c.E) <= 1e-13 * std::abs(c.E));
    }
}

TEST_CASE("unphysical states raise with context") {
    GasModel gas;
    CHECK_THROWS_AS(cons_to_prim({-1.0, 0, 0, 0, 1.0}, gas), unphysical_error);
    CHECK_THROWS_AS(cons_to_prim({1.0, 10.0, 0, 0, 1.0}, gas), unphysical_error);
}

TEST_CASE("physical flux at rest is pressure only") {
    GasModel gas;
    ConsVars c = prim_to_cons({1.0, 0.0, 0.0, 0.0, 1.0}, gas);
    auto f = physical_flux(c, Axis::x, gas);
    CHECK(f[0] == 0.0);
    CHECK(f[1] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(f[2] == 0.0);
    CHECK(f[3] == 0.0);
    CHECK(f[4] == 0.0);
}

TEST_CASE("physical flux hand value") {
    GasModel gas;
    ConsVars c = prim_to_cons({1.0, 2.0, 0.0, 0.0, 1.0}, gas);
    auto f = physical_flux(c, Axis::x, gas);
    CHECK(f[0] == doctest::Approx(2.0).epsilon(1e-14));  // rho u
    CHECK(f[1] == doctest::Approx(5.0).epsilon(1e-14));  // rho u^2 + p
}

TEST_CASE("flux rotational symmetry") {
    GasModel gas;
    std::mt19937_64 rng(1);
    for (int n = 0; n < 100; ++n) {
        ConsVars c = test::random_cons(rng, gas);
        auto fx = physical_flux(c, Axis::x, gas);
        // Permute (u,v,w) -> (v,w,u); the y-flux of the permuted state must
        // equal the x-flux with momenta permuted the same way.
        ConsVars cp{c.rho, c.mz, c.mx, c.my, c.E};
        auto fy = physical_flux(cp, Axis::y, gas);
        CHECK(fy[0] == doctest::Approx(fx[0]).epsilon(1e-14));
        CHECK(fy[2] == doctest::Approx(fx[1]).epsilon(1e-14));
        CHECK(fy[3] == doctest::Approx(fx[2]).epsilon(1e-14));
        CHECK(fy[1] == doctest::Approx(fx[3]).epsilon(1e-14));
        CHECK(fy[4] == doctest::Approx(fx[4]).epsilon(1e-14));
    }
}

TEST_CASE("max signal speed") {
    GasModel gas;
    ConsVars c = prim_to_cons({1.4, 0.0, 0.0, 0.0, 1.0}, gas);
    CHECK(max_signal_speed(c, Axis::x, gas) == doctest::Approx(1.0).epsilon(1e-14));

    // Bulk velocity adds exactly |u|.
    ConsVars cu = prim_to_cons({1.4, -0.7, 0.0, 0.0, 1.0}, gas);
    CHECK(max_signal_speed(cu, Axis::x, gas) == doctest::Approx(1.7).epsilon(1e-14));

    std::mt19937_64 rng(2);
    for (int n = 0; n < 200; ++n)
        CHECK(max_signal_speed(test::random_cons(rng, gas), Axis::z, gas) > 0.0);
}

TEST_CASE("pointwise timestep estimate") {
    GasModel gas;
    ConsVars c = prim_to_cons({1.4, 0.0, 0.0, 0.0, 1.0}, gas);  // sound speed 1
    CHECK(eval_tstep_ptwise(c, 0.6, 1, 1, 1, gas) == doctest::Approx(0.2).epsilon(1e-14));

    // Positively homogeneous of degree 1 in (dx,dy,dz) jointly.
    std::mt19937_64 rng(3);
    for (int n = 0; n < 100; ++n) {
        ConsVars r = test::random_cons(rng, gas);
        double dt1 = eval_tstep_ptwise(r, 0.5, 0.3, 0.4, 0.7, gas);
        double dt2 = eval_tstep_ptwise(r, 0.5, 0.15, 0.2, 0.35, gas);
        CHECK(dt2 == doctest::Approx(0.5 * dt1).epsilon(1e-13));
    }

    // dt decreases monotonically as |u| grows.
    double prev = 1e300;
    for (double u = 0.0; u < 4.0; u += 0.25) {
        double dt = eval_tstep_ptwise(prim_to_cons({1.0, u, 0, 0, 1.0}, gas), 0.6, 1, 1, 1, gas);
        CHECK(dt < prev);
        prev = dt;
    }
}
