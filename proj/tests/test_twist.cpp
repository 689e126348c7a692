#include "doctest.h"

#include <cmath>

#include "shearlab/oracles.hpp"
#include "shearlab/verify.hpp"

using namespace shearlab;

namespace {

Isometry diag_gamma(double length) {
    double e = std::exp(length / 2.0);
    return Isometry::from_matrix(e, 0.0, 0.0, 1.0 / e);
}

TwistScene perpendicular_scene(double length) {
    return make_twist_scene(diag_gamma(length), Geodesic::between(1.0, -1.0));
}

}  // namespace

TEST_CASE("scene construction and validation") {
    TwistScene sc = perpendicular_scene(2.0);
    CHECK(sc.theta_h == doctest::Approx(M_PI / 2.0).epsilon(1e-12));
    CHECK(same_geodesic(sc.h_prime, sc.gamma(sc.h), 1e-12));
    // symmetric scene: midpoint at i e (halfway between the crossings)
    CHECK(sc.midpoint.x == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(std::log(sc.midpoint.y) == doctest::Approx(1.0).epsilon(1e-10));

    CHECK_THROWS_WITH_AS(make_twist_scene(Isometry::from_matrix(1.0, 1.0, 0.0, 1.0),
                                          Geodesic::between(1.0, -1.0)),
                         doctest::Contains("NotHyperbolic"), Error);
    CHECK_THROWS_WITH_AS(make_twist_scene(diag_gamma(2.0), Geodesic::between(1.0, 2.0)),
                         doctest::Contains("LeafMissesAxis"), Error);
    // probe outside the (h, h') window
    CHECK_THROWS_WITH_AS(
        make_twist_scene(diag_gamma(2.0), Geodesic::between(1.0, -1.0),
                         {verify::standard_crossing_leaf(2.5, M_PI / 2.0)}),
        doctest::Contains("ProbeOutOfRange"), Error);
}

TEST_CASE("twist family basics") {
    TwistScene sc = perpendicular_scene(2.0);
    CHECK(matrix_distance(twist_family(sc, 0.0), sc.gamma) == 0.0);

    // phi(t1) phi(t2) = phi(t1 + t2)
    Rng rng(51);
    for (int k = 0; k < 20; ++k) {
        double t1 = rng.uniform(-1.0, 1.0), t2 = rng.uniform(-1.0, 1.0);
        Isometry lhs = translate_along(sc.h_prime, t1) * translate_along(sc.h_prime, t2);
        CHECK(matrix_distance(lhs, translate_along(sc.h_prime, t1 + t2)) <= 1e-13);
    }

    // translation length grows in the cos(theta_h) direction
    TwistScene oblique = make_twist_scene(diag_gamma(2.0),
                                          verify::standard_crossing_leaf(0.0, 1.1));
    double l0 = translation_length(twist_family(oblique, 0.0));
    double l1 = translation_length(twist_family(oblique, 0.05));
    CHECK((l1 - l0) * std::cos(oblique.theta_h) > 0.0);
}

TEST_CASE("midpoint invariance") {
    TwistScene sym = perpendicular_scene(2.0);
    CHECK(midpoint_residual(sym, 0.0) <= 1e-10);
    for (double t : {-1.0, -0.5, 0.5, 1.0}) CHECK(midpoint_residual(sym, t) <= 1e-10);

    Rng rng(52);
    for (int k = 0; k < 15; ++k) {
        TwistScene sc = verify::random_twist_scene(rng, 0);
        for (double t : {-1.0, -0.5, 0.5, 1.0}) CHECK(midpoint_residual(sc, t) <= 1e-9);
    }
}

TEST_CASE("ell_prime") {
    CHECK(ell_prime(perpendicular_scene(2.0)) == doctest::Approx(0.0).epsilon(1e-14));

    Rng rng(53);
    for (int k = 0; k < 15; ++k) {
        TwistScene sc = verify::random_twist_scene(rng, 0);
        auto len = [&](double t) { return translation_length(twist_family(sc, t)); };
        CHECK(verify::rel_err(ell_prime(sc), fd_derivative(len, 1).value, 0.01) <= 1e-8);
        if (sc.theta_h < M_PI / 2.0 - 0.05) CHECK(ell_prime(sc) > 0.0);
    }
}

TEST_CASE("f_l_prime anchors and FD") {
    TwistScene sc = perpendicular_scene(2.0);
    CHECK(f_l_prime(sc, sc.h) == -0.5);            // exact anchor
    CHECK(f_l_prime(sc, sc.h_prime) == 0.5);       // the image side moves oppositely

    // probe at the middle of the period: sinh(u - u) = 0
    TwistScene with_probe = make_twist_scene(
        diag_gamma(2.0), Geodesic::between(1.0, -1.0), {verify::standard_crossing_leaf(1.0, M_PI / 2.0)});
    CHECK(f_l_prime(with_probe, with_probe.probes[0]) == doctest::Approx(0.0).epsilon(1e-12));

    Rng rng(54);
    for (int k = 0; k < 15; ++k) {
        TwistScene rs = verify::random_twist_scene(rng, 1);
        auto fpos = [&](double t) { return f_l_position(rs, rs.probes[0], t); };
        CHECK(verify::rel_err(f_l_prime(rs, rs.probes[0]), fd_derivative(fpos, 1).value, 0.01) <=
              1e-7);
    }

    CHECK_THROWS_WITH_AS(f_l_prime(sc, Geodesic::between(5.0, 6.0)),
                         doctest::Contains("ProbeOutOfRange"), Error);
}

TEST_CASE("angular velocity") {
    TwistScene sc = perpendicular_scene(2.0);
    CHECK(angular_velocity(sc) == doctest::Approx(-1.0 / (2.0 * std::sinh(1.0))).epsilon(1e-13));

    Rng rng(55);
    for (int k = 0; k < 15; ++k) {
        TwistScene rs = verify::random_twist_scene(rng, 2);
        // consistency with f_l' on every probe
        double rho = angular_velocity(rs);
        for (std::size_t i = 0; i < rs.n_probes(); ++i) {
            double expect = rho * std::sinh(rs.length / 2.0 - rs.probe_pos[i]) /
                            std::sin(rs.probe_theta[i]);
            CHECK(std::abs(f_l_prime(rs, rs.probes[i]) - expect) <= 1e-12);
        }
        // FD of the rotation angle of the axis about M; rho is measured in
        // the clockwise sense (pinned by the f_h' anchor), the chart
        // tangent argument runs counterclockwise
        auto angle = [&](double t) { return axis_angle_at_midpoint(rs, t); };
        CHECK(verify::rel_err(rho, -fd_derivative(angle, 1).value, 0.01) <= 1e-7);
    }
}

TEST_CASE("ell_llprime_prime") {
    TwistScene both_perp = make_twist_scene(
        diag_gamma(2.0), Geodesic::between(1.0, -1.0),
        {verify::standard_crossing_leaf(0.7, M_PI / 2.0), verify::standard_crossing_leaf(1.3, M_PI / 2.0)});
    const Geodesic& l = both_perp.probes[0];
    const Geodesic& l2 = both_perp.probes[1];
    CHECK(ell_llprime_prime(both_perp, l, l) == 0.0);       // antisymmetry on the diagonal
    CHECK(ell_llprime_prime(both_perp, l, l2) == doctest::Approx(0.0).epsilon(1e-13));  // cot = 0

    Rng rng(56);
    for (int k = 0; k < 15; ++k) {
        TwistScene rs = verify::random_twist_scene(rng, 2);
        double v = ell_llprime_prime(rs, rs.probes[0], rs.probes[1]);
        CHECK(std::abs(v + ell_llprime_prime(rs, rs.probes[1], rs.probes[0])) <= 1e-14);
        auto fgap = [&](double t) { return axis_gap(rs, rs.probes[0], rs.probes[1], t); };
        CHECK(verify::rel_err(v, fd_derivative(fgap, 1).value, 0.01) <= 1e-7);
    }
}

TEST_CASE("d_cos_theta_l") {
    Rng rng(57);
    for (int k = 0; k < 15; ++k) {
        TwistScene rs = verify::random_twist_scene(rng, 1);

        // strictly positive under the left-pointing convention
        CHECK(d_cos_theta_l(rs, rs.probes[0]) > 0.0);

        // FD of the probe angle
        auto fang = [&](double t) { return std::cos(probe_angle(rs, rs.probes[0], t)); };
        CHECK(verify::rel_err(d_cos_theta_l(rs, rs.probes[0]), fd_derivative(fang, 1).value, 0.01) <=
              1e-7);

        // at l = h this is the second variation of the translation length
        auto len = [&](double t) { return translation_length(twist_family(rs, t)); };
        CHECK(verify::rel_err(d_cos_theta_l(rs, rs.h), fd_derivative(len, 2).value, 0.01) <= 1e-6);

        // cross-module consistency with the single-leaf quadratic form
        ShearConfig cfg = build_config(rs.gamma, {Leaf{rs.h, 1.0}});
        CHECK(std::abs(d_cos_theta_l(rs, rs.h) - d2_length(cfg)) <= 1e-12);
    }

    // cosh is minimized at the middle probe position
    TwistScene sc = make_twist_scene(
        diag_gamma(2.0), Geodesic::between(1.0, -1.0),
        {verify::standard_crossing_leaf(1.0, M_PI / 2.0), verify::standard_crossing_leaf(0.3, M_PI / 2.0)});
    CHECK(d_cos_theta_l(sc, sc.probes[0]) < d_cos_theta_l(sc, sc.probes[1]));
}

TEST_CASE("scene symmetry theta_h(t) = theta_h'(t) and sampled convexity") {
    Rng rng(58);
    for (int k = 0; k < 10; ++k) {
        TwistScene rs = verify::random_twist_scene(rng, 0);
        double prev2 = translation_length(twist_family(rs, -1.0));
        double prev1 = translation_length(twist_family(rs, -0.8));
        for (int i = 0; i <= 9; ++i) {
            double t = -0.6 + 0.2 * i;
            auto [th, thp] = boundary_angles(rs, t);
            CHECK(std::abs(th - thp) <= 1e-10);
            double cur = translation_length(twist_family(rs, t));
            CHECK(cur - 2.0 * prev1 + prev2 >= -1e-9);
            prev2 = prev1;
            prev1 = cur;
        }
    }
}
