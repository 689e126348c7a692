#pragma once

#include "shearlab/geometry.hpp"

#include <vector>

namespace shearlab {

// Single-geodesic shear scene: a hyperbolic gamma with axis g, a geodesic h
// crossing g, its image h' = gamma(h), the common perpendicular [a, a']
// between h and h' with midpoint M, and probe geodesics crossing g between
// h and h'. The deformation is gamma(t) = T^t_{h'} o gamma; h, h' and the
// probes stay fixed while the axis g(t) moves.
struct TwistScene {
    Isometry gamma;
    Geodesic axis;
    double length = 0.0;  // translation length of gamma
    Geodesic h;           // left-pointing when crossed by the axis
    Geodesic h_prime;     // gamma(h)
    InteriorPoint foot_h;        // a, on h
    InteriorPoint foot_h_prime;  // a', on h'
    InteriorPoint midpoint;      // M, midpoint of [a, a']
    Geodesic perpendicular;      // geodesic through a and a'
    double theta_h = 0.0;        // angle from the axis to h (= angle to h')
    std::vector<Geodesic> probes;      // left-pointing, strictly between h and h'
    std::vector<double> probe_pos;     // arc position on the axis from the h-crossing, in (0, length)
    std::vector<double> probe_theta;

    std::size_t n_probes() const { return probes.size(); }
};

// Builds and validates the scene. Probes must cross the axis strictly
// between h and h', be disjoint from both, and cross the perpendicular
// segment's geodesic (the reference point for f_l).
// errors: NotHyperbolic, LeafMissesAxis, ProbeOutOfRange.
TwistScene make_twist_scene(const Isometry& gamma, const Geodesic& h,
                            const std::vector<Geodesic>& probes = {});

// gamma(t) = T^t_{h'} o gamma. errors: DegenerateResult if not hyperbolic.
Isometry twist_family(const TwistScene& scene, double t);

// Distance from the midpoint M to the axis of gamma(t); zero for all t.
double midpoint_residual(const TwistScene& scene, double t);

// l'(0) = cos(theta_h).
double ell_prime(const TwistScene& scene);

// f_l'(0) = -(1/2) (sin theta_h / sin theta_l) sinh(u - x_l) / sinh(u),
// where x_l is the axis distance from the h-crossing to the probe crossing
// and u = length/2. The probe may be h itself (value exactly -1/2) or h'
// (value exactly +1/2). errors: ProbeOutOfRange.
double f_l_prime(const TwistScene& scene, const Geodesic& probe);

// rho'(0) = -sin(theta_h) / (2 sinh(u)): angular velocity of the axis
// rotating about M. Satisfies f_l' = rho' sinh(u - x_l) / sin(theta_l).
// The rotation sense implied by that relation (through the f_h' = -1/2
// anchor) is clockwise in the chart, i.e. opposite the surface
// orientation: rho' equals MINUS the t-derivative of
// axis_angle_at_midpoint.
double angular_velocity(const TwistScene& scene);

// Variation of the axis distance from the l-crossing to the l2-crossing:
//   sin(theta_h)/(2 sinh u) [ sinh(u - x_l) cot(theta_l)
//                             - sinh(u - x_l2) cot(theta_l2) ].
// Antisymmetric under swapping the probes. errors: ProbeOutOfRange.
double ell_llprime_prime(const TwistScene& scene, const Geodesic& l, const Geodesic& l2);

// d cos(theta_l)/dt = (1/2) cosh(u - x_l)/sinh(u) sin(theta_h) sin(theta_l);
// at l = h this is the second variation of the translation length.
double d_cos_theta_l(const TwistScene& scene, const Geodesic& probe);

// --- direct measurements for the finite-difference oracles -----------------

// Signed position of probe ∩ g(t) along the fixed probe, measured from
// probe ∩ [a,a'] in the probe's own (left-pointing) orientation.
double f_l_position(const TwistScene& scene, const Geodesic& probe, double t);

// Angle from g(t) to the fixed probe at their crossing.
double probe_angle(const TwistScene& scene, const Geodesic& probe, double t);

// Signed distance along g(t) from the l-crossing to the l2-crossing.
double axis_gap(const TwistScene& scene, const Geodesic& l, const Geodesic& l2, double t);

// Direction angle of g(t)'s tangent at M (Euclidean argument in the chart);
// its t-derivative is the angular velocity.
double axis_angle_at_midpoint(const TwistScene& scene, double t);

// theta_h(t) and theta_{h'}(t); equal for every t.
std::pair<double, double> boundary_angles(const TwistScene& scene, double t);

}  // namespace shearlab
