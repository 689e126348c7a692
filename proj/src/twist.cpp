#include "shearlab/twist.hpp"

#include <cmath>

namespace shearlab {

namespace {

struct ProbeInfo {
    double pos;
    double theta;
};

// Crossing of a probe with the axis, positions measured from the h-crossing.
ProbeInfo probe_info(const Geodesic& axis_g, const InteriorPoint& origin, const Geodesic& probe) {
    std::optional<Crossing> cr;
    try {
        cr = intersect(axis_g, probe);
    } catch (const Error& e) {
        if (e.code() == Errc::SharedEndpoint)
            fail(Errc::ProbeOutOfRange, "probe is asymptotic to the axis");
        throw;
    }
    if (!cr) fail(Errc::ProbeOutOfRange, "probe does not cross the axis");
    return {signed_position(axis_g, cr->point, origin), cr->theta};
}

bool disjoint_from(const Geodesic& a, const Geodesic& b) {
    try {
        return !endpoints_linked(a, b);
    } catch (const Error& e) {
        if (e.code() == Errc::SharedEndpoint) return false;
        throw;
    }
}

}  // namespace

TwistScene make_twist_scene(const Isometry& gamma, const Geodesic& h,
                            const std::vector<Geodesic>& probes) {
    if (classify(gamma) != IsomClass::Hyperbolic)
        fail(Errc::NotHyperbolic, "twist scene needs a hyperbolic isometry");

    TwistScene sc{gamma,
                  axis(gamma),
                  translation_length(gamma),
                  h,
                  h,
                  InteriorPoint(0.0, 1.0),
                  InteriorPoint(0.0, 1.0),
                  InteriorPoint(0.0, 1.0),
                  h,
                  0.0,
                  {},
                  {},
                  {}};

    std::optional<Crossing> cr;
    try {
        cr = intersect(sc.axis, h);
    } catch (const Error& e) {
        if (e.code() == Errc::SharedEndpoint) fail(Errc::LeafMissesAxis, "h is asymptotic to the axis");
        throw;
    }
    if (!cr) fail(Errc::LeafMissesAxis, "h does not cross the axis");
    sc.h = cr->reversed ? h.reversed() : h;
    sc.h_prime = gamma(sc.h);
    sc.theta_h = cr->theta;
    InteriorPoint h_cross = cr->point;

    if (!disjoint_from(sc.h, sc.h_prime))
        fail(Errc::ProbeOutOfRange, "h and gamma(h) must be disjoint and non-asymptotic");

    auto feet = common_perpendicular(sc.h, sc.h_prime);
    sc.foot_h = feet.first;
    sc.foot_h_prime = feet.second;
    sc.midpoint = segment_midpoint(sc.foot_h, sc.foot_h_prime);
    sc.perpendicular = geodesic_through(sc.foot_h, sc.foot_h_prime);

    for (const Geodesic& p : probes) {
        ProbeInfo info = probe_info(sc.axis, h_cross, p);
        if (!(info.pos > 0.0 && info.pos < sc.length))
            fail(Errc::ProbeOutOfRange, "probe crossing must lie strictly between h and gamma(h)");
        if (!disjoint_from(p, sc.h) || !disjoint_from(p, sc.h_prime))
            fail(Errc::ProbeOutOfRange, "probe must be disjoint from h and gamma(h)");
        if (!endpoints_linked(p, sc.perpendicular))
            fail(Errc::ProbeOutOfRange, "probe must cross the perpendicular segment's geodesic");
        std::optional<Crossing> pc = intersect(sc.axis, p);
        sc.probes.push_back(pc->reversed ? p.reversed() : p);
        sc.probe_pos.push_back(info.pos);
        sc.probe_theta.push_back(info.theta);
    }
    return sc;
}

Isometry twist_family(const TwistScene& scene, double t) {
    Isometry g = translate_along(scene.h_prime, t) * scene.gamma;
    if (classify(g) != IsomClass::Hyperbolic)
        fail(Errc::DegenerateResult, "twist family left the hyperbolic locus");
    return g;
}

double midpoint_residual(const TwistScene& scene, double t) {
    return distance_to_geodesic(axis(twist_family(scene, t)), scene.midpoint);
}

double ell_prime(const TwistScene& scene) { return std::cos(scene.theta_h); }

namespace {

// Position (from the h-crossing) and angle of a probe; accepts h itself
// (position 0) and h' (position = length).
ProbeInfo locate_probe(const TwistScene& scene, const Geodesic& probe) {
    if (same_geodesic_unoriented(probe, scene.h, 1e-9)) return {0.0, scene.theta_h};
    if (same_geodesic_unoriented(probe, scene.h_prime, 1e-9)) return {scene.length, scene.theta_h};
    for (std::size_t i = 0; i < scene.probes.size(); ++i)
        if (same_geodesic_unoriented(probe, scene.probes[i], 1e-9))
            return {scene.probe_pos[i], scene.probe_theta[i]};
    // Not pre-registered: measure it, enforcing the scene preconditions.
    std::optional<Crossing> hc = intersect(scene.axis, scene.h);
    ProbeInfo info = probe_info(scene.axis, hc->point, probe);
    if (!(info.pos >= 0.0 && info.pos <= scene.length))
        fail(Errc::ProbeOutOfRange, "probe crossing must lie between h and gamma(h)");
    return info;
}

}  // namespace

double f_l_prime(const TwistScene& scene, const Geodesic& probe) {
    ProbeInfo info = locate_probe(scene, probe);
    double u = scene.length / 2.0;
    return -0.5 * (std::sin(scene.theta_h) / std::sin(info.theta)) * std::sinh(u - info.pos) /
           std::sinh(u);
}

double angular_velocity(const TwistScene& scene) {
    return -std::sin(scene.theta_h) / (2.0 * std::sinh(scene.length / 2.0));
}

double ell_llprime_prime(const TwistScene& scene, const Geodesic& l, const Geodesic& l2) {
    ProbeInfo a = locate_probe(scene, l);
    ProbeInfo b = locate_probe(scene, l2);
    double u = scene.length / 2.0;
    double cot_a = std::cos(a.theta) / std::sin(a.theta);
    double cot_b = std::cos(b.theta) / std::sin(b.theta);
    return std::sin(scene.theta_h) / (2.0 * std::sinh(u)) *
           (std::sinh(u - a.pos) * cot_a - std::sinh(u - b.pos) * cot_b);
}

double d_cos_theta_l(const TwistScene& scene, const Geodesic& probe) {
    ProbeInfo info = locate_probe(scene, probe);
    double u = scene.length / 2.0;
    return 0.5 * std::cosh(u - info.pos) / std::sinh(u) * std::sin(scene.theta_h) *
           std::sin(info.theta);
}

double f_l_position(const TwistScene& scene, const Geodesic& probe, double t) {
    Geodesic oriented = probe;
    std::optional<Crossing> at0 = intersect(scene.axis, probe);
    if (at0 && at0->reversed) oriented = probe.reversed();

    std::optional<Crossing> ref = intersect(oriented, scene.perpendicular);
    if (!ref) fail(Errc::ProbeOutOfRange, "probe does not cross the perpendicular segment");

    Geodesic axis_t = axis(twist_family(scene, t));
    std::optional<Crossing> moving = intersect(oriented, axis_t);
    if (!moving) fail(Errc::CrossingLost, "probe no longer crosses the deformed axis");
    return signed_position(oriented, moving->point, ref->point);
}

double probe_angle(const TwistScene& scene, const Geodesic& probe, double t) {
    Geodesic axis_t = axis(twist_family(scene, t));
    std::optional<Crossing> cr = intersect(axis_t, probe);
    if (!cr) fail(Errc::CrossingLost, "probe no longer crosses the deformed axis");
    return cr->theta;
}

double axis_gap(const TwistScene& scene, const Geodesic& l, const Geodesic& l2, double t) {
    Geodesic axis_t = axis(twist_family(scene, t));
    std::optional<Crossing> ca = intersect(axis_t, l);
    std::optional<Crossing> cb = intersect(axis_t, l2);
    if (!ca || !cb) fail(Errc::CrossingLost, "probe no longer crosses the deformed axis");
    return signed_position(axis_t, cb->point, ca->point);
}

double axis_angle_at_midpoint(const TwistScene& scene, double t) {
    Geodesic axis_t = axis(twist_family(scene, t));
    Isometry w = standard_chart(axis_t);
    std::complex<double> zc = w.inverse().moebius(scene.midpoint.z());
    std::complex<double> tangent = w.derivative({0.0, std::abs(zc)}) * std::complex<double>(0.0, 1.0);
    return std::arg(tangent);
}

std::pair<double, double> boundary_angles(const TwistScene& scene, double t) {
    Geodesic axis_t = axis(twist_family(scene, t));
    std::optional<Crossing> ch = intersect(axis_t, scene.h);
    std::optional<Crossing> chp = intersect(axis_t, scene.h_prime);
    if (!ch || !chp) fail(Errc::CrossingLost, "boundary geodesic no longer crosses the axis");
    return {ch->theta, chp->theta};
}

}  // namespace shearlab
