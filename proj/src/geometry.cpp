#include "shearlab/geometry.hpp"

#include <cmath>

namespace shearlab {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::NotHyperbolic: return "NotHyperbolic";
        case Errc::DegeneratePoints: return "DegeneratePoints";
        case Errc::SharedEndpoint: return "SharedEndpoint";
        case Errc::Intersecting: return "Intersecting";
        case Errc::PointOffGeodesic: return "PointOffGeodesic";
        case Errc::LeafMissesAxis: return "LeafMissesAxis";
        case Errc::LeavesCross: return "LeavesCross";
        case Errc::DuplicateCrossing: return "DuplicateCrossing";
        case Errc::DegenerateResult: return "DegenerateResult";
        case Errc::CrossingLost: return "CrossingLost";
        case Errc::SingleCrossing: return "SingleCrossing";
        case Errc::HypothesesFail: return "HypothesesFail";
        case Errc::ProbeOutOfRange: return "ProbeOutOfRange";
        case Errc::BadSeedLeaves: return "BadSeedLeaves";
        case Errc::UnsupportedOrder: return "UnsupportedOrder";
        case Errc::TraceTooClose: return "TraceTooClose";
        case Errc::NonFiniteSample: return "NonFiniteSample";
        case Errc::Schema: return "Schema";
        case Errc::Io: return "Io";
        case Errc::Internal: return "Internal";
    }
    return "Unknown";
}

Tolerances& tolerances() {
    static Tolerances t;
    return t;
}

namespace {

BoundaryPoint normalized(double a, double b) {
    double r = std::hypot(a, b);
    if (!(r > 0.0) || !std::isfinite(r)) fail(Errc::DegeneratePoints, "projective pair must be finite and nonzero");
    a /= r;
    b /= r;
    if (a < 0.0 || (a == 0.0 && b < 0.0)) {
        a = -a;
        b = -b;
    }
    BoundaryPoint p;
    p.a = a;
    p.b = b;
    return p;
}

}  // namespace

BoundaryPoint BoundaryPoint::finite(double x) { return normalized(x, 1.0); }
BoundaryPoint BoundaryPoint::infinity() { return normalized(1.0, 0.0); }
BoundaryPoint BoundaryPoint::projective(double a, double b) { return normalized(a, b); }

bool same_point(const BoundaryPoint& p, const BoundaryPoint& q, double tol) {
    return std::abs(det(p, q)) <= tol;
}

Geodesic::Geodesic(BoundaryPoint src, BoundaryPoint tgt) : source(src), target(tgt) {
    if (same_point(src, tgt)) fail(Errc::DegeneratePoints, "geodesic endpoints coincide");
}

Geodesic Geodesic::between(double x_source, double x_target) {
    return Geodesic(BoundaryPoint::finite(x_source), BoundaryPoint::finite(x_target));
}

bool same_geodesic(const Geodesic& g, const Geodesic& h, double tol) {
    return same_point(g.source, h.source, tol) && same_point(g.target, h.target, tol);
}

bool same_geodesic_unoriented(const Geodesic& g, const Geodesic& h, double tol) {
    return same_geodesic(g, h, tol) || same_geodesic(g, h.reversed(), tol);
}

InteriorPoint::InteriorPoint(double x_, double y_) : x(x_), y(y_) {
    if (!(y > 0.0) || !std::isfinite(x) || !std::isfinite(y))
        fail(Errc::DegeneratePoints, "interior point needs finite coordinates with y > 0");
}

Isometry Isometry::from_matrix(double a, double b, double c, double d) {
    double dt = a * d - b * c;
    if (!(dt > 0.0) || !std::isfinite(dt))
        fail(Errc::DegenerateResult, "matrix must have positive determinant");
    double s = std::sqrt(dt);
    a /= s;
    b /= s;
    c /= s;
    d /= s;
    if (a < 0.0 || (a == 0.0 && b < 0.0)) {
        a = -a;
        b = -b;
        c = -c;
        d = -d;
    }
    Isometry f;
    f.m00 = a;
    f.m01 = b;
    f.m10 = c;
    f.m11 = d;
    return f;
}

BoundaryPoint Isometry::operator()(const BoundaryPoint& p) const {
    return BoundaryPoint::projective(m00 * p.a + m01 * p.b, m10 * p.a + m11 * p.b);
}

std::complex<double> Isometry::moebius(std::complex<double> z) const {
    return (m00 * z + m01) / (m10 * z + m11);
}

std::complex<double> Isometry::derivative(std::complex<double> z) const {
    std::complex<double> den = m10 * z + m11;
    return 1.0 / (den * den);
}

InteriorPoint Isometry::operator()(const InteriorPoint& p) const {
    std::complex<double> w = moebius(p.z());
    return InteriorPoint(w.real(), w.imag());
}

Geodesic Isometry::operator()(const Geodesic& g) const {
    return Geodesic((*this)(g.source), (*this)(g.target));
}

Isometry compose(const Isometry& f, const Isometry& g) {
    return Isometry::from_matrix(f.m00 * g.m00 + f.m01 * g.m10, f.m00 * g.m01 + f.m01 * g.m11,
                                 f.m10 * g.m00 + f.m11 * g.m10, f.m10 * g.m01 + f.m11 * g.m11);
}

double matrix_distance(const Isometry& f, const Isometry& g) {
    auto frob = [](double a, double b, double c, double d) {
        return std::sqrt(a * a + b * b + c * c + d * d);
    };
    double dm = frob(f.m00 - g.m00, f.m01 - g.m01, f.m10 - g.m10, f.m11 - g.m11);
    double dp = frob(f.m00 + g.m00, f.m01 + g.m01, f.m10 + g.m10, f.m11 + g.m11);
    return std::min(dm, dp);
}

bool same_isometry(const Isometry& f, const Isometry& g, double tol) {
    return matrix_distance(f, g) <= tol;
}

const char* isom_class_name(IsomClass c) {
    switch (c) {
        case IsomClass::Identity: return "identity";
        case IsomClass::Elliptic: return "elliptic";
        case IsomClass::Parabolic: return "parabolic";
        case IsomClass::Hyperbolic: return "hyperbolic";
    }
    return "unknown";
}

IsomClass classify(const Isometry& f, double tol) {
    double t = std::abs(f.trace());
    if (t > 2.0 + tol) return IsomClass::Hyperbolic;
    if (t < 2.0 - tol) return IsomClass::Elliptic;
    if (matrix_distance(f, Isometry::identity()) <= tol) return IsomClass::Identity;
    return IsomClass::Parabolic;
}

double translation_length(const Isometry& f) {
    if (classify(f) != IsomClass::Hyperbolic)
        fail(Errc::NotHyperbolic, std::string("translation length undefined for ") +
                                      isom_class_name(classify(f)) + " isometry");
    return 2.0 * std::acosh(std::abs(f.trace()) / 2.0);
}

Geodesic axis(const Isometry& f) {
    if (classify(f) != IsomClass::Hyperbolic) fail(Errc::NotHyperbolic, "axis requires a hyperbolic isometry");
    double t = f.trace();
    double disc = std::sqrt(t * t - 4.0);
    // Eigenvalue of largest magnitude, computed without cancellation.
    double lam_big = (t >= 0.0) ? (t + disc) / 2.0 : (t - disc) / 2.0;
    double lam_small = 1.0 / lam_big;  // det = 1

    auto eigenvector = [&](double lam) {
        // (m00 - lam) x + m01 y = 0  or  m10 x + (m11 - lam) y = 0
        double n1 = std::hypot(f.m01, lam - f.m00);
        double n2 = std::hypot(lam - f.m11, f.m10);
        if (n1 >= n2) return BoundaryPoint::projective(f.m01, lam - f.m00);
        return BoundaryPoint::projective(lam - f.m11, f.m10);
    };

    BoundaryPoint attracting = eigenvector(lam_big);
    BoundaryPoint repelling = eigenvector(lam_small);
    return Geodesic(repelling, attracting);
}

Isometry standard_chart(const Geodesic& g) {
    // Columns (target | source): maps inf -> target, 0 -> source.
    double a = g.target.a, c = g.target.b;
    double b = g.source.a, d = g.source.b;
    if (a * d - b * c < 0.0) {
        b = -b;
        d = -d;
    }
    return Isometry::from_matrix(a, b, c, d);
}

FlowGenerator translation_generator(const Geodesic& g) {
    Isometry w = standard_chart(g);
    // A = W diag(1,-1) W^{-1} with the adjugate inverse (det 1), NOT the
    // sign-normalized one: the generator is a Lie algebra element, so the
    // relative sign of W and W^{-1} matters.
    double i00 = w.m11, i01 = -w.m01, i10 = -w.m10, i11 = w.m00;
    return FlowGenerator{w.m00 * i00 - w.m01 * i10, w.m00 * i01 - w.m01 * i11,
                         w.m10 * i00 - w.m11 * i10, w.m10 * i01 - w.m11 * i11};
}

Isometry translate_along(const Geodesic& g, double u) {
    if (u == 0.0) return Isometry::identity();
    FlowGenerator a = translation_generator(g);
    double ch = std::cosh(u / 2.0), sh = std::sinh(u / 2.0);
    return Isometry::from_matrix(ch + sh * a.a00, sh * a.a01, sh * a.a10, ch + sh * a.a11);
}

double cross_ratio(const BoundaryPoint& p, const BoundaryPoint& q, const BoundaryPoint& r,
                   const BoundaryPoint& s) {
    const BoundaryPoint* pts[4] = {&p, &q, &r, &s};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (same_point(*pts[i], *pts[j], tolerances().algebraic))
                fail(Errc::DegeneratePoints, "cross-ratio needs four pairwise distinct points");
    return (det(p, q) * det(r, s)) / (det(p, s) * det(r, q));
}

namespace {

void check_no_shared_endpoint(const Geodesic& g, const Geodesic& h) {
    double tol = tolerances().algebraic;
    if (same_point(g.source, h.source, tol) || same_point(g.source, h.target, tol) ||
        same_point(g.target, h.source, tol) || same_point(g.target, h.target, tol))
        fail(Errc::SharedEndpoint, "geodesics are asymptotic (shared endpoint)");
}

double pair_cross_ratio(const Geodesic& g, const Geodesic& h) {
    // [p,q,r,s] with (p -> s) = g and (q -> r) = h.
    return cross_ratio(g.source, h.source, h.target, g.target);
}

}  // namespace

bool endpoints_linked(const Geodesic& g, const Geodesic& h) {
    check_no_shared_endpoint(g, h);
    double x = pair_cross_ratio(g, h);
    return x > 0.0 && x < 1.0;
}

std::optional<Crossing> intersect(const Geodesic& g, const Geodesic& h) {
    if (!endpoints_linked(g, h)) return std::nullopt;

    Isometry w = standard_chart(g);
    Isometry winv = w.inverse();
    BoundaryPoint u = winv(h.source);
    BoundaryPoint v = winv(h.target);
    double prod = (u.a * v.a) / (u.b * v.b);
    if (!(prod < 0.0)) fail(Errc::Internal, "linked geodesics with non-crossing chart image");
    double y0 = std::sqrt(-prod);

    std::complex<double> zc = w.moebius({0.0, y0});
    InteriorPoint point(zc.real(), zc.imag());

    // Tangents via the chart derivatives; both geodesics are the imaginary
    // axis in their own charts, tangent +i there.
    std::complex<double> tan_g = w.derivative({0.0, y0}) * std::complex<double>(0.0, 1.0);
    Isometry vh = standard_chart(h);
    std::complex<double> zh = vh.inverse().moebius(zc);
    std::complex<double> tan_h = vh.derivative(zh) * std::complex<double>(0.0, 1.0);

    double theta = std::arg(tan_h / tan_g);  // in (-pi, pi]
    bool reversed = false;
    if (theta <= 0.0) {
        theta += M_PI;
        reversed = true;
    }
    return Crossing{point, theta, reversed};
}

double geodesic_distance(const Geodesic& g, const Geodesic& h) {
    check_no_shared_endpoint(g, h);
    double x = pair_cross_ratio(g, h);
    if (x > 0.0 && x < 1.0) fail(Errc::Intersecting, "geodesics intersect; no distance");
    if (x <= 0.0) return 2.0 * std::asinh(std::sqrt(-x));
    return 2.0 * std::asinh(std::sqrt(x - 1.0));
}

double point_distance(const InteriorPoint& p, const InteriorPoint& q) {
    double dx = p.x - q.x, dy = p.y - q.y;
    return 2.0 * std::asinh(std::sqrt(dx * dx + dy * dy) / (2.0 * std::sqrt(p.y * q.y)));
}

std::pair<InteriorPoint, InteriorPoint> common_perpendicular(const Geodesic& g, const Geodesic& h) {
    check_no_shared_endpoint(g, h);
    double x = pair_cross_ratio(g, h);
    if (x > 0.0 && x < 1.0) fail(Errc::Intersecting, "geodesics intersect; no common perpendicular");

    Isometry w = standard_chart(g);
    Isometry winv = w.inverse();
    BoundaryPoint up = winv(h.source);
    BoundaryPoint vp = winv(h.target);
    double u = up.affine();
    double v = vp.affine();
    // Both finite and of one sign once shared endpoints are excluded.
    double r0 = std::sqrt(u * v);
    InteriorPoint foot_g = w(InteriorPoint(0.0, r0));
    double xf = 2.0 * u * v / (u + v);
    double yf = r0 * std::abs(v - u) / std::abs(u + v);
    InteriorPoint foot_h = w(InteriorPoint(xf, yf));
    return {foot_g, foot_h};
}

double distance_to_geodesic(const Geodesic& g, const InteriorPoint& p) {
    std::complex<double> zc = standard_chart(g).inverse().moebius(p.z());
    return std::asinh(std::abs(zc.real()) / zc.imag());
}

double signed_position(const Geodesic& g, const InteriorPoint& p, const InteriorPoint& basepoint,
                       double tol) {
    Isometry winv = standard_chart(g).inverse();
    std::complex<double> zp = winv.moebius(p.z());
    std::complex<double> zb = winv.moebius(basepoint.z());
    if (std::asinh(std::abs(zp.real()) / zp.imag()) > tol ||
        std::asinh(std::abs(zb.real()) / zb.imag()) > tol)
        fail(Errc::PointOffGeodesic, "signed_position: point not on geodesic");
    return std::log(std::abs(zp)) - std::log(std::abs(zb));
}

InteriorPoint closest_point_on(const Geodesic& g, const InteriorPoint& z) {
    Isometry w = standard_chart(g);
    std::complex<double> zc = w.inverse().moebius(z.z());
    return w(InteriorPoint(0.0, std::abs(zc)));
}

Geodesic geodesic_through(const InteriorPoint& p, const InteriorPoint& q) {
    if (std::abs(p.x - q.x) <= 1e-14 * (1.0 + std::abs(p.x))) {
        Geodesic vert(BoundaryPoint::finite(p.x), BoundaryPoint::infinity());
        return (q.y >= p.y) ? vert : vert.reversed();
    }
    double c = (std::norm(p.z()) - std::norm(q.z())) / (2.0 * (p.x - q.x));
    double r = std::hypot(p.x - c, p.y);
    Geodesic geo(BoundaryPoint::finite(c - r), BoundaryPoint::finite(c + r));
    double sp = std::log(std::abs(standard_chart(geo).inverse().moebius(p.z())));
    double sq = std::log(std::abs(standard_chart(geo).inverse().moebius(q.z())));
    return (sq >= sp) ? geo : geo.reversed();
}

InteriorPoint segment_midpoint(const InteriorPoint& p, const InteriorPoint& q) {
    Geodesic g = geodesic_through(p, q);
    Isometry w = standard_chart(g);
    Isometry winv = w.inverse();
    double yp = std::abs(winv.moebius(p.z()));
    double yq = std::abs(winv.moebius(q.z()));
    return w(InteriorPoint(0.0, std::sqrt(yp * yq)));
}

}  // namespace shearlab
