#pragma once

#include <complex>
#include <optional>
#include <string>

#include "shearlab/common.hpp"

namespace shearlab {

// Point of the boundary circle of the upper half-plane, stored as a
// projective pair (a : b) ~ a/b in R u {inf}. Working projectively removes
// the coordinate singularity at infinity: every formula below is a
// polynomial in (a, b).
//
// Canonical representative: a^2 + b^2 = 1 and the first nonzero coordinate
// positive. Two points are equal iff their pairs are proportional, tested
// through the determinant a1*b2 - b1*a2 (the sine of the angular gap for
// unit representatives).
struct BoundaryPoint {
    double a = 1.0;
    double b = 0.0;

    static BoundaryPoint finite(double x);
    static BoundaryPoint infinity();
    static BoundaryPoint projective(double a, double b);  // errors: DegeneratePoints if (0,0)

    bool is_infinite(double tol = 0.0) const { return std::abs(b) <= tol; }
    // Affine coordinate a/b; +-inf when b == 0.
    double affine() const { return a / b; }
};

inline double det(const BoundaryPoint& p, const BoundaryPoint& q) { return p.a * q.b - p.b * q.a; }

bool same_point(const BoundaryPoint& p, const BoundaryPoint& q, double tol = 1e-12);

// Oriented geodesic: ordered pair of distinct boundary points.
struct Geodesic {
    BoundaryPoint source;
    BoundaryPoint target;

    Geodesic(BoundaryPoint src, BoundaryPoint tgt);  // errors: DegeneratePoints if src == tgt
    static Geodesic between(double x_source, double x_target);

    Geodesic reversed() const { return Geodesic(target, source); }
};

bool same_geodesic(const Geodesic& g, const Geodesic& h, double tol = 1e-12);          // oriented
bool same_geodesic_unoriented(const Geodesic& g, const Geodesic& h, double tol = 1e-12);

// Point of the open upper half-plane.
struct InteriorPoint {
    double x = 0.0;
    double y = 1.0;

    InteriorPoint() = default;
    InteriorPoint(double x_, double y_);  // errors: DegeneratePoints if y <= 0
    std::complex<double> z() const { return {x, y}; }
    static InteriorPoint from(std::complex<double> z) { return InteriorPoint(z.real(), z.imag()); }
};

// Orientation-preserving isometry of the upper half-plane: unit-determinant
// real 2x2 matrix, identified up to global sign. Stored with canonical sign
// (first nonzero entry of the first row positive). Acts on boundary points
// by the projective linear action and on interior points by the Moebius
// action; both are invariant under the sign choice.
struct Isometry {
    double m00 = 1.0, m01 = 0.0, m10 = 0.0, m11 = 1.0;

    static Isometry identity() { return {}; }
    // Normalizes to det 1 and canonical sign. errors: DegenerateResult if det <= 0.
    static Isometry from_matrix(double a, double b, double c, double d);

    Isometry inverse() const { return from_matrix(m11, -m01, -m10, m00); }
    double trace() const { return m00 + m11; }

    BoundaryPoint operator()(const BoundaryPoint& p) const;
    InteriorPoint operator()(const InteriorPoint& p) const;
    Geodesic operator()(const Geodesic& g) const;

    std::complex<double> moebius(std::complex<double> z) const;
    // d/dz of the Moebius map: 1/(cz+d)^2 for a unit-determinant matrix.
    std::complex<double> derivative(std::complex<double> z) const;
};

Isometry compose(const Isometry& f, const Isometry& g);
inline Isometry operator*(const Isometry& f, const Isometry& g) { return compose(f, g); }

// Frobenius distance up to the global sign ambiguity.
double matrix_distance(const Isometry& f, const Isometry& g);
bool same_isometry(const Isometry& f, const Isometry& g, double tol = 1e-10);

enum class IsomClass { Identity, Elliptic, Parabolic, Hyperbolic };
const char* isom_class_name(IsomClass c);

// By |trace|: < 2 elliptic, = 2 parabolic (or identity), > 2 hyperbolic;
// equality tested with tolerance.
IsomClass classify(const Isometry& f, double tol = 1e-10);

// 2*arccosh(|tr|/2). errors: NotHyperbolic.
double translation_length(const Isometry& f);

// Invariant geodesic, oriented repelling -> attracting fixed point.
// errors: NotHyperbolic.
Geodesic axis(const Isometry& f);

// Isometry translating by signed length u along g (toward g.target for
// u > 0); u = 0 gives the identity.
Isometry translate_along(const Geodesic& g, double u);

// Traceless generator A of the translation flow along g, normalized so that
// T^u_g = cosh(u/2) I + sinh(u/2) A (A^2 = I, eigenvalues +-1).
struct FlowGenerator {
    double a00, a01, a10, a11;
};
FlowGenerator translation_generator(const Geodesic& g);

// Isometry mapping the standard geodesic (0 -> inf) onto g.
Isometry standard_chart(const Geodesic& g);

// Cross-ratio of four pairwise distinct boundary points, evaluated
// projectively as (det(p,q) det(r,s)) / (det(p,s) det(r,q)). With the
// standard three points it gives [0, 1, inf, x] = 1/x.
//
// Convention pinned against the two classical identities for a geodesic
// g = (p -> s) and a second geodesic with endpoints {q, r}:
//   - crossing, with q the endpoint on the left of g and theta the angle
//     from g under the left-pointing convention:  value = cos^2(theta/2);
//   - disjoint at distance d:  value = -sinh^2(d/2), or 1 + sinh^2(d/2)
//     for the swapped q/r order.
// errors: DegeneratePoints.
double cross_ratio(const BoundaryPoint& p, const BoundaryPoint& q, const BoundaryPoint& r,
                   const BoundaryPoint& s);

struct Crossing {
    InteriorPoint point;
    double theta;   // oriented angle from g to h, reduced to (0, pi)
    bool reversed;  // true when h had to be reversed to point left of g
};

// Transversal intersection of two geodesics. Returns the crossing point and
// the angle from g to h under the left-pointing convention: h is reoriented,
// if needed, so that it points to the left when crossed by g, which puts
// theta in (0, pi). `reversed` records whether that flip happened.
// Returns nullopt for disjoint geodesics. errors: SharedEndpoint.
std::optional<Crossing> intersect(const Geodesic& g, const Geodesic& h);

// Distance between disjoint, non-asymptotic geodesics, from
// -sinh^2(d/2) = cross-ratio. errors: Intersecting, SharedEndpoint.
double geodesic_distance(const Geodesic& g, const Geodesic& h);

// Hyperbolic distance between interior points.
double point_distance(const InteriorPoint& p, const InteriorPoint& q);

// Feet of the unique common perpendicular segment: first on g, second on h.
// errors: Intersecting, SharedEndpoint.
std::pair<InteriorPoint, InteriorPoint> common_perpendicular(const Geodesic& g, const Geodesic& h);

// Arc-length coordinate along an oriented geodesic, increasing toward
// g.target, zero at basepoint. errors: PointOffGeodesic if either point is
// farther than `tol` from g.
double signed_position(const Geodesic& g, const InteriorPoint& p, const InteriorPoint& basepoint,
                       double tol = 1e-9);

// Distance from p to the geodesic g.
double distance_to_geodesic(const Geodesic& g, const InteriorPoint& p);

// Geodesic through two distinct interior points, oriented from p to q.
Geodesic geodesic_through(const InteriorPoint& p, const InteriorPoint& q);

// Midpoint of the geodesic segment [p, q].
InteriorPoint segment_midpoint(const InteriorPoint& p, const InteriorPoint& q);

// Point of g closest to z.
InteriorPoint closest_point_on(const Geodesic& g, const InteriorPoint& z);

// True when the endpoint pairs of g and h link on the boundary circle
// (equivalently, the geodesics cross). errors: SharedEndpoint.
bool endpoints_linked(const Geodesic& g, const Geodesic& h);

}  // namespace shearlab
