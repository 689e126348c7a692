#pragma once

#include <optional>

#include "shearlab/shear.hpp"

namespace shearlab {

// Closed-form derivatives of t -> deformed_length(config, t) at t = 0.
//
// Notation in the formulas below: crossings p, q, r with weights a, angles
// theta (left-pointing convention), u = length/2, and oriented arc
// distances d_pq = (s_q - s_p) mod length.

// First derivative: sum over crossings of a_p cos(theta_p).
double d1_length(const ShearConfig& config);

// Second derivative:
//   1/(2 sinh u) * sum_{p,q} a_p a_q cosh(u - d_pq) sin(theta_p) sin(theta_q),
// including the diagonal terms with d_pp = 0.
double d2_length(const ShearConfig& config);

// Third derivative as a closed triple sum:
//   -1/(2 sinh^2 u) * sum_{p,q,r} a_p a_q a_r (3/2) K_pqr
//                      sin(theta_p) sin(theta_q) cos(theta_r),
// where K_pqr = cosh of the length of the arc of gamma between p and q that
// avoids r. Coincident indices take the split-atom average of that kernel:
//   p = q != r              -> 1
//   r in {p, q}, p != q     -> cosh(u) cosh(u - d_pq)
//   p = q = r               -> (2 + cosh(2u)) / 3.
// The averages are what the triple sum degenerates to when an atom is split
// into several parallel leaves and the splitting width tends to zero; the
// convention test checks this reading against the finite-difference oracle.
double d3_length(const ShearConfig& config);

// Diagnostic variants of the third-derivative triple sum that evaluate the
// integrand literally with oriented ((s_q - s_p) mod length, diagonal 0) or
// unoriented (min of the two arcs) distances everywhere. Used only by the
// convention-pinning test, which records that neither matches the oracle on
// configs with charged diagonals.
double d3_length_literal_oriented(const ShearConfig& config);
double d3_length_literal_unoriented(const ShearConfig& config);

// Variation of cos(theta_p) / sin(theta_p) at crossing i:
//   d cos(theta_i) =  sin(theta_i)/(2 sinh u) * sum_q a_q cosh(u - d_iq) sin(theta_q)
//   d sin(theta_i) = -cos(theta_i)/(2 sinh u) * (same sum)
// The pair satisfies sin*dsin + cos*dcos = 0 identically.
double d_cos_theta(const ShearConfig& config, std::size_t i);
double d_sin_theta(const ShearConfig& config, std::size_t i);

// Variation of the oriented arc distance from crossing i to crossing j:
// the sum of a_r cos(theta_r) over crossings strictly between i and j, plus
// the cotangent correction
//   1/(2 sinh u) * sum_r a_r sin(theta_r)
//       [ sinh(u - D(r,i)) cot(theta_i) - sinh(u - D(r,j)) cot(theta_j) ],
// where D(r,x) is the oriented distance from r forward to x, read as 0 for
// the atom at the segment start (r = i) and as the full length for the atom
// at the segment end (r = j). errors: Internal on i == j or out of range.
double d_arc_distance(const ShearConfig& config, std::size_t i, std::size_t j);

// Order-k derivative assembled by differentiating the order-(k-1) sum term
// by term with d_cos_theta / d_sin_theta / d_arc_distance and the chain
// rule. Independent assembly from the closed forms above; must agree with
// them. errors: UnsupportedOrder unless k is 2 or 3.
double recursive_derivative(const ShearConfig& config, int order);

// Finite weighted multicurve: components over one shared leaf system.
struct WeightedMulticurve {
    std::vector<ShearConfig> components;
    std::vector<double> mu;  // nonnegative weights, aligned with components
};

// Validates shared leaves and nonnegative weights.
// errors: Schema on shape mismatch, HypothesesFail on negative weights or
// differing leaf systems.
WeightedMulticurve make_multicurve(std::vector<ShearConfig> components, std::vector<double> mu);

// Weighted first derivative: sum_k mu_k d1_length(component_k).
double d1_length_multicurve(const WeightedMulticurve& mc);

struct DerivativeReport {
    int order = 1;
    double formula_value = 0.0;
    std::optional<double> oracle_value;
    std::optional<double> abs_err;
    std::optional<double> rel_err;
};

}  // namespace shearlab
