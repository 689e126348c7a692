#pragma once

#include <span>

#include "shearlab/derivatives.hpp"

namespace shearlab {

// Dense symmetric matrix, symmetrized on construction.
class SymMatrix {
  public:
    // errors: Internal on a non-square list, HypothesesFail when asymmetry
    // exceeds 1e-12 * scale (entries are then averaged).
    static SymMatrix from_rows(const std::vector<std::vector<double>>& rows);
    static SymMatrix zero(std::size_t n);

    std::size_t n() const { return n_; }
    double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
    double& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }

    double quadratic_form(std::span<const double> x) const;

  private:
    explicit SymMatrix(std::size_t n) : n_(n), a_(n * n, 0.0) {}
    std::size_t n_ = 0;
    std::vector<double> a_;
};

enum class Verdict { Definite, Semidefinite, NotApplicable };
const char* verdict_name(Verdict v);

struct PositivityCertificate {
    Verdict verdict = Verdict::NotApplicable;
    std::vector<double> pivots;              // diagonal after plain Gauss elimination
    std::vector<double> lower_bound_coeffs;  // d_i = min_{j != i} (a_ii - a_ij)
    bool hypotheses_hold = false;            // a_ij >= 0 and a_ii >= a_ij (strict or weak)
    bool hypotheses_strict = false;          // a_ii > a_ij for j != i
    bool proof_invariant_held = false;       // row dominance survived every elimination step
    bool generic_ran = false;                // pivot factorization used outside the hypotheses
    bool generic_definite = false;           // ... and found all pivots positive
    std::string note;
};

// Plain Gauss elimination (no pivoting). The verdict is decided by the
// pivots, which is exactly Sylvester's criterion and always sound:
// every pivot positive gives Definite, pivots nonnegative Semidefinite.
//
// Row-wise entrywise dominance (a_ij >= 0, a_ii > a_ij) does NOT by itself
// force positive pivots: chain-structured matrices such as
// [[1, .99, 0], [.99, 1, .99], [0, .99, 1]] satisfy the hypotheses yet are
// indefinite, because the dominance invariant breaks during elimination.
// The certificate therefore records whether the hypotheses held and
// whether the elimination preserved the dominance invariant step by step;
// when both hold the dominance argument is valid for this instance. A
// hypothesis-satisfying matrix with a negative pivot is reported
// NotApplicable with a note. Matrices outside the hypotheses get the same
// pivot factorization, reported through generic_ran / generic_definite.
PositivityCertificate gauss_positivity(const SymMatrix& a);

// Quadratic form value and the entrywise lower bound sum d_i x_i^2 with
// d_i = min_{j != i} (a_ii - a_ij). errors: HypothesesFail unless
// a_ij >= 0 and a_ii >= a_ij.
//
// value >= bound holds exactly when A - diag(d) is positive semidefinite,
// which the hypotheses alone do not guarantee (see above);
// lower_bound_certified checks it by elimination.
std::pair<double, double> quadratic_lower_bound(const SymMatrix& a, std::span<const double> x);

// True when A - diag(d) passes the pivot check, certifying the bound above
// for every vector.
bool lower_bound_certified(const SymMatrix& a);

// H_ij = cosh(length/2 - d_{p_i p_j}) over the config's crossings. With
// B_i = a_i sin(theta_i), B^T H B / (2 sinh(length/2)) equals d2_length.
SymMatrix hessian_matrix(const ShearConfig& config);

// Effective lower bound for d2_length:
//   1/(2 sinh(u)) * sum_i sinh(u - eps_i) eps_i a_i^2 sin^2(theta_i),
// with eps_i the minimal arc gap from crossing i to any other crossing.
// errors: SingleCrossing for configs with fewer than two crossings.
//
// The inequality d2 >= bound is not universal: it holds exactly when
// H - diag(sinh(u - eps_i) eps_i) is positive semidefinite, which fails
// for a small fraction of crossing patterns (weight vectors aligned with a
// slightly negative eigenvector then violate it). hessian_bound_certified
// reports whether the bound is certified for the given config.
double hessian_lower_bound(const ShearConfig& config);

bool hessian_bound_certified(const ShearConfig& config);

// Multicurve version, summed per component over the designated crossing
// indices (empty = all). errors: SingleCrossing as above.
double hessian_lower_bound_multicurve(const WeightedMulticurve& mc,
                                      const std::vector<std::size_t>& arcs = {});

}  // namespace shearlab
