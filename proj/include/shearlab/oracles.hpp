#pragma once

#include <functional>

#include "shearlab/shear.hpp"

namespace shearlab {

// Central finite differences with Richardson extrapolation.
struct FDSpec {
    int order = 1;       // 1..3
    double h0 = 1e-2;    // base step, in [1e-4, 1e-1]
    int levels = 4;      // Richardson levels, >= 2
};

// Defaults balancing truncation against cancellation at double precision:
// h0 = 1e-2 with 4 levels for orders 1-2, h0 = 5e-2 with 3 levels for
// order 3. Pinned by the exp self-test.
FDSpec default_fd_spec(int order);

struct FDResult {
    double value = 0.0;
    double error_estimate = 0.0;  // from the extrapolation tableau
};

// Derivative of f at 0 of the given order. errors: NonFiniteSample,
// UnsupportedOrder, Internal on a malformed spec.
FDResult fd_derivative(const std::function<double(double)>& f, int order, const FDSpec& spec);
FDResult fd_derivative(const std::function<double(double)>& f, int order);

// First-order dual number: value and first derivative carried together.
struct Dual {
    double v = 0.0;
    double d = 0.0;

    Dual() = default;
    Dual(double value, double deriv = 0.0) : v(value), d(deriv) {}

    Dual operator+(const Dual& o) const { return {v + o.v, d + o.d}; }
    Dual operator-(const Dual& o) const { return {v - o.v, d - o.d}; }
    Dual operator*(const Dual& o) const { return {v * o.v, v * o.d + d * o.v}; }
    Dual operator*(double k) const { return {v * k, d * k}; }
};

// Exact first derivative of t -> deformed_length(config, t) at t = 0,
// carried through the matrix product and the arccosh of the trace.
// errors: TraceTooClose when |tr| <= 2 + 1e-8.
double dual_derivative(const ShearConfig& config);

// --- spiral approximation experiment ----------------------------------------

struct ConvergenceTrace {
    int index = 0;             // n
    double matrix_delta = 0.0; // || phi_{n+1} - phi_n || (pair-structured partials)
    double derivative_value = 0.0;  // closed-leaf first derivative of the n-truncation
};

struct SpiralConvergenceReport {
    std::vector<ConvergenceTrace> traces;
    double fitted_slope = 0.0;      // least-squares slope of log(delta) vs n
    double closed_leaf_length = 0.0;
    double closed_leaf_expected = 0.0;  // L + w1 + w2
    std::vector<double> psi_dilation;
    std::vector<double> interleaved_dilation;
};

// Runs the spiralling-lamination experiment: Cauchy deltas of the
// pair-structured partial products, per-n closed-leaf derivative values,
// and the dilation factors of the two orderings of the two-sided product.
SpiralConvergenceReport spiral_convergence(const SpiralParams& params);

}  // namespace shearlab
