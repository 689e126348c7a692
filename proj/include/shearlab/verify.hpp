#pragma once

#include <string>

#include "shearlab/hessian.hpp"
#include "shearlab/oracles.hpp"
#include "shearlab/twist.hpp"

namespace shearlab::verify {

// --- seeded random scenes ----------------------------------------------------

struct ConfigOptions {
    int min_leaves = 2;
    int max_leaves = 6;
    double min_length = 0.5;
    double max_length = 5.0;
    double min_weight = -1.0;
    double max_weight = 1.0;
    // Obliqueness budget: leaf angles are drawn as theta = 2 atan(e^tau)
    // with |tau| below both this cap and 0.45 times the adjacent crossing
    // gaps, which keeps every leaf disjoint from the others and from all
    // gamma-translates (a leaf's endpoints sit at axis coordinates s + tau
    // and s - tau up to the orientation).
    double tau_cap = 0.9;
    double min_gap_frac = 0.10;   // minimal crossing gap as a fraction of length
    bool conjugate = true;        // move half the scenes out of the standard chart
};

// Geodesic crossing the imaginary axis at height e^s with angle theta,
// oriented to point left when the axis is walked upward.
Geodesic standard_crossing_leaf(double s, double theta);

ShearConfig random_config(Rng& rng, const ConfigOptions& opts = {});

TwistScene random_twist_scene(Rng& rng, int n_probes = 2);

// --- acceptance checks ---------------------------------------------------------

struct CheckResult {
    std::string id;    // criterion tag, e.g. "C3.2"
    std::string name;
    bool pass = false;
    double max_err = 0.0;
    double tol = 0.0;
    int cases = 0;
    std::string note;
};

// Relative error with a scale floor guarding near-zero denominators.
double rel_err(double value, double oracle, double floor_scale);

// Runs one acceptance criterion (1..8); `cases` scales the sample counts
// (cases <= 0 runs nothing and returns an empty list).
std::vector<CheckResult> run_criterion(int criterion, std::uint64_t seed, int cases);

// Named suites: kernel {7}, derivatives {1,2,6,8}, twist {3}, hessian {4},
// spiral {5}, all {1..8}. errors: Schema for an unknown suite name.
std::vector<CheckResult> run_suite(const std::string& suite, std::uint64_t seed, int cases);

}  // namespace shearlab::verify
