#pragma once

#include <vector>

#include "shearlab/geometry.hpp"

namespace shearlab {

// One Dirac term of a finite transverse distribution: a leaf geodesic
// crossing the axis of the owning config, with a signed mass.
struct Leaf {
    Geodesic geodesic;
    double weight = 0.0;
};

// Crossing of a leaf with the (possibly deformed) axis: arc position s in
// [0, length), angle theta in (0, pi) under the left-pointing convention,
// and the leaf's weight.
struct CrossingData {
    double s = 0.0;
    double theta = 0.0;
    double weight = 0.0;
};

struct BuildOptions {
    int k_check = 3;  // window of gamma-powers for the disjointness check
};

// A hyperbolic deck isometry gamma together with finitely many weighted
// leaves crossing its axis within one fundamental period. Leaves are stored
// sorted by crossing position and reoriented to point to the left when
// crossed by the axis, so every stored angle lies in (0, pi) and cos(theta)
// carries the full sign information of the derivative formulas.
struct ShearConfig {
    Isometry gamma;
    Geodesic axis;
    double length = 0.0;      // translation length of gamma
    InteriorPoint basepoint;  // on the axis; crossing positions are mod length from here
    std::vector<Leaf> leaves;
    std::vector<CrossingData> crossings;  // aligned with leaves

    std::size_t size() const { return leaves.size(); }
};

// Validates and canonicalizes a configuration.
// errors: NotHyperbolic, LeafMissesAxis, LeavesCross, DuplicateCrossing.
ShearConfig build_config(const Isometry& gamma, const std::vector<Leaf>& leaves,
                         const std::optional<InteriorPoint>& basepoint = std::nullopt,
                         const BuildOptions& opts = {});

// The sheared holonomy at deformation parameter t: the ordered product
// T^{t a_1}_{l_1} ... T^{t a_n}_{l_n} composed with gamma, factors by
// increasing crossing position. This is the telescoped finite-Dirac form of
// the ordered product construction. errors: DegenerateResult when the
// product is not hyperbolic at the requested t.
Isometry sheared_isometry(const ShearConfig& config, double t);

// Translation length of the sheared isometry.
double deformed_length(const ShearConfig& config, double t);

// Leaf j transported by the prefix product of the translations before it.
std::vector<Geodesic> deformed_leaves(const ShearConfig& config, double t);

// True when the given leaves and their translates under powers of g
// (|k| <= k_check) are pairwise disjoint or identical.
bool leaves_disjoint(const std::vector<Geodesic>& leaves, const Isometry& g, int k_check = 3);

// Crossing data of the deformed leaves against the deformed axis, in the
// same leaf order as the config. errors: CrossingLost, DegenerateResult.
std::vector<CrossingData> deformed_crossings(const ShearConfig& config, double t);

// Unoriented arc distance between crossings i and j: min(|ds|, length-|ds|).
double arc_distance(const ShearConfig& config, std::size_t i, std::size_t j);

// Oriented arc distance from crossing i forward to crossing j:
// (s_j - s_i) mod length, in [0, length).
double arc_distance_oriented(const ShearConfig& config, std::size_t i, std::size_t j);

// ---------------------------------------------------------------------------
// Spiralling-lamination example: gamma(z) = e^L z with bi-infinite families
// of vertical leaves g_i (left of the imaginary axis) and their mirror
// images h_i, accumulating on the axis with g_{i+2} = gamma^{-1}(g_i).

struct SpiralParams {
    double L = 2.0;                 // translation length of gamma
    double g0 = -4.0;               // seed positions, g0 < g1 < 0
    double g1 = -2.0;
    std::vector<double> g_masses;   // Dirac mass on g_i, i = 1..n
    std::vector<double> h_masses;   // Dirac mass on h_i, i = 1..n
    double total_mass = 0.0;        // prescribed mass of a P0-to-Q0 arc
};

class SpiralFamily {
  public:
    explicit SpiralFamily(const SpiralParams& params);  // errors: BadSeedLeaves

    const SpiralParams& params() const { return params_; }
    Isometry gamma() const;
    Geodesic g_leaf(int i) const;  // vertical leaf at g position i (0-based family index)
    Geodesic h_leaf(int i) const;

    // One-sided ordered partial product T^{w_1}_{g_1} ... T^{w_k}_{g_k}
    // with the per-gap masses w_i.
    Isometry phi_partial(int k) const;

    // Pair-structured partial product, one T^{c_i} T^{-c_i} pair per
    // component with cumulative masses c_i; this is the form whose partial
    // products stay Cauchy even when cumulative masses grow.
    Isometry phi_pair_partial(int k) const;

    // Naive two-sided ordering: g-side ascending then h-side descending.
    Isometry psi_partial(int k) const;

    // Interleaved two-sided ordering with the closing factor T^{total_mass}.
    Isometry interleaved_partial(int k) const;

    // Holonomy of the closed leaf deformed by the first two gaps:
    // T^{w_1}_{g_1} T^{w_2}_{g_2} gamma. Its translation length is
    // L + w_1 + w_2 exactly (all factors are affine maps).
    Isometry closed_leaf_isometry() const;

    // Dilation factor of an affine map z -> e^u z + const.
    // errors: DegenerateResult if the matrix is not upper-triangular.
    static double dilation(const Isometry& f);

  private:
    double g_position(int i) const;
    SpiralParams params_;
    int n_;
};

SpiralFamily spiral_config(const SpiralParams& params);

}  // namespace shearlab
