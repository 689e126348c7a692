#include "shearlab/shear.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace shearlab {

namespace {

double reduce_mod(double x, double period) {
    double m = std::fmod(x, period);
    if (m < 0.0) m += period;
    if (m >= period) m -= period;
    return m;
}

}  // namespace

ShearConfig build_config(const Isometry& gamma, const std::vector<Leaf>& leaves,
                         const std::optional<InteriorPoint>& basepoint, const BuildOptions& opts) {
    if (classify(gamma) != IsomClass::Hyperbolic)
        fail(Errc::NotHyperbolic, "shear config needs a hyperbolic deck isometry");

    ShearConfig cfg{gamma, axis(gamma), translation_length(gamma), InteriorPoint(0.0, 1.0), {}, {}};
    cfg.basepoint = basepoint ? *basepoint : closest_point_on(cfg.axis, InteriorPoint(0.0, 1.0));
    if (basepoint && distance_to_geodesic(cfg.axis, *basepoint) > tolerances().geometric * 10.0)
        fail(Errc::PointOffGeodesic, "basepoint must lie on the axis of gamma");

    struct Entry {
        Leaf leaf;
        CrossingData data;
    };
    std::vector<Entry> entries;
    entries.reserve(leaves.size());

    for (const Leaf& lf : leaves) {
        std::optional<Crossing> cr;
        try {
            cr = intersect(cfg.axis, lf.geodesic);
        } catch (const Error& e) {
            if (e.code() == Errc::SharedEndpoint)
                fail(Errc::LeafMissesAxis, "leaf is asymptotic to the axis");
            throw;
        }
        if (!cr) fail(Errc::LeafMissesAxis, "leaf does not cross the axis");
        Leaf stored = lf;
        if (cr->reversed) stored.geodesic = lf.geodesic.reversed();
        double s = reduce_mod(signed_position(cfg.axis, cr->point, cfg.basepoint), cfg.length);
        // a crossing exactly at the basepoint must not land at s = length
        // through rounding: the product order and the leaf's lift window
        // both key off the reduced position
        if (s > cfg.length - 1e-12 * std::max(1.0, cfg.length)) s = 0.0;
        entries.push_back({stored, CrossingData{s, cr->theta, lf.weight}});
    }

    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.data.s < b.data.s; });

    for (std::size_t i = 0; i + 1 < entries.size(); ++i)
        if (entries[i + 1].data.s - entries[i].data.s <= tolerances().geometric)
            fail(Errc::DuplicateCrossing, "two leaves cross the axis at the same position");
    if (entries.size() >= 2) {
        double wrap = entries.front().data.s + cfg.length - entries.back().data.s;
        if (wrap <= tolerances().geometric)
            fail(Errc::DuplicateCrossing, "two leaves cross the axis at the same position (mod length)");
    }

    std::vector<Geodesic> geos;
    geos.reserve(entries.size());
    for (const Entry& e : entries) geos.push_back(e.leaf.geodesic);
    if (!leaves_disjoint(geos, gamma, opts.k_check))
        fail(Errc::LeavesCross, "leaves (or their gamma-translates) intersect");

    for (Entry& e : entries) {
        cfg.leaves.push_back(std::move(e.leaf));
        cfg.crossings.push_back(e.data);
    }
    return cfg;
}

bool leaves_disjoint(const std::vector<Geodesic>& leaves, const Isometry& g, int k_check) {
    auto crosses = [](const Geodesic& a, const Geodesic& b) {
        if (same_geodesic_unoriented(a, b, 1e-9)) return false;
        try {
            return endpoints_linked(a, b);
        } catch (const Error& e) {
            if (e.code() == Errc::SharedEndpoint) return false;  // asymptotic leaves are disjoint
            throw;
        }
    };
    for (std::size_t i = 0; i < leaves.size(); ++i)
        for (std::size_t j = i + 1; j < leaves.size(); ++j)
            if (crosses(leaves[i], leaves[j])) return false;
    Isometry pow = Isometry::identity();
    for (int k = 1; k <= k_check; ++k) {
        pow = pow * g;
        Isometry inv = pow.inverse();
        for (std::size_t i = 0; i < leaves.size(); ++i) {
            Geodesic fwd = pow(leaves[i]);
            Geodesic bwd = inv(leaves[i]);
            for (std::size_t j = 0; j < leaves.size(); ++j) {
                if (crosses(fwd, leaves[j]) || crosses(bwd, leaves[j])) return false;
            }
        }
    }
    return true;
}

Isometry sheared_isometry(const ShearConfig& config, double t) {
    Isometry m = Isometry::identity();
    for (std::size_t i = 0; i < config.size(); ++i)
        m = m * translate_along(config.leaves[i].geodesic, t * config.leaves[i].weight);
    m = m * config.gamma;
    if (t != 0.0 && classify(m) != IsomClass::Hyperbolic)
        fail(Errc::DegenerateResult, "sheared isometry is not hyperbolic at t=" + std::to_string(t));
    return m;
}

double deformed_length(const ShearConfig& config, double t) {
    return translation_length(sheared_isometry(config, t));
}

std::vector<Geodesic> deformed_leaves(const ShearConfig& config, double t) {
    std::vector<Geodesic> out;
    out.reserve(config.size());
    Isometry prefix = Isometry::identity();
    for (std::size_t j = 0; j < config.size(); ++j) {
        out.push_back(prefix(config.leaves[j].geodesic));
        prefix = prefix * translate_along(config.leaves[j].geodesic, t * config.leaves[j].weight);
    }
    return out;
}

std::vector<CrossingData> deformed_crossings(const ShearConfig& config, double t) {
    Isometry gt = sheared_isometry(config, t);
    Geodesic axis_t = axis(gt);
    double len_t = translation_length(gt);
    InteriorPoint base_t = closest_point_on(axis_t, InteriorPoint(0.0, 1.0));
    std::vector<Geodesic> lv = deformed_leaves(config, t);

    std::vector<CrossingData> out;
    out.reserve(lv.size());
    for (std::size_t j = 0; j < lv.size(); ++j) {
        std::optional<Crossing> cr;
        try {
            cr = intersect(axis_t, lv[j]);
        } catch (const Error& e) {
            if (e.code() == Errc::SharedEndpoint)
                fail(Errc::CrossingLost, "deformed leaf became asymptotic to the deformed axis");
            throw;
        }
        if (!cr) fail(Errc::CrossingLost, "deformed leaf no longer crosses the deformed axis");
        double s = reduce_mod(signed_position(axis_t, cr->point, base_t), len_t);
        out.push_back(CrossingData{s, cr->theta, config.leaves[j].weight});
    }
    return out;
}

double arc_distance(const ShearConfig& config, std::size_t i, std::size_t j) {
    double d = arc_distance_oriented(config, i, j);
    return std::min(d, config.length - d);
}

double arc_distance_oriented(const ShearConfig& config, std::size_t i, std::size_t j) {
    if (i >= config.size() || j >= config.size()) fail(Errc::Internal, "crossing index out of range");
    if (i == j) return 0.0;
    return reduce_mod(config.crossings[j].s - config.crossings[i].s, config.length);
}

// --- spiral example ---------------------------------------------------------

SpiralFamily::SpiralFamily(const SpiralParams& params) : params_(params) {
    if (!(params.L > 0.0)) fail(Errc::BadSeedLeaves, "spiral needs L > 0");
    if (!(params.g0 < params.g1 && params.g1 < 0.0))
        fail(Errc::BadSeedLeaves, "seed leaves must satisfy g0 < g1 < 0 (nested verticals)");
    if (params.h_masses.size() != params.g_masses.size() && !params.h_masses.empty())
        fail(Errc::BadSeedLeaves, "h_masses must be empty or match g_masses in size");
    n_ = static_cast<int>(params.g_masses.size());
}

SpiralFamily spiral_config(const SpiralParams& params) { return SpiralFamily(params); }

Isometry SpiralFamily::gamma() const {
    double e = std::exp(params_.L / 2.0);
    return Isometry::from_matrix(e, 0.0, 0.0, 1.0 / e);
}

double SpiralFamily::g_position(int i) const {
    // g_{2k} = gamma^{-k}(g_0), g_{2k+1} = gamma^{-k}(g_1)
    double seed = (i % 2 == 0) ? params_.g0 : params_.g1;
    int k = i / 2;
    return seed * std::exp(-params_.L * k);
}

Geodesic SpiralFamily::g_leaf(int i) const {
    return Geodesic(BoundaryPoint::finite(g_position(i)), BoundaryPoint::infinity());
}

Geodesic SpiralFamily::h_leaf(int i) const {
    return Geodesic(BoundaryPoint::finite(-g_position(i)), BoundaryPoint::infinity());
}

Isometry SpiralFamily::phi_partial(int k) const {
    Isometry m = Isometry::identity();
    for (int i = 1; i <= std::min(k, n_); ++i)
        m = m * translate_along(g_leaf(i), params_.g_masses[static_cast<std::size_t>(i - 1)]);
    return m;
}

Isometry SpiralFamily::phi_pair_partial(int k) const {
    Isometry m = Isometry::identity();
    double cum = 0.0;
    for (int i = 1; i <= std::min(k, n_); ++i) {
        cum += params_.g_masses[static_cast<std::size_t>(i - 1)];
        m = m * translate_along(g_leaf(i), cum) * translate_along(g_leaf(i + 1), -cum);
    }
    return m;
}

Isometry SpiralFamily::psi_partial(int k) const {
    int kk = std::min(k, n_);
    Isometry m = phi_partial(kk);
    if (!params_.h_masses.empty()) {
        for (int i = kk; i >= 1; --i)
            m = m * translate_along(h_leaf(i), params_.h_masses[static_cast<std::size_t>(i - 1)]);
    }
    return m;
}

Isometry SpiralFamily::interleaved_partial(int k) const {
    int kk = std::min(k, n_);
    Isometry m = Isometry::identity();
    double cum = 0.0;
    for (int i = 1; i <= kk; ++i) {
        cum += params_.g_masses[static_cast<std::size_t>(i - 1)];
        m = m * translate_along(g_leaf(i), cum) * translate_along(g_leaf(i + 1), -cum);
    }
    if (!params_.h_masses.empty()) {
        double qcum = 0.0;
        std::vector<double> q(static_cast<std::size_t>(kk) + 1, 0.0);
        for (int i = 1; i <= kk; ++i) {
            qcum += params_.h_masses[static_cast<std::size_t>(i - 1)];
            q[static_cast<std::size_t>(i)] = qcum;
        }
        for (int j = kk; j >= 1; --j) {
            double mass = params_.total_mass - q[static_cast<std::size_t>(j)];
            m = m * translate_along(h_leaf(j + 1), mass) * translate_along(h_leaf(j), -mass);
        }
    }
    return m * translate_along(h_leaf(1), params_.total_mass);
}

Isometry SpiralFamily::closed_leaf_isometry() const {
    if (n_ < 2) fail(Errc::BadSeedLeaves, "closed-leaf holonomy needs at least two gap masses");
    return phi_partial(2) * gamma();
}

double SpiralFamily::dilation(const Isometry& f) {
    double scale = std::abs(f.m00) + std::abs(f.m01) + std::abs(f.m10) + std::abs(f.m11);
    if (std::abs(f.m10) > 1e-9 * scale)
        fail(Errc::DegenerateResult, "dilation factor needs an affine (upper-triangular) map");
    return f.m00 / f.m11;
}

}  // namespace shearlab
