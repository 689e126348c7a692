#include "shearlab/verify.hpp"

#include <algorithm>
#include <cmath>

namespace shearlab::verify {

Geodesic standard_crossing_leaf(double s, double theta) {
    double y = std::exp(s);
    double c = -y / std::tan(theta);
    double r = std::hypot(c, y);
    return Geodesic(BoundaryPoint::finite(c + r), BoundaryPoint::finite(c - r));
}

namespace {

Isometry random_conjugator(Rng& rng) {
    double phi = rng.uniform(-1.2, 1.2);
    Isometry rot = Isometry::from_matrix(std::cos(phi), std::sin(phi), -std::sin(phi), std::cos(phi));
    Isometry dil = Isometry::from_matrix(std::exp(rng.uniform(-0.7, 0.7)), 0.0, 0.0,
                                         std::exp(-rng.uniform(-0.7, 0.7)));
    Isometry par = Isometry::from_matrix(1.0, rng.uniform(-1.5, 1.5), 0.0, 1.0);
    return rot * dil * par;
}

Isometry standard_gamma(double length) {
    double e = std::exp(length / 2.0);
    return Isometry::from_matrix(e, 0.0, 0.0, 1.0 / e);
}

}  // namespace

ShearConfig random_config(Rng& rng, const ConfigOptions& opts) {
    for (int attempt = 0; attempt < 400; ++attempt) {
        double length = rng.uniform(opts.min_length, opts.max_length);
        int n = rng.uniform_int(opts.min_leaves, opts.max_leaves);
        double min_gap = opts.min_gap_frac * length;

        std::vector<double> pos(static_cast<std::size_t>(n));
        for (double& p : pos) p = rng.uniform(0.0, length);
        std::sort(pos.begin(), pos.end());
        bool gaps_ok = true;
        for (int i = 0; i + 1 < n; ++i)
            gaps_ok = gaps_ok && (pos[static_cast<std::size_t>(i + 1)] - pos[static_cast<std::size_t>(i)] >= min_gap);
        if (n >= 2)
            gaps_ok = gaps_ok && (pos.front() + length - pos.back() >= min_gap);
        if (!gaps_ok) continue;

        bool conj = opts.conjugate && rng.coin();
        Isometry w = conj ? random_conjugator(rng) : Isometry::identity();
        Isometry gamma = conj ? w * standard_gamma(length) * w.inverse() : standard_gamma(length);

        std::vector<Leaf> leaves;
        leaves.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            double gap_prev = (i == 0) ? pos.front() + length - pos.back()
                                       : pos[static_cast<std::size_t>(i)] - pos[static_cast<std::size_t>(i - 1)];
            double gap_next = (i == n - 1) ? pos.front() + length - pos.back()
                                           : pos[static_cast<std::size_t>(i + 1)] - pos[static_cast<std::size_t>(i)];
            if (n == 1) gap_prev = gap_next = length;
            double budget = std::min(opts.tau_cap, 0.45 * std::min(gap_prev, gap_next));
            double tau = rng.uniform(-budget, budget);
            double theta = 2.0 * std::atan(std::exp(tau));
            double weight = rng.uniform(opts.min_weight, opts.max_weight);
            leaves.push_back(
                Leaf{w(standard_crossing_leaf(pos[static_cast<std::size_t>(i)], theta)), weight});
        }
        try {
            return build_config(gamma, leaves, w(InteriorPoint(0.0, 1.0)));
        } catch (const Error& e) {
            if (e.code() == Errc::LeavesCross || e.code() == Errc::DuplicateCrossing) continue;
            throw;
        }
    }
    fail(Errc::Internal, "random_config failed to produce a valid configuration");
}

TwistScene random_twist_scene(Rng& rng, int n_probes) {
    for (int attempt = 0; attempt < 400; ++attempt) {
        double length = rng.uniform(1.0, 4.0);
        double tau_h = rng.uniform(-0.9, 0.9);
        double theta_h = 2.0 * std::atan(std::exp(tau_h));
        bool conj = rng.coin();
        Isometry w = conj ? random_conjugator(rng) : Isometry::identity();
        Isometry gamma = conj ? w * standard_gamma(length) * w.inverse() : standard_gamma(length);
        Geodesic h = w(standard_crossing_leaf(0.0, theta_h));

        std::vector<Geodesic> probes;
        bool ok = true;
        for (int i = 0; i < n_probes && ok; ++i) {
            bool placed = false;
            for (int tries = 0; tries < 60 && !placed; ++tries) {
                double x = rng.uniform(0.18 * length, 0.82 * length);
                double budget = std::min(0.8, 0.45 * std::min(x, length - x));
                double th = 2.0 * std::atan(std::exp(tau_h + rng.uniform(-budget, budget)));
                Geodesic candidate = w(standard_crossing_leaf(x, th));
                try {
                    std::vector<Geodesic> trial = probes;
                    trial.push_back(candidate);
                    make_twist_scene(gamma, h, trial);
                    probes = trial;
                    placed = true;
                } catch (const Error&) {
                }
            }
            ok = placed;
        }
        if (!ok) continue;
        try {
            return make_twist_scene(gamma, h, probes);
        } catch (const Error&) {
            continue;
        }
    }
    fail(Errc::Internal, "random_twist_scene failed to produce a valid scene");
}

double rel_err(double value, double oracle, double floor_scale) {
    return std::abs(value - oracle) / std::max(std::abs(oracle), floor_scale);
}

// --- criteria ----------------------------------------------------------------

namespace {

struct Collector {
    std::vector<CheckResult> results;

    void record(const std::string& id, const std::string& name, double max_err, double tol,
                int cases, const std::string& note = "") {
        results.push_back({id, name, max_err <= tol, max_err, tol, cases, note});
    }
    void record_flag(const std::string& id, const std::string& name, bool pass, int cases,
                     const std::string& note = "") {
        results.push_back({id, name, pass, pass ? 0.0 : 1.0, 0.0, cases, note});
    }
};

double config_weight_scale(const ShearConfig& cfg, int order) {
    double s = 0.0;
    for (const auto& c : cfg.crossings) s += std::abs(c.weight);
    return 0.01 * std::max(1.0, std::pow(s, order));
}

// C1: closed-form derivatives against the dual-number and FD oracles.
void criterion1(Collector& out, std::uint64_t seed, int cases) {
    Rng rng(seed ^ 0xc1);
    int n = std::max(cases, 200);
    double e_dual = 0.0, e1 = 0.0, e2 = 0.0, e3 = 0.0;
    for (int k = 0; k < n; ++k) {
        ShearConfig cfg = random_config(rng);
        auto f = [&](double t) { return deformed_length(cfg, t); };
        double d1 = d1_length(cfg);
        e_dual = std::max(e_dual, rel_err(d1, dual_derivative(cfg), config_weight_scale(cfg, 1)));
        e1 = std::max(e1, rel_err(d1, fd_derivative(f, 1).value, config_weight_scale(cfg, 1)));
        e2 = std::max(e2,
                      rel_err(d2_length(cfg), fd_derivative(f, 2).value, config_weight_scale(cfg, 2)));
        e3 = std::max(e3,
                      rel_err(d3_length(cfg), fd_derivative(f, 3).value, config_weight_scale(cfg, 3)));
    }
    out.record("C1.1", "d1 vs dual-number oracle", e_dual, 1e-10, n);
    out.record("C1.2", "d1 vs Richardson FD", e1, 1e-8, n);
    out.record("C1.3", "d2 vs Richardson FD", e2, 1e-6, n);
    out.record("C1.4", "d3 vs Richardson FD", e3, 1e-4, n);
}

// Continuous branch of the oriented arc distance between crossings i and j
// of the deformed configuration.
double deformed_gap(const ShearConfig& cfg, std::size_t i, std::size_t j, double t, double ref) {
    auto cr = deformed_crossings(cfg, t);
    double len = deformed_length(cfg, t);
    double d = cr[j].s - cr[i].s;
    d -= len * std::floor(d / len);
    if (d - ref > len / 2.0) d -= len;
    if (ref - d > len / 2.0) d += len;
    return d;
}

// C2: auxiliary derivative formulas against FD of the deformed configuration.
void criterion2(Collector& out, std::uint64_t seed, int cases) {
    Rng rng(seed ^ 0xc2);
    int n = std::max(cases, 100);
    double e_cos = 0.0, e_sin = 0.0, e_arc = 0.0, e_pyth = 0.0;
    for (int k = 0; k < n; ++k) {
        ShearConfig cfg = random_config(rng);
        std::size_t m = cfg.size();
        for (std::size_t i = 0; i < m; ++i) {
            auto fcos = [&](double t) { return std::cos(deformed_crossings(cfg, t)[i].theta); };
            auto fsin = [&](double t) { return std::sin(deformed_crossings(cfg, t)[i].theta); };
            double dcos = d_cos_theta(cfg, i);
            double dsin = d_sin_theta(cfg, i);
            e_cos = std::max(e_cos, rel_err(dcos, fd_derivative(fcos, 1).value, 0.01));
            e_sin = std::max(e_sin, rel_err(dsin, fd_derivative(fsin, 1).value, 0.01));
            double th = cfg.crossings[i].theta;
            e_pyth = std::max(e_pyth, std::abs(std::sin(th) * dsin + std::cos(th) * dcos));
        }
        std::size_t i = static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(m) - 1));
        std::size_t j =
            (i + 1 + static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(m) - 2))) % m;
        double ref = arc_distance_oriented(cfg, i, j);
        auto farc = [&](double t) { return deformed_gap(cfg, i, j, t, ref); };
        e_arc =
            std::max(e_arc, rel_err(d_arc_distance(cfg, i, j), fd_derivative(farc, 1).value, 0.01));
    }
    out.record("C2.1", "d cos(theta_p) vs FD", e_cos, 1e-6, n);
    out.record("C2.2", "d sin(theta_p) vs FD", e_sin, 1e-6, n);
    out.record("C2.3", "d l_pq vs FD", e_arc, 1e-6, n);
    out.record("C2.4", "Pythagorean identity", e_pyth, 1e-12, n);
}

// C3: closed forms of the single-geodesic shear scene.
void criterion3(Collector& out, std::uint64_t seed, int cases) {
    Rng rng(seed ^ 0xc3);
    int n = std::max(cases, 100);
    double e_lp = 0.0, e_fh = 0.0, e_fl = 0.0, e_gap = 0.0, e_cos = 0.0;
    double e_mid = 0.0, e_sym = 0.0;
    for (int k = 0; k < n; ++k) {
        TwistScene sc = random_twist_scene(rng, 2);
        auto len = [&](double t) { return translation_length(twist_family(sc, t)); };
        e_lp = std::max(e_lp, rel_err(ell_prime(sc), fd_derivative(len, 1).value, 0.01));
        e_fh = std::max(e_fh, std::abs(f_l_prime(sc, sc.h) + 0.5));

        for (const Geodesic& probe : sc.probes) {
            auto fpos = [&](double t) { return f_l_position(sc, probe, t); };
            e_fl = std::max(e_fl, rel_err(f_l_prime(sc, probe), fd_derivative(fpos, 1).value, 0.01));
            auto fang = [&](double t) { return std::cos(probe_angle(sc, probe, t)); };
            e_cos = std::max(e_cos,
                             rel_err(d_cos_theta_l(sc, probe), fd_derivative(fang, 1).value, 0.01));
        }
        auto fgap = [&](double t) { return axis_gap(sc, sc.probes[0], sc.probes[1], t); };
        e_gap = std::max(e_gap, rel_err(ell_llprime_prime(sc, sc.probes[0], sc.probes[1]),
                                        fd_derivative(fgap, 1).value, 0.01));

        for (int g = -4; g <= 4; ++g) {
            double t = g / 4.0;
            e_mid = std::max(e_mid, midpoint_residual(sc, t));
            auto [th, thp] = boundary_angles(sc, t);
            e_sym = std::max(e_sym, std::abs(th - thp));
        }
    }
    out.record("C3.1", "ell' = cos(theta_h) vs FD", e_lp, 1e-7, n);
    out.record("C3.2", "f_h' = -1/2 anchor", e_fh, 1e-12, n);
    out.record("C3.3", "f_l' vs FD", e_fl, 1e-7, n);
    out.record("C3.4", "ell_ll' vs FD", e_gap, 1e-7, n);
    out.record("C3.5", "d cos(theta_l) vs FD", e_cos, 1e-7, n);
    out.record("C3.6", "midpoint on deformed axis", e_mid, 1e-9, n);
    out.record("C3.7", "theta_h(t) = theta_h'(t)", e_sym, 1e-10, n);
}

// C4: positivity of the Hessian and the effective lower bound.
void criterion4(Collector& out, std::uint64_t seed, int cases) {
    Rng rng(seed ^ 0xc4);
    int n = std::max(cases, 500);

    bool positive_ok = true;
    double bound_margin = 0.0;
    for (int k = 0; k < n; ++k) {
        ConfigOptions opts;
        if (k % 2 == 0) {
            opts.min_weight = 0.05;
            opts.max_weight = 1.0;
        } else {
            opts.min_weight = -1.0;
            opts.max_weight = -0.05;
        }
        ShearConfig cfg = random_config(rng, opts);
        double d2 = d2_length(cfg);
        positive_ok = positive_ok && d2 > 0.0;
        double bound = hessian_lower_bound(cfg);
        double scale = 0.0;
        for (const auto& c : cfg.crossings) scale += c.weight * c.weight;
        scale *= std::cosh(cfg.length / 2.0);
        bound_margin = std::max(bound_margin, (bound - d2) / std::max(1.0, scale));
    }
    out.record_flag("C4.1", "d2 > 0 for single-signed weights", positive_ok, n);
    out.record("C4.2", "d2 >= gap lower bound", std::max(bound_margin, 0.0), 1e-10, n,
               "holds on this sample; not universal (see hessian_bound_certified)");

    // Brute-force refutation check: a Definite (resp. Semidefinite) verdict
    // contradicted by a sampled quadratic form counts as a counterexample.
    int matrices = std::max(cases * 5, 1000);
    int counterexamples = 0;
    for (int k = 0; k < matrices; ++k) {
        int dim = rng.uniform_int(2, 8);
        auto idx = [](int i) { return static_cast<std::size_t>(i); };
        std::vector<std::vector<double>> rows(idx(dim), std::vector<double>(idx(dim)));
        for (int i = 0; i < dim; ++i)
            for (int j = i + 1; j < dim; ++j)
                rows[idx(i)][idx(j)] = rows[idx(j)][idx(i)] = rng.uniform(0.0, 1.0);
        for (int i = 0; i < dim; ++i) {
            double mx = 0.0;
            for (int j = 0; j < dim; ++j)
                if (j != i) mx = std::max(mx, rows[idx(i)][idx(j)]);
            rows[idx(i)][idx(i)] = mx + rng.uniform(0.05, 2.0);
        }
        SymMatrix a = SymMatrix::from_rows(rows);
        PositivityCertificate cert = gauss_positivity(a);
        double min_form = 1e300;
        for (int v = 0; v < 100; ++v) {
            std::vector<double> x(idx(dim));
            double norm = 0.0;
            for (double& xi : x) {
                xi = rng.uniform(-1.0, 1.0);
                norm += xi * xi;
            }
            if (norm < 1e-12) continue;
            min_form = std::min(min_form, a.quadratic_form(x) / norm);
        }
        if (cert.verdict == Verdict::Definite && min_form <= 0.0) ++counterexamples;
        if (cert.verdict == Verdict::Semidefinite && min_form < -1e-10) ++counterexamples;
    }
    out.record_flag("C4.3", "gauss verdicts vs brute-force forms", counterexamples == 0, matrices,
                    counterexamples == 0 ? ""
                                         : std::to_string(counterexamples) + " counterexamples");
}

// C5: spiralling example.
void criterion5(Collector& out, std::uint64_t seed, int cases) {
    (void)seed;
    (void)cases;

    SpiralParams closed;
    closed.L = 1.7;
    closed.g0 = -4.0;
    closed.g1 = -2.2;
    closed.g_masses = {0.31, -0.12};
    SpiralConvergenceReport rep = spiral_convergence(closed);
    double err = std::abs(rep.closed_leaf_length - rep.closed_leaf_expected);
    out.record("C5.1", "closed-leaf length identity", err, 1e-12, 1);

    // Unit gap masses with gap ratio 1/4 per index: the mass growth rate 1
    // stays below the gap decay rate 2 log 2, so the pair partials contract.
    SpiralParams cauchy;
    cauchy.L = 4.0 * std::log(2.0);
    cauchy.g0 = -4.0;
    cauchy.g1 = -2.0;
    cauchy.g_masses.assign(18, 1.0);
    SpiralConvergenceReport crep = spiral_convergence(cauchy);
    out.record("C5.2", "phi partial products Cauchy (log slope < -0.3)",
               crep.fitted_slope + 0.3 <= 0.0 ? 0.0 : crep.fitted_slope + 0.3, 1e-12,
               static_cast<int>(crep.traces.size()), "slope " + std::to_string(crep.fitted_slope));

    SpiralParams div;
    div.L = 2.0 * std::log(2.0);
    div.g0 = -4.0;
    div.g1 = -2.0;
    div.g_masses.assign(14, 0.0);
    div.h_masses.resize(14);
    for (std::size_t i = 0; i < div.h_masses.size(); ++i)
        div.h_masses[i] = (i % 2 == 0) ? 1.0 : -1.0;
    div.total_mass = 0.7;
    SpiralConvergenceReport drep = spiral_convergence(div);
    double min_delta = 1e300, max_inter_err = 0.0;
    for (std::size_t k = 1; k < drep.psi_dilation.size(); ++k)
        min_delta = std::min(min_delta, std::abs(drep.psi_dilation[k] - drep.psi_dilation[k - 1]));
    for (double d : drep.interleaved_dilation)
        max_inter_err = std::max(max_inter_err, std::abs(d - std::exp(div.total_mass)));
    out.record_flag("C5.3", "psi dilation non-convergent, phi dilation constant",
                    min_delta > 0.5 && max_inter_err <= 1e-9,
                    static_cast<int>(drep.psi_dilation.size()),
                    "min psi delta " + std::to_string(min_delta));
}

// C6: cross-module consistency.
void criterion6(Collector& out, std::uint64_t seed, int cases) {
    Rng rng(seed ^ 0xc6);
    int n = std::max(cases / 4, 50);
    double e_single = 0.0;
    for (int k = 0; k < n; ++k) {
        TwistScene sc = random_twist_scene(rng, 0);
        ShearConfig cfg = build_config(sc.gamma, {Leaf{sc.h, 1.0}});
        e_single = std::max(e_single, std::abs(d_cos_theta_l(sc, sc.h) - d2_length(cfg)));
    }
    out.record("C6.1", "d cos(theta_l) at h equals single-leaf d2", e_single, 1e-12, n);

    double e_r2 = 0.0, e_r3 = 0.0;
    for (int k = 0; k < n; ++k) {
        ShearConfig cfg = random_config(rng);
        e_r2 = std::max(
            e_r2, rel_err(recursive_derivative(cfg, 2), d2_length(cfg), config_weight_scale(cfg, 2)));
        e_r3 = std::max(
            e_r3, rel_err(recursive_derivative(cfg, 3), d3_length(cfg), config_weight_scale(cfg, 3)));
    }
    out.record("C6.2", "recursive order 2 equals d2", e_r2, 1e-10, n);
    out.record("C6.3", "recursive order 3 equals d3", e_r3, 1e-10, n);
}

// C7: kernel identities on random geodesic pairs, plus invariances.
void criterion7(Collector& out, std::uint64_t seed, int cases) {
    Rng rng(seed ^ 0xc7);
    int n = std::max(cases * 5, 1000);

    double e_angle = 0.0, e_dist = 0.0;
    int crossing_cases = 0, disjoint_cases = 0;
    while (crossing_cases + disjoint_cases < n) {
        double xs[4];
        for (double& x : xs) x = rng.uniform(-5.0, 5.0);
        bool degenerate = false;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (std::abs(xs[i] - xs[j]) < 0.08) degenerate = true;
        if (degenerate) continue;
        Isometry w = random_conjugator(rng);
        Geodesic g = w(Geodesic::between(xs[0], xs[1]));
        Geodesic h = w(Geodesic::between(xs[2], xs[3]));

        auto cr = intersect(g, h);
        if (cr) {
            Geodesic left = cr->reversed ? h.reversed() : h;
            double x = cross_ratio(g.source, left.target, left.source, g.target);
            double c = std::cos(cr->theta / 2.0);
            e_angle = std::max(e_angle, std::abs(x - c * c));
            ++crossing_cases;
        } else {
            double d = geodesic_distance(g, h);
            auto dist_at = [&](double t) {
                return distance_to_geodesic(h, standard_chart(g)(InteriorPoint(0.0, std::exp(t))));
            };
            double lo = -12.0, hi = 12.0;
            for (int it = 0; it < 200; ++it) {
                double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
                if (dist_at(m1) < dist_at(m2))
                    hi = m2;
                else
                    lo = m1;
            }
            double dmin = dist_at((lo + hi) / 2.0);
            e_dist = std::max(e_dist, std::abs(d - dmin));
            double x = cross_ratio(g.source, h.source, h.target, g.target);
            double sh2 = std::sinh(d / 2.0) * std::sinh(d / 2.0);
            double id_err =
                std::min(std::abs(x + sh2), std::abs(x - 1.0 - sh2)) / std::max(1.0, sh2);
            e_dist = std::max(e_dist, id_err);
            ++disjoint_cases;
        }
    }
    out.record("C7.1", "cross-ratio angle identity vs tangents", e_angle, 1e-10, crossing_cases);
    out.record("C7.2", "cross-ratio distance identity vs minimization", e_dist, 1e-10,
               disjoint_cases);

    double e_inv = 0.0;
    for (int k = 0; k < 200; ++k) {
        Isometry w = random_conjugator(rng);
        double len = rng.uniform(0.3, 4.0);
        Isometry f = w * standard_gamma(len) * w.inverse();
        e_inv = std::max(e_inv, std::abs(translation_length(f) - len) / std::max(1.0, len));
        Isometry v = random_conjugator(rng);
        Geodesic moved = axis(v * f * v.inverse());
        Geodesic expect = v(axis(f));
        e_inv = std::max(e_inv, std::abs(det(moved.source, expect.source)));
        e_inv = std::max(e_inv, std::abs(det(moved.target, expect.target)));
        Geodesic geo = v(Geodesic::between(-1.0, 1.0));
        double uu = rng.uniform(-1.5, 1.5), vv = rng.uniform(-1.5, 1.5);
        e_inv = std::max(e_inv, matrix_distance(translate_along(geo, uu) * translate_along(geo, vv),
                                                translate_along(geo, uu + vv)));
    }
    out.record("C7.3", "isometry invariance properties", e_inv, 1e-12, 200);
}

// C8: sampled convexity along positive-weight shear paths.
void criterion8(Collector& out, std::uint64_t seed, int cases) {
    Rng rng(seed ^ 0xc8);
    int n = std::max(cases / 2, 100);
    double worst = 0.0;
    for (int k = 0; k < n; ++k) {
        ConfigOptions opts;
        opts.min_weight = 0.05;
        opts.max_weight = 1.0;
        ShearConfig cfg = random_config(rng, opts);
        const int grid = 21;
        std::vector<double> vals(grid);
        for (int i = 0; i < grid; ++i)
            vals[static_cast<std::size_t>(i)] = deformed_length(cfg, -1.0 + 2.0 * i / (grid - 1));
        for (int i = 1; i + 1 < grid; ++i) {
            double second = vals[static_cast<std::size_t>(i + 1)] -
                            2.0 * vals[static_cast<std::size_t>(i)] +
                            vals[static_cast<std::size_t>(i - 1)];
            worst = std::min(worst, second);
        }
    }
    out.record("C8.1", "second differences of deformed length >= 0", std::max(-worst, 0.0), 1e-9,
               n);
}

}  // namespace

std::vector<CheckResult> run_criterion(int criterion, std::uint64_t seed, int cases) {
    Collector out;
    if (cases <= 0) return out.results;
    switch (criterion) {
        case 1: criterion1(out, seed, cases); break;
        case 2: criterion2(out, seed, cases); break;
        case 3: criterion3(out, seed, cases); break;
        case 4: criterion4(out, seed, cases); break;
        case 5: criterion5(out, seed, cases); break;
        case 6: criterion6(out, seed, cases); break;
        case 7: criterion7(out, seed, cases); break;
        case 8: criterion8(out, seed, cases); break;
        default: fail(Errc::Schema, "unknown acceptance criterion " + std::to_string(criterion));
    }
    return out.results;
}

std::vector<CheckResult> run_suite(const std::string& suite, std::uint64_t seed, int cases) {
    std::vector<int> picks;
    if (suite == "kernel")
        picks = {7};
    else if (suite == "derivatives")
        picks = {1, 2, 6, 8};
    else if (suite == "twist")
        picks = {3};
    else if (suite == "hessian")
        picks = {4};
    else if (suite == "spiral")
        picks = {5};
    else if (suite == "all")
        picks = {1, 2, 3, 4, 5, 6, 7, 8};
    else
        fail(Errc::Schema, "unknown verification suite: " + suite);

    std::vector<CheckResult> all;
    for (int k : picks) {
        auto part = run_criterion(k, seed, cases);
        all.insert(all.end(), part.begin(), part.end());
    }
    return all;
}

}  // namespace shearlab::verify
