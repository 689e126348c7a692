#include "shearlab/derivatives.hpp"

#include <cmath>

namespace shearlab {

namespace {

struct Trig {
    double sin, cos, weight;
};

std::vector<Trig> trig_table(const ShearConfig& config) {
    std::vector<Trig> t;
    t.reserve(config.size());
    for (const CrossingData& c : config.crossings)
        t.push_back({std::sin(c.theta), std::cos(c.theta), c.weight});
    return t;
}

}  // namespace

double d1_length(const ShearConfig& config) {
    CompensatedSum acc;
    for (const CrossingData& c : config.crossings) acc.add(c.weight * std::cos(c.theta));
    return acc.value();
}

double d2_length(const ShearConfig& config) {
    const std::size_t n = config.size();
    const double u = config.length / 2.0;
    const auto tr = trig_table(config);
    CompensatedSum acc;
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = 0; q < n; ++q) {
            double d = arc_distance_oriented(config, p, q);
            acc.add(tr[p].weight * tr[q].weight * std::cosh(u - d) * tr[p].sin * tr[q].sin);
        }
    }
    return acc.value() / (2.0 * std::sinh(u));
}

namespace {

// Kernel of the third-derivative triple sum: cosh of the p-q arc avoiding r,
// with split-atom averages on coincidences.
double avoiding_arc_kernel(const ShearConfig& config, std::size_t p, std::size_t q, std::size_t r) {
    const double len = config.length;
    const double u = len / 2.0;
    if (p == q && q == r) return (2.0 + std::cosh(len)) / 3.0;
    if (p == q) return 1.0;
    double d_pq = arc_distance_oriented(config, p, q);
    if (r == p || r == q) return std::cosh(u) * std::cosh(u - d_pq);
    double d_pr = arc_distance_oriented(config, p, r);
    bool r_inside_forward = d_pr < d_pq;  // r in the oriented arc p -> q
    double avoid = r_inside_forward ? (len - d_pq) : d_pq;
    return std::cosh(avoid);
}

double d3_sum(const ShearConfig& config,
              const std::function<double(std::size_t, std::size_t, std::size_t)>& term) {
    const std::size_t n = config.size();
    CompensatedSum acc;
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
            for (std::size_t r = 0; r < n; ++r) acc.add(term(p, q, r));
    const double s = std::sinh(config.length / 2.0);
    return -acc.value() / (2.0 * s * s);
}

}  // namespace

double d3_length(const ShearConfig& config) {
    const auto tr = trig_table(config);
    return d3_sum(config, [&](std::size_t p, std::size_t q, std::size_t r) {
        double k = avoiding_arc_kernel(config, p, q, r);
        return tr[p].weight * tr[q].weight * tr[r].weight * 1.5 * k * tr[p].sin * tr[q].sin *
               tr[r].cos;
    });
}

namespace {

double d3_literal(const ShearConfig& config, bool oriented) {
    const auto tr = trig_table(config);
    auto dist = [&](std::size_t i, std::size_t j) {
        return oriented ? arc_distance_oriented(config, i, j) : arc_distance(config, i, j);
    };
    return d3_sum(config, [&](std::size_t p, std::size_t q, std::size_t r) {
        double w = tr[p].weight * tr[q].weight * tr[r].weight;
        double t1 = std::cosh(dist(p, r) - dist(r, q)) * tr[p].sin * tr[q].sin * tr[r].cos;
        double t2 = std::cosh(dist(q, p) - dist(p, r)) * tr[p].cos * tr[q].sin * tr[r].sin;
        double t3 = std::cosh(dist(p, q) - dist(q, r)) * tr[p].sin * tr[q].cos * tr[r].sin;
        return w * (t1 + t2 + t3);
    });
}

}  // namespace

double d3_length_literal_oriented(const ShearConfig& config) { return d3_literal(config, true); }
double d3_length_literal_unoriented(const ShearConfig& config) { return d3_literal(config, false); }

namespace {

// Shared sum V_i = sum_q a_q cosh(u - d_iq) sin(theta_q); using the same V
// for both angle derivatives makes sin*dsin + cos*dcos vanish exactly.
double angle_variation_sum(const ShearConfig& config, std::size_t i) {
    const double u = config.length / 2.0;
    CompensatedSum acc;
    for (std::size_t q = 0; q < config.size(); ++q) {
        double d = arc_distance_oriented(config, i, q);
        acc.add(config.crossings[q].weight * std::cosh(u - d) * std::sin(config.crossings[q].theta));
    }
    return acc.value();
}

}  // namespace

double d_cos_theta(const ShearConfig& config, std::size_t i) {
    if (i >= config.size()) fail(Errc::Internal, "crossing index out of range");
    const double u = config.length / 2.0;
    return std::sin(config.crossings[i].theta) / (2.0 * std::sinh(u)) *
           angle_variation_sum(config, i);
}

double d_sin_theta(const ShearConfig& config, std::size_t i) {
    if (i >= config.size()) fail(Errc::Internal, "crossing index out of range");
    const double u = config.length / 2.0;
    return -std::cos(config.crossings[i].theta) / (2.0 * std::sinh(u)) *
           angle_variation_sum(config, i);
}

double d_arc_distance(const ShearConfig& config, std::size_t i, std::size_t j) {
    const std::size_t n = config.size();
    if (i >= n || j >= n) fail(Errc::Internal, "crossing index out of range");
    if (i == j) fail(Errc::Internal, "d_arc_distance needs distinct crossings");

    const double len = config.length;
    const double u = len / 2.0;
    const double s = std::sinh(u);
    const double d_ij = arc_distance_oriented(config, i, j);
    const double cot_i = std::cos(config.crossings[i].theta) / std::sin(config.crossings[i].theta);
    const double cot_j = std::cos(config.crossings[j].theta) / std::sin(config.crossings[j].theta);

    CompensatedSum acc;
    for (std::size_t r = 0; r < n; ++r) {
        const double a = config.crossings[r].weight;
        const double sin_r = std::sin(config.crossings[r].theta);
        const double cos_r = std::cos(config.crossings[r].theta);
        if (r != i && r != j) {
            double d_ir = arc_distance_oriented(config, i, r);
            if (d_ir > 0.0 && d_ir < d_ij) acc.add(a * cos_r);  // strictly between i and j
        }
        // Oriented distance from r forward to the segment endpoints; the atom
        // at the start reads 0, the atom at the end reads the full length.
        double d_ri = (r == i) ? 0.0 : arc_distance_oriented(config, r, i);
        double d_rj = (r == j) ? len : arc_distance_oriented(config, r, j);
        acc.add(a * sin_r / (2.0 * s) * (std::sinh(u - d_ri) * cot_i - std::sinh(u - d_rj) * cot_j));
    }
    return acc.value();
}

double recursive_derivative(const ShearConfig& config, int order) {
    const std::size_t n = config.size();
    if (order == 2) {
        CompensatedSum acc;
        for (std::size_t p = 0; p < n; ++p) acc.add(config.crossings[p].weight * d_cos_theta(config, p));
        return acc.value();
    }
    if (order != 3) fail(Errc::UnsupportedOrder, "recursive derivative supports orders 2 and 3");

    const double u = config.length / 2.0;
    const double s = std::sinh(u), c = std::cosh(u);
    const auto tr = trig_table(config);
    const double d1 = d1_length(config);

    // d/dt of  (1/(2 sinh(l/2))) sum cosh(l/2 - d_pq) sin_p sin_q  at t = 0.
    CompensatedSum hsum;  // the double sum itself
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
            hsum.add(tr[p].weight * tr[q].weight *
                     std::cosh(u - arc_distance_oriented(config, p, q)) * tr[p].sin * tr[q].sin);

    CompensatedSum acc;
    // prefactor variation: -cosh(u)/(2 sinh^2 u) * (d1/2) * sum
    acc.add(-c / (2.0 * s * s) * (d1 / 2.0) * hsum.value());
    // cosh-argument variation
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = 0; q < n; ++q) {
            double w = tr[p].weight * tr[q].weight;
            if (p == q) {
                acc.add(w * s * (d1 / 2.0) * tr[p].sin * tr[q].sin / (2.0 * s));
            } else {
                double d_pq = arc_distance_oriented(config, p, q);
                double dd = d_arc_distance(config, p, q);
                acc.add(w * std::sinh(u - d_pq) * (d1 / 2.0 - dd) * tr[p].sin * tr[q].sin /
                        (2.0 * s));
            }
        }
    }
    // angle variation
    for (std::size_t p = 0; p < n; ++p) {
        double dsin_p = d_sin_theta(config, p);
        for (std::size_t q = 0; q < n; ++q) {
            double w = tr[p].weight * tr[q].weight;
            double cosh_pq = std::cosh(u - arc_distance_oriented(config, p, q));
            acc.add(w * cosh_pq * dsin_p * tr[q].sin / s);  // both symmetric halves
        }
    }
    return acc.value();
}

WeightedMulticurve make_multicurve(std::vector<ShearConfig> components, std::vector<double> mu) {
    if (components.empty() || components.size() != mu.size())
        fail(Errc::Schema, "multicurve needs matching nonempty component and weight lists");
    for (double m : mu)
        if (!(m >= 0.0)) fail(Errc::HypothesesFail, "multicurve weights must be nonnegative");
    const auto& first = components.front();
    for (const auto& comp : components) {
        if (comp.size() != first.size())
            fail(Errc::HypothesesFail, "multicurve components must share one leaf system");
        for (std::size_t i = 0; i < comp.size(); ++i) {
            bool found = false;
            for (std::size_t j = 0; j < first.size() && !found; ++j)
                found = same_geodesic_unoriented(comp.leaves[i].geodesic, first.leaves[j].geodesic, 1e-9);
            if (!found) fail(Errc::HypothesesFail, "multicurve components must share one leaf system");
        }
    }
    return WeightedMulticurve{std::move(components), std::move(mu)};
}

double d1_length_multicurve(const WeightedMulticurve& mc) {
    CompensatedSum acc;
    for (std::size_t k = 0; k < mc.components.size(); ++k)
        acc.add(mc.mu[k] * d1_length(mc.components[k]));
    return acc.value();
}

}  // namespace shearlab
