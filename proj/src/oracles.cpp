#include "shearlab/oracles.hpp"

#include <array>
#include <cmath>

namespace shearlab {

FDSpec default_fd_spec(int order) {
    if (order == 3) return FDSpec{3, 5e-2, 3};
    return FDSpec{order, 1e-2, 4};
}

FDResult fd_derivative(const std::function<double(double)>& f, int order, const FDSpec& spec) {
    if (order < 1 || order > 3) fail(Errc::UnsupportedOrder, "fd_derivative supports orders 1..3");
    if (!(spec.h0 >= 1e-4 && spec.h0 <= 1e-1) || spec.levels < 2)
        fail(Errc::Internal, "fd spec out of range");

    double sample_scale = 0.0;
    auto sample = [&](double t) {
        double v = f(t);
        if (!std::isfinite(v)) fail(Errc::NonFiniteSample, "finite-difference sample is not finite");
        sample_scale = std::max(sample_scale, std::abs(v));
        return v;
    };

    const int levels = spec.levels;
    std::vector<std::vector<double>> tableau(static_cast<std::size_t>(levels));
    double f0 = (order == 2) ? sample(0.0) : 0.0;

    for (int k = 0; k < levels; ++k) {
        double h = spec.h0 / std::pow(2.0, k);
        double est = 0.0;
        switch (order) {
            case 1: est = (sample(h) - sample(-h)) / (2.0 * h); break;
            case 2: est = (sample(h) - 2.0 * f0 + sample(-h)) / (h * h); break;
            case 3:
                est = (sample(2.0 * h) - 2.0 * sample(h) + 2.0 * sample(-h) - sample(-2.0 * h)) /
                      (2.0 * h * h * h);
                break;
        }
        auto& row = tableau[static_cast<std::size_t>(k)];
        row.resize(static_cast<std::size_t>(k) + 1);
        row[0] = est;
        for (int m = 1; m <= k; ++m) {
            double pw = std::pow(4.0, m);
            row[static_cast<std::size_t>(m)] =
                (pw * row[static_cast<std::size_t>(m - 1)] -
                 tableau[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(m - 1)]) /
                (pw - 1.0);
        }
    }
    const auto& last = tableau.back();
    FDResult out;
    out.value = last.back();
    // tableau truncation estimate plus a rounding-noise model at the finest
    // step (generous constant: samples typically carry a few tens of ulps)
    double h_min = spec.h0 / std::pow(2.0, levels - 1);
    double noise = 1.8e-15 * (sample_scale + 1.0);
    double floor = noise / h_min;
    for (int k = 1; k < order; ++k) floor *= 2.0 / h_min;
    out.error_estimate = std::abs(last.back() - last[last.size() - 2]) + floor;
    return out;
}

FDResult fd_derivative(const std::function<double(double)>& f, int order) {
    return fd_derivative(f, order, default_fd_spec(order));
}

namespace {

struct DualMat {
    std::array<Dual, 4> m;  // row-major 2x2

    static DualMat from(const Isometry& f) {
        return DualMat{{Dual(f.m00), Dual(f.m01), Dual(f.m10), Dual(f.m11)}};
    }
    DualMat operator*(const DualMat& o) const {
        return DualMat{{m[0] * o.m[0] + m[1] * o.m[2], m[0] * o.m[1] + m[1] * o.m[3],
                        m[2] * o.m[0] + m[3] * o.m[2], m[2] * o.m[1] + m[3] * o.m[3]}};
    }
    Dual trace() const { return m[0] + m[3]; }
};

}  // namespace

double dual_derivative(const ShearConfig& config) {
    // T^{t a}_{l} = cosh(t a / 2) I + sinh(t a / 2) A_l; at t = 0 the value
    // is I and the derivative (a/2) A_l.
    DualMat prod = DualMat::from(Isometry::identity());
    bool first = true;
    for (std::size_t i = 0; i < config.size(); ++i) {
        double a = config.leaves[i].weight;
        FlowGenerator gen = translation_generator(config.leaves[i].geodesic);
        DualMat factor{{Dual(1.0, a / 2.0 * gen.a00), Dual(0.0, a / 2.0 * gen.a01),
                        Dual(0.0, a / 2.0 * gen.a10), Dual(1.0, a / 2.0 * gen.a11)}};
        prod = first ? factor : prod * factor;
        first = false;
    }
    DualMat total = first ? DualMat::from(config.gamma) : prod * DualMat::from(config.gamma);
    Dual tr = total.trace();
    double abs_tr = std::abs(tr.v);
    if (abs_tr <= 2.0 + 1e-8)
        fail(Errc::TraceTooClose, "trace too close to 2 for a differentiable arccosh");
    double dtr = (tr.v >= 0.0) ? tr.d : -tr.d;
    return 2.0 * dtr / std::sqrt(abs_tr * abs_tr - 4.0);
}

SpiralConvergenceReport spiral_convergence(const SpiralParams& params) {
    SpiralFamily fam = spiral_config(params);
    const int n = static_cast<int>(params.g_masses.size());

    SpiralConvergenceReport report;
    double w12 = 0.0;
    for (int i = 0; i < std::min(n, 2); ++i) w12 += params.g_masses[static_cast<std::size_t>(i)];
    if (n >= 2) {
        report.closed_leaf_length = translation_length(fam.closed_leaf_isometry());
        report.closed_leaf_expected = params.L + w12;
    }

    for (int k = 1; k < n; ++k) {
        ConvergenceTrace tr;
        tr.index = k;
        tr.matrix_delta = matrix_distance(fam.phi_pair_partial(k + 1), fam.phi_pair_partial(k));
        double cum = 0.0;
        for (int i = 0; i < std::min(k, 2); ++i) cum += params.g_masses[static_cast<std::size_t>(i)];
        tr.derivative_value = cum;  // closed-leaf d/dt for the k-truncation
        report.traces.push_back(tr);
    }

    for (int k = 1; k <= n; ++k) {
        report.psi_dilation.push_back(SpiralFamily::dilation(fam.psi_partial(k)));
        report.interleaved_dilation.push_back(SpiralFamily::dilation(fam.interleaved_partial(k)));
    }

    // Least-squares slope of log(delta) against n over the positive deltas.
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    int m = 0;
    for (const auto& tr : report.traces) {
        if (tr.matrix_delta <= 0.0) continue;
        double x = tr.index, y = std::log(tr.matrix_delta);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++m;
    }
    report.fitted_slope = (m >= 2) ? (m * sxy - sx * sy) / (m * sxx - sx * sx) : 0.0;
    return report;
}

}  // namespace shearlab
