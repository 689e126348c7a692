#include "shearlab/hessian.hpp"

#include <cmath>

namespace shearlab {

SymMatrix SymMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
    std::size_t n = rows.size();
    SymMatrix m(n);
    double scale = 0.0;
    for (const auto& r : rows) {
        if (r.size() != n) fail(Errc::Internal, "symmetric matrix needs square input");
        for (double v : r) scale = std::max(scale, std::abs(v));
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (std::abs(rows[i][j] - rows[j][i]) > 1e-12 * std::max(1.0, scale))
                fail(Errc::HypothesesFail, "input matrix is not symmetric");
            m.at(i, j) = (rows[i][j] + rows[j][i]) / 2.0;
        }
    return m;
}

SymMatrix SymMatrix::zero(std::size_t n) { return SymMatrix(n); }

double SymMatrix::quadratic_form(std::span<const double> x) const {
    if (x.size() != n_) fail(Errc::Internal, "vector length mismatch");
    CompensatedSum acc;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) acc.add(x[i] * (*this)(i, j) * x[j]);
    return acc.value();
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Definite: return "definite";
        case Verdict::Semidefinite: return "semidefinite";
        case Verdict::NotApplicable: return "not_applicable";
    }
    return "unknown";
}

namespace {

struct Elimination {
    std::vector<double> pivots;
    bool completed = false;
    bool dominance_invariant = true;  // diagonal >= every entry of its line, each step
};

// Plain elimination, k-th step: L_i -= (a_ik / a_kk) L_k for i > k. Stops
// early on a (numerically) zero pivot whose row is not already zero, which
// for a symmetric matrix refutes positive semidefiniteness.
Elimination plain_gauss(const SymMatrix& a) {
    std::size_t n = a.n();
    std::vector<std::vector<double>> w(n, std::vector<double>(n));
    double scale = 1e-300;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            w[i][j] = a(i, j);
            scale = std::max(scale, std::abs(w[i][j]));
        }
    Elimination out;
    out.completed = true;
    for (std::size_t k = 0; k < n; ++k) {
        double piv = w[k][k];
        out.pivots.push_back(piv);
        if (std::abs(piv) <= 1e-14 * scale) {
            bool row_zero = true;
            for (std::size_t j = k; j < n; ++j)
                row_zero = row_zero && std::abs(w[k][j]) <= 1e-10 * scale;
            if (row_zero) continue;  // nothing to eliminate
            out.completed = false;
            break;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            double f = w[i][k] / piv;
            for (std::size_t j = k; j < n; ++j) w[i][j] -= f * w[k][j];
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                if (w[i][i] < w[i][j] - 1e-12 * scale) out.dominance_invariant = false;
    }
    return out;
}

double hypothesis_tol(const SymMatrix& a) {
    double scale = 1e-300;
    for (std::size_t i = 0; i < a.n(); ++i)
        for (std::size_t j = 0; j < a.n(); ++j) scale = std::max(scale, std::abs(a(i, j)));
    return 1e-12 * scale;
}

std::vector<double> dominance_gaps(const SymMatrix& a) {
    std::size_t n = a.n();
    std::vector<double> d(n);
    for (std::size_t i = 0; i < n; ++i) {
        d[i] = a(i, i);
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) d[i] = std::min(d[i], a(i, i) - a(i, j));
    }
    return d;
}

}  // namespace

PositivityCertificate gauss_positivity(const SymMatrix& a) {
    std::size_t n = a.n();
    PositivityCertificate cert;
    double tol = hypothesis_tol(a);

    bool nonneg = true, weak = true, strict = true;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (a(i, j) < -tol) nonneg = false;
            if (i == j) continue;
            if (a(i, i) - a(i, j) < -tol) weak = false;
            if (a(i, i) - a(i, j) <= tol) strict = false;
        }
    }
    cert.hypotheses_hold = nonneg && weak;
    cert.hypotheses_strict = cert.hypotheses_hold && strict;

    Elimination elim = plain_gauss(a);
    cert.pivots = elim.pivots;
    cert.proof_invariant_held = elim.completed && elim.dominance_invariant;

    bool all_positive = elim.completed && !elim.pivots.empty();
    bool all_nonneg = elim.completed;
    for (double p : elim.pivots) {
        all_positive = all_positive && p > tol;
        all_nonneg = all_nonneg && p > -tol;
    }

    if (cert.hypotheses_hold) {
        cert.lower_bound_coeffs = dominance_gaps(a);
        if (all_positive)
            cert.verdict = Verdict::Definite;
        else if (all_nonneg)
            cert.verdict = Verdict::Semidefinite;
        else {
            cert.verdict = Verdict::NotApplicable;
            cert.note = "dominance hypotheses hold but a pivot is negative; "
                        "the elimination refutes definiteness for this matrix";
        }
        return cert;
    }

    cert.verdict = Verdict::NotApplicable;
    cert.generic_ran = true;
    cert.generic_definite = all_positive;
    return cert;
}

std::pair<double, double> quadratic_lower_bound(const SymMatrix& a, std::span<const double> x) {
    std::size_t n = a.n();
    double tol = hypothesis_tol(a);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (a(i, j) < -tol) fail(Errc::HypothesesFail, "matrix entries must be nonnegative");
            if (i != j && a(i, i) - a(i, j) < -tol)
                fail(Errc::HypothesesFail, "diagonal must dominate each row entrywise");
        }
    double value = a.quadratic_form(x);
    std::vector<double> d = dominance_gaps(a);
    CompensatedSum bound;
    for (std::size_t i = 0; i < n; ++i) bound.add(d[i] * x[i] * x[i]);
    return {value, bound.value()};
}

bool lower_bound_certified(const SymMatrix& a) {
    std::size_t n = a.n();
    double tol = hypothesis_tol(a);
    std::vector<double> d = dominance_gaps(a);
    SymMatrix rem = SymMatrix::zero(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) rem.at(i, j) = a(i, j) - (i == j ? d[i] : 0.0);
    Elimination elim = plain_gauss(rem);
    if (!elim.completed) return false;
    for (double p : elim.pivots)
        if (p < -tol) return false;
    return true;
}

SymMatrix hessian_matrix(const ShearConfig& config) {
    std::size_t n = config.size();
    double u = config.length / 2.0;
    SymMatrix h = SymMatrix::zero(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) h.at(i, j) = std::cosh(u - arc_distance(config, i, j));
    return h;
}

namespace {

double min_gap(const ShearConfig& config, std::size_t i) {
    double eps = config.length;
    for (std::size_t j = 0; j < config.size(); ++j)
        if (j != i) eps = std::min(eps, arc_distance(config, i, j));
    return eps;
}

double component_bound(const ShearConfig& config, const std::vector<std::size_t>& arcs) {
    if (config.size() < 2)
        fail(Errc::SingleCrossing, "the gap-based lower bound needs at least two crossings");
    double u = config.length / 2.0;
    CompensatedSum acc;
    auto add_term = [&](std::size_t i) {
        double eps = min_gap(config, i);
        double a = config.crossings[i].weight;
        double st = std::sin(config.crossings[i].theta);
        acc.add(std::sinh(u - eps) * eps * a * a * st * st);
    };
    if (arcs.empty()) {
        for (std::size_t i = 0; i < config.size(); ++i) add_term(i);
    } else {
        for (std::size_t i : arcs) {
            if (i >= config.size()) fail(Errc::Internal, "arc index out of range");
            add_term(i);
        }
    }
    return acc.value() / (2.0 * std::sinh(u));
}

}  // namespace

double hessian_lower_bound(const ShearConfig& config) { return component_bound(config, {}); }

bool hessian_bound_certified(const ShearConfig& config) {
    if (config.size() < 2)
        fail(Errc::SingleCrossing, "the gap-based lower bound needs at least two crossings");
    std::size_t n = config.size();
    double u = config.length / 2.0;
    SymMatrix rem = hessian_matrix(config);
    for (std::size_t i = 0; i < n; ++i) {
        double eps = min_gap(config, i);
        rem.at(i, i) -= std::sinh(u - eps) * eps;
    }
    Elimination elim = plain_gauss(rem);
    if (!elim.completed) return false;
    double tol = hypothesis_tol(rem);
    for (double p : elim.pivots)
        if (p < -tol) return false;
    return true;
}

double hessian_lower_bound_multicurve(const WeightedMulticurve& mc,
                                      const std::vector<std::size_t>& arcs) {
    CompensatedSum acc;
    for (std::size_t k = 0; k < mc.components.size(); ++k)
        acc.add(mc.mu[k] * component_bound(mc.components[k], arcs));
    return acc.value();
}

}  // namespace shearlab
