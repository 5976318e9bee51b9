#include "imatch/value_model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace imatch {

namespace {

void require(bool condition, const std::string& message) {
    if (!condition) throw std::invalid_argument(message);
}

void check_dims(int n, int m) {
    require(n >= 2 && m >= 2, "value model needs n >= 2 and m >= 2");
}

// Support points of the ordered two-point family. Realized values straddle
// the prior 2^(m-j) symmetrically, and the small offsets j/(m+1) keep every
// value in an applicant's row distinct (likewise for positions).
double two_point_high(int rank, int count) {
    return std::ldexp(1.0, count - rank) - static_cast<double>(rank + 1) / (count + 1);
}

double two_point_low(int rank, int count) {
    return static_cast<double>(rank + 1) / (count + 1);
}

double two_point_prior(int rank, int count) { return std::ldexp(1.0, count - rank - 1); }

double sample_four_point(const AlmostEquivalentParams& p, Rng& rng) {
    const double x = rng.uniform01();
    if (x < 0.5 - p.phi_low) return p.low_point;
    if (x < 0.5) return p.mid_low_point;
    if (x < 0.5 + p.phi_high) return p.mid_high_point;
    return p.high_point;
}

void solve_four_point(AlmostEquivalentParams& p) {
    require(p.phi_high > 0.0 && p.phi_high < 0.5, "phi_high must lie in (0, 0.5)");
    require(p.phi_low > 0.0 && p.phi_low < 0.5, "phi_low must lie in (0, 0.5)");
    require(p.low_threshold < p.expected && p.expected < p.high_threshold,
            "thresholds must straddle the expected value");
    require(p.high_point > p.high_threshold, "high_point must exceed high_threshold");
    require(p.low_point >= 0.0 && p.low_point < p.low_threshold,
            "low_point must be non-negative and below low_threshold");
    require(p.mid_low_point > p.low_threshold && p.mid_low_point < p.expected,
            "mid_low_point must lie strictly between low_threshold and expected");
    // Mass placement: (1/2 - phi_high) at high_point, phi_high just above the
    // prior, phi_low just below it, (1/2 - phi_low) at low_point. The point
    // just above the prior is pinned by the mean.
    const double assigned = (0.5 - p.phi_high) * p.high_point + p.phi_low * p.mid_low_point +
                            (0.5 - p.phi_low) * p.low_point;
    p.mid_high_point = (p.expected - assigned) / p.phi_high;
    require(p.mid_high_point > p.expected && p.mid_high_point < p.high_threshold,
            "four-point family is infeasible: solved point must lie strictly between "
            "expected and high_threshold");
}

}  // namespace

ValueModel::ValueModel(ValueKind kind, int n, int m) : kind_(kind), n_(n), m_(m) {
    check_dims(n, m);
    prior_v_.resize(static_cast<std::size_t>(n) * m);
    prior_u_.resize(static_cast<std::size_t>(m) * n);
}

ValueModel ValueModel::bilateral_uniform(int n, int m, UniformParams params) {
    ValueModel model(ValueKind::BilateralUniform, n, m);
    require(params.v_half_width > 0.0 && params.u_half_width > 0.0,
            "uniform half-widths must be positive");
    require(params.u_center - params.u_half_width >= 0.0, "uniform support must be non-negative");
    if (!params.v_centers.empty()) {
        require(params.v_centers.size() == static_cast<std::size_t>(n) * m,
                "per-pair centers must have n*m entries");
        for (double c : params.v_centers)
            require(c - params.v_half_width >= 0.0, "uniform support must be non-negative");
    } else {
        require(params.v_center - params.v_half_width >= 0.0,
                "uniform support must be non-negative");
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j)
            model.prior_v_[static_cast<std::size_t>(i) * m + j] =
                params.v_centers.empty() ? params.v_center
                                         : params.v_centers[static_cast<std::size_t>(i) * m + j];
    for (std::size_t c = 0; c < model.prior_u_.size(); ++c) model.prior_u_[c] = params.u_center;
    model.uniform_ = std::move(params);
    return model;
}

ValueModel ValueModel::two_point_ordered(int n, int m) {
    ValueModel model(ValueKind::TwoPointOrdered, n, m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j)
            model.prior_v_[static_cast<std::size_t>(i) * m + j] = two_point_prior(j, m);
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < n; ++i)
            model.prior_u_[static_cast<std::size_t>(j) * n + i] = two_point_prior(i, n);
    return model;
}

ValueModel ValueModel::almost_equivalent(int n, int m, AlmostEquivalentParams params) {
    ValueModel model(ValueKind::AlmostEquivalent4Point, n, m);
    solve_four_point(params);
    for (double& p : model.prior_v_) p = params.expected;
    for (double& p : model.prior_u_) p = params.expected;
    model.almost_ = params;
    return model;
}

ValueModel ValueModel::fixed(int n, int m, std::vector<double> v, std::vector<double> u,
                             std::vector<double> prior_v, std::vector<double> prior_u) {
    ValueModel model(ValueKind::FixedMatrices, n, m);
    require(v.size() == static_cast<std::size_t>(n) * m, "fixed v must have n*m entries");
    require(u.size() == static_cast<std::size_t>(m) * n, "fixed u must have m*n entries");
    require(prior_v.size() == v.size() && prior_u.size() == u.size(),
            "priors must match the value matrices");
    model.fixed_v_ = std::move(v);
    model.fixed_u_ = std::move(u);
    model.prior_v_ = std::move(prior_v);
    model.prior_u_ = std::move(prior_u);
    return model;
}

std::pair<double, double> ValueModel::sample(int i, int j, Rng& rng) const {
    switch (kind_) {
        case ValueKind::BilateralUniform: {
            const double vc = uniform_.v_centers.empty()
                                  ? uniform_.v_center
                                  : uniform_.v_centers[static_cast<std::size_t>(i) * m_ + j];
            const double v = vc - uniform_.v_half_width + 2.0 * uniform_.v_half_width * rng.uniform01();
            const double u = uniform_.u_center - uniform_.u_half_width +
                             2.0 * uniform_.u_half_width * rng.uniform01();
            return {v, u};
        }
        case ValueKind::TwoPointOrdered: {
            const double v =
                rng.uniform01() < 0.5 ? two_point_high(j, m_) : two_point_low(j, m_);
            const double u =
                rng.uniform01() < 0.5 ? two_point_high(i, n_) : two_point_low(i, n_);
            return {v, u};
        }
        case ValueKind::AlmostEquivalent4Point: {
            const double v = sample_four_point(almost_, rng);
            const double u = sample_four_point(almost_, rng);
            return {v, u};
        }
        case ValueKind::FixedMatrices:
            return {fixed_v_[static_cast<std::size_t>(i) * m_ + j],
                    fixed_u_[static_cast<std::size_t>(j) * n_ + i]};
    }
    throw std::logic_error("unreachable value kind");
}

}  // namespace imatch
