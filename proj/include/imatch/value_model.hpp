#pragma once

#include <utility>
#include <vector>

#include "imatch/rng.hpp"

namespace imatch {

enum class ValueKind {
    BilateralUniform,
    TwoPointOrdered,
    AlmostEquivalent4Point,
    FixedMatrices,
};

// Parameters for the uniform family. The position side always uses a single
// center; the applicant side may carry one center per pair, which yields
// markets where positions are ex ante indistinguishable to nobody but the
// applicants.
struct UniformParams {
    double v_center = 0.5;
    double v_half_width = 0.5;
    double u_center = 0.5;
    double u_half_width = 0.5;
    std::vector<double> v_centers;  // optional, n*m row-major
};

// Four-point family where every realized draw is close to the shared prior:
// mass (1/2 - phi_high) at high_point, phi_high just above the prior,
// phi_low just below it, and (1/2 - phi_low) at low_point. The point just
// above the prior is solved from the mean constraint at construction.
struct AlmostEquivalentParams {
    double expected = 0.5;
    double high_threshold = 0.7;
    double low_threshold = 0.3;
    double high_point = 0.9;
    double low_point = 0.1;
    double mid_low_point = 0.4;
    double phi_high = 0.1;
    double phi_low = 0.1;
    double mid_high_point = 0.0;  // computed, do not set
};

// Describes both sides' value distributions for an n-by-m market: the prior
// expectations every agent starts from and the sampler used when a pair
// actually interviews. Sampling draws the applicant's value first, then the
// position's, and consumes nothing for fixed matrices.
class ValueModel {
public:
    static ValueModel bilateral_uniform(int n, int m, UniformParams params = {});
    static ValueModel two_point_ordered(int n, int m);
    static ValueModel almost_equivalent(int n, int m, AlmostEquivalentParams params = {});
    static ValueModel fixed(int n, int m, std::vector<double> v, std::vector<double> u,
                            std::vector<double> prior_v, std::vector<double> prior_u);

    ValueKind kind() const { return kind_; }
    int n() const { return n_; }
    int m() const { return m_; }

    // Prior expectation of applicant i for position j (0-based), and of
    // position j for applicant i.
    double prior_v(int i, int j) const { return prior_v_[static_cast<std::size_t>(i) * m_ + j]; }
    double prior_u(int j, int i) const { return prior_u_[static_cast<std::size_t>(j) * n_ + i]; }

    std::pair<double, double> sample(int i, int j, Rng& rng) const;

    const UniformParams& uniform_params() const { return uniform_; }
    const AlmostEquivalentParams& almost_params() const { return almost_; }
    const std::vector<double>& fixed_v() const { return fixed_v_; }
    const std::vector<double>& fixed_u() const { return fixed_u_; }
    const std::vector<double>& priors_v() const { return prior_v_; }
    const std::vector<double>& priors_u() const { return prior_u_; }

private:
    ValueModel(ValueKind kind, int n, int m);

    ValueKind kind_;
    int n_;
    int m_;
    std::vector<double> prior_v_;  // n*m row-major
    std::vector<double> prior_u_;  // m*n row-major
    UniformParams uniform_;
    AlmostEquivalentParams almost_;
    std::vector<double> fixed_v_;
    std::vector<double> fixed_u_;
};

}  // namespace imatch
