#include "imatch/generate.hpp"

#include <algorithm>
#include <stdexcept>

namespace imatch {

Instance generate_instance(ValueKind kind, int n, int m, const GenerateParams& params,
                           std::uint64_t seed) {
    switch (kind) {
        case ValueKind::BilateralUniform: {
            UniformParams uniform = params.uniform;
            if (params.per_pair_v_centers) {
                if (params.v_center_lo > params.v_center_hi)
                    throw std::invalid_argument("center range is inverted");
                // Cap the half-width so the support of the lowest center
                // stays non-negative.
                uniform.v_half_width = std::min(uniform.v_half_width, params.v_center_lo);
                if (uniform.v_half_width <= 0.0)
                    throw std::invalid_argument("per-pair centers leave no room for a support");
                Rng rng(derive_stream(seed, kInstanceStream));
                uniform.v_centers.resize(static_cast<std::size_t>(n) * m);
                for (double& c : uniform.v_centers)
                    c = rng.uniform(params.v_center_lo, params.v_center_hi);
            }
            return Instance(n, m, ValueModel::bilateral_uniform(n, m, std::move(uniform)));
        }
        case ValueKind::TwoPointOrdered:
            return Instance(n, m, ValueModel::two_point_ordered(n, m));
        case ValueKind::AlmostEquivalent4Point:
            return Instance(n, m, ValueModel::almost_equivalent(n, m, params.almost));
        case ValueKind::FixedMatrices:
            throw std::invalid_argument("fixed-matrix instances are loaded from JSON, not generated");
    }
    throw std::logic_error("unreachable value kind");
}

}  // namespace imatch
