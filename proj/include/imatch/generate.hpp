#pragma once

#include <cstdint>

#include "imatch/instance.hpp"

namespace imatch {

// Knobs for instance generation. Only the fields of the requested kind are
// read; FixedMatrices instances are loaded from JSON, not generated.
struct GenerateParams {
    UniformParams uniform;
    // When true, applicant priors vary per pair: each center is drawn
    // uniformly from [v_center_lo, v_center_hi] using the instance stream and
    // the support is center +/- uniform.v_half_width, with the half-width
    // capped at v_center_lo so no support dips below zero.
    bool per_pair_v_centers = false;
    double v_center_lo = 0.3;
    double v_center_hi = 0.7;
    AlmostEquivalentParams almost;
};

Instance generate_instance(ValueKind kind, int n, int m, const GenerateParams& params,
                           std::uint64_t seed);

}  // namespace imatch
