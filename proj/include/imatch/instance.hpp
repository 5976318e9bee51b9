#pragma once

#include <utility>

#include "imatch/value_model.hpp"

namespace imatch {

// One market: n applicants, m positions, and the value model that governs
// priors and interview draws. Requires n >= 2 and m >= 2.
struct Instance {
    int n;
    int m;
    ValueModel model;

    Instance(int n_agents, int m_positions, ValueModel value_model);
};

}  // namespace imatch
