#pragma once

#include <utility>
#include <vector>

#include "imatch/d1.hpp"
#include "imatch/instance.hpp"
#include "imatch/json_io.hpp"

namespace helpers {

// Instance with explicit outcome matrices: v[i][j] is what applicant i
// realizes at position j, u[j][i] the reverse. Priors default to 0.5.
inline imatch::Instance fixed_instance(const std::vector<std::vector<double>>& v,
                                       const std::vector<std::vector<double>>& u,
                                       double prior = 0.5) {
    const int n = static_cast<int>(v.size());
    const int m = static_cast<int>(u.size());
    std::vector<double> flat_v, flat_u;
    for (const auto& row : v)
        for (double x : row) flat_v.push_back(x);
    for (const auto& row : u)
        for (double x : row) flat_u.push_back(x);
    return imatch::Instance(
        n, m,
        imatch::ValueModel::fixed(n, m, std::move(flat_v), std::move(flat_u),
                                  std::vector<double>(static_cast<std::size_t>(n) * m, prior),
                                  std::vector<double>(static_cast<std::size_t>(m) * n, prior)));
}

inline imatch::Instance d1_instance() {
    return imatch::instance_from_json(imatch::d1_fixture_json());
}

}  // namespace helpers
