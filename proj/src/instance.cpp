#include "imatch/instance.hpp"

#include <stdexcept>

namespace imatch {

Instance::Instance(int n_agents, int m_positions, ValueModel value_model)
    : n(n_agents), m(m_positions), model(std::move(value_model)) {
    if (n < 2 || m < 2) throw std::invalid_argument("instance needs n >= 2 and m >= 2");
    if (model.n() != n || model.m() != m)
        throw std::invalid_argument("value model dimensions do not match the instance");
}

}  // namespace imatch
