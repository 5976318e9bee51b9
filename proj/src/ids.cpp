#include "imatch/ids.hpp"

namespace imatch {

std::string to_string(const AgentId& id) {
    return (id.side == Side::Applicant ? "a" : "p") + std::to_string(id.index);
}

}  // namespace imatch
