#include "imatch/d1.hpp"

namespace imatch {

const std::vector<std::pair<int, int>>& d1_expected_interviews() {
    static const std::vector<std::pair<int, int>> pairs = {
        {0, 0}, {1, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 0}, {2, 1},
        {3, 2}, {4, 4}, {4, 1}, {4, 0}, {2, 4}, {2, 0}, {0, 4},
    };
    return pairs;
}

const std::vector<std::pair<int, int>>& d1_expected_matching() {
    static const std::vector<std::pair<int, int>> pairs = {
        {0, 4}, {1, 3}, {2, 0}, {3, 2}, {4, 1},
    };
    return pairs;
}

const std::vector<std::pair<int, int>>& d1_expected_decoupled() {
    static const std::vector<std::pair<int, int>> pairs = {
        {0, 4}, {1, 0}, {2, 1}, {3, 2}, {4, 3},
    };
    return pairs;
}

const char* d1_fixture_json() {
    return R"json({
  "n": 5,
  "m": 5,
  "kind": "fixed_matrices",
  "params": {
    "prior_v": 0.5,
    "prior_u": 0.5
  },
  "v": [
    0.602, 0.500, 0.500, 0.500, 0.781,
    0.791, 0.121, 0.040, 0.371, 0.303,
    0.566, 0.590, 0.500, 0.500, 0.418,
    0.500, 0.500, 0.894, 0.500, 0.500,
    0.349, 0.489, 0.500, 0.500, 0.216
  ],
  "u": [
    0.409, 0.142, 0.900, 0.500, 0.870,
    0.500, 0.572, 0.049, 0.500, 0.122,
    0.500, 0.153, 0.500, 0.889, 0.500,
    0.500, 0.991, 0.500, 0.500, 0.500,
    0.475, 0.486, 0.573, 0.500, 0.819
  ]
}
)json";
}

}  // namespace imatch
