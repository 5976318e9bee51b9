#pragma once

#include <vector>

namespace imatch {

// Maximum-cardinality bipartite matching via augmenting paths, scanning left
// vertices and adjacency lists in the given order, so the result is
// deterministic for a fixed input. Returns the matched right vertex per left
// vertex, -1 where unmatched.
std::vector<int> max_bipartite_matching(const std::vector<std::vector<int>>& adjacency,
                                        int right_size);

}  // namespace imatch
