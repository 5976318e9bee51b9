#include "imatch/bipartite.hpp"

namespace imatch {

namespace {

bool augment(const std::vector<std::vector<int>>& adjacency, int left,
             std::vector<int>& match_right, std::vector<char>& visited) {
    for (int right : adjacency[left]) {
        if (visited[right]) continue;
        visited[right] = 1;
        if (match_right[right] < 0 || augment(adjacency, match_right[right], match_right, visited)) {
            match_right[right] = left;
            return true;
        }
    }
    return false;
}

}  // namespace

std::vector<int> max_bipartite_matching(const std::vector<std::vector<int>>& adjacency,
                                        int right_size) {
    const int left_size = static_cast<int>(adjacency.size());
    std::vector<int> match_right(right_size, -1);
    std::vector<char> visited(right_size, 0);
    for (int left = 0; left < left_size; ++left) {
        visited.assign(right_size, 0);
        augment(adjacency, left, match_right, visited);
    }
    std::vector<int> match_left(left_size, -1);
    for (int right = 0; right < right_size; ++right)
        if (match_right[right] >= 0) match_left[match_right[right]] = right;
    return match_left;
}

}  // namespace imatch
