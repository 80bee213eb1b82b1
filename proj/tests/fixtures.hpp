#pragma once

// Hand-entered diagrams. Node labels are element expressions; arrows are
// 0-based (from, to) pairs into the node list. For orders on U and on the
// cosets an arrow runs from the upper element to the lower one; for control
// sets it runs from the smaller set to the larger one.

#include <string>
#include <utility>
#include <vector>

namespace fixtures {

inline const std::vector<std::string> sl3_nodes = {
    "s1s2s1", "s1s2s1s1^2", "s1s2s1s2^2", "s1s2s1s1^2s2^2", "s1s2s2^2", "s1s2s1^2s2^2",
    "s2s1", "s2s1s1^2", "s1s2^2", "s1s1^2s2^2", "s2", "s2s1^2",
    "1", "s1^2", "s2^2", "s1^2s2^2", "s1s2s1^2", "s1s2",
    "s2s1s2^2", "s2s1s1^2s2^2", "s1s1^2", "s1", "s2s2^2", "s2s1^2s2^2",
};
inline const std::vector<std::pair<int, int>> sl3_arrows = {
    {0, 17}, {0, 16}, {0, 6}, {0, 18}, {1, 17}, {1, 16}, {1, 7}, {1, 19},
    {2, 4}, {2, 5}, {2, 6}, {2, 18}, {3, 4}, {3, 5}, {3, 7}, {3, 19},
    {17, 21}, {17, 8}, {17, 10}, {17, 23}, {16, 20}, {16, 9}, {16, 11}, {16, 22},
    {4, 21}, {4, 8}, {4, 11}, {4, 22}, {5, 20}, {5, 9}, {5, 10}, {5, 23},
    {6, 21}, {6, 9}, {6, 10}, {6, 11}, {7, 20}, {7, 8}, {7, 10}, {7, 11},
    {18, 20}, {18, 8}, {18, 22}, {18, 23}, {19, 21}, {19, 9}, {19, 22}, {19, 23},
    {21, 12}, {20, 12}, {10, 12}, {22, 12}, {21, 13}, {20, 13}, {11, 13}, {23, 13},
    {8, 14}, {9, 14}, {10, 14}, {22, 14}, {8, 15}, {9, 15}, {11, 15}, {23, 15},
};

inline const std::vector<std::string> sl3_theta1_nodes = {
    "s2s1", "s2s1^3", "s2", "s2s1^2", "1", "s2^2",
};
inline const std::vector<std::pair<int, int>> sl3_theta1_arrows = {
    {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5},
};

inline const std::vector<std::string> sl3_control_nodes = {
    "s2s1", "s2s1^3", "s2", "s2s1^2", "1", "s2^2",
};
inline const std::vector<std::pair<int, int>> sl3_control_arrows = {
    {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5},
};

inline const std::vector<std::string> so24_nodes = {
    "s1s2s1s2", "s1s2s1s2s1^2", "s1s2s1s1^2", "s2s1s2", "s1s2s1^2", "s2s1",
    "s1s1^2", "s2", "1", "s1^2", "s1s2s1", "s2s1s2s1^2",
    "s1s2", "s2s1s1^2", "s1", "s2s1^2",
};
inline const std::vector<std::pair<int, int>> so24_arrows = {
    {0, 10}, {0, 3}, {0, 11}, {1, 2}, {1, 3}, {1, 11}, {2, 12}, {2, 4},
    {2, 5}, {2, 13}, {3, 12}, {3, 5}, {10, 12}, {10, 4}, {10, 5}, {10, 13},
    {11, 4}, {11, 13}, {4, 6}, {4, 7}, {4, 15}, {5, 14}, {5, 7}, {5, 15},
    {12, 14}, {12, 7}, {12, 15}, {13, 6}, {13, 7}, {13, 15}, {6, 8}, {6, 9},
    {7, 8}, {14, 8}, {14, 9}, {15, 9},
};
// Cosets U_H u for H with theta = {1}, keyed like sl3_theta1_nodes.
inline const std::vector<std::vector<std::string>> sl3_theta1_members = {
    {"s2s1", "s1s2s1", "s2s1s2^2", "s1s2s1s2^2"},
    {"s2s1^3", "s1s2s1^3", "s2s1^3s2^2", "s1s2s1^3s2^2"},
    {"s2", "s1s2", "s2s1^2s2^2", "s1s2s1^2s2^2"},
    {"s2s1^2", "s1s2s1^2", "s2^3", "s1s2^3"},
    {"1", "s1", "s1^2", "s1^3"},
    {"s2^2", "s1s2^2", "s1^2s2^2", "s1^3s2^2"},
};

// Control-set pairs left open by the forward direction.
inline const std::vector<std::pair<std::string, std::string>> sl3_control_open = {
    {"s2", "s2s1^2"},
    {"s2s1", "s2s1^3"},
};

}  // namespace fixtures
