#pragma once

// Frozen reference data for the E6 labeling used throughout
// (chain 1-2-3-4-5, node 6 on node 3).

#include <array>
#include <map>
#include <string>

namespace fixtures {

using Vec6 = std::array<long long, 6>;

// beta_1 .. beta_30 in simple-root coordinates.
inline const std::array<Vec6, 30> kBeta = {{
    {1, 1, 0, 0, 0, 0}, {0, 0, 0, 1, 1, 0}, {0, 1, 1, 0, 0, 0}, {0, 0, 1, 1, 0, 0}, {0, 0, 1, 0, 0, 1},
    {1, 1, 1, 0, 0, 0}, {0, 0, 1, 1, 1, 0}, {0, 1, 1, 0, 0, 1}, {0, 0, 1, 1, 0, 1}, {0, 1, 1, 1, 0, 0},
    {1, 1, 1, 0, 0, 1}, {0, 0, 1, 1, 1, 1}, {0, 1, 1, 1, 0, 1}, {1, 1, 1, 1, 0, 0}, {0, 1, 1, 1, 1, 0},
    {1, 1, 1, 1, 1, 0}, {1, 1, 1, 1, 0, 1}, {0, 1, 1, 1, 1, 1}, {1, 1, 1, 1, 1, 1}, {0, 1, 2, 1, 0, 1},
    {1, 1, 2, 1, 0, 1}, {0, 1, 2, 1, 1, 1}, {1, 1, 2, 1, 1, 1}, {1, 2, 2, 1, 0, 1}, {0, 1, 2, 2, 1, 1},
    {1, 2, 2, 1, 1, 1}, {1, 1, 2, 2, 1, 1}, {1, 2, 2, 2, 1, 1}, {1, 2, 3, 2, 1, 1}, {1, 2, 3, 2, 1, 2},
}};

// Simple roots in fundamental-weight coordinates.
inline const std::array<Vec6, 6> kAlphaWeights = {{
    {2, -1, 0, 0, 0, 0},
    {-1, 2, -1, 0, 0, 0},
    {0, -1, 2, -1, 0, -1},
    {0, 0, -1, 2, -1, 0},
    {0, 0, 0, -1, 2, 0},
    {0, 0, -1, 0, 0, 2},
}};

// beta_23 .. beta_30 in fundamental-weight coordinates.
inline const std::map<int, Vec6> kBetaWeights = {
    {23, {1, -1, 1, -1, 1, 0}}, {24, {0, 1, 0, 0, -1, 0}}, {25, {-1, 0, 0, 1, 0, 0}}, {26, {0, 1, 0, -1, 1, 0}},
    {27, {1, -1, 0, 1, 0, 0}},  {28, {0, 1, -1, 1, 0, 0}}, {29, {0, 0, 1, 0, 0, -1}}, {30, {0, 0, 0, 0, 0, 1}},
};

// Dimensions of E6 irreducibles, computed offline with the Weyl dimension
// formula in exact rational arithmetic.
inline const std::map<Vec6, std::string> kE6Dims = {
    {{1, 0, 0, 0, 0, 0}, "27"},   {{0, 1, 0, 0, 0, 0}, "351"},   {{0, 0, 1, 0, 0, 0}, "2925"},
    {{0, 0, 0, 1, 0, 0}, "351"},  {{0, 0, 0, 0, 1, 0}, "27"},    {{0, 0, 0, 0, 0, 1}, "78"},
    {{1, 0, 0, 0, 1, 0}, "650"},  {{0, 2, 0, 0, 0, 0}, "34398"}, {{0, 1, 0, 1, 0, 0}, "70070"},
};

}  // namespace fixtures
