// Conway polynomial table, generated by a one-off script and
// verified at runtime (primitivity of x, tower compatibility).
// Coefficients ascending: c[0] + c[1] x + ... + c[k] x^k, c[k] = 1.

#include "polarset/gf.hpp"

namespace polarset::gf {

static const uint8_t cw_2_1[] = {1, 1};
static const uint8_t cw_2_2[] = {1, 1, 1};
static const uint8_t cw_2_3[] = {1, 1, 0, 1};
static const uint8_t cw_2_4[] = {1, 1, 0, 0, 1};
static const uint8_t cw_2_5[] = {1, 0, 1, 0, 0, 1};
static const uint8_t cw_2_6[] = {1, 1, 0, 1, 1, 0, 1};
static const uint8_t cw_2_7[] = {1, 1, 0, 0, 0, 0, 0, 1};
static const uint8_t cw_2_8[] = {1, 0, 1, 1, 1, 0, 0, 0, 1};
static const uint8_t cw_2_9[] = {1, 0, 0, 0, 1, 0, 0, 0, 0, 1};
static const uint8_t cw_2_10[] = {1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 1};
static const uint8_t cw_2_11[] = {1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1};
static const uint8_t cw_2_12[] = {1, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 1};
static const uint8_t cw_2_13[] = {1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1};
static const uint8_t cw_2_14[] = {1, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 1};
static const uint8_t cw_2_15[] = {1, 0, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1};
static const uint8_t cw_2_16[] = {1, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1};
static const uint8_t cw_2_17[] = {1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1};
static const uint8_t cw_2_18[] = {1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 1};
static const uint8_t cw_2_19[] = {1, 1, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1};
static const uint8_t cw_2_20[] = {1, 1, 0, 0, 1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1};
static const uint8_t cw_3_1[] = {1, 1};
static const uint8_t cw_3_2[] = {2, 2, 1};
static const uint8_t cw_3_3[] = {1, 2, 0, 1};
static const uint8_t cw_3_4[] = {2, 0, 0, 2, 1};
static const uint8_t cw_3_5[] = {1, 2, 0, 0, 0, 1};
static const uint8_t cw_3_6[] = {2, 2, 1, 0, 2, 0, 1};
static const uint8_t cw_3_7[] = {1, 0, 2, 0, 0, 0, 0, 1};
static const uint8_t cw_3_8[] = {2, 2, 2, 0, 1, 2, 0, 0, 1};
static const uint8_t cw_3_9[] = {1, 1, 2, 2, 0, 0, 0, 0, 0, 1};
static const uint8_t cw_3_10[] = {2, 1, 0, 0, 2, 2, 2, 0, 0, 0, 1};
static const uint8_t cw_3_11[] = {1, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 1};
static const uint8_t cw_3_12[] = {2, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 0, 1};
static const uint8_t cw_5_1[] = {3, 1};
static const uint8_t cw_5_2[] = {2, 4, 1};
static const uint8_t cw_5_3[] = {3, 3, 0, 1};
static const uint8_t cw_5_4[] = {2, 4, 4, 0, 1};
static const uint8_t cw_5_5[] = {3, 4, 0, 0, 0, 1};
static const uint8_t cw_5_6[] = {2, 0, 1, 4, 1, 0, 1};
static const uint8_t cw_5_7[] = {3, 3, 0, 0, 0, 0, 0, 1};
static const uint8_t cw_5_8[] = {2, 4, 3, 0, 1, 0, 0, 0, 1};
static const uint8_t cw_7_1[] = {4, 1};
static const uint8_t cw_7_2[] = {3, 6, 1};
static const uint8_t cw_7_3[] = {4, 0, 6, 1};
static const uint8_t cw_7_4[] = {3, 4, 5, 0, 1};
static const uint8_t cw_7_5[] = {4, 1, 0, 0, 0, 1};
static const uint8_t cw_7_6[] = {3, 6, 4, 5, 1, 0, 1};
static const uint8_t cw_7_7[] = {4, 6, 0, 0, 0, 0, 0, 1};
static const uint8_t cw_11_1[] = {9, 1};
static const uint8_t cw_11_2[] = {2, 7, 1};
static const uint8_t cw_11_3[] = {9, 2, 0, 1};
static const uint8_t cw_11_4[] = {2, 10, 8, 0, 1};
static const uint8_t cw_11_5[] = {9, 0, 10, 0, 0, 1};
static const uint8_t cw_13_1[] = {11, 1};
static const uint8_t cw_13_2[] = {2, 12, 1};
static const uint8_t cw_13_3[] = {11, 2, 0, 1};
static const uint8_t cw_13_4[] = {2, 12, 3, 0, 1};
static const uint8_t cw_13_5[] = {11, 4, 0, 0, 0, 1};

const ConwayEntry kConwayTable[] = {
    {2, 1, cw_2_1},
    {2, 2, cw_2_2},
    {2, 3, cw_2_3},
    {2, 4, cw_2_4},
    {2, 5, cw_2_5},
    {2, 6, cw_2_6},
    {2, 7, cw_2_7},
    {2, 8, cw_2_8},
    {2, 9, cw_2_9},
    {2, 10, cw_2_10},
    {2, 11, cw_2_11},
    {2, 12, cw_2_12},
    {2, 13, cw_2_13},
    {2, 14, cw_2_14},
    {2, 15, cw_2_15},
    {2, 16, cw_2_16},
    {2, 17, cw_2_17},
    {2, 18, cw_2_18},
    {2, 19, cw_2_19},
    {2, 20, cw_2_20},
    {3, 1, cw_3_1},
    {3, 2, cw_3_2},
    {3, 3, cw_3_3},
    {3, 4, cw_3_4},
    {3, 5, cw_3_5},
    {3, 6, cw_3_6},
    {3, 7, cw_3_7},
    {3, 8, cw_3_8},
    {3, 9, cw_3_9},
    {3, 10, cw_3_10},
    {3, 11, cw_3_11},
    {3, 12, cw_3_12},
    {5, 1, cw_5_1},
    {5, 2, cw_5_2},
    {5, 3, cw_5_3},
    {5, 4, cw_5_4},
    {5, 5, cw_5_5},
    {5, 6, cw_5_6},
    {5, 7, cw_5_7},
    {5, 8, cw_5_8},
    {7, 1, cw_7_1},
    {7, 2, cw_7_2},
    {7, 3, cw_7_3},
    {7, 4, cw_7_4},
    {7, 5, cw_7_5},
    {7, 6, cw_7_6},
    {7, 7, cw_7_7},
    {11, 1, cw_11_1},
    {11, 2, cw_11_2},
    {11, 3, cw_11_3},
    {11, 4, cw_11_4},
    {11, 5, cw_11_5},
    {13, 1, cw_13_1},
    {13, 2, cw_13_2},
    {13, 3, cw_13_3},
    {13, 4, cw_13_4},
    {13, 5, cw_13_5},
};

const std::size_t kConwayTableSize = sizeof(kConwayTable) / sizeof(kConwayTable[0]);

} // namespace polarset::gf
