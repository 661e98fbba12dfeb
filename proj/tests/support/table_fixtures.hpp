#pragma once

// Reference per-image ground-truth and predicted GEV parameters (mu, sigma, xi
// printed to two decimals), 50% JND levels, PSNRs at those levels and the
// resulting metrics, for four dataset / JND-order combinations.

#include <array>
#include <span>
#include <string_view>

#include "surfit/gev.hpp"

namespace surfit::fixtures {

struct Row {
    int image;
    GevParams gt;
    int jnd;
    double psnr;
    GevParams pred;
    int jnd_pred;
    double psnr_pred;
    double bhattacharyya;
    int delta_jnd;
    double delta_psnr;
};

struct Table {
    std::string_view name;
    std::span<const Row> rows;
    double avg_bhattacharyya;
    double avg_delta_jnd;
    double avg_delta_psnr;
};

inline constexpr std::array<Row, 50> k_mcl_jci_first_jnd = {{
    {1, {-0.15, 22.61, 6.36}, 77, 31.94, {0.25, 18.62, 7.47}, 80, 31.42, 0.0781, 3, 0.52},
    {2, {0.4, 27.82, 7.36}, 71, 39.84, {0.01, 29.25, 20.88}, 65, 40.75, 0.1964, 6, 0.92},
    {3, {0.28, 22.53, 8.5}, 76, 31.47, {0.16, 23.73, 8.83}, 74, 31.7, 0.0105, 2, 0.23},
    {4, {0.18, 21.3, 5.36}, 78, 28.77, {0.11, 20.33, 8.15}, 78, 28.77, 0.0514, 0, 0.0},
    {5, {0.55, 24.29, 3.94}, 76, 31.58, {0.01, 24.6, 9.22}, 74, 31.86, 0.1469, 2, 0.28},
    {6, {0.73, 22.3, 4.29}, 77, 32.96, {0.1, 20.35, 5.93}, 79, 32.66, 0.1476, 2, 0.3},
    {7, {0.14, 31.98, 12.22}, 65, 29.92, {-0.07, 25.07, 9.83}, 73, 29.02, 0.0735, 8, 0.9},
    {8, {0.29, 23.79, 3.8}, 76, 28.31, {-0.05, 26.35, 9.82}, 72, 28.79, 0.1341, 4, 0.47},
    {9, {0.13, 17.53, 3.97}, 82, 27.97, {-0.02, 20.61, 5.37}, 79, 28.43, 0.0444, 3, 0.46},
    {10, {0.39, 21.04, 4.08}, 79, 36.45, {0.14, 23.08, 10.2}, 75, 37.05, 0.1264, 4, 0.59},
    {11, {-0.19, 31.15, 9.35}, 67, 34.34, {-0.07, 22.24, 5.77}, 77, 33.31, 0.1739, 10, 1.03},
    {12, {-0.22, 46.97, 12.76}, 50, 34.11, {0.1, 20.98, 8.99}, 77, 31.56, 0.4884, 27, 2.55},
    {13, {0.06, 21.25, 4.97}, 78, 35.38, {0.18, 20.76, 7.18}, 78, 35.38, 0.0384, 0, 0.0},
    {14, {0.01, 20.79, 7.26}, 78, 32.9, {-0.12, 19.9, 9.48}, 78, 32.9, 0.0216, 0, 0.0},
    {15, {0.2, 20.53, 7.65}, 78, 26.45, {0.11, 15.22, 5.46}, 84, 25.78, 0.083, 6, 0.67},
    {16, {0.11, 19.66, 8.33}, 79, 30.35, {0.07, 21.99, 8.0}, 77, 30.61, 0.0133, 2, 0.26},
    {17, {0.23, 15.41, 5.3}, 84, 28.64, {-0.01, 16.38, 6.0}, 83, 28.8, 0.014, 1, 0.16},
    {18, {-0.29, 19.42, 6.87}, 80, 33.34, {-0.03, 18.34, 6.4}, 81, 33.16, 0.0215, 1, 0.19},
    {19, {-0.17, 22.18, 8.23}, 76, 29.59, {-0.05, 32.46, 9.58}, 66, 30.72, 0.1861, 10, 1.13},
    {20, {-0.7, 39.41, 11.21}, 58, 32.62, {-0.17, 29.75, 10.56}, 68, 31.69, 0.1118, 10, 0.94},
    {21, {-0.4, 33.01, 11.76}, 64, 29.49, {0.06, 29.53, 9.58}, 68, 29.07, 0.0552, 4, 0.41},
    {22, {0.22, 20.45, 8.65}, 78, 28.63, {0.12, 19.17, 8.38}, 79, 28.52, 0.01, 1, 0.12},
    {23, {-0.01, 20.13, 3.69}, 80, 26.56, {-0.0, 22.23, 7.23}, 77, 26.93, 0.0934, 3, 0.38},
    {24, {-0.06, 21.03, 6.06}, 78, 32.66, {0.08, 18.98, 6.47}, 80, 32.38, 0.0181, 2, 0.28},
    {25, {-0.15, 21.57, 8.27}, 77, 28.92, {-0.06, 15.86, 5.82}, 84, 27.8, 0.0826, 7, 1.11},
    {26, {-1.38, 39.44, 11.83}, 59, 33.98, {-0.13, 30.39, 13.27}, 66, 33.34, 0.3194, 7, 0.64},
    {27, {-0.08, 15.55, 6.61}, 84, 29.1, {0.04, 16.99, 6.77}, 82, 29.48, 0.0128, 2, 0.38},
    {28, {0.36, 23.77, 6.66}, 75, 39.79, {-0.13, 25.07, 9.39}, 73, 40.15, 0.0597, 2, 0.35},
    {29, {-0.01, 23.07, 5.65}, 76, 36.16, {-0.18, 16.32, 8.56}, 82, 35.3, 0.1595, 6, 0.86},
    {30, {0.01, 18.9, 6.99}, 80, 35.34, {0.2, 16.91, 5.57}, 82, 34.9, 0.0163, 2, 0.44},
    {31, {0.03, 21.29, 7.97}, 77, 33.47, {0.23, 18.85, 7.39}, 80, 32.96, 0.0151, 3, 0.51},
    {32, {0.05, 22.41, 6.81}, 77, 30.98, {0.12, 19.25, 5.76}, 80, 30.49, 0.0254, 3, 0.49},
    {33, {0.12, 18.43, 4.8}, 81, 32.16, {-0.02, 23.0, 7.47}, 76, 32.98, 0.0647, 5, 0.83},
    {34, {0.18, 26.51, 6.51}, 73, 31.3, {-0.09, 26.33, 7.94}, 72, 31.4, 0.0251, 1, 0.1},
    {35, {0.09, 20.2, 6.86}, 79, 30.74, {0.16, 19.55, 7.7}, 79, 30.74, 0.0073, 0, 0.0},
    {36, {-0.18, 20.33, 6.7}, 79, 29.73, {0.03, 21.3, 7.25}, 78, 29.87, 0.0232, 1, 0.13},
    {37, {-0.41, 43.62, 19.15}, 51, 29.8, {0.13, 25.35, 8.44}, 73, 27.47, 0.2351, 22, 2.33},
    {38, {0.15, 18.27, 6.11}, 81, 29.26, {-0.21, 18.83, 7.68}, 80, 29.43, 0.0356, 1, 0.17},
    {39, {0.13, 21.3, 8.13}, 77, 33.73, {0.06, 23.85, 8.42}, 75, 34.04, 0.0117, 2, 0.31},
    {40, {0.25, 28.79, 8.96}, 69, 38.14, {-0.02, 30.12, 10.12}, 68, 38.27, 0.0187, 1, 0.13},
    {41, {0.19, 16.72, 6.21}, 82, 27.21, {0.1, 19.45, 7.23}, 79, 27.64, 0.0169, 3, 0.43},
    {42, {0.15, 18.13, 5.68}, 81, 29.97, {0.06, 22.67, 7.66}, 76, 30.71, 0.0473, 5, 0.74},
    {43, {0.19, 26.92, 8.29}, 71, 35.63, {-0.21, 21.44, 7.02}, 78, 34.7, 0.1413, 7, 0.93},
    {44, {0.17, 15.25, 3.83}, 85, 28.85, {0.07, 16.6, 5.07}, 83, 29.25, 0.0154, 2, 0.4},
    {45, {-0.28, 41.88, 15.58}, 54, 44.46, {-0.17, 35.5, 11.38}, 62, 43.62, 0.0448, 8, 0.84},
    {46, {0.1, 12.98, 5.77}, 86, 31.0, {0.12, 19.46, 6.93}, 79, 32.46, 0.1235, 7, 1.46},
    {47, {0.13, 24.49, 10.31}, 73, 35.29, {0.1, 23.99, 8.51}, 74, 35.14, 0.0105, 1, 0.15},
    {48, {0.23, 16.81, 6.34}, 82, 33.59, {0.02, 23.58, 7.46}, 75, 34.81, 0.0995, 7, 1.22},
    {49, {0.18, 19.1, 6.59}, 80, 36.39, {0.45, 17.36, 6.97}, 81, 36.25, 0.0245, 1, 0.14},
    {50, {0.15, 15.71, 4.53}, 84, 33.15, {-0.17, 20.47, 6.52}, 79, 34.24, 0.0791, 5, 1.1},
}};

inline constexpr std::array<Row, 50> k_mcl_jci_second_jnd = {{
    {1, {-0.22, 15.32, 3.84}, 85, 30.33, {0.13, 11.24, 6.9}, 88, 29.51, 0.1977, 3, 0.82},
    {2, {-0.09, 22.93, 8.7}, 75, 39.58, {0.18, 17.64, 15.26}, 78, 38.38, 0.1343, 3, 1.2},
    {3, {0.33, 14.48, 4.36}, 85, 30.1, {-0.05, 12.87, 6.42}, 86, 29.9, 0.0879, 1, 0.2},
    {4, {0.24, 15.17, 5.36}, 84, 27.86, {-0.02, 14.31, 5.99}, 85, 27.68, 0.0278, 1, 0.18},
    {5, {0.16, 17.35, 5.52}, 82, 30.6, {0.03, 16.52, 7.7}, 82, 30.6, 0.0355, 0, 0.0},
    {6, {-0.13, 16.24, 5.13}, 83, 31.97, {0.03, 14.69, 5.55}, 85, 31.54, 0.0186, 2, 0.43},
    {7, {0.06, 21.82, 10.98}, 76, 28.64, {-0.14, 12.82, 7.99}, 86, 27.15, 0.1591, 10, 1.48},
    {8, {0.27, 18.49, 3.04}, 82, 27.48, {0.05, 18.67, 7.9}, 80, 27.78, 0.152, 2, 0.3},
    {9, {0.36, 12.24, 2.51}, 88, 26.82, {-0.18, 15.33, 5.87}, 84, 27.63, 0.136, 4, 0.81},
    {10, {0.03, 14.52, 3.93}, 86, 34.99, {0.07, 15.23, 6.45}, 84, 35.48, 0.049, 2, 0.49},
    {11, {-0.1, 22.21, 7.18}, 77, 33.31, {-0.15, 15.96, 6.26}, 83, 32.48, 0.1113, 6, 0.83},
    {12, {0.33, 26.18, 10.06}, 71, 32.31, {0.17, 14.53, 8.57}, 84, 30.43, 0.2373, 13, 1.88},
    {13, {0.14, 14.0, 3.14}, 86, 33.77, {-0.02, 14.87, 6.07}, 84, 34.26, 0.0747, 2, 0.49},
    {14, {-0.01, 12.49, 4.93}, 87, 31.34, {-0.04, 13.1, 6.83}, 86, 31.55, 0.0213, 1, 0.2},
    {15, {0.23, 11.92, 4.37}, 88, 25.22, {0.23, 13.47, 5.12}, 86, 25.52, 0.0125, 2, 0.3},
    {16, {0.14, 12.75, 5.36}, 87, 29.03, {-0.33, 12.6, 6.58}, 87, 29.03, 0.0604, 0, 0.0},
    {17, {-0.02, 11.11, 3.74}, 89, 27.72, {-0.27, 10.24, 5.04}, 89, 27.72, 0.039, 0, 0.0},
    {18, {-0.38, 12.59, 5.18}, 87, 31.81, {-0.06, 14.48, 6.84}, 85, 32.34, 0.1072, 2, 0.52},
    {19, {-0.13, 15.06, 6.79}, 84, 28.45, {-0.16, 18.38, 9.16}, 80, 29.07, 0.0398, 4, 0.62},
    {20, {-0.48, 25.99, 10.56}, 72, 31.23, {-0.22, 20.16, 10.21}, 78, 30.49, 0.0497, 6, 0.75},
    {21, {-0.28, 21.08, 9.85}, 77, 27.98, {-0.04, 19.96, 8.09}, 79, 27.71, 0.0188, 2, 0.27},
    {22, {0.32, 11.29, 4.04}, 89, 26.9, {0.22, 13.05, 6.57}, 86, 27.49, 0.0357, 3, 0.59},
    {23, {-0.05, 14.87, 4.21}, 85, 25.83, {0.03, 16.93, 6.64}, 82, 26.28, 0.0557, 3, 0.45},
    {24, {-0.15, 15.37, 5.89}, 84, 31.72, {-0.1, 13.07, 7.35}, 86, 31.28, 0.0306, 2, 0.44},
    {25, {0.02, 12.72, 4.69}, 87, 27.21, {0.26, 15.73, 7.63}, 83, 28.0, 0.0692, 4, 0.79},
    {26, {-0.32, 23.66, 10.61}, 74, 32.41, {-0.16, 20.34, 10.21}, 78, 31.87, 0.0196, 4, 0.54},
    {27, {-0.04, 11.13, 3.55}, 89, 27.89, {-0.16, 10.52, 4.03}, 90, 27.6, 0.0123, 1, 0.29},
    {28, {0.14, 16.23, 6.14}, 83, 38.18, {0.02, 16.91, 7.81}, 82, 38.38, 0.0128, 1, 0.2},
    {29, {-0.17, 17.29, 4.32}, 83, 35.12, {-0.14, 12.46, 6.89}, 87, 34.18, 0.1357, 4, 0.95},
    {30, {-0.02, 12.21, 5.08}, 87, 33.53, {0.01, 13.26, 5.42}, 86, 33.85, 0.0058, 1, 0.32},
    {31, {0.2, 12.9, 4.55}, 87, 31.4, {-0.36, 9.51, 7.1}, 90, 30.42, 0.1596, 3, 0.98},
    {32, {-0.03, 13.66, 4.22}, 86, 29.27, {-0.04, 10.54, 3.84}, 90, 28.13, 0.0695, 4, 1.15},
    {33, {0.13, 11.76, 3.97}, 88, 30.57, {-0.03, 14.93, 7.69}, 84, 31.57, 0.0784, 4, 0.99},
    {34, {0.17, 16.96, 5.76}, 82, 30.07, {-0.09, 14.3, 5.35}, 85, 29.55, 0.0578, 3, 0.52},
    {35, {-0.08, 12.87, 4.47}, 87, 29.16, {-0.0, 12.22, 4.94}, 87, 29.16, 0.0073, 0, 0.0},
    {36, {-0.06, 14.66, 5.98}, 85, 28.77, {0.06, 13.52, 6.17}, 86, 28.57, 0.008, 1, 0.2},
    {37, {-0.1, 28.27, 15.47}, 68, 28.06, {0.34, 19.36, 9.31}, 79, 26.69, 0.0813, 11, 1.38},
    {38, {0.14, 10.83, 3.94}, 89, 27.64, {0.05, 14.54, 5.93}, 85, 28.55, 0.062, 4, 0.91},
    {39, {0.38, 11.32, 5.73}, 88, 31.43, {-0.04, 16.13, 5.79}, 83, 32.64, 0.097, 5, 1.21},
    {40, {0.12, 21.67, 8.13}, 77, 37.28, {0.08, 20.32, 8.76}, 78, 37.12, 0.0091, 1, 0.16},
    {41, {0.2, 10.55, 3.71}, 90, 25.57, {-0.15, 12.21, 5.73}, 87, 26.3, 0.0473, 3, 0.73},
    {42, {0.05, 12.29, 4.62}, 88, 28.57, {-0.01, 13.25, 5.5}, 86, 29.03, 0.0068, 2, 0.47},
    {43, {0.08, 19.54, 7.58}, 79, 34.55, {-0.22, 14.17, 5.92}, 85, 33.39, 0.1475, 6, 1.16},
    {44, {0.04, 9.91, 3.67}, 90, 27.56, {-0.29, 12.03, 5.61}, 88, 28.16, 0.0527, 2, 0.6},
    {45, {-0.15, 27.46, 12.61}, 70, 42.44, {-0.27, 18.73, 11.13}, 79, 40.66, 0.107, 9, 1.78},
    {46, {0.12, 7.88, 4.47}, 92, 28.97, {0.08, 12.1, 5.61}, 87, 30.73, 0.0745, 5, 1.76},
    {47, {0.12, 14.85, 8.63}, 83, 33.64, {-0.02, 13.03, 4.85}, 87, 32.62, 0.0743, 4, 1.03},
    {48, {-0.02, 11.07, 6.77}, 88, 32.02, {-0.15, 16.23, 6.64}, 83, 33.39, 0.0665, 5, 1.37},
    {49, {0.05, 12.44, 6.28}, 87, 35.07, {0.01, 14.0, 4.64}, 86, 35.32, 0.0399, 1, 0.26},
    {50, {0.11, 10.05, 3.95}, 90, 31.2, {0.03, 14.89, 5.19}, 85, 32.89, 0.1159, 5, 1.69},
}};

inline constexpr std::array<Row, 50> k_mcl_jci_third_jnd = {{
    {1, {-0.35, 11.56, 3.36}, 89, 29.18, {0.09, 9.91, 5.63}, 89, 29.18, 0.148, 0, 0.0},
    {2, {0.09, 17.34, 7.63}, 81, 37.95, {0.39, 13.23, 12.34}, 83, 37.62, 0.118, 2, 0.33},
    {3, {0.04, 10.61, 4.93}, 89, 29.18, {0.08, 9.44, 4.25}, 90, 28.89, 0.0077, 1, 0.28},
    {4, {-0.06, 11.56, 4.6}, 88, 27.04, {0.16, 11.3, 5.18}, 88, 27.04, 0.0162, 0, 0.0},
    {5, {0.1, 13.48, 5.39}, 86, 29.79, {0.26, 12.06, 6.01}, 87, 29.53, 0.0182, 1, 0.25},
    {6, {-0.02, 11.94, 4.17}, 88, 30.81, {-0.02, 10.54, 4.65}, 89, 30.5, 0.0182, 1, 0.31},
    {7, {0.01, 16.66, 10.38}, 81, 27.95, {-0.02, 9.74, 5.88}, 90, 26.34, 0.1286, 9, 1.61},
    {8, {-0.08, 14.31, 4.23}, 86, 26.79, {-0.03, 12.32, 5.91}, 87, 26.59, 0.0531, 1, 0.2},
    {9, {0.2, 8.61, 2.66}, 92, 25.67, {-0.15, 10.07, 5.17}, 90, 26.3, 0.0804, 2, 0.63},
    {10, {0.05, 10.59, 3.82}, 89, 33.98, {0.22, 10.08, 4.88}, 90, 33.6, 0.0245, 1, 0.38},
    {11, {-0.1, 16.01, 6.21}, 83, 32.48, {-0.07, 11.76, 4.45}, 88, 31.55, 0.0823, 5, 0.93},
    {12, {0.34, 14.95, 9.33}, 83, 30.57, {0.21, 13.72, 7.49}, 85, 30.23, 0.0167, 2, 0.34},
    {13, {-0.08, 10.34, 3.04}, 90, 32.43, {-0.0, 10.52, 5.13}, 89, 32.84, 0.0675, 1, 0.41},
    {14, {0.28, 8.32, 3.27}, 92, 29.86, {0.0, 10.06, 4.79}, 90, 30.54, 0.0354, 2, 0.67},
    {15, {0.24, 9.13, 2.56}, 91, 24.67, {0.2, 10.74, 3.59}, 89, 25.04, 0.0298, 2, 0.37},
    {16, {0.06, 10.4, 3.99}, 90, 28.32, {0.02, 10.68, 4.51}, 89, 28.58, 0.0028, 1, 0.26},
    {17, {-0.05, 10.26, 2.74}, 90, 27.49, {0.02, 9.4, 3.14}, 91, 27.24, 0.019, 1, 0.25},
    {18, {-0.39, 11.24, 3.89}, 89, 31.19, {-0.2, 9.57, 6.32}, 90, 30.85, 0.1113, 1, 0.34},
    {19, {-0.38, 13.23, 5.19}, 86, 28.09, {0.1, 13.48, 5.95}, 86, 28.09, 0.0852, 0, 0.0},
    {20, {-0.21, 17.46, 8.83}, 81, 30.04, {-0.18, 12.63, 9.44}, 86, 29.19, 0.0487, 5, 0.85},
    {21, {-0.08, 15.69, 7.66}, 83, 27.1, {-0.05, 13.28, 6.76}, 86, 26.57, 0.0147, 3, 0.53},
    {22, {0.2, 9.32, 2.74}, 91, 26.41, {0.24, 9.78, 4.75}, 90, 26.68, 0.0528, 1, 0.27},
    {23, {-0.1, 11.37, 4.23}, 89, 25.1, {0.01, 11.86, 5.86}, 87, 25.48, 0.0317, 2, 0.38},
    {24, {-0.16, 12.73, 4.76}, 87, 31.07, {-0.01, 11.03, 5.09}, 89, 30.53, 0.0201, 2, 0.55},
    {25, {0.18, 9.85, 2.97}, 91, 26.19, {0.16, 10.34, 4.83}, 89, 26.75, 0.0418, 2, 0.56},
    {26, {-0.0, 15.16, 7.93}, 83, 31.06, {0.07, 15.63, 7.9}, 83, 31.06, 0.0032, 0, 0.0},
    {27, {0.21, 8.69, 2.01}, 92, 26.88, {-0.05, 8.78, 3.17}, 92, 26.88, 0.0491, 0, 0.0},
    {28, {-0.1, 11.4, 5.15}, 88, 36.58, {0.06, 13.27, 4.67}, 86, 37.27, 0.0346, 2, 0.68},
    {29, {-0.45, 13.38, 4.49}, 87, 34.18, {0.02, 9.57, 5.0}, 90, 33.19, 0.1082, 3, 0.99},
    {30, {-0.32, 11.24, 4.58}, 89, 32.8, {0.15, 10.01, 3.85}, 90, 32.39, 0.0527, 1, 0.41},
    {31, {0.26, 8.91, 3.49}, 91, 30.03, {0.07, 9.31, 4.35}, 91, 30.03, 0.0144, 0, 0.0},
    {32, {-0.01, 9.99, 4.21}, 90, 28.13, {-0.11, 8.49, 3.51}, 92, 27.36, 0.0325, 2, 0.77},
    {33, {0.23, 9.31, 3.13}, 91, 29.59, {-0.07, 11.65, 6.3}, 88, 30.57, 0.0835, 3, 0.99},
    {34, {0.2, 12.25, 4.66}, 87, 29.13, {0.03, 10.7, 4.17}, 89, 28.66, 0.027, 2, 0.46},
    {35, {-0.01, 9.71, 3.78}, 90, 28.32, {0.06, 9.4, 4.17}, 91, 27.99, 0.0052, 1, 0.33},
    {36, {-0.11, 12.58, 4.51}, 87, 28.35, {0.01, 11.71, 4.52}, 88, 28.13, 0.0071, 1, 0.22},
    {37, {0.09, 18.62, 13.16}, 78, 26.83, {0.27, 13.64, 7.66}, 85, 25.78, 0.0548, 7, 1.05},
    {38, {0.35, 8.14, 3.0}, 92, 26.72, {0.01, 10.53, 5.01}, 89, 27.64, 0.0585, 3, 0.92},
    {39, {0.09, 10.5, 5.88}, 89, 31.12, {0.08, 12.15, 6.15}, 87, 31.72, 0.0093, 2, 0.61},
    {40, {0.19, 16.2, 6.83}, 83, 36.36, {0.17, 16.19, 6.07}, 83, 36.36, 0.0043, 0, 0.0},
    {41, {0.26, 9.62, 2.48}, 91, 25.28, {-0.21, 9.38, 4.23}, 91, 25.28, 0.0892, 0, 0.0},
    {42, {-0.2, 10.17, 4.27}, 90, 27.99, {0.15, 11.19, 4.67}, 89, 28.28, 0.053, 1, 0.29},
    {43, {-0.05, 14.69, 6.81}, 84, 33.61, {-0.08, 10.34, 4.38}, 90, 31.93, 0.1005, 6, 1.68},
    {44, {-0.05, 8.53, 2.56}, 92, 26.85, {0.01, 10.37, 4.11}, 90, 27.56, 0.0721, 2, 0.71},
    {45, {-0.06, 17.9, 10.94}, 80, 40.4, {-0.08, 13.29, 7.33}, 86, 38.36, 0.0651, 6, 2.04},
    {46, {0.18, 8.65, 2.98}, 92, 28.97, {0.04, 9.33, 4.87}, 90, 29.77, 0.0421, 2, 0.81},
    {47, {0.18, 10.53, 6.63}, 88, 32.31, {-0.07, 9.7, 4.32}, 90, 31.61, 0.0589, 2, 0.69},
    {48, {0.26, 8.27, 4.37}, 92, 30.36, {0.0, 11.51, 4.91}, 88, 32.02, 0.0537, 4, 1.66},
    {49, {0.49, 8.84, 3.15}, 91, 33.71, {-0.04, 10.89, 3.65}, 89, 34.46, 0.0642, 2, 0.75},
    {50, {0.25, 8.46, 2.92}, 92, 30.26, {0.08, 13.32, 4.06}, 87, 32.3, 0.1956, 5, 2.04},
}};

inline constexpr std::array<Row, 40> k_jnd_pano_first_jnd = {{
    {1, {0.09, 29.63, 12.9}, 67, 33.24, {0.12, 33.03, 13.43}, 63, 33.7, 0.0242, 4, 0.45},
    {2, {0.01, 35.18, 13.03}, 62, 41.09, {-0.25, 32.88, 12.01}, 64, 40.8, 0.0388, 2, 0.28},
    {3, {0.53, 26.04, 6.8}, 73, 31.82, {-0.05, 30.5, 11.53}, 67, 32.38, 0.0845, 6, 0.57},
    {4, {-0.29, 32.72, 12.13}, 65, 30.17, {0.09, 29.74, 11.23}, 68, 29.88, 0.0398, 3, 0.29},
    {5, {-0.07, 33.24, 13.77}, 63, 33.14, {-0.08, 24.68, 13.39}, 72, 32.11, 0.049, 9, 1.03},
    {6, {-0.27, 38.12, 14.34}, 58, 34.92, {-0.24, 24.1, 18.08}, 71, 33.71, 0.0957, 13, 1.21},
    {7, {0.04, 30.44, 10.74}, 67, 29.68, {-0.2, 42.34, 17.77}, 53, 31.02, 0.0963, 14, 1.34},
    {8, {-0.48, 38.62, 14.03}, 58, 30.15, {0.01, 35.43, 13.55}, 61, 29.88, 0.0699, 3, 0.28},
    {9, {-0.37, 47.82, 17.18}, 48, 31.47, {-0.19, 36.41, 15.02}, 60, 30.53, 0.0561, 12, 0.95},
    {10, {-0.36, 51.36, 19.06}, 44, 39.58, {-0.06, 36.44, 10.64}, 61, 38.43, 0.1538, 17, 1.15},
    {11, {-0.43, 36.3, 10.14}, 62, 34.78, {0.04, 33.93, 13.02}, 63, 34.71, 0.0987, 1, 0.07},
    {12, {-0.51, 24.46, 12.11}, 73, 32.08, {-0.02, 39.15, 14.5}, 57, 33.62, 0.3741, 16, 1.54},
    {13, {-0.65, 39.7, 10.69}, 58, 37.59, {0.13, 30.45, 11.57}, 67, 36.76, 0.165, 9, 0.84},
    {14, {-0.19, 29.51, 10.3}, 68, 34.02, {0.04, 36.38, 12.77}, 60, 34.69, 0.087, 8, 0.67},
    {15, {-0.32, 36.14, 9.92}, 62, 27.82, {0.06, 30.0, 9.96}, 68, 27.34, 0.0636, 6, 0.48},
    {16, {-0.23, 40.28, 11.89}, 57, 32.53, {-0.28, 34.52, 11.52}, 63, 32.04, 0.04, 6, 0.49},
    {17, {-0.18, 37.81, 13.43}, 59, 30.96, {-0.18, 35.72, 16.66}, 60, 30.92, 0.0152, 1, 0.04},
    {18, {-0.53, 60.23, 19.32}, 35, 37.59, {-0.46, 49.24, 19.92}, 46, 36.63, 0.0522, 11, 0.96},
    {19, {-0.37, 44.24, 16.07}, 52, 31.98, {0.14, 32.15, 11.8}, 65, 30.83, 0.099, 13, 1.15},
    {20, {-0.26, 44.08, 15.01}, 52, 33.16, {-0.35, 35.47, 18.08}, 60, 32.48, 0.0461, 8, 0.68},
    {21, {-0.2, 39.22, 17.56}, 56, 30.26, {-0.34, 43.01, 17.59}, 52, 30.63, 0.0135, 4, 0.37},
    {22, {-1.13, 30.85, 17.16}, 66, 29.79, {-0.31, 49.28, 19.62}, 45, 31.26, 0.244, 21, 1.47},
    {23, {-0.44, 38.91, 18.06}, 56, 28.97, {-0.25, 24.44, 15.53}, 72, 27.49, 0.107, 16, 1.48},
    {24, {-0.26, 24.38, 12.24}, 73, 33.27, {-0.08, 33.25, 14.62}, 63, 34.22, 0.1023, 10, 0.95},
    {25, {-0.64, 36.19, 13.41}, 61, 30.67, {0.07, 34.12, 11.81}, 63, 30.52, 0.1217, 2, 0.15},
    {26, {-0.47, 49.02, 25.93}, 44, 35.29, {-0.22, 37.45, 11.58}, 60, 33.93, 0.2197, 16, 1.36},
    {27, {0.06, 35.24, 11.9}, 62, 32.01, {-0.2, 32.21, 11.08}, 65, 31.74, 0.0396, 3, 0.27},
    {28, {-0.51, 42.54, 6.89}, 57, 41.89, {-0.24, 40.02, 16.29}, 56, 41.95, 0.2577, 1, 0.06},
    {29, {-0.29, 40.22, 20.17}, 54, 37.83, {-0.2, 40.32, 13.36}, 56, 37.72, 0.0382, 2, 0.11},
    {30, {-0.09, 34.49, 14.66}, 62, 37.89, {-0.1, 37.41, 16.04}, 58, 38.22, 0.0101, 4, 0.33},
    {31, {-0.29, 42.14, 15.15}, 54, 35.92, {-0.2, 34.64, 13.29}, 62, 35.25, 0.0335, 8, 0.67},
    {32, {0.93, 26.39, 5.64}, 73, 31.55, {-0.17, 31.06, 12.4}, 66, 32.38, 0.1928, 7, 0.83},
    {33, {-0.3, 41.31, 15.01}, 55, 35.2, {-0.28, 34.87, 12.59}, 62, 34.6, 0.0444, 7, 0.6},
    {34, {-1.04, 38.78, 12.73}, 59, 32.65, {-0.2, 42.39, 20.4}, 52, 33.24, 0.2886, 7, 0.59},
    {35, {0.05, 24.82, 10.13}, 73, 31.61, {-0.26, 42.45, 14.44}, 54, 33.54, 0.192, 19, 1.93},
    {36, {-0.59, 57.31, 19.34}, 38, 33.25, {-0.2, 34.85, 13.87}, 62, 31.45, 0.222, 24, 1.8},
    {37, {-0.46, 35.29, 15.13}, 61, 28.81, {-0.13, 38.7, 13.54}, 58, 29.13, 0.063, 3, 0.32},
    {38, {-0.22, 34.65, 13.24}, 62, 31.54, {-0.42, 41.2, 16.99}, 55, 32.17, 0.0361, 7, 0.63},
    {39, {-1.05, 58.57, 23.59}, 36, 38.21, {-0.48, 41.03, 19.27}, 54, 36.42, 0.1706, 18, 1.79},
    {40, {-0.47, 40.85, 18.9}, 54, 39.28, {-0.14, 45.57, 16.59}, 50, 39.52, 0.0651, 4, 0.24},
}};

inline const std::array<Table, 4> kTables = {{
    {"mcl_jci_first_jnd", k_mcl_jci_first_jnd, 0.0810, 4.44, 0.58},
    {"mcl_jci_second_jnd", k_mcl_jci_second_jnd, 0.0702, 3.34, 0.69},
    {"mcl_jci_third_jnd", k_mcl_jci_third_jnd, 0.0522, 2.10, 0.58},
    {"jnd_pano_first_jnd", k_jnd_pano_first_jnd, 0.1053, 8.63, 0.76},
}};

}  // namespace surfit::fixtures
