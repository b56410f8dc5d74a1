#pragma once

#include <optional>
#include <utility>

#include "sombor/graph.hpp"

namespace sombor {

// Closed-form extremal value with its parameters.
//   Q:   params (n, t), requires n >= 2t+1, t >= 0
//   Phi: params (beta, t), requires beta >= t+1, t >= 0
enum class BoundFamily { Q, Phi };

struct ExtremalBound {
    BoundFamily family;
    int first = 0;  // n for Q, beta for Phi
    int second = 0; // t
    double value = 0.0;
};

// H(n,t): star on n vertices (center 0) plus t disjoint edges among the
// leaves 1..2t. Cactus with t cycles; Sombor index Q(n,t). Throws
// std::invalid_argument when n < 2t+1.
Graph build_H(int n, int t);

// H*(2b,t): center 0 carrying one pendant vertex, t triangles, and b-t-1
// pendant paths of length 2. 2b vertices, t cycles, center degree b+t, has a
// perfect matching; Sombor index Phi(b,t). Throws std::invalid_argument when
// beta < t+1.
Graph build_Hstar(int beta, int t);

// Q(n,t) = (n-2t-1)*sqrt((n-1)^2+1) + 2t*sqrt((n-1)^2+4) + 2*sqrt(2)*t
ExtremalBound bound_Q(int n, int t);

// Phi(b,t) = (b+t-1)*sqrt((b+t)^2+4) + sqrt((b+t)^2+1)
//          + sqrt(5)*(b-t-1) + 2*sqrt(2)*t
ExtremalBound bound_Phi(int beta, int t);

// Scalar helper functions whose monotone behavior drives the extremal
// arguments. Domains are checked; violations throw std::invalid_argument.
double f1(double x, double d, double r); // x > 0, d > 0, 0 < r <= d
double f2(double x, double r);           // x >= r >= 0
double f3(double x);                     // x >= 2
double f(double x);                      // x >= 1
double g(double x);                      // f(x) - f(x+1), x >= 1

// Central finite-difference second derivative of f; x-h must stay >= 1.
double f_second_difference(double x, double h);

enum class ScanFunction { F1, F2, F3, F, G };

struct ScanGrid {
    double start = 0.0;
    double stop = 0.0;
    double step = 0.0;
};

enum class Direction {
    StrictlyIncreasing,
    StrictlyDecreasing,
    NonMonotone,
    Inconclusive, // some adjacent difference below the noise guard
};

struct ScanReport {
    ScanFunction function = ScanFunction::F3;
    std::optional<double> d; // bound for F1
    std::optional<double> r; // bound for F1/F2
    ScanGrid grid;
    Direction direction = Direction::Inconclusive;
    // First adjacent pair (x_i, x_{i+1}) breaking strictness, when any.
    std::optional<std::pair<double, double>> witness;
};

// Evaluates the function over the grid and classifies the empirical direction
// from consecutive differences, all strict. A difference with magnitude below
// 1e-13 * scale is never trusted as evidence: the scan reports Inconclusive
// instead. The grid needs at least 3 points and every point must lie in the
// function's domain (violations throw, naming the point).
ScanReport monotonicity_scan(ScanFunction fn, std::optional<double> d,
                             std::optional<double> r, const ScanGrid& grid);

const char* scan_function_name(ScanFunction fn);
const char* direction_name(Direction dir);

} // namespace sombor
