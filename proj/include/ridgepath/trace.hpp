#pragma once

#include <Eigen/Dense>
#include <limits>
#include <string>
#include <vector>

#include "ridgepath/shrinkage.hpp"

namespace ridgepath {

// TRACE series over an ascending m-grid. Row r of each matrix belongs to
// m_grid[r]; columns are variables.
struct TraceSeries {
    int p{0};
    double m_star{std::numeric_limits<double>::quiet_NaN()};
    std::vector<double> m_grid;  // strictly ascending, contains 0, mStar, p
    Eigen::MatrixXd delta;
    Eigen::MatrixXd coef;  // standardized scale
    Eigen::MatrixXd risk;
};

// Uniform grid of `steps` points on [0,p] with mStar inserted when it is not
// already a grid point. steps >= 2.
TraceSeries build_traces(const CanonicalModel& cm, const ShrinkagePath& path,
                         int steps);

// Header m,delta_1..p,beta_1..p,risk_1..p; shortest round-trip formatting,
// "." decimals everywhere. Reload reproduces the series exactly; mStar is
// not part of the schema, so it comes back NaN.
void write_trace_csv(const TraceSeries& t, const std::string& path);
TraceSeries read_trace_csv(const std::string& path);

}  // namespace ridgepath
