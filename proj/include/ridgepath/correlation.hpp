#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace ridgepath {

// Pearson product-moment correlation. Requires equal lengths >= 3 and
// nonconstant inputs; result clamped to [-1, 1]. Identical inputs give
// exactly 1.
double pearson_corr(const Eigen::VectorXd& a, const Eigen::VectorXd& b);

// Full symmetric correlation matrix with an exact unit diagonal.
Eigen::MatrixXd corr_table(const std::vector<Eigen::VectorXd>& columns);

// Lower-triangular rendering, 4 decimals, aligned columns.
std::string corr_table_text(const Eigen::MatrixXd& table, const std::vector<std::string>& names);

// Lower-triangular CSV: header row of names, blank cells above the diagonal.
void write_corr_csv(const std::string& path, const Eigen::MatrixXd& table,
                    const std::vector<std::string>& names);

}  // namespace ridgepath
