#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "json.hpp"

namespace ridgepath {

// Outcome vector plus predictor matrix, loaded from CSV and validated:
// finite entries only, every column nonconstant, n >= p + 2.
struct Dataset {
    std::vector<std::string> names;  // outcome name first, then the p predictor names
    Eigen::VectorXd y;
    Eigen::MatrixXd X;
    Eigen::Index n{0};
    Eigen::Index p{0};
    long dropped_rows{0};  // rows removed because a selected cell was missing

    const std::string& y_name() const { return names.front(); }
    const std::string& x_name(Eigen::Index j) const { return names[static_cast<size_t>(j) + 1]; }
};

// Loads the named columns from a headered CSV file. Comma separated, "."
// decimal point; "NA" or an empty cell marks a missing value. Rows with a
// missing value in any selected column are dropped and counted; any other
// non-numeric cell in a selected column is an error.
Dataset load_csv(const std::string& path, const std::string& y_col,
                 const std::vector<std::string>& x_cols);

// Writes columns side by side as CSV with full round-trip precision.
void write_csv(const std::string& path, const std::vector<std::string>& names,
               const std::vector<Eigen::VectorXd>& columns);

// Centered, unit-sample-variance design and outcome (n-1 denominator),
// with the transform parameters retained so it can be undone.
struct StandardizedDesign {
    std::vector<std::string> names;  // carried over from the Dataset
    Eigen::MatrixXd Xs;
    Eigen::VectorXd ys;
    Eigen::VectorXd x_means;
    Eigen::VectorXd x_sds;
    double y_mean{0};
    double y_sd{1};
};

StandardizedDesign standardize(const Dataset& d);

// (v - mean(v)) / sd(v) with the n-1 denominator. Throws on constant input.
Eigen::VectorXd standardize_vector(const Eigen::VectorXd& v);

double sample_mean(const Eigen::VectorXd& v);
double sample_sd(const Eigen::VectorXd& v);

// [{"column": name, "mean": m, "sd": s}, ...] for the outcome and predictors.
nlohmann::json standardization_json(const StandardizedDesign& sd);

}  // namespace ridgepath
