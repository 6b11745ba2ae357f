#pragma once

#include <Eigen/Dense>
#include <limits>
#include <string>
#include <vector>

#include "json.hpp"
#include "ridgepath/dataset.hpp"
#include "ridgepath/spline.hpp"

namespace ridgepath {

// One fitted univariate penalized spline.
struct SmootherFit {
    SplineBasis basis;
    Eigen::VectorXd coef;
    double lambda{0};
    double edf{0};             // trace of the hat matrix
    Eigen::VectorXd fitted;    // at the training x, empty after JSON reload
    double gcv{std::numeric_limits<double>::quiet_NaN()};
};

// Minimizes ||y - B c||^2 + lambda c' P c with the divided second-difference
// penalty P. Linear functions of x live in the penalty null space, so they
// are reproduced exactly at every lambda.
SmootherFit fit_penalized(const Eigen::VectorXd& y, const Eigen::VectorXd& x,
                          const SplineBasis& basis, double lambda);

// Picks lambda by GCV(lambda) = n RSS / (n - edf)^2 on a 201-point log grid
// spanning [1e-8, 1e8] times the mean eigenvalue of B'B, followed by one
// golden-section refinement between the best grid point's neighbors.
// Ties go to the larger lambda.
SmootherFit gcv_select(const Eigen::VectorXd& y, const Eigen::VectorXd& x,
                       const SplineBasis& basis);

// Spline evaluation inside the training range; linear extension from the
// boundary tangent outside it.
double predict_one(const SmootherFit& fit, double x);
Eigen::VectorXd predict(const SmootherFit& fit, const Eigen::VectorXd& x_new);

// Stage-1 transform: column j holds the GCV-selected spline prediction of y
// from predictor j alone. Fits run in parallel across columns (see
// thread_cap()); results do not depend on the execution order.
Eigen::MatrixXd np_transform(const Dataset& d, int k = 10,
                             std::vector<std::string>* notes = nullptr);

// Per-column fits behind np_transform, when the individual smoothers are
// needed as well (CLI smooth subcommand).
std::vector<SmootherFit> np_fits(const Dataset& d, int k = 10);

// {knots, degree, coef, lambda, edf, boundary, gcv}; fitted values are not
// serialized (they require the training x).
nlohmann::json fit_to_json(const SmootherFit& fit);
SmootherFit fit_from_json(const nlohmann::json& j);

}  // namespace ridgepath
