#pragma once

#include <Eigen/Dense>

#include "json.hpp"
#include "ridgepath/dataset.hpp"

namespace ridgepath {

// SVD canonical form of the standardized regression: Xs = U S V',
// eigenvalues of Xs'Xs on the diagonal, OLS expressed componentwise.
struct CanonicalModel {
    Eigen::MatrixXd V;           // p x p right singular vectors
    Eigen::VectorXd lambda_eig;  // eigenvalues of Xs'Xs, descending
    Eigen::VectorXd c;           // canonical OLS components: c_i = u_i'ys / s_i
    Eigen::VectorXd beta_ols;    // = V c, standardized scale
    double sigma2{0};            // RSS / (n - p - 1), standardized-y scale
    double rms_ols{0};           // residual mean square, equals sigma2
    double resid_se{0};          // sqrt(sigma2)
    Eigen::Index n{0};
    Eigen::Index p{0};
};

// Thin SVD of the standardized design. Fails when the numerical rank is
// below p: smallest eigenvalue under p * machine-eps * largest.
CanonicalModel canonical_decompose(const StandardizedDesign& sd);

// beta_orig_j = beta_std_j * ySd / xSd_j. Predictions in original units are
// invariant under the round trip.
Eigen::VectorXd destandardize(const Eigen::VectorXd& beta_std,
                              const StandardizedDesign& sd);

// Intercept pivot: mu = yMean - xMeans' beta_orig, so the fitted hyperplane
// passes through the sample means at every shrinkage extent. Takes the
// standardized beta and destandardizes internally.
double intercept_at(const StandardizedDesign& sd,
                    const Eigen::VectorXd& beta_std);

// {eigenvalues, V (rows), c, sigma2, n, p} for audit output.
nlohmann::json canonical_to_json(const CanonicalModel& cm);

}  // namespace ridgepath
