#pragma once

#include <Eigen/Dense>

#include "json.hpp"
#include "ridgepath/canonical.hpp"

namespace ridgepath {

// Two-piece linear shrinkage path through (0, 1), (mStar, dMSE), (p, 0).
struct ShrinkagePath {
    Eigen::VectorXd d_mse;  // per-component optimal factors, each in [0,1]
    double m_star{0};       // knot extent: p - sum(d_mse)
    int p{0};
};

// One evaluated point on the path.
struct PathPoint {
    double m{0};
    Eigen::VectorXd delta;
    Eigen::VectorXd beta;      // standardized scale
    double intercept{0};       // original y units
    Eigen::VectorXd rel_risk;
};

// Plug-in per-component risk minimizers d_i = c_i^2 / (c_i^2 + sigma2/lambda_i).
// c_i = 0 gives 0; sigma2 = 0 with c_i != 0 gives 1.
ShrinkagePath dmse_factors(const CanonicalModel& cm);

// delta(m) on the two-piece path. The trace identity sum(delta) = p - m holds
// analytically on both pieces. Degenerate knots: mStar below 1e-10 collapses
// to the uniform path (p - m)/p; mStar above p - 1e-10 keeps the first piece
// for every m. Throws when m is outside [0, p].
Eigen::VectorXd delta_at(const ShrinkagePath& path, double m);

// beta(m) = V diag(delta(m)) c, standardized scale.
Eigen::VectorXd beta_at(const CanonicalModel& cm, const ShrinkagePath& path,
                        double m);

// Estimated relative MSE risks,
//   diag( V [ diag(delta)^2 sigma2 diag(lambda)^-1
//             + diag(1-delta) c c' diag(1-delta) ] V' ) / sigma2.
// At m = 0 this is diag((Xs'Xs)^-1). Throws when sigma2 is zero.
Eigen::VectorXd relative_risk_at(const CanonicalModel& cm,
                                 const ShrinkagePath& path, double m);

// Bundles delta, beta, intercept (original units), and risks at one m.
PathPoint path_point_at(const CanonicalModel& cm, const ShrinkagePath& path,
                        const StandardizedDesign& sd, double m);

// {dMSE, mStar, p} for audit output.
nlohmann::json path_to_json(const ShrinkagePath& path);

}  // namespace ridgepath
