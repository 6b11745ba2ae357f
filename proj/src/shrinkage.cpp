#include "ridgepath/shrinkage.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace ridgepath {

ShrinkagePath dmse_factors(const CanonicalModel& cm) {
    ShrinkagePath path;
    path.p = static_cast<int>(cm.p);
    path.d_mse.resize(cm.p);
    for (Eigen::Index i = 0; i < cm.p; ++i) {
        double ci = cm.c[i];
        if (ci == 0.0) {
            path.d_mse[i] = 0.0;
        } else if (cm.sigma2 == 0.0) {
            path.d_mse[i] = 1.0;
        } else {
            double c2 = ci * ci;
            path.d_mse[i] = c2 / (c2 + cm.sigma2 / cm.lambda_eig[i]);
        }
    }
    double m_star = static_cast<double>(path.p) - path.d_mse.sum();
    path.m_star = std::clamp(m_star, 0.0, static_cast<double>(path.p));
    return path;
}

Eigen::VectorXd delta_at(const ShrinkagePath& path, double m) {
    double p = static_cast<double>(path.p);
    if (!(m >= 0.0 && m <= p))
        throw std::invalid_argument("delta_at: m must lie in [0, p]");
    if (m == 0.0) return Eigen::VectorXd::Ones(path.p);
    if (m == p) return Eigen::VectorXd::Zero(path.p);

    double ms = path.m_star;
    Eigen::VectorXd delta(path.p);
    if (ms < 1e-10) {
        // All components essentially unshrunk at the knot; uniform path.
        delta.setConstant((p - m) / p);
    } else if (m <= ms || ms > p - 1e-10) {
        // First piece. Also used past a knot at p itself, where the piece
        // satisfies the trace identity for every m.
        delta = (1.0 - (m / ms) * (1.0 - path.d_mse.array())).matrix();
    } else {
        delta = (path.d_mse.array() * ((p - m) / (p - ms))).matrix();
    }
    // Guard the [0,1] range against last-ulp excursions.
    return delta.cwiseMax(0.0).cwiseMin(1.0);
}

Eigen::VectorXd beta_at(const CanonicalModel& cm, const ShrinkagePath& path,
                        double m) {
    return cm.V * delta_at(path, m).cwiseProduct(cm.c);
}

Eigen::VectorXd relative_risk_at(const CanonicalModel& cm,
                                 const ShrinkagePath& path, double m) {
    if (cm.sigma2 <= 0.0)
        throw std::runtime_error(
            "relative_risk_at: residual variance is zero, risks undefined");
    Eigen::VectorXd delta = delta_at(path, m);
    Eigen::VectorXd var_term =
        (delta.array().square() * cm.sigma2 / cm.lambda_eig.array()).matrix();
    Eigen::VectorXd bias = ((1.0 - delta.array()) * cm.c.array()).matrix();

    Eigen::VectorXd risk(cm.p);
    for (Eigen::Index j = 0; j < cm.p; ++j) {
        double var_j = (cm.V.row(j).transpose().array().square() *
                        var_term.array())
                           .sum();
        double bias_j = cm.V.row(j).dot(bias);
        risk[j] = (var_j + bias_j * bias_j) / cm.sigma2;
    }
    return risk;
}

PathPoint path_point_at(const CanonicalModel& cm, const ShrinkagePath& path,
                        const StandardizedDesign& sd, double m) {
    PathPoint pt;
    pt.m = m;
    pt.delta = delta_at(path, m);
    pt.beta = cm.V * pt.delta.cwiseProduct(cm.c);
    pt.intercept = intercept_at(sd, pt.beta);
    pt.rel_risk = relative_risk_at(cm, path, m);
    return pt;
}

nlohmann::json path_to_json(const ShrinkagePath& path) {
    nlohmann::json j;
    j["dMSE"] = std::vector<double>(path.d_mse.data(),
                                    path.d_mse.data() + path.d_mse.size());
    j["mStar"] = path.m_star;
    j["p"] = path.p;
    return j;
}

}  // namespace ridgepath
