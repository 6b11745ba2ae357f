#include "ridgepath/canonical.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace ridgepath {

CanonicalModel canonical_decompose(const StandardizedDesign& sd) {
    Eigen::Index n = sd.Xs.rows();
    Eigen::Index p = sd.Xs.cols();
    if (n < p + 2)
        throw std::invalid_argument(
            "canonical_decompose: need at least p + 2 rows for the residual "
            "variance");

    Eigen::BDCSVD<Eigen::MatrixXd> svd(sd.Xs,
                                       Eigen::ComputeThinU | Eigen::ComputeThinV);
    Eigen::VectorXd s = svd.singularValues();  // descending

    CanonicalModel cm;
    cm.n = n;
    cm.p = p;
    cm.V = svd.matrixV();
    cm.lambda_eig = s.array().square();

    double tol = static_cast<double>(p) *
                 std::numeric_limits<double>::epsilon() * cm.lambda_eig[0];
    if (!(cm.lambda_eig[p - 1] >= tol))
        throw std::runtime_error(
            "canonical_decompose: standardized design is numerically rank "
            "deficient");

    cm.c = (svd.matrixU().transpose() * sd.ys).cwiseQuotient(s);
    cm.beta_ols = cm.V * cm.c;

    double rss = (sd.ys - sd.Xs * cm.beta_ols).squaredNorm();
    cm.sigma2 = rss / static_cast<double>(n - p - 1);
    cm.rms_ols = cm.sigma2;
    cm.resid_se = std::sqrt(cm.sigma2);
    return cm;
}

Eigen::VectorXd destandardize(const Eigen::VectorXd& beta_std,
                              const StandardizedDesign& sd) {
    if (beta_std.size() != sd.x_sds.size())
        throw std::invalid_argument("destandardize: dimension mismatch");
    return (beta_std.array() * sd.y_sd / sd.x_sds.array()).matrix();
}

double intercept_at(const StandardizedDesign& sd,
                    const Eigen::VectorXd& beta_std) {
    Eigen::VectorXd beta_orig = destandardize(beta_std, sd);
    return sd.y_mean - sd.x_means.dot(beta_orig);
}

nlohmann::json canonical_to_json(const CanonicalModel& cm) {
    nlohmann::json j;
    j["eigenvalues"] = std::vector<double>(
        cm.lambda_eig.data(), cm.lambda_eig.data() + cm.lambda_eig.size());
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index i = 0; i < cm.V.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index k = 0; k < cm.V.cols(); ++k) row.push_back(cm.V(i, k));
        rows.push_back(row);
    }
    j["V"] = rows;
    j["c"] = std::vector<double>(cm.c.data(), cm.c.data() + cm.c.size());
    j["sigma2"] = cm.sigma2;
    j["n"] = cm.n;
    j["p"] = cm.p;
    return j;
}

}  // namespace ridgepath
