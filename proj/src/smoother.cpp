#include "ridgepath/smoother.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "ridgepath/threads.hpp"

namespace ridgepath {

namespace {

// Normal equations for one (y, x, basis) triple. After construction a fit at
// any lambda costs one k x k factorization, so the GCV scan never touches
// the n-sized arrays again.
class PenalizedSolver {
public:
    PenalizedSolver(const Eigen::VectorXd& y, const Eigen::VectorXd& x,
                    const SplineBasis& basis)
        : basis_(basis), y_(y) {
        if (y.size() != x.size())
            throw std::invalid_argument("fit_penalized: y and x lengths differ");
        B_ = design_matrix(basis, x);
        M_ = B_.transpose() * B_;
        P_ = difference_penalty(basis);
        Bty_ = B_.transpose() * y;
        yty_ = y.squaredNorm();
    }

    bool penalty_is_zero() const {
        return P_.size() == 0 || P_.cwiseAbs().maxCoeff() == 0.0;
    }

    // trace(B'B) / k, the scale the lambda grid is anchored to
    double eigen_scale() const {
        return M_.trace() / static_cast<double>(basis_.size);
    }

    // GCV(lambda) = n RSS / (n - edf)^2 without forming fitted values
    double gcv_at(double lambda) const {
        Eigen::VectorXd coef;
        double edf = 0;
        factorize(lambda, coef, edf);
        double n = static_cast<double>(y_.size());
        double rss = std::max(0.0, yty_ - 2.0 * coef.dot(Bty_) +
                                       coef.dot(M_ * coef));
        double denom = n - edf;
        if (!(denom > 1e-9 * n)) return std::numeric_limits<double>::infinity();
        return n * rss / (denom * denom);
    }

    SmootherFit solve(double lambda) const {
        SmootherFit fit;
        fit.basis = basis_;
        factorize(lambda, fit.coef, fit.edf);
        fit.lambda = lambda;
        fit.fitted = B_ * fit.coef;
        fit.gcv = gcv_at(lambda);
        return fit;
    }

private:
    void factorize(double lambda, Eigen::VectorXd& coef, double& edf) const {
        if (!(lambda >= 0.0))
            throw std::invalid_argument("fit_penalized: lambda must be >= 0");
        Eigen::MatrixXd A = M_ + lambda * P_;
        Eigen::LDLT<Eigen::MatrixXd> ldlt(A);
        if (ldlt.info() != Eigen::Success)
            throw std::runtime_error("fit_penalized: singular penalized system");
        coef = ldlt.solve(Bty_);
        edf = ldlt.solve(M_).trace();
        if (!coef.allFinite() || !std::isfinite(edf))
            throw std::runtime_error("fit_penalized: singular penalized system");
    }

    SplineBasis basis_;
    Eigen::VectorXd y_;
    Eigen::MatrixXd B_;
    Eigen::MatrixXd M_;   // B'B
    Eigen::MatrixXd P_;
    Eigen::VectorXd Bty_;
    double yty_{0};
};

}  // namespace

SmootherFit fit_penalized(const Eigen::VectorXd& y, const Eigen::VectorXd& x,
                          const SplineBasis& basis, double lambda) {
    return PenalizedSolver(y, x, basis).solve(lambda);
}

SmootherFit gcv_select(const Eigen::VectorXd& y, const Eigen::VectorXd& x,
                       const SplineBasis& basis) {
    PenalizedSolver solver(y, x, basis);

    // Zero penalty (linear fallback): lambda is irrelevant, report 0.
    if (solver.penalty_is_zero()) return solver.solve(0.0);

    const double scale = solver.eigen_scale();
    auto lambda_of = [&](double t) { return scale * std::pow(10.0, t); };

    // 201-point grid over 16 decades of log10(lambda / scale); ties go to
    // the larger lambda, hence <=.
    constexpr int kGrid = 201;
    auto t_of = [](int i) { return -8.0 + 16.0 * i / (kGrid - 1); };
    int best = 0;
    double best_gcv = std::numeric_limits<double>::infinity();
    for (int i = 0; i < kGrid; ++i) {
        double g = solver.gcv_at(lambda_of(t_of(i)));
        if (g <= best_gcv) {
            best_gcv = g;
            best = i;
        }
    }

    // Golden-section refinement between the best point's grid neighbors.
    // Fixed iteration count keeps the result bit-reproducible.
    double a = t_of(std::max(best - 1, 0));
    double b = t_of(std::min(best + 1, kGrid - 1));
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double c1 = b - gr * (b - a);
    double c2 = a + gr * (b - a);
    double f1 = solver.gcv_at(lambda_of(c1));
    double f2 = solver.gcv_at(lambda_of(c2));
    for (int it = 0; it < 48; ++it) {
        if (f1 >= f2) {  // minimum in [c1, b]; ties drift toward larger lambda
            a = c1;
            c1 = c2;
            f1 = f2;
            c2 = a + gr * (b - a);
            f2 = solver.gcv_at(lambda_of(c2));
        } else {
            b = c2;
            c2 = c1;
            f2 = f1;
            c1 = b - gr * (b - a);
            f1 = solver.gcv_at(lambda_of(c1));
        }
    }
    double t_ref = 0.5 * (a + b);
    double g_ref = solver.gcv_at(lambda_of(t_ref));

    double chosen = lambda_of(t_of(best));
    if (g_ref < best_gcv || (g_ref == best_gcv && lambda_of(t_ref) > chosen))
        chosen = lambda_of(t_ref);
    return solver.solve(chosen);
}

double predict_one(const SmootherFit& fit, double x) {
    const SplineBasis& b = fit.basis;
    if (x < b.lo) {
        return spline_value(b, fit.coef, b.lo) +
               (x - b.lo) * spline_deriv(b, fit.coef, b.lo);
    }
    if (x > b.hi) {
        return spline_value(b, fit.coef, b.hi) +
               (x - b.hi) * spline_deriv(b, fit.coef, b.hi);
    }
    return spline_value(b, fit.coef, x);
}

Eigen::VectorXd predict(const SmootherFit& fit, const Eigen::VectorXd& x_new) {
    Eigen::VectorXd out(x_new.size());
    for (Eigen::Index i = 0; i < x_new.size(); ++i)
        out[i] = predict_one(fit, x_new[i]);
    return out;
}

std::vector<SmootherFit> np_fits(const Dataset& d, int k) {
    std::vector<SmootherFit> fits(static_cast<std::size_t>(d.p));
    parallel_for(static_cast<std::size_t>(d.p), [&](std::size_t j) {
        Eigen::VectorXd xj = d.X.col(static_cast<Eigen::Index>(j));
        SplineBasis basis = build_basis(xj, k);
        fits[j] = gcv_select(d.y, xj, basis);
    });
    return fits;
}

Eigen::MatrixXd np_transform(const Dataset& d, int k,
                             std::vector<std::string>* notes) {
    std::vector<SmootherFit> fits = np_fits(d, k);
    Eigen::MatrixXd np(d.n, d.p);
    for (int j = 0; j < d.p; ++j) {
        np.col(j) = fits[static_cast<std::size_t>(j)].fitted;
        const std::string& note = fits[static_cast<std::size_t>(j)].basis.note;
        if (notes != nullptr && !note.empty())
            notes->push_back("x" + std::to_string(j + 1) + " (" + d.x_name(j) +
                             "): " + note);
    }
    return np;
}

nlohmann::json fit_to_json(const SmootherFit& fit) {
    nlohmann::json j;
    j["knots"] = std::vector<double>(
        fit.basis.interior_knots.data(),
        fit.basis.interior_knots.data() + fit.basis.interior_knots.size());
    j["degree"] = fit.basis.degree;
    j["coef"] = std::vector<double>(fit.coef.data(),
                                    fit.coef.data() + fit.coef.size());
    j["lambda"] = fit.lambda;
    j["edf"] = fit.edf;
    j["boundary"] = {fit.basis.lo, fit.basis.hi};
    j["gcv"] = fit.gcv;
    return j;
}

SmootherFit fit_from_json(const nlohmann::json& j) {
    SmootherFit fit;
    std::vector<double> knots = j.at("knots").get<std::vector<double>>();
    std::vector<double> coef = j.at("coef").get<std::vector<double>>();
    std::vector<double> boundary = j.at("boundary").get<std::vector<double>>();
    if (boundary.size() != 2 || !(boundary[0] < boundary[1]))
        throw std::runtime_error("smoother json: bad boundary");
    fit.basis.degree = j.at("degree").get<int>();
    fit.basis.interior_knots =
        Eigen::Map<const Eigen::VectorXd>(knots.data(),
                                          static_cast<Eigen::Index>(knots.size()));
    fit.basis.lo = boundary[0];
    fit.basis.hi = boundary[1];
    fit.basis.size = static_cast<int>(knots.size()) + fit.basis.degree + 1;
    if (static_cast<int>(coef.size()) != fit.basis.size)
        throw std::runtime_error(
            "smoother json: coefficient count does not match basis");
    fit.coef = Eigen::Map<const Eigen::VectorXd>(
        coef.data(), static_cast<Eigen::Index>(coef.size()));
    fit.lambda = j.at("lambda").get<double>();
    fit.edf = j.at("edf").get<double>();
    if (j.contains("gcv") && j.at("gcv").is_number())
        fit.gcv = j.at("gcv").get<double>();
    return fit;
}

}  // namespace ridgepath
