#include "ridgepath/spline.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace ridgepath {

namespace {

// Cox-de Boor: values of the degree+1 B-splines supported on the span of x.
// `t` is the full clamped knot vector, `nbasis` = t.size() - degree - 1.
// Returns the span index s with t[s] <= x < t[s+1], clamped so x == hi maps
// into the last nonempty span.
int deboor_nonzero(const Eigen::VectorXd& t, int degree, int nbasis, double x,
                   Eigen::VectorXd& values) {
    const double lo = t[degree];
    const double hi = t[nbasis];
    x = std::clamp(x, lo, hi);

    int span;
    if (x >= hi) {
        span = nbasis - 1;
        while (span > degree && t[span] >= t[span + 1]) --span;  // skip empty end spans
    } else {
        const double* begin = t.data() + degree;
        const double* end = t.data() + nbasis + 1;
        span = static_cast<int>(std::upper_bound(begin, end, x) - t.data()) - 1;
    }

    values.resize(degree + 1);
    values[0] = 1.0;
    std::vector<double> left(static_cast<size_t>(degree) + 1), right(static_cast<size_t>(degree) + 1);
    for (int j = 1; j <= degree; ++j) {
        left[static_cast<size_t>(j)] = x - t[span + 1 - j];
        right[static_cast<size_t>(j)] = t[span + j] - x;
        double saved = 0.0;
        for (int r = 0; r < j; ++r) {
            const double den = right[static_cast<size_t>(r) + 1] + left[static_cast<size_t>(j - r)];
            const double tmp = (den != 0.0) ? values[r] / den : 0.0;
            values[r] = saved + right[static_cast<size_t>(r) + 1] * tmp;
            saved = left[static_cast<size_t>(j - r)] * tmp;
        }
        values[j] = saved;
    }
    return span - degree;  // index of the first nonzero basis function
}

// Quantile of sorted values at level q in [0, 1], linear interpolation
// between order statistics (position q * (len - 1)).
double quantile_sorted(const std::vector<double>& sorted, double q) {
    const double pos = q * static_cast<double>(sorted.size() - 1);
    const auto i = static_cast<size_t>(pos);
    if (i + 1 >= sorted.size()) return sorted.back();
    const double frac = pos - static_cast<double>(i);
    return sorted[i] + frac * (sorted[i + 1] - sorted[i]);
}

}  // namespace

Eigen::VectorXd SplineBasis::knot_vector() const {
    const int n_int = static_cast<int>(interior_knots.size());
    Eigen::VectorXd t(2 * (degree + 1) + n_int);
    for (int i = 0; i <= degree; ++i) t[i] = lo;
    for (int i = 0; i < n_int; ++i) t[degree + 1 + i] = interior_knots[i];
    for (int i = 0; i <= degree; ++i) t[degree + 1 + n_int + i] = hi;
    return t;
}

SplineBasis build_basis(const Eigen::VectorXd& x, int k) {
    if (k < 4) throw std::invalid_argument("build_basis: k must be at least 4");
    if (x.size() < 2) throw std::invalid_argument("build_basis: need at least 2 observations");

    std::vector<double> distinct(x.data(), x.data() + x.size());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    const int d = static_cast<int>(distinct.size());
    if (d < 2) throw std::invalid_argument("build_basis: x is constant");

    SplineBasis basis;
    basis.lo = distinct.front();
    basis.hi = distinct.back();

    if (d < 4) {
        // Too few levels for a cubic fit: degree-1 basis with no interior
        // knots spans exactly the linear functions on [lo, hi].
        basis.degree = 1;
        basis.size = 2;
        basis.interior_knots.resize(0);
        basis.note = "linear fallback: only " + std::to_string(d) + " distinct values";
        return basis;
    }

    int k_eff = k;
    if (d < k) {
        k_eff = d;
        basis.note = "k reduced from " + std::to_string(k) + " to " + std::to_string(d) +
                     " (distinct values)";
    }

    basis.degree = 3;
    basis.size = k_eff;
    const int n_int = k_eff - basis.degree - 1;
    basis.interior_knots.resize(n_int);
    for (int j = 1; j <= n_int; ++j) {
        basis.interior_knots[j - 1] = quantile_sorted(distinct, static_cast<double>(j) / (n_int + 1));
    }
    return basis;
}

int basis_nonzero(const SplineBasis& basis, double x, Eigen::VectorXd& values) {
    const Eigen::VectorXd t = basis.knot_vector();
    return deboor_nonzero(t, basis.degree, basis.size, x, values);
}

Eigen::MatrixXd design_matrix(const SplineBasis& basis, const Eigen::VectorXd& x) {
    const Eigen::VectorXd t = basis.knot_vector();
    Eigen::MatrixXd B = Eigen::MatrixXd::Zero(x.size(), basis.size);
    Eigen::VectorXd vals;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        const int first = deboor_nonzero(t, basis.degree, basis.size, x[i], vals);
        for (int j = 0; j <= basis.degree; ++j) B(i, first + j) = vals[j];
    }
    return B;
}

double spline_value(const SplineBasis& basis, const Eigen::VectorXd& coef, double x) {
    if (coef.size() != basis.size) throw std::invalid_argument("spline_value: coef size mismatch");
    const Eigen::VectorXd t = basis.knot_vector();
    Eigen::VectorXd vals;
    const int first = deboor_nonzero(t, basis.degree, basis.size, x, vals);
    double s = 0.0;
    for (int j = 0; j <= basis.degree; ++j) s += coef[first + j] * vals[j];
    return s;
}

double spline_deriv(const SplineBasis& basis, const Eigen::VectorXd& coef, double x) {
    if (coef.size() != basis.size) throw std::invalid_argument("spline_deriv: coef size mismatch");
    const int deg = basis.degree;
    const Eigen::VectorXd t = basis.knot_vector();

    // s'(x) is a spline of degree deg-1 on the trimmed knot vector with
    // coefficients deg * (c_{i+1} - c_i) / (t_{i+deg+1} - t_{i+1}).
    const int nd = basis.size - 1;
    Eigen::VectorXd dcoef(nd);
    for (int i = 0; i < nd; ++i) {
        const double den = t[i + deg + 1] - t[i + 1];
        dcoef[i] = (den > 0.0) ? deg * (coef[i + 1] - coef[i]) / den : 0.0;
    }
    const Eigen::VectorXd td = t.segment(1, t.size() - 2);

    Eigen::VectorXd vals;
    const int first = deboor_nonzero(td, deg - 1, nd, x, vals);
    double s = 0.0;
    for (int j = 0; j <= deg - 1; ++j) s += dcoef[first + j] * vals[j];
    return s;
}

Eigen::VectorXd greville_sites(const SplineBasis& basis) {
    const Eigen::VectorXd t = basis.knot_vector();
    Eigen::VectorXd xi(basis.size);
    for (int i = 0; i < basis.size; ++i) {
        double s = 0.0;
        for (int j = 1; j <= basis.degree; ++j) s += t[i + j];
        xi[i] = s / basis.degree;
    }
    return xi;
}

Eigen::MatrixXd difference_penalty(const SplineBasis& basis) {
    const int k = basis.size;
    if (k < 3) return Eigen::MatrixXd::Zero(k, k);  // nothing to penalize
    const Eigen::VectorXd xi = greville_sites(basis);
    Eigen::MatrixXd D = Eigen::MatrixXd::Zero(k - 2, k);
    for (int i = 0; i + 2 < k; ++i) {
        const double h0 = xi[i + 1] - xi[i];
        const double h1 = xi[i + 2] - xi[i + 1];
        const double a = 1.0 / h0;
        const double b = 1.0 / h1;
        D(i, i) = a;
        D(i, i + 1) = -(a + b);
        D(i, i + 2) = b;
    }
    return D.transpose() * D;
}

}  // namespace ridgepath
