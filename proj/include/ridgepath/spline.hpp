#pragma once

#include <Eigen/Dense>
#include <string>

namespace ridgepath {

// Clamped B-spline basis on the training range of one predictor.
// Interior knots sit at equally spaced quantiles of the distinct x values.
struct SplineBasis {
    Eigen::VectorXd interior_knots;  // strictly increasing, inside (lo, hi)
    int degree{3};
    int size{0};     // number of basis functions: interior_knots + degree + 1
    double lo{0};    // training range
    double hi{0};
    std::string note;  // nonempty when k was reduced or a linear fallback applied

    // Full clamped knot vector: lo repeated degree+1 times, interior knots,
    // hi repeated degree+1 times.
    Eigen::VectorXd knot_vector() const;
};

// Builds the basis for x with (at most) k basis functions, k >= 4.
// Fewer than k distinct values reduces k to the distinct count (minimum 4);
// fewer than 4 distinct values falls back to a degree-1 basis spanning
// exactly the linear functions. Both adjustments are recorded in `note`.
SplineBasis build_basis(const Eigen::VectorXd& x, int k);

// Values of the degree+1 B-splines that do not vanish at x (clamped into
// [lo, hi]); returns the index of the first one.
int basis_nonzero(const SplineBasis& basis, double x, Eigen::VectorXd& values);

// n x size design matrix; each row is a partition of unity.
Eigen::MatrixXd design_matrix(const SplineBasis& basis, const Eigen::VectorXd& x);

// Spline evaluation s(x) = sum_i coef_i B_i(x), and its first derivative.
// x is clamped into [lo, hi]; extrapolation policy lives in the smoother.
double spline_value(const SplineBasis& basis, const Eigen::VectorXd& coef, double x);
double spline_deriv(const SplineBasis& basis, const Eigen::VectorXd& coef, double x);

// Greville abscissae: xi_i = mean of degree consecutive interior-ish knots.
// A linear function a + b*x has B-spline coefficients a + b*xi_i.
Eigen::VectorXd greville_sites(const SplineBasis& basis);

// Second-order divided-difference penalty P = D'D built on the Greville
// sites, so coefficient vectors of constant and linear functions span its
// null space even with unequally spaced knots.
Eigen::MatrixXd difference_penalty(const SplineBasis& basis);

}  // namespace ridgepath
