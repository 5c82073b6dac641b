#pragma once

#include <complex>
#include <functional>

#include <Eigen/Dense>

#include "stand/errors.hpp"

namespace stand {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

constexpr double kEigenvalueFloor = 1e-13;

inline double frobenius(const Matrix& m) { return m.norm(); }

inline double spectral_norm(const Matrix& m) {
    return Eigen::JacobiSVD<Matrix>(m).singularValues().maxCoeff();
}

inline double spectral_norm(const RealMatrix& m) {
    return Eigen::JacobiSVD<RealMatrix>(m).singularValues().maxCoeff();
}

inline bool approx_equal(const Matrix& a, const Matrix& b, double tol) {
    return (a - b).norm() <= tol * (1.0 + std::max(a.norm(), b.norm()));
}

/// Apply a real scalar function to a hermitian matrix through its
/// eigendecomposition. Symmetrizes the input first; callers are expected to
/// pass matrices that are hermitian up to roundoff.
Matrix hermitian_function(const Matrix& h, const std::function<double(double)>& f);

/// Same, for functions with complex values on the spectrum (e.g. x ↦ x^{it}).
Matrix hermitian_function_c(const Matrix& h, const std::function<Complex(double)>& f);

/// Square root of a hermitian positive definite matrix. Throws
/// SingularOperator if an eigenvalue falls below the clamping floor.
Matrix hermitian_sqrt(const Matrix& h);

/// Logarithm of a hermitian positive definite matrix (same clamping rule).
Matrix hermitian_log(const Matrix& h);

/// h^{it} for hermitian positive definite h.
Matrix hermitian_power_it(const Matrix& h, double t);

/// h^{p} for hermitian positive definite h and real p.
Matrix hermitian_power(const Matrix& h, double p);

/// Principal logarithm of a unitary matrix; eigenvalue arguments taken in
/// (-pi, pi]. Result is skew-hermitian.
Matrix unitary_log(const Matrix& u);

/// The real 2n x 2n matrix of the real-linear map z -> m * conj(z).
RealMatrix antilinear_real_form(const Matrix& m);

/// The real 2n x 2n matrix of the complex-linear map z -> m * z.
RealMatrix linear_real_form(const Matrix& m);

/// Split a real 2n-vector (x; y) back into the complex vector x + i y.
Vector complex_from_real(const RealVector& v);
RealVector real_from_complex(const Vector& v);

/// Gram-Schmidt over R for a set of complex vectors (columns). Column count
/// is preserved; throws SingularOperator when the columns are R-dependent.
Matrix real_orthonormalize(const Matrix& basis);

/// Orthonormal basis (columns) of the +1 eigenspace of a symmetric involutive
/// real matrix. `expected_dim` < 0 means "take every eigenvalue near +1".
RealMatrix symmetric_fixed_space(const RealMatrix& s, double tol = 1e-8, int expected_dim = -1);

} // namespace stand
