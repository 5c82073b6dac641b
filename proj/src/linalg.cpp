#include "stand/linalg.hpp"

#include <cmath>

namespace stand {

namespace {

Eigen::SelfAdjointEigenSolver<Matrix> hermitian_eigensolve(const Matrix& h) {
    Matrix sym = 0.5 * (h + h.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> es(sym);
    if (es.info() != Eigen::Success) throw SingularOperator("hermitian eigensolve failed");
    return es;
}

void require_positive(const Eigen::VectorXd& evals) {
    if (evals.minCoeff() <= kEigenvalueFloor)
        throw SingularOperator("matrix is not strictly positive: eigenvalue " +
                               std::to_string(evals.minCoeff()) + " below clamping floor");
}

} // namespace

Matrix hermitian_function(const Matrix& h, const std::function<double(double)>& f) {
    auto es = hermitian_eigensolve(h);
    Eigen::VectorXd d = es.eigenvalues();
    for (int i = 0; i < d.size(); ++i) d(i) = f(d(i));
    return es.eigenvectors() * d.asDiagonal() * es.eigenvectors().adjoint();
}

Matrix hermitian_function_c(const Matrix& h, const std::function<Complex(double)>& f) {
    auto es = hermitian_eigensolve(h);
    Vector d(es.eigenvalues().size());
    for (int i = 0; i < d.size(); ++i) d(i) = f(es.eigenvalues()(i));
    return es.eigenvectors() * d.asDiagonal() * es.eigenvectors().adjoint();
}

Matrix hermitian_sqrt(const Matrix& h) {
    auto es = hermitian_eigensolve(h);
    require_positive(es.eigenvalues());
    Eigen::VectorXd d = es.eigenvalues().cwiseSqrt();
    return es.eigenvectors() * d.asDiagonal() * es.eigenvectors().adjoint();
}

Matrix hermitian_log(const Matrix& h) {
    auto es = hermitian_eigensolve(h);
    require_positive(es.eigenvalues());
    Eigen::VectorXd d = es.eigenvalues().array().log();
    return es.eigenvectors() * d.asDiagonal() * es.eigenvectors().adjoint();
}

Matrix hermitian_power_it(const Matrix& h, double t) {
    auto es = hermitian_eigensolve(h);
    require_positive(es.eigenvalues());
    Vector d(es.eigenvalues().size());
    for (int i = 0; i < d.size(); ++i)
        d(i) = std::exp(Complex(0.0, t * std::log(es.eigenvalues()(i))));
    return es.eigenvectors() * d.asDiagonal() * es.eigenvectors().adjoint();
}

Matrix hermitian_power(const Matrix& h, double p) {
    auto es = hermitian_eigensolve(h);
    require_positive(es.eigenvalues());
    Eigen::VectorXd d = es.eigenvalues().array().pow(p);
    return es.eigenvectors() * d.asDiagonal() * es.eigenvectors().adjoint();
}

Matrix unitary_log(const Matrix& u) {
    // A unitary matrix is normal, so a complex Schur form is diagonal.
    Eigen::ComplexSchur<Matrix> schur(u);
    if (schur.info() != Eigen::Success) throw SingularOperator("schur decomposition failed");
    const Matrix& q = schur.matrixU();
    Vector d(u.rows());
    for (int i = 0; i < u.rows(); ++i) {
        Complex lambda = schur.matrixT()(i, i);
        d(i) = Complex(0.0, std::atan2(lambda.imag(), lambda.real()));
    }
    return q * d.asDiagonal() * q.adjoint();
}

RealMatrix antilinear_real_form(const Matrix& m) {
    const int n = static_cast<int>(m.rows());
    RealMatrix r(2 * n, 2 * n);
    r.topLeftCorner(n, n) = m.real();
    r.topRightCorner(n, n) = m.imag();
    r.bottomLeftCorner(n, n) = m.imag();
    r.bottomRightCorner(n, n) = -m.real();
    return r;
}

RealMatrix linear_real_form(const Matrix& m) {
    const int n = static_cast<int>(m.rows());
    RealMatrix r(2 * n, 2 * n);
    r.topLeftCorner(n, n) = m.real();
    r.topRightCorner(n, n) = -m.imag();
    r.bottomLeftCorner(n, n) = m.imag();
    r.bottomRightCorner(n, n) = m.real();
    return r;
}

Vector complex_from_real(const RealVector& v) {
    const int n = static_cast<int>(v.size()) / 2;
    Vector z(n);
    for (int i = 0; i < n; ++i) z(i) = Complex(v(i), v(n + i));
    return z;
}

RealVector real_from_complex(const Vector& v) {
    const int n = static_cast<int>(v.size());
    RealVector r(2 * n);
    r.head(n) = v.real();
    r.tail(n) = v.imag();
    return r;
}

Matrix real_orthonormalize(const Matrix& basis) {
    const int n = static_cast<int>(basis.rows());
    const int k = static_cast<int>(basis.cols());
    Matrix out(n, k);
    for (int j = 0; j < k; ++j) {
        Vector v = basis.col(j);
        for (int i = 0; i < j; ++i) {
            // real inner product Re<u, v>
            double c = (out.col(i).adjoint() * v)(0).real();
            v -= c * out.col(i);
        }
        double nrm = v.norm();
        if (nrm < 1e-12) throw SingularOperator("basis columns are R-dependent");
        out.col(j) = v / nrm;
    }
    return out;
}

RealMatrix symmetric_fixed_space(const RealMatrix& s, double tol, int expected_dim) {
    Eigen::SelfAdjointEigenSolver<RealMatrix> es(0.5 * (s + s.transpose()));
    if (es.info() != Eigen::Success) throw SingularOperator("symmetric eigensolve failed");
    std::vector<int> idx;
    for (int i = 0; i < es.eigenvalues().size(); ++i)
        if (std::abs(es.eigenvalues()(i) - 1.0) < tol) idx.push_back(i);
    if (expected_dim >= 0 && static_cast<int>(idx.size()) != expected_dim)
        throw SingularOperator("fixed space has dimension " + std::to_string(idx.size()) +
                               ", expected " + std::to_string(expected_dim));
    RealMatrix out(s.rows(), static_cast<int>(idx.size()));
    for (std::size_t j = 0; j < idx.size(); ++j) out.col(static_cast<int>(j)) = es.eigenvectors().col(idx[j]);
    return out;
}

} // namespace stand
