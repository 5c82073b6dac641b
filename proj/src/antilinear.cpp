#include "stand/antilinear.hpp"

namespace stand {

double ModularPair::modular_relation_residual() const {
    Matrix lhs = j.sandwich(delta);
    Matrix rhs = hermitian_power(delta, -1.0);
    return (lhs - rhs).norm() / (1.0 + rhs.norm());
}

void ModularPair::require_valid(double tol) const {
    Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (delta + delta.adjoint()));
    if (es.eigenvalues().minCoeff() <= kEigenvalueFloor)
        throw ModularRelationViolated("Delta is not strictly positive");
    if (modular_relation_residual() > tol)
        throw ModularRelationViolated("J Delta J != Delta^{-1}");
}

Vector antilinear_apply(const AntilinearMap& a, const Vector& v) { return a.apply(v); }

AntilinearMap antilinear_adjoint(const AntilinearMap& a) { return a.adjoint(); }

AntilinearPolar polar_decompose_antilinear(const AntilinearMap& s, double tol) {
    const Matrix& m = s.matrix();
    const int n = static_cast<int>(m.rows());

    Eigen::JacobiSVD<Matrix> svd(m);
    if (svd.singularValues().minCoeff() < 1e-12)
        throw SingularOperator("antilinear map is not invertible");

    // Delta = S* S has matrix transpose(m) * conj(m).
    Matrix delta = m.transpose() * m.conjugate();
    Matrix delta_sqrt = hermitian_sqrt(delta);
    Matrix delta_isqrt = hermitian_power(delta, -0.5);

    // J = S o Delta^{-1/2}: antilinear with matrix m * conj(Delta^{-1/2}).
    Matrix mj = m * delta_isqrt.conjugate();

    AntilinearPolar out;
    out.involutive = s.is_involution(tol);
    out.delta = delta;
    out.delta_sqrt = delta_sqrt;
    out.j = AntilinearMap(mj);
    out.reconstruction_residual =
        (mj * delta_sqrt.conjugate() - m).norm() / (1.0 + m.norm());
    return out;
}

} // namespace stand
