#include "stand/bgl.hpp"

#include <unsupported/Eigen/MatrixFunctions>

namespace stand {

StandardSubspace bgl_map(const GradedGroupRep& u, const GradedHomIntoG& gamma, double tol) {
    if (gamma.constraint_residual() > tol)
        throw ModularRelationViolated("gamma is not graded: Ad_sigma X != X");

    // dU(X) from the group image at time one, principal branch.
    const Matrix time_one = gamma.x.exp();
    const GradedOperator lifted = u.lift(GradedOperator{time_one, false});
    if (lifted.antiunitary)
        throw ModularRelationViolated("even one-parameter group lifted to an antiunitary");
    const Matrix xu = unitary_log(lifted.m);

    const GradedOperator j_op = u.lift(gamma.sigma);
    if (!j_op.antiunitary)
        throw ModularRelationViolated("gamma(-1) lifted to a unitary operator");

    const Matrix delta =
        hermitian_function(Complex(0.0, 2.0 * M_PI) * xu, [](double v) { return std::exp(v); });
    ModularPair pair{delta, Conjugation(j_op.m, tol)};
    pair.require_valid(tol);
    return standard_from_modular(pair);
}

double bgl_equivariance_gap(const GradedGroupRep& u, const GradedHomIntoG& gamma,
                            const GradedOperator& g) {
    const StandardSubspace lhs = bgl_map(u, gamma.conjugate(g));
    const StandardSubspace rhs = u.lift(g).apply(bgl_map(u, gamma));
    return subspace_gap(lhs, rhs);
}

bool semigroup_membership(const GradedGroupRep& u, const GradedOperator& g,
                          const StandardSubspace& v, double tol) {
    if (g.grading() != 1) return false;
    return subspace_gap(u.lift(g).apply(v), v) <= tol;
}

} // namespace stand
