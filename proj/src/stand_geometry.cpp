#include "stand/stand_geometry.hpp"

namespace stand {

StandardSubspace stand_bullet(const StandardSubspace& v1, double r, const StandardSubspace& v2) {
    if (r == 0.0) throw Error("bullet parameter must be nonzero");
    if (r < 0.0) {
        if (r != -1.0) {
            // r = -e^t factors through r = -1 and r = e^t.
            return stand_bullet(v1, -1.0, stand_bullet(v1, -r, v2));
        }
        const Conjugation j1 = modular_objects(v1).j;
        const Conjugation j2 = modular_objects(v2).j;
        return v2.linear_image(j1.compose_antilinear(j2));
    }
    const double t = std::log(r);
    const Matrix w = hermitian_power_it(modular_objects(v1).delta, -t / (2.0 * M_PI));
    return v2.linear_image(w);
}

ModularPair mod_bullet(const ModularPair& p1, double r, const ModularPair& p2) {
    p1.require_valid();
    p2.require_valid();
    if (r == 0.0) throw Error("bullet parameter must be nonzero");
    if (r < 0.0) {
        if (r != -1.0) return mod_bullet(p1, -1.0, mod_bullet(p1, -r, p2));
        const Matrix delta = p1.j.sandwich(hermitian_power(p2.delta, -1.0));
        const Matrix mj = p1.j.matrix() * p2.j.matrix().conjugate() * p1.j.matrix();
        return ModularPair{delta, Conjugation(mj)};
    }
    const double t = std::log(r);
    const Matrix w = p1.delta_power_it(-t / (2.0 * M_PI));
    const Matrix delta = w * p2.delta * w.adjoint();
    const Matrix mj = w * p2.j.matrix() * w.transpose();
    return ModularPair{delta, Conjugation(mj)};
}

GradedHom hom_bullet(const GradedHom& g1, double r, const GradedHom& g2) {
    if (r == 0.0) throw Error("bullet parameter must be nonzero");
    if (r < 0.0) {
        if (r != -1.0) return hom_bullet(g1, -1.0, hom_bullet(g1, -r, g2));
        const Matrix a = g1.j.sandwich(g2.a);
        const Matrix mj = g1.j.matrix() * g2.j.matrix().conjugate() * g1.j.matrix();
        return GradedHom{a, Conjugation(mj)};
    }
    const Matrix u = g1.even_value(r);
    return GradedHom{u * g2.a * u.adjoint(), Conjugation(u * g2.j.matrix() * u.transpose())};
}

StandardSubspace sharp(const Matrix& g, const Matrix& h) {
    return StandardSubspace(g * g.conjugate().inverse() * h.conjugate());
}

RealMatrix loos_generator(const StandardSubspace& v, double tol) {
    const ModularPair p = modular_objects(v);
    const Matrix a = Complex(0.0, 1.0) * hermitian_log(p.delta);
    if ((p.j.sandwich(a) - a).norm() > tol * (1.0 + a.norm()))
        throw ModularRelationViolated("J A J != A for A = i log Delta");
    const Matrix f = conjugation_fixed_basis(p.j);
    Matrix a_real = f.adjoint() * a * f;
    if (a_real.imag().norm() > tol * (1.0 + a_real.norm()) ||
        (a_real.real() + a_real.real().transpose()).norm() > tol * (1.0 + a_real.norm()))
        throw NotSkew("generator is not real skew in the J-fixed basis");
    return a_real.real();
}

StandardSubspace loos_standard(const Conjugation& j, const RealMatrix& a_real, double tol) {
    if ((a_real + a_real.transpose()).norm() > tol * (1.0 + a_real.norm()))
        throw NotSkew("a_real is not skew-symmetric");
    const Matrix f = conjugation_fixed_basis(j);
    const Matrix a = f * a_real.cast<Complex>() * f.adjoint();
    // Delta = exp(-iA) with -iA hermitian.
    const Matrix delta = hermitian_function(Complex(0.0, -1.0) * a,
                                            [](double x) { return std::exp(x); });
    return standard_from_modular(ModularPair{delta, j});
}

StandGeodesic::StandGeodesic(StandardSubspace base, Matrix h, double tol)
    : base_(std::move(base)), h_(std::move(h)) {
    const double res = inversion_residual({0.3, 1.0, 2.0});
    if (res > tol)
        throw InvertibilityConstraintViolated("J_V U_t J_V != U_{-t}: residual " +
                                              std::to_string(res));
}

Matrix StandGeodesic::unitary(double t) const {
    return hermitian_function_c(h_, [t](double x) { return std::exp(Complex(0.0, t * x)); });
}

double StandGeodesic::inversion_residual(const std::vector<double>& ts) const {
    const Conjugation j = modular_objects(base_).j;
    double worst = 0.0;
    for (double t : ts) {
        const Matrix lhs = j.sandwich(unitary(t));
        const Matrix rhs = unitary(-t);
        worst = std::max(worst, (lhs - rhs).norm() / (1.0 + rhs.norm()));
    }
    return worst;
}

StandGeodesic geodesic_standard(const StandardSubspace& v, const Matrix& h, double tol) {
    return StandGeodesic(v, h, tol);
}

} // namespace stand
