#pragma once

#include "stand/standard_subspace.hpp"

namespace stand {

/// Element of a concrete graded matrix group inside AU(C^n): a unitary or
/// antiunitary operator together with its grading sign.
struct GradedOperator {
    Matrix m;         // unitary matrix, or the matrix of z -> m conj(z)
    bool antiunitary = false;

    int grading() const { return antiunitary ? -1 : 1; }

    Vector apply(const Vector& v) const { return antiunitary ? m * v.conjugate() : m * v; }

    /// Apply to a standard subspace.
    StandardSubspace apply(const StandardSubspace& v) const {
        return antiunitary ? v.antilinear_image(AntilinearMap(m)) : v.linear_image(m);
    }

    GradedOperator compose(const GradedOperator& other) const {
        if (!antiunitary) return {m * other.m, other.antiunitary};
        return {m * other.m.conjugate(), !other.antiunitary};
    }

    GradedOperator inverse() const {
        // unitary: m^{-1} = m^dagger; antiunitary z -> m conj(z): inverse is
        // z -> conj(m^{-1} z) = transpose(conj(m^{-1}))... kept explicit:
        if (!antiunitary) return {m.adjoint(), false};
        return {m.conjugate().inverse(), true};
    }
};

/// Antiunitary representation of a concretely presented graded matrix group:
/// a homomorphism given on generators by unitary/antiunitary matrices.
/// `lift` maps an abstract group element (here: a GradedOperator of the
/// defining matrix group) to its representing operator.
struct GradedGroupRep {
    int group_dim = 0;                       // n of the defining group
    std::function<GradedOperator(const GradedOperator&)> lift;

    static GradedGroupRep identity_rep(int n) {
        GradedGroupRep rep;
        rep.group_dim = n;
        rep.lift = [](const GradedOperator& g) { return g; };
        return rep;
    }

    /// Doubling g -> diag(g, g) (a faithful non-identity representation).
    static GradedGroupRep doubled_rep(int n) {
        GradedGroupRep rep;
        rep.group_dim = n;
        rep.lift = [n](const GradedOperator& g) {
            Matrix big = Matrix::Zero(2 * n, 2 * n);
            big.topLeftCorner(n, n) = g.m;
            big.bottomRightCorner(n, n) = g.m;
            return GradedOperator{big, g.antiunitary};
        };
        return rep;
    }
};

/// Graded homomorphism R^× -> G for a matrix group G: the generator X with
/// gamma(e^t) = exp(tX) and the involution sigma = gamma(-1) in G_{-1},
/// subject to sigma^2 = 1 and Ad_sigma X = X.
struct GradedHomIntoG {
    Matrix x;                 // skew-hermitian when G ⊆ AU(C^n)
    GradedOperator sigma;     // odd involution

    GradedHomIntoG conjugate(const GradedOperator& g) const {
        Matrix gx;
        if (g.antiunitary) {
            // Ad_g for antiunitary g is conjugate-linear: g X g^{-1} acts by
            // m conj(X) m^{-1}.
            gx = g.m * x.conjugate() * g.m.inverse();
        } else {
            gx = g.m * x * g.m.inverse();
        }
        return {gx, g.compose(sigma).compose(g.inverse())};
    }

    double constraint_residual() const {
        Matrix sx = sigma.m * x.conjugate() * sigma.m.inverse();
        return (sx - x).norm() / (1.0 + x.norm());
    }
};

/// BGL map: gamma -> Fix(J Delta^{1/2}) with Delta = exp(2πi dU(X)) and
/// J = U(gamma(-1)). Throws ModularRelationViolated on inconsistent input.
StandardSubspace bgl_map(const GradedGroupRep& u, const GradedHomIntoG& gamma,
                         double tol = 1e-8);

/// Equivariance gap: distance between bgl_map(U, gamma^g) and
/// U_g . bgl_map(U, gamma).
double bgl_equivariance_gap(const GradedGroupRep& u, const GradedHomIntoG& gamma,
                            const GradedOperator& g);

/// Finite-dimensional S_V membership: U_g V ⊆ V forces equality, so the
/// test is gap(U_g V, V) <= tol. Requires grading +1.
bool semigroup_membership(const GradedGroupRep& u, const GradedOperator& g,
                          const StandardSubspace& v, double tol = 1e-8);

} // namespace stand
