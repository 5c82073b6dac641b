#pragma once

#include "stand/linalg.hpp"

namespace stand {

/// Antilinear operator on C^n, stored as the complex matrix m with fixed
/// action convention z -> m * conj(z). All identities below (adjoint =
/// transpose, composition rule) are stated in this convention.
class AntilinearMap {
public:
    AntilinearMap() = default;
    explicit AntilinearMap(Matrix m) : m_(std::move(m)) {}

    static AntilinearMap entrywise_conjugation(int n) {
        return AntilinearMap(Matrix::Identity(n, n));
    }

    const Matrix& matrix() const { return m_; }
    int dim() const { return static_cast<int>(m_.rows()); }

    Vector apply(const Vector& v) const {
        if (v.size() != m_.cols()) throw DimensionMismatch("antilinear_apply: size mismatch");
        return m_ * v.conjugate();
    }

    /// Antilinear adjoint, defined by <A* x, y> = conj(<x, A y>).
    AntilinearMap adjoint() const { return AntilinearMap(m_.transpose()); }

    /// Composition with another antilinear map gives the linear map
    /// z -> m1 * conj(m2) * z.
    Matrix compose_antilinear(const AntilinearMap& other) const {
        return m_ * other.m_.conjugate();
    }

    /// A after the linear map u (first u, then A).
    AntilinearMap after_linear(const Matrix& u) const {
        return AntilinearMap(m_ * u.conjugate());
    }

    /// The linear map u after A (first A, then u).
    AntilinearMap before_linear(const Matrix& u) const { return AntilinearMap(u * m_); }

    /// Conjugation of a linear operator x: the linear map A x A^{-1} for
    /// involutive A, computed as m * conj(x) * conj(m).
    Matrix sandwich(const Matrix& x) const { return m_ * x.conjugate() * m_.conjugate(); }

    bool is_involution(double tol = 1e-10) const {
        return (m_ * m_.conjugate() - Matrix::Identity(m_.rows(), m_.cols())).norm() <= tol;
    }

    bool is_antiunitary(double tol = 1e-10) const {
        return (m_.adjoint() * m_ - Matrix::Identity(m_.rows(), m_.cols())).norm() <= tol;
    }

    /// Real 2n x 2n matrix of the map, viewing C^n as R^{2n}.
    RealMatrix real_form() const { return antilinear_real_form(m_); }

private:
    Matrix m_;
};

/// Antiunitary involution. Matrix is unitary with m * conj(m) = 1.
class Conjugation : public AntilinearMap {
public:
    Conjugation() = default;
    explicit Conjugation(Matrix m, double tol = 1e-9) : AntilinearMap(std::move(m)) {
        if (!is_antiunitary(tol) || !is_involution(tol))
            throw ModularRelationViolated("matrix does not define a conjugation");
    }

    static Conjugation entrywise(int n) { return Conjugation(Matrix::Identity(n, n)); }
};

/// Pair (Delta, J) with J Delta J = Delta^{-1} and Delta hermitian positive
/// definite.
struct ModularPair {
    Matrix delta;
    Conjugation j;

    int dim() const { return static_cast<int>(delta.rows()); }

    /// Residual of the modular relation J Delta J - Delta^{-1}.
    double modular_relation_residual() const;
    void require_valid(double tol = 1e-8) const;

    Matrix delta_sqrt() const { return hermitian_sqrt(delta); }
    Matrix delta_power_it(double t) const { return hermitian_power_it(delta, t); }

    /// The antilinear map J Delta^{1/2} (the Tomita operator of Fix).
    AntilinearMap tomita() const { return AntilinearMap(j.matrix() * delta_sqrt().conjugate()); }
};

/// Result of polar-decomposing an antilinear map S into J Delta^{1/2}.
/// When S is involutive, `pair()` yields a valid ModularPair; otherwise the
/// antiunitary polar part J is still returned but is not a conjugation.
struct AntilinearPolar {
    Matrix delta;
    Matrix delta_sqrt;
    AntilinearMap j;
    bool involutive = true;       // flagged false when S^2 != id (not fatal)
    double reconstruction_residual = 0.0;

    ModularPair pair(double tol = 1e-9) const {
        if (!involutive)
            throw ModularRelationViolated("polar part of a non-involutive map is not a conjugation");
        return ModularPair{delta, Conjugation(j.matrix(), tol)};
    }
};

Vector antilinear_apply(const AntilinearMap& a, const Vector& v);
AntilinearMap antilinear_adjoint(const AntilinearMap& a);

/// Polar decomposition S = J Delta^{1/2} with Delta = S* S. Throws
/// SingularOperator when S is not invertible; flags (without throwing) the
/// case S^2 != id, where the modular relation is not guaranteed.
AntilinearPolar polar_decompose_antilinear(const AntilinearMap& s, double tol = 1e-9);

} // namespace stand
