#pragma once

#include "stand/antilinear.hpp"

namespace stand {

/// Real-form subspace of C^n given by a complex matrix whose columns span it
/// over R. Standard means V ∩ iV = {0} and V + iV = C^n; in finite dimension
/// this forces dim_R V = n. The basis is real-orthonormalized on
/// construction.
class StandardSubspace {
public:
    StandardSubspace() = default;

    /// Builds from a spanning set; throws NotStandard unless the columns and
    /// their i-multiples together span C^n over R.
    explicit StandardSubspace(const Matrix& span_columns);

    const Matrix& basis() const { return b_; }
    int dim() const { return static_cast<int>(b_.rows()); }

    /// Real orthogonal projection onto V as a 2n x 2n real matrix.
    RealMatrix real_projection() const;

    /// Apply a (complex linear) matrix to the subspace.
    StandardSubspace linear_image(const Matrix& u) const { return StandardSubspace(u * b_); }

    /// Apply an antilinear map to the subspace.
    StandardSubspace antilinear_image(const AntilinearMap& a) const {
        return StandardSubspace(a.matrix() * b_.conjugate());
    }

    /// Max distance of the columns of m to this subspace.
    double contains_columns_residual(const Matrix& m) const;

private:
    Matrix b_;
};

/// Graded homomorphism R^× -> AU(C^n), encoded by the skew-hermitian
/// generator A with γ(e^t) = exp(tA) and the conjugation γ(-1) = J.
struct GradedHom {
    Matrix a;
    Conjugation j;

    int dim() const { return static_cast<int>(a.rows()); }

    /// Unitary value at r > 0.
    Matrix even_value(double r) const;

    /// Consistency residual of the grading constraint J A J = A.
    double constraint_residual() const {
        return (j.sandwich(a) - a).norm() / (1.0 + a.norm());
    }
};

/// True iff the columns of `span_columns` R-span a standard subspace of C^n.
bool is_standard(const Matrix& span_columns, double tol = 1e-10);

/// Modular objects (Delta_V, J_V) of a standard subspace via the Tomita
/// operator S = B conj(B)^{-1} conj(.).
ModularPair modular_objects(const StandardSubspace& v);

/// The Tomita operator itself (antilinear involution with Fix = V).
AntilinearMap tomita_operator(const StandardSubspace& v);

/// Φ: Mod -> Stand, (Delta, J) -> Fix(J Delta^{1/2}).
StandardSubspace standard_from_modular(const ModularPair& p, double tol = 1e-8);

/// Ψ: Mod -> Hom_gr, with exp(tA) = Delta^{-it/2π}, i.e. A = -(i/2π) log Delta.
GradedHom graded_hom_of(const ModularPair& p);

/// Ψ^{-1}: Delta = exp(2πi A).
ModularPair modular_of(const GradedHom& g);

/// 𝒱 = Φ ∘ Ψ^{-1}.
StandardSubspace standard_from_graded_hom(const GradedHom& g);

/// Symplectic complement V' = i V^{⊥_R}; satisfies V' = J_V V and V'' = V,
/// with modular pair (Delta^{-1}, J).
StandardSubspace symplectic_complement(const StandardSubspace& v);

/// V is Lagrangian iff V = V', equivalently Delta_V = 1.
bool is_lagrangian(const StandardSubspace& v, double tol = 1e-8);

/// Operator-norm distance of the real orthogonal projections.
double subspace_gap(const StandardSubspace& v1, const StandardSubspace& v2);

/// Real fixed space Fix(J) = H^J as n complex columns forming a real
/// orthonormal basis (also a complex basis of C^n).
Matrix conjugation_fixed_basis(const Conjugation& j);

} // namespace stand
