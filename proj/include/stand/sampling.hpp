#pragma once

#include "stand/standard_subspace.hpp"

namespace stand {

/// Random conjugation: J z = U U^T conj(z) for Haar-ish unitary U (any
/// symmetric unitary matrix defines a conjugation).
inline Conjugation random_conjugation(Rng& rng, int n) {
    Matrix u = rng.unitary(n);
    return Conjugation(u * u.transpose());
}

/// Random modular pair over a given conjugation: Delta = exp(-iA) for
/// A = F K F^† with K real skew on the J-fixed basis F.
inline ModularPair random_modular_pair(Rng& rng, const Conjugation& j, double scale = 1.0) {
    const int n = j.dim();
    RealMatrix k = rng.real_matrix(n, n, -scale, scale);
    k = 0.5 * (k - k.transpose());
    const Matrix f = conjugation_fixed_basis(j);
    const Matrix a = f * k.cast<Complex>() * f.adjoint();
    const Matrix delta =
        hermitian_function(Complex(0.0, -1.0) * a, [](double x) { return std::exp(x); });
    return ModularPair{delta, j};
}

inline ModularPair random_modular_pair(Rng& rng, int n, double scale = 1.0) {
    return random_modular_pair(rng, random_conjugation(rng, n), scale);
}

/// Random standard subspace from a bounded complex basis matrix; rejects
/// badly conditioned draws so downstream modular objects stay accurate.
inline StandardSubspace random_standard_subspace(Rng& rng, int n) {
    for (;;) {
        Matrix b = rng.complex_matrix(n, n);
        if (is_standard(b, 0.05)) return StandardSubspace(b);
    }
}

inline GradedHom random_graded_hom(Rng& rng, int n, double scale = 1.0) {
    return graded_hom_of(random_modular_pair(rng, n, scale));
}

/// Random hermitian H fixed by the conjugation sandwich (J H J = H), which
/// is exactly the inversion constraint J exp(itH) J = exp(-itH) on the
/// generated one-parameter group.
inline Matrix random_j_real_hermitian(Rng& rng, const Conjugation& j, double scale = 1.0) {
    const int n = j.dim();
    Matrix y = rng.complex_matrix(n, n, -scale, scale);
    Matrix h = 0.5 * (y + y.adjoint());
    return 0.5 * (h + j.sandwich(h));
}

} // namespace stand
