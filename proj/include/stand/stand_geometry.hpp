#pragma once

#include <cmath>
#include <vector>

#include "stand/rng.hpp"
#include "stand/standard_subspace.hpp"

namespace stand {

/// Dilation-space product on Stand(C^n):
///   r = -1:  J_{V1} J_{V2} V2
///   r = e^t: Delta_{V1}^{-it/2π} V2
/// The result is re-orthonormalized and standardness re-asserted.
StandardSubspace stand_bullet(const StandardSubspace& v1, double r, const StandardSubspace& v2);

/// Same product on Mod(C^n), per the case table
///   r = -1:  (J1 Delta2^{-1} J1, J1 J2 J1)
///   r = e^t: conjugation of (Delta2, J2) by Delta1^{-it/2π}.
ModularPair mod_bullet(const ModularPair& p1, double r, const ModularPair& p2);

/// Same product on Hom_gr(R^×, AU(C^n)): conjugation by gamma1(r).
GradedHom hom_bullet(const GradedHom& g1, double r, const GradedHom& g2);

/// The alternative symmetric-space product on U(n)-translates of R^n:
/// sharp(g, h) = g conj(g)^{-1} conj(h) R^n. Distinct from stand_bullet.
StandardSubspace sharp(const Matrix& g, const Matrix& h);

/// Loos normal form of the fiber Stand_J: A = i log(Delta_V) satisfies
/// J A J = A and restricts to a real skew-symmetric matrix in the J-fixed
/// orthonormal basis returned by conjugation_fixed_basis.
RealMatrix loos_generator(const StandardSubspace& v, double tol = 1e-8);

/// Inverse direction: Delta = exp(-i A) for A = F a_real F^† with F the
/// J-fixed basis; returns Fix(J Delta^{1/2}). Throws NotSkew unless a_real
/// is skew-symmetric.
StandardSubspace loos_standard(const Conjugation& j, const RealMatrix& a_real, double tol = 1e-9);

/// Geodesic gamma(t) = exp(i(t/2)H) V subject to the inversion constraint
/// J_V U_t J_V = U_{-t}.
class StandGeodesic {
public:
    StandGeodesic(StandardSubspace base, Matrix h, double tol = 1e-8);

    const StandardSubspace& base() const { return base_; }
    const Matrix& generator() const { return h_; }

    /// U_t = exp(itH).
    Matrix unitary(double t) const;

    StandardSubspace at(double t) const { return base_.linear_image(unitary(t / 2.0)); }

    /// Residual of the constraint on a sample grid of t values.
    double inversion_residual(const std::vector<double>& ts) const;

private:
    StandardSubspace base_;
    Matrix h_;
};

StandGeodesic geodesic_standard(const StandardSubspace& v, const Matrix& h, double tol = 1e-8);

/// Element (b, eps e^s) of G_alpha = R ⋊ R^×; eps = -1 marks the odd part.
struct AffElement {
    double b = 0.0;
    double s = 0.0;
    bool odd = false;
};

inline AffElement aff_mul(double alpha, const AffElement& g1, const AffElement& g2) {
    const double sign = g1.odd ? -1.0 : 1.0;
    return {g1.b + sign * std::exp(alpha * g1.s) * g2.b, g1.s + g2.s,
            g1.odd != g2.odd};
}

inline AffElement aff_identity() { return {}; }

/// Operator system carrying a dilation-invariant geodesic: translations U_b,
/// dilations W_s = Delta_V^{-is/2π}, the conjugation J_V, and the
/// self-adjoint generator of U. Implementations: MatrixDilationSystem below
/// and the log-frequency grid model in affine_flow.hpp.
template <class S>
concept DilationSystem = requires(const S sys, const typename S::Vec& v, double t, Rng& rng) {
    { sys.translate(t, v) } -> std::convertible_to<typename S::Vec>;
    { sys.dilate(t, v) } -> std::convertible_to<typename S::Vec>;
    { sys.conjugate(v) } -> std::convertible_to<typename S::Vec>;
    { sys.generator(v) } -> std::convertible_to<typename S::Vec>;
    { sys.random_vector(rng) } -> std::convertible_to<typename S::Vec>;
    { sys.dist(v, v) } -> std::convertible_to<double>;
    { sys.inner(v, v) } -> std::convertible_to<Complex>;
};

/// Antiunitary representation of G_alpha built from a dilation-invariant
/// geodesic: U_{(b, e^s)} = U_b W_s and U_{(0,-1)} = J_V.
template <DilationSystem S>
struct GAlphaRep {
    const S* sys = nullptr;
    double alpha = 0.0;

    typename S::Vec apply(const AffElement& g, const typename S::Vec& v) const {
        typename S::Vec out = v;
        if (g.odd) out = sys->conjugate(out);
        out = sys->dilate(g.s, out);
        return sys->translate(g.b, out);
    }

    /// Max homomorphism residual over sampled pairs of group elements.
    double homomorphism_residual(Rng& rng, int n_pairs) const {
        double worst = 0.0;
        for (int k = 0; k < n_pairs; ++k) {
            AffElement g1{rng.uniform(-1.0, 1.0), rng.uniform(-0.7, 0.7), rng.coin()};
            AffElement g2{rng.uniform(-1.0, 1.0), rng.uniform(-0.7, 0.7), rng.coin()};
            auto v = sys->random_vector(rng);
            auto lhs = apply(g1, apply(g2, v));
            auto rhs = apply(aff_mul(alpha, g1, g2), v);
            worst = std::max(worst, sys->dist(lhs, rhs));
        }
        return worst;
    }
};

/// Fit alpha from the commutation W_s U_t W_{-s} = U_{e^{alpha s} t}, i.e.
/// W_s H W_{-s} = e^{alpha s} H on the generator, by least squares over a
/// grid of s values; throws NotDilationInvariant (with the fitted alpha)
/// when the relation fails at tol.
template <DilationSystem S>
GAlphaRep<S> dilation_rep_from_geodesic(const S& sys, double tol, Rng& rng) {
    const std::vector<double> grid = {-0.6, -0.3, 0.3, 0.6};
    auto v = sys.random_vector(rng);
    auto hv = sys.generator(v);
    const Complex ref = sys.inner(hv, hv);
    if (std::abs(ref) < 1e-14) throw NotDilationInvariant("trivial generator", 0.0);

    double num = 0.0, den = 0.0;
    for (double s : grid) {
        auto conj_hv = sys.dilate(s, sys.generator(sys.dilate(-s, v)));
        const Complex ratio = sys.inner(conj_hv, hv) / ref;
        if (ratio.real() <= 0.0)
            throw NotDilationInvariant("generator conjugation is not a positive scaling", 0.0);
        num += s * std::log(ratio.real());
        den += s * s;
    }
    const double alpha = num / den;

    for (double s : grid) {
        auto lhs = sys.dilate(s, sys.generator(sys.dilate(-s, v)));
        auto rhs = hv;
        rhs *= std::exp(alpha * s);
        if (sys.dist(lhs, rhs) > tol)
            throw NotDilationInvariant("W_s H W_{-s} != e^{alpha s} H", alpha);
    }
    return GAlphaRep<S>{&sys, alpha};
}

/// Finite-dimensional dilation system attached to a StandGeodesic: all
/// operators are matrices on C^n.
class MatrixDilationSystem {
public:
    using Vec = Vector;

    MatrixDilationSystem(const StandGeodesic& geo)
        : h_(geo.generator()), pair_(modular_objects(geo.base())) {}

    Vec translate(double b, const Vec& v) const {
        return hermitian_function_c(h_, [b](double x) { return std::exp(Complex(0.0, b * x)); }) * v;
    }

    Vec dilate(double s, const Vec& v) const {
        return pair_.delta_power_it(-s / (2.0 * M_PI)) * v;
    }

    Vec conjugate(const Vec& v) const { return pair_.j.apply(v); }

    Vec generator(const Vec& v) const { return h_ * v; }

    Vec random_vector(Rng& rng) const { return rng.complex_vector(static_cast<int>(h_.rows())); }

    double dist(const Vec& a, const Vec& b) const {
        return (a - b).norm() / (1.0 + std::max(a.norm(), b.norm()));
    }

    Complex inner(const Vec& a, const Vec& b) const { return (b.adjoint() * a)(0); }

private:
    Matrix h_;
    ModularPair pair_;
};

} // namespace stand
