#pragma once

#include <string>

#include "stand/errors.hpp"
#include "stand/linalg.hpp"
#include "stand/rng.hpp"

namespace stand {

enum class JordanKind { SymReal, HermComplex, Spin };

/// Descriptor of a euclidean Jordan algebra: Sym_n(R) or Herm_n(C) with
/// x.y = (xy + yx)/2, or the spin factor Λ_n = R x R^{n-1} with
/// (t,v)(t',v') = (tt' + <v,v'>, tv' + t'v).
class JordanAlgebra {
public:
    JordanAlgebra(JordanKind kind, int n) : kind_(kind), n_(n) {}

    JordanKind kind() const { return kind_; }
    int parameter() const { return n_; }

    /// Real dimension of the underlying vector space E.
    int dim() const {
        switch (kind_) {
            case JordanKind::SymReal: return n_ * (n_ + 1) / 2;
            case JordanKind::HermComplex: return n_ * n_;
            case JordanKind::Spin: return n_;
        }
        return 0;
    }

    std::string name() const {
        switch (kind_) {
            case JordanKind::SymReal: return "sym(" + std::to_string(n_) + ")";
            case JordanKind::HermComplex: return "herm(" + std::to_string(n_) + ")";
            case JordanKind::Spin: return "spin(" + std::to_string(n_) + ")";
        }
        return "?";
    }

    bool operator==(const JordanAlgebra&) const = default;

private:
    JordanKind kind_;
    int n_;
};

/// Element of a euclidean Jordan algebra. Matrix kinds store the (symmetric
/// or hermitian) matrix; spin factors store (t, v) as a real vector with
/// t = data(0).
class JordanElement {
public:
    JordanElement() : algebra_(JordanKind::Spin, 1) {}
    JordanElement(JordanAlgebra alg, Matrix m) : algebra_(alg), m_(std::move(m)) {}
    JordanElement(JordanAlgebra alg, RealVector s) : algebra_(alg), s_(std::move(s)) {}

    const JordanAlgebra& algebra() const { return algebra_; }
    const Matrix& matrix() const { return m_; }
    const RealVector& spin_data() const { return s_; }

    bool is_spin() const { return algebra_.kind() == JordanKind::Spin; }

    double norm() const { return is_spin() ? s_.norm() : m_.norm(); }

    JordanElement operator+(const JordanElement& o) const {
        return is_spin() ? JordanElement(algebra_, RealVector(s_ + o.s_))
                         : JordanElement(algebra_, Matrix(m_ + o.m_));
    }
    JordanElement operator-(const JordanElement& o) const {
        return is_spin() ? JordanElement(algebra_, RealVector(s_ - o.s_))
                         : JordanElement(algebra_, Matrix(m_ - o.m_));
    }
    JordanElement operator*(double c) const {
        return is_spin() ? JordanElement(algebra_, RealVector(c * s_))
                         : JordanElement(algebra_, Matrix(c * m_));
    }
    JordanElement operator-() const { return (*this) * -1.0; }

private:
    JordanAlgebra algebra_;
    Matrix m_;      // matrix kinds
    RealVector s_;  // spin kind
};

inline JordanElement operator*(double c, const JordanElement& x) { return x * c; }

JordanElement jordan_unit(const JordanAlgebra& alg);
JordanElement jordan_zero(const JordanAlgebra& alg);

/// Fixed orthogonal coordinate basis of E (used for operator matrices).
RealVector jordan_coords(const JordanElement& x);
JordanElement jordan_from_coords(const JordanAlgebra& alg, const RealVector& c);

/// The Jordan product.
JordanElement jmul(const JordanElement& x, const JordanElement& y);

/// Left multiplication L(x) as a dim x dim matrix on coordinates.
RealMatrix lop(const JordanElement& x);

/// Trace form (x, y) -> tr L(xy).
double trace_form(const JordanElement& x, const JordanElement& y);

/// Positive definiteness of the trace form: Gram matrix on the coordinate
/// basis plus sampled values trace_form(x, x) > 0.
bool is_euclidean(const JordanAlgebra& alg, int samples = 64, std::uint64_t seed = 1);

/// Smallest eigenvalue of the trace-form Gram matrix on the coordinate basis.
double trace_form_min_eigenvalue(const JordanAlgebra& alg);

/// P(x, y) = L(x)L(y) + L(y)L(x) - L(xy); P(x) = P(x, x).
RealMatrix quad_P(const JordanElement& x, const JordanElement& y);
RealMatrix quad_P(const JordanElement& x);

/// Jordan inverse; throws SingularElement when the spectrum touches zero.
JordanElement jordan_inverse(const JordanElement& x);

/// Eigenvalues (matrix kinds) or {t + |v|, t - |v|} (spin), ascending.
RealVector spectrum(const JordanElement& x);

bool in_open_cone(const JordanElement& x);
bool in_closed_cone(const JordanElement& x, double tol = 0.0);

double jordan_distance(const JordanElement& a, const JordanElement& b);

/// Complexified element x + i y with the bilinearly extended product.
struct ComplexifiedElement {
    JordanElement re;
    JordanElement im;
};

ComplexifiedElement complexify(const JordanElement& x);
ComplexifiedElement cmul(const ComplexifiedElement& a, const ComplexifiedElement& b);
ComplexifiedElement cinv(const ComplexifiedElement& a);

/// Cayley transform p(z) = (z - ie)(z + ie)^{-1}; maps ie to 0.
ComplexifiedElement cayley(const ComplexifiedElement& z);

/// Samplers (all seeded through Rng).
JordanElement random_element(const JordanAlgebra& alg, Rng& rng, double scale = 1.0);
JordanElement random_invertible(const JordanAlgebra& alg, Rng& rng);

/// Cone point with prescribed spectral radius; near_boundary forces a
/// smallest eigenvalue of gap * radius.
JordanElement random_cone_element(const JordanAlgebra& alg, Rng& rng, double radius,
                                  bool near_boundary = false, double gap = 1e-4);

/// Random element of Aut(E_+) as a coordinate matrix: a product of a Jordan
/// automorphism, a quadratic representation P(y) with y interior, and a
/// positive scalar.
RealMatrix random_cone_automorphism(const JordanAlgebra& alg, Rng& rng);

/// Coordinate matrix of the quadratic representation of an invertible y.
RealMatrix quad_rep_matrix(const JordanElement& y);

} // namespace stand
