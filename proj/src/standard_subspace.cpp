#include "stand/standard_subspace.hpp"

#include <cmath>

namespace stand {

namespace {

/// 2n x k real matrix whose columns are the real forms of the given complex
/// columns.
RealMatrix real_columns(const Matrix& b) {
    const int n = static_cast<int>(b.rows());
    const int k = static_cast<int>(b.cols());
    RealMatrix r(2 * n, k);
    r.topRows(n) = b.real();
    r.bottomRows(n) = b.imag();
    return r;
}

} // namespace

bool is_standard(const Matrix& span_columns, double tol) {
    const int n = static_cast<int>(span_columns.rows());
    const int k = static_cast<int>(span_columns.cols());
    if (k != n) return false;
    // (x, y) -> B x + i B y as a real 2n x 2n matrix; standardness is
    // |det| bounded away from zero at the scale of the columns.
    RealMatrix m(2 * n, 2 * n);
    m.leftCols(n) = real_columns(span_columns);
    m.rightCols(n) = real_columns(Complex(0.0, 1.0) * span_columns);
    Eigen::JacobiSVD<RealMatrix> svd(m);
    const double scale = svd.singularValues().maxCoeff();
    if (scale == 0.0) return false;
    return svd.singularValues().minCoeff() > tol * scale;
}

StandardSubspace::StandardSubspace(const Matrix& span_columns) {
    if (!is_standard(span_columns))
        throw NotStandard("columns do not span a standard subspace");
    b_ = real_orthonormalize(span_columns);
}

RealMatrix StandardSubspace::real_projection() const {
    RealMatrix rb = real_columns(b_);  // columns orthonormal over R
    return rb * rb.transpose();
}

double StandardSubspace::contains_columns_residual(const Matrix& m) const {
    RealMatrix p = real_projection();
    double worst = 0.0;
    for (int j = 0; j < m.cols(); ++j) {
        RealVector x = real_from_complex(m.col(j));
        worst = std::max(worst, (x - p * x).norm() / std::max(1.0, x.norm()));
    }
    return worst;
}

Matrix GradedHom::even_value(double r) const {
    if (r <= 0.0) throw Error("even_value requires r > 0");
    Matrix ta = std::log(r) * a;
    // a is skew-hermitian, so i*a is hermitian and exp(ta) = exp(-i t (i a)).
    return hermitian_function_c(Complex(0, 1) * a,
                                [&](double x) { return std::exp(Complex(0.0, -std::log(r) * x)); });
}

ModularPair modular_objects(const StandardSubspace& v) {
    return polar_decompose_antilinear(tomita_operator(v)).pair();
}

AntilinearMap tomita_operator(const StandardSubspace& v) {
    const Matrix& b = v.basis();
    // S fixes V pointwise and is antilinear on the complex span:
    // S z = A conj(z) with A = B conj(B)^{-1}.
    Matrix a = b * b.conjugate().inverse();
    return AntilinearMap(a);
}

StandardSubspace standard_from_modular(const ModularPair& p, double tol) {
    p.require_valid(tol);
    // Fix(J Delta^{1/2}) = Delta^{-1/4} Fix(J): a J-fixed vector xi satisfies
    // J Delta^{1/2} (Delta^{-1/4} xi) = Delta^{-1/4} J xi = Delta^{-1/4} xi.
    Matrix fixed = conjugation_fixed_basis(p.j);
    Matrix tilt = hermitian_power(p.delta, -0.25) * fixed;
    return StandardSubspace(tilt);
}

GradedHom graded_hom_of(const ModularPair& p) {
    p.require_valid();
    Matrix a = Complex(0.0, -1.0 / (2.0 * M_PI)) * hermitian_log(p.delta);
    return GradedHom{a, p.j};
}

ModularPair modular_of(const GradedHom& g) {
    // Delta = exp(2πi A) with 2πi A hermitian.
    Matrix h = Complex(0.0, 2.0 * M_PI) * g.a;
    Matrix delta = hermitian_function(h, [](double x) { return std::exp(x); });
    ModularPair p{delta, g.j};
    p.require_valid();
    return p;
}

StandardSubspace standard_from_graded_hom(const GradedHom& g) {
    return standard_from_modular(modular_of(g));
}

StandardSubspace symplectic_complement(const StandardSubspace& v) {
    const int n = v.dim();
    RealMatrix p = v.real_projection();
    // Orthonormal basis of V^{⊥_R} = kernel of the projection.
    Eigen::SelfAdjointEigenSolver<RealMatrix> es(p);
    Matrix comp(n, n);
    int col = 0;
    for (int i = 0; i < 2 * n && col < n; ++i) {
        if (std::abs(es.eigenvalues()(i)) < 1e-8) {
            comp.col(col++) = complex_from_real(es.eigenvectors().col(i));
        }
    }
    if (col != n) throw NotStandard("orthogonal complement has wrong dimension");
    return StandardSubspace(Complex(0.0, 1.0) * comp);
}

bool is_lagrangian(const StandardSubspace& v, double tol) {
    Matrix delta = modular_objects(v).delta;
    return (delta - Matrix::Identity(v.dim(), v.dim())).norm() <= tol * v.dim();
}

double subspace_gap(const StandardSubspace& v1, const StandardSubspace& v2) {
    return spectral_norm(RealMatrix(v1.real_projection() - v2.real_projection()));
}

Matrix conjugation_fixed_basis(const Conjugation& j) {
    const int n = j.dim();
    // Real form of J is symmetric and involutive; its +1 eigenspace is H^J.
    RealMatrix fixed = symmetric_fixed_space(j.real_form(), 1e-8, n);
    Matrix out(n, n);
    for (int c = 0; c < n; ++c) out.col(c) = complex_from_real(fixed.col(c));
    return out;
}

} // namespace stand
