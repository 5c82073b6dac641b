#include "stand/jordan.hpp"

#include <cmath>

namespace stand {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;

void require_same(const JordanElement& x, const JordanElement& y) {
    if (!(x.algebra() == y.algebra()))
        throw AlgebraMismatch("elements belong to different Jordan algebras");
}

double singular_floor(const JordanElement& x) {
    return 1e-12 * (1.0 + x.norm());
}

} // namespace

JordanElement jordan_unit(const JordanAlgebra& alg) {
    if (alg.kind() == JordanKind::Spin) {
        RealVector s = RealVector::Zero(alg.parameter());
        s(0) = 1.0;
        return JordanElement(alg, s);
    }
    return JordanElement(alg, Matrix(Matrix::Identity(alg.parameter(), alg.parameter())));
}

JordanElement jordan_zero(const JordanAlgebra& alg) {
    if (alg.kind() == JordanKind::Spin)
        return JordanElement(alg, RealVector(RealVector::Zero(alg.parameter())));
    return JordanElement(alg, Matrix(Matrix::Zero(alg.parameter(), alg.parameter())));
}

RealVector jordan_coords(const JordanElement& x) {
    const JordanAlgebra& alg = x.algebra();
    const int n = alg.parameter();
    RealVector c(alg.dim());
    switch (alg.kind()) {
        case JordanKind::Spin:
            return x.spin_data();
        case JordanKind::SymReal: {
            int k = 0;
            for (int i = 0; i < n; ++i) c(k++) = x.matrix()(i, i).real();
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) c(k++) = kSqrt2 * x.matrix()(i, j).real();
            return c;
        }
        case JordanKind::HermComplex: {
            int k = 0;
            for (int i = 0; i < n; ++i) c(k++) = x.matrix()(i, i).real();
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    c(k++) = kSqrt2 * x.matrix()(i, j).real();
                    c(k++) = kSqrt2 * x.matrix()(i, j).imag();
                }
            return c;
        }
    }
    return c;
}

JordanElement jordan_from_coords(const JordanAlgebra& alg, const RealVector& c) {
    const int n = alg.parameter();
    switch (alg.kind()) {
        case JordanKind::Spin:
            return JordanElement(alg, c);
        case JordanKind::SymReal: {
            Matrix m = Matrix::Zero(n, n);
            int k = 0;
            for (int i = 0; i < n; ++i) m(i, i) = c(k++);
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    m(i, j) = m(j, i) = c(k++) / kSqrt2;
                }
            return JordanElement(alg, m);
        }
        case JordanKind::HermComplex: {
            Matrix m = Matrix::Zero(n, n);
            int k = 0;
            for (int i = 0; i < n; ++i) m(i, i) = c(k++);
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    const double re = c(k++) / kSqrt2;
                    const double im = c(k++) / kSqrt2;
                    m(i, j) = Complex(re, im);
                    m(j, i) = Complex(re, -im);
                }
            return JordanElement(alg, m);
        }
    }
    throw AlgebraMismatch("unreachable");
}

JordanElement jmul(const JordanElement& x, const JordanElement& y) {
    require_same(x, y);
    if (x.is_spin()) {
        const RealVector& a = x.spin_data();
        const RealVector& b = y.spin_data();
        RealVector out(a.size());
        out(0) = a.dot(b);
        out.tail(a.size() - 1) = a(0) * b.tail(b.size() - 1) + b(0) * a.tail(a.size() - 1);
        return JordanElement(x.algebra(), out);
    }
    return JordanElement(x.algebra(), Matrix(0.5 * (x.matrix() * y.matrix() + y.matrix() * x.matrix())));
}

RealMatrix lop(const JordanElement& x) {
    const JordanAlgebra& alg = x.algebra();
    const int d = alg.dim();
    RealMatrix l(d, d);
    RealVector e = RealVector::Zero(d);
    for (int k = 0; k < d; ++k) {
        e(k) = 1.0;
        l.col(k) = jordan_coords(jmul(x, jordan_from_coords(alg, e)));
        e(k) = 0.0;
    }
    return l;
}

double trace_form(const JordanElement& x, const JordanElement& y) {
    return lop(jmul(x, y)).trace();
}

double trace_form_min_eigenvalue(const JordanAlgebra& alg) {
    const int d = alg.dim();
    RealMatrix gram(d, d);
    RealVector ei = RealVector::Zero(d), ej = RealVector::Zero(d);
    for (int i = 0; i < d; ++i) {
        ei(i) = 1.0;
        for (int j = 0; j <= i; ++j) {
            ej(j) = 1.0;
            gram(i, j) = gram(j, i) =
                trace_form(jordan_from_coords(alg, ei), jordan_from_coords(alg, ej));
            ej(j) = 0.0;
        }
        ei(i) = 0.0;
    }
    return Eigen::SelfAdjointEigenSolver<RealMatrix>(gram).eigenvalues().minCoeff();
}

bool is_euclidean(const JordanAlgebra& alg, int samples, std::uint64_t seed) {
    if (trace_form_min_eigenvalue(alg) <= 0.0) return false;
    Rng rng(seed);
    for (int k = 0; k < samples; ++k) {
        JordanElement x = random_element(alg, rng);
        if (jordan_coords(x).norm() > 1e-8 && trace_form(x, x) <= 0.0) return false;
    }
    return true;
}

RealMatrix quad_P(const JordanElement& x, const JordanElement& y) {
    require_same(x, y);
    const RealMatrix lx = lop(x);
    const RealMatrix ly = lop(y);
    return lx * ly + ly * lx - lop(jmul(x, y));
}

RealMatrix quad_P(const JordanElement& x) { return quad_P(x, x); }

RealVector spectrum(const JordanElement& x) {
    if (x.is_spin()) {
        const RealVector& s = x.spin_data();
        const double t = s(0);
        const double r = s.tail(s.size() - 1).norm();
        RealVector out(2);
        out << t - r, t + r;
        return out;
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (x.matrix() + x.matrix().adjoint()));
    return es.eigenvalues();
}

bool in_open_cone(const JordanElement& x) { return spectrum(x).minCoeff() > 0.0; }

bool in_closed_cone(const JordanElement& x, double tol) {
    return spectrum(x).minCoeff() >= -tol * (1.0 + x.norm());
}

JordanElement jordan_inverse(const JordanElement& x) {
    const RealVector spec = spectrum(x);
    if (spec.cwiseAbs().minCoeff() < singular_floor(x))
        throw SingularElement("Jordan determinant vanishes");
    if (x.is_spin()) {
        const RealVector& s = x.spin_data();
        const double q = s(0) * s(0) - s.tail(s.size() - 1).squaredNorm();
        RealVector out = -s / q;
        out(0) = s(0) / q;
        return JordanElement(x.algebra(), out);
    }
    return JordanElement(x.algebra(), Matrix(x.matrix().inverse()));
}

double jordan_distance(const JordanElement& a, const JordanElement& b) {
    const double num = (jordan_coords(a) - jordan_coords(b)).norm();
    return num / (1.0 + std::max(a.norm(), b.norm()));
}

ComplexifiedElement complexify(const JordanElement& x) {
    return {x, jordan_zero(x.algebra())};
}

ComplexifiedElement cmul(const ComplexifiedElement& a, const ComplexifiedElement& b) {
    return {jmul(a.re, b.re) - jmul(a.im, b.im), jmul(a.re, b.im) + jmul(a.im, b.re)};
}

ComplexifiedElement cinv(const ComplexifiedElement& a) {
    const JordanAlgebra alg = a.re.algebra();
    switch (alg.kind()) {
        case JordanKind::Spin: {
            // complex spin inverse (t, v)^{-1} = (t, -v) / (t^2 - v.v), with
            // the bilinear (not hermitian) square.
            const RealVector& re = a.re.spin_data();
            const RealVector& im = a.im.spin_data();
            Vector z = re.cast<Complex>() + Complex(0, 1) * im.cast<Complex>();
            Complex q = z(0) * z(0);
            for (int i = 1; i < z.size(); ++i) q -= z(i) * z(i);
            if (std::abs(q) < 1e-12 * (1.0 + z.squaredNorm()))
                throw SingularElement("complexified spin element is singular");
            Vector w = -z / q;
            w(0) = z(0) / q;
            return {JordanElement(alg, RealVector(w.real())), JordanElement(alg, RealVector(w.imag()))};
        }
        case JordanKind::SymReal: {
            // complex symmetric matrix; real/imaginary parts stay symmetric.
            Matrix z = a.re.matrix() + Complex(0, 1) * a.im.matrix();
            if (std::abs(z.determinant()) < 1e-12 * (1.0 + std::pow(z.norm(), z.rows())))
                throw SingularElement("complexified element is singular");
            Matrix w = z.inverse();
            return {JordanElement(alg, Matrix(w.real().cast<Complex>())),
                    JordanElement(alg, Matrix(w.imag().cast<Complex>()))};
        }
        case JordanKind::HermComplex: {
            // X + iY with X, Y hermitian is a general complex matrix; the
            // inverse splits back into hermitian and antihermitian parts.
            Matrix z = a.re.matrix() + Complex(0, 1) * a.im.matrix();
            if (std::abs(z.determinant()) < 1e-12 * (1.0 + std::pow(z.norm(), z.rows())))
                throw SingularElement("complexified element is singular");
            Matrix w = z.inverse();
            Matrix x = 0.5 * (w + w.adjoint());
            Matrix y = (w - w.adjoint()) / Complex(0, 2);
            return {JordanElement(alg, x), JordanElement(alg, y)};
        }
    }
    throw AlgebraMismatch("unreachable");
}

ComplexifiedElement cayley(const ComplexifiedElement& z) {
    const JordanElement e = jordan_unit(z.re.algebra());
    const ComplexifiedElement num{z.re, z.im - e};
    const ComplexifiedElement den{z.re, z.im + e};
    return cmul(num, cinv(den));
}

JordanElement random_element(const JordanAlgebra& alg, Rng& rng, double scale) {
    RealVector c(alg.dim());
    for (int i = 0; i < c.size(); ++i) c(i) = rng.uniform(-scale, scale);
    return jordan_from_coords(alg, c);
}

JordanElement random_invertible(const JordanAlgebra& alg, Rng& rng) {
    for (;;) {
        JordanElement x = random_element(alg, rng);
        if (spectrum(x).cwiseAbs().minCoeff() > 0.05) return x;
    }
}

JordanElement random_cone_element(const JordanAlgebra& alg, Rng& rng, double radius,
                                  bool near_boundary, double gap) {
    if (alg.kind() == JordanKind::Spin) {
        const int n = alg.parameter();
        const double lo = near_boundary ? gap * radius
                                        : radius * std::exp(rng.uniform(-2.0, 0.0));
        const double t = 0.5 * (radius + lo);
        const double r = 0.5 * (radius - lo);
        RealVector v(n - 1);
        for (int i = 0; i < n - 1; ++i) v(i) = rng.normal();
        if (v.norm() > 0) v *= r / v.norm();
        RealVector s(n);
        s(0) = t;
        s.tail(n - 1) = v;
        return JordanElement(alg, s);
    }
    const int n = alg.parameter();
    RealVector evals(n);
    evals(0) = radius;
    for (int i = 1; i < n; ++i)
        evals(i) = near_boundary && i == n - 1 ? gap * radius
                                               : radius * std::exp(rng.uniform(-2.0, 0.0));
    if (alg.kind() == JordanKind::SymReal) {
        Eigen::MatrixXd q = rng.orthogonal(n);
        Eigen::MatrixXd m = q * evals.asDiagonal() * q.transpose();
        return JordanElement(alg, Matrix(m.cast<Complex>()));
    }
    Matrix q = rng.unitary(n);
    Matrix m = q * evals.cast<Complex>().asDiagonal() * q.adjoint();
    return JordanElement(alg, Matrix(0.5 * (m + m.adjoint())));
}

RealMatrix quad_rep_matrix(const JordanElement& y) {
    const RealVector spec = spectrum(y);
    if (spec.cwiseAbs().minCoeff() < singular_floor(y))
        throw SingularElement("quadratic representation of a singular element");
    return quad_P(y);
}

RealMatrix random_cone_automorphism(const JordanAlgebra& alg, Rng& rng) {
    const int n = alg.parameter();
    const int d = alg.dim();

    // Jordan automorphism part.
    RealMatrix aut(d, d);
    {
        RealVector e = RealVector::Zero(d);
        if (alg.kind() == JordanKind::Spin) {
            Eigen::MatrixXd r = rng.orthogonal(n - 1);
            aut.setZero();
            aut(0, 0) = 1.0;
            aut.bottomRightCorner(n - 1, n - 1) = r;
        } else {
            Matrix k = alg.kind() == JordanKind::SymReal
                           ? Matrix(rng.orthogonal(n).cast<Complex>())
                           : rng.unitary(n);
            for (int c = 0; c < d; ++c) {
                e(c) = 1.0;
                JordanElement b = jordan_from_coords(alg, e);
                aut.col(c) = jordan_coords(
                    JordanElement(alg, Matrix(k * b.matrix() * k.adjoint())));
                e(c) = 0.0;
            }
        }
    }

    // Quadratic representation of an interior point, and a positive scalar.
    JordanElement y = random_cone_element(alg, rng, std::exp(rng.uniform(-0.5, 0.5)));
    const double lambda = std::exp(rng.uniform(-0.7, 0.7));
    return lambda * quad_rep_matrix(y) * aut;
}

} // namespace stand
