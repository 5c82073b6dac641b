#pragma once

#include <utility>

#include <unsupported/Eigen/MatrixFunctions>

#include "stand/reflection.hpp"

namespace stand {

namespace detail {

inline double rel_dist(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
    return (a - b).norm() / (1.0 + std::max(a.norm(), b.norm()));
}

inline double rel_dist(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    return (a - b).norm() / (1.0 + std::max(a.norm(), b.norm()));
}

} // namespace detail

/// Group reflection space: g • h = g h^{-1} g on GL_n(R).
class GroupReflection {
public:
    using Point = Eigen::MatrixXd;

    explicit GroupReflection(int n) : n_(n) {}

    std::string name() const { return "group-gln(" + std::to_string(n_) + ")"; }

    Point product(const Point& x, const Point& y) const {
        return x * y.inverse() * x;
    }

    double distance(const Point& a, const Point& b) const { return detail::rel_dist(a, b); }

    Point sample(Rng& rng) const { return rng.invertible_real_matrix(n_); }

    Point identity() const { return Point::Identity(n_, n_); }

    int n() const { return n_; }

private:
    int n_;
};

/// Coset reflection space xH • yH = x tau(x)^{-1} tau(y) H for
/// G = GL_n(R), tau(g) = (g^T)^{-1}, H = O(n). Points are coset
/// representatives; the distance compares the O(n)-invariant Gram matrices.
class CosetReflection {
public:
    using Point = Eigen::MatrixXd;

    explicit CosetReflection(int n) : n_(n) {}

    std::string name() const { return "coset-gln-mod-on(" + std::to_string(n_) + ")"; }

    Point product(const Point& x, const Point& y) const {
        // tau(x)^{-1} = x^T, tau(y) = (y^{-1})^T
        return x * x.transpose() * y.inverse().transpose();
    }

    double distance(const Point& a, const Point& b) const {
        return detail::rel_dist(a * a.transpose(), b * b.transpose());
    }

    Point sample(Rng& rng) const { return rng.invertible_real_matrix(n_); }

private:
    int n_;
};

/// Bilinear reflection space on {v : beta(v,v) != 0}:
/// s_x(y) = -y + 2 (beta(x,y)/beta(x,x)) x.
class BilinearReflection {
public:
    using Point = Eigen::VectorXd;

    /// Euclidean dot product on R^d.
    explicit BilinearReflection(int d)
        : form_(Eigen::MatrixXd::Identity(d, d)), d_(d) {}

    /// Arbitrary symmetric form (e.g. a Minkowski form, which admits
    /// isotropic vectors).
    explicit BilinearReflection(Eigen::MatrixXd form)
        : form_(std::move(form)), d_(static_cast<int>(form_.rows())) {}

    std::string name() const { return "bilinear(" + std::to_string(d_) + ")"; }

    double beta(const Point& x, const Point& y) const { return x.dot(form_ * y); }

    Point product(const Point& x, const Point& y) const {
        const double q = beta(x, x);
        if (std::abs(q) < 1e-8 * (1.0 + x.squaredNorm()))
            throw DegeneratePoint("beta(x,x) = 0: isotropic base point");
        return -y + (2.0 * beta(x, y) / q) * x;
    }

    double distance(const Point& a, const Point& b) const { return detail::rel_dist(a, b); }

    Point sample(Rng& rng) const { return rng.real_vector(d_); }

private:
    Eigen::MatrixXd form_;
    int d_;
};

/// Product of two reflection spaces, componentwise.
template <ReflectionInstance A, ReflectionInstance B>
class ProductReflection {
public:
    using Point = std::pair<typename A::Point, typename B::Point>;

    ProductReflection(A a, B b) : a_(std::move(a)), b_(std::move(b)) {}

    std::string name() const { return "product[" + a_.name() + " x " + b_.name() + "]"; }

    Point product(const Point& x, const Point& y) const {
        return {a_.product(x.first, y.first), b_.product(x.second, y.second)};
    }

    double distance(const Point& x, const Point& y) const {
        return std::max(a_.distance(x.first, y.first), b_.distance(x.second, y.second));
    }

    Point sample(Rng& rng) const { return {a_.sample(rng), b_.sample(rng)}; }

private:
    A a_;
    B b_;
};

/// A smooth homomorphism R^× -> GL_n(R), stored as the pair
/// (X, sigma) = (gamma'(0), gamma(-1)) with Ad_sigma X = X.
struct RxHom {
    Eigen::MatrixXd x;      // generator of gamma on R^×_+
    Eigen::MatrixXd sigma;  // involution gamma(-1), commuting with exp(tX)

    Eigen::MatrixXd value(double s) const {
        Eigen::MatrixXd even = (std::log(std::abs(s)) * x).exp();
        return s > 0 ? even : Eigen::MatrixXd(even * sigma);
    }
};

inline RxHom sample_rx_hom(Rng& rng, int n) {
    // Random involution: conjugated signature matrix.
    Eigen::MatrixXd p = rng.invertible_real_matrix(n);
    Eigen::VectorXd signs(n);
    for (int i = 0; i < n; ++i) signs(i) = rng.coin() ? 1.0 : -1.0;
    Eigen::MatrixXd sigma = p * signs.asDiagonal() * p.inverse();
    // Project a random generator onto the Ad_sigma-fixed part.
    Eigen::MatrixXd y = rng.real_matrix(n, n, -1.0, 1.0);
    Eigen::MatrixXd x = 0.5 * (y + sigma * y * sigma.inverse());
    return RxHom{x, sigma};
}

/// Hom(R^×, G) as a dilation space:
/// (gamma •_r eta)(s) = gamma(r) eta(s) gamma(r)^{-1}.
/// Equality of points is functional: values are compared on a fixed s grid.
class HomRxDilation {
public:
    using Point = RxHom;

    explicit HomRxDilation(int n) : n_(n) {}

    std::string name() const { return "hom-rx-gln(" + std::to_string(n_) + ")"; }

    Point conjugate(const Eigen::MatrixXd& g, const Point& h) const {
        Eigen::MatrixXd gi = g.inverse();
        return Point{g * h.x * gi, g * h.sigma * gi};
    }

    Point product(const Point& x, const Point& y) const { return dilate(x, -1.0, y); }

    Point dilate(const Point& x, double r, const Point& y) const {
        return conjugate(x.value(r), y);
    }

    double distance(const Point& a, const Point& b) const {
        double worst = 0.0;
        for (double s : kGrid)
            worst = std::max(worst, detail::rel_dist(a.value(s), b.value(s)));
        return worst;
    }

    Point sample(Rng& rng) const { return sample_rx_hom(rng, n_); }

private:
    static constexpr double kGrid[6] = {1.0, -1.0, M_E, -M_E, 0.5, -0.5};
    int n_;
};

/// The same homomorphism space in its pair form (Ex. 1.13(c)):
/// (x, sigma) • (y, eta) = (Ad_sigma y, sigma eta sigma) and
/// (x, sigma) •_{e^t} (y, eta) = (e^{t ad x} y, exp(tx) eta exp(-tx)).
/// Dilations use positive parameters composed with the reflection.
class PairSpaceDilation {
public:
    using Point = RxHom;

    explicit PairSpaceDilation(int n) : n_(n) {}

    std::string name() const { return "pair-space(" + std::to_string(n_) + ")"; }

    Point product(const Point& x, const Point& y) const {
        Eigen::MatrixXd si = x.sigma.inverse();
        return Point{x.sigma * y.x * si, x.sigma * y.sigma * si};
    }

    Point dilate(const Point& x, double r, const Point& y) const {
        Eigen::MatrixXd g = (std::log(std::abs(r)) * x.x).exp();
        if (r < 0) g = g * x.sigma;
        Eigen::MatrixXd gi = g.inverse();
        return Point{g * y.x * gi, g * y.sigma * gi};
    }

    double distance(const Point& a, const Point& b) const {
        return std::max(detail::rel_dist(a.x, b.x), detail::rel_dist(a.sigma, b.sigma));
    }

    Point sample(Rng& rng) const { return sample_rx_hom(rng, n_); }

private:
    int n_;
};

/// Dilation space on G from a homomorphism alpha: R^× -> Aut(G):
/// g •_r h = g alpha_r(g^{-1} h). Here G = GL_2(R) and alpha_r is
/// conjugation by diag(r, 1).
class GroupAlphaDilation {
public:
    using Point = Eigen::MatrixXd;

    GroupAlphaDilation() = default;

    std::string name() const { return "group-alpha-gl2"; }

    static Point alpha(double r, const Point& g) {
        Eigen::Matrix2d c;
        c << r, 0.0, 0.0, 1.0;
        return c * g * c.inverse();
    }

    Point product(const Point& x, const Point& y) const { return dilate(x, -1.0, y); }

    Point dilate(const Point& x, double r, const Point& y) const {
        return x * alpha(r, x.inverse() * y);
    }

    double distance(const Point& a, const Point& b) const { return detail::rel_dist(a, b); }

    Point sample(Rng& rng) const { return rng.invertible_real_matrix(2); }
};

/// Dilation space on R^d built through the homogeneous-space recipe: with
/// G = Aff(R^d) acting transitively, e = 0 and beta(r) = r id central in
/// G_e = GL_d, the product g.e •_r y = g beta(r) g^{-1}.y lands at
/// x + r (y - x) independently of the chosen g with g.e = x.
class HomogeneousAffineDilation {
public:
    using Point = Eigen::VectorXd;

    explicit HomogeneousAffineDilation(int d) : d_(d) {}

    std::string name() const { return "homog-affine(" + std::to_string(d_) + ")"; }

    /// Evaluate through an explicit group element (A, x) with (A, x).0 = x.
    static Point through_group(const Eigen::MatrixXd& a, const Point& x, double r,
                               const Point& y) {
        // g beta(r) g^{-1}(y) with g(v) = A v + x.
        return a * (r * (a.inverse() * (y - x))) + x;
    }

    Point product(const Point& x, const Point& y) const { return dilate(x, -1.0, y); }

    Point dilate(const Point& x, double r, const Point& y) const {
        return through_group(Eigen::MatrixXd::Identity(d_, d_), x, r, y);
    }

    double distance(const Point& a, const Point& b) const { return detail::rel_dist(a, b); }

    Point sample(Rng& rng) const { return rng.real_vector(d_); }

private:
    int d_;
};

/// Vector dilation space a •_r b = a + alpha_r(b - a) with
/// alpha_r = diag(r, r^3) (a homomorphism R^× -> GL_2).
class VectorAlphaDilation {
public:
    using Point = Eigen::VectorXd;

    std::string name() const { return "vector-alpha(r,r^3)"; }

    static Eigen::Matrix2d alpha(double r) {
        Eigen::Matrix2d m;
        m << r, 0.0, 0.0, r * r * r;
        return m;
    }

    Point product(const Point& x, const Point& y) const { return dilate(x, -1.0, y); }

    Point dilate(const Point& x, double r, const Point& y) const {
        return x + alpha(r) * (y - x);
    }

    double distance(const Point& a, const Point& b) const { return detail::rel_dist(a, b); }

    Point sample(Rng& rng) const { return rng.real_vector(2); }
};

/// The affine line a •_r b = a + r (b - a).
class AffineLineDilation {
public:
    using Point = Eigen::VectorXd;

    std::string name() const { return "affine-line"; }

    Point product(const Point& x, const Point& y) const { return 2.0 * x - y; }

    Point dilate(const Point& x, double r, const Point& y) const { return x + r * (y - x); }

    double distance(const Point& a, const Point& b) const { return detail::rel_dist(a, b); }

    Point sample(Rng& rng) const { return rng.real_vector(1); }
};

/// Deliberately broken reflection law x • y = x - y on R; (S1) fails.
class BrokenReflection {
public:
    using Point = Eigen::VectorXd;

    std::string name() const { return "broken-subtraction"; }

    Point product(const Point& x, const Point& y) const { return x - y; }

    double distance(const Point& a, const Point& b) const { return detail::rel_dist(a, b); }

    Point sample(Rng& rng) const { return rng.real_vector(1); }
};

/// Deliberately broken dilation on the affine line: x •_r y = x + e^r (y - x)
/// composes additively, r_x s_x = (r+s)_x, so (D2) fails.
class BrokenAdditiveDilation {
public:
    using Point = Eigen::VectorXd;

    std::string name() const { return "broken-exp-parameter"; }

    Point product(const Point& x, const Point& y) const { return 2.0 * x - y; }

    Point dilate(const Point& x, double r, const Point& y) const {
        return x + std::exp(r) * (y - x);
    }

    double distance(const Point& a, const Point& b) const { return detail::rel_dist(a, b); }

    Point sample(Rng& rng) const { return rng.real_vector(1); }
};

/// Oeh-form geodesic gamma(t) = exp(tX) g in a matrix group instance.
inline Geodesic<Eigen::MatrixXd> geodesic_from_one_param(const Eigen::MatrixXd& generator,
                                                         const Eigen::MatrixXd& g) {
    Geodesic<Eigen::MatrixXd> gamma;
    gamma.provenance = {generator, g};
    gamma.eval = [generator, g](double t) -> Eigen::MatrixXd {
        return (t * generator).exp() * g;
    };
    return gamma;
}

} // namespace stand
