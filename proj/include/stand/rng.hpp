#pragma once

#include <complex>
#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace stand {

/// Seeded sampler used by every verification suite. All draws go through the
/// methods below so that a fixed seed reproduces the same sample stream.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    /// Uniform in [0, 1).
    double unit() {
        // 53-bit mantissa draw; keeps the stream independent of library
        // distribution internals.
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

    /// Standard normal via Box-Muller.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = 0.0;
        while (u1 <= 1e-300) u1 = unit();
        const double u2 = unit();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * M_PI * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    int uniform_int(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(unit() * (hi - lo + 1));
    }

    bool coin() { return (gen_() & 1u) != 0; }

    std::complex<double> complex_normal() { return {normal(), normal()}; }

    /// Matrix with entries uniform in [lo, hi]; bounded to avoid conditioning
    /// blow-ups in the axiom suites.
    Eigen::MatrixXd real_matrix(int rows, int cols, double lo = -2.0, double hi = 2.0) {
        Eigen::MatrixXd m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m(i, j) = uniform(lo, hi);
        return m;
    }

    Eigen::MatrixXcd complex_matrix(int rows, int cols, double lo = -2.0, double hi = 2.0) {
        Eigen::MatrixXcd m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                m(i, j) = std::complex<double>(uniform(lo, hi), uniform(lo, hi));
        return m;
    }

    Eigen::VectorXd real_vector(int n, double lo = -2.0, double hi = 2.0) {
        Eigen::VectorXd v(n);
        for (int i = 0; i < n; ++i) v(i) = uniform(lo, hi);
        return v;
    }

    Eigen::VectorXcd complex_vector(int n, double lo = -2.0, double hi = 2.0) {
        Eigen::VectorXcd v(n);
        for (int i = 0; i < n; ++i)
            v(i) = std::complex<double>(uniform(lo, hi), uniform(lo, hi));
        return v;
    }

    /// Invertible real matrix (resamples until well conditioned).
    Eigen::MatrixXd invertible_real_matrix(int n, double min_singular = 0.1) {
        for (;;) {
            Eigen::MatrixXd m = real_matrix(n, n);
            Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
            if (svd.singularValues().minCoeff() > min_singular) return m;
        }
    }

    Eigen::MatrixXcd invertible_complex_matrix(int n, double min_singular = 0.1) {
        for (;;) {
            Eigen::MatrixXcd m = complex_matrix(n, n);
            Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
            if (svd.singularValues().minCoeff() > min_singular) return m;
        }
    }

    /// Haar-ish unitary via QR of a complex Gaussian matrix.
    Eigen::MatrixXcd unitary(int n) {
        Eigen::MatrixXcd g(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) g(i, j) = complex_normal();
        Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
        Eigen::MatrixXcd q = qr.householderQ();
        Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
        for (int i = 0; i < n; ++i) {
            std::complex<double> d = r(i, i);
            q.col(i) *= (std::abs(d) > 0) ? d / std::abs(d) : 1.0;
        }
        return q;
    }

    /// Random orthogonal matrix (QR of a real Gaussian).
    Eigen::MatrixXd orthogonal(int n) {
        Eigen::MatrixXd g(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) g(i, j) = normal();
        Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
        Eigen::MatrixXd q = qr.householderQ();
        Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
        for (int i = 0; i < n; ++i)
            if (r(i, i) < 0) q.col(i) *= -1.0;
        return q;
    }

    std::uint64_t raw() { return gen_(); }

    /// Derive an independent child stream (used when suites run concurrently).
    Rng fork() { return Rng(gen_() ^ 0x9e3779b97f4a7c15ull); }

private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

} // namespace stand
