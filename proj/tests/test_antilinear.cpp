#include <doctest.h>

#include "stand/antilinear.hpp"
#include "stand/sampling.hpp"

using namespace stand;

namespace {

const Complex I(0.0, 1.0);

Matrix upper_example() {
    Matrix m(2, 2);
    m << Complex(1, 0), Complex(0, 2), Complex(0, 0), Complex(1, 0);
    return m;
}

/// Oracle for the adjoint composition: explicit 2x2 arithmetic for
/// transpose(m) * conj(m), written out entry by entry.
Matrix adjoint_compose_oracle_2x2(const Matrix& m) {
    Matrix t(2, 2), c(2, 2), out(2, 2);
    t << m(0, 0), m(1, 0), m(0, 1), m(1, 1);
    c << std::conj(m(0, 0)), std::conj(m(0, 1)), std::conj(m(1, 0)), std::conj(m(1, 1));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out(i, j) = t(i, 0) * c(0, j) + t(i, 1) * c(1, j);
    return out;
}

} // namespace

TEST_CASE("antilinear apply") {
    const AntilinearMap conj2 = AntilinearMap::entrywise_conjugation(2);
    Vector v(2);
    v << Complex(1, 2), Complex(-3, 0.5);

    SUBCASE("identity matrix acts by conjugation") {
        CHECK((conj2.apply(v) - v.conjugate()).norm() == doctest::Approx(0.0));
    }

    SUBCASE("conjugate homogeneity at lambda = i") {
        const AntilinearMap a(upper_example());
        const Vector lhs = a.apply(I * v);
        const Vector rhs = -I * a.apply(v);
        CHECK((lhs - rhs).norm() < 1e-14);
    }

    SUBCASE("explicit column: m e2 for the upper example") {
        const AntilinearMap a(upper_example());
        Vector e2(2);
        e2 << 0.0, 1.0;
        const Vector r = a.apply(e2);
        CHECK(std::abs(r(0) - Complex(0, 2)) < 1e-15);
        CHECK(std::abs(r(1) - Complex(1, 0)) < 1e-15);
    }

    SUBCASE("dimension mismatch") {
        Vector w(3);
        w.setZero();
        CHECK_THROWS_AS((void)conj2.apply(w), DimensionMismatch);
    }

    SUBCASE("additivity on random input") {
        Rng rng(11);
        const AntilinearMap a(rng.complex_matrix(3, 3));
        const Vector x = rng.complex_vector(3), y = rng.complex_vector(3);
        CHECK((a.apply(x + y) - a.apply(x) - a.apply(y)).norm() < 1e-13);
    }
}

TEST_CASE("antilinear adjoint") {
    SUBCASE("symmetric matrix gives a self-adjoint map") {
        Matrix m(2, 2);
        m << Complex(1, 1), Complex(0, 2), Complex(0, 2), Complex(-3, 0);
        const AntilinearMap a(m);
        CHECK((a.adjoint().matrix() - m).norm() == doctest::Approx(0.0));
    }

    SUBCASE("defining relation <A*x, y> = conj(<x, Ay>)") {
        Rng rng(5);
        const AntilinearMap a(rng.complex_matrix(3, 3));
        for (int k = 0; k < 20; ++k) {
            const Vector x = rng.complex_vector(3), y = rng.complex_vector(3);
            const Complex lhs = (y.adjoint() * a.adjoint().apply(x))(0);
            const Complex rhs = std::conj((a.apply(y).adjoint() * x)(0));
            CHECK(std::abs(lhs - rhs) < 1e-12);
        }
    }

    SUBCASE("antiunitary conjugation satisfies A*A = id") {
        Rng rng(7);
        const Conjugation j = random_conjugation(rng, 3);
        const Matrix composed = j.adjoint().compose_antilinear(j);
        CHECK((composed - Matrix::Identity(3, 3)).norm() < 1e-12);
    }

    SUBCASE("S*S against the explicit 2x2 oracle") {
        const Matrix m = upper_example();
        const AntilinearMap s(m);
        const Matrix delta = s.adjoint().compose_antilinear(s);
        const Matrix oracle = adjoint_compose_oracle_2x2(m);
        CHECK((delta - oracle).norm() < 1e-15);
        // frozen values: [[1, -2i], [2i, 5]]
        CHECK(std::abs(delta(0, 0) - Complex(1, 0)) < 1e-15);
        CHECK(std::abs(delta(0, 1) - Complex(0, -2)) < 1e-15);
        CHECK(std::abs(delta(1, 0) - Complex(0, 2)) < 1e-15);
        CHECK(std::abs(delta(1, 1) - Complex(5, 0)) < 1e-15);
    }
}

TEST_CASE("polar decomposition S = J Delta^{1/2}") {
    SUBCASE("entrywise conjugation: J = S, Delta = 1") {
        const auto polar = polar_decompose_antilinear(AntilinearMap::entrywise_conjugation(2));
        CHECK(polar.involutive);
        CHECK((polar.delta - Matrix::Identity(2, 2)).norm() < 1e-13);
        CHECK((polar.j.matrix() - Matrix::Identity(2, 2)).norm() < 1e-13);
    }

    SUBCASE("n = 1 phase: Delta = 1, J z = e^{2 i theta} conj(z)") {
        const double theta = 0.6;
        Matrix m(1, 1);
        m(0, 0) = std::exp(Complex(0, 2.0 * theta));
        const auto polar = polar_decompose_antilinear(AntilinearMap(m));
        CHECK(polar.involutive);
        CHECK(std::abs(polar.delta(0, 0) - 1.0) < 1e-14);
        CHECK(std::abs(polar.j.matrix()(0, 0) - m(0, 0)) < 1e-14);
    }

    SUBCASE("upper example: eigenvalues 3 +- 2 sqrt(2)") {
        const auto polar = polar_decompose_antilinear(AntilinearMap(upper_example()));
        Eigen::SelfAdjointEigenSolver<Matrix> es(polar.delta);
        CHECK(es.eigenvalues()(0) == doctest::Approx(3.0 - 2.0 * std::sqrt(2.0)).epsilon(1e-12));
        CHECK(es.eigenvalues()(1) == doctest::Approx(3.0 + 2.0 * std::sqrt(2.0)).epsilon(1e-12));
        CHECK(polar.reconstruction_residual < 1e-12);
        CHECK(polar.involutive);  // upper_example is an involution: m conj(m) = 1
        const ModularPair pair = polar.pair();
        CHECK(pair.modular_relation_residual() < 1e-12);
    }

    SUBCASE("singular operator is rejected") {
        Matrix m = Matrix::Zero(2, 2);
        m(0, 0) = 1.0;
        CHECK_THROWS_AS((void)polar_decompose_antilinear(AntilinearMap(m)), SingularOperator);
    }

    SUBCASE("non-involutive input is flagged, not fatal") {
        Rng rng(3);
        const Matrix m = rng.invertible_complex_matrix(3);
        const auto polar = polar_decompose_antilinear(AntilinearMap(m));
        CHECK(polar.reconstruction_residual < 1e-10);
        if (!polar.involutive) CHECK_THROWS_AS((void)polar.pair(), ModularRelationViolated);
    }
}

TEST_CASE("modular pair invariants on random involutive maps") {
    Rng rng(17);
    for (int k = 0; k < 25; ++k) {
        const int n = rng.uniform_int(2, 5);
        // S = T conj(.) T^{-1} is involutive for any invertible T.
        const Matrix t = rng.invertible_complex_matrix(n);
        const AntilinearMap s(t * t.conjugate().inverse());
        REQUIRE(s.is_involution(1e-9));

        const auto polar = polar_decompose_antilinear(s);
        const ModularPair pair = polar.pair();
        pair.require_valid(1e-9);

        // Fix(S) = Fix(J Delta^{1/2}) as real subspaces.
        const RealMatrix fs = antilinear_real_form(s.matrix());
        const RealMatrix ft = antilinear_real_form(pair.tomita().matrix());
        CHECK((fs - ft).norm() < 1e-8 * (1.0 + fs.norm()));

        // J commutes with Delta^{it}.
        for (double tt : {0.35, -1.2}) {
            const Matrix dit = pair.delta_power_it(tt);
            CHECK((pair.j.sandwich(dit) - dit).norm() < 1e-10 * (1.0 + dit.norm()));
        }
    }
}
