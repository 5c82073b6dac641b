#include <doctest.h>

#include "stand/sampling.hpp"
#include "stand/standard_subspace.hpp"

using namespace stand;

namespace {

const Complex I(0.0, 1.0);

/// Basis of span_R{e1, i e1 + e2} in C^2.
Matrix worked_basis() {
    Matrix b(2, 2);
    b << Complex(1, 0), I, Complex(0, 0), Complex(1, 0);
    return b;
}

} // namespace

TEST_CASE("is_standard") {
    SUBCASE("R^n is standard") { CHECK(is_standard(Matrix::Identity(3, 3))); }

    SUBCASE("a C-spanning real plane in C^1 is not") {
        Matrix b(1, 2);
        b << Complex(1, 0), I;
        CHECK_FALSE(is_standard(b));
    }

    SUBCASE("worked example is standard (real 4x4 determinant oracle)") {
        const Matrix b = worked_basis();
        CHECK(is_standard(b));
        // oracle: assemble the real 4x4 matrix of (x, y) -> Bx + iBy by hand
        RealMatrix m(4, 4);
        // columns: B e1, B e2, iB e1, iB e2 in (re, im) stacking
        m << 1, 0, 0, -1,
             0, 1, 0, 0,
             0, 1, 1, 0,
             0, 0, 0, 1;
        CHECK(std::abs(m.determinant()) > 1e-10);
    }

    SUBCASE("rank-deficient basis is rejected") {
        Matrix b(2, 2);
        b << Complex(1, 0), Complex(2, 0), Complex(0, 0), Complex(0, 0);
        CHECK_FALSE(is_standard(b));
        CHECK_THROWS_AS(StandardSubspace{b}, NotStandard);
    }
}

TEST_CASE("modular objects") {
    SUBCASE("V = R^n gives (1, entrywise conjugation)") {
        const StandardSubspace v(Matrix::Identity(2, 2));
        const ModularPair p = modular_objects(v);
        CHECK((p.delta - Matrix::Identity(2, 2)).norm() < 1e-13);
        CHECK((p.j.matrix() - Matrix::Identity(2, 2)).norm() < 1e-13);
    }

    SUBCASE("worked example: A_S = [[1,2i],[0,1]] and Delta = [[1,-2i],[2i,5]]") {
        const StandardSubspace v(worked_basis());
        const Matrix a = tomita_operator(v).matrix();
        Matrix a_expected(2, 2);
        a_expected << Complex(1, 0), Complex(0, 2), Complex(0, 0), Complex(1, 0);
        CHECK((a - a_expected).norm() < 1e-12);

        const ModularPair p = modular_objects(v);
        Matrix delta_expected(2, 2);
        delta_expected << Complex(1, 0), Complex(0, -2), Complex(0, 2), Complex(5, 0);
        CHECK((p.delta - delta_expected).norm() < 1e-12);
    }

    SUBCASE("unitary images of R^n are Lagrangian (Delta = 1)") {
        Rng rng(23);
        for (int k = 0; k < 10; ++k) {
            const int n = rng.uniform_int(2, 5);
            const StandardSubspace v(Matrix(rng.unitary(n)));
            CHECK(is_lagrangian(v));
        }
    }
}

TEST_CASE("standard_from_modular") {
    SUBCASE("(1, conj) -> R^n") {
        const ModularPair p{Matrix::Identity(3, 3), Conjugation::entrywise(3)};
        const StandardSubspace v = standard_from_modular(p);
        CHECK(v.contains_columns_residual(Matrix::Identity(3, 3)) < 1e-10);
    }

    SUBCASE("round trip through the worked example") {
        const StandardSubspace v(worked_basis());
        const StandardSubspace v2 = standard_from_modular(modular_objects(v));
        CHECK(subspace_gap(v, v2) < 1e-9);
    }

    SUBCASE("modular relation is enforced") {
        // Delta with J Delta J != Delta^{-1}: diag(2, 3) against flip-conj.
        Matrix mj(2, 2);
        mj << 0, 1, 1, 0;
        Matrix delta = Matrix::Zero(2, 2);
        delta(0, 0) = 2.0;
        delta(1, 1) = 3.0;
        CHECK_THROWS_AS((void)standard_from_modular(ModularPair{delta, Conjugation(mj)}),
                        ModularRelationViolated);
    }
}

TEST_CASE("graded homomorphism model") {
    SUBCASE("Delta = 1 gives A = 0") {
        const ModularPair p{Matrix::Identity(2, 2), Conjugation::entrywise(2)};
        const GradedHom g = graded_hom_of(p);
        CHECK(g.a.norm() < 1e-13);
        CHECK((g.even_value(std::exp(1.0)) - Matrix::Identity(2, 2)).norm() < 1e-13);
    }

    SUBCASE("diagonal Delta: A = diag(ia, -ia)") {
        const double a = 0.4;
        Matrix mj(2, 2);
        mj << 0, 1, 1, 0;
        Matrix delta = Matrix::Zero(2, 2);
        delta(0, 0) = std::exp(-2.0 * M_PI * a);
        delta(1, 1) = std::exp(2.0 * M_PI * a);
        const GradedHom g = graded_hom_of(ModularPair{delta, Conjugation(mj)});
        CHECK(std::abs(g.a(0, 0) - I * a) < 1e-12);
        CHECK(std::abs(g.a(1, 1) + I * a) < 1e-12);
        CHECK(std::abs(g.a(0, 1)) < 1e-13);
        CHECK(g.constraint_residual() < 1e-12);
    }

    SUBCASE("round trip on random pairs") {
        Rng rng(31);
        double worst = 0.0;
        for (int k = 0; k < 100; ++k) {
            const int n = rng.uniform_int(2, 6);
            const ModularPair p = random_modular_pair(rng, n);
            const ModularPair q = modular_of(graded_hom_of(p));
            worst = std::max(worst, (p.delta - q.delta).norm() / (1.0 + p.delta.norm()));
        }
        CHECK(worst < 1e-9);
    }
}

TEST_CASE("symplectic complement") {
    SUBCASE("R^n is self-complementary") {
        const StandardSubspace v(Matrix::Identity(2, 2));
        CHECK(subspace_gap(v, symplectic_complement(v)) < 1e-10);
    }

    SUBCASE("V' = J_V V, V'' = V, and theta on Mod (two-path)") {
        const StandardSubspace v(worked_basis());
        const StandardSubspace vc = symplectic_complement(v);
        const ModularPair p = modular_objects(v);
        CHECK(subspace_gap(vc, v.antilinear_image(p.j)) < 1e-9);
        CHECK(subspace_gap(v, symplectic_complement(vc)) < 1e-9);

        const ModularPair pc = modular_objects(vc);
        CHECK((pc.delta - hermitian_power(p.delta, -1.0)).norm() < 1e-9);
        CHECK((pc.j.matrix() - p.j.matrix()).norm() < 1e-9);
    }

    SUBCASE("worked example is not Lagrangian") {
        CHECK_FALSE(is_lagrangian(StandardSubspace(worked_basis())));
    }
}

TEST_CASE("subspace gap") {
    const StandardSubspace v(worked_basis());
    CHECK(subspace_gap(v, v) < 1e-14);

    SUBCASE("finite-dimensional order triviality") {
        // If every basis vector of V1 nearly lies in V2, the spaces are
        // nearly equal (no proper inclusions in finite dimension).
        Rng rng(41);
        const StandardSubspace v1 = random_standard_subspace(rng, 3);
        Matrix perturbed = v1.basis();
        for (int c = 0; c < perturbed.cols(); ++c)
            perturbed.col(c) += 1e-12 * rng.complex_vector(3);
        const StandardSubspace v2(perturbed);
        CHECK(v2.contains_columns_residual(v1.basis()) < 1e-9);
        CHECK(subspace_gap(v1, v2) < 1e-9);
    }
}
