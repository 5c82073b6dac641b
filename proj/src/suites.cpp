#include "stand/suites.hpp"

#include <future>

#include "stand/affine_flow.hpp"
#include "stand/bgl.hpp"
#include "stand/reflection_instances.hpp"
#include "stand/sampling.hpp"
#include "stand/semigroup.hpp"
#include "stand/stand_geometry.hpp"
#include "stand/suites.hpp"

namespace stand {

namespace {

void add_axiom_report(SuiteResult& out, const AxiomReport& rep) {
    for (const auto& law : rep.laws)
        out.checks.push_back(
            {rep.instance + "/" + law.law, law.max_residual, rep.tol, law.pass, law.note});
    if (rep.precondition_violations > 0)
        out.add_flag(rep.instance + "/preconditions", false,
                     std::to_string(rep.precondition_violations) + " degenerate samples");
}

std::vector<JordanAlgebra> selected_algebras(const RunConfig& cfg) {
    std::vector<JordanAlgebra> out;
    if (cfg.algebra == "all" || cfg.algebra == "sym") out.emplace_back(JordanKind::SymReal, 3);
    if (cfg.algebra == "all" || cfg.algebra == "herm") out.emplace_back(JordanKind::HermComplex, 2);
    if (cfg.algebra == "all" || cfg.algebra == "spin") out.emplace_back(JordanKind::Spin, 4);
    if (out.empty()) throw ConfigError("unknown algebra selection: " + cfg.algebra);
    return out;
}

/// Koufany data: (c1, a, c2) with both c's in the closed cone and a
/// cone-preserving.
ConfWord random_koufany_word(const JordanAlgebra& alg, Rng& rng) {
    JordanElement c1 = random_cone_element(alg, rng, std::exp(rng.uniform(-1.0, 1.0)));
    JordanElement c2 = random_cone_element(alg, rng, std::exp(rng.uniform(-1.0, 1.0)));
    return koufany_compose(c1, random_cone_automorphism(alg, rng), c2);
}

} // namespace

SuiteResult run_axioms_suite(const RunConfig& cfg) {
    SuiteResult out{"axioms"};
    const double tol = cfg.tol.value_or(1e-10);
    const int ns = cfg.axiom_samples;
    const std::uint64_t s = cfg.seed;

    add_axiom_report(out, verify_reflection_axioms(GroupReflection(2), ns, tol, s + 1));
    add_axiom_report(out, verify_reflection_axioms(CosetReflection(2), ns, tol, s + 2));
    add_axiom_report(out, verify_reflection_axioms(BilinearReflection(3), ns, tol, s + 3));
    add_axiom_report(out,
                     verify_reflection_axioms(
                         ProductReflection(GroupReflection(2), BilinearReflection(3)), ns, tol, s + 4));

    HomRxDilation hom(3);
    add_axiom_report(out, verify_reflection_axioms(hom, ns, tol, s + 5));
    add_axiom_report(out, verify_dilation_axioms(hom, ns, tol, s + 6));

    PairSpaceDilation pair_space(3);
    add_axiom_report(out, verify_reflection_axioms(pair_space, ns, tol, s + 7));
    add_axiom_report(out, verify_dilation_axioms(pair_space, ns, tol, s + 8));

    GroupAlphaDilation group_alpha;
    add_axiom_report(out, verify_reflection_axioms(group_alpha, ns, tol, s + 9));
    add_axiom_report(out, verify_dilation_axioms(group_alpha, ns, tol, s + 10));

    HomogeneousAffineDilation homog(3);
    add_axiom_report(out, verify_dilation_axioms(homog, ns, tol, s + 11));

    VectorAlphaDilation vector_alpha;
    add_axiom_report(out, verify_dilation_axioms(vector_alpha, ns, tol, s + 12));

    return out;
}

SuiteResult run_modular_suite(const RunConfig& cfg) {
    SuiteResult out{"modular"};
    Rng rng(cfg.seed * 0x9e37 + 2);
    const double tol_roundtrip = 1e-8;

    // Worked constant: V = span_R{e1, i e1 + e2} in C^2.
    {
        Matrix b(2, 2);
        b << Complex(1, 0), Complex(0, 1), Complex(0, 0), Complex(1, 0);
        const StandardSubspace v(b);
        const ModularPair p = modular_objects(v);

        // Independent oracle on the raw basis: A = B conj(B)^{-1}, then
        // Delta = transpose(A) conj(A).
        const Matrix a_oracle = b * b.conjugate().inverse();
        const Matrix delta_oracle = a_oracle.transpose() * a_oracle.conjugate();
        out.add("worked-constant/delta", (p.delta - delta_oracle).norm(), 1e-12);

        Eigen::SelfAdjointEigenSolver<Matrix> es(p.delta);
        const double lo = 3.0 - 2.0 * std::sqrt(2.0);
        const double hi = 3.0 + 2.0 * std::sqrt(2.0);
        const double eig_err = std::max(std::abs(es.eigenvalues()(0) - lo),
                                        std::abs(es.eigenvalues()(1) - hi));
        out.add("worked-constant/eigenvalues", eig_err, 1e-12);
    }

    double phi_rt = 0.0, psi_rt = 0.0, inter_stand = 0.0, inter_hom = 0.0;
    double compl_invol = 0.0, compl_theta = 0.0;
    const std::vector<double> rs = {-1.0, std::exp(1.0), std::exp(-1.0), std::exp(1.0 / 3.0)};

    for (int t = 0; t < cfg.trials; ++t) {
        const int n = rng.uniform_int(2, std::min(cfg.n, 8));

        // Phi round trip through a random standard subspace.
        const StandardSubspace v = random_standard_subspace(rng, n);
        phi_rt = std::max(phi_rt, subspace_gap(v, standard_from_modular(modular_objects(v))));

        // Psi round trip through a random modular pair.
        const ModularPair p = random_modular_pair(rng, n);
        const ModularPair p2 = modular_of(graded_hom_of(p));
        psi_rt = std::max(psi_rt, (p.delta - p2.delta).norm() / (1.0 + p.delta.norm()));
        psi_rt = std::max(psi_rt, (p.j.matrix() - p2.j.matrix()).norm());

        // Bullet intertwining through Phi and Psi.
        const ModularPair q1 = random_modular_pair(rng, n);
        const ModularPair q2 = random_modular_pair(rng, n);
        const double r = rs[static_cast<std::size_t>(t) % rs.size()];
        const ModularPair qb = mod_bullet(q1, r, q2);
        inter_stand = std::max(
            inter_stand,
            subspace_gap(standard_from_modular(qb),
                         stand_bullet(standard_from_modular(q1), r, standard_from_modular(q2))));
        const GradedHom hb = hom_bullet(graded_hom_of(q1), r, graded_hom_of(q2));
        const GradedHom qb_hom = graded_hom_of(qb);
        inter_hom = std::max(inter_hom, (hb.a - qb_hom.a).norm() / (1.0 + hb.a.norm()));
        inter_hom = std::max(inter_hom, (hb.j.matrix() - qb_hom.j.matrix()).norm());

        // Symplectic complement: V' = J_V V and theta on Mod.
        const StandardSubspace vc = symplectic_complement(v);
        compl_invol = std::max(compl_invol, subspace_gap(vc, v.antilinear_image(modular_objects(v).j)));
        const ModularPair pc = modular_objects(vc);
        compl_theta = std::max(
            compl_theta,
            (pc.delta - hermitian_power(modular_objects(v).delta, -1.0)).norm() /
                (1.0 + pc.delta.norm()));
    }
    out.add("phi-round-trip", phi_rt, tol_roundtrip);
    out.add("psi-round-trip", psi_rt, tol_roundtrip);
    out.add("bullet-intertwining/stand", inter_stand, tol_roundtrip);
    out.add("bullet-intertwining/hom", inter_hom, tol_roundtrip);
    out.add("complement/JV-identity", compl_invol, tol_roundtrip);
    out.add("complement/theta-on-mod", compl_theta, tol_roundtrip);
    return out;
}

SuiteResult run_geodesic_suite(const RunConfig& cfg) {
    SuiteResult out{"geodesic"};
    Rng rng(cfg.seed * 0x9e37 + 3);
    const std::vector<double> ts = {-2.0, -1.0, -0.5, 0.0, 0.4, 1.0, 2.0};

    // Oeh form in SL2: gamma(t) = [[1,t],[0,1]] diag(1,-1), range in involutions.
    {
        GroupReflection g2(2);
        Eigen::MatrixXd x(2, 2), g(2, 2);
        x << 0, 1, 0, 0;
        g << 1, 0, 0, -1;
        const auto gamma = geodesic_from_one_param(x, g);
        const AxiomReport rep = verify_geodesic(g2, gamma, ts, 1e-10);
        out.add("oeh-sl2/morphism", rep.worst(), 1e-10);
    }

    // Random Oeh geodesics in GL3.
    {
        GroupReflection g3(3);
        double worst = 0.0;
        for (int k = 0; k < std::max(4, cfg.trials / 25); ++k) {
            Eigen::MatrixXd x = rng.real_matrix(3, 3, -0.6, 0.6);
            Eigen::MatrixXd g = rng.invertible_real_matrix(3);
            const auto gamma = geodesic_from_one_param(x, g);
            worst = std::max(worst, verify_geodesic(g3, gamma, ts, 1e-10).worst());
        }
        out.add("oeh-gl3/morphism", worst, 1e-10);
    }

    // Affine-line geodesic with the lambda = 1 dilation criterion.
    {
        AffineLineDilation line;
        Geodesic<Eigen::VectorXd> gamma;
        gamma.eval = [](double t) { return Eigen::VectorXd::Constant(1, 3.0 * t); };
        const AxiomReport rep = verify_geodesic(line, gamma, ts, 1e-10, 1.0);
        out.add("affine-line/dilation-criterion", rep.worst(), 1e-10);
    }

    // Standard-subspace geodesics: u-rel J_{gamma(t)} = U_t J_V.
    {
        double worst = 0.0;
        for (int k = 0; k < std::max(4, cfg.trials / 25); ++k) {
            const int n = rng.uniform_int(2, std::min(cfg.n, 6));
            const Conjugation j = random_conjugation(rng, n);
            const StandardSubspace v = standard_from_modular(random_modular_pair(rng, j));
            const Matrix h = random_j_real_hermitian(rng, j);
            const StandGeodesic geo = geodesic_standard(v, h);
            for (double t : {0.4, 1.0, -0.7}) {
                const Conjugation jt = modular_objects(geo.at(t)).j;
                const Matrix expected = geo.unitary(t) * j.matrix();
                worst = std::max(worst, (jt.matrix() - expected).norm() / (1.0 + expected.norm()));
            }
        }
        out.add("stand-geodesic/u-rel", worst, 1e-9);
    }

    // Dilation-invariant case with commuting W and U (alpha = 0): the
    // representation of R^2 x {±1}.
    {
        Matrix mj(2, 2);
        mj << 0, 1, 1, 0;
        const Conjugation j{Matrix(mj)};
        const double a = 1.0;
        Matrix delta = Matrix::Zero(2, 2);
        delta(0, 0) = std::exp(-2.0 * M_PI * a);
        delta(1, 1) = std::exp(2.0 * M_PI * a);
        const StandardSubspace v = standard_from_modular(ModularPair{delta, j});
        const Matrix h = 0.7 * Matrix::Identity(2, 2);
        const StandGeodesic geo = geodesic_standard(v, h);
        MatrixDilationSystem sys(geo);
        const GAlphaRep<MatrixDilationSystem> rep = dilation_rep_from_geodesic(sys, 1e-6, rng);
        out.add("dilation-rep/alpha-error", std::abs(rep.alpha), 1e-6);
        out.add("dilation-rep/homomorphism", rep.homomorphism_residual(rng, 60), 1e-9);
    }

    return out;
}

SuiteResult run_jordan_suite(const RunConfig& cfg) {
    SuiteResult out{"jordan"};
    for (const JordanAlgebra& alg : selected_algebras(cfg)) {
        Rng rng(cfg.seed * 0x9e37 + 5 + alg.dim());
        const JordanElement e = jordan_unit(alg);
        double jordan_identity = 0.0, p_ze = 0.0, p_sandwich = 0.0, spin_inverse = 0.0;
        double power_assoc = 0.0, l_symmetric = 0.0;
        bool cone_squares = true;

        for (int k = 0; k < cfg.axiom_samples; ++k) {
            const JordanElement x = random_element(alg, rng);
            const JordanElement y = random_element(alg, rng);
            const JordanElement x2 = jmul(x, x);

            jordan_identity = std::max(
                jordan_identity, jordan_distance(jmul(x, jmul(x2, y)), jmul(x2, jmul(x, y))));

            const JordanElement z = random_element(alg, rng);
            p_ze = std::max(p_ze,
                            (quad_P(z, e) * jordan_coords(y) - jordan_coords(jmul(z, y))).norm() /
                                (1.0 + jordan_coords(y).norm()));

            if (alg.kind() != JordanKind::Spin) {
                const Matrix m = x.matrix() * y.matrix() * x.matrix();
                const JordanElement sandwich(alg, Matrix(0.5 * (m + m.adjoint())));
                const RealVector via_p = quad_P(x) * jordan_coords(y);
                p_sandwich = std::max(
                    p_sandwich, (via_p - jordan_coords(sandwich)).norm() / (1.0 + via_p.norm()));
            } else {
                const RealVector& s = x.spin_data();
                const double q = s(0) * s(0) - s.tail(s.size() - 1).squaredNorm();
                if (std::abs(q) > 1e-6) {
                    RealVector inv = -s / q;
                    inv(0) = s(0) / q;
                    spin_inverse = std::max(
                        spin_inverse,
                        jordan_distance(jordan_inverse(x), JordanElement(alg, inv)));
                }
            }

            // power associativity shadow: P(x) x = x^3 both ways
            const RealVector x3a = quad_P(x) * jordan_coords(x);
            const RealVector x3b = jordan_coords(jmul(x2, x));
            power_assoc = std::max(power_assoc, (x3a - x3b).norm() / (1.0 + x3b.norm()));

            // L(x) symmetric for the trace form
            l_symmetric = std::max(l_symmetric,
                                   std::abs(trace_form(jmul(x, y), z) - trace_form(y, jmul(x, z))) /
                                       (1.0 + std::abs(trace_form(y, z))));

            if (k % 16 == 0) {
                const RealVector spec = spectrum(x);
                if (spec.cwiseAbs().minCoeff() > 0.05) cone_squares = cone_squares && in_open_cone(x2);
            }
        }

        out.add(alg.name() + "/jordan-identity", jordan_identity, 1e-10);
        out.add(alg.name() + "/P(z,e)=L(z)", p_ze, 1e-10);
        if (alg.kind() != JordanKind::Spin)
            out.add(alg.name() + "/P(x)y=xyx", p_sandwich, 1e-10);
        else
            out.add(alg.name() + "/spin-inverse", spin_inverse, 1e-10);
        out.add(alg.name() + "/power-assoc", power_assoc, 1e-10);
        out.add(alg.name() + "/L-trace-symmetric", l_symmetric, 1e-10);
        out.add(alg.name() + "/trace-form-positive",
                std::max(0.0, -trace_form_min_eigenvalue(alg)), 1e-10);
        out.add_flag(alg.name() + "/euclidean", is_euclidean(alg, 64, cfg.seed));
        out.add_flag(alg.name() + "/cone-squares", cone_squares);
    }
    return out;
}

SuiteResult run_semigroup_suite(const RunConfig& cfg) {
    SuiteResult out{"semigroup"};
    const double tol = 1e-8;
    const std::vector<JordanAlgebra> algebras = {JordanAlgebra(JordanKind::Spin, 3),
                                                 JordanAlgebra(JordanKind::SymReal, 2)};

    // Grading values of the three generator families.
    {
        const JordanAlgebra alg = algebras.front();
        const int d = alg.dim();
        out.add_flag("grading/translate",
                     grading(ConfWord::translate(jordan_unit(alg))) == 1);
        out.add_flag("grading/minus-id",
                     grading(ConfWord::structure(alg, -RealMatrix::Identity(d, d))) == -1);
        out.add_flag("grading/neg-inversion", grading(ConfWord::neg_inversion(alg)) == 1);
    }

    // Lie grading and the bracket identity [e, theta(u)] = 2 L(u).
    {
        Rng rng(cfg.seed * 0x9e37 + 11);
        double grade_res = 0.0;
        double bracket_res = 0.0;
        for (const JordanAlgebra& alg : algebras) {
            for (double r : {2.0, 1.0 / 3.0}) {
                LieTriple xi{random_element(alg, rng),
                             rng.real_matrix(alg.dim(), alg.dim(), -1.0, 1.0),
                             random_element(alg, rng)};
                grade_res = std::max(grade_res,
                                     lie_grade_check(xi, r, 40, 1e-8, rng.raw()).worst());
            }
            const JordanElement e = jordan_unit(alg);
            for (int k = 0; k < 10; ++k) {
                const JordanElement u = random_element(alg, rng);
                const VectorField const_e = [e](const JordanElement&) { return e; };
                const VectorField quad_u = [&u](const JordanElement& z) {
                    return jordan_from_coords(
                        z.algebra(), RealVector(-(quad_P(z) * jordan_coords(u))));
                };
                const JordanElement z = random_element(alg, rng);
                const JordanElement bracket = lie_bracket_eval(alg, const_e, quad_u, z);
                const JordanElement expected = 2.0 * jmul(u, z);
                bracket_res = std::max(bracket_res, jordan_distance(bracket, expected));
            }
        }
        out.add("lie/grade-scaling", grade_res, 1e-8);
        out.add("lie/bracket-e-theta-u", bracket_res, 1e-6);
    }

    // Koufany property run: every composed word compresses.
    {
        Rng rng(cfg.seed * 0x9e37 + 12);
        int failures = 0;
        for (int k = 0; k < cfg.koufany_words; ++k) {
            const JordanAlgebra& alg = algebras[static_cast<std::size_t>(k) % algebras.size()];
            const ConfWord w = random_koufany_word(alg, rng);
            if (!compresses_cone(w, cfg.budget, tol, rng.raw()).compresses) ++failures;
        }
        out.add_flag("koufany/all-compress", failures == 0,
                     std::to_string(failures) + " failures of " +
                         std::to_string(cfg.koufany_words));
    }

    // Membership landmarks and the rejected witness.
    {
        const JordanAlgebra alg = algebras.front();
        const JordanElement e = jordan_unit(alg);
        const int d = alg.dim();
        out.add_flag("compress/translate(+e)",
                     compresses_cone(ConfWord::translate(e), cfg.budget, tol).compresses);
        const CompressionResult neg =
            compresses_cone(ConfWord::translate(-e), cfg.budget, tol);
        out.add_flag("compress/translate(-e)-rejected",
                     !neg.compresses && neg.witness.has_value(),
                     neg.witness ? "witness found after " + std::to_string(neg.samples) +
                                       " samples"
                                 : "no witness");
        const ConfWord doubling = ConfWord::structure(alg, 2.0 * RealMatrix::Identity(d, d));
        out.add_flag("compress/structure(2id)-and-inverse",
                     compresses_cone(doubling, cfg.budget, tol).compresses &&
                         compresses_cone(doubling.inverse(), cfg.budget, tol).compresses);
    }

    // Order: reflexivity, agreement of the two decision paths, invariance,
    // antitone conjugation, and semigroup closure.
    {
        Rng rng(cfg.seed * 0x9e37 + 13);
        bool reflexive = true, agree = true, invariant = true, antitone = true, closure = true;
        const int pairs = std::max(10, cfg.trials);
        for (int k = 0; k < pairs; ++k) {
            const JordanAlgebra& alg = algebras[static_cast<std::size_t>(k) % algebras.size()];
            const ConfWord g1 = random_koufany_word(alg, rng);
            const ConfWord g2 = random_koufany_word(alg, rng);

            if (k < 10) reflexive = reflexive && order_leq(g1, g1, cfg.budget / 2, tol, rng.raw());

            // related pair: g2 * g1 <= g2 must hold with both decision paths
            const ConfWord composed = g2 * g1;
            const OrderDecision related =
                order_leq_diagnostic(composed, g2, cfg.budget / 2, tol, rng.raw());
            agree = agree && related.agree() && related.value();
            const OrderDecision unrelated =
                order_leq_diagnostic(g1, g2, cfg.budget / 2, tol, rng.raw());
            agree = agree && unrelated.agree();

            closure = closure && compresses_cone(g1 * g2, cfg.budget / 2, tol, rng.raw()).compresses;

            if (k < 20) {
                const ConfWord mover =
                    ConfWord::structure(alg, random_cone_automorphism(alg, rng));
                invariant = invariant &&
                            order_leq(mover * composed, mover * g2, cfg.budget / 2, tol,
                                      rng.raw()) == true &&
                            order_leq(mover * g1, mover * g2, cfg.budget / 2, tol, rng.raw()) ==
                                unrelated.value();
                antitone = antitone && order_leq(tau_conj(g2), tau_conj(composed),
                                                 cfg.budget / 2, tol, rng.raw());
            }
        }
        out.add_flag("order/reflexive", reflexive);
        out.add_flag("order/two-path-agreement", agree);
        out.add_flag("order/g1-invariance", invariant);
        out.add_flag("order/antitone-under-tau", antitone);
        out.add_flag("semigroup/closure", closure);
    }

    return out;
}

SuiteResult run_bgl_suite(const RunConfig& cfg) {
    SuiteResult out{"bgl"};
    Rng rng(cfg.seed * 0x9e37 + 17);
    const int n_max = std::min(cfg.n, 6);

    double equiv = 0.0;
    const int trials = std::max(20, std::min(cfg.trials, 100));
    for (int k = 0; k < trials; ++k) {
        const int n = rng.uniform_int(2, n_max);
        const Conjugation sigma = random_conjugation(rng, n);
        Matrix y = rng.complex_matrix(n, n, -0.25, 0.25);
        Matrix x = 0.5 * (y - y.adjoint());
        x = 0.5 * (x + sigma.sandwich(x));
        const GradedHomIntoG gamma{x, GradedOperator{sigma.matrix(), true}};
        const GradedGroupRep rep =
            (k % 2 == 0) ? GradedGroupRep::identity_rep(n) : GradedGroupRep::doubled_rep(n);

        GradedOperator g{rng.unitary(n), false};
        if (k % 3 == 0) {
            // odd conjugator: a conjugation composed with a unitary
            g = GradedOperator{random_conjugation(rng, n).matrix(), true}
                    .compose(GradedOperator{rng.unitary(n), false});
        }
        equiv = std::max(equiv, bgl_equivariance_gap(rep, gamma, g));
    }
    out.add("bgl/equivariance", equiv, 1e-8);

    // Finite-dimensional semigroup: S_V is the stabilizer.
    {
        bool stabilizer_ok = true;
        for (int k = 0; k < 20; ++k) {
            const int n = rng.uniform_int(2, n_max);
            const Conjugation sigma = random_conjugation(rng, n);
            Matrix y = rng.complex_matrix(n, n, -0.25, 0.25);
            Matrix x = 0.5 * (y - y.adjoint());
            x = 0.5 * (x + sigma.sandwich(x));
            const GradedHomIntoG gamma{x, GradedOperator{sigma.matrix(), true}};
            const GradedGroupRep rep = GradedGroupRep::identity_rep(n);
            const StandardSubspace v = bgl_map(rep, gamma);

            // Modular flow stabilizes; a generic unitary does not; membership
            // is inverse-symmetric (Lemma 3.2 shadow: inclusion = equality).
            const ModularPair p = modular_objects(v);
            const GradedOperator flow{p.delta_power_it(0.37), false};
            const GradedOperator generic{rng.unitary(n), false};
            stabilizer_ok = stabilizer_ok && semigroup_membership(rep, flow, v) &&
                            semigroup_membership(rep, flow.inverse(), v);
            const bool member = semigroup_membership(rep, generic, v);
            const bool member_inv = semigroup_membership(rep, generic.inverse(), v);
            stabilizer_ok = stabilizer_ok && (member == member_inv);
        }
        out.add_flag("bgl/semigroup-is-stabilizer", stabilizer_ok);
    }

    return out;
}

SuiteResult run_affine_suite(const RunConfig& cfg) {
    SuiteResult out{"affine"};
    const GridSpec spec(cfg.grid_half_width, cfg.grid_size);

    // Borchers relation on a Gaussian bump.
    {
        const GridFunction f = make_v_vector(spec, 1.0, -3.0);
        double worst = 0.0;
        for (double b : {0.5, 1.0}) {
            const double s = 0.3;
            const GridFunction lhs = dilate_w(s, translate_u(b, dilate_w(-s, f)));
            const GridFunction rhs = translate_u(std::exp(s) * b, f);
            worst = std::max(worst, (lhs - rhs).norm());
        }
        out.add("borchers-residual", worst, 1e-9);
    }

    // Tomita involution on band-limited vectors.
    {
        const GridFunction f = make_v_vector(spec, 0.7, -2.5);
        const GridFunction s2 = tomita_apply(tomita_apply(f));
        out.add("tomita/S^2=id", (s2 - f).norm(), 1e-9);
        out.add("tomita/V-fixed", (tomita_apply(f) - f).norm(), 1e-9);
    }

    // Theorem 3.1 at desk scale.
    {
        std::vector<GridFunction> vs;
        vs.push_back(make_v_vector(spec, 0.5, -2.0));
        vs.push_back(make_v_vector(spec, 0.5, -3.0));
        vs.push_back(make_v_vector(spec, 1.0, -4.0));
        vs.push_back(make_v_vector(spec, 2.0, -10.0));
        const MonotonicityReport report =
            monotonicity_experiment({0.0, 0.1, 0.5, 1.0, -1.0}, vs, 1e-6);
        double inside_worst = 0.0;
        double violation = 0.0;
        for (const auto& pt : report.points) {
            if (pt.b >= 0.0)
                inside_worst = std::max(inside_worst, pt.max_distance);
            else
                violation = std::max(violation, pt.max_distance);
        }
        out.add("monotone/U_b-inside-V (b >= 0)", inside_worst, 1e-6);
        out.add_flag("monotone/violation (b = -1)", violation >= 1e-3,
                     "distance " + std::to_string(violation));
        out.add("monotone/alpha-fit", std::abs(report.fitted_alpha - 1.0), 1e-6);
        out.add_flag("monotone/orientation", report.orientation_matches &&
                                                 kPositiveTranslationsCompress);
    }

    // Positive energy: <f, e^theta f> >= 0 for arbitrary grid functions.
    {
        Rng rng(cfg.seed * 0x9e37 + 23);
        double worst = 0.0;
        for (int k = 0; k < 50; ++k) {
            Vector vals(spec.size);
            for (int i = 0; i < spec.size; ++i) vals(i) = rng.complex_normal();
            const GridFunction f(spec, vals);
            const Complex q = spec.spacing() *
                              (f.values().adjoint() * energy_generator(f).values())(0);
            worst = std::max(worst, -q.real() / (f.norm() * f.norm()));
        }
        out.add("positive-energy", std::max(0.0, worst), 0.0);
    }

    // Group law of Aff(R) on band-limited vectors.
    {
        Rng rng(cfg.seed * 0x9e37 + 29);
        const GridDilationSystem sys(spec);
        GAlphaRep<GridDilationSystem> rep{&sys, 1.0};
        out.add("affine-group-law", rep.homomorphism_residual(rng, 40), 1e-8);
    }

    return out;
}

SuiteResult run_suite(const std::string& name, const RunConfig& cfg) {
    if (name == "axioms") return run_axioms_suite(cfg);
    if (name == "modular") return run_modular_suite(cfg);
    if (name == "geodesic") return run_geodesic_suite(cfg);
    if (name == "jordan") return run_jordan_suite(cfg);
    if (name == "semigroup") return run_semigroup_suite(cfg);
    if (name == "bgl") return run_bgl_suite(cfg);
    if (name == "affine") return run_affine_suite(cfg);
    throw ConfigError("unknown suite: " + name);
}

std::vector<SuiteResult> run_all_suites(const RunConfig& cfg) {
    const std::vector<std::string> names = {"axioms",    "modular", "geodesic", "jordan",
                                            "semigroup", "bgl",     "affine"};
    std::vector<std::future<SuiteResult>> futures;
    futures.reserve(names.size());
    for (const auto& name : names)
        futures.push_back(
            std::async(std::launch::async, [name, &cfg]() { return run_suite(name, cfg); }));
    std::vector<SuiteResult> results;
    results.reserve(names.size());
    for (auto& f : futures) results.push_back(f.get());
    return results;
}

nlohmann::ordered_json report_json(const std::vector<SuiteResult>& results,
                                   const RunConfig& cfg) {
    nlohmann::ordered_json root;
    root["schema"] = 1;
    root["seed"] = cfg.seed;
    root["config"] = {{"trials", cfg.trials},
                      {"n", cfg.n},
                      {"axiom_samples", cfg.axiom_samples},
                      {"budget", cfg.budget},
                      {"koufany_words", cfg.koufany_words},
                      {"grid_size", cfg.grid_size},
                      {"grid_half_width", cfg.grid_half_width},
                      {"algebra", cfg.algebra}};
    if (cfg.tol) root["config"]["tol"] = *cfg.tol;
    bool all_pass = true;
    nlohmann::ordered_json suites = nlohmann::ordered_json::array();
    for (const auto& result : results) {
        nlohmann::ordered_json s;
        s["suite"] = result.suite;
        nlohmann::ordered_json checks = nlohmann::ordered_json::array();
        for (const auto& c : result.checks) {
            nlohmann::ordered_json jc;
            jc["name"] = c.name;
            jc["residual"] = c.residual;
            jc["threshold"] = c.threshold;
            jc["pass"] = c.pass;
            if (!c.note.empty()) jc["note"] = c.note;
            checks.push_back(jc);
        }
        s["checks"] = checks;
        s["pass"] = result.pass();
        all_pass = all_pass && result.pass();
        suites.push_back(s);
    }
    root["suites"] = suites;
    root["pass"] = all_pass;
    return root;
}

} // namespace stand
