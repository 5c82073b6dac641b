#include "stand/semigroup.hpp"

namespace stand {

namespace {

JordanElement sample_cone_point(const JordanAlgebra& alg, Rng& rng, bool near_boundary) {
    // log-uniform spectral radius over six decades
    const double radius = std::pow(10.0, rng.uniform(-3.0, 3.0));
    return random_cone_element(alg, rng, radius, near_boundary, 1e-4);
}

} // namespace

CompressionResult compresses_cone(const ConfWord& g, int budget, double tol,
                                  std::uint64_t seed) {
    if (grading(g) != 1) throw NotInG1("compression test requires grading +1");
    Rng rng(seed);
    CompressionResult out;
    const JordanAlgebra& alg = g.algebra();
    for (int k = 0; k < budget; ++k) {
        const bool near_boundary = (k % 5 == 4);
        JordanElement x = sample_cone_point(alg, rng, near_boundary);
        ++out.samples;
        auto img = g.act(x);
        if (!img) {
            out.compresses = false;
            out.witness = CompressionWitness{x, std::nullopt, 0.0};
            return out;
        }
        const double margin = spectrum(*img).minCoeff();
        if (margin < -tol * (1.0 + img->norm())) {
            out.compresses = false;
            out.witness = CompressionWitness{x, img, margin};
            return out;
        }
    }
    return out;
}

ConfWord koufany_compose(const JordanElement& c1, const RealMatrix& a, const JordanElement& c2) {
    const JordanAlgebra& alg = c1.algebra();
    if (!in_closed_cone(c1, 1e-12) || !in_closed_cone(c2, 1e-12))
        throw ConePreconditionViolated("koufany factors must lie in the closed cone");
    Rng probe(0xa07);
    for (int k = 0; k < 8; ++k) {
        JordanElement x = k == 0 ? jordan_unit(alg)
                                 : random_cone_element(alg, probe, std::pow(10.0, probe.uniform(-1.0, 1.0)));
        if (!in_open_cone(jordan_from_coords(alg, RealVector(a * jordan_coords(x)))))
            throw ConePreconditionViolated("middle factor must preserve E_+");
    }
    return ConfWord::translate(c1) * ConfWord::structure(alg, a) * exp_quadratic(c2, 1.0);
}

OrderDecision order_leq_diagnostic(const ConfWord& g1, const ConfWord& g2, int budget,
                                   double tol, std::uint64_t seed) {
    if (grading(g1) != 1 || grading(g2) != 1)
        throw NotInG1("order is defined on the causal group only");
    OrderDecision out;
    const ConfWord rel = g2.inverse() * g1;
    out.by_word = compresses_cone(rel, budget, tol, seed).compresses;

    // Independent path: push samples through g1, then through g2^{-1}.
    Rng rng(seed ^ 0x517e);
    const ConfWord g2inv = g2.inverse();
    out.by_inclusion = true;
    for (int k = 0; k < budget / 2 && out.by_inclusion; ++k) {
        JordanElement x = sample_cone_point(g1.algebra(), rng, k % 5 == 4);
        auto y = g1.act(x);
        if (!y) { out.by_inclusion = false; break; }
        auto z = g2inv.act(*y);
        if (!z || !in_closed_cone(*z, tol)) out.by_inclusion = false;
    }
    return out;
}

bool order_leq(const ConfWord& g1, const ConfWord& g2, int budget, double tol,
               std::uint64_t seed) {
    return order_leq_diagnostic(g1, g2, budget, tol, seed).value();
}

Eigen::Matrix2d rank_one_matrix(const ConfWord& g) {
    if (g.algebra().dim() != 1)
        throw AlgebraMismatch("Moebius matrix is defined for rank-one words only");
    Eigen::Matrix2d m = Eigen::Matrix2d::Identity();
    for (const auto& gen : g.generators()) {
        Eigen::Matrix2d f;
        if (const auto* tr = std::get_if<Translate>(&gen)) {
            f << 1.0, jordan_coords(tr->b)(0), 0.0, 1.0;
        } else if (const auto* st = std::get_if<StructureMap>(&gen)) {
            f << st->t(0, 0), 0.0, 0.0, 1.0;
        } else {
            f << 0.0, -1.0, 1.0, 0.0;  // x -> -1/x
        }
        m = m * f;
    }
    const double det = m.determinant();
    if (det <= 0.0) {
        // odd words flip orientation; normalize what we can
        m /= std::sqrt(std::abs(det));
    } else {
        m /= std::sqrt(det);
    }
    if (m(1, 1) < 0.0) m = -m;
    return m;
}

std::optional<RankOneFactorization> rank_one_factorize(const ConfWord& g, double tol) {
    Eigen::Matrix2d m = rank_one_matrix(g);
    if (std::abs(m.determinant() - 1.0) > 1e-9) return std::nullopt;
    const double d = m(1, 1);
    if (d <= tol) return std::nullopt;
    const double c1 = m(0, 1) / d;
    const double c2 = m(1, 0) / d;
    if (c1 < -tol || c2 < -tol) return std::nullopt;
    RankOneFactorization f;
    f.c1 = std::max(0.0, c1);
    f.c2 = std::max(0.0, c2);
    f.scale = 1.0 / (d * d);  // [[lam,0],[0,1/lam]] acts by lam^2, lam = 1/d
    return f;
}

} // namespace stand
