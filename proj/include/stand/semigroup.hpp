#pragma once

#include <optional>

#include "stand/conformal.hpp"

namespace stand {

/// Witness for a failed compression: a cone point and where it went.
struct CompressionWitness {
    JordanElement point;
    std::optional<JordanElement> image;  // empty when the word was undefined
    double margin = 0.0;                 // min spectrum of the image (when defined)
};

struct CompressionResult {
    bool compresses = true;
    std::size_t samples = 0;
    std::optional<CompressionWitness> witness;
};

/// Monte Carlo membership test for S_{E_+} = {g in G_1 : g E_+ ⊆ E_+}:
/// samples cone points with log-uniform spectral radii in [1e-3, 1e3]
/// (one in five near the boundary, spectral gap 1e-4) and requires every
/// image to be defined and inside the closed cone with margin >= -tol.
/// One-sided: a `true` answer is a sampling verdict, `false` comes with a
/// witness. Throws NotInG1 when grading(g) = -1.
CompressionResult compresses_cone(const ConfWord& g, int budget, double tol,
                                  std::uint64_t seed = 0xc0de);

/// Koufany product Translate(c1) ∘ a ∘ exp_quadratic(c2, 1); requires c1, c2
/// in the closed cone and a cone-preserving.
ConfWord koufany_compose(const JordanElement& c1, const RealMatrix& a, const JordanElement& c2);

/// Order on cone images: g1 <= g2 iff g2^{-1} g1 compresses E_+; the
/// direct sampled inclusion g1 E_+ ⊆ g2 E_+ is evaluated by an independent
/// path and cross-checked.
struct OrderDecision {
    bool by_word = false;       // compresses_cone(g2^{-1} g1)
    bool by_inclusion = false;  // sampled g1 E_+ ⊆ g2 E_+
    bool value() const { return by_word && by_inclusion; }
    bool agree() const { return by_word == by_inclusion; }
};

OrderDecision order_leq_diagnostic(const ConfWord& g1, const ConfWord& g2, int budget,
                                   double tol, std::uint64_t seed = 0xc0de);

bool order_leq(const ConfWord& g1, const ConfWord& g2, int budget, double tol,
               std::uint64_t seed = 0xc0de);

/// Coset point g H_1 of the ordered symmetric space, identified with its
/// cone image.
class OrderedCosetPoint {
public:
    explicit OrderedCosetPoint(ConfWord rep) : rep_(std::move(rep)) {}

    const ConfWord& representative() const { return rep_; }

    /// Cone images agree iff both order relations hold.
    bool same_image(const OrderedCosetPoint& other, int budget, double tol) const {
        return order_leq(rep_, other.rep_, budget, tol) &&
               order_leq(other.rep_, rep_, budget, tol);
    }

private:
    ConfWord rep_;
};

/// Rank-one (E = R) triangular factorization of a compression: the word's
/// Moebius matrix [[a,b],[c,d]] is decomposed as
/// [[1,c1],[0,1]] [[lam,0],[0,1/lam]] [[1,0],[c2,1]] with c1, c2 >= 0 and
/// lam > 0. Returns nullopt when the word does not compress (0, inf).
struct RankOneFactorization {
    double c1 = 0.0;      // exp(C_+) factor: translation by c1
    double scale = 1.0;   // Aut(E_+) factor: x -> scale * x
    double c2 = 0.0;      // exp(theta(C_+)) factor: x -> (x^{-1} + c2)^{-1}
};

/// Moebius matrix of a rank-one word (det normalized to 1, d >= 0).
Eigen::Matrix2d rank_one_matrix(const ConfWord& g);

std::optional<RankOneFactorization> rank_one_factorize(const ConfWord& g, double tol = 1e-9);

} // namespace stand
