#pragma once

#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "stand/jordan.hpp"
#include "stand/report.hpp"

namespace stand {

/// Generators of the causal/conformal group of a euclidean Jordan algebra:
/// translations, structure maps (linear with T(E_+) = ±E_+), and the
/// negative inversion x -> -x^{-1}.
struct Translate {
    JordanElement b;
};
struct StructureMap {
    RealMatrix t;
};
struct NegInversion {};

using ConfGenerator = std::variant<Translate, StructureMap, NegInversion>;

/// Word in the conformal generators, leftmost factor outermost; the action
/// is a partial (birational) map on E. Partiality is encoded by the optional
/// return of act().
class ConfWord {
public:
    explicit ConfWord(JordanAlgebra alg) : alg_(alg) {}

    static ConfWord identity(const JordanAlgebra& alg) { return ConfWord(alg); }
    static ConfWord translate(const JordanElement& b);
    static ConfWord structure(const JordanAlgebra& alg, const RealMatrix& t);
    static ConfWord neg_inversion(const JordanAlgebra& alg);

    const JordanAlgebra& algebra() const { return alg_; }
    const std::vector<ConfGenerator>& generators() const { return gens_; }
    std::size_t length() const { return gens_.size(); }

    /// Composition: (g1 * g2)(x) = g1(g2(x)).
    ConfWord operator*(const ConfWord& other) const;
    ConfWord inverse() const;

    /// Apply the word, innermost generator first; empty when an inversion
    /// hits a singular element.
    std::optional<JordanElement> act(const JordanElement& x) const;

    /// Chain-rule differential at x (d(-j_E)(z) = P(z)^{-1}); throws
    /// PointOutsideDomain when the orbit of x leaves the domain.
    RealMatrix differential(const JordanElement& x) const;

private:
    JordanAlgebra alg_;
    std::vector<ConfGenerator> gens_;
};

/// Grading of a word: +1 if dg(x) maps E_+ to E_+, -1 if to -E_+. Checked at
/// several sample points rather than assumed.
int grading(const ConfWord& g);

/// gamma(r) = r id_E as a word.
ConfWord gamma_scalar(const JordanAlgebra& alg, double r);

/// The quadratic flow exp(t X_c) for X_c(z) = -P(z)c, as the word
/// (-j_E) Translate(-t c) (-j_E); acts by x -> (x^{-1} + t c)^{-1}.
ConfWord exp_quadratic(const JordanElement& c, double t);

/// tau(g) = gamma(-1) g gamma(-1); satisfies tau(g)(x) = -g(-x).
ConfWord tau_conj(const ConfWord& g);

/// Extensional word equality on a fixed seeded set of cone points.
bool word_equal(const ConfWord& g1, const ConfWord& g2, double tol = 1e-8,
                std::uint64_t seed = 0x5eed, int n_points = 64);

/// Graded Lie algebra element (u, T, v) in g_1 ⊕ g_0 ⊕ g_{-1}, acting as the
/// vector field z -> u + T z - P(z) v.
struct LieTriple {
    JordanElement u;
    RealMatrix t;
    JordanElement v;
};

LieTriple scalar_h(const JordanAlgebra& alg);
LieTriple lie_translation(const JordanElement& u);
LieTriple lie_quadratic(const JordanElement& v);

JordanElement vector_field_eval(const LieTriple& xi, const JordanElement& z);

/// Ad_{gamma(r)} on a triple scales the graded parts by (r, 1, r^{-1}).
LieTriple ad_gamma_scalar(const LieTriple& xi, double r);

/// Numerical check that the pushforward of the triple's field through
/// gamma(r) matches the graded scaling.
AxiomReport lie_grade_check(const LieTriple& xi, double r, int samples, double tol,
                            std::uint64_t seed);

using VectorField = std::function<JordanElement(const JordanElement&)>;

/// Pushforward g_* X (z) = dg(g^{-1} z) X(g^{-1} z).
JordanElement pushforward_eval(const ConfWord& g, const VectorField& x, const JordanElement& z);

/// Lie bracket [X, Y](z) = dX(z) Y(z) - dY(z) X(z), evaluated by central
/// finite differences with one step of Richardson extrapolation.
JordanElement lie_bracket_eval(const JordanAlgebra& alg, const VectorField& x,
                               const VectorField& y, const JordanElement& z,
                               double h = 1e-4);

} // namespace stand
