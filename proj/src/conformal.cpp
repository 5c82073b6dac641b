#include "stand/conformal.hpp"

namespace stand {

namespace {

std::optional<JordanElement> apply_generator(const ConfGenerator& gen, const JordanElement& x) {
    if (const auto* tr = std::get_if<Translate>(&gen)) return x + tr->b;
    if (const auto* st = std::get_if<StructureMap>(&gen))
        return jordan_from_coords(x.algebra(), st->t * jordan_coords(x));
    try {
        return -jordan_inverse(x);
    } catch (const SingularElement&) {
        return std::nullopt;
    }
}

RealMatrix generator_differential(const ConfGenerator& gen, const JordanElement& x) {
    const int d = x.algebra().dim();
    if (std::holds_alternative<Translate>(gen)) return RealMatrix::Identity(d, d);
    if (const auto* st = std::get_if<StructureMap>(&gen)) return st->t;
    return quad_P(x).inverse();  // d(-j_E)(x) = P(x)^{-1}
}

} // namespace

ConfWord ConfWord::translate(const JordanElement& b) {
    ConfWord w(b.algebra());
    w.gens_.push_back(Translate{b});
    return w;
}

ConfWord ConfWord::structure(const JordanAlgebra& alg, const RealMatrix& t) {
    if (t.rows() != alg.dim() || std::abs(t.determinant()) < 1e-12)
        throw Error("structure map must be an invertible dim x dim matrix");
    ConfWord w(alg);
    w.gens_.push_back(StructureMap{t});
    return w;
}

ConfWord ConfWord::neg_inversion(const JordanAlgebra& alg) {
    ConfWord w(alg);
    w.gens_.push_back(NegInversion{});
    return w;
}

ConfWord ConfWord::operator*(const ConfWord& other) const {
    if (!(alg_ == other.alg_)) throw AlgebraMismatch("words over different algebras");
    ConfWord w(alg_);
    w.gens_ = gens_;
    w.gens_.insert(w.gens_.end(), other.gens_.begin(), other.gens_.end());
    return w;
}

ConfWord ConfWord::inverse() const {
    ConfWord w(alg_);
    for (auto it = gens_.rbegin(); it != gens_.rend(); ++it) {
        if (const auto* tr = std::get_if<Translate>(&*it))
            w.gens_.push_back(Translate{-tr->b});
        else if (const auto* st = std::get_if<StructureMap>(&*it))
            w.gens_.push_back(StructureMap{st->t.inverse()});
        else
            w.gens_.push_back(NegInversion{});  // -j_E is an involution
    }
    return w;
}

std::optional<JordanElement> ConfWord::act(const JordanElement& x) const {
    JordanElement z = x;
    for (auto it = gens_.rbegin(); it != gens_.rend(); ++it) {
        auto next = apply_generator(*it, z);
        if (!next) return std::nullopt;
        z = *next;
    }
    return z;
}

RealMatrix ConfWord::differential(const JordanElement& x) const {
    const int d = alg_.dim();
    RealMatrix acc = RealMatrix::Identity(d, d);
    JordanElement z = x;
    for (auto it = gens_.rbegin(); it != gens_.rend(); ++it) {
        acc = generator_differential(*it, z) * acc;
        auto next = apply_generator(*it, z);
        if (!next) throw PointOutsideDomain("word is undefined at the given point");
        z = *next;
    }
    return acc;
}

int grading(const ConfWord& g) {
    const JordanAlgebra& alg = g.algebra();
    const JordanElement e = jordan_unit(alg);
    int value = 0;
    int decided = 0;
    for (double scale : {1.0, 0.5, 1.7}) {
        JordanElement x = scale * e;
        try {
            RealMatrix d = g.differential(x);
            JordanElement img = jordan_from_coords(alg, RealMatrix(d) * jordan_coords(e));
            int v = 0;
            if (in_open_cone(img)) v = 1;
            else if (in_open_cone(-img)) v = -1;
            else continue;
            if (value != 0 && v != value)
                throw Error("grading is not constant across sample points");
            value = v;
            ++decided;
        } catch (const PointOutsideDomain&) {
            continue;
        }
    }
    if (decided == 0) throw PointOutsideDomain("no sample point in the domain of the word");
    return value;
}

ConfWord gamma_scalar(const JordanAlgebra& alg, double r) {
    if (r == 0.0) throw Error("gamma_scalar requires r != 0");
    if (r == 1.0) return ConfWord::identity(alg);
    return ConfWord::structure(alg, r * RealMatrix::Identity(alg.dim(), alg.dim()));
}

ConfWord exp_quadratic(const JordanElement& c, double t) {
    const JordanAlgebra& alg = c.algebra();
    if (t == 0.0 || c.norm() == 0.0) return ConfWord::identity(alg);
    return ConfWord::neg_inversion(alg) * ConfWord::translate(-(t * c)) *
           ConfWord::neg_inversion(alg);
}

ConfWord tau_conj(const ConfWord& g) {
    const ConfWord m = gamma_scalar(g.algebra(), -1.0);
    return m * g * m;
}

bool word_equal(const ConfWord& g1, const ConfWord& g2, double tol, std::uint64_t seed,
                int n_points) {
    if (!(g1.algebra() == g2.algebra())) return false;
    Rng rng(seed);
    for (int k = 0; k < n_points; ++k) {
        const double radius = std::exp(rng.uniform(-1.5, 1.5));
        JordanElement x = random_cone_element(g1.algebra(), rng, radius);
        auto a = g1.act(x);
        auto b = g2.act(x);
        if (a.has_value() != b.has_value()) return false;
        if (a && jordan_distance(*a, *b) > tol) return false;
    }
    return true;
}

LieTriple scalar_h(const JordanAlgebra& alg) {
    const int d = alg.dim();
    return {jordan_zero(alg), RealMatrix::Identity(d, d), jordan_zero(alg)};
}

LieTriple lie_translation(const JordanElement& u) {
    const int d = u.algebra().dim();
    return {u, RealMatrix::Zero(d, d), jordan_zero(u.algebra())};
}

LieTriple lie_quadratic(const JordanElement& v) {
    const int d = v.algebra().dim();
    return {jordan_zero(v.algebra()), RealMatrix::Zero(d, d), v};
}

JordanElement vector_field_eval(const LieTriple& xi, const JordanElement& z) {
    const JordanAlgebra& alg = z.algebra();
    JordanElement linear = jordan_from_coords(alg, xi.t * jordan_coords(z));
    JordanElement quad = jordan_from_coords(alg, quad_P(z) * jordan_coords(xi.v));
    return xi.u + linear - quad;
}

LieTriple ad_gamma_scalar(const LieTriple& xi, double r) {
    if (r == 0.0) throw Error("scaling parameter must be nonzero");
    return {r * xi.u, xi.t, (1.0 / r) * xi.v};
}

AxiomReport lie_grade_check(const LieTriple& xi, double r, int samples, double tol,
                            std::uint64_t seed) {
    AxiomReport report;
    report.instance = "lie-grade(r=" + std::to_string(r) + ")";
    report.tol = tol;
    const JordanAlgebra alg = xi.u.algebra();
    const ConfWord g = gamma_scalar(alg, r);
    const LieTriple scaled = ad_gamma_scalar(xi, r);
    const VectorField field = [&xi](const JordanElement& z) { return vector_field_eval(xi, z); };
    Rng rng(seed);
    for (int k = 0; k < samples; ++k) {
        JordanElement z = random_element(alg, rng);
        JordanElement push = pushforward_eval(g, field, z);
        report.record("Ad_gamma(r) grade scaling",
                      jordan_distance(push, vector_field_eval(scaled, z)));
    }
    return report;
}

JordanElement pushforward_eval(const ConfWord& g, const VectorField& x, const JordanElement& z) {
    auto pre = g.inverse().act(z);
    if (!pre) throw PointOutsideDomain("pushforward undefined at the given point");
    RealMatrix d = g.differential(*pre);
    return jordan_from_coords(z.algebra(), d * jordan_coords(x(*pre)));
}

JordanElement lie_bracket_eval(const JordanAlgebra& /*alg*/, const VectorField& x,
                               const VectorField& y, const JordanElement& z, double h) {
    auto directional = [](const VectorField& f, const JordanElement& at,
                          const JordanElement& dir, double step) {
        // central difference with one Richardson step
        auto central = [&](double s) {
            return (1.0 / (2.0 * s)) * (f(at + s * dir) - f(at - s * dir));
        };
        JordanElement coarse = central(step);
        JordanElement fine = central(step / 2.0);
        return (4.0 / 3.0) * fine - (1.0 / 3.0) * coarse;
    };
    JordanElement dx_y = directional(x, z, y(z), h);
    JordanElement dy_x = directional(y, z, x(z), h);
    return dx_y - dy_x;
}

} // namespace stand
