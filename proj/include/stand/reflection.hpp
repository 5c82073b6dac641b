#pragma once

#include <concepts>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "stand/errors.hpp"
#include "stand/report.hpp"
#include "stand/rng.hpp"

namespace stand {

/// An instance of a reflection space: carrier operations plus preconditions.
/// The harness owns the laws; instances own the formulas. All instance
/// distances are relative (scaled by the operand norms), so the axiom
/// tolerances are scale-free.
template <class M>
concept ReflectionInstance = requires(const M m, const typename M::Point& x,
                                      const typename M::Point& y, Rng& rng) {
    { m.name() } -> std::convertible_to<std::string>;
    { m.product(x, y) } -> std::convertible_to<typename M::Point>;
    { m.distance(x, y) } -> std::convertible_to<double>;
    { m.sample(rng) } -> std::convertible_to<typename M::Point>;
};

template <class M>
concept DilationInstance = ReflectionInstance<M> &&
    requires(const M m, const typename M::Point& x, double r, const typename M::Point& y) {
        { m.dilate(x, r, y) } -> std::convertible_to<typename M::Point>;
    };

template <ReflectionInstance M>
typename M::Point reflect(const M& m, const typename M::Point& x, const typename M::Point& y) {
    return m.product(x, y);
}

template <DilationInstance M>
typename M::Point dilate(const M& m, const typename M::Point& x, double r,
                         const typename M::Point& y) {
    if (r == 0.0) throw NoDilation("dilation parameter must be nonzero");
    return m.dilate(x, r, y);
}

/// Powers with respect to a base point e: x^0 = e, x^1 = x,
/// x^{n+2} = x • (e • x^n); negative powers are powers of the inverse point
/// e • x.
template <ReflectionInstance M>
typename M::Point power(const M& m, const typename M::Point& e, const typename M::Point& x, int n) {
    if (n < 0) return power(m, e, m.product(e, x), -n);
    if (n == 0) return e;
    if (n == 1) return x;
    return m.product(x, m.product(e, power(m, e, x, n - 2)));
}

/// Geodesic R -> M, optionally tagged with its one-parameter-group
/// provenance when built in the form eta(t) * g.
template <class PointT>
struct Geodesic {
    using Point = PointT;
    std::function<Point(double)> eval;

    struct Provenance {
        Point generator;
        Point offset;
    };
    std::optional<Provenance> provenance;

    Point operator()(double t) const { return eval(t); }
};

/// Residuals of (S1)-(S3) over n_samples triples, plus the power identity
/// x^n • x^m = x^{2n-m} for n, m in [-4, 4]. Instance precondition failures
/// are recorded, not fatal.
template <ReflectionInstance M>
AxiomReport verify_reflection_axioms(const M& m, int n_samples, double tol, std::uint64_t seed) {
    AxiomReport report;
    report.instance = m.name();
    report.tol = tol;
    Rng rng(seed);
    std::size_t fixed_points = 0;
    std::size_t fixed_point_trials = 0;

    for (int k = 0; k < n_samples; ++k) {
        try {
            auto x = m.sample(rng);
            auto y = m.sample(rng);
            auto z = m.sample(rng);

            report.record("S1", m.distance(m.product(x, x), x));
            report.record("S2", m.distance(m.product(x, m.product(x, y)), y));
            report.record("S3", m.distance(m.product(x, m.product(y, z)),
                                           m.product(m.product(x, y), m.product(x, z))));

            if (m.distance(m.product(x, y), y) <= tol) ++fixed_points;
            ++fixed_point_trials;

            if (k % 8 == 0) {
                auto e = m.sample(rng);
                const int p = rng.uniform_int(-4, 4);
                const int q = rng.uniform_int(-4, 4);
                report.record("pow1",
                              m.distance(m.product(power(m, e, x, p), power(m, e, x, q)),
                                         power(m, e, x, 2 * p - q)));
            }
        } catch (const DegeneratePoint&) {
            ++report.precondition_violations;
        }
    }
    if (fixed_point_trials > 0)
        report.notes.push_back("fixed points of sampled s_x: " + std::to_string(fixed_points) +
                               "/" + std::to_string(fixed_point_trials) +
                               " (isolatedness not certified)");
    return report;
}

/// Residuals of (D1)-(D3) and the compatibility dilate(.,-1,.) == reflect.
template <DilationInstance M>
AxiomReport verify_dilation_axioms(const M& m, int n_samples, double tol, std::uint64_t seed) {
    AxiomReport report;
    report.instance = m.name();
    report.tol = tol;
    Rng rng(seed);

    const auto draw_r = [&rng]() {
        double r = std::exp(rng.uniform(-1.2, 1.2));
        return rng.coin() ? r : -r;
    };

    for (int k = 0; k < n_samples; ++k) {
        try {
            auto x = m.sample(rng);
            auto y = m.sample(rng);
            auto z = m.sample(rng);
            const double r = draw_r();
            const double s = draw_r();

            report.record("D1", m.distance(m.dilate(x, r, x), x));
            report.record("D2", m.distance(m.dilate(x, r, m.dilate(x, s, y)),
                                           m.dilate(x, r * s, y)));
            report.record("D3", m.distance(m.dilate(x, r, m.dilate(y, s, z)),
                                           m.dilate(m.dilate(x, r, y), s, m.dilate(x, r, z))));
            report.record("compat(-1)", m.distance(m.dilate(x, -1.0, y), m.product(x, y)));
        } catch (const DegeneratePoint&) {
            ++report.precondition_violations;
        }
    }
    return report;
}

/// Morphism law gamma(2t - s) = gamma(t) • gamma(s) over all pairs from ts.
/// When lambda is supplied (and the instance has dilations), also checks the
/// dilation-compatibility criterion gamma(r^lambda s) = gamma(0) •_r gamma(s).
template <ReflectionInstance M>
AxiomReport verify_geodesic(const M& m, const Geodesic<typename M::Point>& gamma,
                            const std::vector<double>& ts, double tol,
                            std::optional<double> lambda = std::nullopt,
                            const std::vector<double>& rs = {0.5, 2.0}) {
    AxiomReport report;
    report.instance = m.name() + "/geodesic";
    report.tol = tol;
    for (double t : ts)
        for (double s : ts)
            report.record("morphism", m.distance(gamma(2.0 * t - s),
                                                 m.product(gamma(t), gamma(s))));
    if (lambda) {
        if constexpr (DilationInstance<M>) {
            for (double s : ts)
                for (double r : rs)
                    report.record("dilation-criterion(c)",
                                  m.distance(gamma(std::pow(r, *lambda) * s),
                                             m.dilate(gamma(0.0), r, gamma(s))));
        } else {
            throw NoDilation("dilation criterion requested for an instance without dilations");
        }
    }
    return report;
}

} // namespace stand
