#include "stand/affine_flow.hpp"

#include <unsupported/Eigen/FFT>

namespace stand {

namespace {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

} // namespace

GridSpec::GridSpec(double l, int n, double omega_max, double shift_budget)
    : half_width(l), size(n), band(omega_max), max_shift(shift_budget) {
    if (!is_power_of_two(n)) throw ConfigError("grid size must be a power of two");
    if (l <= 0.0 || omega_max <= 0.0) throw ConfigError("grid parameters must be positive");
    if (std::exp(M_PI * omega_max) > 1e12)
        throw SpectralOverflow("Delta^{1/2} multiplier exceeds 1e12 on the configured band");
}

GridFunction::GridFunction(GridSpec spec, Vector values)
    : spec_(spec), values_(std::move(values)) {
    if (values_.size() != spec_.size) throw DimensionMismatch("grid size mismatch");
}

Vector grid_fft(const GridFunction& f) {
    Eigen::FFT<double> fft;
    std::vector<Complex> in(f.values().data(), f.values().data() + f.size());
    std::vector<Complex> out(f.size());
    fft.fwd(out, in);
    return Eigen::Map<Vector>(out.data(), f.size());
}

GridFunction grid_ifft(const GridSpec& spec, const Vector& coeffs) {
    Eigen::FFT<double> fft;
    std::vector<Complex> in(coeffs.data(), coeffs.data() + coeffs.size());
    std::vector<Complex> out(coeffs.size());
    fft.inv(out, in);
    return GridFunction(spec, Eigen::Map<Vector>(out.data(), coeffs.size()));
}

GridFunction translate_u(double b, const GridFunction& f) {
    Vector v = f.values();
    const GridSpec& spec = f.spec();
    for (int i = 0; i < spec.size; ++i)
        v(i) *= std::exp(Complex(0.0, b * std::exp(spec.theta(i))));
    return GridFunction(spec, v);
}

GridFunction dilate_w(double s, const GridFunction& f) {
    const GridSpec& spec = f.spec();
    if (std::abs(s) > spec.max_shift)
        throw ShiftOutOfRange("shift " + std::to_string(s) + " exceeds budget " +
                              std::to_string(spec.max_shift));
    if (s == 0.0) return f;
    Vector coeffs = grid_fft(f);
    for (int k = 0; k < spec.size; ++k)
        coeffs(k) *= std::exp(Complex(0.0, spec.omega(k) * s));
    return grid_ifft(spec, coeffs);
}

GridFunction conjugate_j(const GridFunction& f) {
    return GridFunction(f.spec(), f.values().conjugate());
}

GridFunction energy_generator(const GridFunction& f) {
    Vector v = f.values();
    for (int i = 0; i < f.spec().size; ++i) v(i) *= std::exp(f.spec().theta(i));
    return GridFunction(f.spec(), v);
}

GridFunction affine_apply(const AffElement& el, const GridFunction& f) {
    GridFunction out = el.odd ? conjugate_j(f) : f;
    out = dilate_w(el.s, out);
    return translate_u(el.b, out);
}

GridFunction tomita_apply(const GridFunction& f) {
    const GridSpec& spec = f.spec();
    if (std::exp(M_PI * spec.band) > 1e12)
        throw SpectralOverflow("multiplier exceeds 1e12 on the band");
    Vector coeffs = grid_fft(f);
    for (int k = 0; k < spec.size; ++k) {
        const double w = spec.omega(k);
        coeffs(k) = std::abs(w) <= spec.band ? coeffs(k) * std::exp(-M_PI * w) : 0.0;
    }
    return conjugate_j(grid_ifft(spec, coeffs));
}

GridFunction project_v(const GridFunction& f) {
    const GridSpec& spec = f.spec();
    const int n = spec.size;
    Vector coeffs = grid_fft(f);
    Vector proj = Vector::Zero(n);

    // bin 0 (omega = 0): G real.
    proj(0) = Complex(coeffs(0).real(), 0.0);

    for (int k = 1; k < n / 2; ++k) {
        const double w = spec.omega(k);
        if (w > spec.band) continue;  // out-of-band bins project to zero
        const double wp = std::exp(M_PI * w / 2.0);   // weight at +omega
        const double wm = 1.0 / wp;                   // weight at -omega
        const Complex g = (wp * coeffs(k) + wm * std::conj(coeffs(n - k))) / (wp * wp + wm * wm);
        proj(k) = wp * g;
        proj(n - k) = wm * std::conj(g);
    }
    // The Nyquist bin (k = n/2) lies far outside any admissible band and
    // projects to zero.
    return grid_ifft(spec, proj);
}

double dist_to_v(const GridFunction& f) { return (f - project_v(f)).norm(); }

GridFunction make_v_vector(const GridSpec& spec, double width, double center) {
    const int n = spec.size;
    Vector coeffs = Vector::Zero(n);
    for (int k = 0; k < n; ++k) {
        const double w = spec.omega(k);
        if (std::abs(w) > spec.band) continue;
        const Complex g = std::exp(Complex(-0.5 * width * width * w * w, -center * w));
        coeffs(k) = std::exp(M_PI * w / 2.0) * g;
    }
    GridFunction f = grid_ifft(spec, coeffs);
    const double nrm = f.norm();
    if (nrm < 1e-300) throw ConfigError("degenerate test vector");
    f *= 1.0 / nrm;
    return f;
}

MonotonicityReport monotonicity_experiment(const std::vector<double>& bs,
                                           const std::vector<GridFunction>& vs, double tol) {
    MonotonicityReport report;
    report.tol = tol;
    if (vs.empty()) throw ConfigError("monotonicity experiment needs test vectors");

    for (const GridFunction& v : vs)
        if (dist_to_v(v) > tol)
            throw ConfigError("test vector is not in V at the requested tolerance");

    bool pass = true;
    for (double b : bs) {
        MonotonicityPoint pt;
        pt.b = b;
        for (const GridFunction& v : vs)
            pt.max_distance = std::max(pt.max_distance, dist_to_v(translate_u(b, v)));
        pt.inside = pt.max_distance <= tol;
        const bool expect_inside = kPositiveTranslationsCompress ? b >= 0.0 : b <= 0.0;
        if (expect_inside) {
            pass = pass && pt.inside;
        } else {
            pass = pass && pt.max_distance >= 100.0 * tol;
            report.orientation_matches = report.orientation_matches && !pt.inside;
        }
        report.points.push_back(pt);
    }

    // alpha from the Borchers commutation, via the shared fitting routine.
    GridDilationSystem sys(vs.front().spec());
    Rng rng(0xa1fa);
    report.fitted_alpha = dilation_rep_from_geodesic(sys, 1e-6, rng).alpha;
    report.pass = pass && std::abs(report.fitted_alpha - 1.0) <= 1e-6;
    return report;
}

} // namespace stand
