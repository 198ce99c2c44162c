#include "mflab/bump.hpp"

#include <cmath>

namespace mflab {

double smooth_step(double u) {
    if (u <= 0.0) return 0.0;
    if (u >= 1.0) return 1.0;
    const double b = std::exp(-1.0 / u);
    const double c = std::exp(-1.0 / (1.0 - u));
    return b / (b + c);
}

double bump_profile(double t) { return smooth_step(2.0 - 2.0 * std::abs(t)); }

BumpSpec BumpSpec::base_bump(int n, double scale) {
    BumpSpec b;
    b.kind = BumpKind::base;
    b.n = n;
    b.scale.assign(std::size_t(n), scale);
    b.validate();
    return b;
}

BumpSpec BumpSpec::tilde_bump(int n, double scale) {
    BumpSpec b = base_bump(n, scale);
    b.kind = BumpKind::tilde;
    return b;
}

BumpSpec BumpSpec::annulus_bump(int n) {
    BumpSpec b = base_bump(n, 1.0);
    b.kind = BumpKind::annulus;
    return b;
}

BumpSpec BumpSpec::chi_s(int kappa, int s, int n) {
    if (kappa < 1 || s < 1) throw parameter_error("chi_s: kappa and s must be >= 1");
    return base_bump(n, std::exp2(double(-kappa) * double(s)));
}

BumpSpec BumpSpec::chi_s_tilde(int kappa, int s, int n) {
    BumpSpec b = chi_s(kappa, s, n);
    b.kind = BumpKind::tilde;
    return b;
}

double BumpSpec::domain_measure() const {
    double m = 1.0;
    for (double a : scale) m *= a;
    return m;
}

double BumpSpec::plateau_half_width() const {
    if (kind == BumpKind::annulus) return 0.0;
    double w = scale[0];
    for (double a : scale) w = std::min(w, a);
    return kind == BumpKind::tilde ? w : 0.5 * w;
}

void BumpSpec::validate() const {
    if (n < 1 || n > 3) throw parameter_error("BumpSpec: dimension must be 1..3");
    if (std::int64_t(scale.size()) != n) throw dimension_error("BumpSpec: scale size != n");
    for (double a : scale)
        if (!(a > 0.0)) throw parameter_error("BumpSpec: scale entries must be positive");
}

namespace {

double tensor_bump(const std::vector<double>& scale, const std::vector<double>& xi, double extra) {
    double v = 1.0;
    for (std::size_t i = 0; i < xi.size(); ++i) {
        v *= bump_profile(xi[i] * extra / scale[i]);
        if (v == 0.0) return 0.0;
    }
    return v;
}

}  // namespace

double bump_value(const BumpSpec& b, const std::vector<double>& xi) {
    if (std::int64_t(xi.size()) != b.n) throw dimension_error("bump_value: point dimension != n");
    switch (b.kind) {
        case BumpKind::base:
            return tensor_bump(b.scale, xi, 1.0);
        case BumpKind::tilde:
            return tensor_bump(b.scale, xi, 0.5);
        case BumpKind::annulus:
            return tensor_bump(b.scale, xi, 1.0) - tensor_bump(b.scale, xi, 2.0);
    }
    return 0.0;
}

Multiplier bump_multiplier(const BumpSpec& b, const GridSpec& spec) {
    if (b.n != spec.n) throw dimension_error("bump_multiplier: dimensions differ");
    Multiplier m(spec);
    std::vector<std::int64_t> coords(std::size_t(spec.n));
    std::vector<double> xi(std::size_t(spec.n));
    for (std::int64_t idx = 0; idx < spec.size(); ++idx) {
        spec.index_to_coords(idx, coords.data());
        for (int i = 0; i < spec.n; ++i) xi[std::size_t(i)] = spec.freq(coords[std::size_t(i)]);
        m.values[std::size_t(idx)] = bump_value(b, xi);
    }
    return m;
}

GridSignal phi_from_bump(const BumpSpec& b, const GridSpec& spec) {
    const double hw = b.plateau_half_width();
    if (double(spec.N) * hw < 4.0)
        throw resolution_error("phi_from_bump: grid does not resolve the bump (N * plateau half-width < 4)");
    return inverse_dft(bump_multiplier(b, spec));
}

double lp_norm(const GridSignal& f, double p) {
    if (p <= 0.0) {  // l^infinity
        double m = 0.0;
        for (const auto& z : f.values) m = std::max(m, std::abs(z));
        return m;
    }
    double acc = 0.0;
    for (const auto& z : f.values) acc += std::pow(std::abs(z), p);
    return std::pow(acc, 1.0 / p);
}

}  // namespace mflab
