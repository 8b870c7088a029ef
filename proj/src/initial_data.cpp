#include "ww/initial_data.hpp"

#include <cmath>

#include "ww/spectral.hpp"

namespace ww {

double bump(double y) {
    if (std::abs(y) >= 1.0) return 0.0;
    return std::exp(1.0 - 1.0 / (1.0 - y * y));
}

namespace {

Field random_spectrum(const GridSpec& g, Rng& rng, double k_lo, double k_hi, bool negative_only) {
    std::normal_distribution<double> nd(0.0, 1.0);
    Field f(g);
    const double mid = 0.5 * (std::log(k_lo) + std::log(k_hi));
    const double half = 0.5 * (std::log(k_hi) - std::log(k_lo));
    for (int j = -g.N / 2; j < g.N / 2; ++j) {
        const double re = nd(rng), im = nd(rng);
        if (j == 0 || (negative_only && j > 0)) continue;
        const double k = std::abs(g.wavenumber(j));
        if (k < k_lo || k > k_hi) continue;
        f.coef(j) = bump((std::log(k) - mid) / half) * cplx(re, im);
    }
    return f.dealiased();
}

}  // namespace

HoloField random_holo(const GridSpec& g, Rng& rng, double k_lo, double k_hi, double amplitude) {
    Field f = random_spectrum(g, rng, k_lo, k_hi, true);
    const double m = f.linf();
    if (m > 0.0) f *= amplitude / m;
    return HoloField::assume(std::move(f));
}

Field random_field(const GridSpec& g, Rng& rng, double k_lo, double k_hi, double amplitude) {
    Field f = random_spectrum(g, rng, k_lo, k_hi, false);
    const double m = f.linf();
    if (m > 0.0) f *= amplitude / m;
    return f;
}

std::pair<HoloField, HoloField> packet_data(const GridSpec& g, const PacketData& p) {
    const double mid = 0.5 * (std::log(p.xi_lo) + std::log(p.xi_hi));
    const double half = 0.5 * (std::log(p.xi_hi) - std::log(p.xi_lo));
    Field W = Field::from_spectrum(g, [&](double k) -> cplx {
        if (k >= 0.0) return 0.0;
        return bump((std::log(-k) - mid) / half) * std::exp(-I * k * p.center);
    });
    W = W.dealiased();
    if (p.eps == 0.0) return {HoloField(g), HoloField(g)};
    W *= p.eps / W.dx().linf();
    Field Q = frac_derivative(W, -0.5);
    if (!p.right_moving) Q *= -1.0;
    return {project_neg(W), project_neg(Q)};
}

std::pair<HoloField, HoloField> single_mode(const GridSpec& g, int j, double amplitude) {
    if (j >= 0) throw Error(ErrorCode::OutOfBand, "single_mode needs a negative wavenumber");
    HoloField W(g), Q(g);
    W.coef(j) = amplitude;
    Q.coef(j) = amplitude / std::sqrt(std::abs(g.wavenumber(j)));
    return {W, Q};
}

}  // namespace ww
